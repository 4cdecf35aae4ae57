//! Fronts on infinite subsets of ω, their trees and ranks, and the shift
//! relation `◁`.

mod descriptor;
mod infset;
mod schema;
mod shift_rel;
mod tree;
mod verify;

pub use descriptor::FrontDescriptor;
pub use infset::{is_increasing, InfSet};
pub use schema::{Front, FrontElement, Located, NodeClass, Schema, SeqSchema, Step};
pub use shift_rel::shift_rel;
pub use tree::{tree_of_front, FrontTree, TreeNode};
pub use verify::{front_verify, VerifyReport};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrontError {
    #[error("invalid infinite set: {0}")]
    BadInfSet(String),
    #[error("{0} is not in the base")]
    NotInBase(u64),
    #[error("no member found within the schema bound {bound} along {prefix:?}")]
    NoMemberWithinBound { bound: usize, prefix: Vec<u64> },
    #[error("the trivial front has no rays")]
    TrivialHasNoRays,
    #[error("{0} is not in the base, so the set is not a subset of it")]
    NotSubsetOfBase(u64),
    #[error("rank inconsistent: {0}")]
    RankInconsistent(String),
    #[error("rank is not available for the {0} schema")]
    NotRankable(String),
    #[error("{0:?} is not strictly increasing")]
    NotIncreasing(Vec<u64>),
    #[error("invalid front descriptor: {0}")]
    BadDescriptor(String),
}
