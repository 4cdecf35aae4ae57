//! Quasi-orders, downsets, the domination order and sequence diagnostics.

mod diagnose;
mod downset;
mod qo;

pub use diagnose::{
    rado_antichain_witness, regularity_check, sequence_diagnose, RadoWitness, RegularityReport,
    SeqWindow, SequenceReport, REGULARITY_SURROGATE,
};
pub use downset::{
    domination_leq, downset_closure, downset_limits, rado_trick_extract, Downset, DownsetLimits,
};
pub use qo::{
    antichain, chain, derived_relations, product_qo, rado_cmp, rado_leq, sum_along_poset, CodedQO,
    Element, FiniteQO, OmegaEq, OmegaLeq, Pair, QuasiOrder, Rado, RadoPair, Relations, Tagged,
    WindowLawReport,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("relation is not reflexive at {0}")]
    MissingReflexive(String),
    #[error("relation is not transitive: {0} <= {1} and {1} <= {2} but not {0} <= {2}")]
    MissingTransitive(String, String, String),
    #[error("element {0} listed twice")]
    DuplicateElement(String),
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("{0} is not in the carrier")]
    NotInCarrier(String),
    #[error("{0} is not a two-element set written in increasing order")]
    NotAPair(String),
    #[error("not a partial order: {0} and {1} are equivalent")]
    NotAPartialOrder(String, String),
    #[error("no summand given for {0}")]
    MissingSummand(String),
    #[error("downsets are taken over different quasi-orders")]
    MixedBaseQO,
    #[error("window too small: needed {needed}, found {found}")]
    WindowTooSmall { needed: usize, found: usize },
    #[error("indices must satisfy m < n, got ({0}, {1})")]
    BadIndices(u64, u64),
}
