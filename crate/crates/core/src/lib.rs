//! Desk-scale constructions around well- and better-quasi-orders.
//!
//! Infinite objects (subsets of ω, fronts, super-sequences, increasing
//! injections) are represented by rules; every universal check runs over an
//! explicit finite window and reports that window.

pub mod fronts;
pub mod hset;
pub mod order;
pub mod ordinal;
pub mod ramsey;
pub mod sequences;
pub mod shifts;

pub use fronts::{Front, FrontDescriptor, FrontElement, FrontError, InfSet, NodeClass, Schema};
pub use hset::{game_leq, GameError, HSet, Winner};
pub use order::{FiniteQO, OrderError, QuasiOrder, Rado, RadoPair};
pub use ordinal::OrdinalCNF;
pub use ramsey::{Coloring, RamseyError};
pub use sequences::{SeqError, SuperSeq, Value};
pub use shifts::{IncInj, Natural, ShiftError};

/// Increasing injections over machine words.
pub type IncInjU64 = shifts::IncInj<u64>;

/// Increasing injections over arbitrary-precision naturals, for iterated
/// maps such as `σ(f)` whose values outgrow `u64`.
pub type IncInjBig = shifts::IncInj<num_bigint::BigUint>;
