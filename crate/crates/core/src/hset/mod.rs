//! Hereditarily finite sets over the atoms of a quasi-order, the game that
//! lifts the order to them, and the constructions built from its strategies.

mod game;
mod sexpr;
mod stringing;
mod tilde;

pub use game::{
    game_leq, game_leq_oracle, game_play, GameResult, GameSolver, PlayerI, PlayerII, Responder,
    Round, StrategyTable, Transcript, Winner,
};
pub use sexpr::{parse_sexpr, to_sexpr};
pub use stringing::{string_strategies, Stringing, StringingEval};
pub use tilde::{tilde_build, Tilde};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::sequences::SeqError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GameError {
    #[error("atom {0} does not belong to the base quasi-order")]
    MixedBaseQO(String),
    #[error("a set must have at least one element")]
    EmptyNode,
    #[error("illegal move {chosen} at position {position}")]
    IllegalMove { position: String, chosen: String },
    #[error("strategy has no move at position {0}")]
    MissingMove(String),
    #[error("entries {0} and {1} are not a bad pair: player II wins")]
    NotBad(usize, usize),
    #[error("the chained plays need {needed} indices, only {supplied} supplied")]
    InsufficientPrefix { needed: usize, supplied: usize },
    #[error("index tuple must be strictly increasing and below {0}")]
    BadIndexTuple(usize),
    #[error("no extension of node {0:?} found")]
    EmptyTruncation(Vec<u64>),
    #[error("s-expression: {0}")]
    Sexpr(String),
    #[error(transparent)]
    Seq(#[from] SeqError),
}

/// An element of `V*(Q)`: an atom of `Q`, or a nonempty finite set of such
/// elements.
///
/// Children are kept sorted (by the derived structural order) and free of
/// duplicates, so equal sets are equal values.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HSet<T> {
    Atom(T),
    Node(Vec<HSet<T>>),
}

impl<T: Ord> HSet<T> {
    pub fn atom(t: T) -> Self {
        HSet::Atom(t)
    }

    pub fn node(children: impl IntoIterator<Item = HSet<T>>) -> Result<Self, GameError> {
        let mut children: Vec<_> = children.into_iter().collect();
        if children.is_empty() {
            return Err(GameError::EmptyNode);
        }
        children.sort();
        children.dedup();
        Ok(HSet::Node(children))
    }

    /// `{a_1, …, a_k}` as a set of atoms.
    pub fn of_atoms(atoms: impl IntoIterator<Item = T>) -> Result<Self, GameError> {
        Self::node(atoms.into_iter().map(HSet::Atom))
    }

    pub fn is_atom(&self) -> bool {
        matches!(self, HSet::Atom(_))
    }

    pub fn children(&self) -> &[HSet<T>] {
        match self {
            HSet::Atom(_) => &[],
            HSet::Node(c) => c,
        }
    }

    /// 0 for atoms.
    pub fn depth(&self) -> usize {
        match self {
            HSet::Atom(_) => 0,
            HSet::Node(c) => 1 + c.iter().map(HSet::depth).max().unwrap_or(0),
        }
    }

    /// The legal moves from this set: its elements, or itself for an atom.
    pub fn moves(&self) -> Vec<&HSet<T>> {
        match self {
            HSet::Atom(_) => vec![self],
            HSet::Node(c) => c.iter().collect(),
        }
    }

    pub fn atoms(&self) -> Vec<&T> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a T>) {
        match self {
            HSet::Atom(t) => out.push(t),
            HSet::Node(c) => c.iter().for_each(|x| x.collect_atoms(out)),
        }
    }
}

/// `supp(q) = {q}` and `supp(X) = ⋃ {supp(x) | x ∈ X}`.
pub fn supp<T: Ord + Clone>(x: &HSet<T>) -> BTreeSet<T> {
    x.atoms().into_iter().cloned().collect()
}

impl<T: fmt::Display + Ord> fmt::Display for HSet<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HSet::Atom(t) => write!(f, "{t}"),
            HSet::Node(c) => {
                write!(f, "[")?;
                for (i, x) in c.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{x}")?;
                }
                write!(f, "]")
            }
        }
    }
}
