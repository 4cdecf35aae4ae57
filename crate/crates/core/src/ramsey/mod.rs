//! Finite Ramsey searches, windowed Nash-Williams extraction, the shift
//! dichotomy, Laver's embedding of Rado's order, and the conversions between
//! bad powerset sequences and bad sequences of sequences.

mod laver;
mod nw;
mod search;

pub use laver::{
    f2_to_powerset_badseq, laver_embed, powerset_badseq_to_f2, LaverReport, PairsFromSets,
    PowersetBadSeq, PowersetWitness, LAVER_MIN_STAGE,
};
pub use nw::{
    dichotomy_along, dichotomy_extract, finite_ramsey, nw_extract, DichotomyResult, NwResult,
    RamseyResult, Side,
};
pub use search::SEARCH_BUDGET;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::fronts::{Front, FrontElement, FrontError};
use crate::sequences::SeqError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RamseyError {
    #[error("no homogeneous set of size {target} inside the window {window}")]
    WindowExhausted { window: u64, target: usize },
    #[error("color {color} of {member:?} is not below {colors}")]
    ColorOutOfRange {
        member: FrontElement,
        color: usize,
        colors: usize,
    },
    #[error("sequence is good on the window: {0}")]
    NotBadOnWindow(String),
    #[error("{stage} stage found a homogeneous set of size {found}, needs {needed}")]
    RamseyStageFailed {
        stage: String,
        found: usize,
        needed: usize,
    },
    #[error("embedding fails on the quadruple {0:?}")]
    EmbeddingCheckFailed(Vec<u64>),
    #[error("P_{0} is dominated by P_{1}")]
    NotBadPowersetSeq(usize, usize),
    #[error("law m < n < l fails at ({0}, {1}, {2})")]
    LawViolated(usize, usize, usize),
    #[error("expected a sequence on pairs, found front {0}")]
    NotPairs(String),
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error(transparent)]
    Front(#[from] FrontError),
}

type ColorFn = Arc<dyn Fn(&[u64]) -> usize + Send + Sync>;

/// A finite coloring `c : F → r` of the members of a front.
#[derive(Clone)]
pub struct Coloring {
    front: Front,
    colors: usize,
    rule: ColorFn,
    label: String,
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Coloring({} into {} on {})",
            self.label, self.colors, self.front
        )
    }
}

impl Coloring {
    pub fn new(
        front: Front,
        colors: usize,
        label: impl Into<String>,
        rule: impl Fn(&[u64]) -> usize + Send + Sync + 'static,
    ) -> Self {
        Coloring {
            front,
            colors,
            rule: Arc::new(rule),
            label: label.into(),
        }
    }

    /// A table of colors; members missing from it get color 0.
    pub fn from_table(front: Front, colors: usize, table: BTreeMap<FrontElement, usize>) -> Self {
        Coloring::new(front, colors, "table", move |s| {
            table.get(s).copied().unwrap_or(0)
        })
    }

    /// The built-in rules: `sum-mod:k`, `size-mod:k`, `min-mod:k`, `max-mod:k`.
    pub fn named(front: Front, rule: &str) -> Option<Self> {
        let (name, k) = rule.split_once(':')?;
        let k: u64 = k.parse().ok().filter(|&k| k > 0)?;
        let f: fn(&[u64]) -> u64 = match name {
            "sum-mod" => |s| s.iter().sum(),
            "size-mod" => |s| s.len() as u64,
            "min-mod" => |s| s.first().copied().unwrap_or(0),
            "max-mod" => |s| s.last().copied().unwrap_or(0),
            _ => return None,
        };
        Some(Coloring::new(front, k as usize, rule, move |s| {
            (f(s) % k) as usize
        }))
    }

    pub fn front(&self) -> &Front {
        &self.front
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn color(&self, s: &[u64]) -> Result<usize, RamseyError> {
        let c = (self.rule)(s);
        if c >= self.colors {
            return Err(RamseyError::ColorOutOfRange {
                member: s.to_vec(),
                color: c,
                colors: self.colors,
            });
        }
        Ok(c)
    }

    /// Every member with entries below `window`, with its color.
    pub fn colored_members(&self, window: u64) -> Result<Vec<(FrontElement, usize)>, RamseyError> {
        self.front
            .members_below(window)
            .into_iter()
            .map(|s| Ok((s.clone(), self.color(&s)?)))
            .collect()
    }
}
