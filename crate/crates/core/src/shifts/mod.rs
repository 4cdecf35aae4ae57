//! The monoid `ℰ` of increasing injections `ω → ω`, the generalised shifts
//! `f ↦ f ∘ g` and the maps `ρ`, `σ` relating them to the plain shift.
//!
//! Everything is generic over the scalar type: `u64` for speed, or
//! [`num_bigint::BigUint`] when iterated maps outgrow machine words.

mod maps;
mod perfect;

pub use maps::{critical_point, orbit_map, rho, sigma, sigma_chains, ChainReport};
pub use perfect::{g_perfect_extract, GPerfectReport};

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::sync::Arc;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, FromPrimitive, ToPrimitive, Unsigned};
use thiserror::Error;

use crate::fronts::{FrontError, InfSet};
use crate::ramsey::RamseyError;
use crate::sequences::SeqError;

/// Scalars usable as natural numbers.
pub trait Natural:
    Unsigned
    + CheckedAdd
    + CheckedSub
    + CheckedMul
    + FromPrimitive
    + ToPrimitive
    + Clone
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
}

impl<T> Natural for T where
    T: Unsigned
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + FromPrimitive
        + ToPrimitive
        + Clone
        + Ord
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("g(k) = k for every k < {0}: looks like the identity")]
    LooksLikeIdentity(u64),
    #[error("{label} is not increasing at {at}")]
    NotIncreasing { label: String, at: String },
    #[error("arithmetic overflow evaluating {0}")]
    Overflow(String),
    #[error("bad injection descriptor {0:?}")]
    BadDescriptor(String),
    #[error("inequality chain broken at boundary {boundary}: {detail}")]
    ChainBroken { boundary: String, detail: String },
    #[error("stage {stage} ({map}) landed on the complement side with Z = {z:?}")]
    NotBQOEvidence {
        stage: usize,
        map: String,
        z: Vec<u64>,
    },
    #[error("restriction is not perfect along {0}")]
    NotPerfect(String),
    #[error(transparent)]
    Ramsey(#[from] RamseyError),
    #[error(transparent)]
    Seq(#[from] SeqError),
    #[error(transparent)]
    Front(#[from] FrontError),
}

fn nat<N: Natural>(x: u64) -> N {
    N::from_u64(x).expect("every natural scalar holds a u64")
}

type Evaluator<N> = Arc<dyn Fn(&N) -> Result<N, ShiftError> + Send + Sync>;

/// An increasing injection, given by an evaluator and a label. Equality is
/// only ever checked pointwise on a window, see [`IncInj::first_disagreement`].
pub struct IncInj<N> {
    eval: Evaluator<N>,
    label: String,
}

impl<N> Clone for IncInj<N> {
    fn clone(&self) -> Self {
        IncInj {
            eval: self.eval.clone(),
            label: self.label.clone(),
        }
    }
}

impl<N> Debug for IncInj<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IncInj({})", self.label)
    }
}

impl<N> Display for IncInj<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

impl<N: Natural> IncInj<N> {
    pub fn from_fn(
        label: impl Into<String>,
        f: impl Fn(&N) -> Result<N, ShiftError> + Send + Sync + 'static,
    ) -> Self {
        IncInj {
            eval: Arc::new(f),
            label: label.into(),
        }
    }

    pub fn identity() -> Self {
        IncInj::from_fn("id", |n: &N| Ok(n.clone()))
    }

    pub fn successor() -> Self {
        IncInj::from_fn("succ", |n: &N| {
            n.checked_add(&N::one())
                .ok_or_else(|| ShiftError::Overflow("succ".into()))
        })
    }

    /// `n ↦ a·n + b` with `a ≥ 1`.
    pub fn affine(a: u64, b: u64) -> Result<Self, ShiftError> {
        if a == 0 {
            return Err(ShiftError::BadDescriptor(format!("affine:{a},{b}")));
        }
        let label = format!("affine:{a},{b}");
        let (a, b): (N, N) = (nat(a), nat(b));
        let l = label.clone();
        Ok(IncInj::from_fn(label, move |n: &N| {
            a.checked_mul(n)
                .and_then(|x| x.checked_add(&b))
                .ok_or_else(|| ShiftError::Overflow(l.clone()))
        }))
    }

    /// `table[n]` for `n` inside the table, `a·n + b` after it.
    pub fn table(table: Vec<u64>, a: u64, b: u64) -> Result<Self, ShiftError> {
        let label = format!("table:{table:?}+tail:affine:{a},{b}").replace(' ', "");
        let tail =
            IncInj::<N>::affine(a, b).map_err(|_| ShiftError::BadDescriptor(label.clone()))?;
        let next_tail = a
            .checked_mul(table.len() as u64)
            .and_then(|x| x.checked_add(b));
        let increasing = table.windows(2).all(|w| w[0] < w[1])
            && table
                .last()
                .is_none_or(|&last| next_tail.is_some_and(|t| last < t));
        if !increasing {
            return Err(ShiftError::NotIncreasing {
                label,
                at: "table boundary".into(),
            });
        }
        let values: Vec<N> = table.into_iter().map(nat).collect();
        Ok(IncInj::from_fn(label, move |n: &N| {
            match n.to_usize().and_then(|i| values.get(i)) {
                Some(v) => Ok(v.clone()),
                None => tail.eval(n),
            }
        }))
    }

    /// `f_X`, the increasing enumeration of `X`.
    pub fn enumerate(x: InfSet) -> Self {
        let label = format!("enum-of-set:{x}");
        let l = label.clone();
        IncInj::from_fn(label, move |n: &N| {
            let i = n
                .to_usize()
                .ok_or_else(|| ShiftError::Overflow(l.clone()))?;
            Ok(nat(x.nth(i)))
        })
    }

    /// Parses `id`, `succ`, `affine:a,b`, `table:[..]+tail:affine:a,b` and
    /// `enum-of-set:<set>`.
    pub fn parse(text: &str) -> Result<Self, ShiftError> {
        let bad = || ShiftError::BadDescriptor(text.to_string());
        let text = text.trim();
        let affine_args = |s: &str| -> Result<(u64, u64), ShiftError> {
            let (a, b) = s.split_once(',').ok_or_else(bad)?;
            Ok((
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ))
        };
        match text {
            "id" => Ok(IncInj::identity()),
            "succ" => Ok(IncInj::successor()),
            _ if text.starts_with("affine:") => {
                let (a, b) = affine_args(&text["affine:".len()..])?;
                IncInj::affine(a, b)
            }
            _ if text.starts_with("table:") => {
                let rest = &text["table:".len()..];
                let (list, tail) = rest.split_once("+tail:affine:").ok_or_else(bad)?;
                let inner = list
                    .trim()
                    .strip_prefix('[')
                    .and_then(|l| l.strip_suffix(']'))
                    .ok_or_else(bad)?;
                let table = inner
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                let (a, b) = affine_args(tail)?;
                IncInj::table(table, a, b)
            }
            _ if text.starts_with("enum-of-set:") => {
                let set = InfSet::parse(&text["enum-of-set:".len()..]).map_err(|_| bad())?;
                let mut f = IncInj::enumerate(set);
                f.label = text.to_string();
                Ok(f)
            }
            _ => Err(bad()),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn eval(&self, n: &N) -> Result<N, ShiftError> {
        (self.eval)(n)
    }

    pub fn at(&self, n: u64) -> Result<N, ShiftError> {
        self.eval(&nat(n))
    }

    pub fn prefix(&self, len: u64) -> Result<Vec<N>, ShiftError> {
        (0..len).map(|n| self.at(n)).collect()
    }

    /// `f^k(x)`.
    pub fn iterate(&self, k: &N, x: &N) -> Result<N, ShiftError> {
        let mut k = k.clone();
        let mut x = x.clone();
        while !k.is_zero() {
            x = self.eval(&x)?;
            k = k - N::one();
        }
        Ok(x)
    }

    /// Checks `f(n) < f(n+1)` for `n + 1 < window`.
    pub fn check_increasing(&self, window: u64) -> Result<(), ShiftError> {
        let values = self.prefix(window)?;
        match values.windows(2).position(|w| w[0] >= w[1]) {
            Some(i) => Err(ShiftError::NotIncreasing {
                label: self.label.clone(),
                at: i.to_string(),
            }),
            None => Ok(()),
        }
    }

    /// Least `n < window` with `self(n) ≠ other(n)`.
    pub fn first_disagreement(
        &self,
        other: &IncInj<N>,
        window: u64,
    ) -> Result<Option<u64>, ShiftError> {
        for n in 0..window {
            if self.at(n)? != other.at(n)? {
                return Ok(Some(n));
            }
        }
        Ok(None)
    }

    /// The range as a subset of ω (values must fit in `u64`).
    pub fn range(&self) -> InfSet {
        let f = self.clone();
        InfSet::custom(format!("range({})", self.label), move |i| {
            f.at(i as u64)
                .ok()
                .and_then(|v| v.to_u64())
                .expect("range values fit in u64")
        })
    }
}

/// `f ∘ g`.
pub fn compose<N: Natural>(f: &IncInj<N>, g: &IncInj<N>) -> IncInj<N> {
    let (f2, g2) = (f.clone(), g.clone());
    IncInj::from_fn(format!("({f})∘({g})"), move |n| f2.eval(&g2.eval(n)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    #[test]
    fn compose_examples() {
        let id = IncInj::<u64>::identity();
        let g = IncInj::<u64>::affine(3, 1).unwrap();
        assert_eq!(compose(&id, &g).first_disagreement(&g, 32).unwrap(), None);
        let s = IncInj::<u64>::successor();
        assert_eq!(compose(&s, &s).prefix(4).unwrap(), vec![2, 3, 4, 5]);
        let evens = IncInj::<u64>::enumerate(InfSet::evens());
        let shifted = IncInj::<u64>::enumerate(InfSet::evens().shift());
        assert_eq!(
            compose(&evens, &s)
                .first_disagreement(&shifted, 32)
                .unwrap(),
            None
        );
        assert_eq!(compose(&evens, &s).at(5).unwrap(), 12);
    }

    #[test]
    fn descriptors() {
        for d in [
            "id",
            "succ",
            "affine:2,1",
            "table:[0,2,3]+tail:affine:1,2",
            "enum-of-set:odds",
        ] {
            let f = IncInj::<u64>::parse(d).unwrap();
            f.check_increasing(40).unwrap();
            assert_eq!(f.label(), d);
        }
        assert_eq!(
            IncInj::<u64>::parse("table:[0,2,3]+tail:affine:1,2")
                .unwrap()
                .prefix(5)
                .unwrap(),
            vec![0, 2, 3, 5, 6]
        );
        assert!(IncInj::<u64>::parse("affine:0,3").is_err());
        assert!(IncInj::<u64>::parse("table:[0,5]+tail:affine:1,0").is_err());
        assert!(IncInj::<u64>::parse("mystery").is_err());
    }

    #[test]
    fn big_scalars_do_not_overflow() {
        let g = IncInj::<BigUint>::affine(2, 1).unwrap();
        let big = g
            .iterate(&BigUint::from(100u32), &BigUint::from(0u32))
            .unwrap();
        assert_eq!(big, (BigUint::from(1u32) << 100usize) - BigUint::from(1u32));
        let small = IncInj::<u64>::affine(2, 1).unwrap();
        assert!(matches!(
            small.iterate(&100, &0),
            Err(ShiftError::Overflow(_))
        ));
    }
}
