//! Ordinals below ω^ω in Cantor normal form.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// `c_k·ω^k + … + c_1·ω + c_0`.
///
/// Stored lowest power first with trailing zeros trimmed, so the derived
/// equality is ordinal equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OrdinalCNF {
    coeffs: Vec<u64>,
}

impl OrdinalCNF {
    pub fn zero() -> Self {
        OrdinalCNF { coeffs: Vec::new() }
    }

    pub fn finite(n: u64) -> Self {
        Self::from_low_first(vec![n])
    }

    pub fn omega() -> Self {
        Self::omega_pow(1)
    }

    /// `ω^k`.
    pub fn omega_pow(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        OrdinalCNF { coeffs }
    }

    /// Coefficients written highest power first, as in `(c_k, …, c_0)`.
    pub fn from_coefficients(high_first: &[u64]) -> Self {
        Self::from_low_first(high_first.iter().rev().copied().collect())
    }

    fn from_low_first(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        OrdinalCNF { coeffs }
    }

    /// Highest power first; `[]` for zero.
    pub fn coefficients(&self) -> Vec<u64> {
        self.coeffs.iter().rev().copied().collect()
    }

    pub fn coefficient(&self, power: usize) -> u64 {
        self.coeffs.get(power).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_finite(&self) -> Option<u64> {
        match self.coeffs.len() {
            0 => Some(0),
            1 => Some(self.coeffs[0]),
            _ => None,
        }
    }

    pub fn is_successor(&self) -> bool {
        self.coefficient(0) > 0
    }

    pub fn is_limit(&self) -> bool {
        !self.is_zero() && !self.is_successor()
    }

    /// `α + 1`.
    pub fn succ(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(0);
        }
        coeffs[0] += 1;
        OrdinalCNF { coeffs }
    }

    /// The `β` with `β + 1 = α`, if `α` is a successor.
    pub fn pred(&self) -> Option<Self> {
        self.is_successor().then(|| {
            let mut coeffs = self.coeffs.clone();
            coeffs[0] -= 1;
            Self::from_low_first(coeffs)
        })
    }

    /// Ordinal sum `α + β`: the terms of `α` below the leading power of `β`
    /// are absorbed.
    pub fn plus(&self, other: &Self) -> Self {
        let Some(lead) = other.coeffs.len().checked_sub(1) else {
            return self.clone();
        };
        let mut out = other.coeffs.clone();
        out.resize(self.coeffs.len().max(out.len()), 0);
        out[lead] += self.coefficient(lead);
        for (p, slot) in out.iter_mut().enumerate().skip(lead + 1) {
            *slot = self.coefficient(p);
        }
        Self::from_low_first(out)
    }

    /// Largest power of ω with a nonzero coefficient (0 for finite ordinals).
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }
}

impl Ord for OrdinalCNF {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl PartialOrd for OrdinalCNF {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<u64> for OrdinalCNF {
    fn from(n: u64) -> Self {
        OrdinalCNF::finite(n)
    }
}

impl fmt::Display for OrdinalCNF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (p, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let base = match p {
                0 => String::new(),
                1 => "omega".to_string(),
                _ => format!("omega^{p}"),
            };
            terms.push(match (p, c) {
                (0, _) => c.to_string(),
                (_, 1) => base,
                _ => format!("{base}*{c}"),
            });
        }
        write!(f, "{}", terms.join(" + "))
    }
}

impl Serialize for OrdinalCNF {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coefficients().serialize(s)
    }
}

impl<'de> Deserialize<'de> for OrdinalCNF {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        Ok(OrdinalCNF::from_coefficients(&Vec::<u64>::deserialize(d)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_and_order() {
        let w = OrdinalCNF::omega();
        assert!(OrdinalCNF::finite(1000) < w);
        assert!(w < w.succ());
        assert!(OrdinalCNF::from_coefficients(&[1, 0, 0]) > OrdinalCNF::from_coefficients(&[9, 9]));
        assert_eq!(
            OrdinalCNF::from_coefficients(&[0, 0, 3]),
            OrdinalCNF::finite(3)
        );
        assert_eq!(OrdinalCNF::finite(0), OrdinalCNF::zero());
        assert!(w.is_limit() && !w.is_successor());
        assert_eq!(w.succ().pred(), Some(w));
    }

    #[test]
    fn display() {
        assert_eq!(OrdinalCNF::zero().to_string(), "0");
        assert_eq!(OrdinalCNF::finite(4).to_string(), "4");
        assert_eq!(OrdinalCNF::omega().to_string(), "omega");
        assert_eq!(
            OrdinalCNF::from_coefficients(&[3, 1, 2]).to_string(),
            "omega^2*3 + omega + 2"
        );
    }

    #[test]
    fn addition_absorbs_lower_terms() {
        let one = OrdinalCNF::finite(1);
        let w = OrdinalCNF::omega();
        assert_eq!(one.plus(&w), w);
        assert_eq!(w.plus(&one), w.succ());
        let a = OrdinalCNF::from_coefficients(&[2, 5]);
        let b = OrdinalCNF::from_coefficients(&[1, 0]);
        assert_eq!(a.plus(&b), OrdinalCNF::from_coefficients(&[3, 0]));
    }

    #[test]
    fn serde_round_trip() {
        let a = OrdinalCNF::from_coefficients(&[1, 0, 4]);
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(s, "[1,0,4]");
        assert_eq!(serde_json::from_str::<OrdinalCNF>(&s).unwrap(), a);
    }
}
