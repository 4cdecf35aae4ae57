use serde::Serialize;

use super::{rado_cmp, OrderError, QuasiOrder, RadoPair};

/// A finite initial window `f(0), …, f(N-1)` of a sequence in a quasi-order.
pub struct SeqWindow<'a, Q: QuasiOrder> {
    qo: &'a Q,
    values: Vec<Q::Elem>,
}

impl<'a, Q> SeqWindow<'a, Q>
where
    Q: QuasiOrder,
    Q::Elem: std::fmt::Debug,
{
    pub fn new(qo: &'a Q, values: Vec<Q::Elem>) -> Result<Self, OrderError> {
        if let Some(x) = values.iter().find(|x| !qo.contains(x)) {
            return Err(OrderError::NotInCarrier(format!("{x:?}")));
        }
        Ok(SeqWindow { qo, values })
    }

    /// Window obtained by evaluating `f` on `0..n`.
    pub fn from_fn(qo: &'a Q, n: usize, f: impl Fn(usize) -> Q::Elem) -> Result<Self, OrderError> {
        Self::new(qo, (0..n).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Q::Elem] {
        &self.values
    }

    fn leq(&self, i: usize, j: usize) -> bool {
        self.qo.leq(&self.values[i], &self.values[j])
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SequenceReport {
    /// Least `(m, n)`, `m < n`, with `f(m) ≤ f(n)`.
    pub good_witness: Option<(usize, usize)>,
    pub bad_on_window: bool,
    pub perfect_on_window: bool,
    pub antichain_on_window: bool,
    pub descending_on_window: bool,
    pub window: usize,
}

/// Good, bad, perfect, antichain and strictly descending tests over all index
/// pairs of the window.
pub fn sequence_diagnose<Q>(w: &SeqWindow<'_, Q>) -> Result<SequenceReport, OrderError>
where
    Q: QuasiOrder,
    Q::Elem: std::fmt::Debug,
{
    let n = w.len();
    if n < 2 {
        return Err(OrderError::WindowTooSmall {
            needed: 2,
            found: n,
        });
    }
    let mut good_witness = None;
    let mut perfect = true;
    let mut antichain = true;
    let mut descending = true;
    for i in 0..n {
        for j in i + 1..n {
            let up = w.leq(i, j);
            let down = w.leq(j, i);
            if up && good_witness.is_none() {
                good_witness = Some((i, j));
            }
            perfect &= up;
            antichain &= !up && !down;
            descending &= down && !up;
        }
    }
    Ok(SequenceReport {
        good_witness,
        bad_on_window: good_witness.is_none(),
        perfect_on_window: perfect,
        antichain_on_window: antichain,
        descending_on_window: descending,
        window: n,
    })
}

/// How "infinitely many later indices" is approximated on a window.
pub const REGULARITY_SURROGATE: &str = "at least one later witness in the window";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub regular_on_window: bool,
    /// Least `n` such that the indices after `n` (at least two of them) form
    /// a regular window.
    pub regular_tail: Option<usize>,
    pub surrogate: &'static str,
    pub window: usize,
}

/// Checks that every index except the last is dominated by a later one.
///
/// The last index of a window has no later index and is exempt.
pub fn regularity_check<Q>(w: &SeqWindow<'_, Q>) -> RegularityReport
where
    Q: QuasiOrder,
    Q::Elem: std::fmt::Debug,
{
    let n = w.len();
    // dominated[i]: some k in (i, n) has f(i) ≤ f(k)
    let dominated: Vec<bool> = (0..n).map(|i| (i + 1..n).any(|k| w.leq(i, k))).collect();
    let regular_from = |start: usize| (start..n.saturating_sub(1)).all(|i| dominated[i]);
    let regular_tail = (0..n).find(|&t| n - (t + 1) >= 2 && regular_from(t + 1));
    RegularityReport {
        regular_on_window: regular_from(0),
        regular_tail,
        surrogate: REGULARITY_SURROGATE,
        window: n,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadoWitness {
    pub pair: RadoPair,
    pub in_d_m: bool,
    pub in_d_n: bool,
    /// Largest second coordinate among the generators `{k, l}` consulted.
    pub generator_bound: u64,
}

/// `p ∈ D_k = ↓{{k, l} | k < l}`, testing generators with `l ≤ bound`.
fn in_rado_downset(p: RadoPair, k: u64, bound: u64) -> bool {
    (k + 1..=bound.max(k + 1)).any(|l| rado_cmp(p, RadoPair::new(k, l).expect("k < l")))
}

/// Confirms `{m, n} ∈ D_m ∖ D_n` for the antichain `n ↦ D_n`.
///
/// Generators `{k, l}` with `l > 2n + 1` add nothing for pairs with entries
/// at most `n`: once `l ≥ n` the first clause is saturated and the second
/// one does not depend on `l`.
pub fn rado_antichain_witness(m: u64, n: u64) -> Result<RadoWitness, OrderError> {
    if m >= n {
        return Err(OrderError::BadIndices(m, n));
    }
    let pair = RadoPair::new(m, n)?;
    let bound = 2 * n + 1;
    Ok(RadoWitness {
        pair,
        in_d_m: in_rado_downset(pair, m, bound),
        in_d_n: in_rado_downset(pair, n, bound),
        generator_bound: bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{chain, OmegaLeq, Rado};

    fn rp(m: u64, n: u64) -> RadoPair {
        RadoPair::new(m, n).unwrap()
    }

    #[test]
    fn diagnose_examples() {
        let c = chain(3);
        let w = SeqWindow::new(&c, vec![1, 1, 1]).unwrap();
        assert_eq!(sequence_diagnose(&w).unwrap().good_witness, Some((0, 1)));

        let w = SeqWindow::from_fn(&Rado, 5, |n| rp(n as u64, 10 + n as u64)).unwrap();
        let r = sequence_diagnose(&w).unwrap();
        assert!(r.bad_on_window && r.good_witness.is_none());

        let w = SeqWindow::from_fn(&Rado, 3, |n| rp(n as u64, n as u64 + 1)).unwrap();
        assert_eq!(sequence_diagnose(&w).unwrap().good_witness, Some((0, 2)));

        let w = SeqWindow::new(&c, vec![2, 1, 0]).unwrap();
        let r = sequence_diagnose(&w).unwrap();
        assert!(r.descending_on_window && r.bad_on_window && !r.antichain_on_window);

        let w = SeqWindow::new(&c, vec![0]).unwrap();
        assert!(sequence_diagnose(&w).is_err());
        assert!(SeqWindow::new(&c, vec![9]).is_err());
    }

    #[test]
    fn regularity_examples() {
        let c = chain(3);
        let r = regularity_check(&SeqWindow::new(&c, vec![1; 5]).unwrap());
        assert!(r.regular_on_window);
        assert_eq!(r.regular_tail, Some(0));

        let r = regularity_check(&SeqWindow::new(&c, vec![2, 1, 0]).unwrap());
        assert!(!r.regular_on_window);
        assert_eq!(r.regular_tail, None);

        let alt: Vec<u64> = (0..6).map(|i| i % 2).collect();
        let r = regularity_check(&SeqWindow::new(&OmegaLeq, alt).unwrap());
        assert!(r.regular_on_window);
    }

    #[test]
    fn rado_witness_examples() {
        let w = rado_antichain_witness(0, 1).unwrap();
        assert!(w.in_d_m && !w.in_d_n);
        assert_eq!(w.pair, rp(0, 1));
        let w = rado_antichain_witness(2, 7).unwrap();
        assert!(w.in_d_m && !w.in_d_n);
        assert_eq!(
            rado_antichain_witness(3, 3),
            Err(OrderError::BadIndices(3, 3))
        );
    }

    #[test]
    fn witness_bound_is_sufficient() {
        // A much larger generator pool changes nothing.
        for m in 0..8 {
            for n in m + 1..10 {
                for k in 0..12 {
                    assert_eq!(
                        in_rado_downset(rp(m, n), k, 2 * n + 1),
                        in_rado_downset(rp(m, n), k, 60)
                    );
                }
            }
        }
    }
}
