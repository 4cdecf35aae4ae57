use std::collections::BTreeSet;

use serde::Serialize;

use super::{Element, FiniteQO, OrderError, QuasiOrder};

/// A downward closed subset of a finite quasi-order.
///
/// Downsets remember the fingerprint of the order they were built over, so
/// mixing downsets of different orders is detected.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Downset<T> {
    fingerprint: u64,
    members: BTreeSet<T>,
}

impl<T: Element> Downset<T> {
    pub fn members(&self) -> &BTreeSet<T> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.members.contains(x)
    }

    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.members.is_subset(&other.members)
    }
}

/// `↓S = {q | ∃p ∈ S, q ≤ p}`.
pub fn downset_closure<T: Element>(qo: &FiniteQO<T>, s: &[T]) -> Result<Downset<T>, OrderError> {
    let mut idx = Vec::with_capacity(s.len());
    for p in s {
        idx.push(
            qo.position(p)
                .ok_or_else(|| OrderError::NotInCarrier(p.to_string()))?,
        );
    }
    let members = qo
        .elements()
        .iter()
        .enumerate()
        .filter(|(q, _)| idx.iter().any(|&p| qo.leq_index(*q, p)))
        .map(|(_, e)| e.clone())
        .collect();
    Ok(Downset {
        fingerprint: qo.fingerprint(),
        members,
    })
}

/// The domination quasi-order: every `p ∈ X` lies below some `q ∈ Y`.
pub fn domination_leq<Q: QuasiOrder>(qo: &Q, x: &[Q::Elem], y: &[Q::Elem]) -> bool {
    x.iter().all(|p| y.iter().any(|q| qo.leq(p, q)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DownsetLimits<T> {
    pub liminf: BTreeSet<T>,
    pub limsup: BTreeSet<T>,
    pub converged_on_window: bool,
    /// Index from which the window is treated as the tail.
    pub tail_start: usize,
    pub window: usize,
}

/// Lower and upper limits of a finite run of downsets.
///
/// "Eventually" is read on the window tail: the indices from `len / 2` on.
/// `liminf` is the intersection of that tail, `limsup` its union, and the run
/// counts as converged when all tail values coincide.
pub fn downset_limits<T: Element>(seq: &[Downset<T>]) -> Result<DownsetLimits<T>, OrderError> {
    let first = seq.first().ok_or(OrderError::WindowTooSmall {
        needed: 1,
        found: 0,
    })?;
    if seq.iter().any(|d| d.fingerprint != first.fingerprint) {
        return Err(OrderError::MixedBaseQO);
    }
    let tail_start = seq.len() / 2;
    let tail = &seq[tail_start..];
    let mut liminf = tail[0].members.clone();
    let mut limsup = BTreeSet::new();
    for d in tail {
        liminf.retain(|x| d.members.contains(x));
        limsup.extend(d.members.iter().cloned());
    }
    let converged_on_window = tail.iter().all(|d| d.members == tail[0].members);
    Ok(DownsetLimits {
        liminf,
        limsup,
        converged_on_window,
        tail_start,
        window: seq.len(),
    })
}

/// Picks `m` indices on which the sequence is constant.
///
/// The value is the most frequent one; ties go to the larger downset and then
/// to the earliest first occurrence. A constant subsequence converges to its
/// value, which is also the union of the chosen terms.
pub fn rado_trick_extract<T: Element>(
    seq: &[Downset<T>],
    m: usize,
) -> Result<Vec<usize>, OrderError> {
    if let Some(first) = seq.first() {
        if seq.iter().any(|d| d.fingerprint != first.fingerprint) {
            return Err(OrderError::MixedBaseQO);
        }
    }
    // (count, cardinality, first index) per distinct value
    let mut stats: Vec<(&Downset<T>, usize, usize)> = Vec::new();
    for (i, d) in seq.iter().enumerate() {
        match stats.iter_mut().find(|(v, _, _)| *v == d) {
            Some(entry) => entry.1 += 1,
            None => stats.push((d, 1, i)),
        }
    }
    let best = stats
        .iter()
        .max_by(|a, b| {
            (a.1, a.0.len())
                .cmp(&(b.1, b.0.len()))
                .then_with(|| b.2.cmp(&a.2))
        })
        .ok_or(OrderError::WindowTooSmall {
            needed: m,
            found: 0,
        })?;
    if best.1 < m {
        return Err(OrderError::WindowTooSmall {
            needed: m,
            found: best.1,
        });
    }
    let value = best.0;
    let picked: Vec<usize> = seq
        .iter()
        .enumerate()
        .filter(|(_, d)| *d == value)
        .map(|(i, _)| i)
        .take(m)
        .collect();
    Ok(picked)
}
