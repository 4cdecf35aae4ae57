use std::collections::BTreeMap;

use serde::Serialize;

use super::search::homogeneous;
use super::RamseyError;
use crate::fronts::{Front, FrontElement, InfSet, Schema};
use crate::order::{rado_leq, Element, QuasiOrder};
use crate::sequences::SuperSeq;

/// Least size of the homogeneous set each Ramsey stage must reach.
pub const LAVER_MIN_STAGE: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LaverReport {
    /// `M ∖ {min M}`: the pairs over it carry a copy of Rado's order.
    pub x: Vec<u64>,
    /// Homogeneous set of the triple stage.
    pub triple_stage: Vec<u64>,
    /// Homogeneous set of the quadruple stage, `M`.
    pub quadruple_stage: Vec<u64>,
    pub pairs_verified: usize,
    pub window: u64,
    pub exhaustive: bool,
}

fn require_pairs<V: Clone + 'static>(f: &SuperSeq<V>) -> Result<(), RamseyError> {
    match f.front().schema() {
        Schema::Uniform(2) => Ok(()),
        _ => Err(RamseyError::NotPairs(f.front().to_string())),
    }
}

fn require_bad<Q>(f: &SuperSeq<Q::Elem>, qo: &Q, window: u64) -> Result<(), RamseyError>
where
    Q: QuasiOrder,
    Q::Elem: Clone + 'static,
{
    let report = f.badness_check(qo, window)?;
    match report.good_witness {
        Some((s, t)) => Err(RamseyError::NotBadOnWindow(format!("{s:?} ◁ {t:?}"))),
        None => Ok(()),
    }
}

/// All `k`-subsets of `elems` colored by `keep` (1 when it holds).
fn colored_subsets(
    elems: &[u64],
    k: usize,
    keep: &mut dyn FnMut(&[u64]) -> bool,
) -> Vec<(FrontElement, usize)> {
    Front::uniform(k, InfSet::omega())
        .members_within(elems)
        .into_iter()
        .map(|s| {
            let c = usize::from(keep(&s));
            (s, c)
        })
        .collect()
}

/// Extracts a copy of Rado's order from a bad sequence of sequences.
///
/// Triples `i < j < k` are split by `f({i,j}) ≤ f({i,k})` and quadruples
/// `i < j < k < l` by `f({i,j}) ≤ f({k,l})`; each stage keeps a largest
/// set homogeneous for the `≤` side. Dropping the least point of the second
/// set leaves `X`, on which `p ≤ q` in Rado's order iff `f(p) ≤ f(q)`.
pub fn laver_embed<Q>(
    f: &SuperSeq<Q::Elem>,
    qo: &Q,
    window: u64,
) -> Result<LaverReport, RamseyError>
where
    Q: QuasiOrder,
    Q::Elem: Clone + 'static,
{
    require_pairs(f)?;
    require_bad(f, qo, window)?;
    let mut cache: BTreeMap<(u64, u64), Q::Elem> = BTreeMap::new();
    let mut value = |i: u64, j: u64| -> Result<Q::Elem, RamseyError> {
        if let Some(v) = cache.get(&(i, j)) {
            return Ok(v.clone());
        }
        let v = f.value(&[i, j])?;
        cache.insert((i, j), v.clone());
        Ok(v)
    };
    let mut leq = |a: (u64, u64), b: (u64, u64)| -> Result<bool, RamseyError> {
        let (x, y) = (value(a.0, a.1)?, value(b.0, b.1)?);
        Ok(qo.leq(&x, &y))
    };

    let ground = f.front().base().below(window);
    let mut err = None;
    let triples = colored_subsets(&ground, 3, &mut |s| {
        leq((s[0], s[1]), (s[0], s[2])).unwrap_or_else(|e| {
            err.get_or_insert(e);
            false
        })
    });
    if let Some(e) = err.take() {
        return Err(e);
    }
    let first = homogeneous(&ground, &triples, 1, None);
    if first.z.len() < LAVER_MIN_STAGE {
        return Err(RamseyError::RamseyStageFailed {
            stage: "triple".into(),
            found: first.z.len(),
            needed: LAVER_MIN_STAGE,
        });
    }
    let quads = colored_subsets(&first.z, 4, &mut |s| {
        leq((s[0], s[1]), (s[2], s[3])).unwrap_or_else(|e| {
            err.get_or_insert(e);
            false
        })
    });
    if let Some(e) = err.take() {
        return Err(e);
    }
    let second = homogeneous(&first.z, &quads, 1, None);
    if second.z.len() < LAVER_MIN_STAGE {
        return Err(RamseyError::RamseyStageFailed {
            stage: "quadruple".into(),
            found: second.z.len(),
            needed: LAVER_MIN_STAGE,
        });
    }

    let x: Vec<u64> = second.z[1..].to_vec();
    let pairs: Vec<(u64, u64)> = x
        .iter()
        .enumerate()
        .flat_map(|(a, &i)| x[a + 1..].iter().map(move |&j| (i, j)))
        .collect();
    let mut verified = 0;
    for &p in &pairs {
        for &q in &pairs {
            let rado = rado_leq(&[p.0, p.1], &[q.0, q.1]).expect("pairs are increasing");
            if rado != leq(p, q)? {
                return Err(RamseyError::EmbeddingCheckFailed(vec![p.0, p.1, q.0, q.1]));
            }
            verified += 1;
        }
    }
    Ok(LaverReport {
        x,
        triple_stage: first.z,
        quadruple_stage: second.z,
        pairs_verified: verified,
        window,
        exhaustive: first.complete && second.complete,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowersetWitness<V> {
    pub m: u64,
    pub n: u64,
    /// `f({m,n}) ∈ P_m`, outside the downset of the truncated `P_n`.
    pub value: V,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowersetBadSeq<V> {
    /// `(m, P_m)` with `P_m = {f({m,n}) | m < n < N}`.
    pub sets: Vec<(u64, Vec<V>)>,
    pub witnesses: Vec<PowersetWitness<V>>,
    pub window: u64,
    /// The sets are cut at the window, so the downsets tested are those of
    /// the truncations.
    pub truncated: bool,
}

/// `m ↦ P_m`, the images of the rows of a bad sequence of sequences, with
/// the witness `f({m,n})` of `P_m ⊄ ↓P_n` for every `m < n`.
pub fn f2_to_powerset_badseq<Q>(
    f: &SuperSeq<Q::Elem>,
    qo: &Q,
    window: u64,
) -> Result<PowersetBadSeq<Q::Elem>, RamseyError>
where
    Q: QuasiOrder,
    Q::Elem: Clone + Ord + 'static,
{
    require_pairs(f)?;
    require_bad(f, qo, window)?;
    let ground = f.front().base().below(window);
    let mut sets = Vec::new();
    for (a, &m) in ground.iter().enumerate() {
        let row: Vec<Q::Elem> = ground[a + 1..]
            .iter()
            .map(|&n| f.value(&[m, n]))
            .collect::<Result<_, _>>()?;
        if !row.is_empty() {
            sets.push((m, row));
        }
    }
    let mut witnesses = Vec::new();
    for (a, (m, _)) in sets.iter().enumerate() {
        for (n, pn) in &sets[a + 1..] {
            let value = f.value(&[*m, *n])?;
            if pn.iter().any(|q| qo.leq(&value, q)) {
                return Err(RamseyError::NotBadPowersetSeq(*m as usize, *n as usize));
            }
            witnesses.push(PowersetWitness {
                m: *m,
                n: *n,
                value,
            });
        }
    }
    let sets = sets
        .into_iter()
        .map(|(m, mut row)| {
            row.sort();
            row.dedup();
            (m, row)
        })
        .collect();
    Ok(PowersetBadSeq {
        sets,
        witnesses,
        window,
        truncated: true,
    })
}

/// Result of choosing witnesses from a bad sequence of sets.
pub struct PairsFromSets<V> {
    pub seq: SuperSeq<V>,
    /// `q^n_m` for `m < n` below the number of sets.
    pub table: BTreeMap<FrontElement, V>,
    pub triples_checked: usize,
}

/// Picks the least `q^n_m ∈ P_m` outside `↓P_n` for each `m < n`, giving a
/// sequence on pairs, and checks `q^n_m ≰ q^l_n` for `m < n < l`.
pub fn powerset_badseq_to_f2<Q>(
    ps: &[Vec<Q::Elem>],
    qo: &Q,
) -> Result<PairsFromSets<Q::Elem>, RamseyError>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    let k = ps.len();
    let mut table = BTreeMap::new();
    for m in 0..k {
        for n in m + 1..k {
            let q = ps[m]
                .iter()
                .filter(|q| !ps[n].iter().any(|p| qo.leq(q, p)))
                .min()
                .ok_or(RamseyError::NotBadPowersetSeq(m, n))?;
            table.insert(vec![m as u64, n as u64], q.clone());
        }
    }
    let mut triples_checked = 0;
    for m in 0..k {
        for n in m + 1..k {
            for l in n + 1..k {
                let a = &table[&vec![m as u64, n as u64]];
                let b = &table[&vec![n as u64, l as u64]];
                if qo.leq(a, b) {
                    return Err(RamseyError::LawViolated(m, n, l));
                }
                triples_checked += 1;
            }
        }
    }
    let seq = SuperSeq::from_table(Front::uniform(2, InfSet::omega()), table.clone(), None);
    Ok(PairsFromSets {
        seq,
        table,
        triples_checked,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{antichain, OmegaEq, Rado, RadoPair};

    fn rado_identity() -> SuperSeq<RadoPair> {
        SuperSeq::new(Front::uniform(2, InfSet::omega()), "rado", |s| {
            RadoPair::from_slice(s).ok()
        })
    }

    #[test]
    fn laver_on_the_identity() {
        let r = laver_embed(&rado_identity(), &Rado, 12).unwrap();
        assert!(r.x.len() >= 4);
        assert_eq!(r.x, (1..12).collect::<Vec<_>>());
        assert!(matches!(
            laver_embed(&rado_identity(), &Rado, 5),
            Err(RamseyError::RamseyStageFailed { .. })
        ));
        let constant = SuperSeq::constant(Front::uniform(2, InfSet::omega()), 0u64);
        assert!(matches!(
            laver_embed(&constant, &OmegaEq, 8),
            Err(RamseyError::NotBadOnWindow(_))
        ));
    }

    #[test]
    fn rows_of_the_identity() {
        let p = f2_to_powerset_badseq(&rado_identity(), &Rado, 6).unwrap();
        assert_eq!(p.sets.len(), 5);
        assert_eq!(p.witnesses.len(), 10);
        let rows = SuperSeq::new(Front::uniform(2, InfSet::omega()), "row", |s: &[u64]| {
            Some(s[0])
        });
        assert_eq!(
            f2_to_powerset_badseq(&rows, &OmegaEq, 5)
                .unwrap()
                .witnesses
                .len(),
            6
        );
        let constant = SuperSeq::constant(Front::uniform(2, InfSet::omega()), 1u64);
        assert!(matches!(
            f2_to_powerset_badseq(&constant, &OmegaEq, 5),
            Err(RamseyError::NotBadOnWindow(_))
        ));
    }

    #[test]
    fn round_trip_recovers_the_identity() {
        let p = f2_to_powerset_badseq(&rado_identity(), &Rado, 8).unwrap();
        let ps: Vec<Vec<RadoPair>> = p.sets.into_iter().map(|(_, s)| s).collect();
        let back = powerset_badseq_to_f2(&ps, &Rado).unwrap();
        for (s, v) in &back.table {
            assert_eq!(*v, RadoPair::from_slice(s).unwrap());
            assert_eq!(back.seq.value(s).unwrap(), *v);
        }
    }

    #[test]
    fn nested_and_alternating_sets() {
        let q = antichain(2);
        let nested = vec![vec![0], vec![0, 1]];
        assert!(matches!(
            powerset_badseq_to_f2(&nested, &q),
            Err(RamseyError::NotBadPowersetSeq(0, 1))
        ));
        let alternating = vec![vec![0], vec![1], vec![0]];
        assert!(matches!(
            powerset_badseq_to_f2(&alternating, &q),
            Err(RamseyError::NotBadPowersetSeq(0, 2))
        ));
        let r = powerset_badseq_to_f2(&alternating[..2], &q).unwrap();
        assert_eq!(r.table[&vec![0, 1]], 0);
    }
}
