use serde::Serialize;

use super::{critical_point, IncInj, Natural, ShiftError};
use crate::fronts::InfSet;
use crate::order::QuasiOrder;
use crate::ramsey::{dichotomy_along, DichotomyResult, Side};
use crate::sequences::SuperSeq;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GPerfectReport {
    /// The values `h(0) < h(1) < …` inside the window.
    pub h: Vec<u64>,
    pub stages: Vec<DichotomyResult>,
    pub window: u64,
}

/// The map `i ↦ g(i)` as indices, tabulated far enough for sequences of
/// length at most `window`.
fn index_table<N: Natural>(g: &IncInj<N>, window: u64) -> Result<Vec<usize>, ShiftError> {
    g.check_increasing(window + 1)?;
    g.prefix(window + 1)?
        .into_iter()
        .map(|v| {
            v.to_usize()
                .ok_or_else(|| ShiftError::Overflow(g.label().into()))
        })
        .collect()
}

/// Restricts `φ` in turn along every `g ∈ gs`, keeping each time the
/// largest set on which `φ(f) ≤ φ(f ∘ g)` holds for all `f` through it.
/// The final set `Z` is the range of `h` inside the window, and the
/// restriction to it is re-checked along every `g`.
pub fn g_perfect_extract<Q, N>(
    phi: &SuperSeq<Q::Elem>,
    qo: &Q,
    gs: &[IncInj<N>],
    window: u64,
    probe: u64,
) -> Result<GPerfectReport, ShiftError>
where
    Q: QuasiOrder,
    Q::Elem: Clone + 'static,
    N: Natural,
{
    let tables = gs
        .iter()
        .map(|g| {
            critical_point(g, probe)?;
            index_table(g, window)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let tail = phi.front().base().after(window.saturating_sub(1));
    let along = |cur: &SuperSeq<Q::Elem>, i: usize| {
        let t = tables[i].clone();
        dichotomy_along(
            cur,
            |a, b| qo.leq(a, b),
            gs[i].label(),
            move |j| t.get(j).copied().unwrap_or(usize::MAX),
            window,
        )
    };
    let mut cur = phi.clone();
    let mut stages = Vec::new();
    for (i, g) in gs.iter().enumerate() {
        let r = along(&cur, i)?;
        if r.side == Side::Complement {
            return Err(ShiftError::NotBQOEvidence {
                stage: i,
                map: g.label().into(),
                z: r.z,
            });
        }
        cur = phi.restrict(&InfSet::explicit(r.z.clone(), tail.clone())?)?;
        stages.push(r);
    }
    let h = cur.front().base().below(window);
    for (i, g) in gs.iter().enumerate() {
        let r = along(&cur, i)?;
        if r.side != Side::Relation || r.z != h {
            return Err(ShiftError::NotPerfect(g.label().into()));
        }
    }
    Ok(GPerfectReport { h, stages, window })
}
