use std::sync::Arc;

use serde::Serialize;

use super::search::homogeneous;
use super::{Coloring, RamseyError};
use crate::fronts::{Front, FrontElement, Located};
use crate::sequences::{SeqError, SuperSeq};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamseyResult {
    pub z: Vec<u64>,
    pub color: usize,
    pub window: u64,
    pub k: usize,
    pub exhaustive: bool,
}

/// Largest monochromatic `Z ⊆ [0, n)` for a coloring of `[[0, n)]^k` into
/// `r` colors, or the least one of size `target` when that is given.
/// Ties go to the lexicographically least set, then to the least color.
pub fn finite_ramsey(
    n: u64,
    k: usize,
    r: usize,
    coloring: impl Fn(&[u64]) -> usize + Send + Sync + 'static,
    target: Option<usize>,
) -> Result<RamseyResult, RamseyError> {
    let c = Coloring::new(
        Front::uniform(k, crate::fronts::InfSet::omega()),
        r,
        "ramsey",
        coloring,
    );
    let colored = c.colored_members(n)?;
    let elems: Vec<u64> = (0..n).collect();
    let mut best: Option<(Vec<u64>, usize)> = None;
    let mut exhaustive = true;
    for color in 0..r {
        let h = homogeneous(&elems, &colored, color, target);
        exhaustive &= h.complete;
        if !h.possible {
            continue;
        }
        let better = best
            .as_ref()
            .is_none_or(|(z, _)| h.z.len() > z.len() || (h.z.len() == z.len() && h.z < *z));
        if better {
            best = Some((h.z, color));
        }
    }
    let (z, color) = best.ok_or(RamseyError::WindowExhausted {
        window: n,
        target: target.unwrap_or(0),
    })?;
    Ok(RamseyResult {
        z,
        color,
        window: n,
        k,
        exhaustive,
    })
}

/// Colors ordered by how many window members carry them, ties broken by
/// the earliest member of each color, then by index.
fn majority_order(colored: &[(FrontElement, usize)], colors: usize) -> Vec<usize> {
    let mut stats: Vec<(usize, usize, usize)> = (0..colors).map(|c| (c, 0, usize::MAX)).collect();
    for (i, (_, c)) in colored.iter().enumerate() {
        if let Some(st) = stats.get_mut(*c) {
            st.1 += 1;
            st.2 = st.2.min(i);
        }
    }
    stats.sort_by(|a, b| b.1.cmp(&a.1).then(a.2.cmp(&b.2)).then(a.0.cmp(&b.0)));
    stats.into_iter().map(|s| s.0).collect()
}

fn members_inside(colored: &[(FrontElement, usize)], z: &[u64]) -> usize {
    colored
        .iter()
        .filter(|(s, _)| s.iter().all(|x| z.binary_search(x).is_ok()))
        .count()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NwResult {
    pub z: Vec<u64>,
    pub side: usize,
    pub window: u64,
    pub target: usize,
    pub exhaustive: bool,
    /// Colored members with all entries in `z`.
    pub members_inside: usize,
}

/// A set `Z` of `target` base points below `window` such that every member
/// of the front with entries in `Z` gets one color. Colors are tried in
/// majority order; the first one admitting such a `Z` wins, with the least
/// such `Z`.
pub fn nw_extract(c: &Coloring, window: u64, target: usize) -> Result<NwResult, RamseyError> {
    let colored = c.colored_members(window)?;
    let elems = c.front().base().below(window);
    let mut exhaustive = true;
    for side in majority_order(&colored, c.colors()) {
        let h = homogeneous(&elems, &colored, side, Some(target));
        exhaustive &= h.complete;
        if h.possible && h.z.len() >= target {
            let members_inside = members_inside(&colored, &h.z);
            return Ok(NwResult {
                z: h.z,
                side,
                window,
                target,
                exhaustive,
                members_inside,
            });
        }
    }
    Err(RamseyError::WindowExhausted { window, target })
}

/// Which alternative of the dichotomy holds on the extracted set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Relation,
    Complement,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DichotomyResult {
    pub z: Vec<u64>,
    pub side: Side,
    pub window: u64,
    pub map: String,
    pub exhaustive: bool,
    pub members_colored: usize,
    pub members_inside: usize,
}

/// The dichotomy along the shift: a largest `Z` in the window on which
/// either `φ(s) R φ(t)` for every `s ◁ t` inside `Z`, or never.
pub fn dichotomy_extract<V: Clone + 'static>(
    phi: &SuperSeq<V>,
    relation: impl Fn(&V, &V) -> bool,
    window: u64,
) -> Result<DichotomyResult, RamseyError> {
    dichotomy_along(phi, relation, "shift", |i| i + 1, window)
}

/// The dichotomy along the map `Y ↦ (y_{index(0)}, y_{index(1)}, …)`.
///
/// The coloring lives on the front of shortest `u` with both `u` and its
/// image reaching members `s` and `t` of the front of `φ`; `u` gets color
/// `R(φ(s), φ(t))`.
pub fn dichotomy_along<V: Clone + 'static>(
    phi: &SuperSeq<V>,
    relation: impl Fn(&V, &V) -> bool,
    label: &str,
    index: impl Fn(usize) -> usize + Send + Sync + 'static,
    window: u64,
) -> Result<DichotomyResult, RamseyError> {
    let front = phi.front();
    let index = Arc::new(index);
    let moved = {
        let index = index.clone();
        front.transport(label, move |i| index(i))
    };
    let joint = Front::join(vec![front.clone(), moved]);
    let member_prefix = |u: &[u64]| -> Result<FrontElement, RamseyError> {
        match front.locate(u) {
            Located::Member(l) => Ok(u[..l].to_vec()),
            _ => Err(SeqError::Undefined(u.to_vec()).into()),
        }
    };
    let mut colored = Vec::new();
    for u in joint.members_below(window) {
        let s = member_prefix(&u)?;
        let image: Vec<u64> = (0..)
            .map(|i| index(i))
            .take_while(|&j| j < u.len())
            .map(|j| u[j])
            .collect();
        let t = member_prefix(&image)?;
        let holds = relation(&phi.value(&s)?, &phi.value(&t)?);
        colored.push((u, usize::from(holds)));
    }
    let elems = front.base().below(window);
    let mut found: Vec<(Side, Vec<u64>, bool)> = Vec::new();
    for color in majority_order(&colored, 2) {
        let h = homogeneous(&elems, &colored, color, None);
        if h.possible {
            let side = if color == 1 {
                Side::Relation
            } else {
                Side::Complement
            };
            found.push((side, h.z, h.complete));
        }
    }
    let exhaustive = found.iter().all(|f| f.2);
    // Majority side first, so a stable sort by size keeps it on ties.
    found.sort_by_key(|f| std::cmp::Reverse(f.1.len()));
    let (side, z, _) = found
        .into_iter()
        .next()
        .ok_or(RamseyError::WindowExhausted { window, target: 0 })?;
    let inside = members_inside(&colored, &z);
    if inside == 0 {
        let least = colored.iter().map(|(u, _)| u.len()).min().unwrap_or(1);
        return Err(RamseyError::WindowExhausted {
            window,
            target: least,
        });
    }
    Ok(DichotomyResult {
        z,
        side,
        window,
        map: label.to_string(),
        exhaustive,
        members_colored: colored.len(),
        members_inside: inside,
    })
}
