//! Branch-and-bound search for homogeneous sets.
//!
//! Candidate sets are grown in increasing order, so sets are visited in
//! lexicographic order and the first set of a given size found is the least
//! one. Homogeneity is inherited by subsets, which makes the size bound
//! `|Z| + remaining ≤ best` a safe cut.

use std::collections::HashMap;

use crate::fronts::FrontElement;

/// Nodes visited before a search gives up and reports itself incomplete.
pub const SEARCH_BUDGET: usize = 1 << 22;

#[derive(Debug, Clone)]
pub(crate) struct Homogeneous {
    pub z: Vec<u64>,
    /// False when the budget ran out before the search space was covered.
    pub complete: bool,
    /// False when the empty member has the other color, so no set works.
    pub possible: bool,
}

struct Ctx<'a> {
    elems: &'a [u64],
    /// For each position, the members ending there: their other positions
    /// and whether their color is the wanted one.
    by_last: Vec<Vec<(Vec<usize>, bool)>>,
    target: Option<usize>,
    visited: usize,
    done: bool,
    out_of_budget: bool,
}

/// Least largest (or least of size `target`) subset `Z` of `elems` such that
/// every colored member inside `Z` has color `side`.
pub(crate) fn homogeneous(
    elems: &[u64],
    colored: &[(FrontElement, usize)],
    side: usize,
    target: Option<usize>,
) -> Homogeneous {
    let pos: HashMap<u64, usize> = elems.iter().enumerate().map(|(i, &x)| (x, i)).collect();
    let mut by_last = vec![Vec::new(); elems.len()];
    for (s, c) in colored {
        let Some((last, rest)) = s.split_last() else {
            if *c != side {
                return Homogeneous {
                    z: Vec::new(),
                    complete: true,
                    possible: false,
                };
            }
            continue;
        };
        let Some(&l) = pos.get(last) else { continue };
        let Some(rest) = rest
            .iter()
            .map(|x| pos.get(x).copied())
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        by_last[l].push((rest, *c == side));
    }
    let mut ctx = Ctx {
        elems,
        by_last,
        target,
        visited: 0,
        done: false,
        out_of_budget: false,
    };
    let mut inside = vec![false; elems.len()];
    let mut z = Vec::new();
    let mut best = Vec::new();
    if target == Some(0) {
        return Homogeneous {
            z,
            complete: true,
            possible: true,
        };
    }
    grow(&mut ctx, &mut z, &mut inside, 0, &mut best);
    Homogeneous {
        z: best,
        complete: !ctx.out_of_budget,
        possible: true,
    }
}

fn grow(
    ctx: &mut Ctx<'_>,
    z: &mut Vec<u64>,
    inside: &mut [bool],
    from: usize,
    best: &mut Vec<u64>,
) {
    for i in from..ctx.elems.len() {
        if ctx.done || z.len() + (ctx.elems.len() - i) <= best.len() {
            return;
        }
        ctx.visited += 1;
        if ctx.visited > SEARCH_BUDGET {
            ctx.out_of_budget = true;
            ctx.done = true;
            return;
        }
        let fits = ctx.by_last[i]
            .iter()
            .all(|(rest, ok)| *ok || !rest.iter().all(|&p| inside[p]));
        if !fits {
            continue;
        }
        z.push(ctx.elems[i]);
        inside[i] = true;
        if z.len() > best.len() {
            *best = z.clone();
            if ctx.target.is_some_and(|t| z.len() >= t) {
                ctx.done = true;
            }
        }
        grow(ctx, z, inside, i + 1, best);
        inside[i] = false;
        z.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(n: u64, color: impl Fn(u64, u64) -> usize) -> Vec<(FrontElement, usize)> {
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                out.push((vec![a, b], color(a, b)));
            }
        }
        out
    }

    #[test]
    fn finds_least_maximum() {
        let elems: Vec<u64> = (0..8).collect();
        let c = pairs(8, |a, b| ((a + b) % 2) as usize);
        let h = homogeneous(&elems, &c, 0, None);
        assert_eq!(h.z, vec![0, 2, 4, 6]);
        assert!(h.complete);
        assert_eq!(homogeneous(&elems, &c, 1, None).z.len(), 2);
        assert_eq!(homogeneous(&elems, &c, 0, Some(3)).z, vec![0, 2, 4]);
    }

    #[test]
    fn empty_member_of_the_other_color_blocks_everything() {
        let h = homogeneous(&[0, 1], &[(vec![], 1)], 0, None);
        assert!(!h.possible);
    }
}
