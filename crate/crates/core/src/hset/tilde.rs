//! The map `f̃ : T(F) → V*(Q)` of a super-sequence, truncated to a window.
//!
//! `f̃(s) = f(s)` on members, and otherwise the set of `f̃(s ∪ {n})` over the
//! admissible `n`. Only `n < N` are collected, so each node is an
//! approximation of the true (possibly infinite) set. An interior node with
//! no extension below `N` gets its least extension instead and is recorded
//! in `padded`.

use std::collections::{BTreeMap, BTreeSet};

use super::{GameError, HSet};
use crate::fronts::{FrontElement, NodeClass};
use crate::sequences::SuperSeq;

/// How far past the window a padding extension is searched for.
const PAD_SEARCH: usize = 4096;

#[derive(Debug, Clone)]
pub struct Tilde<V> {
    pub window: u64,
    pub nodes: BTreeMap<FrontElement, HSet<V>>,
    pub padded: BTreeSet<FrontElement>,
    /// `f̃({m})` for the base points `m < N`, in increasing order of `m`.
    pub first_level: Vec<(u64, HSet<V>)>,
}

pub fn tilde_build<V: Ord + Clone + 'static>(
    f: &SuperSeq<V>,
    window: u64,
) -> Result<Tilde<V>, GameError> {
    let mut t = Tilde {
        window,
        nodes: BTreeMap::new(),
        padded: BTreeSet::new(),
        first_level: Vec::new(),
    };
    build(f, &[], &mut t)?;
    if !f.front().is_trivial() {
        for m in f.front().base().below(window) {
            let v = t.nodes[&vec![m]].clone();
            t.first_level.push((m, v));
        }
    }
    Ok(t)
}

fn build<V: Ord + Clone + 'static>(
    f: &SuperSeq<V>,
    s: &[u64],
    t: &mut Tilde<V>,
) -> Result<HSet<V>, GameError> {
    if let Some(v) = t.nodes.get(s) {
        return Ok(v.clone());
    }
    let front = f.front();
    let v = match front.classify(s) {
        NodeClass::Member => HSet::atom(f.value(s)?),
        NodeClass::Outside => return Err(GameError::EmptyTruncation(s.to_vec())),
        NodeClass::Interior => {
            let extend = |n: u64| {
                let mut u = s.to_vec();
                u.push(n);
                u
            };
            let base = match s.last() {
                Some(&m) => front.base().after(m),
                None => front.base().clone(),
            };
            let mut kids: Vec<FrontElement> = base
                .below(t.window)
                .into_iter()
                .map(extend)
                .filter(|u| front.in_tree(u))
                .collect();
            if kids.is_empty() {
                let u = base
                    .iter()
                    .skip_while(|&n| n < t.window)
                    .take(PAD_SEARCH)
                    .map(extend)
                    .find(|u| front.in_tree(u))
                    .ok_or_else(|| GameError::EmptyTruncation(s.to_vec()))?;
                t.padded.insert(s.to_vec());
                kids.push(u);
            }
            let children = kids
                .iter()
                .map(|u| build(f, u, t))
                .collect::<Result<Vec<_>, _>>()?;
            HSet::node(children)?
        }
    };
    t.nodes.insert(s.to_vec(), v.clone());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fronts::{Front, InfSet};
    use crate::hset::game::Winner;
    use crate::hset::game_leq;
    use crate::order::{Rado, RadoPair};

    fn rado_identity() -> SuperSeq<RadoPair> {
        SuperSeq::new(Front::uniform(2, InfSet::omega()), "rado", |s| {
            RadoPair::from_slice(s).ok()
        })
    }

    #[test]
    fn depth_one_members_are_atoms() {
        let f = SuperSeq::new(Front::uniform(1, InfSet::omega()), "id", |s: &[u64]| {
            Some(s[0])
        });
        let t = tilde_build(&f, 4).unwrap();
        assert_eq!(t.first_level[2], (2, HSet::atom(2)));
        assert!(t.padded.is_empty());
    }

    #[test]
    fn rado_zero_node() {
        let t = tilde_build(&rado_identity(), 4).unwrap();
        let want = HSet::of_atoms((1..4).map(|n| RadoPair::new(0, n).unwrap())).unwrap();
        assert_eq!(t.first_level[0].1, want);
        assert!(t.padded.contains(&vec![3]));
    }

    #[test]
    fn rado_first_level_is_bad() {
        let t = tilde_build(&rado_identity(), 8).unwrap();
        for (m, x) in &t.first_level {
            for (n, y) in &t.first_level {
                if m < n {
                    assert_eq!(game_leq(&Rado, x, y).unwrap().winner, Winner::I);
                }
            }
        }
    }
}
