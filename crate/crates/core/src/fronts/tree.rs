use serde::Serialize;

use super::{Front, FrontElement, Located};
use crate::ordinal::OrdinalCNF;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeNode {
    pub node: FrontElement,
    pub member: bool,
    /// `ρ_T` at the node: the rank of the residual front
    /// `{t | node ∪ t ∈ F}` when the schema has a known rank, otherwise the
    /// recursion evaluated on the truncated tree.
    pub rank: OrdinalCNF,
    pub rank_exact: bool,
    /// Interior node with no child inside the window.
    pub cut_by_window: bool,
}

/// `T(F)` restricted to entries below `window`, in preorder.
#[derive(Debug, Clone, Serialize)]
pub struct FrontTree {
    pub window: u64,
    pub nodes: Vec<TreeNode>,
}

impl FrontTree {
    pub fn get(&self, s: &[u64]) -> Option<&TreeNode> {
        self.nodes.iter().find(|n| n.node == s)
    }

    pub fn root(&self) -> &TreeNode {
        &self.nodes[0]
    }
}

/// Builds the truncation of `T(F)` to the base elements below `window`.
pub fn tree_of_front(front: &Front, window: u64) -> FrontTree {
    let elems = front.base().below(window);
    let mut nodes = Vec::new();
    build(
        front,
        Some(front.clone()),
        &elems,
        &mut Vec::new(),
        0,
        &mut nodes,
    );
    FrontTree { window, nodes }
}

/// Appends the subtree at `prefix` and returns its index. `residual` is the
/// iterated ray of the front along `prefix`, when it could be formed.
fn build(
    front: &Front,
    residual: Option<Front>,
    elems: &[u64],
    prefix: &mut Vec<u64>,
    from: usize,
    out: &mut Vec<TreeNode>,
) -> Option<usize> {
    let class = front.schema().locate(prefix);
    let member = match class {
        Located::Member(l) if l == prefix.len() => true,
        Located::Interior => false,
        _ => return None,
    };
    let at = out.len();
    out.push(TreeNode {
        node: prefix.clone(),
        member,
        rank: OrdinalCNF::zero(),
        rank_exact: true,
        cut_by_window: false,
    });
    if member {
        return Some(at);
    }
    let mut sup = OrdinalCNF::zero();
    let mut children = 0;
    for i in from..elems.len() {
        let n = elems[i];
        let child_residual = residual.as_ref().and_then(|r| r.ray(n).ok());
        prefix.push(n);
        if let Some(c) = build(front, child_residual, elems, prefix, i + 1, out) {
            children += 1;
            sup = sup.max(out[c].rank.succ());
        }
        prefix.pop();
    }
    let exact = residual.as_ref().and_then(|r| r.rank().ok());
    let node = &mut out[at];
    node.cut_by_window = children == 0;
    match exact {
        Some(r) => node.rank = r,
        None => {
            node.rank = sup;
            node.rank_exact = false;
        }
    }
    Some(at)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fronts::InfSet;

    #[test]
    fn uniform_two() {
        let t = tree_of_front(&Front::uniform(2, InfSet::omega()), 4);
        assert_eq!(t.root().rank, OrdinalCNF::finite(2));
        assert_eq!(t.get(&[0]).unwrap().rank, OrdinalCNF::finite(1));
        assert_eq!(t.get(&[0, 3]).unwrap().rank, OrdinalCNF::zero());
        assert!(t.get(&[3]).unwrap().cut_by_window);
        assert_eq!(t.nodes.len(), 1 + 4 + 6);
    }

    #[test]
    fn trivial() {
        let t = tree_of_front(&Front::trivial(InfSet::omega()), 8);
        assert_eq!(t.nodes.len(), 1);
        assert!(t.root().member);
        assert_eq!(t.root().rank, OrdinalCNF::zero());
    }

    #[test]
    fn schreier_nodes_carry_ray_ranks() {
        let t = tree_of_front(&Front::schreier(InfSet::omega()), 4);
        assert_eq!(t.get(&[2]).unwrap().rank, OrdinalCNF::finite(2));
        assert_eq!(t.get(&[2, 3]).unwrap().rank, OrdinalCNF::finite(1));
        assert_eq!(t.root().rank, OrdinalCNF::omega());
        assert!(t.get(&[0]).unwrap().member);
    }

    #[test]
    fn unranked_schemas_fall_back_to_the_truncation() {
        let f = Front::family(vec![vec![0, 1], vec![0, 2, 3], vec![1]], InfSet::omega()).unwrap();
        let t = tree_of_front(&f, 4);
        assert_eq!(t.root().rank, OrdinalCNF::finite(3));
        assert!(!t.root().rank_exact);
    }
}
