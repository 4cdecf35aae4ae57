use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use super::{is_increasing, FrontError, InfSet};
use crate::ordinal::OrdinalCNF;

/// A finite subset of ω written in increasing order.
pub type FrontElement = Vec<u64>;

/// Where a finite increasing sequence sits relative to a front.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Located {
    /// The first `l` entries form a member.
    Member(usize),
    /// No prefix is a member, but the sequence can still be extended to one.
    Interior,
    /// No prefix is a member and no extension is.
    Outside,
}

/// Classification of a node: a member, a proper prefix of a member (an
/// interior node of `T(F)`), or neither.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeClass {
    Member,
    Interior,
    Outside,
}

type CutFn = Arc<dyn Fn(&[u64]) -> bool + Send + Sync>;
type IndexMap = Arc<dyn Fn(usize) -> usize + Send + Sync>;

/// Symbolic description of a front, independent of its base.
///
/// Every schema decides membership of a finite increasing sequence without
/// looking at the base; a [`Front`] intersects it with `[base]^{<ω}`.
#[derive(Clone)]
pub enum Schema {
    /// `{∅}`.
    Trivial,
    /// `[X]^k`, `k ≥ 1`.
    Uniform(usize),
    /// `{s | 1 + min s = |s|}`.
    Schreier,
    /// `Seq_n F_n`: `{n} ∪ t` with `t` in the ray schema at `n`.
    Seq(Arc<SeqSchema>),
    /// The ray `{s | {n} ∪ s ∈ F}` of a front without a named ray rule.
    Ray(Arc<Front>, u64),
    /// The minimal nodes of `T(parent)` satisfying `cut`. Members of the
    /// parent always count as cut.
    Collapsed { parent: Arc<Front>, cut: CutFn },
    /// Sequences whose entries at positions `index(0) < index(1) < …` reach a
    /// member of `inner`. With `index(i) = i + 1` this reads a front along
    /// the shift.
    Transport {
        inner: Arc<Front>,
        index: IndexMap,
        label: Arc<str>,
    },
    /// Minimal sequences located in every part.
    Join(Arc<[Front]>),
    /// An arbitrary finite family, possibly not a front.
    Family(Arc<BTreeSet<FrontElement>>),
}

/// Ray table of a `Seq` schema.
#[derive(Clone)]
pub struct SeqSchema {
    pub rays: BTreeMap<u64, Schema>,
    pub default: Schema,
    pub rank: OrdinalCNF,
}

/// Cap on prefix consumption for schemas without a closed-form bound.
const STEP_CAP: usize = 1 << 12;

/// Rays inspected when validating a declared rank.
const RANK_SAMPLES: usize = 16;

impl Schema {
    pub fn uniform(k: usize) -> Self {
        if k == 0 {
            Schema::Trivial
        } else {
            Schema::Uniform(k)
        }
    }

    pub fn name(&self) -> String {
        match self {
            Schema::Trivial => "trivial".into(),
            Schema::Uniform(k) => format!("uniform:{k}"),
            Schema::Schreier => "schreier".into(),
            Schema::Seq(_) => "seq".into(),
            Schema::Ray(f, n) => format!("ray({}, {n})", f.schema.name()),
            Schema::Collapsed { parent, .. } => format!("collapsed({})", parent.schema.name()),
            Schema::Transport { label, .. } => format!("transport({label})"),
            Schema::Join(parts) => {
                let names: Vec<_> = parts.iter().map(|p| p.schema.name()).collect();
                format!("join({})", names.join(", "))
            }
            Schema::Family(_) => "family".into(),
        }
    }

    /// Locates an increasing sequence, assumed to lie in the base.
    pub fn locate(&self, s: &[u64]) -> Located {
        match self {
            Schema::Trivial => Located::Member(0),
            Schema::Uniform(k) => {
                if s.len() >= *k {
                    Located::Member(*k)
                } else {
                    Located::Interior
                }
            }
            Schema::Schreier => match s.first() {
                Some(&a) if s.len() as u64 > a => Located::Member(a as usize + 1),
                _ => Located::Interior,
            },
            Schema::Seq(seq) => match s.split_first() {
                None => Located::Interior,
                Some((n, rest)) => match seq.ray(*n).locate(rest) {
                    Located::Member(l) => Located::Member(l + 1),
                    other => other,
                },
            },
            Schema::Ray(front, n) => {
                let mut t = Vec::with_capacity(s.len() + 1);
                t.push(*n);
                t.extend_from_slice(s);
                match front.locate(&t) {
                    Located::Member(0) => Located::Outside,
                    Located::Member(l) => Located::Member(l - 1),
                    other => other,
                }
            }
            Schema::Collapsed { parent, cut } => {
                for i in 0..=s.len() {
                    let p = &s[..i];
                    match parent.locate(p) {
                        Located::Outside => return Located::Outside,
                        Located::Member(l) if l < i => return Located::Outside,
                        Located::Member(_) => return Located::Member(i),
                        Located::Interior if cut(p) => return Located::Member(i),
                        Located::Interior => {}
                    }
                }
                Located::Interior
            }
            Schema::Transport { inner, index, .. } => {
                let v: Vec<u64> = (0..)
                    .map(|i| index(i))
                    .take_while(|&j| j < s.len())
                    .map(|j| s[j])
                    .collect();
                match inner.locate(&v) {
                    Located::Member(0) => Located::Member(0),
                    Located::Member(l) => Located::Member(index(l - 1) + 1),
                    other => other,
                }
            }
            Schema::Join(parts) => {
                let mut at = Some(0);
                for part in parts.iter() {
                    match part.locate(s) {
                        Located::Outside => return Located::Outside,
                        Located::Member(l) => at = at.map(|a: usize| a.max(l)),
                        Located::Interior => at = None,
                    }
                }
                at.map_or(Located::Interior, Located::Member)
            }
            Schema::Family(members) => {
                if let Some(l) = (0..=s.len()).find(|&l| members.contains(&s[..l])) {
                    return Located::Member(l);
                }
                let extends = members
                    .range(s.to_vec()..)
                    .next()
                    .is_some_and(|m| m.len() > s.len() && m.starts_with(s));
                if extends {
                    Located::Interior
                } else {
                    Located::Outside
                }
            }
        }
    }

    /// Prefix length after which `front_step` must have found a member.
    fn step_bound(&self, y: &dyn Fn(usize) -> u64) -> Option<usize> {
        match self {
            Schema::Trivial => Some(0),
            Schema::Uniform(k) => Some(*k),
            Schema::Schreier => Some(y(0) as usize + 1),
            Schema::Seq(seq) => {
                let n = y(0);
                seq.ray(n).step_bound(&|i| y(i + 1)).map(|b| b + 1)
            }
            Schema::Ray(front, n) => {
                let n = *n;
                front
                    .schema
                    .step_bound(&|i| if i == 0 { n } else { y(i - 1) })
                    .map(|b| b.saturating_sub(1))
            }
            Schema::Collapsed { parent, .. } => parent.schema.step_bound(y),
            Schema::Family(members) => members.iter().map(Vec::len).max(),
            Schema::Transport { .. } | Schema::Join(_) => None,
        }
    }

    fn rank_on(&self, base: &InfSet) -> Result<OrdinalCNF, FrontError> {
        match self {
            Schema::Trivial => Ok(OrdinalCNF::zero()),
            Schema::Uniform(k) => Ok(OrdinalCNF::finite(*k as u64)),
            Schema::Schreier => Ok(OrdinalCNF::omega()),
            Schema::Seq(seq) => seq.validate_rank(base),
            other => Err(FrontError::NotRankable(other.name())),
        }
    }
}

impl SeqSchema {
    pub fn ray(&self, n: u64) -> &Schema {
        self.rays.get(&n).unwrap_or(&self.default)
    }

    /// Checks the declared rank against sampled rays: each sampled ray has
    /// smaller rank, and the samples reach the declared rank in the sense of
    /// `rk F = sup (rk F_n + 1)`. A successor `β + 1` needs a sampled ray of
    /// rank `β`; a limit needs a sampled ray at least as large as the limit
    /// with one copy of its last term removed.
    fn validate_rank(&self, base: &InfSet) -> Result<OrdinalCNF, FrontError> {
        let declared = &self.rank;
        if declared.is_zero() {
            return Err(FrontError::RankInconsistent(
                "a Seq front has positive rank".into(),
            ));
        }
        let mut samples: BTreeSet<u64> = base.prefix(RANK_SAMPLES).into_iter().collect();
        samples.extend(self.rays.keys().copied().filter(|&n| base.contains(n)));
        let mut best = OrdinalCNF::zero();
        for n in samples {
            let r = self.ray(n).rank_on(&base.after(n))?;
            if &r >= declared {
                return Err(FrontError::RankInconsistent(format!(
                    "ray at {n} has rank {r}, not below the declared {declared}"
                )));
            }
            best = best.max(r);
        }
        let reached = match declared.pred() {
            Some(beta) => best == beta,
            None => {
                let d = (0..)
                    .find(|&p| declared.coefficient(p) > 0)
                    .expect("nonzero");
                let mut high_first = declared.coefficients();
                let len = high_first.len();
                high_first[len - 1 - d] -= 1;
                best >= OrdinalCNF::from_coefficients(&high_first)
            }
        };
        if !reached {
            return Err(FrontError::RankInconsistent(format!(
                "sampled rays reach only {best}, too small for the declared {declared}"
            )));
        }
        Ok(declared.clone())
    }
}

impl PartialEq for Schema {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Schema::Trivial, Schema::Trivial) | (Schema::Schreier, Schema::Schreier) => true,
            (Schema::Uniform(a), Schema::Uniform(b)) => a == b,
            (Schema::Seq(a), Schema::Seq(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.rays == b.rays && a.default == b.default && a.rank == b.rank)
            }
            (Schema::Ray(a, m), Schema::Ray(b, n)) => Arc::ptr_eq(a, b) && m == n,
            (Schema::Collapsed { cut: a, .. }, Schema::Collapsed { cut: b, .. }) => {
                Arc::ptr_eq(a, b)
            }
            (Schema::Transport { index: a, .. }, Schema::Transport { index: b, .. }) => {
                Arc::ptr_eq(a, b)
            }
            (Schema::Join(a), Schema::Join(b)) => Arc::ptr_eq(a, b),
            (Schema::Family(a), Schema::Family(b)) => a == b,
            _ => false,
        }
    }
}

impl fmt::Debug for Schema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Outcome of reading a member off an infinite set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub member: FrontElement,
    /// Number of elements of the infinite set that were consumed.
    pub modulus: usize,
}

/// A front: a schema together with the infinite set it lives on.
#[derive(Clone)]
pub struct Front {
    schema: Schema,
    base: InfSet,
}

impl Front {
    pub fn new(schema: Schema, base: InfSet) -> Self {
        Front { schema, base }
    }

    pub fn trivial(base: InfSet) -> Self {
        Front::new(Schema::Trivial, base)
    }

    /// `[base]^k`; `k = 0` gives the trivial front.
    pub fn uniform(k: usize, base: InfSet) -> Self {
        Front::new(Schema::uniform(k), base)
    }

    pub fn schreier(base: InfSet) -> Self {
        Front::new(Schema::Schreier, base)
    }

    /// `Seq_{n ∈ base}` of the given ray schemas, with a declared rank.
    pub fn seq(
        rays: BTreeMap<u64, Schema>,
        default: Schema,
        rank: OrdinalCNF,
        base: InfSet,
    ) -> Self {
        Front::new(
            Schema::Seq(Arc::new(SeqSchema {
                rays,
                default,
                rank,
            })),
            base,
        )
    }

    /// A raw finite family. Only meaningful as input to `front_verify`.
    pub fn family(members: Vec<FrontElement>, base: InfSet) -> Result<Self, FrontError> {
        if let Some(m) = members.iter().find(|m| !is_increasing(m)) {
            return Err(FrontError::NotIncreasing(m.clone()));
        }
        Ok(Front::new(
            Schema::Family(Arc::new(members.into_iter().collect())),
            base,
        ))
    }

    pub fn schema(&self) -> &Schema {
        &self.schema
    }

    pub fn base(&self) -> &InfSet {
        &self.base
    }

    pub fn is_trivial(&self) -> bool {
        self.schema.locate(&[]) == Located::Member(0)
    }

    pub fn locate(&self, s: &[u64]) -> Located {
        if !is_increasing(s) || s.iter().any(|&x| !self.base.contains(x)) {
            return Located::Outside;
        }
        self.schema.locate(s)
    }

    pub fn classify(&self, s: &[u64]) -> NodeClass {
        match self.locate(s) {
            Located::Member(l) if l == s.len() => NodeClass::Member,
            Located::Member(_) | Located::Outside => NodeClass::Outside,
            Located::Interior => NodeClass::Interior,
        }
    }

    pub fn member(&self, s: &[u64]) -> bool {
        self.classify(s) == NodeClass::Member
    }

    /// `s ∈ T(F)`: a prefix of some member.
    pub fn in_tree(&self, s: &[u64]) -> bool {
        self.classify(s) != NodeClass::Outside
    }

    /// The unique member that is an initial segment of `y`.
    pub fn step(&self, y: &InfSet) -> Result<Step, FrontError> {
        let bound = self.schema.step_bound(&|i| y.nth(i)).unwrap_or(STEP_CAP);
        let mut prefix = Vec::new();
        loop {
            match self.schema.locate(&prefix) {
                Located::Member(l) => {
                    prefix.truncate(l);
                    return Ok(Step {
                        modulus: prefix.len(),
                        member: prefix,
                    });
                }
                Located::Interior if prefix.len() < bound => {
                    let x = y.nth(prefix.len());
                    if !self.base.contains(x) {
                        return Err(FrontError::NotInBase(x));
                    }
                    prefix.push(x);
                }
                _ => return Err(FrontError::NoMemberWithinBound { bound, prefix }),
            }
        }
    }

    /// The ray `F_n = {s | {n} ∪ s ∈ F}` as a front on `base / n`.
    pub fn ray(&self, n: u64) -> Result<Front, FrontError> {
        if self.is_trivial() {
            return Err(FrontError::TrivialHasNoRays);
        }
        if !self.base.contains(n) {
            return Err(FrontError::NotInBase(n));
        }
        let schema = match &self.schema {
            Schema::Uniform(k) => Schema::uniform(k - 1),
            Schema::Schreier => Schema::uniform(n as usize),
            Schema::Seq(seq) => seq.ray(n).clone(),
            _ => Schema::Ray(Arc::new(self.clone()), n),
        };
        Ok(Front::new(schema, self.base.after(n)))
    }

    /// `F|Z = {s ∈ F | s ⊆ Z}` on `Z`. Inclusion of `Z` in the base is
    /// checked on a finite prefix of `Z`.
    pub fn restrict(&self, z: &InfSet) -> Result<Front, FrontError> {
        z.prefix_subset_of(&self.base, 64)
            .map_err(FrontError::NotSubsetOfBase)?;
        Ok(Front::new(self.schema.clone(), z.clone()))
    }

    pub fn rank(&self) -> Result<OrdinalCNF, FrontError> {
        self.schema.rank_on(&self.base)
    }

    /// All members whose entries come from `elements` (sorted), in
    /// lexicographic order.
    pub fn members_within(&self, elements: &[u64]) -> Vec<FrontElement> {
        let elems: Vec<u64> = elements
            .iter()
            .copied()
            .filter(|&x| self.base.contains(x))
            .collect();
        let mut out = Vec::new();
        self.walk(&elems, &mut Vec::new(), 0, &mut |node, class| {
            if class == NodeClass::Member {
                out.push(node.to_vec());
            }
        });
        out
    }

    /// All members with entries below `n`.
    pub fn members_below(&self, n: u64) -> Vec<FrontElement> {
        self.members_within(&self.base.below(n))
    }

    /// Preorder walk of `T(F)` restricted to `elems`, which must be sorted
    /// and inside the base.
    pub(crate) fn walk(
        &self,
        elems: &[u64],
        prefix: &mut Vec<u64>,
        from: usize,
        visit: &mut dyn FnMut(&[u64], NodeClass),
    ) {
        let class = match self.schema.locate(prefix) {
            Located::Member(l) if l == prefix.len() => NodeClass::Member,
            Located::Interior => NodeClass::Interior,
            _ => return,
        };
        visit(prefix, class);
        if class == NodeClass::Interior {
            for i in from..elems.len() {
                prefix.push(elems[i]);
                self.walk(elems, prefix, i + 1, visit);
                prefix.pop();
            }
        }
    }

    /// Members `t` with `s ◁ t` and entries in `elements` (sorted): the
    /// members that are prefixes of `s ∖ {min s}` together with those
    /// extending it by entries above `max s`.
    pub fn shift_successors(&self, s: &[u64], elements: &[u64]) -> Vec<FrontElement> {
        let Some((_, rest)) = s.split_first() else {
            // ∅ ◁ t iff t = ∅ or min t > 0.
            let fresh: Vec<u64> = elements.iter().copied().filter(|&x| x > 0).collect();
            return self.members_within(&fresh);
        };
        let mut out: Vec<FrontElement> = (0..rest.len())
            .map(|l| rest[..l].to_vec())
            .filter(|p| self.member(p))
            .collect();
        let top = *s.last().expect("nonempty");
        let above: Vec<u64> = elements
            .iter()
            .copied()
            .filter(|&x| x > top && self.base.contains(x))
            .collect();
        if rest.iter().all(|&x| self.base.contains(x)) {
            let mut prefix = rest.to_vec();
            self.walk(&above, &mut prefix, 0, &mut |node, class| {
                if class == NodeClass::Member {
                    out.push(node.to_vec());
                }
            });
        }
        out
    }

    /// The front read along a continuous map on infinite sets: `Y` is sent
    /// to `(y_{index(0)}, y_{index(1)}, …)`, and members are the shortest
    /// prefixes whose image reaches a member of `self`.
    pub fn transport(
        &self,
        label: impl Into<String>,
        index: impl Fn(usize) -> usize + Send + Sync + 'static,
    ) -> Front {
        let schema = Schema::Transport {
            inner: Arc::new(self.clone()),
            index: Arc::new(index),
            label: label.into().into(),
        };
        Front::new(schema, self.base.clone())
    }

    /// Minimal sequences located in every part, on the base of the first.
    pub fn join(parts: Vec<Front>) -> Front {
        let base = parts.first().map_or_else(InfSet::omega, |p| p.base.clone());
        Front::new(Schema::Join(parts.into()), base)
    }

    /// The front of minimal nodes satisfying `cut`; members always count as
    /// cut.
    pub fn collapse(&self, cut: impl Fn(&[u64]) -> bool + Send + Sync + 'static) -> Front {
        let schema = Schema::Collapsed {
            parent: Arc::new(self.clone()),
            cut: Arc::new(cut),
        };
        let collapsed = Front::new(schema, self.base.clone());
        if collapsed.is_trivial() {
            Front::trivial(self.base.clone())
        } else {
            collapsed
        }
    }
}

impl fmt::Display for Front {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.schema.name(), self.base)
    }
}

impl fmt::Debug for Front {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Front({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn omega() -> InfSet {
        InfSet::omega()
    }

    #[test]
    fn membership_examples() {
        let s = Front::schreier(omega());
        assert!(!s.member(&[0, 5]));
        assert!(s.member(&[2, 3, 5]));
        assert!(s.member(&[0]));
        assert!(Front::trivial(omega()).member(&[]));
        let u = Front::uniform(2, InfSet::evens());
        assert!(u.member(&[0, 4]));
        assert!(!u.member(&[0, 3]));
        assert!(!u.member(&[4, 0]));
        assert_eq!(u.classify(&[2]), NodeClass::Interior);
        assert_eq!(u.classify(&[2, 4, 6]), NodeClass::Outside);
    }

    #[test]
    fn step_examples() {
        let y = InfSet::parse("[1,3,4]+ap:5,1").unwrap();
        let r = Front::uniform(2, omega()).step(&y).unwrap();
        assert_eq!(
            r,
            Step {
                member: vec![1, 3],
                modulus: 2
            }
        );
        let y = InfSet::parse("[2,3,5,7]+ap:8,1").unwrap();
        assert_eq!(
            Front::schreier(omega()).step(&y).unwrap().member,
            vec![2, 3, 5]
        );
        assert_eq!(
            Front::trivial(omega()).step(&y).unwrap().member,
            Vec::<u64>::new()
        );
        let err = Front::uniform(2, InfSet::evens())
            .step(&omega())
            .unwrap_err();
        assert_eq!(err, FrontError::NotInBase(1));
    }

    #[test]
    fn broken_data_is_detected_by_the_bound() {
        let f = Front::family(vec![vec![0, 1]], omega()).unwrap();
        assert!(matches!(
            f.step(&InfSet::odds()),
            Err(FrontError::NoMemberWithinBound { .. })
        ));
    }

    #[test]
    fn ray_examples() {
        let s = Front::schreier(omega());
        let r = s.ray(3).unwrap();
        assert_eq!(r.schema(), &Schema::Uniform(3));
        assert_eq!(r.base().min(), 4);
        let u = Front::uniform(2, omega()).ray(5).unwrap();
        assert_eq!(u.schema(), &Schema::Uniform(1));
        assert_eq!(u.base().min(), 6);
        assert_eq!(
            Front::trivial(omega()).ray(0).unwrap_err(),
            FrontError::TrivialHasNoRays
        );
        assert_eq!(
            Front::uniform(1, InfSet::evens()).ray(3).unwrap_err(),
            FrontError::NotInBase(3)
        );
        assert!(Front::uniform(1, omega()).ray(3).unwrap().is_trivial());
    }

    #[test]
    fn generic_ray_matches_definition() {
        let f = Front::family(vec![vec![0, 1], vec![0, 2, 3], vec![1]], omega()).unwrap();
        let r = f.ray(0).unwrap();
        assert!(r.member(&[1]) && r.member(&[2, 3]) && !r.member(&[2]));
        assert_eq!(r.classify(&[2]), NodeClass::Interior);
    }

    #[test]
    fn restrict_examples() {
        let u = Front::uniform(2, omega())
            .restrict(&InfSet::evens())
            .unwrap();
        assert!(u.member(&[2, 4]) && !u.member(&[2, 3]));
        let pow2 = InfSet::custom("powers of two", |i| 1 << i);
        let s = Front::schreier(omega()).restrict(&pow2).unwrap();
        assert!(s.member(&[1, 2]) && s.member(&[2, 4, 8]) && !s.member(&[2, 3, 4]));
        assert_eq!(
            Front::uniform(2, InfSet::evens())
                .restrict(&omega())
                .unwrap_err(),
            FrontError::NotSubsetOfBase(1)
        );
    }

    #[test]
    fn rank_examples() {
        assert_eq!(
            Front::uniform(4, omega()).rank().unwrap(),
            OrdinalCNF::finite(4)
        );
        assert_eq!(
            Front::schreier(omega()).rank().unwrap(),
            OrdinalCNF::omega()
        );
        assert_eq!(Front::trivial(omega()).rank().unwrap(), OrdinalCNF::zero());
    }

    #[test]
    fn seq_fronts() {
        // Seq of Schreier rays has rank ω + 1.
        let f = Front::seq(
            BTreeMap::new(),
            Schema::Schreier,
            OrdinalCNF::omega().succ(),
            omega(),
        );
        assert_eq!(f.rank().unwrap(), OrdinalCNF::omega().succ());
        assert!(f.member(&[0, 3, 4, 5, 6]) && !f.member(&[0, 3, 4]));
        assert_eq!(f.ray(0).unwrap().schema(), &Schema::Schreier);

        // Rays Uniform(n) reproduce Schreier.
        let rays = (0..40).map(|n| (n, Schema::uniform(n as usize))).collect();
        let g = Front::seq(rays, Schema::Trivial, OrdinalCNF::omega(), omega());
        let s = Front::schreier(omega());
        for m in s.members_below(9) {
            assert!(g.member(&m));
        }
        assert_eq!(g.members_below(9), s.members_below(9));

        // Declaring too small a rank is caught by the ray samples.
        let bad = Front::seq(
            BTreeMap::new(),
            Schema::Uniform(3),
            OrdinalCNF::finite(3),
            omega(),
        );
        assert!(matches!(bad.rank(), Err(FrontError::RankInconsistent(_))));
        let bad = Front::seq(
            BTreeMap::new(),
            Schema::Uniform(3),
            OrdinalCNF::finite(7),
            omega(),
        );
        assert!(matches!(bad.rank(), Err(FrontError::RankInconsistent(_))));
        let bad = Front::seq(
            BTreeMap::new(),
            Schema::Uniform(3),
            OrdinalCNF::omega(),
            omega(),
        );
        assert!(bad.rank().is_ok());
        let bad = Front::seq(
            BTreeMap::new(),
            Schema::Uniform(3),
            OrdinalCNF::from_coefficients(&[2, 0]),
            omega(),
        );
        assert!(matches!(bad.rank(), Err(FrontError::RankInconsistent(_))));
    }

    #[test]
    fn members_enumeration() {
        let u = Front::uniform(2, omega());
        let m = u.members_below(4);
        assert_eq!(
            m,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(
            Front::trivial(omega()).members_below(5),
            vec![Vec::<u64>::new()]
        );
    }

    #[test]
    fn transport_along_shift() {
        let u = Front::uniform(1, omega());
        let shifted = u.transport("shift", |i| i + 1);
        assert!(shifted.member(&[3, 5]));
        assert_eq!(shifted.classify(&[3]), NodeClass::Interior);
        let both = Front::join(vec![u.clone(), shifted]);
        assert!(both.member(&[0, 1]) && !both.member(&[0]));
        let evens = u.transport("double", |i| 2 * i);
        assert!(evens.member(&[4]));
        let y = InfSet::parse("[1,2,9]+omega").unwrap();
        let u2 = Front::uniform(2, omega()).transport("double", |i| 2 * i);
        assert_eq!(u2.step(&y).unwrap().member, vec![1, 2, 9]);
    }

    #[test]
    fn collapse_cuts() {
        let u = Front::uniform(2, omega());
        let c = u.collapse(|s| s.len() == 1 && s[0] % 2 == 0);
        assert!(c.member(&[0]) && c.member(&[1, 5]) && !c.member(&[0, 5]));
        assert!(u.collapse(|_| true).is_trivial());
    }

    #[test]
    fn shift_successors_match_relation() {
        use super::super::shift_rel;
        let fronts = [
            Front::uniform(2, omega()),
            Front::schreier(omega()),
            Front::uniform(1, omega()),
        ];
        let elems: Vec<u64> = (0..7).collect();
        for f in &fronts {
            let ms = f.members_within(&elems);
            for s in &ms {
                let mut fast = f.shift_successors(s, &elems);
                fast.sort();
                let mut slow: Vec<_> = ms.iter().filter(|t| shift_rel(s, t)).cloned().collect();
                slow.sort();
                assert_eq!(fast, slow, "{f} at {s:?}");
            }
        }
    }
}
