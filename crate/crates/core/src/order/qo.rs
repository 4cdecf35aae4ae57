//! Quasi-order representations.
//!
//! A [`FiniteQO`] stores its relation as a row-major bit matrix over an
//! ordered element list. Infinite orders such as Rado's poset or `(ω, ≤)`
//! implement [`QuasiOrder`] directly with a decidable comparison, and a
//! [`CodedQO`] wraps arbitrary predicates whose laws can only be checked on
//! finite windows.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::OrderError;

/// Bound for anything that can be an element of a quasi-order.
pub trait Element: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {}

impl<T> Element for T where T: Clone + Ord + Hash + Debug + Display + Send + Sync + 'static {}

/// A decidable quasi-order: a carrier predicate and a comparison.
///
/// Implementations are expected to be reflexive and transitive on their
/// carrier. Finite orders enforce this at construction, coded orders can only
/// be checked on samples (see [`CodedQO::validate_window`]).
pub trait QuasiOrder {
    type Elem;

    fn name(&self) -> String;

    fn contains(&self, x: &Self::Elem) -> bool;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool;
}

impl<Q: QuasiOrder + ?Sized> QuasiOrder for &Q {
    type Elem = Q::Elem;

    fn name(&self) -> String {
        (**self).name()
    }

    fn contains(&self, x: &Self::Elem) -> bool {
        (**self).contains(x)
    }

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        (**self).leq(a, b)
    }
}

/// The five relations every quasi-order induces on a pair of elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relations {
    pub leq: bool,
    pub geq: bool,
    pub equiv: bool,
    pub strict: bool,
    pub incomparable: bool,
}

impl Relations {
    pub fn from_comparisons(leq: bool, geq: bool) -> Self {
        Relations {
            leq,
            geq,
            equiv: leq && geq,
            strict: leq && !geq,
            incomparable: !leq && !geq,
        }
    }
}

/// Computes `≤`, `≥`, `≡`, `<` and `|` for `a`, `b`.
pub fn derived_relations<Q>(qo: &Q, a: &Q::Elem, b: &Q::Elem) -> Result<Relations, OrderError>
where
    Q: QuasiOrder,
    Q::Elem: Debug,
{
    for x in [a, b] {
        if !qo.contains(x) {
            return Err(OrderError::NotInCarrier(format!("{x:?}")));
        }
    }
    Ok(Relations::from_comparisons(qo.leq(a, b), qo.leq(b, a)))
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    fn set(&mut self, i: usize, j: usize) {
        self.bits[i * self.words + j / 64] |= 1 << (j % 64);
    }

    fn get(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.words + j / 64] >> (j % 64) & 1 == 1
    }

    fn row(&self, i: usize) -> &[u64] {
        &self.bits[i * self.words..(i + 1) * self.words]
    }

    /// First column set in row `q` but not in row `p`.
    fn first_missing(&self, p: usize, q: usize) -> Option<usize> {
        let (rp, rq) = (self.row(p), self.row(q));
        rp.iter().zip(rq).enumerate().find_map(|(w, (a, b))| {
            let diff = b & !a;
            (diff != 0).then(|| w * 64 + diff.trailing_zeros() as usize)
        })
    }
}

/// A quasi-order on finitely many elements, stored as a bit matrix.
#[derive(Clone)]
pub struct FiniteQO<T> {
    name: String,
    elements: Vec<T>,
    index: BTreeMap<T, usize>,
    matrix: BitMatrix,
    fingerprint: u64,
}

impl<T: Element> FiniteQO<T> {
    /// Builds a quasi-order from explicit `(a, b)` pairs meaning `a ≤ b`.
    ///
    /// The pair list must already be reflexive and transitive; the first
    /// violating element (for reflexivity) or triple (for transitivity) in
    /// element order is reported otherwise.
    pub fn validate(elements: Vec<T>, pairs: &[(T, T)]) -> Result<Self, OrderError> {
        let index = Self::index_of(&elements)?;
        let mut matrix = BitMatrix::new(elements.len());
        for (a, b) in pairs {
            let i = *index
                .get(a)
                .ok_or_else(|| OrderError::UnknownElement(a.to_string()))?;
            let j = *index
                .get(b)
                .ok_or_else(|| OrderError::UnknownElement(b.to_string()))?;
            matrix.set(i, j);
        }
        Self::finish("finite".into(), elements, index, matrix)
    }

    /// Builds a quasi-order by evaluating `leq` on every pair of elements.
    pub fn from_relation(
        name: impl Into<String>,
        elements: Vec<T>,
        leq: impl Fn(&T, &T) -> bool,
    ) -> Result<Self, OrderError> {
        let index = Self::index_of(&elements)?;
        let mut matrix = BitMatrix::new(elements.len());
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                if leq(a, b) {
                    matrix.set(i, j);
                }
            }
        }
        Self::finish(name.into(), elements, index, matrix)
    }

    fn index_of(elements: &[T]) -> Result<BTreeMap<T, usize>, OrderError> {
        let mut index = BTreeMap::new();
        for (i, e) in elements.iter().enumerate() {
            if index.insert(e.clone(), i).is_some() {
                return Err(OrderError::DuplicateElement(e.to_string()));
            }
        }
        Ok(index)
    }

    fn finish(
        name: String,
        elements: Vec<T>,
        index: BTreeMap<T, usize>,
        matrix: BitMatrix,
    ) -> Result<Self, OrderError> {
        let n = elements.len();
        if let Some(p) = (0..n).find(|&p| !matrix.get(p, p)) {
            return Err(OrderError::MissingReflexive(elements[p].to_string()));
        }
        for p in 0..n {
            for q in 0..n {
                if p != q && matrix.get(p, q) {
                    if let Some(r) = matrix.first_missing(p, q) {
                        return Err(OrderError::MissingTransitive(
                            elements[p].to_string(),
                            elements[q].to_string(),
                            elements[r].to_string(),
                        ));
                    }
                }
            }
        }
        let mut h = DefaultHasher::new();
        elements.hash(&mut h);
        matrix.hash(&mut h);
        Ok(FiniteQO {
            name,
            fingerprint: h.finish(),
            elements,
            index,
            matrix,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn position(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn leq_index(&self, i: usize, j: usize) -> bool {
        self.matrix.get(i, j)
    }

    /// Identifies the underlying order; downsets remember it so that mixing
    /// bases can be detected.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    /// All `(a, b)` with `a ≤ b`, in row-major order.
    pub fn pairs(&self) -> Vec<(T, T)> {
        let n = self.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if self.matrix.get(i, j) {
                    out.push((self.elements[i].clone(), self.elements[j].clone()));
                }
            }
        }
        out
    }

    /// No two distinct elements are equivalent.
    pub fn is_partial_order(&self) -> bool {
        self.antisymmetry_violation().is_none()
    }

    fn antisymmetry_violation(&self) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .find(|&(i, j)| self.matrix.get(i, j) && self.matrix.get(j, i))
    }

    /// Renames every element; `f` must be injective.
    pub fn relabel<U: Element>(&self, f: impl Fn(&T) -> U) -> Result<FiniteQO<U>, OrderError> {
        let elements: Vec<U> = self.elements.iter().map(&f).collect();
        let index = FiniteQO::index_of(&elements)?;
        Ok(FiniteQO {
            name: self.name.clone(),
            elements,
            index,
            matrix: self.matrix.clone(),
            fingerprint: self.fingerprint,
        })
    }
}

impl<T: Element> QuasiOrder for FiniteQO<T> {
    type Elem = T;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }

    fn leq(&self, a: &T, b: &T) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.matrix.get(i, j),
            _ => false,
        }
    }
}

impl<T: Element> Debug for FiniteQO<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteQO")
            .field("name", &self.name)
            .field("elements", &self.elements)
            .field("pairs", &self.pairs().len())
            .finish()
    }
}

/// Element of a cartesian product.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: Display, B: Display> Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

/// Componentwise order on `P × Q`.
pub fn product_qo<A: Element, B: Element>(
    p: &FiniteQO<A>,
    q: &FiniteQO<B>,
) -> FiniteQO<Pair<A, B>> {
    let elements: Vec<_> = p
        .elements()
        .iter()
        .flat_map(|a| q.elements().iter().map(move |b| Pair(a.clone(), b.clone())))
        .collect();
    FiniteQO::from_relation(format!("{}x{}", p.name, q.name), elements, |x, y| {
        p.leq(&x.0, &y.0) && q.leq(&x.1, &y.1)
    })
    .expect("product of quasi-orders is a quasi-order")
}

/// Element of a sum along a poset: the summand index and the element.
pub type Tagged<P, Q> = Pair<P, Q>;

/// The sum `Σ_{p∈P} Q_p` along a partial order `P`.
///
/// `(p, q) ≤ (p', q')` iff `p = p'` and `q ≤ q'` in `Q_p`, or `p < p'` in `P`.
pub fn sum_along_poset<P: Element, Q: Element>(
    poset: &FiniteQO<P>,
    family: &BTreeMap<P, FiniteQO<Q>>,
) -> Result<FiniteQO<Tagged<P, Q>>, OrderError> {
    if let Some((i, j)) = poset.antisymmetry_violation() {
        return Err(OrderError::NotAPartialOrder(
            poset.elements[i].to_string(),
            poset.elements[j].to_string(),
        ));
    }
    let mut elements = Vec::new();
    for p in poset.elements() {
        let summand = family
            .get(p)
            .ok_or_else(|| OrderError::MissingSummand(p.to_string()))?;
        elements.extend(
            summand
                .elements()
                .iter()
                .map(|q| Pair(p.clone(), q.clone())),
        );
    }
    FiniteQO::from_relation(format!("sum({})", poset.name), elements, |x, y| {
        if x.0 == y.0 {
            family[&x.0].leq(&x.1, &y.1)
        } else {
            poset.leq(&x.0, &y.0)
        }
    })
}

/// `{0 < 1 < … < k-1}`.
pub fn chain(k: u64) -> FiniteQO<u64> {
    FiniteQO::from_relation(format!("chain:{k}"), (0..k).collect(), |a, b| a <= b)
        .expect("chain is a quasi-order")
}

/// `k` pairwise incomparable elements.
pub fn antichain(k: u64) -> FiniteQO<u64> {
    FiniteQO::from_relation(format!("antichain:{k}"), (0..k).collect(), |a, b| a == b)
        .expect("antichain is a quasi-order")
}

/// A two-element set `{lo, hi}` of naturals with `lo < hi`: an element of
/// Rado's poset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RadoPair {
    lo: u64,
    hi: u64,
}

impl RadoPair {
    pub fn new(lo: u64, hi: u64) -> Result<Self, OrderError> {
        if lo < hi {
            Ok(RadoPair { lo, hi })
        } else {
            Err(OrderError::NotAPair(format!("[{lo},{hi}]")))
        }
    }

    pub fn from_slice(s: &[u64]) -> Result<Self, OrderError> {
        match *s {
            [lo, hi] => Self::new(lo, hi),
            _ => Err(OrderError::NotAPair(format!("{s:?}"))),
        }
    }

    pub fn lo(&self) -> u64 {
        self.lo
    }

    pub fn hi(&self) -> u64 {
        self.hi
    }
}

impl Display for RadoPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Rado's order: `{m,n} ≤ {m',n'}` iff `m = m'` and `n ≤ n'`, or `n < m'`.
pub fn rado_cmp(s: RadoPair, t: RadoPair) -> bool {
    (s.lo == t.lo && s.hi <= t.hi) || s.hi < t.lo
}

/// [`rado_cmp`] on raw increasing lists.
pub fn rado_leq(s: &[u64], t: &[u64]) -> Result<bool, OrderError> {
    Ok(rado_cmp(RadoPair::from_slice(s)?, RadoPair::from_slice(t)?))
}

/// Rado's poset on all of `[ω]²`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Rado;

impl Rado {
    /// Restriction to pairs with entries below `n`.
    pub fn window(n: u64) -> FiniteQO<RadoPair> {
        let elements = (0..n)
            .flat_map(|m| (m + 1..n).map(move |k| RadoPair { lo: m, hi: k }))
            .collect();
        FiniteQO::from_relation(format!("rado[0,{n})"), elements, |a, b| rado_cmp(*a, *b))
            .expect("Rado's order is a quasi-order")
    }
}

impl QuasiOrder for Rado {
    type Elem = RadoPair;

    fn name(&self) -> String {
        "rado".into()
    }

    fn contains(&self, x: &RadoPair) -> bool {
        x.lo < x.hi
    }

    fn leq(&self, a: &RadoPair, b: &RadoPair) -> bool {
        rado_cmp(*a, *b)
    }
}

/// `(ω, ≤)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct OmegaLeq;

impl QuasiOrder for OmegaLeq {
    type Elem = u64;

    fn name(&self) -> String {
        "omega-leq".into()
    }

    fn contains(&self, _: &u64) -> bool {
        true
    }

    fn leq(&self, a: &u64, b: &u64) -> bool {
        a <= b
    }
}

/// `(ω, =)`: the infinite antichain.
#[derive(Debug, Clone, Copy, Default)]
pub struct OmegaEq;

impl QuasiOrder for OmegaEq {
    type Elem = u64;

    fn name(&self) -> String {
        "omega-eq".into()
    }

    fn contains(&self, _: &u64) -> bool {
        true
    }

    fn leq(&self, a: &u64, b: &u64) -> bool {
        a == b
    }
}

type Pred<T> = Arc<dyn Fn(&T) -> bool + Send + Sync>;
type Rel<T> = Arc<dyn Fn(&T, &T) -> bool + Send + Sync>;

/// A quasi-order given by decidable predicates on coded values.
#[derive(Clone)]
pub struct CodedQO<T> {
    name: String,
    carrier: Pred<T>,
    leq: Rel<T>,
}

/// Outcome of checking the quasi-order laws on a finite sample.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WindowLawReport {
    /// Number of sampled carrier elements the laws were checked on.
    pub bound: usize,
    pub outside_carrier: Option<String>,
    pub reflexivity_violation: Option<String>,
    pub transitivity_violation: Option<(String, String, String)>,
}

impl WindowLawReport {
    pub fn holds(&self) -> bool {
        self.outside_carrier.is_none()
            && self.reflexivity_violation.is_none()
            && self.transitivity_violation.is_none()
    }
}

impl<T: Debug> CodedQO<T> {
    pub fn new(
        name: impl Into<String>,
        carrier: impl Fn(&T) -> bool + Send + Sync + 'static,
        leq: impl Fn(&T, &T) -> bool + Send + Sync + 'static,
    ) -> Self {
        CodedQO {
            name: name.into(),
            carrier: Arc::new(carrier),
            leq: Arc::new(leq),
        }
    }

    /// Checks reflexivity and transitivity on every element / triple of the
    /// sample. The sample size is echoed as the bound.
    pub fn validate_window(&self, sample: &[T]) -> WindowLawReport {
        let mut report = WindowLawReport {
            bound: sample.len(),
            outside_carrier: None,
            reflexivity_violation: None,
            transitivity_violation: None,
        };
        if let Some(x) = sample.iter().find(|x| !(self.carrier)(x)) {
            report.outside_carrier = Some(format!("{x:?}"));
            return report;
        }
        report.reflexivity_violation = sample
            .iter()
            .find(|x| !(self.leq)(x, x))
            .map(|x| format!("{x:?}"));
        'outer: for p in sample {
            for q in sample {
                if !(self.leq)(p, q) {
                    continue;
                }
                for r in sample {
                    if (self.leq)(q, r) && !(self.leq)(p, r) {
                        report.transitivity_violation =
                            Some((format!("{p:?}"), format!("{q:?}"), format!("{r:?}")));
                        break 'outer;
                    }
                }
            }
        }
        report
    }
}

impl<T> QuasiOrder for CodedQO<T> {
    type Elem = T;

    fn name(&self) -> String {
        self.name.clone()
    }

    fn contains(&self, x: &T) -> bool {
        (self.carrier)(x)
    }

    fn leq(&self, a: &T, b: &T) -> bool {
        (self.leq)(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    fn pairs(xs: &[(&str, &str)]) -> Vec<(String, String)> {
        xs.iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect()
    }

    #[test]
    fn identity_relation_is_an_antichain() {
        let qo = FiniteQO::validate(
            labels(&["a", "b", "c"]),
            &pairs(&[("a", "a"), ("b", "b"), ("c", "c")]),
        )
        .unwrap();
        assert!(!qo.leq(&"a".into(), &"b".into()));
        assert!(qo.is_partial_order());
    }

    #[test]
    fn missing_transitive_pair_is_reported() {
        let err = FiniteQO::validate(
            labels(&["a", "b", "c"]),
            &pairs(&[("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")]),
        )
        .unwrap_err();
        assert_eq!(
            err,
            OrderError::MissingTransitive("a".into(), "b".into(), "c".into())
        );
    }

    #[test]
    fn missing_reflexive_pair_is_reported() {
        let err = FiniteQO::validate(labels(&["a", "b"]), &pairs(&[("a", "a")])).unwrap_err();
        assert_eq!(err, OrderError::MissingReflexive("b".into()));
    }

    #[test]
    fn duplicate_and_unknown_elements() {
        assert!(matches!(
            FiniteQO::validate(labels(&["a", "a"]), &[]),
            Err(OrderError::DuplicateElement(_))
        ));
        assert!(matches!(
            FiniteQO::validate(labels(&["a"]), &pairs(&[("a", "z")])),
            Err(OrderError::UnknownElement(_))
        ));
    }

    #[test]
    fn rado_window_validates_exhaustively() {
        // Every pair over [0,6) re-checked against the displayed two-clause rule.
        let qo = Rado::window(6);
        assert_eq!(qo.len(), 15);
        let pairs = qo.pairs();
        let rebuilt = FiniteQO::validate(qo.elements().to_vec(), &pairs).unwrap();
        assert_eq!(rebuilt.fingerprint(), qo.fingerprint());
    }

    #[test]
    fn rado_examples() {
        assert!(rado_leq(&[0, 1], &[0, 5]).unwrap());
        assert!(rado_leq(&[1, 3], &[4, 9]).unwrap());
        assert!(!rado_leq(&[0, 2], &[1, 3]).unwrap());
        assert!(matches!(
            rado_leq(&[3], &[4, 5]),
            Err(OrderError::NotAPair(_))
        ));
        assert!(matches!(
            rado_leq(&[5, 4], &[4, 5]),
            Err(OrderError::NotAPair(_))
        ));
    }

    #[test]
    fn derived_relations_examples() {
        let c = chain(2);
        let r = derived_relations(&c, &0, &1).unwrap();
        assert!(r.strict && r.leq && !r.geq && !r.equiv);
        let r = derived_relations(&c, &1, &1).unwrap();
        assert!(r.equiv && !r.strict);
        let a = RadoPair::new(0, 2).unwrap();
        let b = RadoPair::new(1, 3).unwrap();
        assert!(derived_relations(&Rado, &a, &b).unwrap().incomparable);
        assert_eq!(
            derived_relations(&c, &0, &7),
            Err(OrderError::NotInCarrier("7".into()))
        );
    }

    #[test]
    fn products() {
        let d = product_qo(&chain(2), &chain(2));
        assert_eq!(d.len(), 4);
        // Diamond: bottom (0,0), top (1,1), two incomparable middles.
        assert!(d.leq(&Pair(0, 0), &Pair(1, 1)));
        assert!(!d.leq(&Pair(0, 1), &Pair(1, 0)));
        assert!(!d.leq(&Pair(1, 0), &Pair(0, 1)));
        assert_eq!(d.pairs().len(), 9);

        let a = product_qo(&antichain(2), &antichain(2));
        assert_eq!(a.pairs().len(), 4);

        let p = chain(3);
        let one = product_qo(&p, &chain(1));
        for x in p.elements() {
            for y in p.elements() {
                assert_eq!(one.leq(&Pair(*x, 0), &Pair(*y, 0)), p.leq(x, y));
            }
        }
    }

    #[test]
    fn sums_along_posets() {
        let fam = |a: FiniteQO<u64>, b: FiniteQO<u64>| BTreeMap::from([(0u64, a), (1u64, b)]);

        let s = sum_along_poset(&antichain(2), &fam(chain(1), chain(1))).unwrap();
        assert_eq!(s.pairs().len(), 2);

        let s = sum_along_poset(&chain(2), &fam(chain(1), chain(1))).unwrap();
        assert!(s.leq(&Pair(0, 0), &Pair(1, 0)));
        assert!(!s.leq(&Pair(1, 0), &Pair(0, 0)));

        let s = sum_along_poset(&chain(2), &fam(antichain(2), antichain(2))).unwrap();
        assert_eq!(s.len(), 4);
        for lo in 0..2 {
            for hi in 0..2 {
                assert!(s.leq(&Pair(0, lo), &Pair(1, hi)));
                assert!(!s.leq(&Pair(1, hi), &Pair(0, lo)));
            }
        }
        assert!(!s.leq(&Pair(0, 0), &Pair(0, 1)));

        let full = FiniteQO::from_relation("full", vec![0u64, 1], |_, _| true).unwrap();
        assert!(matches!(
            sum_along_poset(&full, &fam(chain(1), chain(1))),
            Err(OrderError::NotAPartialOrder(_, _))
        ));
    }

    #[test]
    fn coded_window_validation() {
        let rado = CodedQO::new(
            "rado",
            |s: &Vec<u64>| s.len() == 2 && s[0] < s[1],
            |a: &Vec<u64>, b: &Vec<u64>| rado_leq(a, b).unwrap_or(false),
        );
        let sample: Vec<Vec<u64>> = (0..6)
            .flat_map(|m| (m + 1..6).map(move |n| vec![m, n]))
            .collect();
        let r = rado.validate_window(&sample);
        assert!(r.holds());
        assert_eq!(r.bound, 15);

        let bogus = CodedQO::new(
            "succ",
            |_: &u64| true,
            |a: &u64, b: &u64| b == a || *b == a + 1,
        );
        let r = bogus.validate_window(&[0, 1, 2]);
        assert_eq!(
            r.transitivity_violation,
            Some(("0".into(), "1".into(), "2".into()))
        );
    }
}
