//! Super-sequences: maps defined on a front.
//!
//! A locally constant multi-sequence `h` on `[X]^∞` is represented by a
//! super-sequence `f` with `h = f^↑`; everything here works on that pair.
//! Universal checks run over a finite window and echo it in their reports.

use std::collections::{BTreeMap, HashMap};
use std::fmt::{self, Debug, Display};
use std::sync::{Arc, Mutex};

use serde::Serialize;
use thiserror::Error;

use crate::fronts::{Front, FrontElement, FrontError, InfSet, NodeClass};
use crate::order::QuasiOrder;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error(transparent)]
    Front(#[from] FrontError),
    #[error("valuation undefined at {0:?}")]
    Undefined(FrontElement),
    #[error("fronts live on different bases: {0} and {1}")]
    DifferentBase(String, String),
    #[error("unknown valuation rule {0:?}")]
    UnknownRule(String),
}

type Valuation<V> = Arc<dyn Fn(&[u64]) -> Option<V> + Send + Sync>;
type RuleFn = dyn Fn(&[u64]) -> Option<Value> + Send + Sync;

/// A map `f : F → E` given by a front and a valuation.
pub struct SuperSeq<V> {
    front: Front,
    valuation: Valuation<V>,
    label: String,
}

impl<V> Clone for SuperSeq<V> {
    fn clone(&self) -> Self {
        SuperSeq {
            front: self.front.clone(),
            valuation: self.valuation.clone(),
            label: self.label.clone(),
        }
    }
}

impl<V> Debug for SuperSeq<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SuperSeq({} on {})", self.label, self.front)
    }
}

/// Result of `f^↑(Y)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Eval<V> {
    pub value: V,
    pub member: FrontElement,
    pub modulus: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SegOrderReport {
    pub holds: bool,
    /// A member of the first front that is not a prefix of any member of the
    /// second.
    pub uncovered: Option<FrontElement>,
    /// `(s, t)` with `s ⊑ t` but different values.
    pub value_mismatch: Option<(FrontElement, FrontElement)>,
    pub window: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpareReport {
    pub spare: bool,
    /// `(s, t)`: `s ⊏ t ∈ F` and every member through `s` has the value of
    /// `t` inside the search window.
    pub witness: Option<(FrontElement, FrontElement)>,
    pub window: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BadnessReport {
    /// Least `(s, t)` with `s ◁ t` and `f(s) ≤ f(t)`, ordered by the largest
    /// entry of `s ∪ t`, then `s`, then `t`.
    pub good_witness: Option<(FrontElement, FrontElement)>,
    pub bad_on_window: bool,
    pub pairs_scanned: usize,
    pub window: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PerfectReport {
    pub perfect: bool,
    /// Least `◁` pair violating the relation, in the witness order of
    /// [`BadnessReport`].
    pub counterexample: Option<(FrontElement, FrontElement)>,
    pub pairs_scanned: usize,
    pub window: u64,
}

/// Values produced by the named valuation rules.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(untagged)]
pub enum Value {
    Nat(u64),
    Set(Vec<u64>),
    Label(String),
}

impl Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Set(s) => {
                let items: Vec<String> = s.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", items.join(","))
            }
            Value::Label(l) => write!(f, "{l}"),
        }
    }
}

/// Upper end (exclusive) of the entries searched below node `s`: `N` at the
/// root, `max s + 1 + N` elsewhere, so every node sees `N` fresh candidates.
fn extension_limit(s: &[u64], window: u64) -> u64 {
    s.last().map_or(window, |&m| m + 1 + window)
}

/// Members extending `s` with entries below [`extension_limit`].
fn extensions(front: &Front, s: &[u64], window: u64) -> Vec<FrontElement> {
    let top = s.last().copied();
    let elems: Vec<u64> = front
        .base()
        .below(extension_limit(s, window))
        .into_iter()
        .filter(|&x| top.is_none_or(|m| x > m))
        .collect();
    let mut out = Vec::new();
    if front.classify(s) == NodeClass::Outside {
        return out;
    }
    front.walk(&elems, &mut s.to_vec(), 0, &mut |node, class| {
        if class == NodeClass::Member {
            out.push(node.to_vec());
        }
    });
    out
}

/// `s ⌢ base / max s`.
fn continue_in_base(front: &Front, s: &[u64]) -> Result<InfSet, FrontError> {
    match s.last() {
        None => Ok(front.base().clone()),
        Some(&m) => InfSet::explicit(s.to_vec(), front.base().after(m)),
    }
}

fn witness_key(s: &[u64], t: &[u64]) -> (u64, FrontElement, FrontElement) {
    let top = s.iter().chain(t).copied().max().unwrap_or(0);
    (top, s.to_vec(), t.to_vec())
}

impl<V: Clone + 'static> SuperSeq<V> {
    pub fn new(
        front: Front,
        label: impl Into<String>,
        valuation: impl Fn(&[u64]) -> Option<V> + Send + Sync + 'static,
    ) -> Self {
        SuperSeq {
            front,
            valuation: Arc::new(valuation),
            label: label.into(),
        }
    }

    /// The constant super-sequence.
    pub fn constant(front: Front, c: V) -> Self
    where
        V: Send + Sync,
    {
        SuperSeq::new(front, "constant", move |_| Some(c.clone()))
    }

    /// A finite table, falling back to `fallback` off the table.
    pub fn from_table(
        front: Front,
        table: BTreeMap<FrontElement, V>,
        fallback: Option<SuperSeq<V>>,
    ) -> Self
    where
        V: Send + Sync,
    {
        SuperSeq::new(front, "table", move |s| {
            table
                .get(s)
                .cloned()
                .or_else(|| fallback.as_ref().and_then(|f| (f.valuation)(s)))
        })
    }

    pub fn front(&self) -> &Front {
        &self.front
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// `f(s)` for a member `s`.
    pub fn value(&self, s: &[u64]) -> Result<V, SeqError> {
        (self.valuation)(s).ok_or_else(|| SeqError::Undefined(s.to_vec()))
    }

    /// The same valuation on a restricted front.
    pub fn restrict(&self, z: &InfSet) -> Result<Self, SeqError> {
        Ok(SuperSeq {
            front: self.front.restrict(z)?,
            valuation: self.valuation.clone(),
            label: self.label.clone(),
        })
    }

    /// Post-composition with a map on values.
    pub fn map<W: Clone + 'static>(
        &self,
        label: impl Into<String>,
        g: impl Fn(V) -> W + Send + Sync + 'static,
    ) -> SuperSeq<W> {
        let v = self.valuation.clone();
        SuperSeq::new(self.front.clone(), label, move |s| v(s).map(&g))
    }

    /// `f^↑(Y) = f(s)` for the member `s ⊏ Y`.
    pub fn eval_up(&self, y: &InfSet) -> Result<Eval<V>, SeqError> {
        let step = self.front.step(y)?;
        Ok(Eval {
            value: self.value(&step.member)?,
            member: step.member,
            modulus: step.modulus,
        })
    }

    fn members(&self, window: u64) -> Vec<FrontElement> {
        self.front.members_below(window)
    }

    fn scan_shift_pairs(
        &self,
        window: u64,
        mut keep: impl FnMut(&V, &V) -> bool,
    ) -> Result<(Option<(FrontElement, FrontElement)>, usize), SeqError> {
        let elems = self.front.base().below(window);
        let mut best: Option<(u64, FrontElement, FrontElement)> = None;
        let mut scanned = 0;
        let mut cache: HashMap<FrontElement, V> = HashMap::new();
        let mut value = |s: &FrontElement| -> Result<V, SeqError> {
            if let Some(v) = cache.get(s) {
                return Ok(v.clone());
            }
            let v = self.value(s)?;
            cache.insert(s.clone(), v.clone());
            Ok(v)
        };
        for s in self.members(window) {
            let fs = value(&s)?;
            for t in self.front.shift_successors(&s, &elems) {
                scanned += 1;
                if keep(&fs, &value(&t)?) {
                    let key = witness_key(&s, &t);
                    if best.as_ref().is_none_or(|b| key < *b) {
                        best = Some(key);
                    }
                }
            }
        }
        Ok((best.map(|(_, s, t)| (s, t)), scanned))
    }

    /// Scans every `◁` pair of members below `window` for `f(s) ≤ f(t)`.
    pub fn badness_check<Q>(&self, qo: &Q, window: u64) -> Result<BadnessReport, SeqError>
    where
        Q: QuasiOrder<Elem = V>,
    {
        let (good_witness, pairs_scanned) = self.scan_shift_pairs(window, |a, b| qo.leq(a, b))?;
        Ok(BadnessReport {
            bad_on_window: good_witness.is_none(),
            good_witness,
            pairs_scanned,
            window,
        })
    }

    /// Checks `f(s) R f(t)` for every `◁` pair of members below `window`.
    pub fn perfect_check(
        &self,
        relation: impl Fn(&V, &V) -> bool,
        window: u64,
    ) -> Result<PerfectReport, SeqError> {
        let (counterexample, pairs_scanned) =
            self.scan_shift_pairs(window, |a, b| !relation(a, b))?;
        Ok(PerfectReport {
            perfect: counterexample.is_none(),
            counterexample,
            pairs_scanned,
            window,
        })
    }
}

impl<V: Clone + PartialEq + Send + Sync + 'static> SuperSeq<V> {
    /// `f ⊑ g`: every member of `F` is a prefix of a member of `G`, and
    /// values agree along prefixes. Checked on members below `window`.
    pub fn seg_order(&self, other: &SuperSeq<V>, window: u64) -> Result<SegOrderReport, SeqError> {
        let (a, b) = (self.front.base(), other.front.base());
        if a.to_string() != b.to_string() && a.prefix(64) != b.prefix(64) {
            return Err(SeqError::DifferentBase(a.to_string(), b.to_string()));
        }
        let uncovered = self
            .members(window)
            .into_iter()
            .find(|s| other.front.classify(s) == NodeClass::Outside);
        let mut value_mismatch = None;
        for t in other.members(window) {
            if let crate::fronts::Located::Member(l) = self.front.locate(&t) {
                let s = &t[..l];
                if self.value(s)? != other.value(&t)? {
                    value_mismatch = Some((s.to_vec(), t));
                    break;
                }
            }
        }
        Ok(SegOrderReport {
            holds: uncovered.is_none() && value_mismatch.is_none(),
            uncovered,
            value_mismatch,
            window,
        })
    }

    /// Looks for a proper prefix `s` of a windowed member `t` below which
    /// every member has the value `f(t)`; none exists iff `f` is spare on
    /// the window.
    pub fn spare_check(&self, window: u64) -> Result<SpareReport, SeqError> {
        for t in self.members(window) {
            let ft = self.value(&t)?;
            for l in 0..t.len() {
                let s = &t[..l];
                let mut all_same = true;
                for u in extensions(&self.front, s, window) {
                    if self.value(&u)? != ft {
                        all_same = false;
                        break;
                    }
                }
                if all_same {
                    return Ok(SpareReport {
                        spare: false,
                        witness: Some((s.to_vec(), t)),
                        window,
                    });
                }
            }
        }
        Ok(SpareReport {
            spare: true,
            witness: None,
            window,
        })
    }

    /// `f̌ : F̌ → E`, where `F̌` consists of the `⊑`-minimal nodes of `T(F)`
    /// below which `f` is constant, and `f̌(c) = f^↑(c ⌢ base / max c)`.
    ///
    /// Constancy is tested on the members below the extension window of
    /// each node, so a larger window can only split nodes further.
    pub fn sparsify(&self, window: u64) -> SuperSeq<V> {
        let parent = self.front.clone();
        let valuation = self.valuation.clone();
        let memo: Arc<Mutex<HashMap<FrontElement, bool>>> = Arc::default();
        let cut = move |c: &[u64]| -> bool {
            if let Some(&hit) = memo.lock().unwrap_or_else(|e| e.into_inner()).get(c) {
                return hit;
            }
            let mut values = extensions(&parent, c, window)
                .into_iter()
                .map(|u| valuation(&u));
            let first = values.next().flatten();
            let constant = values.all(|v| v.is_some() && v == first);
            memo.lock()
                .unwrap_or_else(|e| e.into_inner())
                .insert(c.to_vec(), constant);
            constant
        };
        let front = self.front.collapse(cut);
        let original = self.clone();
        let base_front = self.front.clone();
        SuperSeq::new(front, format!("sparse({})", self.label), move |c| {
            let y = continue_in_base(&base_front, c).ok()?;
            original.eval_up(&y).ok().map(|e| e.value)
        })
    }
}

impl SuperSeq<Value> {
    /// Valuations by name: `identity`, `min`, `max`, `size`, `span`
    /// (`max − min`), `min-mod:k` and `constant:c`.
    pub fn named(front: Front, rule: &str) -> Result<Self, SeqError> {
        let label = rule.to_string();
        let f: Box<RuleFn> = match rule {
            "identity" => Box::new(|s| Some(Value::Set(s.to_vec()))),
            "min" => Box::new(|s| s.first().map(|&m| Value::Nat(m))),
            "max" => Box::new(|s| s.last().map(|&m| Value::Nat(m))),
            "size" => Box::new(|s| Some(Value::Nat(s.len() as u64))),
            "span" => Box::new(|s| Some(Value::Nat(s.last()? - s.first()?))),
            _ => {
                if let Some(c) = rule.strip_prefix("constant:") {
                    let v = c
                        .parse()
                        .map(Value::Nat)
                        .unwrap_or_else(|_| Value::Label(c.into()));
                    Box::new(move |_| Some(v.clone()))
                } else if let Some(k) = rule.strip_prefix("min-mod:") {
                    let k: u64 = k
                        .parse()
                        .ok()
                        .filter(|&k| k > 0)
                        .ok_or_else(|| SeqError::UnknownRule(rule.to_string()))?;
                    Box::new(move |s| s.first().map(|&m| Value::Nat(m % k)))
                } else {
                    return Err(SeqError::UnknownRule(rule.to_string()));
                }
            }
        };
        Ok(SuperSeq::new(front, label, f))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{OmegaLeq, Rado, RadoPair};

    fn omega() -> InfSet {
        InfSet::omega()
    }

    fn rule(front: Front, r: &str) -> SuperSeq<Value> {
        SuperSeq::named(front, r).unwrap()
    }

    fn rado_identity(n: usize) -> SuperSeq<RadoPair> {
        SuperSeq::new(Front::uniform(n, omega()), "identity", |s| {
            RadoPair::from_slice(s).ok()
        })
    }

    #[test]
    fn eval_examples() {
        let y = InfSet::parse("[1,3,4]+ap:5,1").unwrap();
        let id = rule(Front::uniform(2, omega()), "identity");
        let e = id.eval_up(&y).unwrap();
        assert_eq!((e.value, e.modulus), (Value::Set(vec![1, 3]), 2));
        let c = rule(Front::schreier(omega()), "constant:c");
        assert_eq!(c.eval_up(&y).unwrap().value, Value::Label("c".into()));
        let m = rule(Front::uniform(2, omega()), "min");
        assert_eq!(
            m.eval_up(&InfSet::parse("[2,5]+omega").unwrap())
                .unwrap()
                .value,
            Value::Nat(2)
        );
        let undefined = rule(Front::trivial(omega()), "min");
        assert!(matches!(undefined.eval_up(&y), Err(SeqError::Undefined(_))));
    }

    #[test]
    fn seg_order_examples() {
        let id = rule(Front::uniform(2, omega()), "identity");
        assert!(id.seg_order(&id, 8).unwrap().holds);
        let c0 = rule(Front::trivial(omega()), "constant:c");
        let c2 = rule(Front::uniform(2, omega()), "constant:c");
        assert!(c0.seg_order(&c2, 8).unwrap().holds);
        let r = c0.seg_order(&id, 8).unwrap();
        assert!(!r.holds && r.value_mismatch.is_some());
        let evens = rule(Front::uniform(2, InfSet::evens()), "identity");
        assert!(matches!(
            id.seg_order(&evens, 8),
            Err(SeqError::DifferentBase(_, _))
        ));
    }

    #[test]
    fn spare_examples() {
        assert!(
            rule(Front::uniform(2, omega()), "identity")
                .spare_check(8)
                .unwrap()
                .spare
        );
        let r = rule(Front::uniform(2, omega()), "constant:c")
            .spare_check(8)
            .unwrap();
        assert_eq!(r.witness, Some((vec![], vec![0, 1])));
        assert!(
            rule(Front::trivial(omega()), "constant:7")
                .spare_check(8)
                .unwrap()
                .spare
        );
        assert!(
            !rule(Front::uniform(2, omega()), "min")
                .spare_check(8)
                .unwrap()
                .spare
        );
    }

    #[test]
    fn sparsify_examples() {
        let c = rule(Front::uniform(2, omega()), "constant:c");
        let s = c.sparsify(8);
        assert!(s.front().is_trivial());
        assert_eq!(s.value(&[]).unwrap(), Value::Label("c".into()));

        let id = rule(Front::uniform(2, omega()), "identity");
        let s = id.sparsify(8);
        assert_eq!(s.front().members_below(8), id.front().members_below(8));
        assert_eq!(s.value(&[2, 5]).unwrap(), Value::Set(vec![2, 5]));

        let m = rule(Front::uniform(2, omega()), "min");
        let s = m.sparsify(8);
        assert_eq!(
            s.front().members_below(4),
            vec![vec![0], vec![1], vec![2], vec![3]]
        );
        assert_eq!(s.value(&[3]).unwrap(), Value::Nat(3));
        assert!(s.seg_order(&m, 8).unwrap().holds);
        assert!(s.spare_check(8).unwrap().spare);
    }

    #[test]
    fn badness_examples() {
        let r = rado_identity(2).badness_check(&Rado, 8).unwrap();
        assert!(r.bad_on_window && r.pairs_scanned > 0);

        let c = rule(Front::uniform(2, omega()), "constant:1");
        let r = c
            .badness_check(
                &crate::order::chain(2).relabel(|&x| Value::Nat(x)).unwrap(),
                8,
            )
            .unwrap();
        assert_eq!(r.good_witness, Some((vec![0, 1], vec![1, 2])));

        let span = SuperSeq::new(Front::uniform(2, omega()), "span", |s: &[u64]| {
            Some(s[1] - s[0])
        });
        let r = span.badness_check(&OmegaLeq, 6).unwrap();
        assert_eq!(r.good_witness, Some((vec![0, 1], vec![1, 2])));
    }

    #[test]
    fn perfect_examples() {
        let c = SuperSeq::constant(Front::uniform(2, omega()), 3u64);
        assert!(c.perfect_check(|a, b| a <= b, 8).unwrap().perfect);
        let id1 = SuperSeq::new(Front::uniform(1, omega()), "identity", |s: &[u64]| {
            Some(s[0])
        });
        assert!(id1.perfect_check(|a, b| a <= b, 10).unwrap().perfect);
        let r = rado_identity(2)
            .perfect_check(|a, b| Rado.leq(a, b), 8)
            .unwrap();
        assert!(!r.perfect);
        assert_eq!(r.counterexample, Some((vec![0, 1], vec![1, 2])));
    }

    #[test]
    fn badness_is_perfection_for_the_complement() {
        let fs = [
            rule(Front::uniform(2, omega()), "span"),
            rule(Front::schreier(omega()), "max"),
        ];
        let leq = |a: &Value, b: &Value| match (a, b) {
            (Value::Nat(x), Value::Nat(y)) => x <= y,
            _ => false,
        };
        let qo = crate::order::CodedQO::new("nat", |v: &Value| matches!(v, Value::Nat(_)), leq);
        for f in &fs {
            for n in 2..9 {
                let bad = f.badness_check(&qo, n).unwrap().bad_on_window;
                let perfect = f.perfect_check(|a, b| !leq(a, b), n).unwrap().perfect;
                assert_eq!(bad, perfect);
            }
        }
    }
}
