//! Infinite subsets of ω given as strictly increasing enumerations.

use std::fmt;
use std::sync::{Arc, Mutex};

use super::FrontError;

type Generator = Arc<dyn Fn(usize) -> u64 + Send + Sync>;

#[derive(Clone)]
enum Repr {
    Omega,
    Progression {
        start: u64,
        step: u64,
    },
    /// Finite prefix followed by the elements of `tail` above the prefix.
    Explicit {
        prefix: Arc<[u64]>,
        tail: Arc<InfSet>,
        skip: usize,
    },
    /// `inner / cut`: the elements of `inner` above `cut`.
    After {
        inner: Arc<InfSet>,
        cut: u64,
        skip: usize,
    },
    Custom {
        name: Arc<str>,
        generator: Generator,
        cache: Arc<Mutex<Vec<u64>>>,
    },
}

/// An infinite set `X = {x_0 < x_1 < …} ⊆ ω`.
#[derive(Clone)]
pub struct InfSet {
    repr: Repr,
}

impl InfSet {
    pub fn omega() -> Self {
        InfSet { repr: Repr::Omega }
    }

    /// `{start, start + step, start + 2·step, …}`.
    pub fn progression(start: u64, step: u64) -> Result<Self, FrontError> {
        if step == 0 {
            return Err(FrontError::BadInfSet(
                "progression step must be positive".into(),
            ));
        }
        Ok(InfSet {
            repr: Repr::Progression { start, step },
        })
    }

    pub fn evens() -> Self {
        InfSet {
            repr: Repr::Progression { start: 0, step: 2 },
        }
    }

    pub fn odds() -> Self {
        InfSet {
            repr: Repr::Progression { start: 1, step: 2 },
        }
    }

    /// `prefix` (strictly increasing) followed by `tail / max prefix`.
    pub fn explicit(prefix: Vec<u64>, tail: InfSet) -> Result<Self, FrontError> {
        if !is_increasing(&prefix) {
            return Err(FrontError::BadInfSet(format!(
                "{prefix:?} is not increasing"
            )));
        }
        let Some(&last) = prefix.last() else {
            return Ok(tail);
        };
        let skip = tail.count_up_to(last);
        Ok(InfSet {
            repr: Repr::Explicit {
                prefix: prefix.into(),
                tail: Arc::new(tail),
                skip,
            },
        })
    }

    /// The finite set `elements` padded with the integers above its maximum.
    /// Used to present a finite window as an infinite set.
    pub fn from_finite(elements: Vec<u64>) -> Result<Self, FrontError> {
        Self::explicit(elements, InfSet::omega())
    }

    /// An arbitrary enumeration. Monotonicity is checked as elements are
    /// materialized.
    pub fn custom(
        name: impl Into<String>,
        f: impl Fn(usize) -> u64 + Send + Sync + 'static,
    ) -> Self {
        InfSet {
            repr: Repr::Custom {
                name: name.into().into(),
                generator: Arc::new(f),
                cache: Arc::new(Mutex::new(Vec::new())),
            },
        }
    }

    /// `x_i`.
    pub fn nth(&self, i: usize) -> u64 {
        match &self.repr {
            Repr::Omega => i as u64,
            Repr::Progression { start, step } => start + step * i as u64,
            Repr::Explicit { prefix, tail, skip } => match prefix.get(i) {
                Some(&x) => x,
                None => tail.nth(i - prefix.len() + skip),
            },
            Repr::After { inner, skip, .. } => inner.nth(i + skip),
            Repr::Custom {
                name,
                generator,
                cache,
            } => {
                let mut cache = cache.lock().unwrap_or_else(|e| e.into_inner());
                while cache.len() <= i {
                    let k = cache.len();
                    let x = generator(k);
                    if let Some(&prev) = cache.last() {
                        assert!(
                            prev < x,
                            "enumeration {name} is not increasing at index {k}"
                        );
                    }
                    cache.push(x);
                }
                cache[i]
            }
        }
    }

    pub fn min(&self) -> u64 {
        self.nth(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        (0..).map(move |i| self.nth(i))
    }

    /// `x_0, …, x_{k-1}`.
    pub fn prefix(&self, k: usize) -> Vec<u64> {
        (0..k).map(|i| self.nth(i)).collect()
    }

    /// The elements below `n`.
    pub fn below(&self, n: u64) -> Vec<u64> {
        self.iter().take_while(|&x| x < n).collect()
    }

    /// Number of elements `≤ n`.
    pub fn count_up_to(&self, n: u64) -> usize {
        match self.repr {
            Repr::Omega => n as usize + 1,
            Repr::Progression { start, step } if n >= start => ((n - start) / step) as usize + 1,
            Repr::Progression { .. } => 0,
            _ => self.iter().take_while(|&x| x <= n).count(),
        }
    }

    pub fn contains(&self, x: u64) -> bool {
        match self.repr {
            Repr::Omega => true,
            Repr::Progression { start, step } => x >= start && (x - start).is_multiple_of(step),
            _ => self.iter().find(|&y| y >= x) == Some(x),
        }
    }

    /// `X / n = {x ∈ X | n < x}`.
    pub fn after(&self, n: u64) -> InfSet {
        match &self.repr {
            Repr::Omega => InfSet {
                repr: Repr::Progression {
                    start: n + 1,
                    step: 1,
                },
            },
            Repr::Progression { start, .. } if n < *start => self.clone(),
            Repr::Progression { start, step } => {
                let k = (n - start) / step + 1;
                InfSet {
                    repr: Repr::Progression {
                        start: start + k * step,
                        step: *step,
                    },
                }
            }
            Repr::After { cut, .. } if n <= *cut => self.clone(),
            Repr::After { inner, .. } => inner.after(n),
            _ => InfSet {
                repr: Repr::After {
                    inner: Arc::new(self.clone()),
                    cut: n,
                    skip: self.count_up_to(n),
                },
            },
        }
    }

    /// `Ṡ(X) = X ∖ {min X}`.
    pub fn shift(&self) -> InfSet {
        self.after(self.min())
    }

    /// Checks that the first `k` elements of `self` belong to `other`.
    pub fn prefix_subset_of(&self, other: &InfSet, k: usize) -> Result<(), u64> {
        match self.prefix(k).into_iter().find(|&x| !other.contains(x)) {
            Some(x) => Err(x),
            None => Ok(()),
        }
    }

    /// Parses `omega`, `evens`, `odds`, `ap:START,STEP`, `[a,b,…]+BASE`
    /// and `BASE/n`.
    pub fn parse(text: &str) -> Result<Self, FrontError> {
        let text = text.trim();
        let bad = || FrontError::BadInfSet(format!("cannot parse base descriptor {text:?}"));
        if let Some(rest) = text.strip_prefix('[') {
            let (list, tail) = rest.split_once(']').ok_or_else(bad)?;
            let prefix = list
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .map(|s| s.parse::<u64>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            let tail = match tail.trim() {
                "" => InfSet::omega(),
                t => InfSet::parse(t.strip_prefix('+').ok_or_else(bad)?)?,
            };
            return InfSet::explicit(prefix, tail);
        }
        if let Some((base, cut)) = text.rsplit_once('/') {
            let cut = cut.trim().parse::<u64>().map_err(|_| bad())?;
            return Ok(InfSet::parse(base)?.after(cut));
        }
        match text {
            "omega" => return Ok(InfSet::omega()),
            "evens" => return Ok(InfSet::evens()),
            "odds" => return Ok(InfSet::odds()),
            _ => {}
        }
        let args = text.strip_prefix("ap:").ok_or_else(bad)?;
        let (a, b) = args.split_once(',').ok_or_else(bad)?;
        let start = a.trim().parse().map_err(|_| bad())?;
        let step = b.trim().parse().map_err(|_| bad())?;
        InfSet::progression(start, step)
    }
}

impl fmt::Display for InfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Omega => write!(f, "omega"),
            Repr::Progression { start: 0, step: 1 } => write!(f, "omega"),
            Repr::Progression { start, step } => write!(f, "ap:{start},{step}"),
            Repr::Explicit { prefix, tail, .. } => {
                let items: Vec<String> = prefix.iter().map(u64::to_string).collect();
                write!(f, "[{}]+{}", items.join(","), tail)
            }
            Repr::After { inner, cut, .. } => write!(f, "{inner}/{cut}"),
            Repr::Custom { name, .. } => write!(f, "{name}"),
        }
    }
}

impl fmt::Debug for InfSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "InfSet({self}: {:?}…)", self.prefix(6))
    }
}

/// Strictly increasing, hence a valid listing of a finite subset of ω.
pub fn is_increasing(s: &[u64]) -> bool {
    s.windows(2).all(|w| w[0] < w[1])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumerations() {
        assert_eq!(InfSet::omega().prefix(3), vec![0, 1, 2]);
        assert_eq!(InfSet::evens().prefix(3), vec![0, 2, 4]);
        let x = InfSet::parse("[1,3,4]+ap:5,1").unwrap();
        assert_eq!(x.prefix(6), vec![1, 3, 4, 5, 6, 7]);
        let y = InfSet::parse("[1,3]+evens").unwrap();
        assert_eq!(y.prefix(5), vec![1, 3, 4, 6, 8]);
        assert_eq!(InfSet::parse("odds/4").unwrap().prefix(2), vec![5, 7]);
        assert!(InfSet::parse("[3,1]").is_err());
        assert!(InfSet::parse("ap:1,0").is_err());
        assert!(InfSet::parse("primes").is_err());
    }

    #[test]
    fn after_and_shift() {
        let x = InfSet::parse("[1,3,4]+evens").unwrap();
        assert_eq!(x.after(3).prefix(3), vec![4, 6, 8]);
        assert_eq!(x.shift().prefix(2), vec![3, 4]);
        assert_eq!(x.shift().shift().shift().prefix(2), vec![6, 8]);
        assert_eq!(InfSet::omega().after(5).min(), 6);
        assert_eq!(InfSet::evens().after(5).prefix(2), vec![6, 8]);
        assert_eq!(InfSet::evens().after(6).min(), 8);
    }

    #[test]
    fn membership() {
        let x = InfSet::parse("[1,3,4]+ap:10,5").unwrap();
        assert!(x.contains(4) && x.contains(15) && !x.contains(5) && !x.contains(0));
        assert_eq!(x.below(16), vec![1, 3, 4, 10, 15]);
        assert_eq!(x.count_up_to(10), 4);
        assert!(InfSet::evens()
            .prefix_subset_of(&InfSet::omega(), 10)
            .is_ok());
        assert_eq!(
            InfSet::omega().prefix_subset_of(&InfSet::evens(), 10),
            Err(1)
        );
    }

    #[test]
    fn custom_generator_caches() {
        let sq = InfSet::custom("squares", |i| (i as u64) * (i as u64));
        assert_eq!(sq.prefix(4), vec![0, 1, 4, 9]);
        assert_eq!(sq.nth(2), 4);
        assert!(sq.contains(16) && !sq.contains(15));
        assert_eq!(sq.after(4).prefix(2), vec![9, 16]);
    }

    #[test]
    #[should_panic(expected = "not increasing")]
    fn custom_generator_must_increase() {
        InfSet::custom("bad", |i| 10 - i as u64).nth(1);
    }
}
