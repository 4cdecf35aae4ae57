//! Chaining winning strategies of player I along a bad sequence in `V*(Q)`.
//!
//! For an index tuple `n_0 < n_1 < …` game `j` is `G(X_{n_j}, X_{n_{j+1}})`.
//! Player I follows its winning strategy there, and player II copies the
//! moves of player I in game `j + 1`. Writing `Y^i_j` for the `i`-th move of I
//! in game `j` (with `Y^{-1}_j = X_{n_j}`):
//!
//! `Y^i_j = σ_j(Y^{i-1}_j, Y^{i-1}_{j+1})`, or `Y^{i-1}_j` if that is an atom.
//!
//! Game 0 ends once `Y^i_0` and `Y^i_1` are both atoms, and `g(N) = Y^i_0`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::game::{GameSolver, StrategyTable, Winner};
use super::{GameError, HSet};
use crate::order::{Element, QuasiOrder};

/// A bad sequence together with a winning strategy of I for every pair.
pub struct Stringing<T> {
    xs: Vec<HSet<T>>,
    strategies: BTreeMap<(usize, usize), StrategyTable<T>>,
}

/// `g(N)` and the number of indices of `N` it depends on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StringingEval<T> {
    pub value: T,
    pub modulus: usize,
    /// Index of the round of game 0 at which both sides reached atoms
    /// (`-1` when the game starts on atoms).
    pub rounds: isize,
}

/// Checks badness of `xs` (every `m < n` is a win for I) and keeps the
/// strategies for later evaluation.
pub fn string_strategies<Q>(qo: &Q, xs: Vec<HSet<Q::Elem>>) -> Result<Stringing<Q::Elem>, GameError>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    let mut solver = GameSolver::new(qo);
    let mut strategies = BTreeMap::new();
    for m in 0..xs.len() {
        for n in m + 1..xs.len() {
            let r = solver.solve(&xs[m], &xs[n])?;
            if r.winner == Winner::II {
                return Err(GameError::NotBad(m, n));
            }
            strategies.insert((m, n), r.strategy_i);
        }
    }
    Ok(Stringing { xs, strategies })
}

impl<T: Element> Stringing<T> {
    pub fn len(&self) -> usize {
        self.xs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.xs.is_empty()
    }

    pub fn sequence(&self) -> &[HSet<T>] {
        &self.xs
    }

    /// Evaluates `g` on any infinite set starting with `tuple`.
    pub fn eval(&self, tuple: &[usize]) -> Result<StringingEval<T>, GameError> {
        let bound = self.xs.len();
        if tuple.iter().any(|&n| n >= bound) || tuple.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GameError::BadIndexTuple(bound));
        }
        let run = Run {
            s: self,
            tuple,
            memo: RefCell::new(HashMap::new()),
            used: RefCell::new(0),
        };
        let mut i = -1isize;
        loop {
            let y0 = run.y(i, 0)?;
            let y1 = run.y(i, 1)?;
            if let (HSet::Atom(v), true) = (&y0, y1.is_atom()) {
                return Ok(StringingEval {
                    value: v.clone(),
                    modulus: *run.used.borrow(),
                    rounds: i,
                });
            }
            i += 1;
        }
    }
}

struct Run<'a, T> {
    s: &'a Stringing<T>,
    tuple: &'a [usize],
    memo: RefCell<HashMap<(isize, usize), HSet<T>>>,
    used: RefCell<usize>,
}

impl<T: Element> Run<'_, T> {
    fn y(&self, i: isize, j: usize) -> Result<HSet<T>, GameError> {
        if let Some(v) = self.memo.borrow().get(&(i, j)) {
            return Ok(v.clone());
        }
        let v = if i < 0 {
            let n = *self.tuple.get(j).ok_or(GameError::InsufficientPrefix {
                needed: j + 1,
                supplied: self.tuple.len(),
            })?;
            let mut used = self.used.borrow_mut();
            *used = (*used).max(j + 1);
            self.s.xs[n].clone()
        } else {
            let prev = self.y(i - 1, j)?;
            if prev.is_atom() {
                prev
            } else {
                let other = self.y(i - 1, j + 1)?;
                let key = (self.tuple[j], self.tuple[j + 1]);
                self.s.strategies[&key]
                    .moves
                    .get(&(prev.clone(), other.clone()))
                    .cloned()
                    .ok_or_else(|| GameError::MissingMove(format!("({prev}, {other})")))?
            }
        };
        self.memo.borrow_mut().insert((i, j), v.clone());
        Ok(v)
    }
}
