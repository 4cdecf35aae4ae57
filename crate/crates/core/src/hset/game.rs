//! The game `G(X, Y)` on `V*(Q)`.
//!
//! Player I picks an element `X'` of `X` (or `X` itself when `X` is an
//! atom), player II answers with an element `Y'` of `Y` (or `Y` itself).
//! When both picks are atoms the comparison in `Q` decides the play, and
//! otherwise play continues from `(X', Y')`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::{GameError, HSet};
use crate::order::{Element, QuasiOrder};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Winner {
    I,
    II,
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::I => "I",
            Winner::II => "II",
        })
    }
}

/// Moves of one player, keyed by position. For player I the key is the
/// position `(X, Y)` before the round; for player II it is `(X', Y)`, with
/// `X'` the move just made by I. Forced moves (from atoms) are not stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrategyTable<T> {
    pub moves: BTreeMap<(HSet<T>, HSet<T>), HSet<T>>,
}

impl<T> Default for StrategyTable<T> {
    fn default() -> Self {
        StrategyTable {
            moves: BTreeMap::new(),
        }
    }
}

pub trait PlayerI<T> {
    /// A move from `x` at position `(x, y)`; `x` is never an atom.
    fn choose(&self, x: &HSet<T>, y: &HSet<T>) -> Option<HSet<T>>;
}

pub trait PlayerII<T> {
    /// A move from `y` after I moved to `x_move`; `y` is never an atom.
    fn respond(&self, x_move: &HSet<T>, y: &HSet<T>) -> Option<HSet<T>>;
}

impl<T: Ord + Clone> PlayerI<T> for StrategyTable<T> {
    fn choose(&self, x: &HSet<T>, y: &HSet<T>) -> Option<HSet<T>> {
        self.moves.get(&(x.clone(), y.clone())).cloned()
    }
}

impl<T: Ord + Clone> PlayerII<T> for StrategyTable<T> {
    fn respond(&self, x_move: &HSet<T>, y: &HSet<T>) -> Option<HSet<T>> {
        self.moves.get(&(x_move.clone(), y.clone())).cloned()
    }
}

impl<T, F: Fn(&HSet<T>, &HSet<T>) -> Option<HSet<T>>> PlayerI<T> for F {
    fn choose(&self, x: &HSet<T>, y: &HSet<T>) -> Option<HSet<T>> {
        self(x, y)
    }
}

/// Wrapper turning a closure into a player II strategy (a bare closure
/// already is a player I strategy).
pub struct Responder<F>(pub F);

impl<T, F: Fn(&HSet<T>, &HSet<T>) -> Option<HSet<T>>> PlayerII<T> for Responder<F> {
    fn respond(&self, x_move: &HSet<T>, y: &HSet<T>) -> Option<HSet<T>> {
        (self.0)(x_move, y)
    }
}

/// Outcome of solving `G(x, y)`.
///
/// Both tables cover every position reachable from `(x, y)` under any legal
/// play. At each position the table picks the least winning move when one
/// exists and the least legal move otherwise, so the winner's table is a
/// winning strategy.
#[derive(Debug, Clone)]
pub struct GameResult<T> {
    pub winner: Winner,
    pub strategy_i: StrategyTable<T>,
    pub strategy_ii: StrategyTable<T>,
}

impl<T> GameResult<T> {
    /// The winner's table.
    pub fn strategy(&self) -> &StrategyTable<T> {
        match self.winner {
            Winner::I => &self.strategy_i,
            Winner::II => &self.strategy_ii,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum Key<T> {
    Atom(T),
    Node(Vec<u32>),
}

/// Memoizing solver. Sets are interned bottom-up, so each distinct subterm
/// gets one id and every position is solved once.
pub struct GameSolver<'q, Q: QuasiOrder> {
    qo: &'q Q,
    ids: HashMap<Key<Q::Elem>, u32>,
    keys: Vec<Key<Q::Elem>>,
    sets: Vec<HSet<Q::Elem>>,
    memo: HashMap<(u32, u32), bool>,
}

impl<'q, Q> GameSolver<'q, Q>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    pub fn new(qo: &'q Q) -> Self {
        GameSolver {
            qo,
            ids: HashMap::new(),
            keys: Vec::new(),
            sets: Vec::new(),
            memo: HashMap::new(),
        }
    }

    fn intern(&mut self, x: &HSet<Q::Elem>) -> Result<u32, GameError> {
        let key = match x {
            HSet::Atom(t) => {
                if !self.qo.contains(t) {
                    return Err(GameError::MixedBaseQO(t.to_string()));
                }
                Key::Atom(t.clone())
            }
            HSet::Node(c) => Key::Node(c.iter().map(|y| self.intern(y)).collect::<Result<_, _>>()?),
        };
        if let Some(&id) = self.ids.get(&key) {
            return Ok(id);
        }
        let id = self.keys.len() as u32;
        self.ids.insert(key.clone(), id);
        self.keys.push(key);
        self.sets.push(x.clone());
        Ok(id)
    }

    fn moves(&self, a: u32) -> Vec<u32> {
        match &self.keys[a as usize] {
            Key::Atom(_) => vec![a],
            Key::Node(c) => c.clone(),
        }
    }

    fn is_atom(&self, a: u32) -> bool {
        matches!(self.keys[a as usize], Key::Atom(_))
    }

    /// The four-clause recursion.
    fn leq_ids(&mut self, a: u32, b: u32) -> bool {
        if let Some(&v) = self.memo.get(&(a, b)) {
            return v;
        }
        let v = match (&self.keys[a as usize], &self.keys[b as usize]) {
            (Key::Atom(p), Key::Atom(q)) => self.qo.leq(p, q),
            (Key::Atom(_), Key::Node(ys)) => ys.clone().into_iter().any(|y| self.leq_ids(a, y)),
            (Key::Node(xs), Key::Atom(_)) => xs.clone().into_iter().all(|x| self.leq_ids(x, b)),
            (Key::Node(xs), Key::Node(ys)) => {
                let (xs, ys) = (xs.clone(), ys.clone());
                xs.into_iter()
                    .all(|x| ys.iter().any(|&y| self.leq_ids(x, y)))
            }
        };
        self.memo.insert((a, b), v);
        v
    }

    /// `x ≤ y` in `V*(Q)`.
    pub fn leq(&mut self, x: &HSet<Q::Elem>, y: &HSet<Q::Elem>) -> Result<bool, GameError> {
        let (a, b) = (self.intern(x)?, self.intern(y)?);
        Ok(self.leq_ids(a, b))
    }

    /// Least move of I from `(x, y)` after which every answer of II loses.
    pub fn winning_move_i(
        &mut self,
        x: &HSet<Q::Elem>,
        y: &HSet<Q::Elem>,
    ) -> Result<Option<HSet<Q::Elem>>, GameError> {
        let (a, b) = (self.intern(x)?, self.intern(y)?);
        let (m, wins) = self.best_i(a, b);
        Ok(wins.then(|| self.sets[m as usize].clone()))
    }

    /// (move, is winning) for I at `(a, b)`.
    fn best_i(&mut self, a: u32, b: u32) -> (u32, bool) {
        let xs = self.moves(a);
        let ys = self.moves(b);
        for &x in &xs {
            if ys.iter().all(|&y| !self.leq_ids(x, y)) {
                return (x, true);
            }
        }
        (xs[0], false)
    }

    /// (move, is winning) for II after I moved to `x`, from `b`.
    fn best_ii(&mut self, x: u32, b: u32) -> (u32, bool) {
        let ys = self.moves(b);
        for &y in &ys {
            if self.leq_ids(x, y) {
                return (y, true);
            }
        }
        (ys[0], false)
    }

    pub fn solve(
        &mut self,
        x: &HSet<Q::Elem>,
        y: &HSet<Q::Elem>,
    ) -> Result<GameResult<Q::Elem>, GameError> {
        let (a, b) = (self.intern(x)?, self.intern(y)?);
        let winner = if self.leq_ids(a, b) {
            Winner::II
        } else {
            Winner::I
        };
        let mut strategy_i = StrategyTable::default();
        let mut strategy_ii = StrategyTable::default();
        let mut seen = std::collections::HashSet::new();
        let mut stack = vec![(a, b)];
        while let Some((a, b)) = stack.pop() {
            if !seen.insert((a, b)) {
                continue;
            }
            if !self.is_atom(a) {
                let (m, _) = self.best_i(a, b);
                strategy_i.moves.insert(
                    (self.sets[a as usize].clone(), self.sets[b as usize].clone()),
                    self.sets[m as usize].clone(),
                );
            }
            for x in self.moves(a) {
                if !self.is_atom(b) {
                    let (m, _) = self.best_ii(x, b);
                    strategy_ii.moves.insert(
                        (self.sets[x as usize].clone(), self.sets[b as usize].clone()),
                        self.sets[m as usize].clone(),
                    );
                }
                for y in self.moves(b) {
                    if !(self.is_atom(x) && self.is_atom(y)) {
                        stack.push((x, y));
                    }
                }
            }
        }
        Ok(GameResult {
            winner,
            strategy_i,
            strategy_ii,
        })
    }
}

/// Solves `G(x, y)`: II wins iff `x ≤ y`.
pub fn game_leq<Q>(
    qo: &Q,
    x: &HSet<Q::Elem>,
    y: &HSet<Q::Elem>,
) -> Result<GameResult<Q::Elem>, GameError>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    GameSolver::new(qo).solve(x, y)
}

fn check_atoms<Q>(qo: &Q, x: &HSet<Q::Elem>) -> Result<(), GameError>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    match x.atoms().into_iter().find(|t| !qo.contains(t)) {
        Some(t) => Err(GameError::MixedBaseQO(t.to_string())),
        None => Ok(()),
    }
}

/// Plain search of the game tree, round by round, without memoization.
pub fn game_leq_oracle<Q>(qo: &Q, x: &HSet<Q::Elem>, y: &HSet<Q::Elem>) -> Result<Winner, GameError>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    check_atoms(qo, x)?;
    check_atoms(qo, y)?;
    fn ii_wins<Q: QuasiOrder>(qo: &Q, x: &HSet<Q::Elem>, y: &HSet<Q::Elem>) -> bool
    where
        Q::Elem: Element,
    {
        x.moves().into_iter().all(|x1| {
            y.moves().into_iter().any(|y1| match (x1, y1) {
                (HSet::Atom(p), HSet::Atom(q)) => qo.leq(p, q),
                _ => ii_wins(qo, x1, y1),
            })
        })
    }
    Ok(if ii_wins(qo, x, y) {
        Winner::II
    } else {
        Winner::I
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Round<T> {
    pub i_move: HSet<T>,
    pub ii_move: HSet<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transcript<T> {
    pub rounds: Vec<Round<T>>,
    pub winner: Winner,
}

/// Replays `G(x, y)` with the given strategies; moves out of atoms are
/// applied automatically.
pub fn game_play<Q>(
    qo: &Q,
    x: &HSet<Q::Elem>,
    y: &HSet<Q::Elem>,
    player_i: &dyn PlayerI<Q::Elem>,
    player_ii: &dyn PlayerII<Q::Elem>,
) -> Result<Transcript<Q::Elem>, GameError>
where
    Q: QuasiOrder,
    Q::Elem: Element,
{
    check_atoms(qo, x)?;
    check_atoms(qo, y)?;
    let position = |a: &HSet<Q::Elem>, b: &HSet<Q::Elem>| format!("({a}, {b})");
    let (mut x, mut y) = (x.clone(), y.clone());
    let mut rounds = Vec::new();
    loop {
        let x1 = match &x {
            HSet::Atom(_) => x.clone(),
            HSet::Node(c) => {
                let m = player_i
                    .choose(&x, &y)
                    .ok_or_else(|| GameError::MissingMove(position(&x, &y)))?;
                if !c.contains(&m) {
                    return Err(GameError::IllegalMove {
                        position: position(&x, &y),
                        chosen: m.to_string(),
                    });
                }
                m
            }
        };
        let y1 = match &y {
            HSet::Atom(_) => y.clone(),
            HSet::Node(c) => {
                let m = player_ii
                    .respond(&x1, &y)
                    .ok_or_else(|| GameError::MissingMove(position(&x1, &y)))?;
                if !c.contains(&m) {
                    return Err(GameError::IllegalMove {
                        position: position(&x1, &y),
                        chosen: m.to_string(),
                    });
                }
                m
            }
        };
        rounds.push(Round {
            i_move: x1.clone(),
            ii_move: y1.clone(),
        });
        if let (HSet::Atom(p), HSet::Atom(q)) = (&x1, &y1) {
            let winner = if qo.leq(p, q) { Winner::II } else { Winner::I };
            return Ok(Transcript { rounds, winner });
        }
        x = x1;
        y = y1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::{antichain, chain};

    fn a(n: u64) -> HSet<u64> {
        HSet::atom(n)
    }

    fn set(xs: Vec<HSet<u64>>) -> HSet<u64> {
        HSet::node(xs).unwrap()
    }

    #[test]
    fn clause_examples() {
        let q = antichain(2);
        assert_eq!(game_leq(&q, &a(0), &a(0)).unwrap().winner, Winner::II);
        assert_eq!(
            game_leq(&q, &set(vec![a(0)]), &a(1)).unwrap().winner,
            Winner::I
        );
        let ab = set(vec![a(0), a(1)]);
        assert_eq!(game_leq(&q, &ab, &ab).unwrap().winner, Winner::II);
        // Clause (iii): a set lies below an atom iff all its elements do.
        let c = chain(2);
        assert_eq!(
            game_leq(&c, &set(vec![a(0), a(1)]), &a(1)).unwrap().winner,
            Winner::II
        );
        assert_eq!(
            game_leq(&c, &set(vec![a(0), a(1)]), &a(0)).unwrap().winner,
            Winner::I
        );
        assert!(matches!(
            game_leq(&q, &a(5), &a(0)),
            Err(GameError::MixedBaseQO(_))
        ));
    }

    #[test]
    fn oracle_agrees_on_examples() {
        let q = antichain(2);
        let xs = [
            a(0),
            a(1),
            set(vec![a(0)]),
            set(vec![a(0), set(vec![a(1)])]),
            set(vec![set(vec![a(0), a(1)])]),
        ];
        for x in &xs {
            for y in &xs {
                assert_eq!(
                    game_leq(&q, x, y).unwrap().winner,
                    game_leq_oracle(&q, x, y).unwrap()
                );
            }
        }
    }

    #[test]
    fn strategies_replay_to_the_solved_winner() {
        let q = chain(3);
        let x = set(vec![a(2), set(vec![a(0), a(1)])]);
        let y = set(vec![set(vec![a(1)]), a(1)]);
        let r = game_leq(&q, &x, &y).unwrap();
        assert_eq!(r.winner, Winner::I);
        let t = game_play(&q, &x, &y, &r.strategy_i, &r.strategy_ii).unwrap();
        assert_eq!(t.winner, Winner::I);
        // Winning strategy for I beats every II strategy, e.g. "always the largest".
        let greedy = Responder(|_: &HSet<u64>, y: &HSet<u64>| y.children().last().cloned());
        assert_eq!(
            game_play(&q, &x, &y, &r.strategy_i, &greedy)
                .unwrap()
                .winner,
            Winner::I
        );
    }

    #[test]
    fn illegal_and_missing_moves() {
        let q = chain(3);
        let x = set(vec![a(0), a(1)]);
        let y = set(vec![a(2)]);
        let cheat = |_: &HSet<u64>, _: &HSet<u64>| Some(a(2));
        let r = game_leq(&q, &x, &y).unwrap();
        assert!(matches!(
            game_play(&q, &x, &y, &cheat, &r.strategy_ii),
            Err(GameError::IllegalMove { .. })
        ));
        let empty = StrategyTable::default();
        assert!(matches!(
            game_play(&q, &x, &y, &empty, &empty),
            Err(GameError::MissingMove(_))
        ));
    }
}
