#![allow(dead_code)]

use bqo::hset::HSet;
use bqo::order::FiniteQO;
use bqo::shifts::IncInj;
use bqo::Natural;
use rand::Rng;

/// Every reflexive transitive relation on `{0, …, n-1}`, checked directly.
pub fn all_qos(n: u64) -> Vec<FiniteQO<u64>> {
    let off: Vec<(u64, u64)> = (0..n)
        .flat_map(|a| (0..n).filter(move |&b| b != a).map(move |b| (a, b)))
        .collect();
    let mut out = Vec::new();
    for mask in 0u32..1 << off.len() {
        let rel = |a: u64, b: u64| {
            a == b
                || off
                    .iter()
                    .position(|&p| p == (a, b))
                    .is_some_and(|i| mask >> i & 1 == 1)
        };
        let transitive =
            (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(rel(a, b) && rel(b, c)) || rel(a, c))));
        if transitive {
            let qo = FiniteQO::from_relation(format!("qo{n}:{mask}"), (0..n).collect(), |a, b| {
                rel(*a, *b)
            })
            .expect("reflexive and transitive");
            out.push(qo);
        }
    }
    out
}

/// All quasi-orders with one to three elements.
pub fn small_qos() -> Vec<FiniteQO<u64>> {
    (1..=3).flat_map(all_qos).collect()
}

/// A random element of `V*(Q)` over atoms `0..atoms` of depth at most `depth`.
pub fn random_hset(rng: &mut impl Rng, atoms: u64, depth: usize) -> HSet<u64> {
    if depth == 0 || rng.gen_bool(0.25) {
        return HSet::atom(rng.gen_range(0..atoms));
    }
    let k = rng.gen_range(1..=3);
    HSet::node((0..k).map(|_| random_hset(rng, atoms, depth - 1))).expect("nonempty")
}

/// Every element of `V*(Q)` of depth at most `depth` over atoms `0..atoms`.
pub fn all_hsets(atoms: u64, depth: usize) -> Vec<HSet<u64>> {
    let mut level: Vec<HSet<u64>> = (0..atoms).map(HSet::atom).collect();
    for _ in 0..depth {
        let mut next = level.clone();
        let k = level.len();
        assert!(k < 20, "too many sets to enumerate");
        for mask in 1u32..1 << k {
            let kids = (0..k)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| level[i].clone());
            let x = HSet::node(kids).expect("nonempty");
            if !next.contains(&x) {
                next.push(x);
            }
        }
        level = next;
    }
    level
}

/// Brute-force domination: every `p ∈ x` lies below some `q ∈ y`.
pub fn dominated(qo: &FiniteQO<u64>, x: &[u64], y: &[u64]) -> bool {
    let leq = |a: u64, b: u64| qo.leq_index(a as usize, b as usize);
    x.iter().all(|&p| y.iter().any(|&q| leq(p, q)))
}

/// Rado's order straight from its two clauses.
pub fn rado_oracle(s: (u64, u64), t: (u64, u64)) -> bool {
    (s.0 == t.0 && s.1 <= t.1) || s.1 < t.0
}

/// A random increasing injection descriptor that is not the identity.
pub fn random_shift_descriptor(rng: &mut impl Rng) -> String {
    match rng.gen_range(0..3) {
        0 => "succ".into(),
        1 => loop {
            let (a, b) = (rng.gen_range(1..=3u64), rng.gen_range(0..=4u64));
            if (a, b) != (1, 0) {
                break format!("affine:{a},{b}");
            }
        },
        _ => random_table_descriptor(rng),
    }
}

/// `table:[…]+tail:affine:a,b` with a random increasing table and a tail
/// that moves every point.
pub fn random_table_descriptor(rng: &mut impl Rng) -> String {
    let len = rng.gen_range(1..=5u64);
    let mut v = Vec::new();
    let mut cur = 0u64;
    for i in 0..len {
        cur = if i == 0 {
            rng.gen_range(0..=2)
        } else {
            cur + rng.gen_range(1..=3)
        };
        v.push(cur);
    }
    loop {
        let (a, b) = (rng.gen_range(1..=2u64), rng.gen_range(0..=6u64));
        if (a, b) != (1, 0) && cur < a * len + b {
            let items: Vec<String> = v.iter().map(u64::to_string).collect();
            break format!("table:[{}]+tail:affine:{a},{b}", items.join(","));
        }
    }
}

/// A random increasing injection, possibly the identity.
pub fn random_injection_descriptor(rng: &mut impl Rng) -> String {
    if rng.gen_bool(0.1) {
        "id".into()
    } else {
        random_shift_descriptor(rng)
    }
}

pub fn parse_inj<N: Natural>(d: &str) -> IncInj<N> {
    IncInj::parse(d).unwrap_or_else(|e| panic!("{d}: {e}"))
}
