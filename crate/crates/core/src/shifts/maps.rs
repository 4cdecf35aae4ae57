use serde::Serialize;

use super::{compose, nat, IncInj, Natural, ShiftError};

/// `k_g = min{k | k < g(k)}`, searched below `bound`.
pub fn critical_point<N: Natural>(g: &IncInj<N>, bound: u64) -> Result<N, ShiftError> {
    for k in 0..bound {
        let (k, v) = (nat::<N>(k), g.at(k)?);
        if v > k {
            return Ok(k);
        }
        if v < k {
            return Err(ShiftError::NotIncreasing {
                label: g.label().to_string(),
                at: k.to_string(),
            });
        }
    }
    Err(ShiftError::LooksLikeIdentity(bound))
}

/// `G(n) = g^n(k_g)`.
pub fn orbit_map<N: Natural>(g: &IncInj<N>, bound: u64) -> Result<IncInj<N>, ShiftError> {
    let k = critical_point(g, bound)?;
    let g = g.clone();
    Ok(IncInj::from_fn(format!("orbit({g})"), move |n| {
        g.iterate(n, &k)
    }))
}

/// `ρ(f) = f ∘ G`, so that `ρ(f ∘ g) = ρ(f) ∘ s`.
pub fn rho<N: Natural>(f: &IncInj<N>, g: &IncInj<N>, bound: u64) -> Result<IncInj<N>, ShiftError> {
    Ok(compose(f, &orbit_map(g, bound)?))
}

/// `(n, G(n), G(n+1))` for the piece `G(n) ≤ l < G(n+1)` containing `l`,
/// or `None` when `l < G(0)`.
fn piece<N: Natural>(g: &IncInj<N>, k: &N, l: &N) -> Result<Option<(N, N)>, ShiftError> {
    if l < k {
        return Ok(None);
    }
    let mut n = N::zero();
    let mut next = g.eval(k)?;
    while *l >= next {
        n = n + N::one();
        next = g.eval(&next)?;
    }
    Ok(Some((n, next)))
}

/// `σ(f)(l) = l` below `G(0)`, and `g^{f(n)-n}(l)` for `G(n) ≤ l < G(n+1)`,
/// so that `σ(f ∘ s) = σ(f) ∘ g`.
pub fn sigma<N: Natural>(
    f: &IncInj<N>,
    g: &IncInj<N>,
    bound: u64,
) -> Result<IncInj<N>, ShiftError> {
    let k = critical_point(g, bound)?;
    let (f, g) = (f.clone(), g.clone());
    Ok(IncInj::from_fn(format!("sigma({f};{g})"), move |l| {
        let Some((n, _)) = piece(&g, &k, l)? else {
            return Ok(l.clone());
        };
        let fnv = f.eval(&n)?;
        let e = fnv
            .checked_sub(&n)
            .ok_or_else(|| ShiftError::NotIncreasing {
                label: f.label().to_string(),
                at: format!("{n} (f(n) < n)"),
            })?;
        g.iterate(&e, l)
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainReport {
    /// Whether `G(0) > 0`, so that the chain below `G(0)` applies.
    pub below_first_piece: bool,
    pub boundaries_checked: usize,
    pub window: u64,
}

/// Walks the two inequality chains showing that `σ(f)` increases across
/// every piece boundary `G(n+1) < window`:
///
/// `σ(f)(l) = l < G(0) ≤ G(f(0)) = g^{f(0)}(G(0)) = σ(f)(G(0))` for `l < G(0)`,
///
/// and for `l = G(n+1) - 1`,
/// `σ(f)(l) = g^{f(n)-n}(l) < g^{f(n)-n}(G(n+1)) = g^{f(n)+1}(k_g)
///  ≤ g^{f(n+1)}(k_g) = G(f(n+1)) = g^{f(n+1)-(n+1)}(G(n+1)) = σ(f)(G(n+1))`.
pub fn sigma_chains<N: Natural>(
    f: &IncInj<N>,
    g: &IncInj<N>,
    bound: u64,
    window: u64,
) -> Result<ChainReport, ShiftError> {
    let k = critical_point(g, bound)?;
    let big_g = orbit_map(g, bound)?;
    let s = sigma(f, g, bound)?;
    let one = N::one();
    let broken = |boundary: String, detail: &str| ShiftError::ChainBroken {
        boundary,
        detail: detail.to_string(),
    };
    let check = |ok: bool, boundary: &str, detail: &str| {
        if ok {
            Ok(())
        } else {
            Err(broken(boundary.into(), detail))
        }
    };

    let g0 = k.clone();
    let below = !g0.is_zero();
    if below {
        let l = g0.clone() - one.clone();
        let f0 = f.at(0)?;
        let gf0 = big_g.eval(&f0)?;
        let b = "G(0)";
        check(s.eval(&l)? == l, b, "σ(f)(l) = l")?;
        check(g0 <= gf0, b, "G(0) ≤ G(f(0))")?;
        check(gf0 == g.iterate(&f0, &g0)?, b, "G(f(0)) = g^{f(0)}(G(0))")?;
        check(gf0 == s.eval(&g0)?, b, "g^{f(0)}(G(0)) = σ(f)(G(0))")?;
    }

    let window_n: N = nat(window);
    let mut checked = 0;
    let mut n = N::zero();
    let mut next = g.eval(&g0)?;
    while next < window_n {
        let b = format!("G({})", n.clone() + one.clone());
        let l = next.clone() - one.clone();
        let (fn_, fn1) = (f.eval(&n)?, f.eval(&(n.clone() + one.clone()))?);
        let e = fn_
            .checked_sub(&n)
            .ok_or_else(|| broken(b.clone(), "f(n) ≥ n"))?;
        let e1 = fn1
            .checked_sub(&(n.clone() + one.clone()))
            .ok_or_else(|| broken(b.clone(), "f(n+1) ≥ n+1"))?;
        let v1 = s.eval(&l)?;
        check(v1 == g.iterate(&e, &l)?, &b, "σ(f)(l) = g^{f(n)-n}(l)")?;
        let v2 = g.iterate(&e, &next)?;
        check(v1 < v2, &b, "g^{f(n)-n}(l) < g^{f(n)-n}(G(n+1))")?;
        let v3 = g.iterate(&(fn_.clone() + one.clone()), &k)?;
        check(v2 == v3, &b, "g^{f(n)-n}(G(n+1)) = g^{f(n)+1}(k_g)")?;
        let v4 = g.iterate(&fn1, &k)?;
        check(v3 <= v4, &b, "g^{f(n)+1}(k_g) ≤ g^{f(n+1)}(k_g)")?;
        let v5 = big_g.eval(&fn1)?;
        check(v4 == v5, &b, "g^{f(n+1)}(k_g) = G(f(n+1))")?;
        let v6 = g.iterate(&e1, &next)?;
        check(v5 == v6, &b, "G(f(n+1)) = g^{f(n+1)-(n+1)}(G(n+1))")?;
        check(
            v6 == s.eval(&next)?,
            &b,
            "g^{f(n+1)-(n+1)}(G(n+1)) = σ(f)(G(n+1))",
        )?;
        checked += 1;
        n = n + one.clone();
        next = g.eval(&next)?;
    }
    Ok(ChainReport {
        below_first_piece: below,
        boundaries_checked: checked,
        window,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shifts::compose;

    fn p(d: &str) -> IncInj<u64> {
        IncInj::parse(d).unwrap()
    }

    #[test]
    fn critical_points() {
        assert_eq!(critical_point(&p("succ"), 16).unwrap(), 0);
        assert_eq!(
            critical_point(&p("id"), 16),
            Err(ShiftError::LooksLikeIdentity(16))
        );
        assert_eq!(
            critical_point(&p("table:[0,1,5]+tail:affine:1,3"), 16).unwrap(),
            2
        );
    }

    #[test]
    fn orbits() {
        assert_eq!(
            orbit_map(&p("succ"), 8).unwrap().prefix(5).unwrap(),
            vec![0, 1, 2, 3, 4]
        );
        assert_eq!(
            orbit_map(&p("affine:1,2"), 8).unwrap().prefix(5).unwrap(),
            vec![0, 2, 4, 6, 8]
        );
        assert_eq!(
            orbit_map(&p("affine:2,1"), 8).unwrap().prefix(5).unwrap(),
            vec![0, 1, 3, 7, 15]
        );
    }

    #[test]
    fn rho_examples() {
        let g = p("affine:1,2");
        assert_eq!(rho(&p("id"), &g, 8).unwrap().at(3).unwrap(), 6);
        let f = p("affine:3,1");
        assert_eq!(
            rho(&f, &p("succ"), 8)
                .unwrap()
                .first_disagreement(&f, 64)
                .unwrap(),
            None
        );
        let lhs = rho(&compose(&p("id"), &g), &g, 8).unwrap();
        let rhs = compose(&rho(&p("id"), &g, 8).unwrap(), &p("succ"));
        for n in 0..64 {
            assert_eq!(lhs.at(n).unwrap(), 2 * n + 2);
        }
        assert_eq!(lhs.first_disagreement(&rhs, 64).unwrap(), None);
    }

    #[test]
    fn sigma_examples() {
        let f = p("affine:2,3");
        assert_eq!(
            sigma(&f, &p("succ"), 8)
                .unwrap()
                .first_disagreement(&f, 64)
                .unwrap(),
            None
        );
        let g = p("affine:1,2");
        assert_eq!(
            sigma(&p("id"), &g, 8)
                .unwrap()
                .first_disagreement(&p("id"), 64)
                .unwrap(),
            None
        );
        let s1 = sigma(&p("succ"), &g, 8).unwrap();
        let s2 = sigma(&compose(&p("succ"), &p("succ")), &g, 8).unwrap();
        for l in 0..64 {
            assert_eq!(s1.at(l).unwrap(), l + 2);
            assert_eq!(s2.at(l).unwrap(), l + 4);
            assert_eq!(s2.at(l).unwrap(), s1.at(g.at(l).unwrap()).unwrap());
        }
        let r = sigma_chains(
            &p("affine:2,1"),
            &p("table:[0,1,5]+tail:affine:2,0"),
            8,
            200,
        )
        .unwrap();
        assert!(r.below_first_piece);
        assert!(r.boundaries_checked >= 3);
    }
}
