/// `s ◁ t`: some infinite `X` has `s` as an initial segment while `Ṡ(X)`
/// has `t` as an initial segment.
///
/// With `s' = s ∖ {min s}` both `s'` and `t` are initial segments of `Ṡ(X)`,
/// so they are comparable, and whatever `t` adds to `s'` must come after
/// `max s`. For `s = ∅` the witness only needs an element below `min t`.
pub fn shift_rel(s: &[u64], t: &[u64]) -> bool {
    let Some((_, rest)) = s.split_first() else {
        return t.first().is_none_or(|&m| m > 0);
    };
    if rest.starts_with(t) {
        return true;
    }
    let top = *s.last().expect("nonempty");
    t.starts_with(rest) && t[rest.len()..].iter().all(|&x| x > top)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Decides `s ◁ t` for `s, t ⊆ [0, limit)` by trying every witness of the
    /// form `P ∪ [limit + 1, ∞)` with `P ⊆ [0, limit]`.
    ///
    /// Only the first `|s ∪ t| + 1` elements of a witness matter, and they can
    /// always be taken from `s ∪ t` plus one element below `min t`, so this
    /// search is complete for inputs below `limit`.
    fn shift_rel_oracle(s: &[u64], t: &[u64], limit: u64) -> bool {
        assert!(limit < 24, "oracle enumerates 2^(limit+1) witnesses");
        let is_prefix = |u: &[u64], x: &[u64]| x.len() >= u.len() && &x[..u.len()] == u;
        for mask in 0u32..1 << (limit + 1) {
            let mut x: Vec<u64> = (0..=limit).filter(|i| mask >> i & 1 == 1).collect();
            let need = s.len().max(t.len() + 1);
            let mut next = limit + 1;
            while x.len() < need {
                x.push(next);
                next += 1;
            }
            if is_prefix(s, &x) && is_prefix(t, &x[1..]) {
                return true;
            }
        }
        false
    }

    #[test]
    fn examples() {
        assert!(shift_rel(&[0], &[1]));
        assert!(!shift_rel(&[1], &[1]));
        assert!(shift_rel(&[0, 2], &[2, 5]));
        assert!(!shift_rel(&[1, 3], &[2, 4]));
        assert!(shift_rel(&[2, 3, 5], &[3]));
        assert!(shift_rel(&[], &[]));
        assert!(shift_rel(&[], &[3, 4]));
        assert!(!shift_rel(&[], &[0, 4]));
        assert!(shift_rel(&[4], &[]));
    }

    #[test]
    fn singletons_shift_iff_increasing() {
        for m in 0..10 {
            for n in 0..10 {
                assert_eq!(shift_rel(&[m], &[n]), m < n);
            }
        }
    }

    #[test]
    fn agrees_with_oracle_on_small_sets() {
        let sets: Vec<Vec<u64>> = (0u32..32)
            .map(|m| (0..5).filter(|i| m >> i & 1 == 1).collect())
            .collect();
        for s in &sets {
            for t in &sets {
                assert_eq!(shift_rel(s, t), shift_rel_oracle(s, t, 5), "{s:?} {t:?}");
            }
        }
    }
}
