use crate::poset::Poset;

/// True when five elements induce the X poset: `a, b ≺ c ≺ e, f` with
/// `a ∥ b` and `e ∥ f`. Equivalently some element has an incomparable pair
/// strictly below it and another strictly above it.
pub fn contains_forbidden_x(p: &Poset) -> bool {
    let has_incomparable_pair = |mask: u64| {
        let elems: Vec<usize> = (1..=p.d()).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
        elems
            .iter()
            .enumerate()
            .any(|(k, &a)| elems[k + 1..].iter().any(|&b| !p.comparable(a, b)))
    };
    p.elements()
        .any(|c| has_incomparable_pair(p.down_mask(c)) && has_incomparable_pair(p.up_mask(c)))
}

/// Brute-force oracle: some 5-subset whose induced order is isomorphic to X.
#[cfg(test)]
pub(crate) fn contains_forbidden_x_by_subsets(p: &Poset) -> bool {
    let x = Poset::new(5, &[(1, 3), (2, 3), (3, 4), (3, 5)]).unwrap();
    let d = p.d();
    if d < 5 {
        return false;
    }
    let mut pick = [0usize; 5];
    fn rec(p: &Poset, x: &Poset, pick: &mut [usize; 5], k: usize, from: usize) -> bool {
        if k == 5 {
            let mut covers = Vec::new();
            for a in 0..5 {
                for b in 0..5 {
                    let direct = p.less(pick[a], pick[b])
                        && !(0..5).any(|c| p.less(pick[a], pick[c]) && p.less(pick[c], pick[b]));
                    if direct {
                        covers.push((a + 1, b + 1));
                    }
                }
            }
            let induced = Poset::new(5, &covers).expect("induced order is a poset");
            return crate::poset::is_isomorphic(&induced, x);
        }
        (from..=p.d()).any(|i| {
            pick[k] = i;
            rec(p, x, pick, k + 1, i + 1)
        })
    }
    rec(p, &x, &mut pick, 0, 1)
}
