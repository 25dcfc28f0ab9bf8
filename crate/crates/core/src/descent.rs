//! Descent statistics, run-list encodings of descent sets, and the
//! maximization problems they govern on chains.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::{hrep_order_chain, Polytope, Rational};
use crate::limits::Limits;
use crate::partition::{enumerate_partitions_with, EdgePartition};
use crate::poset::{DescentSet, Poset};

/// Maximal blocks of `[n−1]` lying entirely in `S` or entirely outside it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RunList {
    pub n: usize,
    pub parts: Vec<usize>,
    /// Whether the first run lies in `S`.
    pub starts_in: bool,
}

impl RunList {
    pub fn new(n: usize, parts: Vec<usize>, starts_in: bool) -> Result<Self> {
        let total: usize = parts.iter().sum();
        if parts.contains(&0) || total + 1 != n.max(1) {
            return Err(Error::DimensionMismatch { expected: n.saturating_sub(1), found: total });
        }
        Ok(RunList { n, parts, starts_in })
    }
}

pub fn runs(s: &DescentSet) -> RunList {
    let n = s.n();
    let mut parts = Vec::new();
    let starts_in = n >= 2 && s.contains(1);
    let mut j = 1;
    while j < n {
        let inside = s.contains(j);
        let start = j;
        while j < n && s.contains(j) == inside {
            j += 1;
        }
        parts.push(j - start);
    }
    RunList { n, parts, starts_in }
}

pub fn subset_from_runs(l: &RunList) -> Result<DescentSet> {
    let mut elements = Vec::new();
    let mut next = 1;
    let mut inside = l.starts_in;
    for &len in &l.parts {
        if inside {
            elements.extend(next..next + len);
        }
        next += len;
        inside = !inside;
    }
    DescentSet::new(l.n, &elements)
}

fn descent_mask(perm: &[usize]) -> u64 {
    perm.windows(2)
        .enumerate()
        .filter(|(_, w)| w[0] > w[1])
        .fold(0, |m, (k, _)| m | 1 << k)
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn beta_brute_force(s: &DescentSet) -> Result<u128> {
    beta_brute_force_with(s, &Limits::default())
}

/// Counts permutations of `[n]` with descent set exactly `S`.
pub fn beta_brute_force_with(s: &DescentSet, limits: &Limits) -> Result<u128> {
    let n = s.n();
    if n > limits.beta_brute_force {
        return Err(Error::limit("brute-force descent statistic size", n, limits.beta_brute_force));
    }
    let target = s.mask();
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    loop {
        if descent_mask(&perm) == target {
            count += 1;
        }
        // next permutation in lexicographic order
        let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..perm.len()).rev().find(|&j| perm[j] > perm[i - 1]).expect("successor");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    Ok(count)
}

pub fn beta(s: &DescentSet) -> Result<u128> {
    beta_with(s, &Limits::default())
}

/// `β(S) = Σ_{T ⊆ S} (−1)^{|S∖T|} α(T)` where `α(T)` is the multinomial
/// coefficient of the composition of `n` cut at `T`.
pub fn beta_with(s: &DescentSet, limits: &Limits) -> Result<u128> {
    let n = s.n();
    if n > limits.beta_formula {
        return Err(Error::limit("descent statistic size", n, limits.beta_formula));
    }
    let full = s.mask();
    let size = full.count_ones();
    let mut total: i128 = 0;
    let mut t = full;
    loop {
        let mut alpha = factorial(n);
        let mut prev = 0;
        for j in (1..n).filter(|j| t >> (j - 1) & 1 == 1).chain(std::iter::once(n)) {
            alpha /= factorial(j - prev);
            prev = j;
        }
        let sign = if (size - t.count_ones()).is_multiple_of(2) { 1 } else { -1 };
        total += sign * alpha as i128;
        if t == 0 {
            break;
        }
        t = (t - 1) & full;
    }
    Ok(total as u128)
}

/// `F_n` with `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> u128 {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        (a, b) = (b, a + b);
    }
    a
}

pub fn in_family(s: &DescentSet) -> bool {
    let parts = runs(s).parts;
    parts.len() < 3 || parts[1..parts.len() - 1].iter().all(|&l| l >= 2)
}

pub fn family_f(n: usize) -> Result<Vec<DescentSet>> {
    family_f_with(n, &Limits::default())
}

/// Descent sets whose interior runs all have length at least two, in
/// canonical subset order.
pub fn family_f_with(n: usize, limits: &Limits) -> Result<Vec<DescentSet>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    if n > limits.descent_family {
        return Err(Error::limit("descent family size", n, limits.descent_family));
    }
    Ok(DescentSet::all(n).filter(in_family).collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentMaximum {
    pub n: usize,
    pub value: u128,
    pub argmax: Vec<DescentSet>,
}

pub fn max_beta_over_f(n: usize) -> Result<DescentMaximum> {
    max_beta_over_f_with(n, &Limits::default())
}

pub fn max_beta_over_f_with(n: usize, limits: &Limits) -> Result<DescentMaximum> {
    if n > limits.descent_max {
        return Err(Error::limit("descent maximization size", n, limits.descent_max));
    }
    let mut best = DescentMaximum { n, value: 0, argmax: Vec::new() };
    for s in family_f_with(n, limits)? {
        let b = beta_with(&s, limits)?;
        if b > best.value {
            best.value = b;
            best.argmax.clear();
        }
        if b == best.value {
            best.argmax.push(s);
        }
    }
    Ok(best)
}

/// Run-lists of the maximizers over the family: `(1, 2, …, 2)` and
/// `(2, …, 2, 1)` for even `n`, `(1, 2, …, 2, 1)` for odd `n`.
pub fn predicted_maximizer_runs(n: usize) -> Vec<Vec<usize>> {
    if n < 2 {
        return vec![Vec::new()];
    }
    let m = n / 2;
    if n.is_multiple_of(2) {
        let mut first = vec![1];
        first.extend(std::iter::repeat_n(2, m - 1));
        let mut second = vec![2; m - 1];
        second.push(1);
        if first == second {
            vec![first]
        } else {
            vec![first, second]
        }
    } else {
        let mut parts = vec![1];
        parts.extend(std::iter::repeat_n(2, m - 1));
        parts.push(1);
        vec![parts]
    }
}

/// Largest product of parts over compositions of `d`, with a maximizing
/// composition (parts in non-increasing order). Ties go to the smallest
/// largest part.
pub fn max_product_composition(d: usize) -> (Vec<usize>, u128) {
    fn walk(rest: usize, max_part: usize, parts: &mut Vec<usize>, best: &mut (Vec<usize>, u128)) {
        if rest == 0 {
            let product: u128 = parts.iter().map(|&m| m as u128).product();
            let better = product > best.1 || (product == best.1 && parts.first() < best.0.first());
            if better {
                *best = (parts.clone(), product);
            }
            return;
        }
        for m in (1..=rest.min(max_part)).rev() {
            parts.push(m);
            walk(rest - m, m, parts, best);
            parts.pop();
        }
    }
    let mut best = (Vec::new(), 0);
    walk(d, d, &mut Vec::new(), &mut best);
    if d == 0 {
        best.1 = 1;
    }
    best
}

/// `3^k`, `4·3^{k−1}` or `2·3^k` by the residue of `d = 3k + r`, for
/// `d ≥ 2`; `1` for `d ≤ 1`.
pub fn max_product_closed_form(d: usize) -> u128 {
    let k = (d / 3) as u32;
    match d % 3 {
        _ if d <= 1 => 1,
        0 => 3u128.pow(k),
        1 => 4 * 3u128.pow(k - 1),
        _ => 2 * 3u128.pow(k),
    }
}

/// `oE = {{1,2}, {3,4}, …}` on the chain `[n]`, stopping at `{n−1, n}` for
/// even `n` and at `{n−2, n−1}` for odd `n`.
pub fn alternating_partition(n: usize) -> Result<EdgePartition> {
    let chain = Poset::chain(n)?;
    let pairs: Vec<(usize, usize)> = (1..n).step_by(2).map(|i| (i, i + 1)).collect();
    EdgePartition::new(&chain, &pairs)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainVolumeMaximum {
    pub n: usize,
    pub volume: Rational,
    /// Every maximizing partition, in ascending order-edge bitmask order.
    pub argmax: Vec<EdgePartition>,
}

pub fn best_chain_partition(n: usize) -> Result<ChainVolumeMaximum> {
    best_chain_partition_with(n, &Limits::default())
}

/// Exhaustive volume maximization over all edge partitions of the chain `[n]`.
pub fn best_chain_partition_with(n: usize, limits: &Limits) -> Result<ChainVolumeMaximum> {
    if n > limits.chain_search {
        return Err(Error::limit("chain length for partition search", n, limits.chain_search));
    }
    let chain = Poset::chain(n)?;
    let mut best = ChainVolumeMaximum { n, volume: Rational::zero(), argmax: Vec::new() };
    for l in enumerate_partitions_with(&chain, limits)? {
        let v = Polytope::with_limits(hrep_order_chain(&l), limits)?.volume()?;
        if v > best.volume {
            best.volume = v.clone();
            best.argmax.clear();
        }
        if v == best.volume {
            best.argmax.push(l);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rational::ratio;

    fn set(n: usize, s: &[usize]) -> DescentSet {
        DescentSet::new(n, s).unwrap()
    }

    #[test]
    fn run_examples() {
        let r = runs(&set(10, &[1, 2, 5, 8, 9]));
        assert_eq!(r.parts, vec![2, 2, 1, 2, 2]);
        assert!(r.starts_in);
        let r = runs(&set(5, &[]));
        assert_eq!((r.parts, r.starts_in), (vec![4], false));
        let r = runs(&set(5, &[1, 2, 3, 4]));
        assert_eq!((r.parts, r.starts_in), (vec![4], true));
    }

    #[test]
    fn runs_round_trip() {
        for n in 1..=8 {
            for s in DescentSet::all(n) {
                assert_eq!(subset_from_runs(&runs(&s)).unwrap(), s);
            }
        }
    }

    #[test]
    fn beta_examples() {
        assert_eq!(beta(&set(6, &[])).unwrap(), 1);
        assert_eq!(beta(&set(4, &[2])).unwrap(), 5);
        assert_eq!(beta_brute_force(&set(4, &[2])).unwrap(), 5);
        assert_eq!(beta(&set(5, &[1, 4])).unwrap(), 11);
    }

    #[test]
    fn beta_sums_to_factorial() {
        for n in 1..=7 {
            let total: u128 = DescentSet::all(n).map(|s| beta(&s).unwrap()).sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn caps() {
        assert!(beta_brute_force(&set(10, &[])).is_err());
        assert!(beta(&set(13, &[])).is_err());
        assert!(family_f(21).is_err());
    }

    #[test]
    fn family_examples() {
        assert_eq!(family_f(2).unwrap().len(), 2);
        let f4 = family_f(4).unwrap();
        assert_eq!(f4.len(), 6);
        assert!(!f4.contains(&set(4, &[2])));
        assert_eq!(family_f(6).unwrap().len(), 16);
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(2), 1);
        assert_eq!(fibonacci(8), 21);
    }

    #[test]
    fn maximizers_small() {
        let m = max_beta_over_f(4).unwrap();
        assert_eq!(m.value, 3);
        let lists: Vec<Vec<usize>> = m.argmax.iter().map(|s| runs(s).parts).collect();
        assert!(lists.contains(&vec![1, 2]) && lists.contains(&vec![2, 1]));
        let m = max_beta_over_f(5).unwrap();
        assert_eq!(m.value, 11);
        assert!(m.argmax.contains(&set(5, &[1, 4])) && m.argmax.contains(&set(5, &[2, 3])));
    }

    #[test]
    fn products() {
        assert_eq!(max_product_composition(5).1, 6);
        assert_eq!(max_product_composition(6).1, 9);
        assert_eq!(max_product_composition(7).1, 12);
        assert_eq!(max_product_composition(5).0, vec![3, 2]);
        assert_eq!(max_product_composition(4).0, vec![2, 2]);
        assert_eq!(max_product_composition(1), (vec![1], 1));
    }

    #[test]
    fn chain_search_small() {
        let best = best_chain_partition(2).unwrap();
        assert_eq!(best.volume, ratio(1, 2));
        assert_eq!(best.argmax.len(), 2);
        let best = best_chain_partition(4).unwrap();
        assert_eq!(best.volume, ratio(3, 24));
        assert!(best.argmax.contains(&alternating_partition(4).unwrap()));
    }
}
