//! Finite posets on `[d] = {1, …, d}` presented by their Hasse diagrams.
//!
//! Elements are 1-based throughout the public API. Subsets of the ground set
//! are returned as sorted element lists; internally they are `u64` masks with
//! element `i` at bit `i - 1`, which caps posets at 64 elements.

mod iso;
mod zigzag;

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;

pub use iso::{
    canonical_form, enumerate_posets_pruned, enumerate_posets_up_to_iso, enumerate_posets_up_to_iso_with, is_isomorphic,
    CanonicalForm,
};
pub use zigzag::{descent_set_of_zigzag, zigzag_from_descent_set, DescentSet};

pub const MAX_ELEMENTS: usize = 64;

#[inline]
pub(crate) fn bit(element: usize) -> u64 {
    1u64 << (element - 1)
}

pub(crate) fn mask_elements(mask: u64) -> Vec<usize> {
    (1..=64).filter(|&i| mask & bit(i) != 0).collect()
}

/// Sort subsets by size, then lexicographically by their sorted elements.
pub(crate) fn sort_subsets(masks: &mut [u64]) {
    masks.sort_by_key(|&m| (m.count_ones(), mask_elements(m)));
}

/// A finite poset given by an irredundant list of cover pairs `(i, j)`,
/// read "`j` covers `i`".
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    d: usize,
    covers: Vec<(usize, usize)>,
    /// Strict down-set of each element, indexed by `element - 1`.
    below: Vec<u64>,
}

impl fmt::Debug for Poset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poset(d={}, covers={:?})", self.d, self.covers)
    }
}

/// A chain `j₁ ≺ j₂ ≺ ⋯ ≺ j_s` listed bottom to top.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    pub elements: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PosetStats {
    pub min_count: usize,
    pub max_count: usize,
    pub edge_count: usize,
    pub chain_count: usize,
}

impl Poset {
    /// Validates and stores a Hasse diagram. Cover pairs are kept sorted.
    pub fn new(d: usize, covers: &[(usize, usize)]) -> Result<Self> {
        if d == 0 {
            return Err(Error::EmptyGroundSet);
        }
        if d > MAX_ELEMENTS {
            return Err(Error::limit("poset size", d, MAX_ELEMENTS));
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in covers {
            for e in [i, j] {
                if e == 0 || e > d {
                    return Err(Error::IndexOutOfRange { element: e, d });
                }
            }
            if i == j {
                return Err(Error::DirectedCycle(i));
            }
            if !seen.insert((i, j)) {
                return Err(Error::DuplicateCover(i, j));
            }
        }
        let covers: Vec<(usize, usize)> = seen.into_iter().collect();

        // Kahn's algorithm; leftover elements lie on a directed cycle.
        let mut indegree = vec![0usize; d + 1];
        for &(_, j) in &covers {
            indegree[j] += 1;
        }
        let mut queue: Vec<usize> = (1..=d).filter(|&i| indegree[i] == 0).collect();
        let mut order = Vec::with_capacity(d);
        while let Some(i) = queue.pop() {
            order.push(i);
            for &(a, b) in &covers {
                if a == i {
                    indegree[b] -= 1;
                    if indegree[b] == 0 {
                        queue.push(b);
                    }
                }
            }
        }
        if order.len() < d {
            let stuck = (1..=d).find(|&i| indegree[i] > 0).unwrap_or(1);
            return Err(Error::DirectedCycle(stuck));
        }

        let mut below = vec![0u64; d];
        for &j in &order {
            for &(i, jj) in &covers {
                if jj == j {
                    below[j - 1] |= below[i - 1] | bit(i);
                }
            }
        }
        for &(i, j) in &covers {
            let redundant = covers
                .iter()
                .any(|&(k, jj)| jj == j && k != i && below[k - 1] & bit(i) != 0);
            if redundant {
                return Err(Error::TransitiveCover(i, j));
            }
        }
        Ok(Poset { d, covers, below })
    }

    /// Builds a poset from strict down-sets (transitively closed), taking its
    /// transitive reduction as the Hasse diagram.
    pub(crate) fn from_down_sets(below: Vec<u64>) -> Self {
        let d = below.len();
        let mut covers = Vec::new();
        for j in 1..=d {
            for i in 1..=d {
                if below[j - 1] & bit(i) == 0 {
                    continue;
                }
                let between = (1..=d).any(|k| below[j - 1] & bit(k) != 0 && below[k - 1] & bit(i) != 0);
                if !between {
                    covers.push((i, j));
                }
            }
        }
        covers.sort_unstable();
        Poset { d, covers, below }
    }

    pub fn chain(n: usize) -> Result<Self> {
        let covers: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        Poset::new(n, &covers)
    }

    pub fn antichain(n: usize) -> Result<Self> {
        Poset::new(n, &[])
    }

    /// Ordinal sum of antichains: every element of level `k` is covered by
    /// every element of level `k + 1`. Elements are numbered level by level.
    pub fn leveled(level_sizes: &[usize]) -> Result<Self> {
        let mut covers = Vec::new();
        let mut start = 1;
        for w in level_sizes.windows(2) {
            let next = start + w[0];
            for i in start..next {
                for j in next..next + w[1] {
                    covers.push((i, j));
                }
            }
            start = next;
        }
        Poset::new(level_sizes.iter().sum(), &covers)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// Cover pairs `(i, j)` with `i ≺ j`, sorted lexicographically. This is E(P).
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn edge_count(&self) -> usize {
        self.covers.len()
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        1..=self.d
    }

    /// Strict comparison `i ≺ j`.
    pub fn less(&self, i: usize, j: usize) -> bool {
        self.below[j - 1] & bit(i) != 0
    }

    pub fn comparable(&self, i: usize, j: usize) -> bool {
        i == j || self.less(i, j) || self.less(j, i)
    }

    pub(crate) fn down_mask(&self, i: usize) -> u64 {
        self.below[i - 1]
    }

    pub(crate) fn up_mask(&self, i: usize) -> u64 {
        (1..=self.d)
            .filter(|&j| self.less(i, j))
            .fold(0, |m, j| m | bit(j))
    }

    pub fn upper_covers(&self, i: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.0 == i).map(|c| c.1).collect()
    }

    pub fn lower_covers(&self, j: usize) -> Vec<usize> {
        self.covers.iter().filter(|c| c.1 == j).map(|c| c.0).collect()
    }

    pub fn is_minimal(&self, i: usize) -> bool {
        self.below[i - 1] == 0
    }

    pub fn is_maximal(&self, i: usize) -> bool {
        !self.covers.iter().any(|c| c.0 == i)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        self.elements().filter(|&i| self.is_minimal(i)).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        self.elements().filter(|&i| self.is_maximal(i)).collect()
    }

    /// Length of the longest chain ending at `i`, counted in covers.
    pub(crate) fn height(&self, i: usize) -> usize {
        self.lower_covers(i)
            .into_iter()
            .map(|k| self.height(k) + 1)
            .max()
            .unwrap_or(0)
    }

    pub fn is_chain(&self) -> bool {
        self.elements()
            .all(|i| self.elements().all(|j| self.comparable(i, j)))
    }

    pub fn is_antichain(&self) -> bool {
        self.covers.is_empty()
    }

    pub(crate) fn is_ideal_mask(&self, mask: u64) -> bool {
        mask_elements(mask)
            .into_iter()
            .all(|i| self.below[i - 1] & !mask == 0)
    }

    /// Order ideals as masks, canonically ordered.
    pub(crate) fn order_ideal_masks(&self) -> Vec<u64> {
        let order = self.linear_order();
        let mut out = Vec::new();
        fn walk(p: &Poset, order: &[usize], k: usize, mask: u64, out: &mut Vec<u64>) {
            if k == order.len() {
                out.push(mask);
                return;
            }
            let i = order[k];
            walk(p, order, k + 1, mask, out);
            if p.below[i - 1] & !mask == 0 {
                walk(p, order, k + 1, mask | bit(i), out);
            }
        }
        walk(self, &order, 0, 0, &mut out);
        sort_subsets(&mut out);
        out
    }

    /// Antichains as masks, canonically ordered.
    pub(crate) fn antichain_masks(&self) -> Vec<u64> {
        let mut out = Vec::new();
        fn walk(p: &Poset, i: usize, mask: u64, out: &mut Vec<u64>) {
            if i > p.d {
                out.push(mask);
                return;
            }
            walk(p, i + 1, mask, out);
            let clash = mask_elements(mask).into_iter().any(|j| p.comparable(i, j));
            if !clash {
                walk(p, i + 1, mask | bit(i), out);
            }
        }
        walk(self, 1, 0, &mut out);
        sort_subsets(&mut out);
        out
    }

    /// A fixed linear extension (smallest available label first).
    pub(crate) fn linear_order(&self) -> Vec<usize> {
        let mut placed = 0u64;
        let mut order = Vec::with_capacity(self.d);
        while order.len() < self.d {
            let next = self
                .elements()
                .find(|&i| placed & bit(i) == 0 && self.below[i - 1] & !placed == 0)
                .expect("partial order has a minimal unplaced element");
            placed |= bit(next);
            order.push(next);
        }
        order
    }

    pub fn order_ideals(&self) -> Vec<Vec<usize>> {
        self.order_ideal_masks().into_iter().map(mask_elements).collect()
    }

    pub fn antichains(&self) -> Vec<Vec<usize>> {
        self.antichain_masks().into_iter().map(mask_elements).collect()
    }

    /// All maximal chains, lexicographically ordered. Their number is c(P).
    pub fn maximal_chains(&self) -> Vec<Chain> {
        let mut out = Vec::new();
        let mut stack = Vec::new();
        fn walk(p: &Poset, i: usize, stack: &mut Vec<usize>, out: &mut Vec<Chain>) {
            stack.push(i);
            let ups = p.upper_covers(i);
            if ups.is_empty() {
                out.push(Chain { elements: stack.clone() });
            }
            for j in ups {
                walk(p, j, stack, out);
            }
            stack.pop();
        }
        for m in self.minimal_elements() {
            walk(self, m, &mut stack, &mut out);
        }
        out.sort();
        out
    }

    pub fn stats(&self) -> PosetStats {
        PosetStats {
            min_count: self.minimal_elements().len(),
            max_count: self.maximal_elements().len(),
            edge_count: self.edge_count(),
            chain_count: self.maximal_chains().len(),
        }
    }

    /// e(P), the number of linear extensions, by dynamic programming over
    /// order ideals.
    pub fn linear_extensions_count(&self) -> Result<u128> {
        self.linear_extensions_count_with(&Limits::default())
    }

    pub fn linear_extensions_count_with(&self, limits: &Limits) -> Result<u128> {
        if self.d > limits.linear_extension_elements || self.d > 30 {
            return Err(Error::limit(
                "linear extension poset size",
                self.d,
                limits.linear_extension_elements.min(30),
            ));
        }
        let size = 1usize << self.d;
        let mut ways = vec![0u128; size];
        ways[0] = 1;
        for mask in 1..size {
            let m = mask as u64;
            if !self.is_ideal_mask(m) {
                continue;
            }
            let mut total = 0u128;
            for i in mask_elements(m) {
                // i can be placed last if nothing in the ideal lies above it
                if self.up_mask(i) & m == 0 {
                    total += ways[(m & !bit(i)) as usize];
                }
            }
            ways[mask] = total;
        }
        Ok(ways[size - 1])
    }

    /// Reverses every cover pair.
    pub fn dual(&self) -> Poset {
        let covers: Vec<_> = self.covers.iter().map(|&(i, j)| (j, i)).collect();
        Poset::new(self.d, &covers).expect("dual of a valid Hasse diagram is valid")
    }

    /// `self ⊎ other`, with `other` shifted by `self.d()`.
    pub fn disjoint_union(&self, other: &Poset) -> Result<Poset> {
        let shift = self.d;
        let covers: Vec<_> = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(i, j)| (i + shift, j + shift)))
            .collect();
        Poset::new(self.d + other.d, &covers)
    }

    /// Relabels element `i` as `perm[i - 1]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Poset> {
        if perm.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: perm.len() });
        }
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(i, j)| (perm[i - 1], perm[j - 1]))
            .collect();
        Poset::new(self.d, &covers)
    }

    /// Connected components of the undirected Hasse diagram, each sorted,
    /// listed by smallest element.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label: Vec<usize> = (0..=self.d).collect();
        fn find(label: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while label[r] != r {
                r = label[r];
            }
            label[x] = r;
            r
        }
        for &(i, j) in &self.covers {
            let (a, b) = (find(&mut label, i), find(&mut label, j));
            if a != b {
                label[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut root_index = vec![usize::MAX; self.d + 1];
        for i in 1..=self.d {
            let r = find(&mut label, i);
            if root_index[r] == usize::MAX {
                root_index[r] = groups.len();
                groups.push(Vec::new());
            }
            groups[root_index[r]].push(i);
        }
        groups
    }
}

pub fn new_poset(d: usize, covers: &[(usize, usize)]) -> Result<Poset> {
    Poset::new(d, covers)
}

pub fn order_ideals(p: &Poset) -> Vec<Vec<usize>> {
    p.order_ideals()
}

pub fn antichains(p: &Poset) -> Vec<Vec<usize>> {
    p.antichains()
}

pub fn maximal_chains(p: &Poset) -> Vec<Chain> {
    p.maximal_chains()
}

pub fn linear_extensions_count(p: &Poset) -> Result<u128> {
    p.linear_extensions_count()
}

pub fn dual_poset(p: &Poset) -> Poset {
    p.dual()
}

pub fn poset_stats(p: &Poset) -> PosetStats {
    p.stats()
}

pub fn disjoint_union(p: &Poset, q: &Poset) -> Result<Poset> {
    p.disjoint_union(q)
}
