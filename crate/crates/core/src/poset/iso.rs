use std::collections::BTreeMap;

use super::Poset;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Isomorphism-invariant code of a poset: the largest upper-triangular
/// comparability bit string over all natural labelings that list elements by
/// (height, cover degrees, down/up-set sizes).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub code: u64,
}

const MAX_CANONICAL: usize = 11;

fn element_key(p: &Poset, i: usize) -> (usize, usize, usize, u32, u32) {
    (
        p.height(i),
        p.lower_covers(i).len(),
        p.upper_covers(i).len(),
        p.down_mask(i).count_ones(),
        p.up_mask(i).count_ones(),
    )
}

/// Returns the canonical form and a relabeling `perm` (element `i` becomes
/// `perm[i - 1]`) realizing it.
pub(crate) fn canonical_labeling(p: &Poset) -> (CanonicalForm, Vec<usize>) {
    let n = p.d();
    assert!(n <= MAX_CANONICAL, "canonical form supports at most {MAX_CANONICAL} elements");
    let mut elements: Vec<usize> = p.elements().collect();
    elements.sort_by_key(|&i| (element_key(p, i), i));
    let keys: Vec<_> = elements.iter().map(|&i| element_key(p, i)).collect();

    // class boundaries in the sorted order
    let mut classes = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || keys[k] != keys[start] {
            classes.push(start..k);
            start = k;
        }
    }

    let mut best: Option<(u64, Vec<usize>)> = None;
    let mut order = elements.clone();
    fn permute_classes(
        p: &Poset,
        classes: &[std::ops::Range<usize>],
        c: usize,
        order: &mut Vec<usize>,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        if c == classes.len() {
            let code = encode(p, order);
            if best.as_ref().is_none_or(|(b, _)| code > *b) {
                *best = Some((code, order.clone()));
            }
            return;
        }
        let range = classes[c].clone();
        permute_range(p, classes, c, range.start, range.end, order, best);
    }
    fn permute_range(
        p: &Poset,
        classes: &[std::ops::Range<usize>],
        c: usize,
        k: usize,
        end: usize,
        order: &mut Vec<usize>,
        best: &mut Option<(u64, Vec<usize>)>,
    ) {
        if k + 1 >= end {
            permute_classes(p, classes, c + 1, order, best);
            return;
        }
        for swap in k..end {
            order.swap(k, swap);
            permute_range(p, classes, c, k + 1, end, order, best);
            order.swap(k, swap);
        }
    }
    permute_classes(p, &classes, 0, &mut order, &mut best);

    let (code, order) = best.expect("at least one labeling");
    let mut perm = vec![0; n];
    for (new_label, &old) in order.iter().enumerate() {
        perm[old - 1] = new_label + 1;
    }
    (CanonicalForm { n, code }, perm)
}

/// Bits for pairs `(a, b)`, `a < b` in new labels, row-major, first pair most
/// significant.
fn encode(p: &Poset, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for a in 0..n {
        for b in a + 1..n {
            code = (code << 1) | u64::from(p.less(order[a], order[b]));
        }
    }
    code
}

pub fn canonical_form(p: &Poset) -> CanonicalForm {
    canonical_labeling(p).0
}

pub fn is_isomorphic(p: &Poset, q: &Poset) -> bool {
    p.d() == q.d() && canonical_form(p) == canonical_form(q)
}

impl Poset {
    /// The canonically relabeled copy of this poset.
    pub fn canonical(&self) -> Poset {
        let (_, perm) = canonical_labeling(self);
        self.relabel(&perm).expect("relabeling preserves validity")
    }
}

/// One canonically labeled representative per isomorphism class of posets on
/// `n` elements, ordered by canonical code.
pub fn enumerate_posets_up_to_iso(n: usize) -> Result<Vec<Poset>> {
    enumerate_posets_up_to_iso_with(n, &Limits::default())
}

pub fn enumerate_posets_up_to_iso_with(n: usize, limits: &Limits) -> Result<Vec<Poset>> {
    enumerate_posets_pruned(n, limits, |_| true)
}

/// Like [`enumerate_posets_up_to_iso_with`], keeping only classes accepted by
/// `keep` at every size. `keep` must be inherited by the poset obtained by
/// deleting a maximal element, so that no accepted class is missed.
pub fn enumerate_posets_pruned(n: usize, limits: &Limits, keep: impl Fn(&Poset) -> bool) -> Result<Vec<Poset>> {
    if n == 0 {
        return Err(Error::EmptyGroundSet);
    }
    let cap = limits.iso_class_elements.min(MAX_CANONICAL);
    if n > cap {
        return Err(Error::limit("isomorphism enumeration size", n, cap));
    }
    // Every poset arises from one on n - 1 elements by adding a maximal
    // element whose strict down-set is an order ideal.
    let mut level: Vec<Poset> = vec![Poset::antichain(1)?];
    level.retain(&keep);
    for k in 2..=n {
        let mut next: BTreeMap<u64, Poset> = BTreeMap::new();
        for rep in &level {
            for ideal in rep.order_ideal_masks() {
                let mut below: Vec<u64> = (1..k).map(|i| rep.down_mask(i)).collect();
                below.push(ideal);
                let candidate = Poset::from_down_sets(below);
                if !keep(&candidate) {
                    continue;
                }
                let (form, perm) = canonical_labeling(&candidate);
                next.entry(form.code)
                    .or_insert_with(|| candidate.relabel(&perm).expect("valid relabeling"));
            }
        }
        level = next.into_values().collect();
    }
    Ok(level)
}
