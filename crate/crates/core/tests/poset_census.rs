//! Isomorphism-class enumeration against a brute-force canonical form.

use std::collections::BTreeSet;

use order_chain::poset::enumerate_posets_up_to_iso;
use order_chain::Poset;

/// Strict order as `d × d` bits, row-major.
fn relation_bits(d: usize, less: impl Fn(usize, usize) -> bool) -> u64 {
    let mut bits = 0;
    for i in 0..d {
        for j in 0..d {
            if less(i, j) {
                bits |= 1 << (i * d + j);
            }
        }
    }
    bits
}

fn permutations(d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..d).collect();
    loop {
        out.push(p.clone());
        let Some(i) = (1..d).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..d).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
}

/// Least relation bitstring over all relabelings.
fn canonical(d: usize, bits: u64, perms: &[Vec<usize>]) -> u64 {
    perms
        .iter()
        .map(|p| relation_bits(d, |i, j| bits >> (p[i] * d + p[j]) & 1 == 1))
        .min()
        .unwrap()
}

/// Every transitively closed relation contained in `i < j`, up to relabeling.
fn brute_force_classes(d: usize, perms: &[Vec<usize>]) -> BTreeSet<u64> {
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|i| (i + 1..d).map(move |j| (i, j))).collect();
    let mut classes = BTreeSet::new();
    for subset in 0..1u64 << pairs.len() {
        let has = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).is_some_and(|k| subset >> k & 1 == 1);
        let transitive = (0..d).all(|i| (0..d).all(|j| (0..d).all(|k| !(has(i, j) && has(j, k)) || has(i, k))));
        if transitive {
            classes.insert(canonical(d, relation_bits(d, has), perms));
        }
    }
    classes
}

fn library_classes(d: usize, perms: &[Vec<usize>]) -> (usize, BTreeSet<u64>) {
    let list: Vec<Poset> = enumerate_posets_up_to_iso(d).unwrap();
    let set = list
        .iter()
        .map(|p| canonical(d, relation_bits(d, |i, j| p.less(i + 1, j + 1)), perms))
        .collect();
    (list.len(), set)
}

#[test]
fn class_counts_match_brute_force() {
    for (d, expected) in [(1, 1), (2, 2), (3, 5), (4, 16), (5, 63), (6, 318)] {
        let perms = permutations(d);
        let brute = brute_force_classes(d, &perms);
        let (count, lib) = library_classes(d, &perms);
        assert_eq!(brute.len(), expected, "brute force at d = {d}");
        assert_eq!(count, expected, "library count at d = {d}");
        assert_eq!(lib, brute, "class sets differ at d = {d}");
    }
}

#[test]
fn canonical_representatives_are_naturally_labelled() {
    for d in 1..=5 {
        for p in enumerate_posets_up_to_iso(d).unwrap() {
            assert!(p.covers().iter().all(|&(i, j)| i < j), "{p:?}");
        }
    }
}
