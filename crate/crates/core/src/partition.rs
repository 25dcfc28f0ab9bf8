//! Edge partitions `ℓ = (oE, cE)` of a Hasse diagram.

use std::fmt;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::poset::Poset;

/// An ordered bipartition of the cover pairs of `base`. Bit `k` of the
/// order-part mask refers to `base.covers()[k]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgePartition {
    base: Poset,
    order_mask: u64,
}

impl fmt::Debug for EdgePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EdgePartition")
            .field("d", &self.base.d())
            .field("o", &self.order_edges())
            .field("c", &self.chain_edges())
            .finish()
    }
}

fn edge_index(p: &Poset, (i, j): (usize, usize)) -> Result<usize> {
    p.covers()
        .iter()
        .position(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i))
        .ok_or(Error::UnknownEdge(i, j))
}

impl EdgePartition {
    /// Pairs in `order_edges` are unordered: `(i, j)` and `(j, i)` name the same
    /// cover.
    pub fn new(base: &Poset, order_edges: &[(usize, usize)]) -> Result<Self> {
        if base.edge_count() > 64 {
            return Err(Error::limit("Hasse edge count", base.edge_count(), 64));
        }
        let mut order_mask = 0u64;
        for &e in order_edges {
            order_mask |= 1 << edge_index(base, e)?;
        }
        Ok(EdgePartition { base: base.clone(), order_mask })
    }

    pub(crate) fn from_mask(base: &Poset, order_mask: u64) -> Self {
        EdgePartition { base: base.clone(), order_mask }
    }

    /// oE = E(P): the order polytope.
    pub fn all_order(base: &Poset) -> Self {
        let m = base.edge_count();
        let mask = if m == 64 { u64::MAX } else { (1u64 << m) - 1 };
        EdgePartition::from_mask(base, mask)
    }

    /// oE = ∅: the chain polytope.
    pub fn all_chain(base: &Poset) -> Self {
        EdgePartition::from_mask(base, 0)
    }

    pub fn base(&self) -> &Poset {
        &self.base
    }

    /// Bitmask of the order part over the sorted cover list.
    pub fn order_mask(&self) -> u64 {
        self.order_mask
    }

    fn edges_where(&self, in_order: bool) -> Vec<(usize, usize)> {
        self.base
            .covers()
            .iter()
            .enumerate()
            .filter(|(k, _)| (self.order_mask >> k & 1 == 1) == in_order)
            .map(|(_, &e)| e)
            .collect()
    }

    /// oE, sorted.
    pub fn order_edges(&self) -> Vec<(usize, usize)> {
        self.edges_where(true)
    }

    /// cE, sorted.
    pub fn chain_edges(&self) -> Vec<(usize, usize)> {
        self.edges_where(false)
    }

    pub fn is_nontrivial(&self) -> bool {
        !self.order_edges().is_empty() && !self.chain_edges().is_empty()
    }

    /// P′_ℓ: the ground set with only the order-part covers.
    pub fn order_part(&self) -> Poset {
        Poset::new(self.base.d(), &self.order_edges()).expect("sub-diagram of a Hasse diagram")
    }

    /// P″_ℓ: the ground set with only the chain-part covers.
    pub fn chain_part(&self) -> Poset {
        Poset::new(self.base.d(), &self.chain_edges()).expect("sub-diagram of a Hasse diagram")
    }

    /// `(cE, oE)`.
    pub fn complement(&self) -> EdgePartition {
        let all = EdgePartition::all_order(&self.base).order_mask;
        EdgePartition::from_mask(&self.base, all & !self.order_mask)
    }
}

pub fn make_partition(p: &Poset, order_edges: &[(usize, usize)]) -> Result<EdgePartition> {
    EdgePartition::new(p, order_edges)
}

pub fn order_part(l: &EdgePartition) -> Poset {
    l.order_part()
}

pub fn chain_part(l: &EdgePartition) -> Poset {
    l.chain_part()
}

/// All `2^|E(P)|` partitions, order-part bitmask ascending.
pub fn enumerate_partitions(p: &Poset) -> Result<impl Iterator<Item = EdgePartition> + '_> {
    enumerate_partitions_with(p, &Limits::default())
}

pub fn enumerate_partitions_with<'a>(
    p: &'a Poset,
    limits: &Limits,
) -> Result<impl Iterator<Item = EdgePartition> + 'a> {
    let m = p.edge_count();
    if m > limits.partition_edges.min(63) {
        return Err(Error::limit("Hasse edge count", m, limits.partition_edges.min(63)));
    }
    Ok((0..1u64 << m).map(move |mask| EdgePartition::from_mask(p, mask)))
}

/// True when the undirected Hasse diagram has no cycle.
pub fn is_hasse_forest(p: &Poset) -> bool {
    // a graph is a forest iff |E| = |V| - #components
    p.edge_count() + p.components().len() == p.d()
}

/// `(E ∖ E_S, E_S)` where `E_S` is every cover incident to an element of `S`.
pub fn minimal_incident_partition(p: &Poset, minimal: &[usize]) -> Result<EdgePartition> {
    for &s in minimal {
        if s == 0 || s > p.d() {
            return Err(Error::IndexOutOfRange { element: s, d: p.d() });
        }
        if !p.is_minimal(s) {
            return Err(Error::NotMinimal(s));
        }
    }
    let order: Vec<_> = p
        .covers()
        .iter()
        .copied()
        .filter(|(i, j)| !minimal.contains(i) && !minimal.contains(j))
        .collect();
    EdgePartition::new(p, &order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Poset {
        Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn intro_chain_partition() {
        let p = Poset::chain(7).unwrap();
        let l = EdgePartition::new(&p, &[(1, 2), (4, 5), (5, 6)]).unwrap();
        assert_eq!(l.chain_edges(), vec![(2, 3), (3, 4), (6, 7)]);
        assert_eq!(
            l.order_part().components(),
            vec![vec![1, 2], vec![3], vec![4, 5, 6], vec![7]]
        );
        assert_eq!(
            l.chain_part().components(),
            vec![vec![1], vec![2, 3, 4], vec![5], vec![6, 7]]
        );
        assert!(l.is_nontrivial());
    }

    #[test]
    fn unordered_pairs_and_unknown_edges() {
        let p = diamond();
        let l1 = EdgePartition::new(&p, &[(2, 1), (4, 2), (3, 4)]).unwrap();
        assert_eq!(l1.chain_edges(), vec![(1, 3)]);
        assert_eq!(EdgePartition::new(&p, &[(1, 4)]), Err(Error::UnknownEdge(1, 4)));
    }

    #[test]
    fn trivial_partitions() {
        let p = diamond();
        let all = EdgePartition::all_order(&p);
        assert!(all.chain_part().is_antichain());
        assert_eq!(all.order_part(), p);
        assert!(!all.is_nontrivial());
        assert_eq!(all.complement(), EdgePartition::all_chain(&p));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(&Poset::chain(2).unwrap()).unwrap().count(), 2);
        assert_eq!(enumerate_partitions(&diamond()).unwrap().count(), 16);
        assert_eq!(enumerate_partitions(&Poset::chain(4).unwrap()).unwrap().count(), 8);
        let masks: Vec<_> = enumerate_partitions(&diamond()).unwrap().map(|l| l.order_mask()).collect();
        assert_eq!(masks, (0..16).collect::<Vec<_>>());
        let big = Poset::leveled(&[5, 5]).unwrap();
        assert!(enumerate_partitions(&big).is_err());
    }

    #[test]
    fn forests() {
        assert!(is_hasse_forest(&Poset::chain(5).unwrap()));
        assert!(is_hasse_forest(&Poset::new(5, &[(1, 2), (4, 5)]).unwrap()));
        assert!(!is_hasse_forest(&diamond()));
        let x = Poset::new(5, &[(1, 3), (2, 3), (3, 4), (3, 5)]).unwrap();
        assert!(is_hasse_forest(&x));
    }

    #[test]
    fn minimal_incidence() {
        let p = diamond();
        let l = minimal_incident_partition(&p, &[1]).unwrap();
        assert_eq!(l.chain_edges(), vec![(1, 2), (1, 3)]);
        assert_eq!(l.order_edges(), vec![(2, 4), (3, 4)]);
        assert_eq!(minimal_incident_partition(&p, &[]).unwrap(), EdgePartition::all_order(&p));
        assert_eq!(minimal_incident_partition(&p, &[2]), Err(Error::NotMinimal(2)));

        let forked = Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).unwrap();
        let l = minimal_incident_partition(&forked, &[1]).unwrap();
        assert_eq!(l.chain_edges(), vec![(1, 2), (1, 3)]);
        assert_eq!(l.order_edges(), vec![(3, 4)]);
    }

    #[test]
    fn parts_cover_edges_disjointly() {
        let p = diamond();
        for l in enumerate_partitions(&p).unwrap() {
            let mut all = l.order_part().covers().to_vec();
            all.extend_from_slice(l.chain_part().covers());
            all.sort();
            assert_eq!(all, p.covers());
            assert_eq!(l.complement().complement(), l);
        }
    }
}
