//! Exact volume by pulling triangulation: cone the canonically least vertex
//! over every facet that misses it, recursing into each facet.

use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::facets::{mask_dimension, require_full_dimension, tight_mask};
use super::hrep::Halfspace;
use super::linalg::determinant;
use super::rational::Rational;
use super::vertices::VertexSet;
use crate::error::{Error, Result};

struct Pulling<'a> {
    vertices: &'a VertexSet,
    facets: Vec<FixedBitSet>,
    dims: HashMap<FixedBitSet, usize>,
    faces: HashMap<FixedBitSet, Vec<FixedBitSet>>,
}

impl Pulling<'_> {
    fn dimension(&mut self, mask: &FixedBitSet) -> usize {
        if let Some(&k) = self.dims.get(mask) {
            return k;
        }
        let k = mask_dimension(self.vertices, mask).unwrap_or(0);
        self.dims.insert(mask.clone(), k);
        k
    }

    /// Facets of a `k`-dimensional face, as vertex masks.
    fn facets_of(&mut self, face: &FixedBitSet, k: usize) -> Vec<FixedBitSet> {
        if let Some(found) = self.faces.get(face) {
            return found.clone();
        }
        let mut out: Vec<FixedBitSet> = Vec::new();
        for g in self.facets.clone() {
            let mut sub = face.clone();
            sub.intersect_with(&g);
            if sub == *face || sub.count_ones(..) < k || out.contains(&sub) {
                continue;
            }
            if self.dimension(&sub) + 1 == k {
                out.push(sub);
            }
        }
        self.faces.insert(face.clone(), out.clone());
        out
    }

    /// Sum of `|det|` over the simplices `apex ∪ σ` for σ in a triangulation
    /// of `face`.
    fn pull(&mut self, face: &FixedBitSet, k: usize, apex: &mut Vec<usize>) -> Rational {
        let v0 = face.ones().next().expect("nonempty face");
        if k == 0 {
            apex.push(v0);
            let simplex = self.simplex_det(apex);
            apex.pop();
            return simplex;
        }
        let mut total = Rational::zero();
        for sub in self.facets_of(face, k) {
            if sub.contains(v0) {
                continue;
            }
            apex.push(v0);
            total += self.pull(&sub, k - 1, apex);
            apex.pop();
        }
        total
    }

    fn simplex_det(&self, simplex: &[usize]) -> Rational {
        let base = &self.vertices.vertices[simplex[0]];
        let rows: Vec<Vec<Rational>> = simplex[1..]
            .iter()
            .map(|&k| {
                self.vertices.vertices[k]
                    .iter()
                    .zip(base)
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        determinant(rows).abs()
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Euclidean volume of `conv(v)`, where `facets` are its facet halfspaces.
pub fn volume_exact(v: &VertexSet, facets: &[Halfspace]) -> Result<Rational> {
    require_full_dimension(v)?;
    if let Some(h) = facets.iter().find(|h| h.dim() != v.dim) {
        return Err(Error::DimensionMismatch { expected: v.dim, found: h.dim() });
    }
    let masks: Vec<FixedBitSet> = facets.iter().map(|h| tight_mask(h, v)).collect();
    let mut pulling = Pulling {
        vertices: v,
        facets: masks,
        dims: HashMap::new(),
        faces: HashMap::new(),
    };
    let mut everything = FixedBitSet::with_capacity(v.len());
    everything.insert_range(..);
    let total = pulling.pull(&everything, v.dim, &mut Vec::with_capacity(v.dim + 1));
    Ok(total / Rational::from_integer(factorial(v.dim)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::facets::facet_halfspaces;
    use crate::geometry::hrep::{hrep_chain, hrep_order, hrep_order_chain, HalfspaceSystem};
    use crate::geometry::rational::ratio;
    use crate::geometry::vertices::enumerate_vertices;
    use crate::partition::EdgePartition;
    use crate::poset::Poset;

    fn volume(sys: &HalfspaceSystem) -> Rational {
        let v = enumerate_vertices(sys).unwrap();
        let f = facet_halfspaces(sys, &v).unwrap();
        volume_exact(&v, &f).unwrap()
    }

    #[test]
    fn simple_shapes() {
        assert_eq!(volume(&hrep_order(&Poset::antichain(3).unwrap())), ratio(1, 1));
        assert_eq!(volume(&hrep_order(&Poset::chain(3).unwrap())), ratio(1, 6));
        assert_eq!(volume(&hrep_chain(&Poset::chain(4).unwrap())), ratio(1, 24));
    }

    #[test]
    fn forked_chain_volumes() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(volume(&hrep_order(&p)), ratio(3, 24));
        assert_eq!(volume(&hrep_chain(&p)), ratio(3, 24));
        let l = EdgePartition::new(&p, &[(1, 2)]).unwrap();
        assert_eq!(volume(&hrep_order_chain(&l)), ratio(1, 24));
        let l2 = EdgePartition::new(&p, &[(1, 2), (1, 3)]).unwrap();
        assert_eq!(volume(&hrep_order_chain(&l2)), ratio(5, 24));
    }

    #[test]
    fn half_integral_polytope() {
        // diamond with cE = {1,3}: exact volume even with a 1/2 vertex
        let p = Poset::new(4, &[(1, 2), (1, 3), (2, 4), (3, 4)]).unwrap();
        let l = EdgePartition::new(&p, &[(1, 2), (2, 4), (3, 4)]).unwrap();
        let sys = hrep_order_chain(&l);
        let v = volume(&sys);
        assert!(v > Rational::zero() && v < ratio(1, 1));
    }
}
