use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use num_traits::Zero;

use super::hrep::{Halfspace, HalfspaceSystem};
use super::linalg::affine_dimension;
use super::vertices::{polytope_dimension, VertexSet};
use crate::error::{Error, Result};

/// Vertices lying on the hyperplane of `h`.
pub(crate) fn tight_mask(h: &Halfspace, v: &VertexSet) -> FixedBitSet {
    let mut mask = FixedBitSet::with_capacity(v.len());
    for (k, x) in v.vertices.iter().enumerate() {
        if h.evaluate_unchecked(x).is_zero() {
            mask.insert(k);
        }
    }
    mask
}

pub(crate) fn mask_dimension(v: &VertexSet, mask: &FixedBitSet) -> Option<usize> {
    affine_dimension(mask.ones().map(|k| &v.vertices[k]))
}

pub(crate) fn require_full_dimension(v: &VertexSet) -> Result<()> {
    let dim = polytope_dimension(v);
    if v.is_empty() || dim < v.dim {
        return Err(Error::NotFullDimensional { dim, ambient: v.dim });
    }
    Ok(())
}

/// Facets with their tight vertex masks, first representative of each facet
/// in system order.
pub(crate) fn facets_with_masks(sys: &HalfspaceSystem, v: &VertexSet) -> Result<Vec<(Halfspace, FixedBitSet)>> {
    if sys.dim != v.dim {
        return Err(Error::DimensionMismatch { expected: sys.dim, found: v.dim });
    }
    require_full_dimension(v)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for h in &sys.halfspaces {
        let mask = tight_mask(h, v);
        if mask.count_ones(..) < v.dim || seen.contains(&mask) {
            continue;
        }
        if mask_dimension(v, &mask) == Some(v.dim - 1) {
            seen.insert(mask.clone());
            out.push((h.clone(), mask));
        }
    }
    Ok(out)
}

/// The irredundant sublist of `sys` whose hyperplanes support facets of
/// `conv(v)`; scaled duplicates are merged.
pub fn facet_halfspaces(sys: &HalfspaceSystem, v: &VertexSet) -> Result<Vec<Halfspace>> {
    Ok(facets_with_masks(sys, v)?.into_iter().map(|(h, _)| h).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::hrep::{hrep_chain, hrep_order};
    use crate::geometry::vertices::enumerate_vertices;
    use crate::geometry::rational::int;
    use crate::poset::Poset;

    fn facet_count(sys: &HalfspaceSystem) -> usize {
        let v = enumerate_vertices(sys).unwrap();
        facet_halfspaces(sys, &v).unwrap().len()
    }

    #[test]
    fn simplex_of_chain() {
        let sys = hrep_order(&Poset::chain(3).unwrap());
        let v = enumerate_vertices(&sys).unwrap();
        let tags: Vec<String> = facet_halfspaces(&sys, &v)
            .unwrap()
            .iter()
            .map(|h| h.inequality_string())
            .collect();
        assert_eq!(tags, vec!["x1 <= 1", "-x3 <= 0", "-x1 + x2 <= 0", "-x2 + x3 <= 0"]);
    }

    #[test]
    fn formulas_on_forked_chain() {
        let p = Poset::new(4, &[(1, 2), (1, 3), (3, 4)]).unwrap();
        // m_* + m^* + |E| = 1 + 2 + 3 and d + c = 4 + 2
        assert_eq!(facet_count(&hrep_order(&p)), 6);
        assert_eq!(facet_count(&hrep_chain(&p)), 6);
    }

    #[test]
    fn lower_dimensional_rejected() {
        let v = VertexSet::new(2, vec![vec![int(0), int(0)], vec![int(1), int(1)]]).unwrap();
        let sys = hrep_order(&Poset::chain(2).unwrap());
        assert!(matches!(facet_halfspaces(&sys, &v), Err(Error::NotFullDimensional { dim: 1, ambient: 2 })));
    }
}
