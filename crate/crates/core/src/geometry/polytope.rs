use fixedbitset::FixedBitSet;

use num_integer::Integer;
use num_traits::ToPrimitive;

use super::facets::{facets_with_masks, tight_mask};
use super::lattice::count_in_box;
use super::hrep::{Halfspace, HalfspaceSystem};
use super::rational::Rational;
use super::vertices::{enumerate_vertices_with, is_integral, VertexSet};
use super::volume::volume_exact;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// A full-dimensional polytope with both representations resolved.
#[derive(Clone, Debug)]
pub struct Polytope {
    pub system: HalfspaceSystem,
    pub vertices: VertexSet,
    pub facets: Vec<Halfspace>,
    /// `facet_masks[k]` marks the vertices on `facets[k]`.
    pub facet_masks: Vec<FixedBitSet>,
}

impl Polytope {
    pub fn new(system: HalfspaceSystem) -> Result<Self> {
        Polytope::with_limits(system, &Limits::default())
    }

    pub fn with_limits(system: HalfspaceSystem, limits: &Limits) -> Result<Self> {
        let vertices = enumerate_vertices_with(&system, limits)?;
        let (facets, facet_masks) = facets_with_masks(&system, &vertices)?.into_iter().unzip();
        Ok(Polytope { system, vertices, facets, facet_masks })
    }

    /// Assembles a polytope from known vertices and facets, e.g. the image of
    /// another polytope under an affine map.
    pub fn from_parts(system: HalfspaceSystem, vertices: VertexSet, facets: Vec<Halfspace>) -> Self {
        let facet_masks = facets.iter().map(|h| tight_mask(h, &vertices)).collect();
        Polytope { system, vertices, facets, facet_masks }
    }

    pub fn dim(&self) -> usize {
        self.system.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    pub fn is_integral(&self) -> bool {
        is_integral(&self.vertices)
    }

    pub fn volume(&self) -> Result<Rational> {
        volume_exact(&self.vertices, &self.facets)
    }

    /// Integer points of `t · P`, scanning the bounding box of the dilated
    /// vertices.
    pub fn lattice_points(&self, t: u32, limits: &Limits) -> Result<u64> {
        let d = self.dim();
        let mut lo = vec![i64::MAX; d];
        let mut hi = vec![i64::MIN; d];
        let scale = Rational::from_integer(t.into());
        for v in self.vertices.iter() {
            for (k, x) in v.iter().enumerate() {
                let y = x * &scale;
                let floor = y.numer().div_floor(y.denom());
                let ceil = (-y.numer()).div_floor(y.denom());
                let floor = floor.to_i64().ok_or(Error::limit("lattice box coordinate", u64::MAX, i64::MAX))?;
                let ceil = -ceil.to_i64().ok_or(Error::limit("lattice box coordinate", u64::MAX, i64::MAX))?;
                lo[k] = lo[k].min(ceil);
                hi[k] = hi[k].max(floor);
            }
        }
        count_in_box(&self.system, t, &lo, &hi, limits)
    }

    /// Number of facets through each vertex.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.vertices.len()];
        for mask in &self.facet_masks {
            for k in mask.ones() {
                deg[k] += 1;
            }
        }
        deg
    }
}
