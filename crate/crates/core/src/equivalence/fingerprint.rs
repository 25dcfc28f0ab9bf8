use serde::Serialize;

use crate::error::Result;
use crate::geometry::{format_rational, polytope_dimension, HalfspaceSystem, Polytope, Rational};
use crate::limits::Limits;

/// Dilations at which lattice points are counted.
pub const FINGERPRINT_DILATIONS: [u32; 3] = [1, 2, 3];

/// Invariants of affine unimodular maps.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub dimension: usize,
    pub vertex_count: usize,
    pub facet_count: usize,
    pub volume: Rational,
    /// Lattice points of `t · P` for each `t` in [`FINGERPRINT_DILATIONS`].
    pub lattice_counts: Vec<u64>,
}

#[derive(Serialize)]
struct FingerprintJson<'a> {
    dimension: usize,
    vertex_count: usize,
    facet_count: usize,
    volume: String,
    lattice_counts: &'a [u64],
}

impl Serialize for Fingerprint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FingerprintJson {
            dimension: self.dimension,
            vertex_count: self.vertex_count,
            facet_count: self.facet_count,
            volume: format_rational(&self.volume),
            lattice_counts: &self.lattice_counts,
        }
        .serialize(s)
    }
}

impl Fingerprint {
    pub fn of(p: &Polytope, limits: &Limits) -> Result<Self> {
        let lattice_counts = FINGERPRINT_DILATIONS
            .iter()
            .map(|&t| p.lattice_points(t, limits))
            .collect::<Result<_>>()?;
        Ok(Fingerprint {
            dimension: polytope_dimension(&p.vertices),
            vertex_count: p.vertex_count(),
            facet_count: p.facet_count(),
            volume: p.volume()?,
            lattice_counts,
        })
    }

    /// Name of the first field in which the two fingerprints differ.
    pub fn first_difference(&self, other: &Fingerprint) -> Option<&'static str> {
        if self.dimension != other.dimension {
            Some("dimension")
        } else if self.vertex_count != other.vertex_count {
            Some("vertex_count")
        } else if self.facet_count != other.facet_count {
            Some("facet_count")
        } else if self.volume != other.volume {
            Some("volume")
        } else if self.lattice_counts != other.lattice_counts {
            Some("lattice_counts")
        } else {
            None
        }
    }
}

pub fn fingerprint(sys: &HalfspaceSystem) -> Result<Fingerprint> {
    let limits = Limits::default();
    Fingerprint::of(&Polytope::with_limits(sys.clone(), &limits)?, &limits)
}
