//! Exact polyhedral computation over arbitrary-precision rationals.

mod facets;
mod hrep;
mod lattice;
pub mod linalg;
mod polytope;
pub mod rational;
mod vertices;
mod volume;

pub use facets::facet_halfspaces;
pub use hrep::{
    evaluate, hrep_chain, hrep_order, hrep_order_chain, indicator_vector, Halfspace, HalfspaceSystem, HalfspaceTag,
};
pub use lattice::{lattice_points, lattice_points_with};
pub use polytope::Polytope;
pub use rational::{format_rational, parse_rational, Rational};
pub use vertices::{
    enumerate_vertices, enumerate_vertices_exhaustive, enumerate_vertices_with, is_integral, polytope_dimension,
    VertexSet,
};
pub use volume::volume_exact;
