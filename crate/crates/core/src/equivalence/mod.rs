//! Affine unimodular maps between polytopes, their invariants, and the
//! explicit equivalences for chains and zigzags.

mod bounds;
mod fingerprint;
mod forbidden;
mod map;
mod phi;
mod search;

pub use bounds::{
    chain_extremal_poset, chain_facet_bound, order_extremal_poset, order_facet_bound, verify_facet_bounds,
    verify_facet_bounds_with, FacetBoundReport,
};
pub use fingerprint::{fingerprint, Fingerprint, FINGERPRINT_DILATIONS};
pub use forbidden::contains_forbidden_x;
pub use map::{apply_map, apply_map_polytope, apply_map_system, AffineUnimodularMap};
pub use phi::{chain_polytope_target, phi_chain, phi_zigzag, zigzag_equivalence, ZigzagEquivalence};
pub use search::{
    equivalent_exhaustive, equivalent_exhaustive_with, DistinctReason, EquivalenceCertificate, Verdict,
};
