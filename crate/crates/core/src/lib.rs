//! Order, chain and order-chain polytopes of finite posets, in exact
//! arithmetic.
//!
//! A [`Poset`] on `[d]` together with an [`EdgePartition`] of its Hasse
//! diagram determines the polytope `O(P′) ∩ C(P″)`. The [`geometry`] module
//! converts its inequality description to vertices, facets, volume and
//! lattice-point counts; [`equivalence`] carries the unimodular maps and
//! invariants that relate these polytopes; [`descent`] covers the descent
//! statistics that govern their volumes on chains.

pub mod descent;
pub mod cli;
pub mod equivalence;
pub mod error;
pub mod fixtures;
pub mod geometry;
pub mod limits;
pub mod partition;
pub mod poset;
pub mod verify;

pub use error::{Error, Result};
pub use limits::Limits;
pub use partition::EdgePartition;
pub use poset::{Chain, DescentSet, Poset};
