/// Enumeration caps. Every exhaustive routine fails fast with
/// [`Error::LimitExceeded`](crate::Error::LimitExceeded) instead of running
/// past these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest poset handled by the linear-extension DP.
    pub linear_extension_elements: usize,
    /// Largest ground set for isomorphism-class enumeration.
    pub iso_class_elements: usize,
    /// Largest Hasse diagram whose edge partitions may be enumerated.
    pub partition_edges: usize,
    /// Largest ambient dimension for vertex enumeration and volume.
    pub vertex_dimension: usize,
    /// Largest number of grid points scanned by a lattice-point count.
    pub lattice_work: u64,
    /// Largest number of base-image tuples tried by the equivalence search.
    pub equivalence_budget: u64,
    /// Largest vertex count accepted by the equivalence search.
    pub equivalence_vertices: usize,
    /// Largest `n` for the brute-force descent statistic.
    pub beta_brute_force: usize,
    /// Largest `n` for the inclusion-exclusion descent statistic.
    pub beta_formula: usize,
    /// Largest `n` for the run-constrained descent family.
    pub descent_family: usize,
    /// Largest `n` for maximizing the descent statistic over the family.
    pub descent_max: usize,
    /// Largest chain length for the exhaustive partition-volume search.
    pub chain_search: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            linear_extension_elements: 16,
            iso_class_elements: 6,
            partition_edges: 20,
            vertex_dimension: 8,
            lattice_work: 10_000_000,
            equivalence_budget: 10_000_000,
            equivalence_vertices: 256,
            beta_brute_force: 9,
            beta_formula: 12,
            descent_family: 20,
            descent_max: 10,
            chain_search: 8,
        }
    }
}
