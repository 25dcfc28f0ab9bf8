use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGroundSet,
    #[error("element {element} is outside the ground set [1, {d}]")]
    IndexOutOfRange { element: usize, d: usize },
    #[error("cover relations contain a directed cycle through element {0}")]
    DirectedCycle(usize),
    #[error("cover ({0}, {1}) is implied by transitivity of the other covers")]
    TransitiveCover(usize, usize),
    #[error("cover ({0}, {1}) is listed more than once")]
    DuplicateCover(usize, usize),
    #[error("{what} exceeds the configured cap ({value} > {cap})")]
    LimitExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },
    #[error("poset is not a zigzag: cover ({0}, {1}) does not join consecutive elements")]
    NotZigzag(usize, usize),
    #[error("poset is not a disjoint union of consecutively labelled chains")]
    NotChainUnion,
    #[error("pair ({0}, {1}) is not a cover of the base poset")]
    UnknownEdge(usize, usize),
    #[error("element {0} is not minimal")]
    NotMinimal(usize),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("inequality system is infeasible")]
    EmptyPolytope,
    #[error("inequality system is unbounded")]
    Unbounded,
    #[error("polytope has dimension {dim} < {ambient}")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("matrix is not unimodular (determinant {0})")]
    NotUnimodular(String),
    #[error("image is not the chain polytope of a zigzag: {0}")]
    NotZigzagImage(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("cover ({0}, {1}) is not assigned to either part of the edge partition")]
    PartialPartition(usize, usize),
    #[error("cover ({0}, {1}) is assigned more than once")]
    ConflictingAssignment(usize, usize),
    #[error("unknown verify suite `{0}`")]
    UnknownSuite(String),
}

impl Error {
    pub(crate) fn limit(what: &'static str, value: impl TryInto<u64>, cap: impl TryInto<u64>) -> Self {
        Error::LimitExceeded {
            what,
            value: value.try_into().unwrap_or(u64::MAX),
            cap: cap.try_into().unwrap_or(u64::MAX),
        }
    }
}
