use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("graph on {n} vertices exceeds the supported limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("not a permutation of 0..{0}")]
    NotBijection(usize),

    #[error("invalid permutation entry {0:?}")]
    InvalidPermutation(String),

    #[error("permutation has {perm} entries but the graph has {n} vertices")]
    SizeMismatch { perm: usize, n: usize },

    #[error("vertex {0} is not C3-free (isolated or on a triangle)")]
    NotC3Free(usize),

    #[error("graph has no C3-free vertex")]
    NotApplicable,

    #[error("graph on {n} vertices exceeds the guard of {guard}")]
    Guard { n: usize, guard: usize },

    #[error("edgeless graphs are excluded from this check")]
    Edgeless,

    #[error("counterexample: {0}")]
    Counterexample(String),
}
