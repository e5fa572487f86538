use thiserror::Error;

/// Errors raised while building or querying the algebraic structures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type {letter}{rank}")]
    InvalidType { letter: char, rank: usize },

    #[error("invalid Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("simple root index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid crossed node set {nodes:?}: {reason}")]
    InvalidNodes { nodes: Vec<usize>, reason: String },

    #[error("node set {inner:?} is not contained in {outer:?}")]
    NotNested { inner: Vec<usize>, outer: Vec<usize> },

    #[error("chain degree {degree} out of range 0..={max}")]
    DegreeOutOfRange { degree: usize, max: usize },

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// An identity that must hold exactly failed; carries a description of the witness.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
