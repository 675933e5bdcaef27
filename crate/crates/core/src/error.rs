use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("invalid structure constants: {0}")]
    InvalidStructure(String),

    #[error("Jacobi identity fails on {} basis triple(s), first at {:?}", .triples.len(), .triples.first())]
    JacobiFailed { triples: Vec<(usize, usize, usize)> },

    #[error("vector lies in the derived algebra C^1(g)")]
    InDerivedAlgebra,

    #[error("ad(y) is not nilpotent")]
    NotNilpotentOperator,

    #[error("algebra is not nilpotent")]
    NotNilpotent,

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("inconsistent linear system: {0}")]
    Inconsistent(String),

    #[error("torus element {index} is not a derivation")]
    NotADerivation { index: usize },

    #[error("filiform algebra with diagonal torus of dimension {0} (must be at most 2)")]
    RankBoundViolated(usize),

    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("invalid document: {0}")]
    Document(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}
