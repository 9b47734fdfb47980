use thiserror::Error;

/// Errors produced by lattice construction, operator assembly, and the
/// spectral pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("sector {r} out of range for {v} vertices")]
    SectorOutOfRange { r: usize, v: usize },

    #[error("sector pair requires s <= r, got r={r}, s={s}")]
    SectorOrder { r: usize, s: usize },

    #[error("subset has cardinality {found}, expected {expected}")]
    CardinalityMismatch { expected: usize, found: usize },

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("vector length {found} does not match sector dimension {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("operator shapes {lhs_rows}x{lhs_cols} and {rhs_rows}x{rhs_cols} are incompatible")]
    ShapeMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("sector dimension {dim} exceeds the dense-path cap {cap}")]
    DenseCapExceeded { dim: usize, cap: usize },

    #[error("sector dimension {dim} exceeds the sparse assembly cap {cap}")]
    AssemblyCapExceeded { dim: usize, cap: usize },

    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error(
        "exact integer rank {exact} disagrees with singular-value rank {numeric}; \
         numerical breakdown"
    )]
    RankDisagreement { exact: usize, numeric: usize },

    #[error("symmetric eigensolver failed to converge for dimension {dim}")]
    EigenFailure { dim: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
