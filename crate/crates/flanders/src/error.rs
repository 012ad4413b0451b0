use thiserror::Error;

/// Errors reported by matrix arithmetic, decompositions and the theorem engine.
///
/// Variants carry enough detail to reconstruct what went wrong: the witness
/// entry for a violated triple constraint, the offending index for a missing
/// group inverse, the first differing power for a Weyr mismatch.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: dimension mismatch, {lhs_rows}x{lhs_cols} vs {rhs_rows}x{rhs_cols}")]
    DimensionMismatch {
        op: &'static str,
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular: rank {rank} < {size}")]
    Singular { rank: usize, size: usize },

    #[error("matrix is not nilpotent")]
    NotNilpotent,

    #[error("no group inverse: index is {index}, needs index <= 1")]
    NoGroupInverse { index: usize },

    #[error("Weyr sequences differ first at power {power}")]
    WeyrMismatch { power: usize },

    #[error("ABA != ACA, first differing entry at ({row},{col})")]
    ConstraintViolated { row: usize, col: usize },

    #[error("power {s} is below max index: ind(AC) = {ind_ac}, ind(BA) = {ind_ba}")]
    IndexTooSmall { s: usize, ind_ac: usize, ind_ba: usize },

    #[error("rejection sampling exhausted after {attempts} draws")]
    RejectionExhausted { attempts: usize },

    #[error("invalid generator config: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
