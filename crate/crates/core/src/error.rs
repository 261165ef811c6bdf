use thiserror::Error;

/// Errors produced by the measure, space, operator and analyzer layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A measure specification violates its invariants.
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),

    /// A numeric argument is outside its admissible range.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// The angular sampling grid is too small for the series order.
    #[error("angular grid too coarse: need at least {needed} samples, grid has {got}")]
    GridTooCoarse { needed: usize, got: usize },

    /// A requested truncation order cannot represent the function accurately.
    #[error("truncation insufficient: {0}")]
    TruncationInsufficient(String),

    /// Adaptive quadrature exhausted its panel or depth budget.
    #[error("quadrature did not converge: {0}")]
    QuadratureNonConvergence(String),

    /// Series/matrix orders are incompatible.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A weighted transform of a measure has infinite mass.
    #[error("non-integrable transform: {0}")]
    NonIntegrable(String),

    /// An input collection that must be nonempty is empty.
    #[error("empty input: {0}")]
    EmptyInput(String),

    /// A serialized artifact could not be decoded.
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
