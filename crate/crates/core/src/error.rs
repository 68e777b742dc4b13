use thiserror::Error;

/// Errors raised by the set primitives, the interpolation engine and the
/// normality diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum FriError {
    /// A characteristic-point chain `a1 <= a2 <= a3 <= a4` is broken, or a
    /// precedence relation required by an operation does not hold.
    #[error("ordering violation: {0}")]
    OrderingViolation(String),

    #[error("non-finite coordinate {0}")]
    NonFinite(f64),

    #[error("alpha level {0} outside [0, 1]")]
    Domain(f64),

    #[error("observation not flanked in dimension {dimension}: no rule {side} it")]
    NotFlanked { dimension: usize, side: &'static str },

    /// Both flanking antecedent points coincide with the observation point.
    #[error("zero span at characteristic point {point}")]
    ZeroSpan { point: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires one-dimensional rules, found dimension {0}")]
    Dimension(usize),

    #[error("rules {first} and {second} are not comparable in dimension {dimension}")]
    NotComparable {
        first: usize,
        second: usize,
        dimension: usize,
    },

    #[error("empty {0}")]
    Empty(&'static str),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, FriError>;
