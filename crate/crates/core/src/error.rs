//! Error type shared by every module of the crate.

/// Errors reported by set construction, parsing, and the analysis routines.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// The modulus of a cyclic group must be a positive integer.
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(usize),

    /// Moduli above 2^31 would overflow residue arithmetic (and a dense bit
    /// table of that size is never what the caller wants).
    #[error("modulus {0} exceeds the supported maximum 2^31")]
    ModulusTooLarge(usize),

    /// Two operands live in different cyclic groups.
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: usize, right: usize },

    /// A set literal did not match the `INT` / `INT-INT` comma grammar.
    #[error("malformed set literal {literal:?}: {reason}")]
    MalformedSetLiteral { literal: String, reason: String },

    /// An operation required a non-empty set.
    #[error("{0} must be non-empty")]
    EmptyOperand(&'static str),

    /// A multiplier must be coprime to the modulus to act invertibly.
    #[error("{value} is not a unit modulo {modulus}")]
    NotAUnit { value: usize, modulus: usize },

    /// An operation is only defined for sets of exactly half the modulus.
    #[error("set of size {len} is not half of the modulus {modulus}")]
    NotHalfDensity { len: usize, modulus: usize },

    /// An operation is only defined in groups of even order.
    #[error("modulus {0} must be even")]
    OddModulus(usize),

    /// The frequency-0 term of the pointwise spectral bound is singular.
    #[error("frequency 0 (mod 2k) is singular for the pointwise spectral bound")]
    SingularFrequency,

    /// An inverse transform failed to land on an integer within tolerance,
    /// signalling accumulated floating-point error.
    #[error("inverse transform residual {residual:e} exceeds {limit:e}")]
    ReconstructionResidual { residual: f64, limit: f64 },

    /// A family or bound parameter was below its smallest supported value.
    #[error("parameter k must be at least {min}, got {k}")]
    KTooSmall { k: usize, min: usize },
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
