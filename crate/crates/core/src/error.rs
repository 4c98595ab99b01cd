//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors surfaced by exact-arithmetic operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Two scalars (or polynomials) from different coefficient fields were mixed.
    #[error("operands belong to different coefficient fields")]
    FieldMismatch,

    /// Division or inversion of zero.
    #[error("division by zero")]
    DivisionByZero,

    /// Inversion failed because the element shares a non-constant factor with
    /// the minimal polynomial. This signals a reducible modulus; it is reported
    /// rather than silently factored.
    #[error("element is not invertible modulo the minimal polynomial (gcd has degree {gcd_degree})")]
    NotInvertible { gcd_degree: usize },

    /// Operands disagree on the number of variables.
    #[error("expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    /// Variable index outside `0..num_vars`.
    #[error("variable index {index} out of range for {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },

    /// A homogeneous polynomial was required.
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    /// Degrees of the inputs are incompatible with the operation.
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),

    /// The zero polynomial is not admissible here.
    #[error("zero polynomial not allowed")]
    ZeroPolynomial,

    /// The annihilator of the given top-degree slice is not one-dimensional,
    /// so the slice is not the top piece of an Artinian Gorenstein quotient.
    #[error("annihilator has dimension {kernel_dim}, expected 1 (input is not Gorenstein)")]
    NotGorenstein { kernel_dim: usize },

    /// Requested ideal-slice degree lies below the generator degree.
    #[error("slice degree {degree} is below the generator degree {minimum}")]
    DegreeTooLow { degree: usize, minimum: usize },

    /// The hypersurface is singular where a smooth one was required.
    #[error("hypersurface is singular")]
    NotSmooth,

    /// Socle degree exceeds the configured guardrail.
    #[error("socle degree {socle_degree} exceeds the cap {cap}")]
    SocleDegreeTooLarge { socle_degree: usize, cap: usize },

    /// A family parameter takes one of its excluded values.
    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),

    /// Cross-ratio lies in {0, 1}, where the j-invariant formula degenerates.
    #[error("degenerate cross-ratio")]
    DegenerateCrossRatio,

    /// Fewer than four pairwise distinct points were supplied.
    #[error("coincident points")]
    CoincidentPoints,

    /// The binary form has a repeated root (discriminant vanishes).
    #[error("singular form (repeated root)")]
    SingularForm,

    /// The pencil member is singular.
    #[error("singular family member")]
    SingularMember,

    /// Evaluation of a rational function at a pole.
    #[error("evaluation at a pole")]
    PoleAtPoint,

    /// A matrix that must be invertible is singular.
    #[error("matrix is singular")]
    SingularMatrix,
}

pub type Result<T> = std::result::Result<T, Error>;
