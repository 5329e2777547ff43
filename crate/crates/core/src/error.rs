use core::fmt;

/// Errors raised by field arithmetic, form construction and the Arf machinery.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Attempted to invert zero.
    ZeroInverse,
    /// Extension degree outside `1..=16`.
    InvalidDegree { degree: u32 },
    /// Modulus does not have the declared degree.
    InvalidModulus { degree: u32, modulus: u32 },
    /// Modulus factors over F₂.
    ReducibleModulus { modulus: u32 },
    /// Element encoding does not belong to the field.
    ElementOutOfRange,
    /// A tower level above the configured cap was requested.
    LevelCapExceeded { level: u32, cap: u32 },
    /// Vector or matrix sizes disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// The two operands live over different fields.
    ContextMismatch,
    /// Gram matrix is not symmetric with zero diagonal.
    NotAlternating,
    /// Base-change matrix is not invertible.
    SingularMatrix,
    /// The polar form is degenerate.
    DegenerateForm,
    /// The subspace is not equal to its own orthogonal.
    NotALagrangian,
    /// The vector does not satisfy the Wu relation on the Lagrangian.
    NotAWuVector,
    /// `ω₁ + ω₂` could not be split along `L₁ + L₂`.
    DecompositionFailed,
    /// Exhaustive search would visit more than `2^budget_log2` vectors.
    BudgetExceeded { required_log2: u32, budget_log2: u32 },
    /// Arf bit and anisotropic dimension disagree.
    InconsistentInvariant,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroInverse => write!(f, "zero has no inverse"),
            Error::InvalidDegree { degree } => {
                write!(f, "extension degree {degree} outside 1..=16")
            }
            Error::InvalidModulus { degree, modulus } => {
                write!(f, "modulus {modulus} does not have degree {degree}")
            }
            Error::ReducibleModulus { modulus } => {
                write!(f, "modulus {modulus} is reducible over F2")
            }
            Error::ElementOutOfRange => write!(f, "element does not belong to the field"),
            Error::LevelCapExceeded { level, cap } => {
                write!(f, "tower level {level} exceeds cap {cap}")
            }
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ContextMismatch => write!(f, "operands are defined over different fields"),
            Error::NotAlternating => {
                write!(f, "gram matrix must be symmetric with zero diagonal")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::DegenerateForm => write!(f, "polar form is degenerate"),
            Error::NotALagrangian => write!(f, "subspace is not a Lagrangian"),
            Error::NotAWuVector => write!(f, "vector is not a Wu vector of the Lagrangian"),
            Error::DecompositionFailed => {
                write!(f, "difference of Wu vectors is not in L1 + L2")
            }
            Error::BudgetExceeded {
                required_log2,
                budget_log2,
            } => write!(
                f,
                "exhaustive search needs 2^{required_log2} vectors, budget is 2^{budget_log2}"
            ),
            Error::InconsistentInvariant => {
                write!(f, "Arf bit and anisotropic dimension disagree")
            }
        }
    }
}

impl core::error::Error for Error {}
