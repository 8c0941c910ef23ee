use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// Variants are grouped by the layer that raises them; the FFI crate maps
/// each one to a stable integer code, so new variants go at the end of
/// their group.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // finite fields
    #[error("{0} is not prime")]
    NonPrimeP(u64),
    #[error("extension degree must be at least 1")]
    DegreeZero,
    #[error("field of order {p}^{r} exceeds 2^32")]
    FieldTooLarge { p: u64, r: u32 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    InverseOfZero,
    #[error("gcd({n}, {q}) != 1, x^n - 1 is not square-free")]
    NotCoprime { n: u64, q: u64 },
    #[error("GF({sub}) is not a subfield of GF({ext})")]
    NotASubfield { sub: u64, ext: u64 },
    #[error("element does not lie in the subfield")]
    NotInSubfield,
    #[error("modulus is not irreducible over the prime field")]
    ReducibleModulus,

    // polynomials and residues
    #[error("division by the zero polynomial")]
    DivideByZero,
    #[error("gcd of two zero polynomials")]
    BothZero,
    #[error("{0} does not divide x^n - 1")]
    NotADivisor(String),
    #[error("{0} is not monic")]
    NotMonic(String),
    #[error("degree of {what} must be below {n}")]
    DegreeTooLarge { what: String, n: usize },
    #[error("residues taken modulo different x^n - 1")]
    MixedModulus,

    // cyclic codes and distance engine
    #[error("coset selection is not closed under multiplication by q")]
    IncompleteCoset,
    #[error("enumeration of {needed} codewords exceeds the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },

    // quasi-cyclic codes
    #[error("Hermitian duality needs a field of square order")]
    WrongFieldForHermitian,
    #[error("vector lengths {0} and {1} do not match the form")]
    LengthMismatch(usize, usize),
    #[error("symplectic weight needs an even length, got {0}")]
    OddLength(usize),
    #[error("{0}")]
    NotOfRequiredForm(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("h(x) - beta shares a root with x^n - 1 for some nonzero beta")]
    InadmissibleH,

    // quantum parameters
    #[error("not self-orthogonal: {0}")]
    NotSelfOrthogonal(String),
    #[error("inner code is not contained in the outer code")]
    NotNested,
    #[error("nested codes are equal, no logical qudits")]
    ZeroLogical,

    // text input
    #[error("parse error: {0}")]
    Parse(String),
}
