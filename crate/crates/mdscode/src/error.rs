//! Error type shared by every module in the crate.

use std::fmt;

/// Everything that can go wrong while building fields, manipulating
/// matrices, constructing codes, or decoding words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// `p` passed to a field constructor is not a prime number.
    NotPrime(u64),
    /// The requested field order `p^m` exceeds the supported cap.
    OrderTooLarge { q: u128, cap: u64 },
    /// An integer does not encode an element of this field (wrong field,
    /// or simply out of range).
    ContextMismatch { value: u64, q: u64 },
    /// Multiplicative inverse of zero, or zero raised to a negative power.
    DivisionByZero,
    /// A linear system has no unique solution.
    Singular,
    /// A generator matrix does not have full row rank.
    RankDeficient { rank: usize, k: usize },
    /// A generator expected in standard form `(I | A)` is not.
    NotStandardForm,
    /// No primitive `n`-th root of unity exists because `n` does not
    /// divide `q - 1`.
    NoRootOfUnity { n: u64, q: u64 },
    /// A row-selection step shares a factor with the row count.
    StepNotCoprime { step: usize, n: usize },
    /// A row selection does not fit the matrix it is applied to.
    SelectionOutOfRange { start: usize, count: usize, n: usize },
    /// A code transformation was asked for on a code that was not built
    /// by the construction it extends.
    WrongProvenance,
    /// A construction that needs a characteristic-two field got something else.
    FieldNotEven { q: u64 },
    /// The field is too small for the requested construction.
    FieldTooSmall { q: u64 },
    /// The code dimension is below the minimum the operation supports.
    DimensionTooSmall { k: usize, min: usize },
    /// An exhaustive enumeration would exceed its configured budget.
    CombinationOverflow { planned: u128, budget: u64 },
    /// A symbol sequence has the wrong length for the code at hand.
    LengthMismatch { expected: usize, got: usize },
    /// More erasures than the code can ever recover from.
    TooManyErasures { erased: usize, max: usize },
    /// No codeword lies within the decoding radius of the received word.
    DecodingFailure,
    /// A search was asked for a code length outside the feasible range.
    SearchLengthOutOfRange { n: usize, min: usize, max: usize },
    /// An exhaustive search space is larger than the configured budget.
    SearchTooLarge { candidates: u128, budget: u64 },
    /// A matrix file could not be parsed.
    InvalidMatrixFile { line: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::OrderTooLarge { q, cap } => {
                write!(f, "field order {q} exceeds the supported cap of {cap}")
            }
            Error::ContextMismatch { value, q } => {
                write!(f, "value {value} is not an element of the field of order {q}")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Singular => write!(f, "matrix is singular"),
            Error::RankDeficient { rank, k } => {
                write!(f, "generator has rank {rank}, expected full row rank {k}")
            }
            Error::NotStandardForm => {
                write!(f, "generator is not in standard form (identity block first)")
            }
            Error::NoRootOfUnity { n, q } => {
                write!(f, "no primitive {n}-th root of unity: {n} does not divide {}", q - 1)
            }
            Error::StepNotCoprime { step, n } => {
                write!(f, "row step {step} is not coprime to the row count {n}")
            }
            Error::SelectionOutOfRange { start, count, n } => {
                write!(f, "selection (start {start}, count {count}) does not fit {n} rows")
            }
            Error::WrongProvenance => {
                write!(f, "operation requires a code built from Fourier-matrix rows")
            }
            Error::FieldNotEven { q } => {
                write!(f, "field of order {q} does not have characteristic two")
            }
            Error::FieldTooSmall { q } => {
                write!(f, "field of order {q} is too small for this construction")
            }
            Error::DimensionTooSmall { k, min } => {
                write!(f, "code dimension {k} is below the minimum {min}")
            }
            Error::CombinationOverflow { planned, budget } => {
                write!(f, "enumeration of {planned} minors exceeds the budget of {budget}")
            }
            Error::LengthMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            Error::TooManyErasures { erased, max } => {
                write!(f, "{erased} erasures exceed the recoverable maximum of {max}")
            }
            Error::DecodingFailure => {
                write!(f, "no codeword within the decoding radius")
            }
            Error::SearchLengthOutOfRange { n, min, max } => {
                write!(f, "search length {n} is outside the feasible range {min}..={max}")
            }
            Error::SearchTooLarge { candidates, budget } => {
                write!(f, "search space of {candidates} candidates exceeds the budget of {budget}")
            }
            Error::InvalidMatrixFile { line, reason } => {
                write!(f, "bad matrix file at line {line}: {reason}")
            }
        }
    }
}

impl std::error::Error for Error {}
