use thiserror::Error;

/// Errors raised by the exact-arithmetic and region machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(u64, u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid discriminant {0}: must be zero or a non-square")]
    InvalidDiscriminant(u64),
    #[error("invalid parameters b={b}, c={c}: both must be positive")]
    InvalidParams { b: i64, c: i64 },
    #[error("operation requires bc >= 4, got b={b}, c={c}")]
    FiniteType { b: i64, c: i64 },
    #[error("Laurent polynomial division is not exact")]
    NotDivisible,
    #[error("not pointed at the initial cluster: {0}")]
    NotPointed(String),
    #[error("expansion would have {count} terms, exceeding the cap of {cap}")]
    TermCapExceeded { count: usize, cap: usize },
    #[error("{0} does not lie in the imaginary cone")]
    NotImaginary(String),
    #[error("mutation index k must be nonzero")]
    ZeroMutationIndex,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("region is unbounded")]
    Unbounded,
    #[error("region is empty")]
    EmptyRegion,
    #[error("parameter point has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parameter point entries must be nonzero")]
    ZeroParameter,
    #[error("invalid shape n={n}, r={r}: need 0 <= 2r <= n")]
    InvalidShape { n: usize, r: usize },
    #[error("expansion left a nonzero remainder: {0}")]
    NonzeroRemainder(String),
    #[error("no cluster monomial has g-vector {0}")]
    NoClusterMonomial(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
