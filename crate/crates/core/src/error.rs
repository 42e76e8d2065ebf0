use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not a prime")]
    NotPrime(u64),
    #[error("modulus {0} is out of range (need 2 <= p < 2^32)")]
    ModulusOutOfRange(u64),
    #[error("operands live in different fields (p = {0} vs p = {1})")]
    FieldMismatch(u64, u64),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("shift has length {got}, expected {expected}")]
    ShiftLength { expected: usize, got: usize },
    #[error("matrix has a zero row at index {0}")]
    ZeroRow(usize),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not row reduced under the given shift")]
    NotRowReduced,
    #[error("determinant is not a power of x")]
    DeterminantNotMonomial,
    #[error("matrix is singular at the expansion point x = 1")]
    SingularAtExpansionPoint,
    #[error("solution is not a polynomial of degree below {0}")]
    NotPolynomial(usize),
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle size guard exceeded: {cells} cells > {limit}")]
    OracleTooLarge { cells: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
