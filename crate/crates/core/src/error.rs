use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid variable universe: {0}")]
    InvalidUniverse(String),
    #[error("operands live in different variable universes")]
    UniverseMismatch,
    #[error("division is not exact")]
    NotExactDivision,
    #[error("{0} is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("{0} is undefined for a constant polynomial")]
    ConstantPolynomial(&'static str),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid degree vector: {0}")]
    InvalidDegrees(String),
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix has symbolic entries where constants are required")]
    SymbolicEntries,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is generically rank deficient")]
    GenericRankDeficient,
    #[error("monomial set has {got} members, H(nu) = {expected} required")]
    WrongCardinality { expected: usize, got: usize },
    #[error("monomial {monomial} has degree {got}, expected {expected}")]
    WrongDegree { monomial: String, expected: u32, got: u32 },
    #[error("monomial {0} listed twice")]
    DuplicateMonomial(String),
    #[error("degree out of range: {0}")]
    OutOfRange(String),
    #[error("degree in group {group} is {got}, expected {expected}")]
    MultidegreeMismatch { group: String, expected: u64, got: u64 },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("points are not in generic position: {0}")]
    NotGenericPosition(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("integer content is {0}, expected 1")]
    ContentNotOne(String),
    #[error("invalid specialization: {0}")]
    InvalidSpecialization(String),
    #[error("serialization: {0}")]
    Serialization(String),
    #[error("configuration: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;
