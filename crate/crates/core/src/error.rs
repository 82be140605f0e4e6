use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("coefficient `{0}` is not valid in the coefficient field")]
    InvalidCoefficient(String),
    #[error("field modulus not prime: {0}")]
    NotPrime(u64),
    #[error("polynomials belong to different rings")]
    RingMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ordering matrix is rank deficient (rank {rank} < {n})")]
    RankDeficient { rank: usize, n: usize },
    #[error("column {0} of the ordering matrix is not lex-positive")]
    NotLexPositive(usize),
    #[error("weight vector has a negative entry")]
    NegativeWeight,
    #[error("weight vector is zero")]
    ZeroWeight,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("ideal needs at least one generator")]
    EmptyIdeal,
    #[error("marking {0} is not the leading exponent under the given ordering")]
    MarkingInconsistent(String),
    #[error("marked exponent {0} is not in the support with coefficient one")]
    BadMarking(String),
    #[error("weight vector lies outside the current Gröbner cone")]
    OutsideCone,
    #[error("facet {0} is not flippable")]
    NotFlippable(String),
    #[error("marked reduction cycled; markings are not compatible with a term ordering")]
    ReductionCycle,
    #[error("unsupported ordering for the standard walk: {0}")]
    UnsupportedOrdering(String),
    #[error("unknown ordering `{0}`")]
    UnknownOrdering(String),
    #[error("unknown system `{0}`")]
    UnknownSystem(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid ideal file: {0}")]
    Schema(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
