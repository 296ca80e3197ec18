use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not square-free")]
    NotSquareFree,
    #[error("polynomial vanishes at the left endpoint {0}")]
    RootAtLeftEndpoint(String),
    #[error("empty interval: left endpoint must lie strictly below the right endpoint")]
    EmptyInterval,
    #[error("Jacobi parameters must satisfy alpha > -1 and beta > -1 (got alpha = {alpha}, beta = {beta})")]
    ParameterOutOfRange { alpha: String, beta: String },
    #[error("ray slopes must be nonnegative (got a = {a}, b = {b})")]
    NegativeSlope { a: String, b: String },
    #[error("degree index must be at least {min} (got {n})")]
    DegreeTooSmall { n: u32, min: u32 },
    #[error("x value {0} is not finite")]
    NonFinite(String),
    #[error("evaluation request contains no degrees")]
    EmptyRequest,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
