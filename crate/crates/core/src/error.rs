use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TljError {
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("invalid root: order {order}, embedding exponent {embed} (need gcd(t, m) = 1)")]
    InvalidRoot { order: u64, embed: i64 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("Chebyshev root: Δ_{0}(d) = 0, projector does not exist")]
    ChebyshevRoot(usize),
    #[error("modular data is not modular (S̃ singular)")]
    NonModular,
    #[error("non-integral value where an integer was expected: {0}")]
    NonIntegral(String),
    #[error("operation needs D; build the D-extended context first")]
    MissingExtension,
    #[error("odd signed crossing count between components {0} and {1}")]
    OddCrossingParity(usize, usize),
    #[error("subspace is not isotropic: {0}")]
    NotIsotropic(String),
    #[error("repeated root at positions {0} and {1}")]
    RepeatedRoot(usize, usize),
    #[error("loop value does not match the requested level: {0}")]
    WrongD(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl TljError {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            TljError::Parse(_)
            | TljError::IndexOutOfRange(_)
            | TljError::InvalidParameters(_)
            | TljError::InvalidRoot { .. }
            | TljError::ShapeMismatch(_)
            | TljError::Unsupported(_)
            | TljError::WrongD(_)
            | TljError::OddCrossingParity(..) => 2,
            TljError::ChebyshevRoot(_)
            | TljError::NonModular
            | TljError::NonIntegral(_)
            | TljError::MissingExtension
            | TljError::DegenerateParameter(_)
            | TljError::NotIsotropic(_)
            | TljError::RepeatedRoot(..) => 3,
            TljError::ResourceLimit(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, TljError>;
