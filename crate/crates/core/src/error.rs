use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient variable count mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("degree bound {bound} is below the total degree {degree}")]
    DegreeTooLow { bound: u32, degree: u32 },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("zero input: {0}")]
    ZeroInput(&'static str),
    #[error("constant input: {0}")]
    ConstantInput(&'static str),
    #[error("place polynomial {0} is not squarefree")]
    NotSquarefree(String),
    #[error("place polynomial {0} is not a nonconstant polynomial")]
    InvalidPlace(String),
    #[error("place {place} only partially divides {poly}; refine the place with a coprime basis first")]
    PlaceSplits { place: String, poly: String },
    #[error("{0} is not homogeneous")]
    NotHomogeneous(String),
    #[error("forms have unequal degrees {0} and {1}")]
    UnequalDegrees(u32, u32),
    #[error("inputs are not coprime (common factor {0})")]
    NotCoprime(String),
    #[error("coordinate polynomials share a common zero (gcd {0})")]
    CommonZero(String),
    #[error("arguments are multiplicatively dependent (witness {witness:?})")]
    Dependent { witness: Vec<BigInt> },
    #[error("both polynomials vanish at the origin")]
    BothVanishAtOrigin,
    #[error("argument {0} is not a polynomial")]
    NotPolynomial(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("elements live in different quadratic fields (sqrt{0} vs sqrt{1})")]
    FieldMismatch(u64, u64),
    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    /// True for errors that signal a violated mathematical hypothesis rather
    /// than malformed input.
    pub fn is_hypothesis(&self) -> bool {
        matches!(
            self,
            Error::NotCoprime(_)
                | Error::CommonZero(_)
                | Error::Dependent { .. }
                | Error::BothVanishAtOrigin
                | Error::NotPolynomial(_)
                | Error::NotHomogeneous(_)
                | Error::UnequalDegrees(..)
                | Error::ConstantInput(_)
                | Error::DegreeTooLow { .. }
        )
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
