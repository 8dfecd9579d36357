use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A configured size limit was hit.
    CapExceeded {
        what: &'static str,
        limit: usize,
    },
    DegreeMismatch {
        expected: usize,
        found: usize,
    },
    InvalidPermutation(String),
    EmptyGenerators,
    NotAnElement(String),
    NotSubgroup(String),
    NotMorphism(String),
    NotSylow,
    NotSaturated(String),
    DeltaNotClosed(String),
    GammaNotClosed(String),
    Q1Violated(String),
    Q2Violated(String),
    NotFullyKNormalized,
    KNotSubnormal,
    NotPartialSubgroup(String),
    NotFound(String),
    NotUnique(String),
    InvalidEntry(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CapExceeded { what, limit } => write!(f, "{what} exceeds the limit of {limit}"),
            Error::DegreeMismatch { expected, found } => {
                write!(
                    f,
                    "permutation degree mismatch: expected {expected}, found {found}"
                )
            }
            Error::InvalidPermutation(msg) => write!(f, "invalid permutation: {msg}"),
            Error::EmptyGenerators => f.write_str("generator set is empty"),
            Error::NotAnElement(msg) => write!(f, "not an element of the group: {msg}"),
            Error::NotSubgroup(msg) => write!(f, "not a subgroup: {msg}"),
            Error::NotMorphism(msg) => write!(f, "not an injective homomorphism: {msg}"),
            Error::NotSylow => f.write_str("subgroup is not a Sylow subgroup"),
            Error::NotSaturated(msg) => write!(f, "fusion system is not saturated: {msg}"),
            Error::DeltaNotClosed(msg) => write!(f, "object set not closed: {msg}"),
            Error::GammaNotClosed(msg) => write!(f, "restriction set not closed: {msg}"),
            Error::Q1Violated(msg) => write!(f, "object condition violated: {msg}"),
            Error::Q2Violated(msg) => write!(f, "transporter condition violated: {msg}"),
            Error::NotFullyKNormalized => f.write_str("subgroup is not fully K-normalized"),
            Error::KNotSubnormal => f.write_str("K is not subnormal in K·Inn(X)"),
            Error::NotPartialSubgroup(msg) => write!(f, "not a partial subgroup: {msg}"),
            Error::NotFound(msg) => write!(f, "not found: {msg}"),
            Error::NotUnique(msg) => write!(f, "not unique: {msg}"),
            Error::InvalidEntry(msg) => write!(f, "invalid corpus entry: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
