use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("d = {0} does not carry a labelling (need d >= 8 and d = 0, 2 mod 6)")]
    NoLabelling(u64),

    #[error("rank {0} is outside [1, 23]")]
    RankOutOfRange(i64),

    #[error("genus formula is not integral: 3 does not divide m^2+m+1 = {0}")]
    NonIntegralGenus(u64),

    #[error("degree must be positive")]
    NonPositiveDegree,

    #[error("invalid automorphism: {0}")]
    InvalidAutomorphism(String),

    #[error("eigenvalue {k} is not a residue mod {order}")]
    EigenvalueOutOfRange { k: u32, order: u32 },

    #[error("the cubic form has no terms")]
    EmptyForm,

    #[error("the cubic form is not an eigenform of the automorphism")]
    NotEigenform,

    #[error("invalid exponent vector: {0}")]
    InvalidExponent(String),

    #[error("invalid gram matrix: {0}")]
    InvalidGram(String),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("catalog line {line} ({record}): {message}")]
    Catalog {
        line: usize,
        record: String,
        message: String,
    },

    #[error(
        "symplectic automorphisms of K3 surfaces of prime order have p in {{3, 5, 7}}; got {0}"
    )]
    UnsupportedPrime(u64),
}
