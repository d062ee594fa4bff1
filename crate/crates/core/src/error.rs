use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("index {0} is not mutable")]
    NotMutable(usize),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid exchange pattern: {0}")]
    InvalidPattern(String),

    #[error("matrix is not a grading: column {column} of B^T G is nonzero")]
    InvalidGrading { column: usize },

    #[error(
        "polynomial is not homogeneous: monomial {monomial_a:?} has degree {degree_a:?} \
         but monomial {monomial_b:?} has degree {degree_b:?}"
    )]
    Inhomogeneous {
        monomial_a: Vec<i32>,
        monomial_b: Vec<i32>,
        degree_a: Vec<String>,
        degree_b: Vec<String>,
    },

    #[error("degree of the zero polynomial is undefined")]
    ZeroPolynomial,

    #[error("inexact Laurent division: seed is corrupted")]
    InexactDivision,

    #[error("no integer solution: grading is not standard")]
    NoIntegerSolution,

    #[error("{what} limit of {limit} exceeded before the exchange graph closed")]
    LimitExceeded { what: &'static str, limit: usize },

    #[error("unsupported Dynkin type: {0}")]
    UnsupportedType(String),

    #[error("invalid Dynkin type: {0}")]
    InvalidDynkin(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("knitting window of {requested} columns exceeds the bound of {bound}")]
    WindowTooLarge { requested: usize, bound: usize },

    #[error("matrix entry does not fit in an i64")]
    EntryOverflow,

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
