use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("series must have at least one coefficient")]
    EmptySeries,
    #[error("moment sequence is empty")]
    EmptyMoments,
    #[error("no standard S-fraction reproduces these moments (failure at coefficient {index}): {reason}")]
    NotSFracRepresentable {
        /// Index of the first coefficient that cannot be produced; 0 means `a_0`.
        index: usize,
        reason: String,
    },
    #[error("g_{index} is negative")]
    NegativeG { index: usize },
    #[error("S-fraction coefficients are not in standard form")]
    NonStandardInput,
    #[error("the two g routes disagree at index {index}")]
    RouteMismatch { index: usize },
    #[error("g0 = 0 is infeasible; the prefix is not certified")]
    InfeasibleBase,
    #[error("the prefix is not certified for this xi")]
    NotCertified,
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid measure: {0}")]
    InvalidMeasure(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
