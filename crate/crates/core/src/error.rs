use thiserror::Error;

use crate::matroid::GroundSubset;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial of degree {degree} cannot be reversed at degree {bound}")]
    DegreeTooLarge { degree: usize, bound: usize },

    #[error("series denominator has zero constant term")]
    ZeroConstantTerm,

    #[error("basis family is empty")]
    EmptyBases,

    #[error("bases have different cardinalities ({first} and {other})")]
    MixedCardinality { first: usize, other: usize },

    #[error("basis {basis} is not a subset of the ground set of size {n}")]
    OutOfGroundSet { basis: GroundSubset, n: usize },

    #[error("exchange axiom fails for B = {basis}, B' = {other}, b = {element}")]
    ExchangeAxiomViolation {
        basis: GroundSubset,
        other: GroundSubset,
        element: usize,
    },

    #[error("{0} is not a flat")]
    NotAFlat(GroundSubset),

    #[error("matroid has loops")]
    HasLoops,

    #[error("ground set of size {n} exceeds the limit of {limit}")]
    GroundSetTooLarge { n: usize, limit: usize },

    #[error("invalid shape: {0}")]
    InvalidShape(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("non-integer result {numer}/{denom}")]
    NonIntegerResult { numer: String, denom: String },

    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
}
