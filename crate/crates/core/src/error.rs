use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("denominator Pochhammer factor vanishes at term {term}")]
    DenominatorPole { term: usize },

    #[error("series did not terminate within {limit} terms")]
    NotTerminating { limit: usize },

    #[error("series did not converge after {terms} terms")]
    NoConvergence { terms: usize },

    #[error("degenerate family: sqrt(B+1) = {root} is a positive integer")]
    DegenerateFamily { root: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("pole of the difference equation at {what}")]
    DomainPole { what: String },

    #[error("lattice point z = {z} hits a pole or a zero of g")]
    LatticePole { z: f64 },

    #[error("least-squares system is numerically singular (condition {condition:e})")]
    IllConditioned { condition: f64 },

    #[error("invalid spin label: {0}")]
    InvalidSpin(String),

    #[error("non-finite value produced in {0}")]
    NonFinite(&'static str),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
