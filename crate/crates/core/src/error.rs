use thiserror::Error;

use crate::ring::Elem;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid construction: {0}")]
    InvalidConstruction(String),
    #[error("construction of {requested} elements exceeds the size limit of {limit}")]
    SizeLimit { requested: usize, limit: usize },
    #[error("type mismatch: {0}")]
    TypeMismatch(String),
    #[error("not a ring homomorphism: {law} fails at ({a}, {b})")]
    NotAHomomorphism { law: &'static str, a: Elem, b: Elem },
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("the ideal is not proper")]
    NotProper,
    #[error("not an ideal: {a} * {m} leaves the submodule")]
    NotAnIdeal { a: Elem, m: Elem },
    #[error("degree {degree} exceeds the degree limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("internal construction invariant violated: {0}")]
    ConstructionBug(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
