use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: carrier mismatch between `{left}` and `{right}`")]
    CarrierMismatch { op: &'static str, left: String, right: String },

    #[error("carrier `{carrier}` has no element `{element}`")]
    UnknownElement { carrier: String, element: String },

    #[error("carrier `{carrier}` lists element `{element}` twice")]
    DuplicateElement { carrier: String, element: String },

    #[error("not a preorder: {0}")]
    NotPreorder(String),

    #[error("map is not monotone: {0}")]
    NotMonotone(String),

    #[error("subset is not {kind}-closed in `{carrier}`")]
    NotClosedSubset { kind: &'static str, carrier: String },

    #[error("relation is not closed: {0}")]
    NotClosed(String),

    #[error("invalid context: {0}")]
    InvalidContext(String),

    #[error("constraint violated: {0}")]
    ConstraintViolated(&'static str),

    #[error("{what} of size {size} exceeds the bound {bound}")]
    Capacity { what: &'static str, size: usize, bound: usize },

    #[error("not a concept of this context")]
    NotAConcept,

    #[error("concept does not belong to this lattice")]
    ForeignConcept,

    #[error("{0}")]
    Invalid(String),
}

pub(crate) fn mismatch(op: &'static str, left: &str, right: &str) -> Error {
    Error::CarrierMismatch { op, left: left.to_string(), right: right.to_string() }
}
