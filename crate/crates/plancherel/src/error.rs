//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("element or operand does not belong to this group variant")]
    VariantMismatch,
    #[error("operation needs support beyond the descriptor truncation: {0}")]
    TruncationExceeded(String),
    #[error("element has an infinite conjugacy class")]
    NotFCElement,
    #[error("function is not conjugation-invariant on the FC-center (sampled check failed)")]
    NotFCTrace,
    #[error("no recognized subgroup of this kind for the ambient group")]
    SubgroupUnsupported,
    #[error("eigenspaces stayed degenerate after {retries} reseeded attempts")]
    DegenerateEigenspace { retries: u32 },
    #[error("group order {order} exceeds the configured bound {bound}")]
    SizeBound { order: u64, bound: u64 },
    #[error("{0} is not an odd prime")]
    BadPrime(u64),
    #[error("linear system is singular (broken character table?)")]
    SingularSystem,
    #[error("a pushed atom matched no original atom (distance {distance:.3e})")]
    AtomMatchFailure { distance: f64 },
    #[error("measure was built for a different group descriptor")]
    DescriptorMismatch,
    #[error("map fails the automorphism spot-check: {0}")]
    NotAutomorphism(String),
    #[error("flag `{0}` is unknown but required by the classification rule")]
    UnknownFlag(&'static str),
    #[error("no closed form implemented: {0}")]
    Unsupported(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
