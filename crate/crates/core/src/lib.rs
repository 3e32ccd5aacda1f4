//! Exact verification of the Ding-Iohara and shuffle algebra actions on the
//! equivariant K-theory of Hilbert schemes of points in the plane, in the
//! fixed-point basis indexed by Young diagrams.

pub mod exact;
pub mod fockrep;
pub mod partitions;
pub mod report;
pub mod shufflealg;
pub mod suite;
pub mod symfun;
pub mod theta;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("non-invertible leading term: {0}")]
    NonInvertible(String),
    #[error("box ({0},{1}) lies outside the diagram")]
    BoxOutside(usize, usize),
    #[error("row {0} is not {1} for this diagram")]
    InvalidRow(usize, &'static str),
    #[error("kernel pole: {0}")]
    KernelPole(String),
    #[error("internal consistency: {0}")]
    Consistency(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
