use thiserror::Error;

use crate::gi::GiElem;

/// Errors raised by the arithmetic, group and transform routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p must be prime with p ≡ 3 (mod 4), got {0}")]
    InvalidPrime(u64),

    #[error("p = {p} exceeds the table ceiling of {ceiling}")]
    CeilingExceeded { p: u64, ceiling: u64 },

    #[error("operands belong to different fields (p = {left} and p = {right})")]
    PrimeMismatch { left: u64, right: u64 },

    #[error("{0} is undefined for zero")]
    Zero(&'static str),

    #[error("{0} is not a quadratic residue mod {1}")]
    NotQuadraticResidue(u64, u64),

    #[error("{0} is not unimodular")]
    NotUnimodular(GiElem),

    #[error("{0} does not generate the supra-unimodular group")]
    NotGenerator(GiElem),

    #[error("{element} is not a power of {base}")]
    NotInGroup { element: GiElem, base: GiElem },

    #[error("{n} does not divide {order}")]
    NotDivisor { n: u64, order: u64 },

    #[error("theta = {theta} is outside [0, {period})")]
    ThetaOutOfRange { theta: u64, period: u64 },

    #[error("transform diverges at Z = {0}")]
    DivergentEntry(GiElem),

    #[error("inverse transform produced the non-real value {0}")]
    NonRealResult(GiElem),

    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
