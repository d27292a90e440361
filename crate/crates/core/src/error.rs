use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("content undefined for zero polynomial")]
    ZeroContent,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be nonconstant")]
    ConstantPolynomial,
    #[error("polynomials share a root; no finite bound exists")]
    CommonRoot,
    #[error("scaling factor must be nonzero")]
    ZeroScale,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported range (< 2^62)")]
    ModulusTooLarge(u64),
    #[error("squarefree part has degree {degree}, above the factorization cap {cap}")]
    DegreeCap { degree: usize, cap: usize },
    #[error("root isolation failed: {0}")]
    Isolation(String),
    #[error("factor selection ambiguous: {0}")]
    Ambiguous(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("p_max {p_max} must exceed the bad-prime bound {bound}")]
    RangeTooSmall { p_max: u64, bound: u64 },
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("mismatched inputs: {0}")]
    Mismatch(String),
}
