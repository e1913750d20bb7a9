use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("root of unity order must be odd and >= 3, got {0}")]
    InvalidOrder(i64),

    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,

    #[error("index out of range: {0}")]
    IndexError(String),

    #[error("operands belong to different algebras: {0}")]
    SpecMismatch(String),

    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),

    #[error("no straightening rule for the pair ({0}, {1})")]
    UnknownPair(&'static str, &'static str),

    #[error("mu = {mu} is not admissible for d = {d}: [mu][mu+1] vanishes")]
    InvalidMu { d: u32, mu: i64 },

    #[error("n = {n} exceeds the configured cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("exponent bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("series did not truncate before order {0}")]
    NotNilpotent(u32),

    #[error("parse error: {0}")]
    Parse(String),
}
