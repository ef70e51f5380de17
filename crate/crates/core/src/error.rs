use thiserror::Error;

/// Errors raised by the algebra, combinatorics and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in ℚ(q,t)")]
    DivisionByZero,
    #[error("pole at (q, t) = ({q}, {t})")]
    Pole { q: String, t: String },
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },
    #[error("substitution is not a permutation of the variables: {0}")]
    InvalidSubstitution(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("permutations act on different intervals: [{0},{1}] vs [{2},{3}]")]
    IntervalMismatch(usize, usize, usize, usize),
    #[error("composition {0} is not weakly decreasing")]
    NotWeaklyDecreasing(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("box ({col},{row}) is not in the augmented diagram")]
    BoxOutsideDiagram { col: usize, row: usize },
    #[error("basement is not a concatenation of permutations of [1,{m}] and [{m}+1,n]")]
    NotConcatenated { m: usize },
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("squares {0} and {1} attack each other but hold the same value")]
    Attacking(String, String),
    #[error("divided difference left a nonzero remainder")]
    InexactDivision,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
