use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: denominator {denominator} vanishes at the chosen (q, t)")]
    Pole { denominator: String },
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("top homogeneous part of the zero polynomial is undefined")]
    ZeroPolynomial,
    #[error("inexact division: nonzero remainder {remainder}")]
    InexactDivision { remainder: String },
    #[error("singular linear system")]
    Singular,
    #[error("index {index} out of range for {n_vars} variables")]
    IndexOutOfRange { index: usize, n_vars: usize },
}
