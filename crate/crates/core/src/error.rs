use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("quadratic extension mismatch: s^2 = {left} vs s^2 = {right}")]
    MismatchedExtension { left: String, right: String },
    #[error("element {0} is not invertible")]
    NotInvertible(String),
    #[error("irrational residue: {0} has a nonzero s-component")]
    IrrationalResidue(String),
    #[error("extension requires s^2 != 0")]
    ZeroDiscriminant,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("p^2 + 4q must be nonzero (p = {p}, q = {q})")]
    RepeatedRoot { p: i64, q: i64 },
}
