use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable sets differ: {0}")]
    VarSetMismatch(String),
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parameter `g` appears but no value was bound")]
    UnboundParameter,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
    #[error("ideal is not homogeneous")]
    NonHomogeneous,
    #[error("gamma must be nonzero")]
    ZeroGamma,
    #[error("relation tensors are rank deficient (rank {rank}, expected {expected})")]
    RankDeficient { rank: usize, expected: usize },
    #[error("polynomial is not in the subring generated by the N_ij")]
    NotInSubring,
    #[error("points are linearly dependent")]
    DependentPoints,
    #[error("parameter must be nonzero")]
    ZeroParameter,
    #[error("`{0}` is not invertible modulo the ideal")]
    NonUnit(String),
    #[error("root finding did not converge: {0}")]
    ConvergenceFailure(String),
    #[error("point too close to a coordinate hyperplane: {0}")]
    DegeneratePoint(String),
    #[error("map undefined at point: {0}")]
    UndefinedAtPoint(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}
