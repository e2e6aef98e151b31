use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclotomic order mismatch: {0} vs {1}")]
    OrderMismatch(u32, u32),
    #[error("invalid cyclotomic order {0}")]
    InvalidOrder(u32),
    #[error("not a unit: {0}")]
    NotAUnit(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("group mismatch: {0}")]
    GroupMismatch(String),
    #[error("group {0} is infinite and cannot be enumerated")]
    NotEnumerable(String),
    #[error("group exponent {exponent} does not divide cyclotomic order {order}")]
    ExponentMismatch { exponent: u64, order: u32 },
    #[error("bicharacter is not alternating: {0}")]
    NonAlternating(String),
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
    #[error("grading error: {0}")]
    Grading(String),
    #[error("rewrite budget of {0} steps exceeded")]
    StepBudget(usize),
    #[error("invalid rewrite rule: {0}")]
    InvalidRule(String),
    #[error("rewrite system is not locally confluent at {0}")]
    NonConfluent(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("unknown identifier `{0}`")]
    UnknownIdentifier(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("entries are not constants of the cyclotomic field: {0}")]
    NotOverField(String),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("points are not composable: {0}")]
    NotComposable(String),
    #[error("point does not lie on {0}")]
    NotOnCurve(String),
    #[error("schema error: {0}")]
    Schema(String),
}
