use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate point `{point}` in space `{space}`")]
    DuplicatePoint { space: String, point: String },
    #[error("point `{point}` is not declared in space `{space}`")]
    UnknownPoint { space: String, point: String },
    #[error("point index {index} is out of range for space `{space}`")]
    PointOutOfRange { space: String, index: usize },
    #[error("space mismatch: expected `{expected}`, found `{found}`")]
    SpaceMismatch { expected: String, found: String },
    #[error("codomain mismatch: `{left}` vs `{right}`")]
    CodomainMismatch { left: String, right: String },
    #[error("map `{map}` is undefined at `{point}`")]
    Undefined { map: String, point: String },
    #[error("map `{map}` is not total")]
    NotTotal { map: String },
    #[error("invalid identifier `{0}`")]
    InvalidName(String),
    #[error("the empty product is not supported")]
    EmptyProduct,
    #[error("{what} exceeds the cap of {cap}")]
    Capacity { what: String, cap: usize },
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid witness: {0}")]
    InvalidWitness(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("duplicate tag `{0}`")]
    DuplicateTag(String),
    #[error("category axiom fails: {0}")]
    Axiom(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
