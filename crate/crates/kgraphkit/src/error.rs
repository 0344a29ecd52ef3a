use thiserror::Error;

/// Errors produced by graph construction, parsing, and the various analyses.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rank must be at least 1, got {0}")]
    BadRank(usize),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("edge `{edge}` references unknown vertex `{vertex}`")]
    DanglingReference { edge: String, vertex: String },
    #[error("edge `{edge}` has color {color}, rank is {rank}")]
    BadColor { edge: String, color: usize, rank: usize },
    #[error("square ({0}, {1}, {2}, {3}) is malformed: {4}")]
    InvalidSquare(String, String, String, String, String),
    #[error("duplicate square on pair ({0}, {1})")]
    DuplicateSquare(String, String),
    #[error("missing square for composable pair ({0}, {1})")]
    MissingSquare(String, String),
    #[error("associativity violation on triple ({0}, {1}, {2})")]
    AssociativityViolation(String, String, String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("paths are not composable: source `{0}` differs from range `{1}`")]
    NotComposable(String, String),
    #[error("degree vector has length {got}, rank is {expected}")]
    BadDegree { expected: usize, got: usize },
    #[error("requested split {requested:?} exceeds degree {degree:?}")]
    OutOfRange { requested: Vec<u32>, degree: Vec<u32> },
    #[error("vertex set is not hereditary: witness edge `{0}`")]
    NotHereditary(String),
    #[error("sets are not nested")]
    NotNested,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("budget component must be positive")]
    InvalidBudget,
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("construction too large: {0}")]
    TooLarge(String),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("input is empty")]
    EmptyInput,
}

pub type Result<T> = std::result::Result<T, Error>;
