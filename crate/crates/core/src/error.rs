use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("elements live over different generator sets")]
    MismatchedGenerators,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` has degree 0; degrees must be positive")]
    ZeroDegree(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("sequence is not a permutation of 0..{0}")]
    NotAPermutation(usize),
    #[error("image of `{generator}` must be homogeneous of degree {expected}")]
    BadImageDegree { generator: String, expected: u32 },
    #[error("element is not homogeneous")]
    Inhomogeneous,
    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: i64, min: i64, max: i64 },
    #[error("missing entry {0} of the sequence")]
    MissingEntry(usize),
    #[error("invalid rank {rank} for {family}: {reason}")]
    InvalidRank { family: String, rank: u32, reason: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("relation count {relations} differs from variable count {variables}")]
    NotSquare { relations: usize, variables: usize },
    #[error("Lie algebra axioms fail: {0}")]
    LieAxioms(String),
    #[error("degree {degree} needs {words} words, budget is {budget}")]
    BudgetExceeded { degree: u32, words: usize, budget: usize },
    #[error("series truncated at {available}, comparison needs {requested}")]
    InsufficientTruncation { available: u32, requested: u32 },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("relation {index} has degree {degree}; relations must have positive degree")]
    RelationDegree { index: usize, degree: u32 },
    #[error("no cached result for this configuration")]
    CacheMiss,
    #[error("i/o: {0}")]
    Io(String),
    #[error("serialization: {0}")]
    Serde(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Serde(err.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
