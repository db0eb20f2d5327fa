use thiserror::Error;

use crate::polymatroid::ValidationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("rank table has {got} entries, expected {expected} for a ground set of size {n}")]
    TableLength { n: usize, expected: usize, got: usize },
    #[error("rank table is missing an entry for subset {0}")]
    MissingSubset(String),
    #[error("duplicate element label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid element label `{0}`")]
    InvalidLabel(String),
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("ground sets of more than {max} elements are not supported (got {got})")]
    GroundSetTooLarge { max: usize, got: usize },
    #[error("subset is not contained in the ground set")]
    NotASubset,
    #[error("k must be positive")]
    ZeroK,
    #[error("mismatched k values: {left} and {right}")]
    KMismatch { left: u32, right: u32 },
    #[error("ground sets share the label `{0}`")]
    LabelCollision(String),
    #[error("type is undefined: element `{element}` has rank {rank}, not one of 1, {}, {k}", k - 1)]
    TypeUndefined { element: String, rank: u32, k: u32 },
    #[error("operation requires k >= {min}, got k = {k}")]
    KTooSmall { min: u32, k: u32 },
    #[error("compression parameter l = {l} is outside 1..={max}")]
    LOutOfRange { l: u32, max: u32 },
    #[error("not a k-polymatroid: {0}")]
    NotPolymatroid(ValidationReport),
    #[error("clone universe of {0} clones exceeds the 64-clone limit")]
    UniverseTooLarge(usize),
    #[error("invalid clone label `{0}`")]
    InvalidClone(String),
    #[error("representation search supports at most {max} points, got {got}")]
    TooManyPoints { max: usize, got: usize },
    #[error("clone set meets the contracted or deleted clones")]
    CloneOverlap,
    #[error("clone counts for `{element}` exceed the {available} available clones")]
    CountOverflow { element: String, available: u32 },
    #[error("U(2,4) search and GF(2) representation disagree on binarity (internal error)")]
    OracleDisagreement,
    #[error("matrix column labels do not match the oracle's points")]
    LabelMismatch,
    #[error("malformed matrix: {0}")]
    MatrixFormat(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogName(String),
    #[error("catalog entry `{name}` is not defined for k = {k}")]
    CatalogIncompatible { name: String, k: u32 },
    #[error("search budget of {0} nodes exceeded; results would be incomplete")]
    BudgetExceeded(u64),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
