use thiserror::Error;

/// Errors raised anywhere in the engine.
///
/// Most variants signal a precondition violation by the caller. A few
/// (`DecompositionFailed`, `FongReynoldsAmbiguity`, `UniquenessFailure`,
/// `NoWitness`, `DefectMismatch`) can only be produced by an internal
/// inconsistency and are reported as fatal by the verifier.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("group closure exceeded the order cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("permutation degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("element is not in the group")]
    ElementNotInGroup,
    #[error("not a subgroup of the ambient group")]
    NotASubgroup,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("division by zero")]
    DivisionByZero,
    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("group is not {p}-solvable")]
    NotPSolvable { p: u64 },
    #[error("character table construction failed: {0}")]
    TableFailed(String),
    #[error("decomposition failed: {0}")]
    DecompositionFailed(String),
    #[error("more than one block of the stabilizer induces onto the block")]
    FongReynoldsAmbiguity,
    #[error("induction is not irreducible: {0}")]
    InductionNotIrreducible(String),
    #[error("check failed: {0}")]
    CheckFailed(String),
    #[error("defect mismatch: Sylow order {sylow} but degree formula gives {expected}")]
    DefectMismatch { sylow: usize, expected: usize },
    #[error("character is not invariant under the acting group")]
    NotInvariant,
    #[error("Glauberman correspondent is not unique ({0} candidates)")]
    UniquenessFailure(usize),
    #[error("no normalizer witness found: {0}")]
    NoWitness(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("duplicate corpus entry name {0:?}")]
    DuplicateName(String),
    #[error("unknown group {0:?}")]
    UnknownGroup(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
