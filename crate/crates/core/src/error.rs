use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ground sets overlap: {0:?}")]
    OverlappingGround(Vec<u32>),
    #[error("labels {missing:?} are not in the ground set")]
    NotSubset { missing: Vec<u32> },
    #[error("ground sets differ: {left:?} vs {right:?}")]
    GroundMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("invalid set composition: {0}")]
    InvalidComposition(String),
    #[error("invalid partial order: {0}")]
    InvalidOrder(String),
    #[error("not a natural unit interval order: {0}")]
    NotNuio(String),
    #[error("malformed Dyck word {0:?}")]
    MalformedDyck(String),
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("matrix dimension {0} exceeds the supported maximum")]
    DimensionTooLarge(usize),
    #[error("pattern {0} is not closed under composition of pairs")]
    PatternNotClosed(String),
    #[error("enumeration of {what} needs {requested} elements, budget is {budget}")]
    BudgetExceeded {
        what: String,
        requested: u128,
        budget: usize,
    },
    #[error("{0} is not a subgroup of {1}")]
    NotSubgroup(String, String),
    #[error("{0} is not normal in {1}")]
    NotNormal(String, String),
    #[error("{0}")]
    NotComplement(String),
    #[error("class functions live on different groups: {0} vs {1}")]
    GroupMismatch(String, String),
    #[error("matrix {0} is not an element of {1}")]
    NotInGroup(String, String),
    #[error("values are not constant on conjugacy classes of {0}")]
    NotClassFunction(String),
    #[error("map is not structure-preserving on {0}")]
    NotStructurePreserving(String),
    #[error("field mismatch: q = {0} vs q = {1}")]
    FieldMismatch(u32, u32),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
