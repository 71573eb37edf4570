use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("group order exceeds the cap of {cap}")]
    OrderCap { cap: usize },
    #[error("G-sets over different groups")]
    GroupMismatch,
    #[error("invalid G-set: {0}")]
    InvalidGSet(String),
    #[error("map is not equivariant: {0}")]
    NotEquivariant(String),
    #[error("middle G-set is not transitive")]
    NotTransitive,
    #[error("morphisms are not composable: {0}")]
    Mismatch(String),
    #[error("invalid 4-tuple: {0}")]
    InvalidTuple(String),
    #[error("element {elem} does not centralize subgroup class {class}")]
    NotCentralizing { elem: usize, class: usize },
    #[error("fusion quotient has torsion in component {component}: {factors:?}")]
    Torsion { component: usize, factors: Vec<String> },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
