use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("order {order} exceeds the supported maximum {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {vertex} is outside a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("malformed graph: {0}")]
    Malformed(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input is disconnected")]
    Disconnected,
    #[error("vertex set is not a homogeneous set of the required kind: {0}")]
    NotHomogeneous(String),
    #[error("vertices {0:?} do not induce a five-cycle in cycle order")]
    NotInducedC5(Vec<usize>),
    #[error("input contains an induced {0}")]
    NotFamilyFree(String),
    #[error("seed is not free of the forbidden family (contains {0})")]
    SeedNotFamilyFree(String),
    #[error("graph is not 4-colourable but no catalog member embeds: the catalog is incomplete")]
    IncompleteCatalog,
    #[error("catalog entry `{name}` is invalid: {reason}")]
    InvalidCatalogEntry { name: String, reason: String },
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("generated graph failed re-verification: {0}")]
    Unsound(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
