use crate::label::VertexLabel;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(VertexLabel),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownEndpoint(VertexLabel),
    #[error("self-loop at {0}")]
    SelfLoop(VertexLabel),
    #[error("{op} requires a simple graph")]
    NotSimple { op: &'static str },
    #[error("no vertex labeled {0}")]
    NoSuchVertex(VertexLabel),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("{op}: size {size} exceeds exact-search limit {limit}")]
    TooLarge {
        op: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("missing entry for vertex {0}")]
    MissingVertexEntry(VertexLabel),
    #[error("color {color} is outside the declared universe")]
    ColorOutsideUniverse { color: u32 },
    #[error("expected a list assignment in {expected} mode")]
    WrongListMode { expected: &'static str },
    #[error("solve aborted: {op} exceeded its node or time budget")]
    BudgetExceeded { op: &'static str },
    #[error("certificate claim failed to reproduce: {0}")]
    ClaimMismatch(String),
    #[error("invalid {what}: {detail}")]
    Format { what: &'static str, detail: String },
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
