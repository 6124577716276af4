use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("shape mismatch in {op}: left side has {left} elements, right side has {right}")]
    Shape {
        op: &'static str,
        left: usize,
        right: usize,
    },

    #[error("pair ({0}, {1}) is out of bounds for a relation of shape {2} -> {3}")]
    PairOutOfBounds(usize, usize, usize, usize),

    #[error("carrier of {0} elements exceeds the supported maximum of {1}")]
    CarrierTooLarge(usize, usize),

    #[error("invalid labels: {0}")]
    Labels(String),

    #[error("invalid Frobenius data: {0}")]
    Data(String),

    #[error("invalid group: {0}")]
    Group(String),

    #[error("invalid groupoid: {0}")]
    Groupoid(String),

    #[error("unknown group `{0}`")]
    UnknownGroup(String),

    #[error("diagram parse error at layer {layer}: {message}")]
    Parse { layer: usize, message: String },

    #[error("arity mismatch at layer {layer}: expected {expected} wires, got {actual}")]
    Arity {
        layer: usize,
        expected: usize,
        actual: usize,
    },

    #[error("diagrams have different types: {0}->{1} vs {2}->{3}")]
    DiagramMismatch(usize, usize, usize, usize),

    #[error("proposition parse error: {0}")]
    Proposition(String),

    #[error("classification for n = {n} exceeds the configured bound {bound}; raise it with FROBREL_MAX_N or ClassifyOptions::max_n")]
    BoundExceeded { n: usize, bound: usize },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
