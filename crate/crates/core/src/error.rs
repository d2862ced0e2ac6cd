use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed graph6 input. `offset` is the byte index within the line.
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: &'static str },

    #[error("{0} nodes is outside the supported range {1}")]
    NodeCount(usize, &'static str),

    #[error("node index {index} out of range for a graph on {n} nodes")]
    NodeIndex { index: usize, n: usize },

    #[error("self-loop on node {0}")]
    SelfLoop(usize),

    #[error("graph has no edges")]
    NoEdges,

    #[error("graph is not connected")]
    Disconnected,

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    NotSymmetric(f64),

    #[error("shape mismatch: {0:?} vs {1:?}")]
    ShapeMismatch((usize, usize), (usize, usize)),

    #[error("inverse temperature must be finite and non-negative, got {0}")]
    InvalidBeta(f64),

    #[error("walk count overflow at power {0}")]
    Overflow(usize),

    #[error("numerical failure: {0}")]
    Numerical(String),

    /// Metrics CSV with the wrong header, column count or field values.
    #[error("metrics CSV: {0}")]
    Schema(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("correlation undefined: {0}")]
    UndefinedCorrelation(&'static str),

    #[error("line {line}: {source}")]
    Line {
        line: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by malformed input data rather than by the
    /// numerics or the environment.
    pub fn is_parse_error(&self) -> bool {
        match self {
            Error::Graph6 { .. } | Error::Schema(_) | Error::Csv(_) => true,
            Error::Line { source, .. } => source.is_parse_error(),
            _ => false,
        }
    }
}
