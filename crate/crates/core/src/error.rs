use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("edge ({0}, {1}) is not a valid ordered edge on {2} vertices")]
    BadEdge(usize, usize, usize),
    #[error("hyperedge {0:?} is not a strictly increasing {1}-tuple below {2}")]
    BadHyperedge(Vec<usize>, usize, usize),
    #[error("duplicate edge {0:?}")]
    DuplicateEdge(Vec<usize>),
    #[error("uniformity mismatch: {0} vs {1}")]
    UniformityMismatch(usize, usize),
    #[error("dimensionality mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("spread has {got} gaps, graph on {n} vertices needs {}", n.saturating_sub(1))]
    SpreadLength { got: usize, n: usize },
    #[error("graph is empty")]
    EmptyGraph,
    #[error("split {split} does not make the graph interval 2-chromatic")]
    NotBipartiteSplit { split: usize },
    #[error("graph is not interval 2-chromatic")]
    NotInterval2Chromatic,
    #[error("pattern cell {0:?} out of bounds for dims {1:?}")]
    CellOutOfBounds(Vec<usize>, Vec<usize>),
    #[error("pattern dims must be positive, got {0:?}")]
    BadDims(Vec<usize>),
    #[error("{lemma}: {reason}")]
    Precondition { lemma: &'static str, reason: String },
    #[error("family variant {variant}: {reason}")]
    FamilyHypothesis { variant: u8, reason: String },
    #[error("matrix is not square: {0:?}")]
    NotSquare(Vec<usize>),
    #[error("{0} is not a power of two")]
    NotPowerOfTwo(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input is not a perfect matching")]
    NotMatching,
    #[error("coloring is malformed: {0}")]
    MalformedColoring(String),
    #[error("certificate is malformed: {0}")]
    MalformedCertificate(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown {kind} `{name}`")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
