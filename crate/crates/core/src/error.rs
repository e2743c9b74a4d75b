use thiserror::Error;

/// Everything that can go wrong across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex not in graph: {0}")]
    UnknownVertex(usize),

    #[error("empty graph")]
    EmptyGraph,

    #[error("complete bipartite graph needs two non-empty parts")]
    EmptyPart,

    #[error("graph not connected")]
    NotConnected,

    #[error("bound requires simple graph")]
    NotSimple,

    #[error("invalid path: {0}")]
    InvalidPath(String),

    #[error("paths not edge-disjoint: {0}")]
    PathsNotDisjoint(String),

    #[error("non-orientable word")]
    NonOrientableWord,

    #[error("malformed word: {0}")]
    MalformedWord(String),

    #[error("invalid rewrite: {0}")]
    InvalidRewrite(String),

    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),

    #[error("faces do not form an orientable closed surface: {0}")]
    InconsistentFaces(String),

    #[error("invalid empire assignment: {0}")]
    InvalidEmpires(String),

    #[error("instance too large for exact solver ({vertices} vertices, cap {cap})")]
    TooLarge { vertices: usize, cap: usize },

    #[error("degree precondition failed (non-spherical input?): every remaining empire has degree >= {bound}")]
    DegreePrecondition { bound: usize },

    #[error("not an m-pire graph: empire {empire} has {size} vertices, limit {limit}")]
    NotMPire { empire: String, size: usize, limit: usize },

    #[error("bound needs χ ≤ 0 (got {0})")]
    PositiveEulerCharacteristic(i64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
