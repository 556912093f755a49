use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("index {index} out of range for rank {rank} (indices are 1-based)")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("rank must be at least 2, got {0}")]
    RankTooSmall(usize),

    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },

    #[error("matrix is not skew-symmetrizable: {0}")]
    NotSkewSymmetrizable(String),

    #[error("operation requires rank {expected}, got {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("matrix is not cyclic")]
    NotCyclic,

    #[error("matrix is not of totally-infinite type")]
    NotTotallyInfinite,

    #[error("pair ({i},{j}) is not of infinite type: |b_ij b_ji| = {product} < 4")]
    PairNotInfinite { i: usize, j: usize, product: String },

    #[error("closed forms need a, b > 0 and ab >= 4, got a = {a}, b = {b}")]
    NotInfiniteType { a: String, b: String },

    #[error("c-vector {direction} has mixed signs at word {word:?}")]
    SignCoherenceViolation { direction: usize, word: Vec<usize> },

    #[error("no band index found for (c0, d0) = ({c0}, {d0}) below bound {bound}")]
    InternalBandSearchFailure { c0: String, d0: String, bound: u64 },

    #[error("vertex type triplet {0} is not admissible for a cyclic matrix")]
    InadmissibleTriplet(String),

    #[error("cone budget of {limit} exceeded")]
    ConeBudgetExceeded { limit: usize },

    #[error("malformed document: {0}")]
    MalformedDocument(String),

    #[error("unsupported document version {found}, expected {expected}")]
    VersionMismatch { found: u32, expected: u32 },

    #[error("ray is too close to the projection antipode (u.p = {cosine:.4} <= {clip:.4})")]
    NearAntipode { cosine: f64, clip: f64 },

    #[error("invalid option: {0}")]
    InvalidOption(String),
}
