use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Outcomes that the census must report (a graph failing to be strongly
/// regular, a partition failing to be antipodal, ...) are *not* errors;
/// operations return those as ordinary variants.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("level {level} out of range 1..={diameter}")]
    LevelOutOfRange { level: usize, diameter: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("image array of length {found} is not a permutation of 0..{expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0}")]
    NotAPermutation(String),
    #[error("seed tuple does not belong to the universe")]
    SeedNotInUniverse,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("point set is not invariant under the group generators")]
    SetNotInvariant,
    #[error("supplied generators are not automorphisms of the graph")]
    NotAutomorphisms,
    #[error("tuple orbit exceeded the budget of {0} tuples")]
    TupleBudgetExceeded(usize),
    #[error("automorphism search exceeded the budget of {0} tree nodes")]
    BudgetExceeded(u64),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("order {order} is invalid for the {method} construction")]
    InvalidOrder { order: usize, method: &'static str },
    #[error("internal verification failed for {name}: {detail}")]
    InternalVerificationFailed { name: &'static str, detail: String },
    #[error("design invariant violated: {0}")]
    DesignInvariantViolated(String),
    #[error("blocks from different parallel classes do not all meet in lambda points")]
    CrossClassIntersectionNotConstant,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("unknown construction name `{0}`")]
    UnknownName(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("parse error: {0}")]
    ParseError(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
