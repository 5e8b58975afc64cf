use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator: {0}")]
    UnknownGenerator(String),
    #[error("empty system")]
    Empty,
    #[error("system is not irreducible")]
    NotIrreducible,
    #[error("subset {0} is not spherical")]
    NotSpherical(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("invalid thickness: {0}")]
    InvalidThickness(String),
    #[error("graph is not chordal")]
    NotChordal,
    #[error("clique {0} fails the predicate")]
    CliquePredicateFailed(String),
    #[error("expected rank {expected}, got {got}")]
    WrongRank { expected: usize, got: usize },
    #[error("bad radii: r = {r}, R = {big_r}")]
    BadRadii { r: usize, big_r: usize },
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::LimitExceeded(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Resource caps shared by the exponential-time routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum size of a braid-equivalence class explored by `reduce`.
    pub braid_class: usize,
    /// Maximum number of group elements in a ball.
    pub ball_elements: usize,
    /// Maximum number of spherical subsets in the Davis poset.
    pub spherical_poset: usize,
    /// Maximum number of chains (simplices) in the Davis chamber.
    pub chamber_simplices: usize,
    /// Largest generating set accepted by the algebraic-rank family search.
    pub algebraic_rank_generators: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            braid_class: 200_000,
            ball_elements: 1_000_000,
            spherical_poset: 1 << 20,
            chamber_simplices: 2_000_000,
            algebraic_rank_generators: 14,
        }
    }
}
