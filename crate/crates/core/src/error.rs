use thiserror::Error;

/// Errors raised on invalid input to any of the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("genus must be at least 2, got {0}")]
    InvalidGenus(u32),
    #[error("rank must be positive")]
    NonPositiveRank,
    #[error("a zero-rank bundle must have degree 0, got degree {0}")]
    ZeroRankDegree(i64),
    #[error("a triple needs n1 + n2 >= 1")]
    DegenerateTriple,
    #[error("empty degree window {lo}:{hi}")]
    EmptyWindow { lo: i64, hi: i64 },
    #[error("n1 = {n1} < n2 = {n2}; dualize the triple first")]
    NeedsDual { n1: u32, n2: u32 },
    #[error("n1 = n2 leaves alpha unbounded; a positive cap is required")]
    MissingCap,
    #[error("cap must be positive, got {0}")]
    NonPositiveCap(String),
    #[error("subtriple class ({n1p}, {n2p}) is not proper in a triple of ranks ({n1}, {n2})")]
    ImproperSubtriple { n1p: u32, n2p: u32, n1: u32, n2: u32 },
    #[error("a Hodge chain needs at least one piece")]
    EmptyChain,
    #[error("Hodge chain pieces must alternate between V and W (pieces {0} and {1} agree)")]
    NonAlternatingChain(usize, usize),
    #[error("Hodge chain lies entirely in {0}; both V and W must occur")]
    OneSidedChain(&'static str),
    #[error("p = q = {0}: the alpha range is unbounded and the consistency check is vacuous")]
    VacuousRegime(u32),
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
