use thiserror::Error;

/// Errors raised by construction, validation and search routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown lattice element `{0}`")]
    UnknownElement(String),

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("lattice order is not antisymmetric: `{0}` <= `{1}` and `{1}` <= `{0}`")]
    NotAntisymmetric(String, String),

    #[error("elements `{0}` and `{1}` have no unique {2}")]
    NotALattice(String, String, &'static str),

    #[error("lattice must have at least one element")]
    EmptyLattice,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("unknown ring element `{0}`")]
    UnknownRingElement(String),

    #[error("cannot parse {what} `{input}`")]
    Parse { what: &'static str, input: String },

    #[error("L-subset has {found} values but the ring has {expected} elements")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("not an L-subring: {0}")]
    NotSubring(String),

    #[error("not an ideal of mu: {0}")]
    NotIdeal(String),

    #[error("subset is not an ideal of its parent: {0}")]
    NotCrispIdeal(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("sum requires eta(0) = theta(0), got `{0}` and `{1}`")]
    SumZeroMismatch(String, String),

    #[error("empty family")]
    EmptyFamily,

    #[error("search space of {size} candidates exceeds the cap of {cap}")]
    CapExceeded { size: u128, cap: u128 },

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("no primary decomposition found: {0}")]
    NoDecomposition(String),

    #[error("unknown theorem id `{id}`; valid ids: {valid}")]
    UnknownTheorem { id: String, valid: String },
}

pub type Result<T> = std::result::Result<T, Error>;
