use thiserror::Error;

/// Errors raised by constructions and checks in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a topology: {0}")]
    NotATopology(String),

    #[error("not a preorder: {0}")]
    NotAPreorder(String),

    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("carrier of {points} points exceeds the cap of {cap}")]
    CarrierTooLarge { points: usize, cap: usize },

    #[error("not a lattice: {0}")]
    NotALattice(String),

    #[error("lattice with {elements} elements exceeds the cap of {cap}")]
    LatticeTooLarge { elements: usize, cap: usize },

    #[error("lattice `{0}` is not distributive")]
    NonDistributiveLattice(&'static str),

    #[error("frame is trivial (bottom equals top)")]
    TrivialFrame,

    #[error("map is not continuous: preimage of open {open:?} is not open")]
    NotContinuous { open: Vec<usize> },

    #[error("map is not monotone: {x} <= {y} but images {fx}, {fy} are unrelated")]
    NotMonotone { x: usize, y: usize, fx: usize, fy: usize },

    #[error("map is not a point map: {0}")]
    NotAPointMap(String),

    #[error("not a lattice homomorphism: {0}")]
    NotALatticeHom(String),

    #[error("{0} is only defined for the {1} variant")]
    VariantMismatch(&'static str, &'static str),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("unknown theorem id `{0}`")]
    UnknownTheorem(String),

    #[error("object too large to render: {nodes} nodes (limit {limit})")]
    TooLarge { nodes: usize, limit: usize },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
