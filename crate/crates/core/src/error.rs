use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid group specification: {0}")]
    InvalidGroup(String),

    #[error("invalid ring specification: {0}")]
    InvalidRing(String),

    #[error("{what} is {actual}, which exceeds the configured limit of {limit}")]
    SizeLimit {
        what: &'static str,
        actual: u64,
        limit: u64,
    },

    #[error("morphisms are not composable: target {target} differs from source {source_obj}")]
    NotComposable { target: usize, source_obj: usize },

    #[error("element {0} is outside the homomorphism's domain")]
    OutsideDomain(usize),

    #[error("character does not vanish on the loop ({u}, {v})")]
    NotTrivialOnLoops { u: usize, v: usize },

    #[error("loop values at object {0} do not form an additive homomorphism")]
    NotAdditive(usize),

    #[error("matrix does not satisfy the Leibniz rule")]
    NotADerivation,

    #[error("element {0} is not central")]
    NotCentral(usize),

    #[error("operands belong to different group rings")]
    Mismatch,

    #[error("the torsion-free coefficient tag supports no element arithmetic")]
    SymbolicRing,

    #[error("unknown element name {0:?}")]
    UnknownElement(String),
}

impl Error {
    /// True for errors caused by exceeding a size cap.
    pub fn is_size_limit(&self) -> bool {
        matches!(self, Error::SizeLimit { .. })
    }
}
