use crate::set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("k = {k} out of range for universe of size {n} (expected 1 <= k <= n)")]
    KOutOfRange { k: usize, n: usize },

    #[error("k = {k} exceeds the supported trace width of 63")]
    KTooLarge { k: usize },

    #[error("edge index {index} out of range ({count} edges)")]
    EdgeIndexOutOfRange { index: usize, count: usize },

    #[error("set is not a transversal of the hypergraph")]
    NotATransversal,

    #[error("extension family exceeded the size cap of {cap} at prefix level {level}")]
    ExtensionOverflow { cap: usize, level: usize },

    #[error("edge {index} of the left hypergraph is not a transversal of the right one")]
    EdgeNotTransversal { index: usize },

    #[error("member {index} of the partial list is not a minimal transversal: {member:?}")]
    NotInDual { index: usize, member: VertexSet },

    #[error("instance too large for brute force: {what} (limit {limit})")]
    TooLarge { what: &'static str, limit: usize },

    #[error("trace is invalid: T must be a subset of S on the same universe")]
    InvalidTrace,
}

pub type Result<T> = std::result::Result<T, Error>;
