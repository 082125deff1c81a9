use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {vertex}")]
    Loop { vertex: usize },
    #[error("complete bipartite graph requires nonempty parts, got ({m}, {n})")]
    EmptyPartiteSet { m: usize, n: usize },
    #[error("graph on {n} vertices exceeds the isomorphism cap of {cap}")]
    IsomorphismCap { n: usize, cap: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DescriptorError {
    #[error("invalid parameters for {shape}: {reason}")]
    InvalidParameters { shape: &'static str, reason: String },
    #[error("Gamma(m,n,q,r) with r >= 1 is not realizable as the niche graph of a semiorder")]
    NotASemiorderShape,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnumerationError {
    #[error("enumeration of orders on {n} vertices exceeds the cap of {cap}")]
    SizeCap { n: usize, cap: usize },
}
