use thiserror::Error;

/// Errors raised by the counting and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational: zero denominator")]
    InvalidRational,
    #[error("invalid vertex {vertex} for a graph on {vertex_count} vertices")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("tensor power must be at least 1")]
    InvalidPower,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    UnsupportedSize(usize),
    #[error("probability {0} is outside [0, 1] or has a denominator wider than 64 bits")]
    InvalidProbability(String),
    #[error("instance too large: {0}")]
    InstanceTooLarge(String),
    #[error("pattern graph is not bipartite")]
    NotBipartite,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("hypothesis not met: {0}")]
    InvalidHypothesis(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
