use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    DuplicateEdge(usize, usize),
    SelfLoop(usize),
    VertexOutOfRange { vertex: usize, n: usize },
    MalformedGraph6(String),
    Disconnected,
    /// The graph has a single vertex; scfc is 0 by convention.
    Trivial,
    NotAPath,
    NotATree,
    InvalidParams(String),
    NotEdgeDisjoint,
    NotATriangle,
    /// A construction produced a coloring that does not verify.
    VerificationFailed(String),
    TooLarge(usize),
    OddOrder(usize),
    /// A coloring uses a color outside `1..=k`, or `k` is outside `1..=16`.
    InvalidColoring(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateEdge(u, v) => write!(f, "duplicate edge {u}-{v}"),
            Error::SelfLoop(u) => write!(f, "self-loop at vertex {u}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::MalformedGraph6(msg) => write!(f, "malformed graph6: {msg}"),
            Error::Disconnected => f.write_str("graph is disconnected"),
            Error::Trivial => f.write_str("graph has a single vertex"),
            Error::NotAPath => f.write_str("vertex sequence is not a path"),
            Error::NotATree => f.write_str("graph is not a tree"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::NotEdgeDisjoint => f.write_str("triangles are not edge-disjoint"),
            Error::NotATriangle => f.write_str("vertex triple is not a triangle"),
            Error::VerificationFailed(msg) => write!(f, "verification failed: {msg}"),
            Error::TooLarge(n) => write!(f, "parameter {n} exceeds the supported size"),
            Error::OddOrder(n) => write!(f, "no cubic graph has odd order {n}"),
            Error::InvalidColoring(msg) => write!(f, "invalid coloring: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
