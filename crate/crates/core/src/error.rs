use thiserror::Error;

/// Invalid graph construction input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),
}

/// Malformed edge-list or family text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// `token` is the offending piece of input.
    #[error("line {line}: {message}: `{token}`")]
    EdgeList {
        line: usize,
        token: String,
        message: String,
    },
    #[error("family `{input}`: {message} near `{token}`")]
    Family {
        input: String,
        token: String,
        message: String,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Domain(#[from] FamilyError),
}

impl ParseError {
    /// True when the failure is an out-of-range vertex index rather than bad syntax.
    pub fn is_range_error(&self) -> bool {
        matches!(self, ParseError::Graph(GraphError::VertexOutOfRange { .. }))
    }
}

/// A family parameter outside its domain.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}: parameter `{param}` = {value} violates {requirement}")]
pub struct FamilyError {
    pub kind: &'static str,
    pub param: &'static str,
    pub value: i64,
    pub requirement: &'static str,
}

/// Refusals from the exact hull-number search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices, exceeding max_vertices = {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("forced set has {forced} vertices but graph has only {n}")]
    ForcedTooLarge { forced: usize, n: usize },
    #[error("constraint refers to vertex {vertex} outside graph on {n} vertices")]
    ConstraintOutOfRange { vertex: usize, n: usize },
    #[error("invalid search config: {0}")]
    Config(&'static str),
    #[error("constraints unsound: constrained search gave {constrained}, unconstrained gave {unconstrained}")]
    UnsoundConstraints {
        constrained: usize,
        unconstrained: usize,
    },
}
