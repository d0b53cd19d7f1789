use thiserror::Error;

use crate::walk::Direction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("walk repeats a vertex or names a vertex outside the host digraph")]
    BadVertices,
    #[error("closed walk needs at least 2 vertices")]
    TooShortToClose,
    #[error("expected {expected} direction flags, got {got}")]
    StepCountMismatch { expected: usize, got: usize },
    #[error("step {step} ({from} -> {to}) is flagged {direction:?} but the host has no such arc")]
    MissingArc {
        step: usize,
        from: usize,
        to: usize,
        direction: Direction,
    },
    #[error("consecutive vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("edge {0} has lower bound above capacity")]
    LowerExceedsCapacity(usize),
    #[error("edge {0} has negative cost")]
    NegativeCost(usize),
    #[error("edge {0} references a node outside the network")]
    NodeOutOfRange(usize),
    #[error("source/sink demand given without both endpoints")]
    BadTerminals,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SmdError {
    #[error("digraph is not semicomplete multipartite")]
    NotSemicompleteMultipartite,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("no weak-domination ordering found for {cycles} cycles")]
    OrderingExhausted { cycles: usize },
    #[error("exact search needs n <= {bound}, got {n}")]
    SizeBound { n: usize, bound: usize },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LsdError {
    #[error("digraph is not locally semicomplete")]
    NotLocallySemicomplete,
    #[error("digraph is not connected")]
    Disconnected,
    #[error("need at least {min} vertices, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("digraph is not strong")]
    NotStrong,
    #[error("digraph is strong; no (C1, Cl)-path exists")]
    Strong,
    #[error("decomposition check failed: {0}")]
    Verification(String),
    #[error("walk does not run from the first to the last strong component")]
    NotComponentPath,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtremalError {
    #[error("invalid parameters: {0}")]
    Parameter(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("oracle needs n <= {bound}, got {n}")]
    SizeBound { n: usize, bound: usize },
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
}

impl From<WalkError> for SmdError {
    fn from(e: WalkError) -> Self {
        SmdError::Internal(e.to_string())
    }
}

impl From<WalkError> for LsdError {
    fn from(e: WalkError) -> Self {
        LsdError::Internal(e.to_string())
    }
}
