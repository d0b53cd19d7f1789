//! Hamilton oriented paths and cycles with as many forward arcs as possible.

pub mod components;
pub mod error;
pub mod extremal;
pub mod flow;
pub mod graph;
pub mod hamilton;
pub mod lsd;
pub mod smd;
pub mod walk;

pub use components::{strong_decomposition, StrongDecomposition};
pub use error::{ExtremalError, FlowError, GraphError, LsdError, SmdError, WalkError};
pub use graph::Digraph;
pub use walk::{reverse_walk, sigma_stats, Direction, OrientedWalk, SigmaStats};
