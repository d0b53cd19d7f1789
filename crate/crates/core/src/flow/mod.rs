//! Min-cost flow and the maximum-cost spanning factors built on it.

pub mod factor;
pub mod network;

pub use factor::{
    build_symmetric_01, invert_costs, max_cost_cycle_factor, max_cost_one_path_cycle_factor,
    CostedDigraph, FactorKind, FactorParts, SpanningFactor,
};
pub use network::{min_cost_flow, FlowEdge, FlowNetwork, FlowOutcome, FlowSolution};
