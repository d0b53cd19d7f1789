//! Semicomplete multipartite digraphs.

pub mod diff_ends;
pub mod discrepancy;
pub mod domination;
pub mod merge;
pub mod partite;

pub use diff_ends::{ham_path_diff_ends, DiffEndsOutcome};
pub use discrepancy::{
    is_hamiltonian_smd_exact, max_forward_hamilton_cycle, max_forward_hamilton_cycle_with_bound,
    max_forward_hamilton_path, CycleCase, SmdOptimum, EXACT_HAMILTON_BOUND,
};
pub use domination::{merge_to_irreducible, order_cycle_factor, order_cycles, weakly_dominates, CycleFactorOrdering};
pub use merge::{hamilton_path_from_factor, merge_path_cycle};
pub use partite::{detect_partite_structure, majority_check, majority_from_sizes, Majority, PartiteStructure};
