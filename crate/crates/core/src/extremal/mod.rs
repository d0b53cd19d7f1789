//! Oracles, tightness constructions, and the constructive lemmas for oriented
//! graphs with degree conditions.

pub mod conditions;
pub mod constructions;
pub mod generators;
pub mod oracle;

pub use conditions::{condition_report, ConditionReport};
pub use constructions::{
    construction_1, construction_1_with, construction_2, construction_2_sizes, construction_2_with,
    CliqueOrientation,
};
pub use generators::{random_lsd, random_oriented, random_smd, random_smd_with, random_tournament, LsdShape};
pub use oracle::{
    brute_force_sigma_hc, brute_force_sigma_hc_bounded, brute_force_sigma_hp, brute_force_sigma_hp_bounded,
    OracleResult, ORACLE_BOUND,
};

pub mod approx;
pub mod checks;
pub mod diamonds;
pub mod forced;
pub mod lemmas;

pub use approx::{approx_discrepancy_cycle, ApproxOutcome};
pub use checks::{arc_bound_holds, check_conjecture, check_theorem, CheckReport, Conjecture, Theorem, Verdict};
pub use diamonds::{find_good_diamonds, good_diamond, Diamond, DiamondSet};
pub use forced::{
    cycle_contains_edges, hamilton_cycle_with_forced_edges, hamilton_cycle_with_forced_edges_exact, UndirectedGraph,
};
pub use lemmas::{insert_vertices_preserving_sigma, insert_vertices_preserving_sigma_minus, swap_vertices_tournament_cycle};
