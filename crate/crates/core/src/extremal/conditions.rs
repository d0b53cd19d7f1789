//! Degree conditions: minimum degree, Ore, and `s*`.

use crate::graph::Digraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub n: usize,
    pub min_degree: usize,
    pub ore_holds: bool,
    /// Minimum of `d(u) + d(v) - n` over non-adjacent pairs, `n - 2` when
    /// every pair is adjacent.
    pub s_star: i64,
    pub arc_count: usize,
    degrees: Vec<usize>,
    /// Smallest degree sum over non-adjacent pairs, if any.
    min_pair_sum: Option<usize>,
}

impl ConditionReport {
    /// `d(u) + d(v) >= t` for every pair of non-adjacent vertices.
    pub fn degree_sum_threshold_holds(&self, t: usize) -> bool {
        self.min_pair_sum.is_none_or(|s| s >= t)
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }
}

/// Degrees are adjacency degrees in the underlying graph, which for oriented
/// graphs coincide with multigraph degrees.
pub fn condition_report(d: &Digraph) -> ConditionReport {
    let n = d.n();
    let degrees: Vec<usize> = (0..n).map(|v| d.adjacency_degree(v)).collect();
    let mut min_pair_sum: Option<usize> = None;
    for u in 0..n {
        for v in u + 1..n {
            if !d.adjacent(u, v) {
                let s = degrees[u] + degrees[v];
                min_pair_sum = Some(min_pair_sum.map_or(s, |m| m.min(s)));
            }
        }
    }
    let s_star = match min_pair_sum {
        Some(s) => s as i64 - n as i64,
        None => n as i64 - 2,
    };
    ConditionReport {
        n,
        min_degree: degrees.iter().copied().min().unwrap_or(0),
        ore_holds: s_star >= 0,
        s_star,
        arc_count: d.arc_count(),
        degrees,
        min_pair_sum,
    }
}
