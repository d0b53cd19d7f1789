//! Partite-set recognition and the majority inequalities.

use crate::graph::Digraph;

/// Partite sets `V_1, ..., V_p` of a semicomplete multipartite digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartiteStructure {
    pub parts: Vec<Vec<usize>>,
    pub part_of: Vec<usize>,
}

impl PartiteStructure {
    pub fn p(&self) -> usize {
        self.parts.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn same_part(&self, u: usize, v: usize) -> bool {
        self.part_of[u] == self.part_of[v]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Majority {
    /// `2 max n_i <= sum n_i`
    Cycle,
    /// `2 max n_i <= sum n_i + 1`
    Path,
}

/// Partite sets of `d`, or `None` when `d` is not semicomplete multipartite
/// (non-adjacency is not an equivalence relation, or fewer than two parts).
///
/// Parts are listed in order of their smallest vertex.
pub fn detect_partite_structure(d: &Digraph) -> Option<PartiteStructure> {
    let n = d.n();
    let mut part_of = vec![usize::MAX; n];
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        if part_of[v] != usize::MAX {
            continue;
        }
        let idx = parts.len();
        let members: Vec<usize> = (v..n).filter(|&w| w == v || !d.adjacent(v, w)).collect();
        for &w in &members {
            if part_of[w] != usize::MAX {
                return None;
            }
            part_of[w] = idx;
        }
        parts.push(members);
    }
    if parts.len() < 2 {
        return None;
    }
    for u in 0..n {
        for w in u + 1..n {
            if (part_of[u] == part_of[w]) == d.adjacent(u, w) {
                return None;
            }
        }
    }
    Some(PartiteStructure { parts, part_of })
}

pub fn majority_check(parts: &PartiteStructure, kind: Majority) -> bool {
    majority_from_sizes(&parts.sizes(), kind)
}

pub fn majority_from_sizes(sizes: &[usize], kind: Majority) -> bool {
    let total: usize = sizes.iter().sum();
    let max = sizes.iter().copied().max().unwrap_or(0);
    match kind {
        Majority::Cycle => 2 * max <= total,
        Majority::Path => 2 * max <= total + 1,
    }
}
