//! Good diamonds: an orientation of `K₄` minus the edge `cd` in which `c`
//! and `d` see `a` and `b` the same way. Both `c -> d` and `d -> c` then have
//! a 3-arc oriented path through `a, b` with at least two forward arcs.

use crate::graph::Digraph;
use crate::walk::OrientedWalk;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diamond {
    /// The two degree-3 vertices.
    pub a: usize,
    pub b: usize,
    /// The two degree-2 vertices.
    pub c: usize,
    pub d: usize,
    /// `c .. d` through `a, b`, `σ⁺ >= 2`.
    pub p: OrientedWalk,
    /// `d .. c` through `a, b`, `σ⁺ >= 2`.
    pub q: OrientedWalk,
}

impl Diamond {
    pub fn vertices(&self) -> [usize; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// Re-checks the definition and the stored paths against `host`.
    pub fn is_valid_for(&self, host: &Digraph) -> bool {
        let Some(fresh) = good_diamond(host, self.a, self.b, self.c, self.d) else {
            return false;
        };
        let ends_ok = |w: &OrientedWalk, x: usize, y: usize| {
            let v = w.vertices();
            w.validate(host).is_ok()
                && !w.is_closed()
                && v.len() == 4
                && v[0] == x
                && v[3] == y
                && w.sigma_stats().forward >= 2
        };
        let mut inner = [self.p.vertices()[1], self.p.vertices()[2]];
        inner.sort_unstable();
        let mut ab = [fresh.a, fresh.b];
        ab.sort_unstable();
        ends_ok(&self.p, self.c, self.d) && ends_ok(&self.q, self.d, self.c) && inner == ab
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DiamondSet {
    pub members: Vec<Diamond>,
}

impl DiamondSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_valid_for(&self, host: &Digraph) -> bool {
        let mut seen = vec![false; host.n()];
        self.members.iter().all(|m| {
            m.is_valid_for(host) && m.vertices().iter().all(|&v| !std::mem::replace(&mut seen[v], true))
        })
    }
}

fn best_path(host: &Digraph, x: usize, a: usize, b: usize, y: usize) -> Option<OrientedWalk> {
    [[x, a, b, y], [x, b, a, y]]
        .into_iter()
        .filter_map(|order| OrientedWalk::from_vertices(host, order.to_vec(), false).ok())
        .max_by_key(|w| w.sigma_stats().forward)
        .filter(|w| w.sigma_stats().forward >= 2)
}

/// Builds the diamond with roles `(a, b, c, d)` if they form a good diamond
/// in the oriented graph `host`. Whether `c` and `d` are adjacent is ignored.
pub fn good_diamond(host: &Digraph, a: usize, b: usize, c: usize, d: usize) -> Option<Diamond> {
    let vs = [a, b, c, d];
    if vs.iter().any(|&v| v >= host.n()) || (0..4).any(|i| (i + 1..4).any(|j| vs[i] == vs[j])) {
        return None;
    }
    let pairs = [(a, b), (a, c), (a, d), (b, c), (b, d)];
    if pairs.iter().any(|&(x, y)| !host.adjacent(x, y) || (host.has_arc(x, y) && host.has_arc(y, x))) {
        return None;
    }
    if host.has_arc(c, a) != host.has_arc(d, a) || host.has_arc(c, b) != host.has_arc(d, b) {
        return None;
    }
    let p = best_path(host, c, a, b, d)?;
    let q = best_path(host, d, a, b, c)?;
    Some(Diamond { a, b, c, d, p, q })
}

/// Node budget for the disjointness backtracking.
const SEARCH_BUDGET: usize = 2_000_000;

/// `k` vertex-disjoint good diamonds of an oriented graph, or `None` when
/// the search finds none (or `d` is not oriented).
pub fn find_good_diamonds(d: &Digraph, k: usize) -> Option<DiamondSet> {
    if !d.is_oriented() {
        return None;
    }
    let mut used = vec![false; d.n()];
    let mut chosen = Vec::with_capacity(k);
    let mut budget = SEARCH_BUDGET;
    search(d, k, &mut used, &mut chosen, &mut budget).then_some(DiamondSet { members: chosen })
}

fn search(d: &Digraph, k: usize, used: &mut [bool], chosen: &mut Vec<Diamond>, budget: &mut usize) -> bool {
    if chosen.len() == k {
        return true;
    }
    let n = d.n();
    for a in 0..n {
        if used[a] {
            continue;
        }
        let bs: Vec<usize> = d.neighbors(a).into_iter().filter(|&b| b > a && !used[b]).collect();
        for b in bs {
            // common free neighbours bucketed by how they meet a and b
            let mut buckets: [Vec<usize>; 4] = Default::default();
            for x in 0..n {
                if x != a && x != b && !used[x] && d.adjacent(x, a) && d.adjacent(x, b) {
                    let sig = usize::from(d.has_arc(x, a)) * 2 + usize::from(d.has_arc(x, b));
                    buckets[sig].push(x);
                }
            }
            for bucket in &buckets {
                for (i, &c) in bucket.iter().enumerate() {
                    for &dd in &bucket[i + 1..] {
                        if *budget == 0 {
                            return false;
                        }
                        *budget -= 1;
                        let Some(diamond) = good_diamond(d, a, b, c, dd) else {
                            continue;
                        };
                        for v in diamond.vertices() {
                            used[v] = true;
                        }
                        chosen.push(diamond);
                        if search(d, k, used, chosen, budget) {
                            return true;
                        }
                        let diamond = chosen.pop().unwrap();
                        for v in diamond.vertices() {
                            used[v] = false;
                        }
                    }
                }
            }
        }
    }
    false
}
