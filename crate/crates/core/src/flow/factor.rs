//! Symmetric (0,1)-digraphs and maximum-cost spanning factors.

use crate::flow::network::{min_cost_flow, FlowNetwork};
use crate::graph::Digraph;

/// A digraph whose every arc carries cost 0 or 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostedDigraph {
    base: Digraph,
    cost: Vec<u8>,
}

impl CostedDigraph {
    /// Assigns `cost(u, v)` to every arc of `base`. Costs must be 0 or 1.
    pub fn new(base: Digraph, cost: impl Fn(usize, usize) -> u8) -> Self {
        let n = base.n();
        let mut table = vec![0u8; n * n];
        for (u, v) in base.arcs() {
            let c = cost(u, v);
            assert!(c <= 1, "arc costs must be 0 or 1");
            table[u * n + v] = c;
        }
        Self { base, cost: table }
    }

    pub fn base(&self) -> &Digraph {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn cost(&self, u: usize, v: usize) -> Option<u8> {
        self.base
            .has_arc(u, v)
            .then(|| self.cost[u * self.base.n() + v])
    }

    /// Arcs with their costs, in lexicographic order.
    pub fn costed_arcs(&self) -> impl Iterator<Item = (usize, usize, u8)> + '_ {
        let n = self.base.n();
        self.base.arcs().map(move |(u, v)| (u, v, self.cost[u * n + v]))
    }

    /// The digraph formed by the cost-1 arcs.
    pub fn cost_one_arcs(&self) -> Digraph {
        Digraph::from_arcs_lossy(
            self.n(),
            self.costed_arcs().filter(|a| a.2 == 1).map(|(u, v, _)| (u, v)),
        )
    }

    pub fn path_cost(&self, arcs: impl IntoIterator<Item = (usize, usize)>) -> Option<usize> {
        arcs.into_iter()
            .map(|(u, v)| self.cost(u, v).map(usize::from))
            .sum()
    }
}

/// Original arcs at cost 1, plus the reverse of every arc whose reverse is
/// missing, at cost 0. A digon keeps both arcs at cost 1.
pub fn build_symmetric_01(d: &Digraph) -> CostedDigraph {
    let base = Digraph::from_arcs_lossy(d.n(), d.arcs().flat_map(|(u, v)| [(u, v), (v, u)]));
    CostedDigraph::new(base, |u, v| u8::from(d.has_arc(u, v)))
}

/// Flips every cost between 0 and 1.
pub fn invert_costs(h: &CostedDigraph) -> CostedDigraph {
    let cost = h.cost.iter().map(|&c| 1 - c).collect();
    CostedDigraph {
        base: h.base.clone(),
        cost,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorKind {
    CycleFactor,
    OnePathCycleFactor,
}

/// A spanning arc set: vertex-disjoint cycles covering every vertex, or one
/// path (possibly a single vertex) plus such cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningFactor {
    pub arcs: Vec<(usize, usize)>,
    pub kind: FactorKind,
    pub cost: usize,
}

/// Path and cycles of a factor, each as a vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorParts {
    pub path: Option<Vec<usize>>,
    pub cycles: Vec<Vec<usize>>,
}

impl SpanningFactor {
    /// Degree and arc-count conditions for `kind` on `n` vertices.
    pub fn satisfies_degree_invariants(&self, n: usize) -> bool {
        let mut outdeg = vec![0usize; n];
        let mut indeg = vec![0usize; n];
        for &(u, v) in &self.arcs {
            if u >= n || v >= n || u == v {
                return false;
            }
            outdeg[u] += 1;
            indeg[v] += 1;
        }
        match self.kind {
            FactorKind::CycleFactor => {
                self.arcs.len() == n && outdeg.iter().chain(&indeg).all(|&d| d == 1)
            }
            FactorKind::OnePathCycleFactor => {
                if n == 0 || self.arcs.len() != n - 1 {
                    return false;
                }
                outdeg.iter().chain(&indeg).all(|&d| d <= 1)
                    && outdeg.iter().filter(|&&d| d == 0).count() == 1
                    && indeg.iter().filter(|&&d| d == 0).count() == 1
                    // the path's ends, not a stray cycle, must carry the zeros
                    && self.parts(n).is_some()
            }
        }
    }

    /// Full validity against a host: invariants, arcs present, cost correct.
    pub fn is_valid_for(&self, host: &CostedDigraph) -> bool {
        self.satisfies_degree_invariants(host.n())
            && host.path_cost(self.arcs.iter().copied()) == Some(self.cost)
    }

    /// Splits the factor into its path and cycles. `None` when the arc set is
    /// not a factor of the stated kind.
    pub fn parts(&self, n: usize) -> Option<FactorParts> {
        let mut succ = vec![usize::MAX; n];
        let mut has_pred = vec![false; n];
        for &(u, v) in &self.arcs {
            if succ[u] != usize::MAX || has_pred[v] {
                return None;
            }
            succ[u] = v;
            has_pred[v] = true;
        }
        let mut seen = vec![false; n];
        let mut path = None;
        if self.kind == FactorKind::OnePathCycleFactor {
            let start = (0..n).find(|&v| !has_pred[v])?;
            let mut p = vec![start];
            seen[start] = true;
            let mut v = start;
            while succ[v] != usize::MAX {
                v = succ[v];
                if seen[v] {
                    return None;
                }
                seen[v] = true;
                p.push(v);
            }
            path = Some(p);
        }
        let mut cycles = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut v = succ[s];
            while v != s {
                if v == usize::MAX || seen[v] {
                    return None;
                }
                seen[v] = true;
                c.push(v);
                v = succ[v];
            }
            cycles.push(c);
        }
        Some(FactorParts { path, cycles })
    }
}

/// Vertex-split network over `h` with inverted costs. Every vertex carries
/// exactly one unit (`v_in -> v_out` with bounds `[1, 1]`). Returns the network
/// and the edge index of each host arc.
fn split_network(h: &CostedDigraph) -> (FlowNetwork, Vec<(usize, usize, usize)>) {
    let n = h.n();
    let mut net = FlowNetwork::new(2 * n);
    for v in 0..n {
        net.add_edge(2 * v, 2 * v + 1, 1, 1, 0);
    }
    let mut arc_edges = Vec::with_capacity(h.base.arc_count());
    for (u, v, c) in h.costed_arcs() {
        let e = net.add_edge(2 * u + 1, 2 * v, 0, 1, i64::from(1 - c));
        arc_edges.push((u, v, e));
    }
    (net, arc_edges)
}

fn solve(
    h: &CostedDigraph,
    net: &FlowNetwork,
    arc_edges: &[(usize, usize, usize)],
    kind: FactorKind,
) -> Option<SpanningFactor> {
    let sol = min_cost_flow(net)
        .expect("factor networks are well-formed")
        .optimal()?;
    let arcs: Vec<(usize, usize)> = arc_edges
        .iter()
        .filter(|&&(_, _, e)| sol.flow[e] == 1)
        .map(|&(u, v, _)| (u, v))
        .collect();
    let cost = h.path_cost(arcs.iter().copied()).expect("flow uses host arcs");
    // inverted cost of the chosen arcs is |arcs| - cost
    debug_assert_eq!(sol.cost as usize, arcs.len() - cost);
    let factor = SpanningFactor { arcs, kind, cost };
    debug_assert!(factor.is_valid_for(h));
    Some(factor)
}

/// Maximum-cost 1-path-cycle factor of `h`, or `None` if `h` has none.
///
/// Solved as a min-cost flow of value 1 from a new source `s` to a new sink `t`
/// (joined to every vertex by cost-0 arcs) on the cost-inverted, vertex-split
/// network; the unit through `s` and `t` traces the path, the rest circulates
/// around the cycles.
pub fn max_cost_one_path_cycle_factor(h: &CostedDigraph) -> Option<SpanningFactor> {
    let n = h.n();
    if n == 0 {
        return None;
    }
    let (mut net, arc_edges) = split_network(h);
    let s = net.add_node();
    let t = net.add_node();
    for v in 0..n {
        net.add_edge(s, 2 * v, 0, 1, 0);
        net.add_edge(2 * v + 1, t, 0, 1, 0);
    }
    net.set_demand(s, t, 1);
    solve(h, &net, &arc_edges, FactorKind::OnePathCycleFactor)
}

/// Maximum-cost cycle factor of `h`, or `None` if `h` has none. Solved as a
/// min-cost circulation on the cost-inverted, vertex-split network.
pub fn max_cost_cycle_factor(h: &CostedDigraph) -> Option<SpanningFactor> {
    if h.n() == 0 {
        return None;
    }
    let (net, arc_edges) = split_network(h);
    solve(h, &net, &arc_edges, FactorKind::CycleFactor)
}
