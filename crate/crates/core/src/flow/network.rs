//! Integral min-cost flow with lower bounds.
//!
//! Lower bounds are shifted into node balances and served from a super source
//! and super sink; the resulting instance is solved by successive shortest
//! augmenting paths (Dijkstra on reduced costs with node potentials).

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::FlowError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowEdge {
    pub from: usize,
    pub to: usize,
    pub lower: i64,
    pub capacity: i64,
    pub cost: i64,
}

/// Directed network with per-edge `[lower, capacity]` bounds and unit costs,
/// plus an optional `(source, sink, value)` flow requirement. Without one the
/// network is solved as a circulation.
#[derive(Debug, Clone, Default)]
pub struct FlowNetwork {
    nodes: usize,
    edges: Vec<FlowEdge>,
    demand: Option<(usize, usize, i64)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowSolution {
    /// Flow on each edge, indexed like [`FlowNetwork::edges`].
    pub flow: Vec<i64>,
    pub cost: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowOutcome {
    Optimal(FlowSolution),
    Infeasible,
}

impl FlowOutcome {
    pub fn optimal(self) -> Option<FlowSolution> {
        match self {
            FlowOutcome::Optimal(s) => Some(s),
            FlowOutcome::Infeasible => None,
        }
    }
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            nodes,
            edges: Vec::new(),
            demand: None,
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.nodes += 1;
        self.nodes - 1
    }

    pub fn add_edge(&mut self, from: usize, to: usize, lower: i64, capacity: i64, cost: i64) -> usize {
        self.edges.push(FlowEdge {
            from,
            to,
            lower,
            capacity,
            cost,
        });
        self.edges.len() - 1
    }

    /// Requires exactly `value` units to leave `source` and reach `sink`.
    pub fn set_demand(&mut self, source: usize, sink: usize, value: i64) {
        self.demand = Some((source, sink, value));
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[FlowEdge] {
        &self.edges
    }

    fn check(&self) -> Result<(), FlowError> {
        for (i, e) in self.edges.iter().enumerate() {
            if e.from >= self.nodes || e.to >= self.nodes {
                return Err(FlowError::NodeOutOfRange(i));
            }
            if e.lower > e.capacity || e.lower < 0 {
                return Err(FlowError::LowerExceedsCapacity(i));
            }
            if e.cost < 0 {
                return Err(FlowError::NegativeCost(i));
            }
        }
        if let Some((s, t, v)) = self.demand {
            if s >= self.nodes || t >= self.nodes || v < 0 || (s == t && v > 0) {
                return Err(FlowError::BadTerminals);
            }
        }
        Ok(())
    }
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(nodes: usize) -> Self {
        Self {
            head: Vec::new(),
            cap: Vec::new(),
            cost: Vec::new(),
            adj: vec![Vec::new(); nodes],
        }
    }

    /// Adds the forward arc (even index) and its reverse (odd index).
    fn push(&mut self, from: usize, to: usize, cap: i64, cost: i64) -> usize {
        let id = self.head.len();
        self.head.push(to);
        self.cap.push(cap);
        self.cost.push(cost);
        self.adj[from].push(id);
        self.head.push(from);
        self.cap.push(0);
        self.cost.push(-cost);
        self.adj[to].push(id + 1);
        id
    }
}

/// Minimum-cost feasible flow. Absence of a feasible flow is reported as
/// [`FlowOutcome::Infeasible`]; malformed networks are errors.
pub fn min_cost_flow(net: &FlowNetwork) -> Result<FlowOutcome, FlowError> {
    net.check()?;
    let n = net.nodes;
    let (src, snk) = (n, n + 1);
    let mut res = Residual::new(n + 2);
    let mut balance = vec![0i64; n];
    let mut base_cost = 0i64;
    let mut ids = Vec::with_capacity(net.edges.len());
    for e in &net.edges {
        ids.push(res.push(e.from, e.to, e.capacity - e.lower, e.cost));
        balance[e.to] += e.lower;
        balance[e.from] -= e.lower;
        base_cost += e.lower * e.cost;
    }
    if let Some((s, t, v)) = net.demand {
        balance[s] += v;
        balance[t] -= v;
    }
    // balance > 0: surplus that must be pushed out; < 0: deficit to be filled
    let mut required = 0i64;
    for (v, &b) in balance.iter().enumerate() {
        if b > 0 {
            res.push(src, v, b, 0);
            required += b;
        } else if b < 0 {
            res.push(v, snk, -b, 0);
        }
    }

    let total = n + 2;
    let mut potential = vec![0i64; total];
    let mut sent = 0i64;
    let mut cost = 0i64;
    let mut dist = vec![i64::MAX; total];
    let mut via = vec![usize::MAX; total];
    while sent < required {
        dist.iter_mut().for_each(|d| *d = i64::MAX);
        via.iter_mut().for_each(|p| *p = usize::MAX);
        dist[src] = 0;
        let mut heap = BinaryHeap::new();
        heap.push(Reverse((0i64, src)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &a in &res.adj[u] {
                if res.cap[a] == 0 {
                    continue;
                }
                let w = res.head[a];
                let nd = d + res.cost[a] + potential[u] - potential[w];
                if nd < dist[w] {
                    dist[w] = nd;
                    via[w] = a;
                    heap.push(Reverse((nd, w)));
                }
            }
        }
        if dist[snk] == i64::MAX {
            return Ok(FlowOutcome::Infeasible);
        }
        for v in 0..total {
            if dist[v] != i64::MAX {
                potential[v] += dist[v];
            }
        }
        let mut push = required - sent;
        let mut v = snk;
        while v != src {
            let a = via[v];
            push = push.min(res.cap[a]);
            v = res.head[a ^ 1];
        }
        let mut v = snk;
        while v != src {
            let a = via[v];
            res.cap[a] -= push;
            res.cap[a ^ 1] += push;
            cost += push * res.cost[a];
            v = res.head[a ^ 1];
        }
        sent += push;
    }

    let flow = net
        .edges
        .iter()
        .zip(&ids)
        .map(|(e, &id)| e.lower + res.cap[id ^ 1])
        .collect();
    Ok(FlowOutcome::Optimal(FlowSolution {
        flow,
        cost: cost + base_cost,
    }))
}
