//! Dense-index digraph used by every algorithm in the crate.

use std::collections::VecDeque;

use crate::error::GraphError;

/// A simple digraph on vertices `0..n`.
///
/// Self-loops and parallel arcs are rejected. Both orientations of a pair may
/// be present (a digon). Adjacency lists are kept sorted so iteration order is
/// deterministic, and an `n × n` membership table gives O(1) arc queries.
#[derive(Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    arc_count: usize,
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n)
            .field("arcs", &self.arcs().collect::<Vec<_>>())
            .finish()
    }
}

impl Digraph {
    /// Edgeless digraph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Self {
            n,
            out: vec![Vec::new(); n],
            inn: vec![Vec::new(); n],
            matrix: vec![false; n * n],
            arc_count: 0,
        }
    }

    pub fn from_arcs<I>(n: usize, arcs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::new(n);
        for (u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    /// Builds a digraph from arcs known to be valid; duplicates are ignored.
    pub(crate) fn from_arcs_lossy<I>(n: usize, arcs: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Self::new(n);
        for (u, v) in arcs {
            if u != v && !d.has_arc(u, v) {
                d.insert_unchecked(u, v);
            }
        }
        d
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n || v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                vertex: u.max(v),
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.has_arc(u, v) {
            return Err(GraphError::DuplicateArc(u, v));
        }
        self.insert_unchecked(u, v);
        Ok(())
    }

    fn insert_unchecked(&mut self, u: usize, v: usize) {
        self.matrix[u * self.n + v] = true;
        let pos = self.out[u].partition_point(|&w| w < v);
        self.out[u].insert(pos, v);
        let pos = self.inn[v].partition_point(|&w| w < u);
        self.inn[v].insert(pos, u);
        self.arc_count += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arc_count
    }

    #[inline]
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.matrix[u * self.n + v]
    }

    /// True when at least one arc joins `u` and `v`.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().map(move |&v| (u, v)))
    }

    /// Vertices joined to `v` by an arc in either direction, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut all: Vec<usize> = self.out[v].iter().chain(&self.inn[v]).copied().collect();
        all.sort_unstable();
        all.dedup();
        all
    }

    /// Degree in the underlying multigraph: a digon contributes 2.
    pub fn multigraph_degree(&self, v: usize) -> usize {
        self.out[v].len() + self.inn[v].len()
    }

    /// Number of distinct neighbours of `v`.
    pub fn adjacency_degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| u != v && self.adjacent(u, v)).count()
    }

    /// Degree of `v` in the underlying simple graph (neighbour count).
    pub fn underlying_degree(&self, v: usize) -> usize {
        self.adjacency_degree(v)
    }

    pub fn is_oriented(&self) -> bool {
        self.arcs().all(|(u, v)| !self.has_arc(v, u))
    }

    /// Every pair of distinct vertices is adjacent.
    pub fn is_semicomplete(&self) -> bool {
        (0..self.n).all(|u| (u + 1..self.n).all(|v| self.adjacent(u, v)))
    }

    pub fn is_tournament(&self) -> bool {
        self.is_semicomplete() && self.is_oriented()
    }

    /// Same vertex set with every arc reversed.
    pub fn reversed(&self) -> Self {
        Self::from_arcs_lossy(self.n, self.arcs().map(|(u, v)| (v, u)))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabeled(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        Self::from_arcs_lossy(self.n, self.arcs().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Subdigraph induced by `vertices`; vertex `vertices[i]` becomes `i`.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let mut d = Self::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &self.out[u] {
                if index[v] != usize::MAX {
                    d.insert_unchecked(i, index[v]);
                }
            }
        }
        d
    }

    /// Connectivity of the underlying graph, ignoring `removed` vertices.
    pub fn is_connected_without(&self, removed: &[bool]) -> bool {
        let Some(start) = (0..self.n).find(|&v| !removed[v]) else {
            return true;
        };
        let mut seen = removed.to_vec();
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in self.out[u].iter().chain(&self.inn[u]) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        seen.iter().all(|&s| s)
    }

    /// `U(D)` connected. The empty digraph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.is_connected_without(&vec![false; self.n])
    }

    /// `U(D)` is 2-connected: at least three vertices, connected, no cut vertex.
    pub fn is_underlying_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        let mut removed = vec![false; self.n];
        for v in 0..self.n {
            removed[v] = true;
            let ok = self.is_connected_without(&removed);
            removed[v] = false;
            if !ok {
                return false;
            }
        }
        true
    }

    /// Vertices reachable from `start` along arcs, as a membership vector.
    pub fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &w in &self.out[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_strong(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.reachable_from(0).iter().all(|&s| s)
            && self.reversed().reachable_from(0).iter().all(|&s| s)
    }

    /// True when `vertices` (in order) is a directed path of this digraph.
    pub fn is_directed_path(&self, vertices: &[usize]) -> bool {
        distinct_in_range(vertices, self.n) && vertices.windows(2).all(|w| self.has_arc(w[0], w[1]))
    }

    /// True when `vertices` (in order, closing back to the first) is a directed cycle.
    pub fn is_directed_cycle(&self, vertices: &[usize]) -> bool {
        vertices.len() >= 2
            && self.is_directed_path(vertices)
            && self.has_arc(*vertices.last().unwrap(), vertices[0])
    }
}

pub(crate) fn distinct_in_range(vertices: &[usize], n: usize) -> bool {
    let mut seen = vec![false; n];
    vertices.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true))
}
