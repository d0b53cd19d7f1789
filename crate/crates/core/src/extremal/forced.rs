//! Hamilton cycles of an undirected graph through a prescribed path forest.
//!
//! Start from a cycle of `K_n` that strings the forced paths together, then
//! remove the non-edges it uses one at a time, last added first. Removing a
//! non-edge `v_1 v_n` from the graph `H` it belongs to leaves a Hamilton path
//! `v_1 .. v_n` of `H - v_1v_n`; the degree-sum condition gives an index `i`
//! with `v_1 v_i` and `v_n v_{i-1}` present and `v_{i-1} v_i` not forced, and
//! `v_1 v_i .. v_n v_{i-1} .. v_2` closes it again.

use crate::error::ExtremalError;
use crate::graph::Digraph;

/// Simple undirected graph on `0..n` with an adjacency matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    n: usize,
    adj: Vec<bool>,
}

impl UndirectedGraph {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            adj: vec![false; n * n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, ExtremalError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n || u == v {
                return Err(ExtremalError::Parameter(format!("bad edge ({u}, {v})")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// The underlying simple graph `U(D)`.
    pub fn underlying(d: &Digraph) -> Self {
        let mut g = Self::new(d.n());
        for (u, v) in d.arcs() {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u * self.n + v] = true;
        self.adj[v * self.n + u] = true;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> usize {
        (0..self.n).filter(|&u| self.has_edge(u, v)).count()
    }

    /// `min d(u) + d(v) - n` over non-adjacent pairs, `n - 2` if complete.
    pub fn s_star(&self) -> i64 {
        let deg: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let mut best: Option<i64> = None;
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    let s = (deg[u] + deg[v]) as i64 - self.n as i64;
                    best = Some(best.map_or(s, |b| b.min(s)));
                }
            }
        }
        best.unwrap_or(self.n as i64 - 2)
    }

    /// True when `cycle` visits every vertex once and all its edges exist.
    pub fn is_hamilton_cycle(&self, cycle: &[usize]) -> bool {
        let n = self.n;
        if cycle.len() != n || n < 3 {
            return false;
        }
        let mut seen = vec![false; n];
        if !cycle.iter().all(|&v| v < n && !std::mem::replace(&mut seen[v], true)) {
            return false;
        }
        (0..n).all(|i| self.has_edge(cycle[i], cycle[(i + 1) % n]))
    }
}

/// Every edge of `forced` lies on the closed vertex sequence `cycle`.
pub fn cycle_contains_edges(cycle: &[usize], forced: &[(usize, usize)]) -> bool {
    let n = cycle.len();
    let mut pos = vec![usize::MAX; cycle.iter().copied().max().map_or(0, |m| m + 1)];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    forced.iter().all(|&(u, v)| {
        let (Some(&i), Some(&j)) = (pos.get(u), pos.get(v)) else {
            return false;
        };
        i != usize::MAX && j != usize::MAX && ((i + 1) % n == j || (j + 1) % n == i)
    })
}

/// Orders the edges of a path forest into vertex-disjoint paths; `None` if
/// some vertex has degree above two, an edge repeats, or there is a cycle.
fn forest_paths(n: usize, forced: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in forced {
        if u >= n || v >= n || u == v || nbrs[u].contains(&v) {
            return None;
        }
        nbrs[u].push(v);
        nbrs[v].push(u);
    }
    if nbrs.iter().any(|x| x.len() > 2) {
        return None;
    }
    let mut seen = vec![false; n];
    let mut paths = Vec::new();
    for start in 0..n {
        if seen[start] || nbrs[start].len() == 2 {
            continue;
        }
        let mut path = vec![start];
        seen[start] = true;
        let mut prev = usize::MAX;
        let mut cur = start;
        while let Some(&next) = nbrs[cur].iter().find(|&&w| w != prev) {
            seen[next] = true;
            path.push(next);
            prev = cur;
            cur = next;
        }
        paths.push(path);
    }
    // anything left sits on a cycle
    seen.iter().all(|&s| s).then_some(paths)
}

/// A Hamilton cycle of `g` using every edge of `forced`.
///
/// Requires `s*(g) >= 0`, `forced` a path forest of edges of `g`, and
/// `|forced| <= s*(g)`.
pub fn hamilton_cycle_with_forced_edges(
    g: &UndirectedGraph,
    forced: &[(usize, usize)],
) -> Result<Vec<usize>, ExtremalError> {
    let n = g.n();
    if n < 3 {
        return Err(ExtremalError::Precondition(format!("need n >= 3, got {n}")));
    }
    let s_star = g.s_star();
    if s_star < 0 {
        return Err(ExtremalError::Precondition(format!("s* = {s_star} < 0")));
    }
    if forced.len() as i64 > s_star {
        return Err(ExtremalError::Precondition(format!(
            "{} forced edges exceed s* = {s_star}",
            forced.len()
        )));
    }
    if let Some(&(u, v)) = forced.iter().find(|&&(u, v)| u >= n || v >= n || !g.has_edge(u, v)) {
        return Err(ExtremalError::Precondition(format!("forced pair ({u}, {v}) is not an edge")));
    }
    let paths = forest_paths(n, forced)
        .ok_or_else(|| ExtremalError::Precondition("forced edges are not a path forest".into()))?;

    let mut is_forced = vec![false; n * n];
    for &(u, v) in forced {
        is_forced[u * n + v] = true;
        is_forced[v * n + u] = true;
    }
    let mut cycle: Vec<usize> = paths.into_iter().flatten().collect();

    // H_j = g plus the first j missing edges; the cycle lives in H_m = K_n.
    let missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    let mut h = UndirectedGraph::complete(n);
    let mut pos = vec![0; n];
    for &(x, y) in missing.iter().rev() {
        h.adj[x * n + y] = false;
        h.adj[y * n + x] = false;
        for (i, &v) in cycle.iter().enumerate() {
            pos[v] = i;
        }
        let (px, py) = (pos[x], pos[y]);
        let uses = (px + 1) % n == py || (py + 1) % n == px;
        if !uses {
            continue;
        }
        // rotate so the path runs v_1 = x .. v_n = y without the edge xy
        let path: Vec<usize> = if (py + 1) % n == px {
            (0..n).map(|t| cycle[(px + t) % n]).collect()
        } else {
            (0..n).map(|t| cycle[(px + n - t) % n]).collect()
        };
        debug_assert_eq!((path[0], path[n - 1]), (x, y));
        let i = (2..n - 1)
            .find(|&i| {
                // 0-based: v_1 = path[0], v_i = path[i], v_{i-1} = path[i-1]
                !is_forced[path[i - 1] * n + path[i]]
                    && h.has_edge(path[0], path[i])
                    && h.has_edge(path[n - 1], path[i - 1])
            })
            .ok_or_else(|| {
                ExtremalError::SearchExhausted(format!("no crossing pair to close around ({x}, {y})"))
            })?;
        let mut next = Vec::with_capacity(n);
        next.push(path[0]);
        next.extend_from_slice(&path[i..]);
        next.extend(path[1..i].iter().rev());
        cycle = next;
    }
    if !g.is_hamilton_cycle(&cycle) || !cycle_contains_edges(&cycle, forced) {
        return Err(ExtremalError::SearchExhausted("rotation left an invalid cycle".into()));
    }
    Ok(cycle)
}

/// Exhaustive variant without the degree-sum precondition, for small `n`.
pub fn hamilton_cycle_with_forced_edges_exact(
    g: &UndirectedGraph,
    forced: &[(usize, usize)],
) -> Result<Option<Vec<usize>>, ExtremalError> {
    const BOUND: usize = 12;
    let n = g.n();
    if n > BOUND {
        return Err(ExtremalError::SizeBound { n, bound: BOUND });
    }
    if n < 3 {
        return Ok(None);
    }
    fn dfs(
        g: &UndirectedGraph,
        forced: &[(usize, usize)],
        path: &mut Vec<usize>,
        seen: &mut [bool],
    ) -> bool {
        let n = g.n();
        let u = *path.last().unwrap();
        if path.len() == n {
            return g.has_edge(u, path[0]) && cycle_contains_edges(path, forced);
        }
        for v in 0..n {
            if !seen[v] && g.has_edge(u, v) {
                seen[v] = true;
                path.push(v);
                if dfs(g, forced, path, seen) {
                    return true;
                }
                path.pop();
                seen[v] = false;
            }
        }
        false
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut path = vec![0];
    Ok(dfs(g, forced, &mut path, &mut seen).then_some(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn four_cycle_with_opposite_edges() {
        let g = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let forced = [(0, 1), (2, 3)];
        assert_eq!(g.s_star(), 0);
        // two forced edges exceed s* = 0
        assert!(hamilton_cycle_with_forced_edges(&g, &forced).is_err());
        let c = hamilton_cycle_with_forced_edges(&g, &[]).unwrap();
        assert!(g.is_hamilton_cycle(&c));
        let c = hamilton_cycle_with_forced_edges_exact(&g, &forced).unwrap().unwrap();
        assert_eq!(c, vec![0, 1, 2, 3]);
    }

    #[test]
    fn complete_graph_with_path() {
        let g = UndirectedGraph::complete(5);
        let forced = [(0, 3), (3, 1)];
        let c = hamilton_cycle_with_forced_edges(&g, &forced).unwrap();
        assert!(g.is_hamilton_cycle(&c) && cycle_contains_edges(&c, &forced));
    }

    #[test]
    fn rejects_non_forest() {
        let g = UndirectedGraph::complete(6);
        assert!(hamilton_cycle_with_forced_edges(&g, &[(0, 1), (1, 2), (2, 0)]).is_err());
        assert!(hamilton_cycle_with_forced_edges(&g, &[(0, 1), (0, 2), (0, 3)]).is_err());
    }
}
