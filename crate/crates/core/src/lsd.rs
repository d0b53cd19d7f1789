//! Locally semicomplete digraphs: decomposition, Hamilton paths and cycles,
//! and the maximum-forward Hamilton oriented cycle.

use std::collections::VecDeque;

use crate::components::{strong_decomposition, StrongDecomposition};
use crate::error::LsdError;
use crate::graph::Digraph;
use crate::hamilton::hamilton_cycle;
use crate::walk::OrientedWalk;

/// Strong components of a connected LSD with the verified structural facts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsdDecomposition {
    pub decomposition: StrongDecomposition,
    /// Whether each component induces a semicomplete digraph.
    pub semicomplete: Vec<bool>,
    /// `dominating[i]`: every vertex of component `i` has an arc to every
    /// vertex of component `i + 1`.
    pub dominating: Vec<bool>,
}

impl LsdDecomposition {
    pub fn is_strong(&self) -> bool {
        self.decomposition.len() == 1
    }

    pub fn cn(&self, v: usize) -> usize {
        self.decomposition.component_of[v]
    }
}

/// Every out-neighbourhood and in-neighbourhood induces a semicomplete digraph.
pub fn is_locally_semicomplete(d: &Digraph) -> bool {
    let pairwise_adjacent = |s: &[usize]| {
        s.iter()
            .enumerate()
            .all(|(i, &u)| s[i + 1..].iter().all(|&w| d.adjacent(u, w)))
    };
    (0..d.n()).all(|v| pairwise_adjacent(d.out_neighbors(v)) && pairwise_adjacent(d.in_neighbors(v)))
}

fn check_input(d: &Digraph) -> Result<(), LsdError> {
    if !d.is_connected() {
        return Err(LsdError::Disconnected);
    }
    if !is_locally_semicomplete(d) {
        return Err(LsdError::NotLocallySemicomplete);
    }
    Ok(())
}

/// Strong components in their acyclic order, with consecutive domination and
/// per-component semicompleteness checked when there is more than one.
pub fn lsd_decomposition(d: &Digraph) -> Result<LsdDecomposition, LsdError> {
    check_input(d)?;
    let decomposition = strong_decomposition(d);
    let comps = &decomposition.components;
    let semicomplete: Vec<bool> = comps.iter().map(|c| d.induced(c).is_semicomplete()).collect();
    let dominating: Vec<bool> = comps
        .windows(2)
        .map(|w| w[0].iter().all(|&u| w[1].iter().all(|&v| d.has_arc(u, v))))
        .collect();
    if comps.len() > 1 {
        if let Some(i) = semicomplete.iter().position(|&s| !s) {
            return Err(LsdError::Verification(format!("component {i} is not semicomplete")));
        }
        if let Some(i) = dominating.iter().position(|&s| !s) {
            return Err(LsdError::Verification(format!(
                "component {i} does not dominate component {}",
                i + 1
            )));
        }
    }
    Ok(LsdDecomposition {
        decomposition,
        semicomplete,
        dominating,
    })
}

/// Shortest cycle through `start` in a strong digraph.
fn shortest_cycle_through(d: &Digraph, start: usize) -> Option<Vec<usize>> {
    let n = d.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        if u != start && d.has_arc(u, start) {
            let mut c = vec![u];
            let mut v = u;
            while parent[v] != usize::MAX {
                v = parent[v];
                c.push(v);
            }
            c.reverse();
            return Some(c);
        }
        for &w in d.out_neighbors(u) {
            if w == start && u != start {
                continue;
            }
            if !seen[w] {
                seen[w] = true;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Some path `c_i -> x_1 -> ... -> x_r -> c_{i+1}` through vertices off the
/// cycle; returns `(i, [x_1..x_r])`.
fn insertion_path(d: &Digraph, cycle: &[usize], on: &[bool]) -> Option<(usize, Vec<usize>)> {
    let n = d.n();
    let k = cycle.len();
    for i in 0..k {
        let (a, b) = (cycle[i], cycle[(i + 1) % k]);
        let mut parent = vec![usize::MAX; n];
        let mut seen = on.to_vec();
        let mut queue = VecDeque::new();
        for &w in d.out_neighbors(a) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
        while let Some(u) = queue.pop_front() {
            if d.has_arc(u, b) {
                let mut p = vec![u];
                let mut v = u;
                while parent[v] != usize::MAX {
                    v = parent[v];
                    p.push(v);
                }
                p.reverse();
                return Some((i, p));
            }
            for &w in d.out_neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    queue.push_back(w);
                }
            }
        }
    }
    None
}

/// Hamilton directed cycle of a strong LSD.
///
/// Grows a cycle by splicing in outside paths between consecutive cycle
/// vertices; if no splice applies before the cycle spans, an exact search is
/// run instead. The result is verified either way.
pub fn hamilton_cycle_strong_lsd(d: &Digraph) -> Result<Vec<usize>, LsdError> {
    let n = d.n();
    if n < 2 {
        return Err(LsdError::TooSmall { n, min: 2 });
    }
    if !is_locally_semicomplete(d) {
        return Err(LsdError::NotLocallySemicomplete);
    }
    if !d.is_strong() {
        return Err(LsdError::NotStrong);
    }
    let mut cycle = shortest_cycle_through(d, 0).expect("strong digraph on >= 2 vertices");
    let mut on = vec![false; n];
    cycle.iter().for_each(|&v| on[v] = true);
    while cycle.len() < n {
        match insertion_path(d, &cycle, &on) {
            Some((i, p)) => {
                p.iter().for_each(|&v| on[v] = true);
                cycle.splice(i + 1..i + 1, p);
            }
            None => {
                cycle = hamilton_cycle(d)
                    .ok_or_else(|| LsdError::Internal("strong LSD without a Hamilton cycle".into()))?;
                break;
            }
        }
    }
    if cycle.len() != n || !d.is_directed_cycle(&cycle) {
        return Err(LsdError::Internal("assembled cycle failed verification".into()));
    }
    Ok(cycle)
}

/// Hamilton path through one component: a Hamilton cycle cut open, rotated
/// so it starts at `start` (or ends at `end`) when requested.
fn component_path(d: &Digraph, comp: &[usize], start: Option<usize>, end: Option<usize>) -> Result<Vec<usize>, LsdError> {
    if comp.len() == 1 {
        return Ok(comp.to_vec());
    }
    let sub = d.induced(comp);
    let mut c: Vec<usize> = hamilton_cycle_strong_lsd(&sub)?.into_iter().map(|i| comp[i]).collect();
    if let Some(s) = start {
        let i = c.iter().position(|&v| v == s).expect("start lies in the component");
        c.rotate_left(i);
    } else if let Some(e) = end {
        let i = c.iter().position(|&v| v == e).expect("end lies in the component");
        let k = c.len();
        c.rotate_left((i + 1) % k);
    }
    Ok(c)
}

fn path_through_components(
    d: &Digraph,
    decomp: &StrongDecomposition,
    start: Option<usize>,
    end: Option<usize>,
) -> Result<Vec<usize>, LsdError> {
    let l = decomp.len();
    let mut path = Vec::with_capacity(d.n());
    for (i, comp) in decomp.components.iter().enumerate() {
        let s = if i == 0 { start } else { None };
        let e = if i == l - 1 { end } else { None };
        if l == 1 && s.is_some() && e.is_some() {
            return Err(LsdError::Internal("both ends fixed in a single component".into()));
        }
        path.extend(component_path(d, comp, s, e)?);
    }
    Ok(path)
}

/// Hamilton directed path of a connected LSD.
pub fn hamilton_path_connected_lsd(d: &Digraph) -> Result<Vec<usize>, LsdError> {
    if d.n() == 0 {
        return Err(LsdError::TooSmall { n: 0, min: 1 });
    }
    let dec = lsd_decomposition(d)?;
    let path = path_through_components(d, &dec.decomposition, None, None)?;
    if !d.is_directed_path(&path) || path.len() != d.n() {
        return Err(LsdError::Internal("assembled path failed verification".into()));
    }
    Ok(path)
}

/// Length of a shortest path from the first to the last strong component.
pub fn c1_cl_distance(d: &Digraph, decomp: &StrongDecomposition) -> Option<usize> {
    let n = d.n();
    let last = decomp.len() - 1;
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for &v in decomp.first() {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        if decomp.component_of[u] == last {
            return Some(dist[u]);
        }
        for &w in d.out_neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    None
}

/// Greedy shortest `(C_1, C_l)`-path: start at the smallest vertex of `C_1`
/// and always step to an out-neighbour of largest component index (smallest
/// id on ties). Its length is checked against a breadth-first search.
pub fn shortest_c1_cl_path_greedy(d: &Digraph, decomp: &LsdDecomposition) -> Result<Vec<usize>, LsdError> {
    let sd = &decomp.decomposition;
    if sd.len() < 2 {
        return Err(LsdError::Strong);
    }
    let last = sd.len() - 1;
    let mut p = vec![sd.first()[0]];
    let mut cur = p[0];
    while sd.component_of[cur] != last {
        let next = d
            .out_neighbors(cur)
            .iter()
            .copied()
            .max_by_key(|&w| (sd.component_of[w], std::cmp::Reverse(w)))
            .ok_or_else(|| LsdError::Internal("greedy walk stuck".into()))?;
        if sd.component_of[next] <= sd.component_of[cur] {
            return Err(LsdError::Internal("greedy walk did not advance".into()));
        }
        p.push(next);
        cur = next;
    }
    let bfs = c1_cl_distance(d, sd).ok_or_else(|| LsdError::Internal("last component unreachable".into()))?;
    if p.len() - 1 != bfs {
        return Err(LsdError::Internal(format!(
            "greedy path has length {}, shortest is {bfs}",
            p.len() - 1
        )));
    }
    Ok(p)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LsdOptimum {
    pub sigma: usize,
    pub walk: OrientedWalk,
    /// `d(C_1, C_l)` for non-strong inputs.
    pub distance: Option<usize>,
    pub strong: bool,
}

/// Maximum `sigma_max` over Hamilton oriented cycles of a connected LSD on at
/// least 3 vertices. `Ok(None)` when the digraph is not strong and its
/// underlying graph is not 2-connected (then no Hamilton oriented cycle exists).
pub fn max_forward_hamilton_cycle_lsd(d: &Digraph) -> Result<Option<LsdOptimum>, LsdError> {
    let n = d.n();
    if n < 3 {
        return Err(LsdError::TooSmall { n, min: 3 });
    }
    let dec = lsd_decomposition(d)?;
    if dec.is_strong() {
        let cycle = hamilton_cycle_strong_lsd(d)?;
        let walk = OrientedWalk::from_vertices(d, cycle, true)?;
        return Ok(Some(LsdOptimum {
            sigma: n,
            walk,
            distance: None,
            strong: true,
        }));
    }
    if !d.is_underlying_two_connected() {
        return Ok(None);
    }
    let p = shortest_c1_cl_path_greedy(d, &dec)?;
    let q = p.len();
    let dist = q - 1;
    let mut removed = vec![false; n];
    p[1..q - 1].iter().for_each(|&v| removed[v] = true);
    if !d.is_connected_without(&removed) {
        return Err(LsdError::Internal("removing the path interior disconnects the digraph".into()));
    }
    let keep: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    let sub = d.induced(&keep);
    let mut index = vec![usize::MAX; n];
    keep.iter().enumerate().for_each(|(i, &v)| index[v] = i);
    let sub_dec = lsd_decomposition(&sub)?;
    let sd = &sub_dec.decomposition;
    if sd.component_of[index[p[0]]] != 0 || sd.component_of[index[p[q - 1]]] != sd.len() - 1 {
        return Err(LsdError::Internal("path ends are not in the end components".into()));
    }
    let local = path_through_components(&sub, sd, Some(index[p[0]]), Some(index[p[q - 1]]))?;
    let mut vertices: Vec<usize> = local.into_iter().map(|i| keep[i]).collect();
    vertices.extend(p[1..q - 1].iter().rev());
    let walk = OrientedWalk::from_vertices(d, vertices, true)?;
    let stats = walk.sigma_stats();
    if stats.backward != dist || stats.max != n - dist {
        return Err(LsdError::Internal(format!(
            "witness has {} backward arcs, expected {dist}",
            stats.backward
        )));
    }
    Ok(Some(LsdOptimum {
        sigma: n - dist,
        walk,
        distance: Some(dist),
        strong: false,
    }))
}

/// `sigma^+(walk) >= d(C_1, C_l)` for an oriented path from the first strong
/// component to the last one.
pub fn forward_lower_bound_check(d: &Digraph, decomp: &LsdDecomposition, walk: &OrientedWalk) -> Result<bool, LsdError> {
    let sd = &decomp.decomposition;
    if sd.len() < 2 {
        return Err(LsdError::Strong);
    }
    walk.validate(d)?;
    let v = walk.vertices();
    if walk.is_closed()
        || v.is_empty()
        || sd.component_of[v[0]] != 0
        || sd.component_of[v[v.len() - 1]] != sd.len() - 1
    {
        return Err(LsdError::NotComponentPath);
    }
    let dist = c1_cl_distance(d, sd).ok_or_else(|| LsdError::Internal("last component unreachable".into()))?;
    Ok(walk.sigma_stats().forward >= dist)
}
