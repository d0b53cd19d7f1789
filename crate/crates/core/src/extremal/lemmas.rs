//! Constructive versions of the two local-surgery lemmas: inserting a few
//! vertices into an oriented path without losing forward arcs, and swapping
//! two vertices on a Hamilton cycle of a tournament.

use crate::error::ExtremalError;
use crate::graph::{distinct_in_range, Digraph};
use crate::walk::{Direction, OrientedWalk};

fn precondition(msg: impl Into<String>) -> ExtremalError {
    ExtremalError::Precondition(msg.into())
}

/// Inserts every vertex of `s` into the open walk `p` so that each lands
/// between its own consecutive pair and `σ⁺` does not drop.
///
/// Requires `|V(P)| >= |S| + 2`, `S` disjoint from `P`, and every vertex of
/// `S` adjacent to every vertex of `P`. The endpoints of `p` are kept.
pub fn insert_vertices_preserving_sigma(
    d: &Digraph,
    p: &OrientedWalk,
    s: &[usize],
) -> Result<OrientedWalk, ExtremalError> {
    check_insert_preconditions(d, p, s)?;
    if s.is_empty() {
        return Ok(p.clone());
    }
    let u = p.vertices();
    let k = s.len();
    let mut order = insert_into_prefix(d, &u[..k + 2], s);
    order.extend_from_slice(&u[k + 2..]);
    let walk = OrientedWalk::from_vertices(d, order, false)
        .map_err(|e| ExtremalError::SearchExhausted(format!("insertion produced an invalid walk: {e}")))?;
    if walk.sigma_stats().forward < p.sigma_stats().forward {
        return Err(ExtremalError::SearchExhausted("insertion lost forward arcs".into()));
    }
    Ok(walk)
}

/// The same insertion, keeping `σ⁻` instead: run on the reversed walk and
/// reverse the result.
pub fn insert_vertices_preserving_sigma_minus(
    d: &Digraph,
    p: &OrientedWalk,
    s: &[usize],
) -> Result<OrientedWalk, ExtremalError> {
    let r = insert_vertices_preserving_sigma(d, &p.reversed(), s)?;
    let out = r.reversed();
    debug_assert!(out.sigma_stats().backward >= p.sigma_stats().backward);
    Ok(out)
}

fn check_insert_preconditions(d: &Digraph, p: &OrientedWalk, s: &[usize]) -> Result<(), ExtremalError> {
    if p.is_closed() {
        return Err(precondition("walk must be an open path"));
    }
    p.validate(d).map_err(|e| precondition(format!("walk invalid: {e}")))?;
    if p.len() < s.len() + 2 {
        return Err(precondition(format!(
            "path has {} vertices, need at least {}",
            p.len(),
            s.len() + 2
        )));
    }
    if !distinct_in_range(s, d.n()) {
        return Err(precondition("inserted vertices must be distinct and in range"));
    }
    for &v in s {
        if p.vertices().contains(&v) {
            return Err(precondition(format!("vertex {v} already on the path")));
        }
        if let Some(&u) = p.vertices().iter().find(|&&u| !d.adjacent(u, v)) {
            return Err(precondition(format!("vertex {v} not adjacent to path vertex {u}")));
        }
    }
    Ok(())
}

// `u` has exactly `s.len() + 2` vertices.
fn insert_into_prefix(d: &Digraph, u: &[usize], s: &[usize]) -> Vec<usize> {
    let k = s.len();
    if k == 0 {
        return u.to_vec();
    }
    // Largest 1-based j in [2, k+1] with an arc from u_j into S.
    let hit = (2..=k + 1)
        .rev()
        .find_map(|j| s.iter().position(|&v| d.has_arc(u[j - 1], v)).map(|i| (j, i)));
    let Some((j, i0)) = hit else {
        // every v_i -> u_j: interleave v_i between u_i and u_{i+1}
        let mut out = Vec::with_capacity(2 * k + 2);
        for i in 0..k {
            out.push(u[i]);
            out.push(s[i]);
        }
        out.extend_from_slice(&u[k..]);
        return out;
    };
    let rest: Vec<usize> = s.iter().enumerate().filter(|&(i, _)| i != i0).map(|(_, &v)| v).collect();
    let (inner, outer) = rest.split_at(j - 2);
    let mut out = insert_into_prefix(d, &u[..j], inner);
    out.push(s[i0]);
    // one leftover vertex per remaining gap u_t u_{t+1}, t = j+1..=k+1
    for (t, &v) in (j + 1..=k + 1).zip(outer) {
        out.push(u[t - 1]);
        out.push(v);
    }
    out.push(u[k + 1]);
    out
}

/// Exchanges the vertices at positions `i` and `j` of a Hamilton cycle of a
/// tournament. Directions are re-read from `d`.
pub fn swap_vertices_tournament_cycle(
    d: &Digraph,
    c: &OrientedWalk,
    i: usize,
    j: usize,
) -> Result<OrientedWalk, ExtremalError> {
    if !d.is_tournament() {
        return Err(precondition("digraph must be a tournament"));
    }
    if !c.is_closed() || !c.is_spanning(d) {
        return Err(precondition("walk must be a Hamilton oriented cycle"));
    }
    c.validate(d).map_err(|e| precondition(format!("cycle invalid: {e}")))?;
    let n = c.len();
    if i == j || i >= n || j >= n {
        return Err(precondition(format!("positions must be distinct and below {n}")));
    }
    let mut order = c.vertices().to_vec();
    order.swap(i, j);
    OrientedWalk::from_vertices_preferring(d, order, true, Direction::Forward)
        .map_err(|e| ExtremalError::SearchExhausted(format!("swap produced an invalid cycle: {e}")))
}
