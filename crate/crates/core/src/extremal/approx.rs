//! Hamilton oriented cycles with many forward arcs under `s*(D) >= 8k`.
//!
//! Find `k` disjoint good diamonds, force their `c..d` paths into a Hamilton
//! cycle of `U(D)`, pick the traversal direction that wins on the arcs
//! outside the diamonds, then reroute each diamond so its three arcs carry
//! at least two forward ones.

use crate::error::ExtremalError;
use crate::graph::Digraph;
use crate::walk::OrientedWalk;

use super::conditions::condition_report;
use super::diamonds::{find_good_diamonds, DiamondSet};
use super::forced::{hamilton_cycle_with_forced_edges, UndirectedGraph};

#[derive(Debug, Clone)]
pub struct ApproxOutcome {
    pub cycle: OrientedWalk,
    pub diamonds: DiamondSet,
    /// `⌈(n + k) / 2⌉`.
    pub target: usize,
}

pub fn approx_discrepancy_cycle(d: &Digraph, k: usize) -> Result<ApproxOutcome, ExtremalError> {
    let n = d.n();
    if !d.is_oriented() {
        return Err(ExtremalError::Precondition("digraph must be oriented".into()));
    }
    if n + 4 < 30 + 4 * k {
        return Err(ExtremalError::Precondition(format!(
            "need n >= {}, got {n}",
            30 + 4 * k - 4
        )));
    }
    let s_star = condition_report(d).s_star;
    if s_star < 8 * k as i64 {
        return Err(ExtremalError::Precondition(format!("s* = {s_star} below {}", 8 * k)));
    }

    let diamonds = find_good_diamonds(d, k)
        .ok_or_else(|| ExtremalError::SearchExhausted(format!("no {k} disjoint good diamonds")))?;
    let forced: Vec<(usize, usize)> = diamonds
        .members
        .iter()
        .flat_map(|m| m.p.steps().collect::<Vec<_>>())
        .collect();
    let g = UndirectedGraph::underlying(d);
    let mut order = hamilton_cycle_with_forced_edges(&g, &forced)?;

    // each diamond occupies a block c x y d (or reversed) of the cycle
    let mut in_diamond = vec![usize::MAX; n];
    for (idx, m) in diamonds.members.iter().enumerate() {
        for v in m.vertices() {
            in_diamond[v] = idx;
        }
    }
    let outside_forward = (0..n)
        .filter(|&i| {
            let (u, v) = (order[i], order[(i + 1) % n]);
            !(in_diamond[u] != usize::MAX && in_diamond[u] == in_diamond[v]) && d.has_arc(u, v)
        })
        .count();
    let outside = n - 3 * k;
    if 2 * outside_forward < outside {
        order.reverse();
    }
    for m in &diamonds.members {
        let i = order.iter().position(|&v| v == m.c).expect("diamond vertex on cycle");
        // the forced block c x y d runs one way or the other from c
        let (base, path) = if order[(i + 3) % n] == m.d {
            (i, m.p.vertices())
        } else if order[(i + n - 3) % n] == m.d {
            (i + n - 3, m.q.vertices())
        } else {
            return Err(ExtremalError::SearchExhausted("diamond path not contiguous on cycle".into()));
        };
        for (t, &v) in path.iter().enumerate() {
            order[(base + t) % n] = v;
        }
    }

    let cycle = OrientedWalk::from_vertices(d, order, true)
        .map_err(|e| ExtremalError::SearchExhausted(format!("assembled cycle invalid: {e}")))?;
    let target = (n + k).div_ceil(2);
    if !cycle.is_spanning(d) || cycle.sigma_stats().forward < target {
        return Err(ExtremalError::SearchExhausted(format!(
            "cycle has {} forward arcs, target {target}",
            cycle.sigma_stats().forward
        )));
    }
    Ok(ApproxOutcome {
        cycle,
        diamonds,
        target,
    })
}
