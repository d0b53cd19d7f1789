//! Weak domination between disjoint cycles and orderings of cycle factors.

use crate::error::SmdError;
use crate::graph::Digraph;
use crate::hamilton::{hamilton_cycle, DP_LIMIT};
use crate::smd::merge::segment;
use crate::smd::partite::PartiteStructure;

/// A cycle factor listed in an order where every earlier cycle weakly
/// dominates every later one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleFactorOrdering {
    pub cycles: Vec<Vec<usize>>,
    /// `(i, j, part)` for every `i < j`: `cycles[i]` is `part`-weakly-dominating `cycles[j]`.
    pub witnesses: Vec<(usize, usize, usize)>,
    /// Number of pairwise merges performed before ordering.
    pub merges: usize,
}

impl CycleFactorOrdering {
    /// Re-checks every recorded witness against the definition.
    pub fn is_valid_for(&self, d: &Digraph, parts: &PartiteStructure) -> bool {
        let t = self.cycles.len();
        self.witnesses.len() == t * (t - 1) / 2
            && self.witnesses.iter().all(|&(i, j, w)| {
                i < j && j < t && has_witness(d, parts, &self.cycles[i], &self.cycles[j], w)
            })
    }
}

fn positions(n: usize, cycle: &[usize]) -> Vec<usize> {
    let mut pos = vec![usize::MAX; n];
    for (i, &v) in cycle.iter().enumerate() {
        pos[v] = i;
    }
    pos
}

/// Parts allowed by each arc from `c2` to `c1`: both `u2^+` and `v1^-` must lie
/// in one part. Returns `None` if two arcs disagree or one arc is mixed,
/// `Some(None)` when there are no such arcs.
fn required_part(d: &Digraph, parts: &PartiteStructure, c1: &[usize], c2: &[usize]) -> Option<Option<usize>> {
    let pos1 = positions(d.n(), c1);
    let (k1, k2) = (c1.len(), c2.len());
    let mut need = None;
    for (i2, &u2) in c2.iter().enumerate() {
        let succ = c2[(i2 + 1) % k2];
        for &v1 in d.out_neighbors(u2) {
            let p1 = pos1[v1];
            if p1 == usize::MAX {
                continue;
            }
            let pred = c1[(p1 + k1 - 1) % k1];
            let part = parts.part_of[succ];
            if parts.part_of[pred] != part || need.is_some_and(|x| x != part) {
                return None;
            }
            need = Some(part);
        }
    }
    Some(need)
}

fn has_witness(d: &Digraph, parts: &PartiteStructure, c1: &[usize], c2: &[usize], w: usize) -> bool {
    match required_part(d, parts, c1, c2) {
        Some(Some(p)) => p == w,
        Some(None) => w < parts.p(),
        None => false,
    }
}

/// A part index `i` with `c1` `V_i`-weakly-dominating `c2`, or `None`. With no
/// arcs from `c2` to `c1` every part qualifies and 0 is returned.
pub fn weakly_dominates(d: &Digraph, parts: &PartiteStructure, c1: &[usize], c2: &[usize]) -> Option<usize> {
    required_part(d, parts, c1, c2).map(|p| p.unwrap_or(0))
}

/// One cycle through `a ∪ b` if an exchange `u -> w`, `w^- -> u^+` exists
/// (`u` on `a`, `w` on `b`): the result is `a[u^+, u] b[w, w^-]`.
fn exchange_merge(d: &Digraph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    let (ka, kb) = (a.len(), b.len());
    for i in 0..ka {
        let (u, u_next) = (a[i], a[(i + 1) % ka]);
        for j in 0..kb {
            let (w, w_prev) = (b[j], b[(j + kb - 1) % kb]);
            if d.has_arc(u, w) && d.has_arc(w_prev, u_next) {
                let mut c = segment(a, (i + 1) % ka, i);
                c.extend(segment(b, j, (j + kb - 1) % kb));
                return Some(c);
            }
        }
    }
    None
}

fn merge_pair(d: &Digraph, a: &[usize], b: &[usize]) -> Option<Vec<usize>> {
    if let Some(c) = exchange_merge(d, a, b).or_else(|| exchange_merge(d, b, a)) {
        return Some(c);
    }
    if a.len() + b.len() > DP_LIMIT {
        return None;
    }
    let mut union = a.to_vec();
    union.extend_from_slice(b);
    hamilton_cycle(&d.induced(&union)).map(|c| c.into_iter().map(|i| union[i]).collect())
}

/// Merges pairs of cycles whose union carries a spanning cycle until no pair
/// can be merged. Returns the cycles (each rotated to start at its smallest
/// vertex, sorted by that vertex) and the number of merges.
pub fn merge_to_irreducible(d: &Digraph, mut cycles: Vec<Vec<usize>>) -> (Vec<Vec<usize>>, usize) {
    let mut merges = 0;
    'outer: loop {
        normalize(&mut cycles);
        for i in 0..cycles.len() {
            for j in i + 1..cycles.len() {
                if let Some(c) = merge_pair(d, &cycles[i], &cycles[j]) {
                    debug_assert!(d.is_directed_cycle(&c));
                    cycles.swap_remove(j);
                    cycles[i] = c;
                    merges += 1;
                    continue 'outer;
                }
            }
        }
        return (cycles, merges);
    }
}

fn normalize(cycles: &mut [Vec<usize>]) {
    for c in cycles.iter_mut() {
        let m = (0..c.len()).min_by_key(|&i| c[i]).unwrap_or(0);
        c.rotate_left(m);
    }
    cycles.sort_unstable_by_key(|c| c[0]);
}

/// Orders `cycles` so that each weakly dominates all later ones, by
/// backtracking over cycles that dominate everything still unplaced (the
/// first branch tried is the greedy choice).
pub fn order_cycles(
    d: &Digraph,
    parts: &PartiteStructure,
    cycles: &[Vec<usize>],
) -> Option<Vec<usize>> {
    let t = cycles.len();
    let mut dom = vec![vec![None; t]; t];
    for i in 0..t {
        for j in 0..t {
            if i != j {
                dom[i][j] = weakly_dominates(d, parts, &cycles[i], &cycles[j]);
            }
        }
    }
    let mut order = Vec::with_capacity(t);
    let mut placed = vec![false; t];
    fn search(dom: &[Vec<Option<usize>>], order: &mut Vec<usize>, placed: &mut [bool]) -> bool {
        let t = placed.len();
        if order.len() == t {
            return true;
        }
        for c in 0..t {
            if placed[c] || !(0..t).all(|o| o == c || placed[o] || dom[c][o].is_some()) {
                continue;
            }
            placed[c] = true;
            order.push(c);
            if search(dom, order, placed) {
                return true;
            }
            order.pop();
            placed[c] = false;
        }
        false
    }
    search(&dom, &mut order, &mut placed).then_some(order)
}

/// Merges `f` to irreducibility and orders the result by weak domination.
pub fn order_cycle_factor(
    d: &Digraph,
    parts: &PartiteStructure,
    f: &[Vec<usize>],
) -> Result<CycleFactorOrdering, SmdError> {
    if f.iter().any(|c| !d.is_directed_cycle(c)) || f.iter().map(Vec::len).sum::<usize>() != d.n() {
        return Err(SmdError::Precondition("not a cycle factor of the digraph".into()));
    }
    let (cycles, merges) = merge_to_irreducible(d, f.to_vec());
    let order = order_cycles(d, parts, &cycles).ok_or(SmdError::OrderingExhausted { cycles: cycles.len() })?;
    let cycles: Vec<Vec<usize>> = order.into_iter().map(|i| cycles[i].clone()).collect();
    let mut witnesses = Vec::new();
    for i in 0..cycles.len() {
        for j in i + 1..cycles.len() {
            let w = weakly_dominates(d, parts, &cycles[i], &cycles[j]).expect("order was checked");
            witnesses.push((i, j, w));
        }
    }
    Ok(CycleFactorOrdering {
        cycles,
        witnesses,
        merges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smd::partite::detect_partite_structure;

    /// The three-cycle example: C1 = x1 x2 x3, C2 = y1 y2 y3 y4, C3 = w1 w2 with
    /// parts V1 = {x1, y2, y4}, V2 = {x2, w1}, V3 = {x3, y1, y3, w2}. Arcs from
    /// earlier to later cycles fill in every remaining cross pair.
    fn three_cycles() -> (Digraph, Vec<Vec<usize>>) {
        // x1..x3 = 0..2, y1..y4 = 3..6, w1,w2 = 7,8
        let part = [0, 1, 2, 2, 0, 2, 0, 1, 2];
        let c1 = vec![0, 1, 2];
        let c2 = vec![3, 4, 5, 6];
        let c3 = vec![7, 8];
        let mut arcs = vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3), (7, 8), (8, 7)];
        arcs.extend([(3, 1), (5, 1), (7, 4)]);
        let cyc = [&c1, &c2, &c3];
        for (ci, a) in cyc.iter().enumerate() {
            for b in &cyc[ci + 1..] {
                for &u in a.iter() {
                    for &v in b.iter() {
                        if part[u] != part[v] && !arcs.contains(&(v, u)) {
                            arcs.push((u, v));
                        }
                    }
                }
            }
        }
        // pairs inside a cycle that are not cycle arcs
        for c in cyc {
            for &u in c.iter() {
                for &v in c.iter() {
                    if u < v && part[u] != part[v] && !arcs.contains(&(u, v)) && !arcs.contains(&(v, u)) {
                        arcs.push((u, v));
                    }
                }
            }
        }
        (Digraph::from_arcs(9, arcs).unwrap(), vec![c1, c2, c3])
    }

    #[test]
    fn figure_style_witnesses() {
        let (d, cs) = three_cycles();
        let parts = detect_partite_structure(&d).unwrap();
        assert_eq!(parts.p(), 3);
        let v = |x: usize| parts.part_of[x];
        assert_eq!(weakly_dominates(&d, &parts, &cs[0], &cs[1]), Some(v(0)));
        assert_eq!(weakly_dominates(&d, &parts, &cs[1], &cs[2]), Some(v(3)));
        assert_eq!(weakly_dominates(&d, &parts, &cs[0], &cs[2]), Some(0));
        assert_eq!(order_cycles(&d, &parts, &cs), Some(vec![0, 1, 2]));
    }

    #[test]
    fn conflicting_arcs_have_no_witness() {
        // C1 = 0 1 (parts {0}, {1}), C2 = 2 3; arcs 2->1 needs {3, 0} (mixed)
        let d = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2), (2, 1), (0, 2), (0, 3), (1, 3)])
            .unwrap();
        let parts = detect_partite_structure(&d).unwrap();
        assert_eq!(weakly_dominates(&d, &parts, &[0, 1], &[2, 3]), None);
        assert_eq!(weakly_dominates(&d, &parts, &[2, 3], &[0, 1]), None);
        // all arcs from the first digon to the second: nothing to check
        let e = Digraph::from_arcs(4, [(0, 1), (1, 0), (2, 3), (3, 2), (0, 2), (0, 3), (1, 2), (1, 3)])
            .unwrap();
        let parts = detect_partite_structure(&e).unwrap();
        assert_eq!(weakly_dominates(&e, &parts, &[0, 1], &[2, 3]), Some(0));
    }

    #[test]
    fn single_cycle_orders_trivially() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let parts = detect_partite_structure(&d).unwrap();
        let o = order_cycle_factor(&d, &parts, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(o.cycles.len(), 1);
        assert!(o.witnesses.is_empty());
    }
}
