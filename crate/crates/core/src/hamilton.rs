//! Exact (exponential) Hamilton path and cycle searches.
//!
//! Subset dynamic programming over vertex bitmasks handles up to
//! [`DP_LIMIT`] vertices; above that a pruned depth-first search is used.
//! These are the fallbacks behind the constructive procedures and the exact
//! hamiltonicity decision.

use crate::graph::Digraph;

/// Largest vertex count handled by the bitmask tables.
pub const DP_LIMIT: usize = 20;

/// A Hamilton directed cycle of `d`, if one exists, starting at vertex 0.
pub fn hamilton_cycle(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    if n < 2 {
        return None;
    }
    if n <= DP_LIMIT {
        hamilton_cycle_dp(d)
    } else {
        hamilton_cycle_dfs(d)
    }
}

/// A Hamilton directed path starting in `starts` and ending in `ends`.
pub fn hamilton_path(d: &Digraph, starts: &[bool], ends: &[bool]) -> Option<Vec<usize>> {
    let n = d.n();
    if n == 0 {
        return None;
    }
    if n == 1 {
        return (starts[0] && ends[0]).then(|| vec![0]);
    }
    if n <= DP_LIMIT {
        hamilton_path_dp(d, starts, ends)
    } else {
        hamilton_path_dfs(d, starts, ends)
    }
}

/// A Hamilton directed path whose two ends satisfy `ok(start, end)`, where
/// `group` partitions the vertices (e.g. partite sets) and the predicate
/// depends only on the groups of the ends.
pub fn hamilton_path_grouped(
    d: &Digraph,
    group: &[usize],
    ok: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let groups = group.iter().copied().max().map_or(0, |g| g + 1);
    for gs in 0..groups {
        let starts: Vec<bool> = group.iter().map(|&g| g == gs).collect();
        if !starts.iter().any(|&s| s) {
            continue;
        }
        let ends: Vec<bool> = group.iter().map(|&g| ok(gs, g)).collect();
        if let Some(p) = hamilton_path(d, &starts, &ends) {
            return Some(p);
        }
    }
    None
}

fn out_masks(d: &Digraph) -> Vec<u32> {
    (0..d.n())
        .map(|v| d.out_neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w)))
        .collect()
}

fn hamilton_cycle_dp(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    let out = out_masks(d);
    let full = (1u32 << n) - 1;
    // reach[mask] = set of v such that some path 0 -> ... -> v covers exactly mask
    let mut reach = vec![0u32; 1 << n];
    reach[1] = 1;
    for mask in 1..=full {
        if mask & 1 == 0 {
            continue;
        }
        let mut ends = reach[mask as usize];
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut next = out[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    let closing = reach[full as usize] & in_mask(d, 0);
    if closing == 0 {
        return None;
    }
    let last = closing.trailing_zeros() as usize;
    let mut path = unwind(d, &reach, full, last, &out);
    path.reverse();
    debug_assert_eq!(path[0], 0);
    Some(path)
}

fn in_mask(d: &Digraph, v: usize) -> u32 {
    d.in_neighbors(v).iter().fold(0u32, |m, &w| m | (1 << w))
}

/// Walks back from `(mask, last)` through the reach table; returns the path
/// reversed (last vertex first).
fn unwind(d: &Digraph, reach: &[u32], mut mask: u32, mut last: usize, out: &[u32]) -> Vec<usize> {
    let mut rev = vec![last];
    while mask.count_ones() > 1 {
        let prev_mask = mask & !(1 << last);
        let candidates = reach[prev_mask as usize] & in_mask(d, last);
        let prev = candidates.trailing_zeros() as usize;
        debug_assert!(out[prev] & (1 << last) != 0);
        rev.push(prev);
        mask = prev_mask;
        last = prev;
    }
    rev
}

fn hamilton_path_dp(d: &Digraph, starts: &[bool], ends: &[bool]) -> Option<Vec<usize>> {
    let n = d.n();
    let out = out_masks(d);
    let full = (1u32 << n) - 1;
    let mut reach = vec![0u32; 1 << n];
    for s in (0..n).filter(|&s| starts[s]) {
        reach[1 << s] = 1 << s;
    }
    for mask in 1..=full {
        let mut cur = reach[mask as usize];
        while cur != 0 {
            let v = cur.trailing_zeros() as usize;
            cur &= cur - 1;
            let mut next = out[v] & !mask;
            while next != 0 {
                let w = next.trailing_zeros();
                next &= next - 1;
                reach[(mask | (1 << w)) as usize] |= 1 << w;
            }
        }
    }
    let end_mask = (0..n).filter(|&v| ends[v]).fold(0u32, |m, v| m | (1 << v));
    let good = reach[full as usize] & end_mask;
    if good == 0 {
        return None;
    }
    let last = good.trailing_zeros() as usize;
    let mut path = unwind(d, &reach, full, last, &out);
    path.reverse();
    Some(path)
}

fn hamilton_cycle_dfs(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.n();
    let mut path = vec![0];
    let mut used = vec![false; n];
    used[0] = true;
    let found = extend(d, &mut path, &mut used, &|v| d.has_arc(v, 0));
    found.then_some(path)
}

fn hamilton_path_dfs(d: &Digraph, starts: &[bool], ends: &[bool]) -> Option<Vec<usize>> {
    let n = d.n();
    for s in (0..n).filter(|&s| starts[s]) {
        let mut path = vec![s];
        let mut used = vec![false; n];
        used[s] = true;
        if extend(d, &mut path, &mut used, &|v| ends[v]) {
            return Some(path);
        }
    }
    None
}

fn extend(d: &Digraph, path: &mut Vec<usize>, used: &mut [bool], accept_last: &dyn Fn(usize) -> bool) -> bool {
    let n = d.n();
    let v = *path.last().unwrap();
    if path.len() == n {
        return accept_last(v);
    }
    // prune: an unused vertex with no unused in-neighbour other than through v is fine,
    // but one with no possible predecessor at all kills the branch
    for w in 0..n {
        if !used[w] && !d.in_neighbors(w).iter().any(|&u| !used[u] || u == v) {
            return false;
        }
    }
    let mut next: Vec<usize> = d.out_neighbors(v).iter().copied().filter(|&w| !used[w]).collect();
    // fewest onward options first
    next.sort_by_key(|&w| d.out_neighbors(w).iter().filter(|&&x| !used[x]).count());
    for w in next {
        used[w] = true;
        path.push(w);
        if extend(d, path, used, accept_last) {
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_has_cycle(d: &Digraph) -> bool {
        let n = d.n();
        let mut perm: Vec<usize> = (1..n).collect();
        permutations(&mut perm, 0, &mut |p| {
            let mut c = vec![0];
            c.extend_from_slice(p);
            d.is_directed_cycle(&c)
        })
    }

    fn permutations(v: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if k == v.len() {
            return f(v);
        }
        for i in k..v.len() {
            v.swap(k, i);
            if permutations(v, k + 1, f) {
                return true;
            }
            v.swap(k, i);
        }
        false
    }

    #[test]
    fn directed_four_cycle() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c = hamilton_cycle(&d).unwrap();
        assert!(d.is_directed_cycle(&c));
        assert_eq!(c.len(), 4);
        assert_eq!(hamilton_cycle_dfs(&d).unwrap(), c);
    }

    #[test]
    fn transitive_tournament_has_no_cycle() {
        let d = Digraph::from_arcs(4, (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v)))).unwrap();
        assert!(hamilton_cycle(&d).is_none());
        assert!(hamilton_cycle_dfs(&d).is_none());
        let all = vec![true; 4];
        assert_eq!(hamilton_path(&d, &all, &all).unwrap(), vec![0, 1, 2, 3]);
    }

    #[test]
    fn dp_and_dfs_agree_with_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..7);
            let mut d = Digraph::new(n);
            for u in 0..n {
                for v in 0..n {
                    if u != v && rng.gen_bool(0.4) {
                        d.add_arc(u, v).unwrap();
                    }
                }
            }
            let expected = brute_has_cycle(&d);
            let dp = hamilton_cycle_dp(&d);
            let dfs = hamilton_cycle_dfs(&d);
            assert_eq!(dp.is_some(), expected);
            assert_eq!(dfs.is_some(), expected);
            if let Some(c) = dp {
                assert!(d.is_directed_cycle(&c) && c.len() == n);
            }
            let starts: Vec<bool> = (0..n).map(|v| v % 2 == 0).collect();
            let ends: Vec<bool> = (0..n).map(|v| v % 3 != 0).collect();
            let p1 = hamilton_path_dp(&d, &starts, &ends);
            let p2 = hamilton_path_dfs(&d, &starts, &ends);
            assert_eq!(p1.is_some(), p2.is_some());
            for p in [p1, p2].into_iter().flatten() {
                assert!(d.is_directed_path(&p) && p.len() == n);
                assert!(starts[p[0]] && ends[*p.last().unwrap()]);
            }
        }
    }
}
