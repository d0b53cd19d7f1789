//! Turning a path plus disjoint cycles into a single directed path.

use crate::error::SmdError;
use crate::flow::{FactorKind, SpanningFactor};
use crate::graph::Digraph;
use crate::hamilton::hamilton_path;

/// `C[c_i, c_j]`: the cycle walked forward from position `i` to position `j`.
pub(crate) fn segment(cycle: &[usize], i: usize, j: usize) -> Vec<usize> {
    let k = cycle.len();
    let len = (j + k - i) % k + 1;
    (0..len).map(|t| cycle[(i + t) % k]).collect()
}

/// A directed path of `d` on `V(path) ∪ V(cycle)`.
///
/// Tries, in order: append `C[c, c^-]` after the last vertex, prepend
/// `C[c^+, c]` before the first, and insert `C[c, c^-]` between a consecutive
/// pair `p_i -> c`, `c^- -> p_{i+1}`. When none applies, an exact search over
/// the subdigraph induced by the union is used; in a semicomplete multipartite
/// digraph a path exists because the union has a 1-path-cycle factor.
pub fn merge_path_cycle(d: &Digraph, path: &[usize], cycle: &[usize]) -> Result<Vec<usize>, SmdError> {
    if path.is_empty() || !d.is_directed_path(path) {
        return Err(SmdError::Precondition("path is not a directed path".into()));
    }
    if !d.is_directed_cycle(cycle) {
        return Err(SmdError::Precondition("cycle is not a directed cycle".into()));
    }
    if cycle.iter().any(|v| path.contains(v)) {
        return Err(SmdError::Precondition("path and cycle share a vertex".into()));
    }
    Ok(merge_unchecked(d, path, cycle).0)
}

/// Returns the merged path and whether the exact fallback was needed.
pub(crate) fn merge_unchecked(d: &Digraph, path: &[usize], cycle: &[usize]) -> (Vec<usize>, bool) {
    let k = cycle.len();
    let last = path[path.len() - 1];
    if let Some(i) = (0..k).find(|&i| d.has_arc(last, cycle[i])) {
        let mut out = path.to_vec();
        out.extend(segment(cycle, i, (i + k - 1) % k));
        return (out, false);
    }
    if let Some(i) = (0..k).find(|&i| d.has_arc(cycle[i], path[0])) {
        let mut out = segment(cycle, (i + 1) % k, i);
        out.extend_from_slice(path);
        return (out, false);
    }
    for w in path.windows(2).enumerate() {
        let (pos, pair) = w;
        for i in 0..k {
            let prev = cycle[(i + k - 1) % k];
            if d.has_arc(pair[0], cycle[i]) && d.has_arc(prev, pair[1]) {
                let mut out = path[..=pos].to_vec();
                out.extend(segment(cycle, i, (i + k - 1) % k));
                out.extend_from_slice(&path[pos + 1..]);
                return (out, false);
            }
        }
    }
    let mut union = path.to_vec();
    union.extend_from_slice(cycle);
    let sub = d.induced(&union);
    let all = vec![true; union.len()];
    let p = hamilton_path(&sub, &all, &all).expect("a path-cycle union in a multipartite digraph has a Hamilton path");
    (p.into_iter().map(|i| union[i]).collect(), true)
}

/// A Hamilton path of `d_f` obtained by merging the cycles of the
/// 1-path-cycle factor `f` into its path, one at a time.
pub fn hamilton_path_from_factor(d_f: &Digraph, f: &SpanningFactor) -> Result<Vec<usize>, SmdError> {
    if f.kind != FactorKind::OnePathCycleFactor || f.arcs.iter().any(|&(u, v)| !d_f.has_arc(u, v)) {
        return Err(SmdError::Precondition("not a 1-path-cycle factor of the digraph".into()));
    }
    let parts = f
        .parts(d_f.n())
        .ok_or_else(|| SmdError::Precondition("arc set is not a 1-path-cycle factor".into()))?;
    let mut path = parts.path.expect("path factor has a path");
    for c in &parts.cycles {
        path = merge_unchecked(d_f, &path, c).0;
    }
    debug_assert!(d_f.is_directed_path(&path) && path.len() == d_f.n());
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_wrap() {
        let c = [4, 5, 6, 7];
        assert_eq!(segment(&c, 2, 1), vec![6, 7, 4, 5]);
        assert_eq!(segment(&c, 1, 1), vec![5]);
        assert_eq!(segment(&c, 0, 3), vec![4, 5, 6, 7]);
    }

    #[test]
    fn single_vertex_then_digon() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(merge_path_cycle(&d, &[0], &[1, 2]).unwrap(), vec![0, 1, 2]);
    }

    #[test]
    fn vertex_dominated_by_triangle() {
        let mut arcs = vec![(0, 1), (1, 2), (2, 0)];
        arcs.extend([(0, 3), (1, 3), (2, 3)]);
        let d = Digraph::from_arcs(4, arcs).unwrap();
        let p = merge_path_cycle(&d, &[3], &[0, 1, 2]).unwrap();
        assert_eq!(p, vec![1, 2, 0, 3]);
        assert!(d.is_directed_path(&p));
    }

    #[test]
    fn insertion_between_pair() {
        // path 0 -> 1, cycle 2 <-> 3; only 0 -> 2 and 3 -> 1 connect them
        let d = Digraph::from_arcs(4, [(0, 1), (2, 3), (3, 2), (0, 2), (3, 1), (1, 3), (2, 0)])
            .unwrap();
        let p = merge_path_cycle(&d, &[0, 1], &[2, 3]).unwrap();
        assert!(d.is_directed_path(&p) && p.len() == 4);
    }

    #[test]
    fn rejects_overlap() {
        let d = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 1)]).unwrap();
        assert!(merge_path_cycle(&d, &[1], &[1, 2]).is_err());
    }
}
