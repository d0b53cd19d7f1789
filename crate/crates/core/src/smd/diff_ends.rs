//! Hamilton paths whose two ends lie in different partite sets.

use crate::error::SmdError;
use crate::flow::{FactorKind, SpanningFactor};
use crate::graph::Digraph;
use crate::hamilton::hamilton_path_grouped;
use crate::smd::domination::{merge_to_irreducible, order_cycles};
use crate::smd::merge::segment;
use crate::smd::partite::PartiteStructure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiffEndsOutcome {
    pub path: Vec<usize>,
    /// Merge steps where none of the constructive candidates was a valid
    /// path and an exact search over the merged vertex set was used instead.
    pub fallbacks: usize,
    pub diagnostics: Vec<String>,
}

fn ends_differ(parts: &PartiteStructure, path: &[usize]) -> bool {
    path.len() >= 2 && !parts.same_part(path[0], path[path.len() - 1])
}

/// Extends `path` by all of `cycle` at its terminal end, keeping the ends in
/// different parts. Candidates follow the merge rules; the first valid one wins.
fn absorb(d: &Digraph, parts: &PartiteStructure, path: &[usize], cycle: &[usize]) -> Option<Vec<usize>> {
    let m = path.len();
    let k = cycle.len();
    let last = path[m - 1];
    let first = path[0];
    let valid = |c: &[usize]| ends_differ(parts, c) && d.is_directed_path(c);
    let into_last: Vec<usize> = (0..k).filter(|&j| d.has_arc(cycle[j], last)).collect();

    if into_last.is_empty() {
        let y = (0..k)
            .find(|&j| parts.same_part(cycle[j], first))
            .or_else(|| (0..k).find(|&j| !parts.same_part(cycle[j], last)))?;
        let mut out = path.to_vec();
        out.extend(segment(cycle, y, (y + k - 1) % k));
        return valid(&out).then_some(out);
    }

    for z in into_last {
        let zn = (z + 1) % k;
        // P1 = p'_1 .. p'_{m-1} z p'_m C[z^+, z^-]
        if m >= 2 {
            let mut p1 = path[..m - 1].to_vec();
            p1.push(cycle[z]);
            p1.push(last);
            if k >= 2 {
                p1.extend(segment(cycle, zn, (z + k - 1) % k));
            }
            if valid(&p1) {
                return Some(p1);
            }
        }
        // P2 = P' C[z^+, z]
        let mut p2 = path.to_vec();
        p2.extend(segment(cycle, zn, z));
        if valid(&p2) {
            return Some(p2);
        }
    }
    None
}

/// Exact search for a Hamilton path of `d[vertices]` with ends in different parts.
fn exact_diff_ends(d: &Digraph, parts: &PartiteStructure, vertices: &[usize]) -> Option<Vec<usize>> {
    let sub = d.induced(vertices);
    let group: Vec<usize> = vertices.iter().map(|&v| parts.part_of[v]).collect();
    hamilton_path_grouped(&sub, &group, |a, b| a != b).map(|p| p.into_iter().map(|i| vertices[i]).collect())
}

fn absorb_or_search(
    d: &Digraph,
    parts: &PartiteStructure,
    path: &[usize],
    cycle: &[usize],
    out: &mut DiffEndsOutcome,
    label: &str,
) -> Result<Vec<usize>, SmdError> {
    if let Some(p) = absorb(d, parts, path, cycle) {
        return Ok(p);
    }
    out.fallbacks += 1;
    out.diagnostics
        .push(format!("{label}: merge rules gave no valid path, used exact search"));
    let mut union = path.to_vec();
    union.extend_from_slice(cycle);
    exact_diff_ends(d, parts, &union)
        .ok_or_else(|| SmdError::Internal(format!("{label}: no Hamilton path with distinct end parts")))
}

/// A Hamilton path of `d` with ends in different partite sets, given a
/// 1-path-cycle factor `f` whose path already has that property.
///
/// The path is closed into a cycle (adding its closing arc if needed), the
/// resulting cycle factor is merged pairwise until irreducible and ordered by
/// weak domination. One distinguished arc is removed, and the cycles after it
/// in the order are absorbed at the path's end, those before it at the start.
pub fn ham_path_diff_ends(
    d: &Digraph,
    parts: &PartiteStructure,
    f: &SpanningFactor,
) -> Result<DiffEndsOutcome, SmdError> {
    let n = d.n();
    if parts.part_of.len() != n {
        return Err(SmdError::Precondition("partite structure does not match the digraph".into()));
    }
    if f.kind != FactorKind::OnePathCycleFactor || f.arcs.iter().any(|&(u, v)| !d.has_arc(u, v)) {
        return Err(SmdError::Precondition("not a 1-path-cycle factor of the digraph".into()));
    }
    let fp = f
        .parts(n)
        .ok_or_else(|| SmdError::Precondition("arc set is not a 1-path-cycle factor".into()))?;
    let path = fp.path.expect("path factor has a path");
    if !ends_differ(parts, &path) {
        return Err(SmdError::Precondition("path ends lie in the same partite set".into()));
    }
    let mut out = DiffEndsOutcome {
        path: Vec::new(),
        fallbacks: 0,
        diagnostics: Vec::new(),
    };
    if fp.cycles.is_empty() {
        out.path = path;
        return Ok(out);
    }

    let closing = (path[path.len() - 1], path[0]);
    let mut d_closed = d.clone();
    if !d.has_arc(closing.0, closing.1) {
        d_closed.add_arc(closing.0, closing.1).expect("ends are distinct");
    }
    let mut cycles = fp.cycles.clone();
    cycles.push(path);
    let (cycles, _) = merge_to_irreducible(&d_closed, cycles);

    let order = if cycles.len() == 1 {
        vec![0]
    } else {
        match order_cycles(d, parts, &cycles) {
            Some(o) => o,
            None => {
                out.fallbacks += 1;
                out.diagnostics.push(format!(
                    "no weak-domination ordering of {} cycles, used exact search",
                    cycles.len()
                ));
                let all: Vec<usize> = (0..n).collect();
                out.path = exact_diff_ends(d, parts, &all)
                    .ok_or(SmdError::OrderingExhausted { cycles: cycles.len() })?;
                return Ok(out);
            }
        }
    };
    let cycles: Vec<Vec<usize>> = order.into_iter().map(|i| cycles[i].clone()).collect();

    let on_cycle = |c: &[usize], (u, v): (usize, usize)| {
        let k = c.len();
        (0..k).find(|&i| c[i] == u && c[(i + 1) % k] == v)
    };
    let (r, pos) = cycles
        .iter()
        .enumerate()
        .find_map(|(r, c)| on_cycle(c, closing).map(|i| (r, i)))
        .unwrap_or_else(|| {
            let mut best: Option<((usize, usize), usize, usize)> = None;
            for (r, c) in cycles.iter().enumerate() {
                let k = c.len();
                for i in 0..k {
                    let arc = (c[i], c[(i + 1) % k]);
                    if best.is_none_or(|b| arc < b.0) {
                        best = Some((arc, r, i));
                    }
                }
            }
            let b = best.expect("at least one cycle");
            (b.1, b.2)
        });

    let cr = &cycles[r];
    let mut cur = segment(cr, (pos + 1) % cr.len(), pos);
    for (j, c) in cycles.iter().enumerate().skip(r + 1) {
        cur = absorb_or_search(d, parts, &cur, c, &mut out, &format!("cycle {j} after"))?;
    }
    if r > 0 {
        let rd = d.reversed();
        for j in (0..r).rev() {
            let mut rev_path = cur.clone();
            rev_path.reverse();
            let mut rev_cycle = cycles[j].clone();
            rev_cycle.reverse();
            let mut merged = absorb_or_search(&rd, parts, &rev_path, &rev_cycle, &mut out, &format!("cycle {j} before"))?;
            merged.reverse();
            cur = merged;
        }
    }
    if cur.len() != n || !d.is_directed_path(&cur) || !ends_differ(parts, &cur) {
        return Err(SmdError::Internal("assembled path failed verification".into()));
    }
    out.path = cur;
    Ok(out)
}
