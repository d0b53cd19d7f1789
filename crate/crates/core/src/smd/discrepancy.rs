//! Maximum-forward Hamilton oriented paths and cycles of semicomplete
//! multipartite digraphs.

use crate::error::SmdError;
use crate::flow::{
    build_symmetric_01, max_cost_cycle_factor, max_cost_one_path_cycle_factor, FactorKind, SpanningFactor,
};
use crate::graph::Digraph;
use crate::hamilton::hamilton_cycle;
use crate::smd::diff_ends::ham_path_diff_ends;
use crate::smd::domination::merge_to_irreducible;
use crate::smd::merge::hamilton_path_from_factor;
use crate::smd::partite::{detect_partite_structure, majority_check, Majority};
use crate::walk::{Direction, OrientedWalk};

/// Default vertex bound for the exact hamiltonicity decision.
pub const EXACT_HAMILTON_BOUND: usize = 20;

/// How a cycle optimum was certified.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleCase {
    /// The factor has a cost-0 arc; the optimum equals the factor cost.
    Deficient,
    /// Every factor arc is an arc of the digraph and it is hamiltonian.
    Hamiltonian,
    /// Every factor arc is an arc of the digraph but it is not hamiltonian.
    OneBackward,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmdOptimum {
    pub sigma: usize,
    pub walk: OrientedWalk,
    /// Cost of the maximum-cost factor of the symmetric (0,1)-digraph.
    pub factor_cost: usize,
    pub case: Option<CycleCase>,
    /// Exact-search fallbacks taken inside the different-ends procedure.
    pub fallbacks: usize,
    pub diagnostics: Vec<String>,
}

/// Exact hamiltonicity by subset dynamic programming.
pub fn is_hamiltonian_smd_exact(d: &Digraph, bound: usize) -> Result<bool, SmdError> {
    if d.n() > bound {
        return Err(SmdError::SizeBound { n: d.n(), bound });
    }
    Ok(hamilton_cycle(d).is_some())
}

fn union_with(d: &Digraph, f: &SpanningFactor) -> Digraph {
    let mut out = d.clone();
    for &(u, v) in &f.arcs {
        if !out.has_arc(u, v) {
            out.add_arc(u, v).expect("factor arcs join distinct vertices");
        }
    }
    out
}

/// Maximum number of forward arcs over Hamilton oriented paths of `d`, with a
/// path attaining it. `Ok(None)` when `d` is not semicomplete multipartite or
/// violates the path majority inequality.
pub fn max_forward_hamilton_path(d: &Digraph) -> Result<Option<SmdOptimum>, SmdError> {
    let Some(parts) = detect_partite_structure(d) else {
        return Ok(None);
    };
    if !majority_check(&parts, Majority::Path) {
        return Ok(None);
    }
    let h = build_symmetric_01(d);
    let Some(f) = max_cost_one_path_cycle_factor(&h) else {
        return Err(SmdError::Internal("majority holds but no 1-path-cycle factor".into()));
    };
    let d_f = union_with(d, &f);
    let path = hamilton_path_from_factor(&d_f, &f)?;
    let walk = OrientedWalk::from_vertices(d, path, false)?;
    let forward = walk.sigma_stats().forward;
    if forward != f.cost {
        return Err(SmdError::Internal(format!(
            "path has {forward} forward arcs, factor cost is {}",
            f.cost
        )));
    }
    Ok(Some(SmdOptimum {
        sigma: forward,
        walk,
        factor_cost: f.cost,
        case: None,
        fallbacks: 0,
        diagnostics: Vec::new(),
    }))
}

/// [`max_forward_hamilton_cycle_with_bound`] with [`EXACT_HAMILTON_BOUND`].
pub fn max_forward_hamilton_cycle(d: &Digraph) -> Result<Option<SmdOptimum>, SmdError> {
    max_forward_hamilton_cycle_with_bound(d, EXACT_HAMILTON_BOUND)
}

/// Maximum `sigma_max` over Hamilton oriented cycles of `d`, with a cycle
/// attaining it. `Ok(None)` when `d` is not semicomplete multipartite, violates
/// the cycle majority inequality, or has fewer than 3 vertices.
///
/// `bound` limits the exact hamiltonicity decision, needed only when the best
/// cycle factor uses arcs of `d` alone and pairwise merging does not already
/// produce a Hamilton cycle.
pub fn max_forward_hamilton_cycle_with_bound(d: &Digraph, bound: usize) -> Result<Option<SmdOptimum>, SmdError> {
    let n = d.n();
    let Some(parts) = detect_partite_structure(d) else {
        return Ok(None);
    };
    if n < 3 || !majority_check(&parts, Majority::Cycle) {
        return Ok(None);
    }
    let h = build_symmetric_01(d);
    let Some(f) = max_cost_cycle_factor(&h) else {
        return Err(SmdError::Internal("majority holds but no cycle factor".into()));
    };
    let c = f.cost;

    let finish = |walk: OrientedWalk, case, fallbacks, diagnostics| {
        let sigma = walk.sigma_max();
        Ok(Some(SmdOptimum {
            sigma,
            walk,
            factor_cost: c,
            case: Some(case),
            fallbacks,
            diagnostics,
        }))
    };

    if c < n {
        // a cost-0 arc (x, y): d has y -> x only
        let a = *f
            .arcs
            .iter()
            .filter(|&&(u, v)| !d.has_arc(u, v))
            .min()
            .expect("cost below n means a cost-0 arc");
        let mut d_f = union_with(d, &f);
        d_f = Digraph::from_arcs(n, d_f.arcs().filter(|&arc| arc != a)).expect("subset of a digraph");
        let rest = path_factor_without(&f, a);
        let out = ham_path_diff_ends(&d_f, &parts, &rest)?;
        let walk = OrientedWalk::from_vertices(d, out.path, true)?;
        if walk.sigma_max() != c {
            return Err(SmdError::Internal(format!(
                "cycle has sigma_max {}, factor cost is {c}",
                walk.sigma_max()
            )));
        }
        return finish(walk, CycleCase::Deficient, out.fallbacks, out.diagnostics);
    }

    let cycles = f.parts(n).expect("valid factor").cycles;
    let (merged, _) = merge_to_irreducible(d, cycles);
    let ham = if merged.len() == 1 {
        Some(merged[0].clone())
    } else {
        if n > bound {
            return Err(SmdError::SizeBound { n, bound });
        }
        hamilton_cycle(d)
    };
    if let Some(cycle) = ham {
        let walk = OrientedWalk::from_vertices(d, cycle, true)?;
        return finish(walk, CycleCase::Hamiltonian, 0, Vec::new());
    }

    let a = *f.arcs.iter().min().expect("n >= 3 arcs");
    let rest = path_factor_without(&f, a);
    let out = ham_path_diff_ends(d, &parts, &rest)?;
    let vertices = out.path;
    let (first, last) = (vertices[0], vertices[n - 1]);
    if d.has_arc(last, first) {
        return Err(SmdError::Internal("closing arc would make a Hamilton cycle".into()));
    }
    let mut dirs = vec![Direction::Forward; n - 1];
    dirs.push(Direction::Backward);
    let walk = OrientedWalk::new(d, vertices, true, dirs)?;
    finish(walk, CycleCase::OneBackward, out.fallbacks, out.diagnostics)
}

fn path_factor_without(f: &SpanningFactor, a: (usize, usize)) -> SpanningFactor {
    SpanningFactor {
        arcs: f.arcs.iter().copied().filter(|&x| x != a).collect(),
        kind: FactorKind::OnePathCycleFactor,
        cost: 0,
    }
}
