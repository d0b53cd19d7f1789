//! Exhaustive maximum over all Hamilton oriented cycles or paths.
//!
//! Enumerates Hamilton cycles (paths) of the underlying graph once per
//! undirected cycle (path). For a fixed traversal a step can be forward when
//! the arc `u -> v` exists and backward when `v -> u` exists, so the best value
//! of that traversal is the larger of the two availability counts.

use crate::error::ExtremalError;
use crate::graph::Digraph;
use crate::walk::{Direction, OrientedWalk};

/// Default vertex bound for both oracles.
pub const ORACLE_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub sigma: usize,
    pub witness: OrientedWalk,
}

struct Search<'a> {
    d: &'a Digraph,
    nbrs: Vec<Vec<usize>>,
    n: usize,
    closed: bool,
    path: Vec<usize>,
    used: Vec<bool>,
    best: Option<(usize, Vec<usize>)>,
}

impl Search<'_> {
    fn new(d: &Digraph, closed: bool) -> Search<'_> {
        let n = d.n();
        Search {
            d,
            nbrs: (0..n).map(|v| d.neighbors(v)).collect(),
            n,
            closed,
            path: Vec::with_capacity(n),
            used: vec![false; n],
            best: None,
        }
    }

    fn cap(&self) -> usize {
        if self.closed {
            self.n
        } else {
            self.n - 1
        }
    }

    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|b| b.0 == self.cap())
    }

    fn record(&mut self, value: usize) {
        if self.best.as_ref().is_none_or(|b| value > b.0) {
            self.best = Some((value, self.path.clone()));
        }
    }

    fn extend(&mut self, fwd: usize, bwd: usize) {
        if self.done() {
            return;
        }
        let v = *self.path.last().unwrap();
        let remaining = self.cap() - (self.path.len() - 1);
        if let Some((b, _)) = self.best {
            if fwd.max(bwd) + remaining <= b {
                return;
            }
        }
        if self.path.len() == self.n {
            let first = self.path[0];
            if self.closed {
                // one traversal per undirected cycle
                if !self.d.adjacent(v, first) || self.path[1] > v {
                    return;
                }
                let f = fwd + usize::from(self.d.has_arc(v, first));
                let b = bwd + usize::from(self.d.has_arc(first, v));
                self.record(f.max(b));
            } else if first < v {
                self.record(fwd.max(bwd));
            }
            return;
        }
        for i in 0..self.nbrs[v].len() {
            let w = self.nbrs[v][i];
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            self.path.push(w);
            let f = fwd + usize::from(self.d.has_arc(v, w));
            let b = bwd + usize::from(self.d.has_arc(w, v));
            self.extend(f, b);
            self.path.pop();
            self.used[w] = false;
        }
    }
}

fn witness(d: &Digraph, vertices: Vec<usize>, closed: bool) -> OrientedWalk {
    let w = OrientedWalk::from_vertices_preferring(d, vertices.clone(), closed, Direction::Forward)
        .expect("enumerated walk uses adjacent pairs");
    let s = w.sigma_stats();
    if s.forward >= s.backward {
        return w;
    }
    OrientedWalk::from_vertices_preferring(d, vertices, closed, Direction::Backward).expect("as above")
}

/// Maximum `sigma_max` over Hamilton oriented cycles, with a witness. `None`
/// when the underlying graph has no Hamilton cycle (always for `n < 3`).
pub fn brute_force_sigma_hc(d: &Digraph) -> Result<Option<OracleResult>, ExtremalError> {
    brute_force_sigma_hc_bounded(d, ORACLE_BOUND)
}

pub fn brute_force_sigma_hc_bounded(d: &Digraph, bound: usize) -> Result<Option<OracleResult>, ExtremalError> {
    let n = d.n();
    if n > bound {
        return Err(ExtremalError::SizeBound { n, bound });
    }
    if n < 3 {
        return Ok(None);
    }
    let mut s = Search::new(d, true);
    s.path.push(0);
    s.used[0] = true;
    s.extend(0, 0);
    Ok(s.best.map(|(sigma, vertices)| OracleResult {
        sigma,
        witness: witness(d, vertices, true),
    }))
}

/// Maximum `sigma_max` over Hamilton oriented paths, with a witness.
pub fn brute_force_sigma_hp(d: &Digraph) -> Result<Option<OracleResult>, ExtremalError> {
    brute_force_sigma_hp_bounded(d, ORACLE_BOUND)
}

pub fn brute_force_sigma_hp_bounded(d: &Digraph, bound: usize) -> Result<Option<OracleResult>, ExtremalError> {
    let n = d.n();
    if n > bound {
        return Err(ExtremalError::SizeBound { n, bound });
    }
    if n == 0 {
        return Ok(None);
    }
    if n == 1 {
        let witness = OrientedWalk::from_vertices(d, vec![0], false).expect("single vertex");
        return Ok(Some(OracleResult { sigma: 0, witness }));
    }
    let mut s = Search::new(d, false);
    for start in 0..n {
        s.path.push(start);
        s.used[start] = true;
        s.extend(0, 0);
        s.path.pop();
        s.used[start] = false;
        if s.done() {
            break;
        }
    }
    Ok(s.best.map(|(sigma, vertices)| OracleResult {
        sigma,
        witness: witness(d, vertices, false),
    }))
}
