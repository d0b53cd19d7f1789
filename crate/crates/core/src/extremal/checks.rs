//! Empirical checkers: test a hypothesis, and when it holds compare the
//! oracle optimum against the claimed bound.

use crate::error::ExtremalError;
use crate::graph::Digraph;

use super::approx::approx_discrepancy_cycle;
use super::conditions::{condition_report, ConditionReport};
use super::oracle::brute_force_sigma_hc_bounded;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// Bound met; `equality` when the optimum equals the bound.
    Holds { equality: bool },
    Fails,
    NotApplicable,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Holds { equality: true } => "holds-with-equality",
            Verdict::Holds { equality: false } => "holds",
            Verdict::Fails => "fails",
            Verdict::NotApplicable => "not-applicable",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    /// Ore condition gives `σ_max >= max(δ, n - δ)`.
    One,
    /// `s* >= 0` gives `σ_max >= ⌈(n + s*) / 2⌉`.
    Two,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    /// `1 < δ < n/2` and `d(u) + d(v) >= n + δ - 2` on non-adjacent pairs
    /// give `σ_max >= n - δ`.
    DegreeSum,
    /// `3 <= δ <= n/3`, Ore, and a minimum-degree vertex whose neighbourhood
    /// is a tournament give `σ_max >= n - δ - 2`.
    CliqueNeighborhood,
    /// `n >= 30 + 4(k - 1)` and `s* >= 8k` give `σ_max >= ⌈(n + k) / 2⌉`.
    Approx(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub verdict: Verdict,
    pub sigma: Option<usize>,
    pub bound: Option<usize>,
    /// Clique-neighbourhood check only: whether `σ_max >= n - δ` also holds.
    pub stronger_bound_holds: Option<bool>,
    pub note: String,
}

impl CheckReport {
    fn not_applicable(note: impl Into<String>) -> Self {
        Self {
            verdict: Verdict::NotApplicable,
            sigma: None,
            bound: None,
            stronger_bound_holds: None,
            note: note.into(),
        }
    }

    fn compare(sigma: Option<usize>, bound: usize) -> Self {
        let verdict = match sigma {
            Some(s) if s >= bound => Verdict::Holds { equality: s == bound },
            _ => Verdict::Fails,
        };
        let note = match sigma {
            None => "no Hamilton oriented cycle".to_string(),
            Some(s) => format!("sigma {s} vs bound {bound}"),
        };
        Self {
            verdict,
            sigma,
            bound: Some(bound),
            stronger_bound_holds: None,
            note,
        }
    }
}

fn oracle_sigma(d: &Digraph, bound: usize) -> Result<Option<usize>, ExtremalError> {
    Ok(brute_force_sigma_hc_bounded(d, bound)?.map(|r| r.sigma))
}

fn base_applicability(d: &Digraph) -> Option<&'static str> {
    if d.n() < 3 {
        Some("fewer than three vertices")
    } else if !d.is_oriented() {
        Some("not an oriented graph")
    } else {
        None
    }
}

pub fn check_conjecture(d: &Digraph, which: Conjecture, oracle_bound: usize) -> Result<CheckReport, ExtremalError> {
    if let Some(why) = base_applicability(d) {
        return Ok(CheckReport::not_applicable(why));
    }
    let r = condition_report(d);
    let n = r.n;
    let bound = match which {
        Conjecture::One if r.ore_holds => r.min_degree.max(n - r.min_degree),
        Conjecture::Two if r.s_star >= 0 => (n + r.s_star as usize).div_ceil(2),
        Conjecture::One => return Ok(CheckReport::not_applicable("Ore condition fails")),
        Conjecture::Two => return Ok(CheckReport::not_applicable("s* < 0")),
    };
    Ok(CheckReport::compare(oracle_sigma(d, oracle_bound)?, bound))
}

fn tournament_neighbourhood(d: &Digraph, v: usize) -> bool {
    let nb = d.neighbors(v);
    nb.iter().enumerate().all(|(i, &x)| nb[i + 1..].iter().all(|&y| d.adjacent(x, y)))
}

pub fn check_theorem(d: &Digraph, which: Theorem, oracle_bound: usize) -> Result<CheckReport, ExtremalError> {
    if let Some(why) = base_applicability(d) {
        return Ok(CheckReport::not_applicable(why));
    }
    let r: ConditionReport = condition_report(d);
    let (n, delta) = (r.n, r.min_degree);
    match which {
        Theorem::DegreeSum => {
            if !(delta > 1 && 2 * delta < n && r.degree_sum_threshold_holds(n + delta - 2)) {
                return Ok(CheckReport::not_applicable("degree-sum hypothesis fails"));
            }
            Ok(CheckReport::compare(oracle_sigma(d, oracle_bound)?, n - delta))
        }
        Theorem::CliqueNeighborhood => {
            let has_v0 = (0..n).any(|v| r.degrees()[v] == delta && tournament_neighbourhood(d, v));
            if !(delta >= 3 && 3 * delta <= n && r.ore_holds && has_v0) {
                return Ok(CheckReport::not_applicable("clique-neighbourhood hypothesis fails"));
            }
            let sigma = oracle_sigma(d, oracle_bound)?;
            let mut report = CheckReport::compare(sigma, n - delta - 2);
            report.stronger_bound_holds = Some(sigma.is_some_and(|s| s >= n - delta));
            Ok(report)
        }
        Theorem::Approx(k) => match approx_discrepancy_cycle(d, k) {
            Ok(out) => {
                let s = out.cycle.sigma_max();
                let mut report = CheckReport::compare(Some(s), out.target);
                report.note = format!("pipeline cycle sigma {s} vs bound {}", out.target);
                Ok(report)
            }
            Err(ExtremalError::Precondition(why)) => Ok(CheckReport::not_applicable(why)),
            Err(e) => Ok(CheckReport {
                verdict: Verdict::Fails,
                sigma: None,
                bound: Some((n + k).div_ceil(2)),
                stronger_bound_holds: None,
                note: e.to_string(),
            }),
        },
    }
}

/// `s*(D) >= t` forces `4 a(D) >= n (n + t)`; checked with `t = s*(D)` when
/// `s*(D) >= 0`. Returns `None` when `s* < 0`.
pub fn arc_bound_holds(d: &Digraph) -> Option<bool> {
    let r = condition_report(d);
    (r.s_star >= 0).then(|| 4 * r.arc_count as i64 >= r.n as i64 * (r.n as i64 + r.s_star))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::constructions::{construction_1, construction_2};
    use crate::extremal::oracle::ORACLE_BOUND;

    #[test]
    fn triangle_and_constructions() {
        let tri = Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = check_conjecture(&tri, Conjecture::Two, ORACLE_BOUND).unwrap();
        assert_eq!(r.verdict, Verdict::Holds { equality: false });
        let c2 = construction_2(8, 0).unwrap();
        let r = check_conjecture(&c2, Conjecture::Two, ORACLE_BOUND).unwrap();
        assert_eq!(r.verdict, Verdict::Holds { equality: true });
        let c1 = construction_1(7, 2).unwrap();
        let r = check_conjecture(&c1, Conjecture::One, ORACLE_BOUND).unwrap();
        assert_eq!((r.verdict, r.sigma), (Verdict::Holds { equality: true }, Some(5)));
    }

    #[test]
    fn hypothesis_failures_are_not_applicable() {
        let path = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        for t in [Theorem::DegreeSum, Theorem::CliqueNeighborhood, Theorem::Approx(1)] {
            let r = check_theorem(&path, t, ORACLE_BOUND).unwrap();
            assert_eq!(r.verdict, Verdict::NotApplicable);
        }
        assert_eq!(arc_bound_holds(&path), None);
    }
}
