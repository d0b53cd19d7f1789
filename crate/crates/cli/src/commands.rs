//! Command implementations, independent of argument parsing.

use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::Instant;

use hamdisc::extremal::{
    brute_force_sigma_hc_bounded, brute_force_sigma_hp_bounded, check_conjecture, check_theorem,
    condition_report, construction_1, construction_2, random_lsd, random_oriented, random_smd_with,
    random_tournament, Conjecture, LsdShape, Theorem,
};
use hamdisc::lsd::{is_locally_semicomplete, lsd_decomposition, max_forward_hamilton_cycle_lsd, c1_cl_distance};
use hamdisc::smd::{
    detect_partite_structure, majority_check, max_forward_hamilton_cycle, max_forward_hamilton_path, Majority,
};
use hamdisc::{Digraph, ExtremalError, OrientedWalk};
use rayon::prelude::*;

use crate::error::CliError;
use crate::instance::read_instance;
use crate::report::{BatchReport, Certificates, CheckEntry, Class, Method, ResultReport, Witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Path,
    Cycle,
}

impl FromStr for Target {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "path" => Ok(Target::Path),
            "cycle" => Ok(Target::Cycle),
            _ => Err(CliError::Usage(format!("unknown target `{s}` (path|cycle)"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MethodChoice {
    Auto,
    Flow,
    Lsd,
    Oracle,
}

impl FromStr for MethodChoice {
    type Err = CliError;
    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "auto" => Ok(MethodChoice::Auto),
            "flow" => Ok(MethodChoice::Flow),
            "lsd" => Ok(MethodChoice::Lsd),
            "oracle" => Ok(MethodChoice::Oracle),
            _ => Err(CliError::Usage(format!("unknown method `{s}` (auto|flow|lsd|oracle)"))),
        }
    }
}

fn lsd_applicable(d: &Digraph) -> bool {
    d.n() >= 3 && d.is_connected() && is_locally_semicomplete(d)
}

pub fn classify(d: &Digraph) -> Class {
    if detect_partite_structure(d).is_some() {
        Class::Smd
    } else if lsd_applicable(d) {
        Class::Lsd
    } else if d.is_oriented() {
        Class::Oriented
    } else {
        Class::Other
    }
}

pub fn certificates(d: &Digraph) -> Certificates {
    let r = condition_report(d);
    let mut c = Certificates {
        min_degree: r.min_degree,
        s_star: r.s_star,
        ore: r.ore_holds,
        ..Default::default()
    };
    if let Some(parts) = detect_partite_structure(d) {
        c.partite_sizes = Some(parts.sizes());
        c.hp_majority = Some(majority_check(&parts, Majority::Path));
        c.hc_majority = Some(majority_check(&parts, Majority::Cycle));
    }
    if lsd_applicable(d) {
        if let Ok(dec) = lsd_decomposition(d) {
            c.strong = Some(dec.is_strong());
            if !dec.is_strong() {
                c.distance_c1_cl = c1_cl_distance(d, &dec.decomposition);
            }
        }
    }
    c
}

pub fn cmd_analyze(d: &Digraph, name: &str) -> ResultReport {
    let start = Instant::now();
    ResultReport {
        instance: name.to_string(),
        class: classify(d),
        n: d.n(),
        m: d.arc_count(),
        sigma_hp: None,
        sigma_hc: None,
        witness: None,
        certificates: certificates(d),
        method: None,
        timing_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn mismatch(method: &str, reason: impl Into<String>) -> CliError {
    CliError::MethodMismatch {
        method: method.into(),
        reason: reason.into(),
    }
}

fn oracle_error(e: ExtremalError) -> CliError {
    match e {
        ExtremalError::SizeBound { n, bound } => CliError::BoundExceeded { n, bound },
        other => CliError::Solver(other.to_string()),
    }
}

/// Maximum-forward Hamilton path or cycle with a witness that is re-checked
/// before returning.
pub fn cmd_maxforward(
    d: &Digraph,
    name: &str,
    target: Target,
    method: MethodChoice,
    max_oracle_n: usize,
) -> Result<ResultReport, CliError> {
    let start = Instant::now();
    let mut report = cmd_analyze(d, name);
    let is_smd = report.class == Class::Smd;
    let chosen = match method {
        MethodChoice::Auto if is_smd => Method::Flow,
        MethodChoice::Auto if target == Target::Cycle && lsd_applicable(d) => Method::Lsd,
        MethodChoice::Auto => Method::Oracle,
        MethodChoice::Flow => Method::Flow,
        MethodChoice::Lsd => Method::Lsd,
        MethodChoice::Oracle => Method::Oracle,
    };
    let (sigma, walk): (Option<usize>, Option<OrientedWalk>) = match chosen {
        Method::Flow => {
            if !is_smd {
                return Err(mismatch("flow", "not a semicomplete multipartite digraph"));
            }
            let res = match target {
                Target::Path => max_forward_hamilton_path(d),
                Target::Cycle => max_forward_hamilton_cycle(d),
            }
            .map_err(|e| CliError::Solver(e.to_string()))?;
            if let Some(opt) = &res {
                report.certificates.factor_cost = Some(opt.factor_cost);
            }
            res.map_or((None, None), |o| (Some(o.sigma), Some(o.walk)))
        }
        Method::Lsd => {
            if target == Target::Path {
                return Err(mismatch("lsd", "only Hamilton cycles are solved for LSDs"));
            }
            if !lsd_applicable(d) {
                return Err(mismatch("lsd", "not a connected locally semicomplete digraph on >= 3 vertices"));
            }
            let res = max_forward_hamilton_cycle_lsd(d).map_err(|e| CliError::Solver(e.to_string()))?;
            if let Some(opt) = &res {
                report.certificates.distance_c1_cl = opt.distance;
            }
            res.map_or((None, None), |o| (Some(o.sigma), Some(o.walk)))
        }
        Method::Oracle => {
            let res = match target {
                Target::Path => brute_force_sigma_hp_bounded(d, max_oracle_n),
                Target::Cycle => brute_force_sigma_hc_bounded(d, max_oracle_n),
            }
            .map_err(oracle_error)?;
            res.map_or((None, None), |o| (Some(o.sigma), Some(o.witness)))
        }
    };
    report.method = Some(chosen);
    report.witness = walk.as_ref().map(Witness::from_walk);
    match target {
        Target::Path => report.sigma_hp = sigma,
        Target::Cycle => report.sigma_hc = sigma,
    }
    self_check(d, &report, target)?;
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(report)
}

/// Re-parses the emitted witness and recounts its `σ_max`.
pub fn self_check(d: &Digraph, report: &ResultReport, target: Target) -> Result<(), CliError> {
    let sigma = match target {
        Target::Path => report.sigma_hp,
        Target::Cycle => report.sigma_hc,
    };
    match (&report.witness, sigma) {
        (None, None) => Ok(()),
        (Some(w), Some(s)) => {
            let walk = w.to_walk(d)?;
            if !walk.is_spanning(d) || walk.is_closed() != (target == Target::Cycle) {
                return Err(CliError::SelfCheck("witness is not a Hamilton walk of the requested kind".into()));
            }
            if walk.sigma_max() != s {
                return Err(CliError::SelfCheck(format!("witness has sigma {} but {s} was reported", walk.sigma_max())));
            }
            Ok(())
        }
        _ => Err(CliError::SelfCheck("witness and sigma disagree on existence".into())),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckTarget {
    Conj1,
    Conj2,
    ThmDegreeSum,
    ThmClique,
    ThmApprox(usize),
}

impl CheckTarget {
    pub fn parse(s: &str, k: usize) -> Result<Self, CliError> {
        match s {
            "conj1" => Ok(CheckTarget::Conj1),
            "conj2" => Ok(CheckTarget::Conj2),
            "thm-degree-sum" => Ok(CheckTarget::ThmDegreeSum),
            "thm-clique" => Ok(CheckTarget::ThmClique),
            "thm-approx" => Ok(CheckTarget::ThmApprox(k)),
            _ => Err(CliError::Usage(format!(
                "unknown check target `{s}` (conj1|conj2|thm-degree-sum|thm-clique|thm-approx)"
            ))),
        }
    }

    pub fn label(self) -> String {
        match self {
            CheckTarget::Conj1 => "conj1".into(),
            CheckTarget::Conj2 => "conj2".into(),
            CheckTarget::ThmDegreeSum => "thm-degree-sum".into(),
            CheckTarget::ThmClique => "thm-clique".into(),
            CheckTarget::ThmApprox(k) => format!("thm-approx k={k}"),
        }
    }
}

pub fn check_one(d: &Digraph, name: &str, target: CheckTarget, max_oracle_n: usize) -> CheckEntry {
    let res = match target {
        CheckTarget::Conj1 => check_conjecture(d, Conjecture::One, max_oracle_n),
        CheckTarget::Conj2 => check_conjecture(d, Conjecture::Two, max_oracle_n),
        CheckTarget::ThmDegreeSum => check_theorem(d, Theorem::DegreeSum, max_oracle_n),
        CheckTarget::ThmClique => check_theorem(d, Theorem::CliqueNeighborhood, max_oracle_n),
        CheckTarget::ThmApprox(k) => check_theorem(d, Theorem::Approx(k), max_oracle_n),
    };
    match res {
        Ok(r) => CheckEntry {
            instance: name.to_string(),
            verdict: r.verdict.label().to_string(),
            sigma: r.sigma,
            bound: r.bound,
            stronger_bound_holds: r.stronger_bound_holds,
            note: r.note,
        },
        Err(e) => CheckEntry {
            instance: name.to_string(),
            verdict: "skipped".into(),
            sigma: None,
            bound: None,
            stronger_bound_holds: None,
            note: e.to_string(),
        },
    }
}

/// A named instance, loaded or generated.
pub type Named = (String, Digraph);

/// Files are taken as given; directories contribute every regular file
/// inside them, sorted by name.
pub fn load_inputs(paths: &[PathBuf]) -> Result<Vec<Named>, CliError> {
    let mut files = Vec::new();
    for p in paths {
        if p.is_dir() {
            let entries = std::fs::read_dir(p).map_err(|e| CliError::Io {
                path: p.display().to_string(),
                source: e,
            })?;
            let mut inside: Vec<PathBuf> = entries.filter_map(|e| e.ok().map(|e| e.path())).filter(|q| q.is_file()).collect();
            inside.sort();
            files.extend(inside);
        } else {
            files.push(p.clone());
        }
    }
    files
        .into_iter()
        .map(|f| {
            let d = read_instance(&f).map_err(|e| match e {
                CliError::Parse { line, msg } => CliError::Parse {
                    line,
                    msg: format!("{}: {msg}", f.display()),
                },
                other => other,
            })?;
            Ok((f.display().to_string(), d))
        })
        .collect()
}

fn parse_range(s: &str) -> Result<(usize, usize), CliError> {
    let bad = || CliError::Usage(format!("bad range `{s}` (expected A-B or A)"));
    match s.split_once('-') {
        Some((a, b)) => Ok((a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?)),
        None => {
            let a = s.parse().map_err(|_| bad())?;
            Ok((a, a))
        }
    }
}

/// Expands a sweep spec into named instances:
/// `construction1:NMIN-NMAX`, `construction2:NMIN-NMAX`,
/// `oriented:NMIN-NMAX:COUNT[:DENSITY]`, `tournament:NMIN-NMAX:COUNT`.
pub fn expand_sweep(spec: &str, seed: u64) -> Result<Vec<Named>, CliError> {
    let fields: Vec<&str> = spec.split(':').collect();
    let usage = || CliError::Usage(format!("bad sweep spec `{spec}`"));
    let (lo, hi) = parse_range(fields.get(1).ok_or_else(usage)?)?;
    let count: usize = match fields.get(2) {
        Some(c) => c.parse().map_err(|_| usage())?,
        None => 1,
    };
    let mut out = Vec::new();
    for n in lo..=hi {
        match fields[0] {
            "construction1" => {
                for delta in (2..n).take_while(|&dl| 2 * dl < n) {
                    let d = construction_1(n, delta).map_err(|e| CliError::Usage(e.to_string()))?;
                    out.push((format!("construction1-n{n:02}-delta{delta:02}"), d));
                }
            }
            "construction2" => {
                for k in 0..=n.saturating_sub(4) {
                    let d = construction_2(n, k).map_err(|e| CliError::Usage(e.to_string()))?;
                    out.push((format!("construction2-n{n:02}-k{k:02}"), d));
                }
            }
            "oriented" => {
                let density: f64 = match fields.get(3) {
                    Some(x) => x.parse().map_err(|_| usage())?,
                    None => 0.7,
                };
                for i in 0..count {
                    let s = seed.wrapping_add((n * 1_000_003 + i) as u64);
                    let d = random_oriented(n, density, s).map_err(|e| CliError::Usage(e.to_string()))?;
                    out.push((format!("oriented-n{n:02}-{i:04}"), d));
                }
            }
            "tournament" => {
                for i in 0..count {
                    let s = seed.wrapping_add((n * 1_000_003 + i) as u64);
                    out.push((format!("tournament-n{n:02}-{i:04}"), random_tournament(n, s)));
                }
            }
            _ => return Err(usage()),
        }
    }
    Ok(out)
}

/// Runs the checker over every instance on `jobs` threads (0 = all cores);
/// entries come back ordered by instance name.
pub fn cmd_check(
    instances: Vec<Named>,
    target: CheckTarget,
    max_oracle_n: usize,
    jobs: usize,
) -> Result<BatchReport, CliError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))?;
    let entries: Vec<CheckEntry> =
        pool.install(|| instances.par_iter().map(|(name, d)| check_one(d, name, target, max_oracle_n)).collect());
    Ok(BatchReport::new(target.label(), entries))
}

#[derive(Debug, Clone, Default)]
pub struct GenerateParams {
    pub n: Option<usize>,
    pub delta: Option<usize>,
    pub k: Option<usize>,
    pub sizes: Option<Vec<usize>>,
    pub density: Option<f64>,
    pub digon_prob: Option<f64>,
    pub shape: Option<String>,
    pub seed: u64,
}

/// Builds an instance and a one-line description of how it was made.
pub fn cmd_generate(kind: &str, p: &GenerateParams) -> Result<(Digraph, String), CliError> {
    let need = |v: Option<usize>, what: &str| v.ok_or_else(|| CliError::Usage(format!("{kind} needs --{what}")));
    let gen = |e: ExtremalError| CliError::Usage(e.to_string());
    let seed = p.seed;
    Ok(match kind {
        "construction1" => {
            let (n, delta) = (need(p.n, "n")?, need(p.delta, "delta")?);
            (construction_1(n, delta).map_err(gen)?, format!("construction1 n={n} delta={delta}"))
        }
        "construction2" => {
            let (n, k) = (need(p.n, "n")?, need(p.k, "k")?);
            (construction_2(n, k).map_err(gen)?, format!("construction2 n={n} k={k}"))
        }
        "tournament" => {
            let n = need(p.n, "n")?;
            (random_tournament(n, seed), format!("tournament n={n} seed={seed}"))
        }
        "oriented" => {
            let n = need(p.n, "n")?;
            let density = p.density.unwrap_or(0.7);
            (
                random_oriented(n, density, seed).map_err(gen)?,
                format!("oriented n={n} density={density} seed={seed}"),
            )
        }
        "smd" => {
            let sizes = p.sizes.clone().unwrap_or_else(|| vec![2, 2, 2]);
            let prob = p.digon_prob.unwrap_or(0.25);
            let list = sizes.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
            (
                random_smd_with(&sizes, prob, seed).map_err(gen)?,
                format!("smd sizes={list} digon_prob={prob} seed={seed}"),
            )
        }
        "lsd" => {
            let n = need(p.n, "n")?;
            let shape_name = p.shape.as_deref().unwrap_or("any");
            let shape = match shape_name {
                "strong" => LsdShape::Strong,
                "nonstrong" => LsdShape::NonStrong,
                "any" => LsdShape::Any,
                other => return Err(CliError::Usage(format!("unknown lsd shape `{other}`"))),
            };
            (random_lsd(n, shape, seed).map_err(gen)?, format!("lsd n={n} shape={shape_name} seed={seed}"))
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown kind `{other}` (construction1|construction2|tournament|oriented|smd|lsd)"
            )))
        }
    })
}

/// Writes to `out`, or stdout when absent.
pub fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io {
            path: p.display().to_string(),
            source: e,
        }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
