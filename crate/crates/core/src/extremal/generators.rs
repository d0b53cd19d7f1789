//! Seeded random instance generators. The same seed always yields the same
//! digraph.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::ExtremalError;
use crate::graph::Digraph;
use crate::lsd::is_locally_semicomplete;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn tournament_arcs(r: &mut ChaCha8Rng, vertices: &[usize], digon_prob: f64, arcs: &mut Vec<(usize, usize)>) {
    for (i, &u) in vertices.iter().enumerate() {
        for &v in &vertices[i + 1..] {
            if digon_prob > 0.0 && r.gen_bool(digon_prob) {
                arcs.push((u, v));
                arcs.push((v, u));
            } else if r.gen_bool(0.5) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
}

pub fn random_tournament(n: usize, seed: u64) -> Digraph {
    let mut r = rng(seed);
    let mut arcs = Vec::new();
    let all: Vec<usize> = (0..n).collect();
    tournament_arcs(&mut r, &all, 0.0, &mut arcs);
    Digraph::from_arcs(n, arcs).expect("distinct pairs")
}

/// Oriented graph where each pair is adjacent with probability `density`.
pub fn random_oriented(n: usize, density: f64, seed: u64) -> Result<Digraph, ExtremalError> {
    if !(0.0..=1.0).contains(&density) {
        return Err(ExtremalError::Parameter(format!("density {density} outside [0, 1]")));
    }
    let mut r = rng(seed);
    let mut d = Digraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if r.gen_bool(density) {
                let (a, b) = if r.gen_bool(0.5) { (u, v) } else { (v, u) };
                d.add_arc(a, b).expect("fresh pair");
            }
        }
    }
    Ok(d)
}

/// Semicomplete multipartite digraph with the given part sizes; vertex labels
/// are shuffled. Each cross pair becomes a digon with probability
/// `digon_prob`, otherwise a single arc of random direction.
pub fn random_smd_with(sizes: &[usize], digon_prob: f64, seed: u64) -> Result<Digraph, ExtremalError> {
    if sizes.len() < 2 || sizes.contains(&0) {
        return Err(ExtremalError::Parameter("need at least two non-empty parts".into()));
    }
    if !(0.0..=1.0).contains(&digon_prob) {
        return Err(ExtremalError::Parameter(format!("digon probability {digon_prob} outside [0, 1]")));
    }
    let n: usize = sizes.iter().sum();
    let mut r = rng(seed);
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut r);
    let mut part = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part.extend(std::iter::repeat_n(i, s));
    }
    let mut d = Digraph::new(n);
    for i in 0..n {
        for j in i + 1..n {
            if part[i] == part[j] {
                continue;
            }
            let (u, v) = (labels[i], labels[j]);
            if r.gen_bool(digon_prob) {
                d.add_arc(u, v).expect("fresh pair");
                d.add_arc(v, u).expect("fresh pair");
            } else if r.gen_bool(0.5) {
                d.add_arc(u, v).expect("fresh pair");
            } else {
                d.add_arc(v, u).expect("fresh pair");
            }
        }
    }
    Ok(d)
}

pub fn random_smd(sizes: &[usize], seed: u64) -> Result<Digraph, ExtremalError> {
    random_smd_with(sizes, 0.25, seed)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LsdShape {
    /// Round composition of strong semicomplete pieces; always strong.
    Strong,
    /// Chain of strong semicomplete components with forward reach; never strong.
    NonStrong,
    Any,
}

/// Strong semicomplete digraph on `vertices` (a single vertex or a digon for
/// sizes 1 and 2).
fn strong_piece(r: &mut ChaCha8Rng, vertices: &[usize], arcs: &mut Vec<(usize, usize)>) {
    let s = vertices.len();
    if s == 2 {
        arcs.push((vertices[0], vertices[1]));
        arcs.push((vertices[1], vertices[0]));
        return;
    }
    if s < 3 {
        return;
    }
    loop {
        let mut local = Vec::new();
        tournament_arcs(r, vertices, 0.15, &mut local);
        let mut index = std::collections::HashMap::new();
        for (i, &v) in vertices.iter().enumerate() {
            index.insert(v, i);
        }
        let sub = Digraph::from_arcs(s, local.iter().map(|&(u, v)| (index[&u], index[&v]))).expect("distinct pairs");
        if sub.is_strong() {
            arcs.extend(local);
            return;
        }
    }
}

fn random_composition(r: &mut ChaCha8Rng, n: usize, max_piece: usize) -> Vec<usize> {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = r.gen_range(1..=left.min(max_piece));
        sizes.push(s);
        left -= s;
    }
    sizes
}

fn pieces(sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let p: Vec<usize> = (start..start + s).collect();
            start += s;
            p
        })
        .collect()
}

fn build_lsd(r: &mut ChaCha8Rng, n: usize, strong: bool) -> Option<Digraph> {
    let max_piece = (n / 2).max(1);
    let sizes = random_composition(r, n, max_piece);
    let m = sizes.len();
    let parts = pieces(&sizes);
    let mut arcs = Vec::new();
    for p in &parts {
        strong_piece(r, p, &mut arcs);
    }
    if strong {
        if m < 3 {
            return None;
        }
        // piece i dominates pieces i+1 .. i+reach (mod m)
        let reach = r.gen_range(1..=(m - 1) / 2);
        for i in 0..m {
            for step in 1..=reach {
                let j = (i + step) % m;
                for &u in &parts[i] {
                    for &v in &parts[j] {
                        arcs.push((u, v));
                    }
                }
            }
        }
    } else {
        if m < 2 {
            return None;
        }
        // nondecreasing reach: component i dominates components i+1 ..= reach[i]
        let mut reach = vec![0; m];
        let mut prev = 0;
        for (i, slot) in reach.iter_mut().enumerate().take(m - 1) {
            let lo = prev.max(i + 1);
            let hi = (lo + r.gen_range(0..=2)).min(m - 1);
            *slot = r.gen_range(lo..=hi);
            prev = *slot;
        }
        for i in 0..m - 1 {
            for j in i + 1..=reach[i] {
                for &u in &parts[i] {
                    for &v in &parts[j] {
                        arcs.push((u, v));
                    }
                }
            }
        }
    }
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(r);
    let d = Digraph::from_arcs(n, arcs.into_iter().map(|(u, v)| (labels[u], labels[v]))).ok()?;
    Some(d)
}

/// Connected locally semicomplete digraph on `n` vertices. Candidates are
/// rejected unless the recognizer accepts them.
pub fn random_lsd(n: usize, shape: LsdShape, seed: u64) -> Result<Digraph, ExtremalError> {
    let min = match shape {
        LsdShape::Strong => 3,
        LsdShape::NonStrong => 2,
        LsdShape::Any => 2,
    };
    if n < min {
        return Err(ExtremalError::Parameter(format!("need n >= {min} for this shape, got {n}")));
    }
    let mut r = rng(seed);
    for _ in 0..1000 {
        let strong = match shape {
            LsdShape::Strong => true,
            LsdShape::NonStrong => false,
            LsdShape::Any => r.gen_bool(0.4),
        };
        if let Some(d) = build_lsd(&mut r, n, strong) {
            if d.is_connected() && is_locally_semicomplete(&d) && d.is_strong() == strong {
                return Ok(d);
            }
        }
    }
    Err(ExtremalError::SearchExhausted("no locally semicomplete candidate accepted".into()))
}
