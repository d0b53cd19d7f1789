//! The two tightness constructions.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::ExtremalError;
use crate::graph::Digraph;

/// Orientation of the clique side of a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum CliqueOrientation {
    /// `b_i -> b_j` for `i < j`.
    #[default]
    Transitive,
    /// A uniformly random tournament from the given seed.
    Random(u64),
}

fn orient_clique(d: &mut Digraph, clique: &[usize], how: CliqueOrientation) {
    match how {
        CliqueOrientation::Transitive => {
            for (i, &u) in clique.iter().enumerate() {
                for &v in &clique[i + 1..] {
                    d.add_arc(u, v).expect("fresh pair");
                }
            }
        }
        CliqueOrientation::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for (i, &u) in clique.iter().enumerate() {
                for &v in &clique[i + 1..] {
                    let arc = *[(u, v), (v, u)].choose(&mut rng).unwrap();
                    d.add_arc(arc.0, arc.1).expect("fresh pair");
                }
            }
        }
    }
}

/// Vertex 0 is `v_0`, vertices `1..=delta` form the independent set `A`, the
/// rest form the clique `B`. Arcs: `v_0 -> A`, `B -> A`, `B` transitive.
pub fn construction_1(n: usize, delta: usize) -> Result<Digraph, ExtremalError> {
    construction_1_with(n, delta, CliqueOrientation::Transitive)
}

pub fn construction_1_with(n: usize, delta: usize, how: CliqueOrientation) -> Result<Digraph, ExtremalError> {
    if delta < 2 || n <= 2 * delta {
        return Err(ExtremalError::Parameter(format!(
            "need delta >= 2 and n > 2 delta, got n = {n}, delta = {delta}"
        )));
    }
    let mut d = Digraph::new(n);
    let a: Vec<usize> = (1..=delta).collect();
    let b: Vec<usize> = (delta + 1..n).collect();
    for &x in &a {
        d.add_arc(0, x).expect("fresh pair");
        for &y in &b {
            d.add_arc(y, x).expect("fresh pair");
        }
    }
    orient_clique(&mut d, &b, how);
    Ok(d)
}

/// Sizes `(|A|, |B|, epsilon)` of the second construction.
pub fn construction_2_sizes(n: usize, k: usize) -> (usize, usize, usize) {
    let eps = (n + k) % 2;
    ((n - k - eps) / 2, (n + k + eps) / 2, eps)
}

/// `A = 0..|A|` independent, `B = |A|..n` a clique, `B -> A`, with the pair
/// (first of `A`, first of `B`) left non-adjacent when `n + k` is odd.
pub fn construction_2(n: usize, k: usize) -> Result<Digraph, ExtremalError> {
    construction_2_with(n, k, CliqueOrientation::Transitive)
}

pub fn construction_2_with(n: usize, k: usize, how: CliqueOrientation) -> Result<Digraph, ExtremalError> {
    if n < k + 4 {
        return Err(ExtremalError::Parameter(format!("need n >= k + 4, got n = {n}, k = {k}")));
    }
    let (size_a, _, eps) = construction_2_sizes(n, k);
    let mut d = Digraph::new(n);
    let b: Vec<usize> = (size_a..n).collect();
    for x in 0..size_a {
        for &y in &b {
            if eps == 1 && x == 0 && y == size_a {
                continue;
            }
            d.add_arc(y, x).expect("fresh pair");
        }
    }
    orient_clique(&mut d, &b, how);
    Ok(d)
}
