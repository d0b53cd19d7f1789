use hamdisc::extremal::*;
use hamdisc::{Digraph, OrientedWalk};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Path `0 .. m-1` plus extra vertices `m .. m+k` joined to every path vertex.
fn insertion_instance(m: usize, k: usize, seed: u64) -> (Digraph, OrientedWalk, Vec<usize>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = m + k;
    let mut d = Digraph::new(n);
    let orient = |d: &mut Digraph, u: usize, v: usize, rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            d.add_arc(u, v).unwrap();
        } else {
            d.add_arc(v, u).unwrap();
        }
    };
    for u in 0..n {
        for v in u + 1..n {
            let required = v == u + 1 && v < m || (u < m && v >= m);
            if required || rng.gen_bool(0.4) {
                orient(&mut d, u, v, &mut rng);
            }
        }
    }
    let p = OrientedWalk::from_vertices(&d, (0..m).collect(), false).unwrap();
    (d, p, (m..n).collect())
}

/// Best σ⁺ over all ways of placing `s` into distinct gaps of `path`.
fn best_placement(d: &Digraph, path: &[usize], s: &[usize]) -> usize {
    fn rec(d: &Digraph, path: &[usize], s: &[usize], slot: &mut Vec<Option<usize>>, used: &mut Vec<bool>, best: &mut usize) {
        if used.iter().all(|&u| u) {
            let mut order = Vec::new();
            for (i, &u) in path.iter().enumerate() {
                order.push(u);
                if let Some(Some(v)) = slot.get(i) {
                    order.push(*v);
                }
            }
            let w = OrientedWalk::from_vertices(d, order, false).unwrap();
            *best = (*best).max(w.sigma_stats().forward);
            return;
        }
        for gap in 0..path.len() - 1 {
            if slot[gap].is_some() {
                continue;
            }
            for j in 0..s.len() {
                if !used[j] {
                    used[j] = true;
                    slot[gap] = Some(s[j]);
                    rec(d, path, s, slot, used, best);
                    slot[gap] = None;
                    used[j] = false;
                }
            }
        }
    }
    let mut best = 0;
    rec(d, path, s, &mut vec![None; path.len()], &mut vec![false; s.len()], &mut best);
    best
}

#[test]
fn insertion_never_loses_forward_arcs() {
    let mut seed = 0;
    for m in 2..=8usize {
        for k in 0..=3usize.min(m - 2) {
            for _ in 0..15 {
                seed += 1;
                let (d, p, s) = insertion_instance(m, k, seed);
                let q = insert_vertices_preserving_sigma(&d, &p, &s).unwrap();
                q.validate(&d).unwrap();
                assert_eq!(q.len(), m + k);
                assert_eq!((q.vertices()[0], q.vertices()[m + k - 1]), (0, m - 1));
                // inserted vertices never sit next to each other
                let is_s = |v: usize| v >= m;
                assert!(q.vertices().windows(2).all(|w| !(is_s(w[0]) && is_s(w[1]))));
                let before = p.sigma_stats().forward;
                let after = q.sigma_stats().forward;
                assert!(after >= before, "{d:?}");
                assert!(after <= best_placement(&d, p.vertices(), &s));

                let qm = insert_vertices_preserving_sigma_minus(&d, &p, &s).unwrap();
                qm.validate(&d).unwrap();
                assert!(qm.sigma_stats().backward >= p.sigma_stats().backward);
            }
        }
    }
}

#[test]
fn insertion_rejects_bad_input() {
    let (d, p, _) = insertion_instance(4, 2, 3);
    assert!(insert_vertices_preserving_sigma(&d, &p, &[0]).is_err());
    let closed = OrientedWalk::from_vertices(&Digraph::from_arcs(3, [(0, 1), (1, 2), (2, 0)]).unwrap(), vec![0, 1, 2], true)
        .unwrap();
    assert!(insert_vertices_preserving_sigma(&d, &closed, &[]).is_err());
}

#[test]
fn swaps_lose_at_most_four() {
    for seed in 0..120u64 {
        let n = 3 + (seed as usize % 6);
        let t = random_tournament(n, seed);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed + 1000));
        let c = OrientedWalk::from_vertices(&t, order, true).unwrap();
        let before = c.sigma_stats().forward;
        for i in 0..n {
            for j in i + 1..n {
                let c2 = swap_vertices_tournament_cycle(&t, &c, i, j).unwrap();
                let after = c2.sigma_stats().forward;
                let adjacent = j == i + 1 || (i == 0 && j == n - 1);
                let limit = if adjacent { 3 } else { 4 };
                assert!(after + limit >= before, "n={n} i={i} j={j}");
            }
        }
    }
}

#[test]
fn swap_on_forward_four_cycle() {
    // 0->1->2->3->0 plus chords 0->2, 1->3
    let t = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)]).unwrap();
    let c = OrientedWalk::from_vertices(&t, vec![0, 1, 2, 3], true).unwrap();
    assert_eq!(c.sigma_stats().forward, 4);
    let c2 = swap_vertices_tournament_cycle(&t, &c, 1, 2).unwrap();
    assert!(c2.sigma_stats().forward >= 1);
    let not_tournament = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let c = OrientedWalk::from_vertices(&not_tournament, vec![0, 1, 2, 3], true).unwrap();
    assert!(swap_vertices_tournament_cycle(&not_tournament, &c, 0, 1).is_err());
}

#[test]
fn four_figure_diamonds_found_alone() {
    // roles a=0, b=1, c=2, d=3, arc a->b; c and d share their relation to a, b
    for (ca, cb) in [(true, true), (true, false), (false, true), (false, false)] {
        let mut arcs = vec![(0, 1)];
        for x in [2, 3] {
            arcs.push(if ca { (x, 0) } else { (0, x) });
            arcs.push(if cb { (x, 1) } else { (1, x) });
        }
        let g = Digraph::from_arcs(8, arcs).unwrap();
        let set = find_good_diamonds(&g, 1).unwrap();
        assert!(set.is_valid_for(&g));
        let m = &set.members[0];
        let mut cd = [m.c, m.d];
        cd.sort();
        assert_eq!(cd, [2, 3]);
    }
}

fn dense_instance(n: usize, min_s: i64, mut seed: u64) -> (Digraph, u64) {
    let density = 0.88 + 0.03 * (min_s as f64 / 8.0);
    loop {
        let d = random_oriented(n, density, seed).unwrap();
        seed += 1;
        if condition_report(&d).s_star >= min_s {
            return (d, seed);
        }
    }
}

#[test]
fn diamonds_in_dense_random_graphs() {
    let mut seed = 0;
    for k in 1..=3 {
        let (d, next) = dense_instance(30 + 4 * (k - 1), 8 * k as i64, seed);
        seed = next;
        let set = find_good_diamonds(&d, k).expect("lemma guarantees diamonds");
        assert_eq!(set.len(), k);
        assert!(set.is_valid_for(&d));
    }
}

#[test]
fn forced_edges_match_exhaustive_search() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut tried = 0;
    while tried < 150 {
        let n = rng.gen_range(4..=10);
        let d = random_oriented(n, rng.gen_range(0.55..0.95), rng.gen()).unwrap();
        let g = UndirectedGraph::underlying(&d);
        let s = g.s_star();
        if s < 0 {
            continue;
        }
        // random path forest of at most s* edges, taken from a Hamilton cycle of g
        let Some(base) = hamilton_cycle_with_forced_edges_exact(&g, &[]).unwrap() else {
            panic!("Ore graph without a Hamilton cycle");
        };
        let mut edges: Vec<(usize, usize)> = (0..n).map(|i| (base[i], base[(i + 1) % n])).collect();
        edges.shuffle(&mut rng);
        edges.truncate(rng.gen_range(0..=(s as usize).min(n - 1)));
        tried += 1;
        let c = hamilton_cycle_with_forced_edges(&g, &edges).unwrap();
        assert!(g.is_hamilton_cycle(&c));
        assert!(cycle_contains_edges(&c, &edges));
    }
}

#[test]
fn forced_edges_on_k5_and_c4() {
    let k5 = UndirectedGraph::complete(5);
    let c = hamilton_cycle_with_forced_edges(&k5, &[(1, 4), (4, 2)]).unwrap();
    assert!(cycle_contains_edges(&c, &[(1, 4), (4, 2)]));
    let c4 = UndirectedGraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
    let c = hamilton_cycle_with_forced_edges_exact(&c4, &[(0, 1), (2, 3)]).unwrap().unwrap();
    assert!(c4.is_hamilton_cycle(&c));
}

#[test]
fn approx_pipeline_reaches_target() {
    let mut seed = 100;
    for k in 0..=2usize {
        for _ in 0..4 {
            let n = 30 + 4 * k.saturating_sub(1);
            let (d, next) = dense_instance(n, 8 * k as i64, seed);
            seed = next;
            let out = approx_discrepancy_cycle(&d, k).unwrap();
            out.cycle.validate(&d).unwrap();
            assert!(out.cycle.is_closed() && out.cycle.is_spanning(&d));
            assert!(out.cycle.sigma_max() >= (n + k).div_ceil(2));
            assert_eq!(arc_bound_holds(&d), Some(true));
        }
    }
}

#[test]
fn approx_rejects_small_or_sparse() {
    let d = random_oriented(20, 0.9, 1).unwrap();
    assert!(matches!(approx_discrepancy_cycle(&d, 1), Err(hamdisc::ExtremalError::Precondition(_))));
    let d = random_oriented(30, 0.3, 1).unwrap();
    assert!(matches!(approx_discrepancy_cycle(&d, 1), Err(hamdisc::ExtremalError::Precondition(_))));
}

#[test]
fn construction_grid() {
    for n in 5..=10 {
        for delta in 2..n {
            if 2 * delta >= n {
                break;
            }
            let d = construction_1(n, delta).unwrap();
            let r = condition_report(&d);
            assert!(r.ore_holds && r.min_degree == delta);
            assert_eq!(brute_force_sigma_hc(&d).unwrap().unwrap().sigma, n - delta);
        }
        for k in 0..=n - 4 {
            let d = construction_2(n, k).unwrap();
            assert_eq!(condition_report(&d).s_star, k as i64);
            assert_eq!(brute_force_sigma_hc(&d).unwrap().unwrap().sigma, (n + k).div_ceil(2));
        }
    }
}

#[test]
fn checkers_on_small_sweep() {
    for seed in 0..150u64 {
        let n = 4 + (seed as usize % 5);
        let d = random_oriented(n, 0.75, seed).unwrap();
        for c in [Conjecture::One, Conjecture::Two] {
            assert_ne!(check_conjecture(&d, c, ORACLE_BOUND).unwrap().verdict, Verdict::Fails);
        }
        for t in [Theorem::DegreeSum, Theorem::CliqueNeighborhood] {
            assert_ne!(check_theorem(&d, t, ORACLE_BOUND).unwrap().verdict, Verdict::Fails);
        }
        if let Some(ok) = arc_bound_holds(&d) {
            assert!(ok);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn oracle_invariant_under_relabel_and_reversal(n in 3usize..=8, density in 0.4f64..1.0, seed in any::<u64>()) {
        let d = random_oriented(n, density, seed).unwrap();
        let base = brute_force_sigma_hc(&d).unwrap().map(|r| r.sigma);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        prop_assert_eq!(brute_force_sigma_hc(&d.relabeled(&perm)).unwrap().map(|r| r.sigma), base);
        prop_assert_eq!(brute_force_sigma_hc(&d.reversed()).unwrap().map(|r| r.sigma), base);
        if let Some(s) = base {
            prop_assert!(s >= n.div_ceil(2));
        }
    }

    #[test]
    fn constructions_report_their_parameters(n in 5usize..=14, a in 0usize..10) {
        if n > 4 {
            let k = a % (n - 3);
            let d = construction_2(n, k).unwrap();
            prop_assert_eq!(condition_report(&d).s_star, k as i64);
        }
        let delta = 2 + a % 4;
        if n > 2 * delta {
            let d = construction_1(n, delta).unwrap();
            let r = condition_report(&d);
            prop_assert!(r.ore_holds);
            prop_assert_eq!(r.min_degree, delta);
        }
    }
}
