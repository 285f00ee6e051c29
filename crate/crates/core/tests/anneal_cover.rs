mod common;

use motifcc::anneal::{
    anneal, best_community_agreement, communities_of, default_weights,
    is_intersection_representation, normalized_score, score, score_delta, AcceptScale,
    AnnealParams, FeatureAssignment,
};
use motifcc::oracles::exact_best_assignment;
use motifcc::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{all_graphs, karate, karate_factions};

fn all_assignments(n: usize, m: usize) -> impl Iterator<Item = FeatureAssignment> {
    let states = 1usize << (m * n);
    (0..states).map(move |s| {
        let masks = (0..n)
            .map(|v| ((s >> (m * v)) & ((1 << m) - 1)) as u64)
            .collect();
        FeatureAssignment::from_masks(m, masks).unwrap()
    })
}

#[test]
fn perfect_score_iff_intersection_representation() {
    for n in 1..=4 {
        for g in all_graphs(n).filter(|g| g.edge_count() > 0) {
            let w = default_weights(&g);
            for m in 1..=2 {
                for a in all_assignments(n, m) {
                    let perfect = (normalized_score(&g, &a, &w) - 1.0).abs() < 1e-12;
                    assert_eq!(perfect, is_intersection_representation(&g, &a));
                }
            }
        }
    }
}

#[test]
fn perfect_score_iff_representation_five_vertices() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for g in all_graphs(5).filter(|g| g.edge_count() > 0).step_by(7) {
        let w = default_weights(&g);
        for a in all_assignments(5, 2).filter(|_| rng.gen_bool(0.25)) {
            let perfect = (normalized_score(&g, &a, &w) - 1.0).abs() < 1e-12;
            assert_eq!(perfect, is_intersection_representation(&g, &a));
        }
    }
}

#[test]
fn each_category_carries_at_most_the_edge_count() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..30 {
        let g = Graph::random(rng.gen_range(3..12), 0.4, &mut rng);
        let w = default_weights(&g);
        let e = g.edge_count() as f64;
        let max = motifcc::anneal::max_score(&g, &w);
        let categories = [w.edge, w.nonedge, w.triangle, w.nontriangle]
            .iter()
            .filter(|&&x| x > 0.0)
            .count();
        assert!((max - e * categories as f64).abs() < 1e-9);
    }
}

#[test]
fn deltas_match_recomputation() {
    let mut rng = ChaCha8Rng::seed_from_u64(30);
    let g = Graph::random(8, 0.5, &mut rng);
    let w = default_weights(&g);
    let mut a = FeatureAssignment::empty(8, 3).unwrap();
    for _ in 0..1000 {
        let u = rng.gen_range(0..8);
        let new = rng.gen_range(0..8u64);
        let mut b = a.clone();
        b.set_mask(u, new);
        let full = score(&g, &b, &w) - score(&g, &a, &w);
        assert!((score_delta(&g, &a, u, new, &w) - full).abs() <= 1e-9);
        a = b;
    }
}

#[test]
fn anneal_never_beats_the_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..40 {
        let n = rng.gen_range(3..=6);
        let g = Graph::random(n, 0.5, &mut rng);
        let w = default_weights(&g);
        let m = rng.gen_range(1..=2);
        let (_, best) = exact_best_assignment(&g, m, &w).unwrap();
        for accept in [AcceptScale::Raw, AcceptScale::Normalized] {
            let p = AnnealParams {
                accept,
                ..AnnealParams::new(m, rng.gen())
            }
            .restarts(10);
            let out = anneal(&g, &p, &w).unwrap();
            assert!(out.score <= best + 1e-9);
        }
    }
}

#[test]
fn six_vertex_instances_reach_the_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(66);
    for _ in 0..20 {
        let g = Graph::random(6, 0.5, &mut rng);
        let w = default_weights(&g);
        let (_, best) = exact_best_assignment(&g, 2, &w).unwrap();
        let out = anneal(&g, &AnnealParams::new(2, rng.gen()).restarts(10), &w).unwrap();
        assert!((out.score - best).abs() < 1e-9, "{} vs {best}", out.score);
    }
}

#[test]
fn karate_two_features() {
    let g = karate();
    let w = default_weights(&g);
    let factions = karate_factions();
    let mut sets = vec![Vec::new(); 34];
    for (k, f) in factions.iter().enumerate() {
        for &v in f {
            sets[v].push(k + 1);
        }
    }
    let reference = normalized_score(&g, &FeatureAssignment::from_sets(2, &sets).unwrap(), &w);
    assert!((reference - 0.780_890_891_777).abs() < 1e-9);

    let out = anneal(&g, &AnnealParams::new(2, 0).restarts(10), &w).unwrap();
    assert_eq!(out.rounds, 2398);
    assert!(out.normalized_score >= reference);
    let communities = communities_of(&out.assignment);
    assert_eq!(communities.len(), 2);
    // vertex 3 of the input sits in both communities
    assert!(communities.iter().all(|c| c.contains(&2)));
    let agreement = best_community_agreement(34, &communities, &factions);
    assert!(agreement.iter().all(|&k| k >= 27), "{agreement:?}");
}
