//! Overlapping communities from approximate edge-triangle intersection
//! representations.
//!
//! Every vertex gets a subset of the features `1..=M`. A pair is rewarded when
//! it is an edge whose endpoints share a feature, or a nonedge whose endpoints
//! share none; a triple is rewarded when it is a triangle whose three vertices
//! share a feature, or a non-triangle whose vertices share none. Each vertex
//! set holding one feature is a community.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, Graph};
use crate::tuples::{self, choose2, choose3};

pub const MAX_FEATURES: usize = 64;

/// Per-vertex feature subsets, stored as bitmasks (bit `k - 1` is feature `k`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FeatureAssignment {
    m: usize,
    sets: Vec<u64>,
}

impl FeatureAssignment {
    pub fn empty(n: usize, m: usize) -> Result<Self> {
        check_m(m)?;
        Ok(FeatureAssignment {
            m,
            sets: vec![0; n],
        })
    }

    /// Every vertex holds exactly `features` (1-based).
    pub fn uniform(n: usize, m: usize, features: &[usize]) -> Result<Self> {
        let mask = features_to_mask(m, features)?;
        Ok(FeatureAssignment {
            m,
            sets: vec![mask; n],
        })
    }

    /// From per-vertex 1-based feature lists.
    pub fn from_sets(m: usize, sets: &[Vec<usize>]) -> Result<Self> {
        check_m(m)?;
        let sets = sets
            .iter()
            .map(|s| features_to_mask(m, s))
            .collect::<Result<_>>()?;
        Ok(FeatureAssignment { m, sets })
    }

    pub fn from_masks(m: usize, sets: Vec<u64>) -> Result<Self> {
        check_m(m)?;
        if sets.iter().any(|&s| s & !full_mask(m) != 0) {
            return Err(Error::config(format!(
                "feature mask uses bits beyond M = {m}"
            )));
        }
        Ok(FeatureAssignment { m, sets })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.sets.len()
    }

    #[inline]
    pub fn mask(&self, v: usize) -> u64 {
        self.sets[v]
    }

    pub fn masks(&self) -> &[u64] {
        &self.sets
    }

    pub fn set_mask(&mut self, v: usize, mask: u64) {
        debug_assert_eq!(mask & !full_mask(self.m), 0);
        self.sets[v] = mask;
    }

    /// 1-based features of `v`, ascending.
    pub fn features(&self, v: usize) -> Vec<usize> {
        (0..self.m)
            .filter(|k| self.sets[v] >> k & 1 == 1)
            .map(|k| k + 1)
            .collect()
    }
}

fn check_m(m: usize) -> Result<()> {
    if (1..=MAX_FEATURES).contains(&m) {
        Ok(())
    } else {
        Err(Error::config(format!(
            "feature count M = {m} must be in 1..={MAX_FEATURES}"
        )))
    }
}

#[inline]
fn full_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

fn features_to_mask(m: usize, features: &[usize]) -> Result<u64> {
    check_m(m)?;
    features.iter().try_fold(0u64, |acc, &f| {
        if (1..=m).contains(&f) {
            Ok(acc | 1 << (f - 1))
        } else {
            Err(Error::config(format!("feature {f} is outside 1..={m}")))
        }
    })
}

/// Non-empty communities in feature order: community `k` holds every vertex
/// carrying feature `k`.
pub fn communities_of(a: &FeatureAssignment) -> Vec<Vec<usize>> {
    (0..a.m)
        .map(|k| {
            (0..a.n())
                .filter(|&v| a.sets[v] >> k & 1 == 1)
                .collect::<Vec<_>>()
        })
        .filter(|c| !c.is_empty())
        .collect()
}

/// Vertices on which membership in `community` matches membership in
/// `faction`.
pub fn indicator_agreement(n: usize, community: &[usize], faction: &[usize]) -> usize {
    (0..n)
        .filter(|v| community.contains(v) == faction.contains(v))
        .count()
}

/// For each truth class, the best indicator agreement achieved by any
/// community.
pub fn best_community_agreement(
    n: usize,
    communities: &[Vec<usize>],
    truth: &[Vec<usize>],
) -> Vec<usize> {
    truth
        .iter()
        .map(|f| {
            communities
                .iter()
                .map(|c| indicator_agreement(n, c, f))
                .max()
                .unwrap_or(n - f.len())
        })
        .collect()
}

/// Rewards for satisfied edges, nonedges, triangles and non-triangle triples.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScoreWeights {
    pub edge: f64,
    pub nonedge: f64,
    pub triangle: f64,
    pub nontriangle: f64,
}

impl ScoreWeights {
    pub fn ones() -> Self {
        ScoreWeights {
            edge: 1.0,
            nonedge: 1.0,
            triangle: 1.0,
            nontriangle: 1.0,
        }
    }

    fn as_array(&self) -> [f64; 4] {
        [self.edge, self.nonedge, self.triangle, self.nontriangle]
    }

    pub fn validate(&self) -> Result<()> {
        if self.as_array().iter().all(|w| w.is_finite() && *w >= 0.0) {
            Ok(())
        } else {
            Err(Error::config(
                "score weights must be finite and non-negative",
            ))
        }
    }
}

/// Weights that give each category the same total mass `|E|`. A category
/// with no members gets weight 0.
pub fn default_weights(g: &Graph) -> ScoreWeights {
    let sizes = CategorySizes::of(g);
    let e = sizes.edges as f64;
    let ratio = |count: usize| if count == 0 { 0.0 } else { e / count as f64 };
    ScoreWeights {
        edge: 1.0,
        nonedge: ratio(sizes.nonedges),
        triangle: ratio(sizes.triangles),
        nontriangle: ratio(sizes.nontriangles),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CategorySizes {
    pub edges: usize,
    pub nonedges: usize,
    pub triangles: usize,
    pub nontriangles: usize,
}

impl CategorySizes {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let edges = g.edge_count();
        let triangles = enumerate_triangles(g).len();
        CategorySizes {
            edges,
            nonedges: choose2(n) - edges,
            triangles,
            nontriangles: choose3(n) - triangles,
        }
    }

    fn as_array(&self) -> [usize; 4] {
        [self.edges, self.nonedges, self.triangles, self.nontriangles]
    }
}

/// Satisfied-term counts per category, in the order edges, nonedges,
/// triangles, non-triangles.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ScoreCounts(pub [i64; 4]);

impl ScoreCounts {
    pub fn weighted(&self, w: &ScoreWeights) -> f64 {
        self.0
            .iter()
            .zip(w.as_array())
            .map(|(&c, w)| c as f64 * w)
            .sum()
    }

    fn add(&mut self, other: &ScoreCounts) {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a += b;
        }
    }
}

/// Count satisfied terms over all pairs and triples.
pub fn score_counts(g: &Graph, a: &FeatureAssignment) -> ScoreCounts {
    let mut c = [0i64; 4];
    for (u, v) in tuples::pairs(g.n()) {
        let shared = a.mask(u) & a.mask(v) != 0;
        match (g.has_edge(u, v), shared) {
            (true, true) => c[0] += 1,
            (false, false) => c[1] += 1,
            _ => {}
        }
    }
    for [x, y, z] in tuples::triples(g.n()) {
        let shared = a.mask(x) & a.mask(y) & a.mask(z) != 0;
        match (g.is_triangle(x, y, z), shared) {
            (true, true) => c[2] += 1,
            (false, false) => c[3] += 1,
            _ => {}
        }
    }
    ScoreCounts(c)
}

pub fn score(g: &Graph, a: &FeatureAssignment, w: &ScoreWeights) -> f64 {
    score_counts(g, a).weighted(w)
}

/// Best attainable score: the weighted size of every category.
pub fn max_score(g: &Graph, w: &ScoreWeights) -> f64 {
    max_score_from_sizes(&CategorySizes::of(g), w)
}

fn max_score_from_sizes(sizes: &CategorySizes, w: &ScoreWeights) -> f64 {
    sizes
        .as_array()
        .iter()
        .zip(w.as_array())
        .map(|(&s, w)| s as f64 * w)
        .sum()
}

/// Score divided by [`max_score`]; 1 exactly when every weighted term is
/// satisfied. Defined as 1 when nothing carries weight.
pub fn normalized_score(g: &Graph, a: &FeatureAssignment, w: &ScoreWeights) -> f64 {
    normalize(score(g, a, w), max_score(g, w))
}

fn normalize(score: f64, max: f64) -> f64 {
    if max > 0.0 {
        score / max
    } else {
        1.0
    }
}

/// Change in satisfied counts when `u` switches to `new_mask`, from the
/// `n - 1` pairs and `C(n-1, 2)` triples containing `u`.
pub fn count_delta(g: &Graph, a: &FeatureAssignment, u: usize, new_mask: u64) -> ScoreCounts {
    let old_mask = a.mask(u);
    let mut c = [0i64; 4];
    if old_mask == new_mask {
        return ScoreCounts(c);
    }
    let n = g.n();
    let sat = |hit: bool, present: bool| i64::from(hit == present);
    for v in (0..n).filter(|&v| v != u) {
        let adj = g.has_edge(u, v);
        let old = a.mask(v) & old_mask != 0;
        let new = a.mask(v) & new_mask != 0;
        let idx = if adj { 0 } else { 1 };
        c[idx] += sat(new, adj) - sat(old, adj);
    }
    for v in (0..n).filter(|&v| v != u) {
        let (old_uv, new_uv) = (a.mask(v) & old_mask, a.mask(v) & new_mask);
        let adj_uv = g.has_edge(u, v);
        for w in (v + 1..n).filter(|&w| w != u) {
            let tri = adj_uv && g.has_edge(u, w) && g.has_edge(v, w);
            let old = old_uv & a.mask(w) != 0;
            let new = new_uv & a.mask(w) != 0;
            let idx = if tri { 2 } else { 3 };
            c[idx] += sat(new, tri) - sat(old, tri);
        }
    }
    ScoreCounts(c)
}

/// `score(A with u -> new_mask) - score(A)`, in `O(n^2)`.
pub fn score_delta(
    g: &Graph,
    a: &FeatureAssignment,
    u: usize,
    new_mask: u64,
    w: &ScoreWeights,
) -> f64 {
    count_delta(g, a, u, new_mask).weighted(w)
}

/// Whether the assignment is an exact edge-triangle intersection
/// representation: adjacency iff a shared feature, triangle iff a feature
/// common to all three.
pub fn is_intersection_representation(g: &Graph, a: &FeatureAssignment) -> bool {
    let sizes = CategorySizes::of(g);
    let c = score_counts(g, a).0;
    c.iter()
        .zip(sizes.as_array())
        .all(|(&got, total)| got as usize == total)
}

/// Quantity the acceptance rule exponentiates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum AcceptScale {
    /// Weighted score change.
    #[default]
    Raw,
    /// Change in normalized score.
    Normalized,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum InitRule {
    /// Every vertex starts with no features.
    #[default]
    Empty,
    /// Every vertex starts with a uniformly random subset.
    Random,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnealParams {
    pub m: usize,
    /// Inverse temperature; `None` means `M`.
    pub mu: Option<f64>,
    /// Rounds per chain; `None` means `ceil(rounds_factor * n * ln n)`.
    pub rounds: Option<usize>,
    pub rounds_factor: f64,
    pub seed: u64,
    pub restarts: usize,
    pub init: InitRule,
    pub accept: AcceptScale,
}

impl AnnealParams {
    pub fn new(m: usize, seed: u64) -> Self {
        AnnealParams {
            m,
            mu: None,
            rounds: None,
            rounds_factor: 20.0,
            seed,
            restarts: 1,
            init: InitRule::Empty,
            accept: AcceptScale::Raw,
        }
    }

    pub fn restarts(mut self, restarts: usize) -> Self {
        self.restarts = restarts;
        self
    }

    pub fn mu(&self) -> f64 {
        self.mu.unwrap_or(self.m as f64)
    }

    pub fn rounds_for(&self, n: usize) -> usize {
        self.rounds
            .unwrap_or_else(|| default_rounds(n, self.rounds_factor))
    }

    pub fn validate(&self) -> Result<()> {
        check_m(self.m)?;
        if self.restarts == 0 {
            return Err(Error::config("restarts must be >= 1"));
        }
        if self.rounds == Some(0) {
            return Err(Error::config("rounds must be >= 1"));
        }
        if !(self.mu() >= 0.0 && self.mu().is_finite()) {
            return Err(Error::config("mu must be finite and >= 0"));
        }
        Ok(())
    }
}

/// `ceil(factor * n * ln n)`, at least 1.
pub fn default_rounds(n: usize, factor: f64) -> usize {
    let n = n as f64;
    ((factor * n * n.ln()).ceil() as usize).max(1)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AnnealOutcome {
    pub assignment: FeatureAssignment,
    pub score: f64,
    pub normalized_score: f64,
    /// Best normalized score after each round of the winning chain.
    pub trace: Vec<f64>,
    /// Seed of the winning chain.
    pub seed: u64,
    pub rounds: usize,
}

/// Seed of restart `i` for base seed `seed`.
pub fn chain_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_add(i as u64)
}

/// Simulated annealing over feature assignments. Runs `restarts` independent
/// chains (in parallel) and returns the best assignment any of them observed;
/// ties go to the earliest chain.
pub fn anneal(g: &Graph, params: &AnnealParams, w: &ScoreWeights) -> Result<AnnealOutcome> {
    params.validate()?;
    w.validate()?;
    let max = max_score(g, w);
    let chains: Vec<AnnealOutcome> = (0..params.restarts)
        .into_par_iter()
        .map(|i| run_chain(g, params, w, max, chain_seed(params.seed, i)))
        .collect();
    Ok(chains
        .into_iter()
        .reduce(|best, c| if c.score > best.score { c } else { best })
        .expect("restarts >= 1"))
}

fn run_chain(
    g: &Graph,
    params: &AnnealParams,
    w: &ScoreWeights,
    max: f64,
    seed: u64,
) -> AnnealOutcome {
    let n = g.n();
    let m = params.m;
    let mask = full_mask(m);
    let mu = params.mu();
    let rounds = params.rounds_for(n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut a = FeatureAssignment {
        m,
        sets: vec![0; n],
    };
    if params.init == InitRule::Random {
        for s in &mut a.sets {
            *s = rng.gen::<u64>() & mask;
        }
    }
    let mut counts = score_counts(g, &a);
    let mut current = counts.weighted(w);
    let mut best = (current, a.clone());
    let mut trace = Vec::with_capacity(rounds);

    for _ in 0..rounds {
        let u = rng.gen_range(0..n);
        let proposal = rng.gen::<u64>() & mask;
        let delta = count_delta(g, &a, u, proposal);
        let raw = delta.weighted(w);
        let step = match params.accept {
            AcceptScale::Raw => raw,
            AcceptScale::Normalized => normalize(raw, max),
        };
        let accept = step >= 0.0 || rng.gen::<f64>() < (mu * step).exp();
        if accept {
            a.sets[u] = proposal;
            counts.add(&delta);
            current = counts.weighted(w);
            if current > best.0 {
                best = (current, a.clone());
            }
        }
        trace.push(normalize(best.0, max));
    }
    let (score, assignment) = best;
    AnnealOutcome {
        assignment,
        score,
        normalized_score: normalize(score, max),
        trace,
        seed,
        rounds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{parse_edge_list, EdgeListOptions};
    use proptest::prelude::{any, prop_assert, proptest};

    fn two_triangles() -> Graph {
        Graph::from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap()
    }

    fn karate() -> Graph {
        parse_edge_list(
            include_str!("../data/karate.edges"),
            &EdgeListOptions {
                one_based: true,
                n: None,
            },
        )
        .unwrap()
    }

    #[test]
    fn karate_default_weights() {
        let w = default_weights(&karate());
        assert_eq!(w.edge, 1.0);
        assert!((w.nonedge - 78.0 / 483.0).abs() < 1e-15);
        assert!((w.triangle - 78.0 / 45.0).abs() < 1e-15);
        assert!((w.nontriangle - 78.0 / 5939.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_weights() {
        let w = default_weights(&Graph::complete(4));
        assert_eq!(w.nonedge, 0.0);
        let w = default_weights(&Graph::cycle(4));
        assert_eq!(w.triangle, 0.0);
        assert_eq!(w.nontriangle, 1.0);
    }

    #[test]
    fn k4_all_one_feature() {
        let g = Graph::complete(4);
        let w = default_weights(&g);
        let a = FeatureAssignment::uniform(4, 1, &[1]).unwrap();
        assert!((score(&g, &a, &w) - 12.0).abs() < 1e-12);
        assert_eq!(normalized_score(&g, &a, &w), 1.0);
        assert!(is_intersection_representation(&g, &a));
    }

    #[test]
    fn empty_assignment() {
        let g = Graph::complete(3);
        let w = default_weights(&g);
        let a = FeatureAssignment::empty(3, 2).unwrap();
        assert_eq!(score_counts(&g, &a), ScoreCounts([0, 0, 0, 0]));
        assert!(normalized_score(&g, &a, &w) < 1.0);

        let g = Graph::path(4);
        let c = score_counts(&g, &FeatureAssignment::empty(4, 1).unwrap());
        let sizes = CategorySizes::of(&g);
        assert_eq!(
            c.0,
            [0, sizes.nonedges as i64, 0, sizes.nontriangles as i64]
        );
    }

    #[test]
    fn two_triangles_perfect() {
        let g = two_triangles();
        let a = FeatureAssignment::from_sets(
            2,
            &[vec![1], vec![1], vec![1], vec![2], vec![2], vec![2]],
        )
        .unwrap();
        let w = default_weights(&g);
        assert_eq!(normalized_score(&g, &a, &w), 1.0);
        // every category contributes |E|
        assert!((score(&g, &a, &w) - 4.0 * 6.0).abs() < 1e-9);
    }

    #[test]
    fn delta_k3_drop_vertex() {
        let g = Graph::complete(3);
        let w = default_weights(&g);
        let a = FeatureAssignment::uniform(3, 1, &[1]).unwrap();
        let d = score_delta(&g, &a, 0, 0, &w);
        assert!((d + (2.0 * w.edge + w.triangle)).abs() < 1e-12);
        assert_eq!(score_delta(&g, &a, 1, a.mask(1), &w), 0.0);
    }

    #[test]
    fn communities() {
        let a = FeatureAssignment::uniform(4, 1, &[1]).unwrap();
        assert_eq!(communities_of(&a), vec![vec![0, 1, 2, 3]]);
        let a = FeatureAssignment::from_sets(3, &[vec![1, 2], vec![1], vec![1], vec![1]]).unwrap();
        assert_eq!(communities_of(&a), vec![vec![0, 1, 2, 3], vec![0]]);
    }

    #[test]
    fn assignment_validation() {
        assert!(FeatureAssignment::empty(3, 0).is_err());
        assert!(FeatureAssignment::empty(3, 65).is_err());
        assert!(FeatureAssignment::from_sets(2, &[vec![3]]).is_err());
        assert!(FeatureAssignment::from_masks(2, vec![4]).is_err());
        let a = FeatureAssignment::from_sets(64, &[vec![1, 64]]).unwrap();
        assert_eq!(a.features(0), vec![1, 64]);
    }

    #[test]
    fn anneal_k4_and_two_triangles() {
        let g = Graph::complete(4);
        let out = anneal(&g, &AnnealParams::new(1, 3), &default_weights(&g)).unwrap();
        assert_eq!(out.normalized_score, 1.0);
        assert_eq!(
            out.assignment,
            FeatureAssignment::uniform(4, 1, &[1]).unwrap()
        );

        let g = two_triangles();
        let out = anneal(
            &g,
            &AnnealParams::new(2, 9).restarts(4),
            &default_weights(&g),
        )
        .unwrap();
        assert_eq!(out.normalized_score, 1.0);
    }

    #[test]
    fn anneal_is_reproducible_and_monotone() {
        let g = karate();
        let w = default_weights(&g);
        let p = AnnealParams {
            rounds: Some(500),
            init: InitRule::Random,
            ..AnnealParams::new(3, 42)
        }
        .restarts(3);
        let a = anneal(&g, &p, &w).unwrap();
        let b = anneal(&g, &p, &w).unwrap();
        assert_eq!(a.assignment, b.assignment);
        assert_eq!(a.trace, b.trace);
        assert_eq!(a.trace.len(), 500);
        assert!(a.trace.windows(2).all(|t| t[0] <= t[1]));
        assert_eq!(*a.trace.last().unwrap(), a.normalized_score);
        assert!((normalized_score(&g, &a.assignment, &w) - a.normalized_score).abs() < 1e-12);
    }

    #[test]
    fn default_rounds_values() {
        assert_eq!(default_rounds(34, 20.0), 2398);
        assert_eq!(default_rounds(1, 20.0), 1);
        let p = AnnealParams::new(2, 0);
        assert_eq!(p.mu(), 2.0);
        assert!(AnnealParams {
            restarts: 0,
            ..p.clone()
        }
        .validate()
        .is_err());
        assert!(AnnealParams {
            rounds: Some(0),
            ..p
        }
        .validate()
        .is_err());
    }

    proptest! {
        #[test]
        fn delta_matches_recompute(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=10);
            let m = rng.gen_range(1..=4);
            let g = Graph::random(n, rng.gen_range(0.1..0.9), &mut rng);
            let w = default_weights(&g);
            let masks = (0..n).map(|_| rng.gen::<u64>() & full_mask(m)).collect();
            let a = FeatureAssignment::from_masks(m, masks).unwrap();
            let u = rng.gen_range(0..n);
            let new = rng.gen::<u64>() & full_mask(m);
            let mut b = a.clone();
            b.set_mask(u, new);
            let full = score(&g, &b, &w) - score(&g, &a, &w);
            prop_assert!((score_delta(&g, &a, u, new, &w) - full).abs() <= 1e-9);
        }
    }
}
