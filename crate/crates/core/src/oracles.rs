//! Exhaustive solvers for small instances: optimal clusterings, minimum
//! clique covers and best feature assignments.

use serde::{Deserialize, Serialize};

use crate::anneal::{score_counts, FeatureAssignment, ScoreWeights};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, maximal_cliques, Graph};
use crate::instance::{Partition, WeightedInstance};
use crate::tuples::pair_index;

pub const MAX_EXACT_MMCC_N: usize = 12;
pub const MAX_ASSIGNMENT_STATES: u128 = 10_000_000;
pub const DEFAULT_COVER_BUDGET: u64 = 50_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExactResult<V, W> {
    pub optimum: V,
    pub witness: W,
}

pub type ExactClustering = ExactResult<f64, Partition>;
pub type ExactCover = ExactResult<usize, Vec<Vec<usize>>>;

/// Restricted growth strings of length `n`: every set partition of
/// `0..n` exactly once, as block labels in order of first appearance.
pub struct SetPartitions {
    labels: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

impl SetPartitions {
    pub fn new(n: usize) -> Self {
        // maxes[i] is the largest label position i may take
        let maxes = (0..n).map(|i| usize::from(i > 0)).collect();
        SetPartitions {
            labels: vec![0; n],
            maxes,
            done: false,
        }
    }
}

impl Iterator for SetPartitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.labels.clone();
        let n = self.labels.len();
        match (1..n).rev().find(|&i| self.labels[i] < self.maxes[i]) {
            Some(i) => {
                self.labels[i] += 1;
                for j in i + 1..n {
                    self.labels[j] = 0;
                    self.maxes[j] = self.maxes[j - 1].max(self.labels[j - 1] + 1);
                }
            }
            None => self.done = true,
        }
        Some(out)
    }
}

fn clustering_cost(inst: &WeightedInstance, labels: &[usize]) -> f64 {
    let n = labels.len();
    let mut pair = 0.0;
    let mut triple = 0.0;
    for c in 0..n {
        for b in 0..c {
            let w = inst.pair_weight(b, c);
            pair += if labels[b] == labels[c] { 1.0 - w } else { w };
            for a in 0..b {
                let w = inst.triple_weight(a, b, c);
                let same = labels[a] == labels[b] && labels[b] == labels[c];
                triple += if same { 1.0 - w } else { w };
            }
        }
    }
    inst.lambda1 * pair + inst.lambda2 * triple
}

/// Minimum clustering cost over every set partition. The first partition in
/// enumeration order attaining the minimum is the witness.
pub fn exact_mmcc(inst: &WeightedInstance) -> Result<ExactClustering> {
    let n = inst.n();
    if n > MAX_EXACT_MMCC_N {
        return Err(Error::guard(format!(
            "exhaustive clustering of {n} vertices exceeds the limit of {MAX_EXACT_MMCC_N}"
        )));
    }
    let mut best = (f64::INFINITY, Vec::new());
    for labels in SetPartitions::new(n) {
        let cost = clustering_cost(inst, &labels);
        if cost < best.0 {
            best = (cost, labels);
        }
    }
    Ok(ExactResult {
        optimum: best.0,
        witness: Partition::from_labels(best.1),
    })
}

/// Minimum number of cliques covering every edge and every triangle.
pub fn exact_etcc(g: &Graph) -> Result<ExactCover> {
    exact_etcc_with_budget(g, DEFAULT_COVER_BUDGET)
}

pub fn exact_etcc_with_budget(g: &Graph, budget: u64) -> Result<ExactCover> {
    exact_cover(g, true, budget)
}

/// Minimum number of cliques covering every edge.
pub fn exact_ecc(g: &Graph) -> Result<ExactCover> {
    exact_ecc_with_budget(g, DEFAULT_COVER_BUDGET)
}

pub fn exact_ecc_with_budget(g: &Graph, budget: u64) -> Result<ExactCover> {
    exact_cover(g, false, budget)
}

fn exact_cover(g: &Graph, with_triangles: bool, budget: u64) -> Result<ExactCover> {
    let mut element_of_pair = vec![usize::MAX; crate::tuples::choose2(g.n())];
    let mut num_elements = 0;
    for (u, v) in g.edges() {
        element_of_pair[pair_index(u, v)] = num_elements;
        num_elements += 1;
    }
    let triangles = if with_triangles {
        enumerate_triangles(g)
    } else {
        Vec::new()
    };
    let first_triangle = num_elements;
    num_elements += triangles.len();

    let cliques: Vec<Vec<usize>> = maximal_cliques(g)
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    let sets: Vec<BitSet> = cliques
        .iter()
        .map(|c| {
            let mut s = BitSet::new(num_elements);
            for (i, &a) in c.iter().enumerate() {
                for &b in &c[i + 1..] {
                    s.insert(element_of_pair[pair_index(a, b)]);
                }
            }
            for (t, tri) in triangles.iter().enumerate() {
                if tri.0.iter().all(|v| c.binary_search(v).is_ok()) {
                    s.insert(first_triangle + t);
                }
            }
            s
        })
        .collect();

    let chosen = set_cover(num_elements, &sets, budget)?;
    let witness: Vec<Vec<usize>> = chosen.iter().map(|&i| cliques[i].clone()).collect();
    Ok(ExactResult {
        optimum: witness.len(),
        witness,
    })
}

/// Smallest subfamily of `sets` covering `0..universe`, by branch and bound.
/// Errors when the search visits more than `budget` nodes.
pub fn set_cover(universe: usize, sets: &[BitSet], budget: u64) -> Result<Vec<usize>> {
    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); universe];
    for (i, s) in sets.iter().enumerate() {
        for e in s.iter() {
            containing[e].push(i);
        }
    }
    if let Some(e) = containing.iter().position(Vec::is_empty) {
        return Err(Error::config(format!("element {e} is in no set")));
    }
    let all = BitSet::full(universe);
    let mut search = CoverSearch {
        sets,
        containing: &containing,
        best: greedy_cover(&all, sets),
        nodes: 0,
        budget,
    };
    let mut chosen = Vec::new();
    search.run(&all, &mut chosen)?;
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

fn greedy_cover(universe: &BitSet, sets: &[BitSet]) -> Vec<usize> {
    let mut uncovered = universe.clone();
    let mut out = Vec::new();
    while !uncovered.is_empty() {
        let (i, _) = sets
            .iter()
            .enumerate()
            .map(|(i, s)| (i, s.intersection_count(&uncovered)))
            .max_by_key(|&(i, c)| (c, std::cmp::Reverse(i)))
            .expect("every element is coverable");
        uncovered.difference_with(&sets[i]);
        out.push(i);
    }
    out
}

struct CoverSearch<'a> {
    sets: &'a [BitSet],
    containing: &'a [Vec<usize>],
    best: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl CoverSearch<'_> {
    fn run(&mut self, uncovered: &BitSet, chosen: &mut Vec<usize>) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::guard(format!(
                "clique cover search exceeded {} nodes",
                self.budget
            )));
        }
        let left = uncovered.count();
        if left == 0 {
            if chosen.len() < self.best.len() {
                self.best = chosen.clone();
            }
            return Ok(());
        }
        let max_cover = self
            .sets
            .iter()
            .map(|s| s.intersection_count(uncovered))
            .max()
            .unwrap_or(0);
        if chosen.len() + left.div_ceil(max_cover) >= self.best.len() {
            return Ok(());
        }
        let e = uncovered
            .iter()
            .min_by_key(|&e| self.containing[e].len())
            .expect("non-empty");
        let mut options: Vec<(usize, usize)> = self.containing[e]
            .iter()
            .map(|&i| (self.sets[i].intersection_count(uncovered), i))
            .collect();
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        for (_, i) in options {
            let mut next = uncovered.clone();
            next.difference_with(&self.sets[i]);
            chosen.push(i);
            self.run(&next, chosen)?;
            chosen.pop();
        }
        Ok(())
    }
}

/// Highest-scoring assignment of subsets of `1..=m` to the vertices, by
/// sweeping all `(2^m)^n` states. Ties keep the first state in odometer
/// order (vertex 0 varies slowest).
pub fn exact_best_assignment(
    g: &Graph,
    m: usize,
    w: &ScoreWeights,
) -> Result<(FeatureAssignment, f64)> {
    let n = g.n();
    let states = (1u128 << m.min(64)).checked_pow(n as u32);
    if m > 20 || states.is_none_or(|s| s > MAX_ASSIGNMENT_STATES) {
        return Err(Error::guard(format!(
            "(2^{m})^{n} assignments exceed the limit of {MAX_ASSIGNMENT_STATES}"
        )));
    }
    let top = 1u64 << m;
    let mut a = FeatureAssignment::empty(n, m)?;
    let mut best = (score_counts(g, &a).weighted(w), a.clone());
    loop {
        let mut v = n;
        loop {
            if v == 0 {
                return Ok((best.1, best.0));
            }
            v -= 1;
            let next = a.mask(v) + 1;
            if next < top {
                a.set_mask(v, next);
                break;
            }
            a.set_mask(v, 0);
        }
        let s = score_counts(g, &a).weighted(w);
        if s > best.0 {
            best = (s, a.clone());
        }
    }
}
