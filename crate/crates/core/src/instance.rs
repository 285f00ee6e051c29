//! Weighted complete instances over vertex pairs and triples, and the mixed
//! edge/triangle correlation clustering cost of a partition.
//!
//! Every pair `e` and triple `T` carries a similarity weight `w` in `[0, 1]`.
//! Separating the tuple across clusters costs `w`; keeping it inside one
//! cluster costs `1 - w`. Pair terms are scaled by `lambda1`, triple terms by
//! `lambda2`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::tuples::{self, choose2, choose3};

/// Largest `n` built without an explicit override; the triple table is `O(n^3)`.
pub const MAX_DENSE_N: usize = 500;

/// How a nonedge pair is weighted.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum NonedgeWeight {
    /// A fixed value in `[0, 1]`.
    Absolute { value: f64 },
    /// `1/2 - coeff * density`, where density is `|E| / C(n,2)`.
    DensityOffset { coeff: f64 },
    /// Each nonedge independently draws from
    /// `[1/2 - hi_coeff * density, 1/2 - lo_coeff * density]`.
    UniformDensityRange {
        lo_coeff: f64,
        hi_coeff: f64,
        seed: u64,
    },
}

/// Which side of the nonedge's weight pair the configured value sets.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum NonedgeConvention {
    /// The value is the cost of splitting the nonedge, i.e. `w = value`.
    /// Values slightly below 1/2 gently favour separating non-adjacent
    /// vertices.
    #[default]
    SplitCost,
    /// The value is the cost of keeping the nonedge together, i.e.
    /// `w = 1 - value`.
    JoinCost,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightConfig {
    pub edge_sim: f64,
    pub nonedge: NonedgeWeight,
    pub nonedge_convention: NonedgeConvention,
    pub triangle_sim: f64,
    pub nontriangle_sim: f64,
    pub lambda1: f64,
    pub lambda2: f64,
    /// Allow `n > MAX_DENSE_N`.
    #[serde(default)]
    pub force: bool,
}

impl Default for WeightConfig {
    fn default() -> Self {
        WeightConfig {
            edge_sim: 1.0,
            nonedge: NonedgeWeight::DensityOffset { coeff: 0.0 },
            nonedge_convention: NonedgeConvention::SplitCost,
            triangle_sim: 1.0,
            nontriangle_sim: 0.5,
            lambda1: 1.0,
            lambda2: 1.0,
            force: false,
        }
    }
}

impl WeightConfig {
    /// Nonedge value `1/2 - coeff * density` with triangle relevance `lambda`,
    /// everything else at defaults.
    pub fn density_offset(coeff: f64, lambda: f64) -> Self {
        WeightConfig {
            nonedge: NonedgeWeight::DensityOffset { coeff },
            lambda2: lambda,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("edge_sim", self.edge_sim),
            ("triangle_sim", self.triangle_sim),
            ("nontriangle_sim", self.nontriangle_sim),
        ] {
            if !(0.0..=1.0).contains(&v) {
                return Err(Error::config(format!("{name} = {v} is outside [0, 1]")));
            }
        }
        for (name, v) in [("lambda1", self.lambda1), ("lambda2", self.lambda2)] {
            if !(v >= 0.0 && v.is_finite()) {
                return Err(Error::config(format!(
                    "{name} = {v} must be finite and >= 0"
                )));
            }
        }
        match self.nonedge {
            NonedgeWeight::Absolute { value } if !(0.0..=1.0).contains(&value) => Err(
                Error::config(format!("nonedge value {value} is outside [0, 1]")),
            ),
            NonedgeWeight::DensityOffset { coeff } if coeff.is_nan() || coeff < 0.0 => Err(
                Error::config(format!("nonedge coefficient {coeff} must be >= 0")),
            ),
            NonedgeWeight::UniformDensityRange {
                lo_coeff, hi_coeff, ..
            } if !(lo_coeff >= 0.0 && hi_coeff >= lo_coeff) => Err(Error::config(
                "nonedge range needs 0 <= lo_coeff <= hi_coeff",
            )),
            _ => Ok(()),
        }
    }
}

/// Pair and triple similarity weights over all tuples of `0..n`, stored in
/// [`tuples`] index order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WeightedInstance {
    n: usize,
    w_pair: Vec<f64>,
    w_triple: Vec<f64>,
    pub lambda1: f64,
    pub lambda2: f64,
}

impl WeightedInstance {
    pub fn new(
        n: usize,
        w_pair: Vec<f64>,
        w_triple: Vec<f64>,
        lambda1: f64,
        lambda2: f64,
    ) -> Result<Self> {
        if w_pair.len() != choose2(n) || w_triple.len() != choose3(n) {
            return Err(Error::config(format!(
                "weight tables must have C(n,2) = {} and C(n,3) = {} entries",
                choose2(n),
                choose3(n)
            )));
        }
        if let Some(w) = w_pair
            .iter()
            .chain(&w_triple)
            .find(|w| !(0.0..=1.0).contains(*w))
        {
            return Err(Error::config(format!("weight {w} is outside [0, 1]")));
        }
        if !(lambda1 >= 0.0 && lambda2 >= 0.0) {
            return Err(Error::config("relevance factors must be >= 0"));
        }
        Ok(WeightedInstance {
            n,
            w_pair,
            w_triple,
            lambda1,
            lambda2,
        })
    }

    /// Every pair weight `pair` and every triple weight `triple`.
    pub fn uniform(n: usize, pair: f64, triple: f64) -> Result<Self> {
        Self::new(
            n,
            vec![pair; choose2(n)],
            vec![triple; choose3(n)],
            1.0,
            1.0,
        )
    }

    /// Independent uniform `[0, 1]` weights, `lambda1 = lambda2 = 1`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let w_pair = (0..choose2(n)).map(|_| rng.gen::<f64>()).collect();
        let w_triple = (0..choose3(n)).map(|_| rng.gen::<f64>()).collect();
        WeightedInstance {
            n,
            w_pair,
            w_triple,
            lambda1: 1.0,
            lambda2: 1.0,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn pair_weight(&self, u: usize, v: usize) -> f64 {
        self.w_pair[tuples::pair_index(u, v)]
    }

    #[inline]
    pub fn triple_weight(&self, a: usize, b: usize, c: usize) -> f64 {
        self.w_triple[tuples::triple_index(a, b, c)]
    }

    pub fn pair_weights(&self) -> &[f64] {
        &self.w_pair
    }

    pub fn triple_weights(&self) -> &[f64] {
        &self.w_triple
    }
}

/// Resolve the nonedge weight source to a similarity weight per nonedge.
fn nonedge_weights(g: &Graph, cfg: &WeightConfig) -> Result<Box<dyn FnMut() -> f64>> {
    let eps = g.density();
    let convert = move |v: f64| match cfg.nonedge_convention {
        NonedgeConvention::SplitCost => v,
        NonedgeConvention::JoinCost => 1.0 - v,
    };
    let check = |v: f64| {
        if (0.0..=1.0).contains(&v) {
            Ok(v)
        } else {
            Err(Error::config(format!(
                "resolved nonedge value {v} is outside [0, 1]"
            )))
        }
    };
    Ok(match cfg.nonedge {
        NonedgeWeight::Absolute { value } => {
            let w = convert(check(value)?);
            Box::new(move || w)
        }
        NonedgeWeight::DensityOffset { coeff } => {
            let w = convert(check(0.5 - coeff * eps)?);
            Box::new(move || w)
        }
        NonedgeWeight::UniformDensityRange {
            lo_coeff,
            hi_coeff,
            seed,
        } => {
            let lo = check(0.5 - hi_coeff * eps)?;
            let hi = check(0.5 - lo_coeff * eps)?;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let conv = cfg.nonedge_convention;
            Box::new(move || {
                let v = if hi > lo { rng.gen_range(lo..=hi) } else { lo };
                match conv {
                    NonedgeConvention::SplitCost => v,
                    NonedgeConvention::JoinCost => 1.0 - v,
                }
            })
        }
    })
}

/// Weight every pair and triple of `g` according to `cfg`.
pub fn build_instance(g: &Graph, cfg: &WeightConfig) -> Result<WeightedInstance> {
    cfg.validate()?;
    let n = g.n();
    if n > MAX_DENSE_N && !cfg.force {
        return Err(Error::guard(format!(
            "n = {n} exceeds the dense-instance limit of {MAX_DENSE_N}; pass --force to override"
        )));
    }
    let mut nonedge = nonedge_weights(g, cfg)?;
    let w_pair = tuples::pairs(n)
        .map(|(u, v)| {
            if g.has_edge(u, v) {
                cfg.edge_sim
            } else {
                nonedge()
            }
        })
        .collect();
    let w_triple = tuples::triples(n)
        .map(|[a, b, c]| {
            if g.is_triangle(a, b, c) {
                cfg.triangle_sim
            } else {
                cfg.nontriangle_sim
            }
        })
        .collect();
    WeightedInstance::new(n, w_pair, w_triple, cfg.lambda1, cfg.lambda2)
}

/// A disjoint clustering of `0..n`, one label per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    pub fn from_labels(labels: Vec<usize>) -> Self {
        Partition { labels }
    }

    pub fn single_cluster(n: usize) -> Self {
        Partition { labels: vec![0; n] }
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            labels: (0..n).collect(),
        }
    }

    /// Partition from explicit clusters; they must be disjoint and cover `0..n`.
    pub fn from_clusters(n: usize, clusters: &[Vec<usize>]) -> Result<Self> {
        let mut labels = vec![usize::MAX; n];
        for (k, c) in clusters.iter().enumerate() {
            for &v in c {
                if v >= n {
                    return Err(Error::config(format!(
                        "vertex {v} out of range for n = {n}"
                    )));
                }
                if labels[v] != usize::MAX {
                    return Err(Error::config(format!("vertex {v} appears in two clusters")));
                }
                labels[v] = k;
            }
        }
        if let Some(v) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(Error::config(format!("vertex {v} is in no cluster")));
        }
        Ok(Partition { labels })
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    #[inline]
    pub fn together(&self, u: usize, v: usize) -> bool {
        self.labels[u] == self.labels[v]
    }

    /// Clusters as sorted vertex lists, ordered by smallest member.
    pub fn clusters(&self) -> Vec<Vec<usize>> {
        let canon = self.canonical();
        let k = canon.labels.iter().max().map_or(0, |m| m + 1);
        let mut out = vec![Vec::new(); k];
        for (v, &l) in canon.labels.iter().enumerate() {
            out[l].push(v);
        }
        out
    }

    pub fn num_clusters(&self) -> usize {
        self.clusters().len()
    }

    /// Labels renumbered `0, 1, ...` in order of first appearance.
    pub fn canonical(&self) -> Partition {
        let mut map = std::collections::HashMap::new();
        let labels = self
            .labels
            .iter()
            .map(|l| {
                let next = map.len();
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Partition { labels }
    }
}

/// Objective of a partition: `lambda1` times the pair disagreements plus
/// `lambda2` times the triple disagreements.
pub fn mmcc_cost(inst: &WeightedInstance, p: &Partition) -> f64 {
    let (pairs, triples) = mmcc_cost_terms(inst, p);
    inst.lambda1 * pairs + inst.lambda2 * triples
}

/// Unscaled pair and triple parts of [`mmcc_cost`].
pub fn mmcc_cost_terms(inst: &WeightedInstance, p: &Partition) -> (f64, f64) {
    assert_eq!(p.n(), inst.n(), "partition and instance sizes differ");
    let pair_cost: f64 = tuples::pairs(inst.n())
        .zip(inst.pair_weights())
        .map(|((u, v), &w)| if p.together(u, v) { 1.0 - w } else { w })
        .sum();
    let triple_cost: f64 = tuples::triples(inst.n())
        .zip(inst.triple_weights())
        .map(|([a, b, c], &w)| {
            if p.together(a, b) && p.together(a, c) {
                1.0 - w
            } else {
                w
            }
        })
        .sum();
    (pair_cost, triple_cost)
}

/// Vertices placed consistently with `truth` under the best one-to-one
/// matching of clusters to truth classes. Vertices in unmatched clusters, or
/// in no truth class, count as misplaced.
pub fn partition_agreement(p: &Partition, truth: &[Vec<usize>]) -> usize {
    let clusters = p.clusters();
    let overlap: Vec<Vec<usize>> = truth
        .iter()
        .map(|class| {
            clusters
                .iter()
                .map(|c| c.iter().filter(|v| class.contains(v)).count())
                .collect()
        })
        .collect();
    best_matching(&overlap, 0, &mut vec![false; clusters.len()])
}

fn best_matching(overlap: &[Vec<usize>], class: usize, used: &mut Vec<bool>) -> usize {
    if class == overlap.len() {
        return 0;
    }
    let mut best = best_matching(overlap, class + 1, used);
    for c in 0..used.len() {
        if !used[c] {
            used[c] = true;
            best = best.max(overlap[class][c] + best_matching(overlap, class + 1, used));
            used[c] = false;
        }
    }
    best
}
