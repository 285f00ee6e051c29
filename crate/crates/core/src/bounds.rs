//! Upper bounds on clique cover numbers and the randomized edge-triangle
//! clique cover for graphs of high minimum degree.

use std::collections::HashSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::anneal::chain_seed;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{enumerate_triangles, Graph};
use crate::tuples::{choose2, choose3, pair_index, triple_index};

/// Smallest `n` for which the edge-triangle bound is proven.
pub const ETCC_BOUND_MIN_N: u64 = 7;

/// Largest `candidate sets x n` a single cover trial may draw.
pub const MAX_COVER_WORK: u64 = 2_000_000_000;

/// `floor(n^2 / 4)`, an upper bound on the edge clique cover number.
pub fn ecc_bound(n: u64) -> u64 {
    n * n / 4
}

/// Upper bound on the edge-triangle clique cover number of an `n`-vertex
/// graph, attained by the complete tripartite Turán graph.
pub fn etcc_bound(n: u64) -> u64 {
    if n < ETCC_BOUND_MIN_N {
        log::warn!("edge-triangle bound evaluated at n = {n}, outside its proven range n >= {ETCC_BOUND_MIN_N}");
    }
    match n % 3 {
        0 => (n / 3).pow(3),
        1 => {
            let q = (n - 1) / 3;
            q.pow(3) + q.pow(2)
        }
        _ => {
            let q = (n + 1) / 3;
            q.pow(3) - q.pow(2)
        }
    }
}

/// `ceil(3 e^3 (d+1)^3 ln n)`: cover size for graphs whose every vertex has
/// degree at least `n - d`.
pub fn alon_bound(n: u64, d: u64) -> u64 {
    let e3 = 3.0_f64.exp();
    let d1 = (d + 1) as f64;
    (3.0 * e3 * d1.powi(3) * (n as f64).ln()).ceil().max(0.0) as u64
}

/// TSV table of the three bounds for each `n`.
pub fn bounds_table(ns: &[u64], d: u64) -> String {
    let mut out = String::from("n\tecc_bound\tetcc_bound\talon_bound\n");
    for &n in ns {
        let _ = writeln!(
            out,
            "{n}\t{}\t{}\t{}",
            ecc_bound(n),
            etcc_bound(n),
            alon_bound(n, d)
        );
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    /// Distinct non-empty cliques, in the order first drawn.
    pub cliques: Vec<Vec<usize>>,
    pub covered_all: bool,
    pub size: usize,
    /// Candidate sets drawn per trial.
    pub bound_used: u64,
    /// Trials run, including the successful one.
    pub trials_used: usize,
    /// Edges plus triangles left uncovered by the reported trial.
    pub uncovered: usize,
}

/// Randomized edge-triangle clique cover.
///
/// Each trial draws `alon_bound(n, d)` candidate sets. A candidate keeps
/// every vertex independently with probability `1 / (d + 1)`, then drops
/// every vertex with a non-neighbour among the kept ones, leaving a clique.
/// Coverage of all edges and triangles is checked exactly; the first covering
/// trial is reported, otherwise the last one.
pub fn random_cover(g: &Graph, d: u64, seed: u64, trials: usize) -> Result<CoverReport> {
    if d == 0 {
        return Err(Error::config("d must be >= 1"));
    }
    if trials == 0 {
        return Err(Error::config("trials must be >= 1"));
    }
    let n = g.n();
    if n > 0 && g.min_degree() + (d as usize) < n {
        log::warn!(
            "minimum degree {} is below n - d = {}; the cover size guarantee does not apply",
            g.min_degree(),
            n - d as usize
        );
    }
    let bound = alon_bound(n as u64, d);
    if bound.saturating_mul(n as u64) > MAX_COVER_WORK {
        return Err(Error::guard(format!(
            "{bound} candidate sets on {n} vertices per trial"
        )));
    }
    let mut report = None;
    for t in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(chain_seed(seed, t));
        let cliques = draw_cliques(g, d, bound, &mut rng);
        let uncovered = uncovered_count(g, &cliques);
        let r = CoverReport {
            size: cliques.len(),
            cliques,
            covered_all: uncovered == 0,
            bound_used: bound,
            trials_used: t + 1,
            uncovered,
        };
        let done = r.covered_all;
        report = Some(r);
        if done {
            break;
        }
    }
    Ok(report.expect("trials >= 1"))
}

fn draw_cliques<R: Rng>(g: &Graph, d: u64, count: u64, rng: &mut R) -> Vec<Vec<usize>> {
    let n = g.n();
    let p = 1.0 / (d as f64 + 1.0);
    let neighbors: Vec<BitSet> = (0..n).map(|v| g.neighbor_set(v)).collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..count {
        let mut sample = BitSet::new(n);
        for v in 0..n {
            if rng.gen_bool(p) {
                sample.insert(v);
            }
        }
        let size = sample.count();
        let clique: Vec<usize> = sample
            .iter()
            .filter(|&v| neighbors[v].intersection_count(&sample) + 1 == size)
            .collect();
        if !clique.is_empty() && seen.insert(clique.clone()) {
            out.push(clique);
        }
    }
    out
}

/// Edges and triangles of `g` not inside any of `cliques`.
pub fn uncovered_count(g: &Graph, cliques: &[Vec<usize>]) -> usize {
    let n = g.n();
    let mut pairs = vec![false; choose2(n)];
    let mut triples = vec![false; choose3(n)];
    for c in cliques {
        for (i, &a) in c.iter().enumerate() {
            for (j, &b) in c.iter().enumerate().skip(i + 1) {
                pairs[pair_index(a, b)] = true;
                for &e in &c[j + 1..] {
                    triples[triple_index(a, b, e)] = true;
                }
            }
        }
    }
    let edges = g.edges().filter(|&(u, v)| !pairs[pair_index(u, v)]).count();
    let tris = enumerate_triangles(g)
        .into_iter()
        .filter(|t| {
            let [a, b, c] = t.0;
            !triples[triple_index(a, b, c)]
        })
        .count();
    edges + tris
}
