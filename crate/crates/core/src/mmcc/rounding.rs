//! Region-growing rounding of a fractional LP solution into a partition.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::Partition;

use super::lp::LpSolution;

/// Slack on the `x_uv <= alpha` and threshold tests, absorbing LP round-off.
const ROUNDING_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "rule")]
pub enum PivotRule {
    /// Smallest unclustered vertex id.
    Ascending,
    /// Uniformly random unclustered vertex.
    Random { seed: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RoundingParams {
    pub alpha: f64,
    pub beta: f64,
    pub pivot: PivotRule,
}

impl Default for RoundingParams {
    fn default() -> Self {
        RoundingParams {
            alpha: 1.0 / 3.0,
            beta: 1.0 / 3.0,
            pivot: PivotRule::Ascending,
        }
    }
}

impl RoundingParams {
    pub fn with_pivot(pivot: PivotRule) -> Self {
        RoundingParams {
            pivot,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("alpha", self.alpha), ("beta", self.beta)] {
            if !(v > 0.0 && v <= 1.0) {
                return Err(Error::config(format!("{name} = {v} must lie in (0, 1]")));
            }
        }
        Ok(())
    }

    /// `1 / (alpha * beta)` when the parameters are the proven `1/3, 1/3`.
    pub fn guarantee(&self) -> Option<f64> {
        let third = 1.0 / 3.0;
        ((self.alpha - third).abs() < 1e-12 && (self.beta - third).abs() < 1e-12)
            .then_some(1.0 / (self.alpha * self.beta))
    }
}

/// Round `sol` to a partition.
///
/// Repeatedly take a pivot `u` among the unclustered vertices and its ball
/// `N = {v : x_uv <= alpha}`. If the mean distance inside the ball exceeds
/// `alpha * beta` emit `{u}` alone, otherwise emit `N + u`. The loop stops
/// once fewer than three vertices remain; those become singletons.
pub fn round_solution(sol: &LpSolution, params: &RoundingParams) -> Result<Partition> {
    params.validate()?;
    let n = sol.n;
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut rng = match params.pivot {
        PivotRule::Ascending => None,
        PivotRule::Random { seed } => Some(ChaCha8Rng::seed_from_u64(seed)),
    };
    let mut labels = vec![usize::MAX; n];
    let mut next_label = 0;

    while remaining.len() >= 3 {
        let u = match rng.as_mut() {
            None => remaining[0],
            Some(rng) => *remaining.choose(rng).expect("non-empty"),
        };
        let ball: Vec<usize> = remaining
            .iter()
            .copied()
            .filter(|&v| v != u && sol.pair(u, v) <= params.alpha + ROUNDING_TOL)
            .collect();
        let spread: f64 = ball.iter().map(|&v| sol.pair(u, v)).sum();
        let threshold = params.beta * params.alpha * ball.len() as f64;

        labels[u] = next_label;
        if spread <= threshold + ROUNDING_TOL {
            for &v in &ball {
                labels[v] = next_label;
            }
        }
        next_label += 1;
        remaining.retain(|&v| labels[v] == usize::MAX);
    }
    for v in remaining {
        labels[v] = next_label;
        next_label += 1;
    }
    Ok(Partition::from_labels(labels))
}
