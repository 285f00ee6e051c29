//! Edge/triangle correlation clustering through the LP relaxation and
//! region-growing rounding.

mod export;
mod lp;
mod rounding;
mod simplex;
mod sparse;

use std::time::Duration;

use serde::{Deserialize, Serialize};

pub use export::{export_lp, import_solution, write_solution, LpFormat};
pub use lp::{build_lp, Family, LpModel, LpSolution, Row, FEASIBILITY_TOL, OBJECTIVE_TOL};
pub use rounding::{round_solution, PivotRule, RoundingParams};
pub use simplex::{solve_dense, SimplexOptions, SimplexSolution};
pub use sparse::solve_sparse;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::instance::{build_instance, mmcc_cost, Partition, WeightConfig, WeightedInstance};

/// Largest `n` that [`LpBackend::Auto`] sends to the dense tableau.
pub const DENSE_AUTO_MAX_N: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum LpBackend {
    /// Dense tableau up to `DENSE_AUTO_MAX_N` vertices, sparse above.
    #[default]
    Auto,
    Dense,
    Sparse,
}

impl LpBackend {
    pub fn resolve(self, n: usize) -> LpBackend {
        match self {
            LpBackend::Auto if n <= DENSE_AUTO_MAX_N => LpBackend::Dense,
            LpBackend::Auto => LpBackend::Sparse,
            other => other,
        }
    }
}

/// Solve the relaxation. The result is checked against the model; the dense
/// path also checks its duality gap.
pub fn solve_lp(model: &LpModel, backend: LpBackend) -> Result<LpSolution> {
    let x = match backend.resolve(model.n) {
        LpBackend::Dense => {
            let s = solve_dense(model, &SimplexOptions::default())?;
            if s.duality_gap() > OBJECTIVE_TOL {
                return Err(Error::Solver(format!(
                    "unsolved: duality gap {:e} above tolerance",
                    s.duality_gap()
                )));
            }
            s.x
        }
        _ => solve_sparse(model, Some(Duration::from_secs(3600)))?,
    };
    let x = x
        .into_iter()
        .zip(&model.upper)
        .map(|(v, &u)| v.clamp(0.0, u))
        .collect();
    let sol = LpSolution::from_values(model, x);
    let viol = sol.max_violation(model);
    if viol > FEASIBILITY_TOL {
        return Err(Error::Solver(format!(
            "solver returned a point violating the LP by {viol:e}"
        )));
    }
    Ok(sol)
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MmccOutcome {
    pub partition: Partition,
    pub lp_objective: f64,
    pub rounded_cost: f64,
}

impl MmccOutcome {
    /// `rounded_cost / lp_objective`; 1 when both vanish.
    pub fn ratio(&self) -> f64 {
        if self.lp_objective.abs() < OBJECTIVE_TOL {
            if self.rounded_cost.abs() < OBJECTIVE_TOL {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            self.rounded_cost / self.lp_objective
        }
    }
}

/// Round an already solved relaxation and score the result.
pub fn round_and_score(
    inst: &WeightedInstance,
    sol: &LpSolution,
    params: &RoundingParams,
) -> Result<MmccOutcome> {
    let partition = round_solution(sol, params)?;
    let rounded_cost = mmcc_cost(inst, &partition);
    Ok(MmccOutcome {
        partition,
        lp_objective: sol.objective,
        rounded_cost,
    })
}

pub fn cluster_instance(
    inst: &WeightedInstance,
    params: &RoundingParams,
    backend: LpBackend,
) -> Result<MmccOutcome> {
    params.validate()?;
    let model = build_lp(inst);
    let sol = solve_lp(&model, backend)?;
    round_and_score(inst, &sol, params)
}

/// Weight `g`, solve the relaxation, round it.
pub fn cluster_mmcc(g: &Graph, cfg: &WeightConfig, params: &RoundingParams) -> Result<MmccOutcome> {
    cluster_mmcc_with(g, cfg, params, LpBackend::Auto)
}

pub fn cluster_mmcc_with(
    g: &Graph,
    cfg: &WeightConfig,
    params: &RoundingParams,
    backend: LpBackend,
) -> Result<MmccOutcome> {
    let inst = build_instance(g, cfg)?;
    cluster_instance(&inst, params, backend)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tuples::{choose2, choose3};

    #[test]
    fn all_ones_weights_give_zero() {
        let m = build_lp(&WeightedInstance::uniform(5, 1.0, 1.0).unwrap());
        for backend in [LpBackend::Dense, LpBackend::Sparse] {
            let s = solve_lp(&m, backend).unwrap();
            assert!(s.objective.abs() < 1e-9);
            assert!(s.values().iter().all(|&v| v.abs() < 1e-9));
        }
    }

    #[test]
    fn all_zero_weights_split_everything() {
        let m = build_lp(&WeightedInstance::uniform(5, 0.0, 0.0).unwrap());
        for backend in [LpBackend::Dense, LpBackend::Sparse] {
            let s = solve_lp(&m, backend).unwrap();
            assert!(s.objective.abs() < 1e-9);
            assert_eq!(s.x_pair.len(), choose2(5));
            assert_eq!(s.x_triple.len(), choose3(5));
            assert!(s.values().iter().all(|&v| (v - 1.0).abs() < 1e-9));
        }
    }

    #[test]
    fn k3_single_cluster() {
        let out = cluster_mmcc(
            &Graph::complete(3),
            &WeightConfig::default(),
            &RoundingParams::default(),
        )
        .unwrap();
        assert_eq!(out.partition.num_clusters(), 1);
        assert_eq!(out.rounded_cost, 0.0);
        assert_eq!(out.ratio(), 1.0);
    }

    #[test]
    fn two_vertex_instance() {
        let inst = WeightedInstance::uniform(2, 0.2, 0.5).unwrap();
        let sol = solve_lp(&build_lp(&inst), LpBackend::Dense).unwrap();
        assert!((sol.objective - 0.2).abs() < 1e-12);
        assert_eq!(sol.x_pair, vec![1.0]);
    }
}
