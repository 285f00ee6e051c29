//! Sparse solve through `microlp`, used above the dense tableau's size range.

use std::time::Duration;

use microlp::{ComparisonOp, OptimizationDirection, Problem, SolveOutcome};

use crate::error::{Error, Result};

use super::lp::LpModel;

/// Optimal primal values for `model`, or an error if the solver stops early.
pub fn solve_sparse(model: &LpModel, time_limit: Option<Duration>) -> Result<Vec<f64>> {
    let mut problem = Problem::new(OptimizationDirection::Minimize);
    if let Some(limit) = time_limit {
        problem.set_time_limit(limit);
    }
    let vars: Vec<_> = model
        .cost
        .iter()
        .zip(&model.upper)
        .map(|(&c, &u)| problem.add_var(c, (0.0, u)))
        .collect();
    for row in &model.rows {
        let expr: Vec<_> = row.coeffs.iter().map(|&(j, a)| (vars[j], a)).collect();
        problem.add_constraint(expr.as_slice(), ComparisonOp::Le, row.rhs);
    }
    let outcome = problem.solve().map_err(|e| Error::Solver(e.to_string()))?;
    match outcome {
        SolveOutcome::Solution(sol) => Ok(vars.iter().map(|&v| sol[v]).collect()),
        SolveOutcome::Interrupted(_) => Err(Error::Solver(
            "unsolved: time limit reached before an optimal vertex".into(),
        )),
    }
}
