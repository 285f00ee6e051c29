//! CPLEX-LP and free-MPS writers for the relaxation, and the `name value`
//! solution reader used to bring back results from an external solver.
//!
//! Both writers emit the linear part of the objective only; the constant
//! offset is written as a comment and added back on import.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::lp::{LpModel, LpSolution, FEASIBILITY_TOL};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum LpFormat {
    Lp,
    Mps,
}

pub fn export_lp(model: &LpModel, format: LpFormat) -> String {
    match format {
        LpFormat::Lp => write_lp(model),
        LpFormat::Mps => write_mps(model),
    }
}

fn term(out: &mut String, first: bool, coeff: f64, name: &str) {
    if first {
        let _ = write!(out, " {coeff} {name}");
    } else if coeff < 0.0 {
        let _ = write!(out, " - {} {name}", -coeff);
    } else {
        let _ = write!(out, " + {coeff} {name}");
    }
}

fn write_lp(model: &LpModel) -> String {
    let names = model.var_names();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "\\ edge/triangle correlation clustering relaxation, n = {}",
        model.n
    );
    let _ = writeln!(out, "\\ objective offset = {}", model.cost_offset);
    out.push_str("Minimize\n obj:");
    for (j, (&c, name)) in model.cost.iter().zip(&names).enumerate() {
        term(&mut out, j == 0, c, name);
    }
    out.push_str("\nSubject To\n");
    for row in &model.rows {
        let _ = write!(out, " {}:", row.name);
        for (k, &(j, a)) in row.coeffs.iter().enumerate() {
            term(&mut out, k == 0, a, &names[j]);
        }
        let _ = writeln!(out, " <= {}", row.rhs);
    }
    out.push_str("Bounds\n");
    for (name, &u) in names.iter().zip(&model.upper) {
        if u.is_finite() {
            let _ = writeln!(out, " 0 <= {name} <= {u}");
        } else {
            let _ = writeln!(out, " {name} >= 0");
        }
    }
    out.push_str("End\n");
    out
}

fn write_mps(model: &LpModel) -> String {
    let names = model.var_names();
    let mut out = String::new();
    let _ = writeln!(
        out,
        "* edge/triangle correlation clustering relaxation, n = {}",
        model.n
    );
    let _ = writeln!(out, "* objective offset = {}", model.cost_offset);
    let _ = writeln!(out, "NAME motifcc_n{}", model.n);
    out.push_str("ROWS\n N obj\n");
    for row in &model.rows {
        let _ = writeln!(out, " L {}", row.name);
    }
    let mut by_col: Vec<Vec<(usize, f64)>> = vec![Vec::new(); model.num_vars()];
    for (i, row) in model.rows.iter().enumerate() {
        for &(j, a) in &row.coeffs {
            by_col[j].push((i, a));
        }
    }
    out.push_str("COLUMNS\n");
    for (j, entries) in by_col.iter().enumerate() {
        let _ = writeln!(out, " {} obj {}", names[j], model.cost[j]);
        for &(i, a) in entries {
            let _ = writeln!(out, " {} {} {}", names[j], model.rows[i].name, a);
        }
    }
    out.push_str("RHS\n");
    for row in model.rows.iter().filter(|r| r.rhs != 0.0) {
        let _ = writeln!(out, " RHS {} {}", row.name, row.rhs);
    }
    out.push_str("BOUNDS\n");
    for (name, &u) in names.iter().zip(&model.upper) {
        if u.is_finite() {
            let _ = writeln!(out, " UP BND {name} {u}");
        }
    }
    out.push_str("ENDATA\n");
    out
}

/// Read a `name value` per line solution for `model`. Unknown names and
/// `#` comment lines are skipped; every model variable must appear. The
/// result must satisfy the model to within the feasibility tolerance.
pub fn import_solution(model: &LpModel, text: &str) -> Result<LpSolution> {
    let names = model.var_names();
    let index: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(j, s)| (s.as_str(), j))
        .collect();
    let mut x = vec![f64::NAN; model.num_vars()];
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut toks = line.split_whitespace();
        let (Some(name), Some(value)) = (toks.next(), toks.next()) else {
            return Err(Error::Parse {
                line: lineno + 1,
                msg: format!("expected `name value`, got {line:?}"),
            });
        };
        if let Some(&j) = index.get(name) {
            x[j] = value.parse().map_err(|_| Error::Parse {
                line: lineno + 1,
                msg: format!("bad value {value:?} for {name}"),
            })?;
        }
    }
    if let Some(j) = x.iter().position(|v| v.is_nan()) {
        return Err(Error::Solver(format!(
            "solution is missing variable {}",
            names[j]
        )));
    }
    let sol = LpSolution::from_values(model, x);
    let viol = sol.max_violation(model);
    if viol > FEASIBILITY_TOL {
        return Err(Error::Solver(format!(
            "imported solution violates the LP by {viol:e}"
        )));
    }
    Ok(sol)
}

/// Inverse of [`import_solution`].
pub fn write_solution(model: &LpModel, sol: &LpSolution) -> String {
    let mut out = String::new();
    for (name, v) in model.var_names().iter().zip(sol.values()) {
        let _ = writeln!(out, "{name} {v}");
    }
    out
}
