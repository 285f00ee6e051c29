//! Dense-tableau primal simplex for `min c.x  s.t.  A x <= b, 0 <= x <= u`
//! with `b >= 0`, so the all-slack basis is feasible and no phase one is
//! needed.
//!
//! Entering columns follow the most negative reduced cost; after a run of
//! degenerate pivots the solver switches to Bland's rule (lowest index enters,
//! lowest basic index leaves on ties) until the objective moves again, which
//! rules out cycling.

use crate::error::{Error, Result};

use super::lp::LpModel;

const PIVOT_TOL: f64 = 1e-9;
const DEGENERATE_RUN: usize = 32;

#[derive(Clone, Debug)]
pub struct SimplexOptions {
    pub max_iterations: usize,
}

impl Default for SimplexOptions {
    fn default() -> Self {
        SimplexOptions {
            max_iterations: 200_000,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SimplexSolution {
    pub x: Vec<f64>,
    /// `c.x` without the model's constant offset.
    pub linear_objective: f64,
    /// Dual objective `b.y` for the certificate `y <= 0`, `A^T y <= c`.
    pub dual_objective: f64,
    pub iterations: usize,
}

impl SimplexSolution {
    pub fn duality_gap(&self) -> f64 {
        (self.linear_objective - self.dual_objective).abs()
    }
}

struct Tableau {
    rows: usize,
    width: usize,
    /// `rows` constraint rows followed by the reduced-cost row; last column
    /// holds the right-hand side (negated objective in the cost row).
    data: Vec<f64>,
    basis: Vec<usize>,
}

impl Tableau {
    #[inline]
    fn at(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.width + j]
    }

    fn rhs(&self, i: usize) -> f64 {
        self.at(i, self.width - 1)
    }

    fn pivot(&mut self, r: usize, col: usize) {
        let w = self.width;
        let p = self.at(r, col);
        for v in &mut self.data[r * w..(r + 1) * w] {
            *v /= p;
        }
        let nz: Vec<usize> = (0..w).filter(|&j| self.data[r * w + j] != 0.0).collect();
        let pivot_row: Vec<f64> = nz.iter().map(|&j| self.data[r * w + j]).collect();
        for i in 0..=self.rows {
            if i == r {
                continue;
            }
            let f = self.data[i * w + col];
            if f == 0.0 {
                continue;
            }
            let row = &mut self.data[i * w..(i + 1) * w];
            for (&j, &a) in nz.iter().zip(&pivot_row) {
                row[j] -= f * a;
            }
            row[col] = 0.0;
        }
        self.basis[r] = col;
    }
}

/// Solve `model` with the dense tableau.
pub fn solve_dense(model: &LpModel, opts: &SimplexOptions) -> Result<SimplexSolution> {
    let nv = model.num_vars();

    // constraint rows, then finite upper bounds as rows
    let mut rows: Vec<(Vec<(usize, f64)>, f64)> = model
        .rows
        .iter()
        .map(|r| (r.coeffs.clone(), r.rhs))
        .collect();
    for (j, &u) in model.upper.iter().enumerate() {
        if u.is_finite() {
            rows.push((vec![(j, 1.0)], u));
        }
    }
    if let Some((_, b)) = rows.iter().find(|(_, b)| *b < 0.0) {
        return Err(Error::Solver(format!(
            "negative right-hand side {b} is unsupported"
        )));
    }

    let m = rows.len();
    let width = nv + m + 1;
    let mut t = Tableau {
        rows: m,
        width,
        data: vec![0.0; (m + 1) * width],
        basis: (nv..nv + m).collect(),
    };
    for (i, (coeffs, b)) in rows.iter().enumerate() {
        for &(j, a) in coeffs {
            t.data[i * width + j] += a;
        }
        t.data[i * width + nv + i] = 1.0;
        t.data[i * width + width - 1] = *b;
    }
    t.data[m * width..m * width + nv].copy_from_slice(&model.cost);

    let mut degenerate = 0usize;
    let mut iterations = 0usize;
    loop {
        let bland = degenerate >= DEGENERATE_RUN;
        let cost_row = &t.data[m * width..m * width + width - 1];
        let entering = if bland {
            cost_row.iter().position(|&r| r < -PIVOT_TOL)
        } else {
            cost_row
                .iter()
                .enumerate()
                .filter(|(_, &r)| r < -PIVOT_TOL)
                .min_by(|a, b| a.1.total_cmp(b.1))
                .map(|(j, _)| j)
        };
        let Some(col) = entering else { break };

        if iterations >= opts.max_iterations {
            return Err(Error::Solver(format!(
                "unsolved: iteration limit {} reached",
                opts.max_iterations
            )));
        }
        iterations += 1;

        let mut leave: Option<(usize, f64)> = None;
        for i in 0..m {
            let a = t.at(i, col);
            if a <= PIVOT_TOL {
                continue;
            }
            let ratio = t.rhs(i).max(0.0) / a;
            leave = match leave {
                None => Some((i, ratio)),
                Some((r, best)) => {
                    let better = if (ratio - best).abs() <= 1e-12 {
                        if bland {
                            t.basis[i] < t.basis[r]
                        } else {
                            a > t.at(r, col)
                        }
                    } else {
                        ratio < best
                    };
                    if better {
                        Some((i, ratio))
                    } else {
                        Some((r, best))
                    }
                }
            };
        }
        let Some((r, ratio)) = leave else {
            return Err(Error::Solver("unbounded objective".into()));
        };
        if ratio <= PIVOT_TOL {
            degenerate += 1;
        } else {
            degenerate = 0;
        }
        t.pivot(r, col);
    }

    let mut x = vec![0.0; nv];
    for (i, &b) in t.basis.iter().enumerate() {
        if b < nv {
            x[b] = t.rhs(i).max(0.0);
        }
    }
    for (v, &u) in x.iter_mut().zip(&model.upper) {
        *v = v.min(u);
    }
    let linear_objective = model.cost.iter().zip(&x).map(|(c, v)| c * v).sum();
    // slack reduced cost is -y_i
    let dual_objective = rows
        .iter()
        .enumerate()
        .map(|(i, (_, b))| -t.at(m, nv + i) * b)
        .sum();
    Ok(SimplexSolution {
        x,
        linear_objective,
        dual_objective,
        iterations,
    })
}
