//! The LP relaxation of edge/triangle correlation clustering.
//!
//! Variables: one `x_e` per vertex pair and one `x_T` per vertex triple, each
//! the relaxed indicator that the tuple is split across clusters. Every
//! constraint is stored as `sum(coeff * x) <= rhs`.

use serde::{Deserialize, Serialize};

use crate::instance::{Partition, WeightedInstance};
use crate::tuples::{self, choose2, choose3};

pub const FEASIBILITY_TOL: f64 = 1e-7;
pub const OBJECTIVE_TOL: f64 = 1e-6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// `x_e <= x_T` for each pair `e` inside triple `T`.
    SplitPairSplitsTriple,
    /// `x_T <= (x_uv + x_uw + x_vw) / 2`.
    TripleHalfSum,
    /// `x_T <= 1`.
    TripleUpper,
    /// `x_vw <= x_uv + x_uw`.
    Triangle,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub family: Family,
    pub name: String,
    pub coeffs: Vec<(usize, f64)>,
    pub rhs: f64,
}

/// LP over `C(n,2) + C(n,3)` variables: pair variables first, then triples,
/// each block in [`tuples`] index order.
#[derive(Clone, Debug, PartialEq)]
pub struct LpModel {
    pub n: usize,
    /// Linear objective coefficients.
    pub cost: Vec<f64>,
    /// Constant part of the objective.
    pub cost_offset: f64,
    /// Upper bound per variable; all lower bounds are zero.
    pub upper: Vec<f64>,
    pub rows: Vec<Row>,
}

impl LpModel {
    pub fn num_pairs(&self) -> usize {
        choose2(self.n)
    }

    pub fn num_vars(&self) -> usize {
        self.cost.len()
    }

    pub fn count(&self, family: Family) -> usize {
        self.rows.iter().filter(|r| r.family == family).count()
    }

    /// `x_i_j` for pairs and `x_i_j_k` for triples, ids ascending.
    pub fn var_names(&self) -> Vec<String> {
        let pairs = tuples::pairs(self.n).map(|(a, b)| format!("x_{a}_{b}"));
        let triples = tuples::triples(self.n).map(|[a, b, c]| format!("x_{a}_{b}_{c}"));
        pairs.chain(triples).collect()
    }

    /// `offset + cost . x`.
    pub fn evaluate(&self, x: &[f64]) -> f64 {
        self.cost_offset + self.cost.iter().zip(x).map(|(c, v)| c * v).sum::<f64>()
    }

    /// Largest violation over rows and bounds (0 when feasible).
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let rows = self.rows.iter().map(|r| {
            let lhs: f64 = r.coeffs.iter().map(|&(j, a)| a * x[j]).sum();
            lhs - r.rhs
        });
        let bounds = x.iter().zip(&self.upper).map(|(&v, &u)| (-v).max(v - u));
        rows.chain(bounds).fold(0.0, f64::max)
    }
}

/// Build the relaxation for `inst`. `lambda1` and `lambda2` scale the pair
/// and triple objective terms; the constraints do not depend on them.
pub fn build_lp(inst: &WeightedInstance) -> LpModel {
    let n = inst.n();
    let np = choose2(n);
    let (l1, l2) = (inst.lambda1, inst.lambda2);

    // w x + (1 - w)(1 - x) = (1 - w) + (2w - 1) x
    let mut cost = Vec::with_capacity(np + choose3(n));
    let mut cost_offset = 0.0;
    for &w in inst.pair_weights() {
        cost.push(l1 * (2.0 * w - 1.0));
        cost_offset += l1 * (1.0 - w);
    }
    for &w in inst.triple_weights() {
        cost.push(l2 * (2.0 * w - 1.0));
        cost_offset += l2 * (1.0 - w);
    }

    let mut upper = vec![1.0; np];
    upper.extend(std::iter::repeat_n(f64::INFINITY, choose3(n)));

    let mut rows = Vec::with_capacity(8 * choose3(n));
    for (t, [a, b, c]) in tuples::triples(n).enumerate() {
        let xt = np + t;
        let tag = format!("{a}_{b}_{c}");
        let e = [
            tuples::pair_index(a, b),
            tuples::pair_index(a, c),
            tuples::pair_index(b, c),
        ];
        for (k, &xe) in e.iter().enumerate() {
            rows.push(Row {
                family: Family::SplitPairSplitsTriple,
                name: format!("a_{tag}_{k}"),
                coeffs: vec![(xe, 1.0), (xt, -1.0)],
                rhs: 0.0,
            });
        }
        rows.push(Row {
            family: Family::TripleHalfSum,
            name: format!("b_{tag}"),
            coeffs: vec![(xt, 1.0), (e[0], -0.5), (e[1], -0.5), (e[2], -0.5)],
            rhs: 0.0,
        });
        rows.push(Row {
            family: Family::TripleUpper,
            name: format!("u_{tag}"),
            coeffs: vec![(xt, 1.0)],
            rhs: 1.0,
        });
        for k in 0..3 {
            let (p, q) = ((k + 1) % 3, (k + 2) % 3);
            rows.push(Row {
                family: Family::Triangle,
                name: format!("c_{tag}_{k}"),
                coeffs: vec![(e[k], 1.0), (e[p], -1.0), (e[q], -1.0)],
                rhs: 0.0,
            });
        }
    }
    LpModel {
        n,
        cost,
        cost_offset,
        upper,
        rows,
    }
}

/// Fractional split indicators plus the objective they attain.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub n: usize,
    pub x_pair: Vec<f64>,
    pub x_triple: Vec<f64>,
    pub objective: f64,
}

impl LpSolution {
    /// Split `x` into pair and triple blocks and evaluate the objective.
    pub fn from_values(model: &LpModel, x: Vec<f64>) -> Self {
        let objective = model.evaluate(&x);
        let mut x_pair = x;
        let x_triple = x_pair.split_off(model.num_pairs());
        LpSolution {
            n: model.n,
            x_pair,
            x_triple,
            objective,
        }
    }

    /// The 0/1 split indicators of a partition.
    pub fn from_partition(model: &LpModel, p: &Partition) -> Self {
        let n = model.n;
        let mut x: Vec<f64> = tuples::pairs(n)
            .map(|(u, v)| if p.together(u, v) { 0.0 } else { 1.0 })
            .collect();
        x.extend(tuples::triples(n).map(|[a, b, c]| {
            if p.together(a, b) && p.together(a, c) {
                0.0
            } else {
                1.0
            }
        }));
        Self::from_values(model, x)
    }

    #[inline]
    pub fn pair(&self, u: usize, v: usize) -> f64 {
        self.x_pair[tuples::pair_index(u, v)]
    }

    pub fn values(&self) -> Vec<f64> {
        self.x_pair.iter().chain(&self.x_triple).copied().collect()
    }

    pub fn max_violation(&self, model: &LpModel) -> f64 {
        model.max_violation(&self.values())
    }

    pub fn is_feasible(&self, model: &LpModel) -> bool {
        self.max_violation(model) <= FEASIBILITY_TOL
    }
}
