//! Differential graded bimodules over a dga.
//!
//! Degrees are integers so that duals, which live in non-positive degrees,
//! fit the same type. The module differential lowers degree by one.

use std::collections::BTreeMap;

use num_traits::One;

use crate::linalg::matrix::{axpby, normalize_row};
use crate::linalg::{sign, Rat, SparseRow};

use super::Dga;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgBimodule {
    labels: Vec<String>,
    degrees: Vec<i64>,
    algebra_dim: usize,
    /// `left[a * dim + μ] = e_a · μ`.
    left: Vec<SparseRow>,
    /// `right[μ * algebra_dim + a] = μ · e_a`.
    right: Vec<SparseRow>,
    diff: Vec<SparseRow>,
}

fn s64(e: i64) -> Rat {
    sign(e.rem_euclid(2) as usize)
}

impl DgBimodule {
    /// `A` as a bimodule over itself.
    pub fn regular(a: &Dga) -> Self {
        let n = a.dim();
        let mut left = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                left.push(a.product_basis(i, j).clone());
            }
        }
        DgBimodule {
            labels: a.labels().to_vec(),
            degrees: a.degrees().iter().map(|&d| d as i64).collect(),
            algebra_dim: n,
            right: left.clone(),
            left,
            diff: (0..n).map(|i| a.diff_basis(i).clone()).collect(),
        }
    }

    /// The graded dual `M^*`, with `(M^*)_{-j} = (M_j)^*` and
    /// `(a·f)(μ) = (-1)^{|a|(|f|+|μ|)} f(μ a)`, `(f·a)(μ) = f(a μ)`,
    /// `(φf)(μ) = -(-1)^{|f|} f(φμ)`.
    pub fn dual(&self, a: &Dga) -> Self {
        let n = self.dim();
        let ad = self.algebra_dim;
        let degrees: Vec<i64> = self.degrees.iter().map(|d| -d).collect();
        let mut left = vec![Vec::new(); ad * n];
        let mut right = vec![Vec::new(); n * ad];
        let mut diff = vec![Vec::new(); n];
        // f = e^ν (dual basis). (a·e^ν)(μ) = ± coefficient of ν in μ·a.
        for mu in 0..n {
            for x in 0..ad {
                for (nu, c) in self.right_action(mu, x) {
                    let s = s64(a.degree(x) as i64 * (degrees[*nu] + self.degrees[mu]));
                    left[x * n + nu].push((mu, &s * c));
                }
                for (nu, c) in self.left_action(x, mu) {
                    right[nu * ad + x].push((mu, c.clone()));
                }
            }
            for (nu, c) in &self.diff[mu] {
                let s = -s64(degrees[*nu]);
                diff[*nu].push((mu, &s * c));
            }
        }
        DgBimodule {
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
            degrees,
            algebra_dim: ad,
            left: left.into_iter().map(normalize_row).collect(),
            right: right.into_iter().map(normalize_row).collect(),
            diff: diff.into_iter().map(normalize_row).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, mu: usize) -> i64 {
        self.degrees[mu]
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree_range(&self) -> (i64, i64) {
        let lo = self.degrees.iter().copied().min().unwrap_or(0);
        let hi = self.degrees.iter().copied().max().unwrap_or(0);
        (lo, hi)
    }

    pub fn dim_by_degree(&self) -> BTreeMap<i64, usize> {
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            *out.entry(d).or_insert(0) += 1;
        }
        out
    }

    pub fn left_action(&self, a: usize, mu: usize) -> &SparseRow {
        &self.left[a * self.dim() + mu]
    }

    pub fn right_action(&self, mu: usize, a: usize) -> &SparseRow {
        &self.right[mu * self.algebra_dim + a]
    }

    pub fn diff_basis(&self, mu: usize) -> &SparseRow {
        &self.diff[mu]
    }

    pub fn act_left(&self, u: &SparseRow, v: &SparseRow) -> SparseRow {
        let mut acc = Vec::new();
        for (a, x) in u {
            for (mu, y) in v {
                acc = axpby(&Rat::one(), &acc, &(x * y), self.left_action(*a, *mu));
            }
        }
        acc
    }

    pub fn act_right(&self, v: &SparseRow, u: &SparseRow) -> SparseRow {
        let mut acc = Vec::new();
        for (mu, y) in v {
            for (a, x) in u {
                acc = axpby(&Rat::one(), &acc, &(x * y), self.right_action(*mu, *a));
            }
        }
        acc
    }

    pub fn apply_diff(&self, v: &SparseRow) -> SparseRow {
        let mut acc = Vec::new();
        for (mu, y) in v {
            acc = axpby(&Rat::one(), &acc, y, &self.diff[*mu]);
        }
        acc
    }

    /// Checks the bimodule axioms against `a`; returns human-readable
    /// failures.
    pub fn check(&self, a: &Dga) -> Vec<String> {
        let mut out = Vec::new();
        let e = |i: usize| vec![(i, Rat::one())];
        let ad = a.dim();
        for mu in 0..self.dim() {
            let m = e(mu);
            for (nu, _) in &self.diff[mu] {
                if self.degrees[*nu] != self.degrees[mu] - 1 {
                    out.push(format!("d({}) has the wrong degree", self.labels[mu]));
                }
            }
            if !self.apply_diff(&self.diff[mu]).is_empty() {
                out.push(format!("d(d({})) != 0", self.labels[mu]));
            }
            if self.act_left(&e(a.unit()), &m) != m || self.act_right(&m, &e(a.unit())) != m {
                out.push(format!("unit does not act trivially on {}", self.labels[mu]));
            }
            for x in 0..ad {
                let ex = e(x);
                for (nu, _) in self.left_action(x, mu).iter().chain(self.right_action(mu, x)) {
                    if self.degrees[*nu] != self.degrees[mu] + a.degree(x) as i64 {
                        out.push(format!(
                            "action of {} on {} has the wrong degree",
                            a.label(x),
                            self.labels[mu]
                        ));
                    }
                }
                // Leibniz for both actions.
                let lhs = self.apply_diff(self.left_action(x, mu));
                let rhs = axpby(
                    &Rat::one(),
                    &self.act_left(a.diff_basis(x), &m),
                    &sign(a.degree(x)),
                    &self.act_left(&ex, self.diff_basis(mu)),
                );
                if lhs != rhs {
                    out.push(format!("Leibniz fails for {}·{}", a.label(x), self.labels[mu]));
                }
                let lhs = self.apply_diff(self.right_action(mu, x));
                let rhs = axpby(
                    &Rat::one(),
                    &self.act_right(self.diff_basis(mu), &ex),
                    &s64(self.degrees[mu]),
                    &self.act_right(&m, a.diff_basis(x)),
                );
                if lhs != rhs {
                    out.push(format!("Leibniz fails for {}·{}", self.labels[mu], a.label(x)));
                }
                for y in 0..ad {
                    let ey = e(y);
                    let xy = a.product_basis(x, y);
                    if self.act_left(xy, &m) != self.act_left(&ex, &self.act_left(&ey, &m)) {
                        out.push(format!(
                            "left action not associative at ({},{},{})",
                            a.label(x),
                            a.label(y),
                            self.labels[mu]
                        ));
                    }
                    if self.act_right(&m, xy) != self.act_right(&self.act_right(&m, &ex), &ey) {
                        out.push(format!(
                            "right action not associative at ({},{},{})",
                            self.labels[mu],
                            a.label(x),
                            a.label(y)
                        ));
                    }
                    let l = self.act_right(&self.act_left(&ex, &m), &ey);
                    let r = self.act_left(&ex, &self.act_right(&m, &ey));
                    if l != r {
                        out.push(format!(
                            "actions do not commute at ({},{},{})",
                            a.label(x),
                            self.labels[mu],
                            a.label(y)
                        ));
                    }
                }
            }
        }
        out
    }
}

/// The dual bimodule `A^*`.
pub fn dual_bimodule(a: &Dga) -> DgBimodule {
    DgBimodule::regular(a).dual(a)
}
