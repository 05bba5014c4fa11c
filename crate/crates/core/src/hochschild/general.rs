//! Hochschild cochains of a dga with coefficients in any dg-bimodule.
//!
//! `EH(A, M)^{p,q} = Hom(A^{⊗p}, M)^q` consists of maps sending
//! `(A^{⊗p})_j` to `M_{j-q}`, so `q` may be negative when `M` has positive
//! degrees. A cochain is stored by its values `f(t)_μ` on tensor tuples `t`
//! and module basis elements `μ`.
//!
//! `b f(a_1,…,a_{p+1}) = (-1)^{|a_1|q} a_1 f(a_2,…) + Σ_i (-1)^i f(…, a_i a_{i+1}, …)
//! + (-1)^{p+1} f(a_1,…,a_p) a_{p+1}` and `δ f = φ_M f - (-1)^q f φ^{⊗p}`.
//! The total differential is `b + (-1)^p δ` in degree `p + q`.

use std::collections::HashMap;

use crate::chain::ChainBasis;
use crate::dga::bimodule::DgBimodule;
use crate::dga::Dga;
use crate::linalg::{rank, sign, Rat, RatMatrix};

fn s64(e: i64) -> Rat {
    sign(e.rem_euclid(2) as usize)
}

/// Basis of one cell: pairs (tuple, module element) in a fixed order.
struct CellBasis {
    entries: Vec<(Vec<u32>, usize)>,
    index: HashMap<(Vec<u32>, usize), usize>,
}

impl CellBasis {
    fn find(&self, t: &[u32], mu: usize) -> Option<usize> {
        self.index.get(&(t.to_vec(), mu)).copied()
    }
}

pub struct GeneralHochschild {
    a: Dga,
    m: DgBimodule,
    /// `rev_left[a][μ']`: the `(μ, c)` with `a·μ` containing `c μ'`.
    rev_left: Vec<Vec<Vec<(usize, Rat)>>>,
    rev_right: Vec<Vec<Vec<(usize, Rat)>>>,
    rev_diff: Vec<Vec<(usize, Rat)>>,
}

impl GeneralHochschild {
    pub fn new(a: &Dga, m: &DgBimodule) -> Self {
        let (ad, md) = (a.dim(), m.dim());
        let mut rev_left = vec![vec![Vec::new(); md]; ad];
        let mut rev_right = vec![vec![Vec::new(); md]; ad];
        let mut rev_diff = vec![Vec::new(); md];
        for x in 0..ad {
            for mu in 0..md {
                for (nu, c) in m.left_action(x, mu) {
                    rev_left[x][*nu].push((mu, c.clone()));
                }
                for (nu, c) in m.right_action(mu, x) {
                    rev_right[x][*nu].push((mu, c.clone()));
                }
            }
        }
        for mu in 0..md {
            for (nu, c) in m.diff_basis(mu) {
                rev_diff[*nu].push((mu, c.clone()));
            }
        }
        GeneralHochschild {
            a: a.clone(),
            m: m.clone(),
            rev_left,
            rev_right,
            rev_diff,
        }
    }

    fn tuples(&self, p: usize, j: i64) -> Vec<Vec<u32>> {
        if j < 0 {
            return Vec::new();
        }
        if p == 0 {
            return if j == 0 { vec![Vec::new()] } else { Vec::new() };
        }
        ChainBasis::enumerate(&self.a, p, j as usize, false)
            .iter()
            .map(<[u32]>::to_vec)
            .collect()
    }

    fn cell(&self, p: usize, q: i64) -> CellBasis {
        let mut entries = Vec::new();
        for j in 0..=(p * self.a.top_degree()) as i64 {
            let mus: Vec<usize> = (0..self.m.dim()).filter(|&mu| self.m.degree(mu) == j - q).collect();
            if mus.is_empty() {
                continue;
            }
            for t in self.tuples(p, j) {
                for &mu in &mus {
                    entries.push((t.clone(), mu));
                }
            }
        }
        let index = entries.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        CellBasis { entries, index }
    }

    pub fn cell_dim(&self, p: usize, q: i64) -> usize {
        self.cell(p, q).entries.len()
    }

    fn deg(&self, x: u32) -> i64 {
        self.a.degree(x as usize) as i64
    }

    /// `b: EH^{p,q} → EH^{p+1,q}`.
    pub fn b(&self, p: usize, q: i64) -> RatMatrix {
        let src = self.cell(p, q);
        let tgt = self.cell(p + 1, q);
        let mut trip = Vec::new();
        for (row, (t, nu)) in tgt.entries.iter().enumerate() {
            let a1 = t[0] as usize;
            let eps = s64(self.deg(t[0]) * q);
            for (mu, c) in &self.rev_left[a1][*nu] {
                if let Some(col) = src.find(&t[1..], *mu) {
                    trip.push((row, col, &eps * c));
                }
            }
            let mut v: Vec<u32> = Vec::with_capacity(p);
            for i in 1..=p {
                // 1-based factors a_i, a_{i+1} sit at t[i-1], t[i].
                for (k, c) in self.a.product_basis(t[i - 1] as usize, t[i] as usize) {
                    v.clear();
                    v.extend_from_slice(&t[..i - 1]);
                    v.push(*k as u32);
                    v.extend_from_slice(&t[i + 1..]);
                    if let Some(col) = src.find(&v, *nu) {
                        trip.push((row, col, sign(i) * c));
                    }
                }
            }
            let last = t[p] as usize;
            for (mu, c) in &self.rev_right[last][*nu] {
                if let Some(col) = src.find(&t[..p], *mu) {
                    trip.push((row, col, sign(p + 1) * c));
                }
            }
        }
        RatMatrix::from_triplets(tgt.entries.len(), src.entries.len(), trip)
    }

    /// `δ: EH^{p,q} → EH^{p,q+1}`.
    pub fn delta(&self, p: usize, q: i64) -> RatMatrix {
        let src = self.cell(p, q);
        let tgt = self.cell(p, q + 1);
        let mut trip = Vec::new();
        let outer = -s64(q);
        for (row, (t, nu)) in tgt.entries.iter().enumerate() {
            for (mu, c) in &self.rev_diff[*nu] {
                if let Some(col) = src.find(t, *mu) {
                    trip.push((row, col, c.clone()));
                }
            }
            let mut v = t.clone();
            let mut prefix = 0i64;
            for i in 0..p {
                for (k, c) in self.a.diff_basis(t[i] as usize) {
                    v[i] = *k as u32;
                    if let Some(col) = src.find(&v, *nu) {
                        trip.push((row, col, &outer * s64(prefix) * c));
                    }
                }
                v[i] = t[i];
                prefix += self.deg(t[i]);
            }
        }
        RatMatrix::from_triplets(tgt.entries.len(), src.entries.len(), trip)
    }

    fn cells_in_degree(&self, n: i64) -> Vec<(usize, i64)> {
        let (_, hi) = self.m.degree_range();
        let pmax = n + hi;
        if pmax < 0 {
            return Vec::new();
        }
        (0..=pmax as usize)
            .map(|p| (p, n - p as i64))
            .filter(|&(p, q)| self.cell_dim(p, q) > 0)
            .collect()
    }

    /// Total-complex differential out of degree `n`.
    pub fn differential(&self, n: i64) -> RatMatrix {
        let src = self.cells_in_degree(n);
        let tgt = self.cells_in_degree(n + 1);
        let off = |cells: &[(usize, i64)]| -> (Vec<usize>, usize) {
            let mut o = Vec::new();
            let mut acc = 0;
            for &(p, q) in cells {
                o.push(acc);
                acc += self.cell_dim(p, q);
            }
            (o, acc)
        };
        let (so, sd) = off(&src);
        let (to, td) = off(&tgt);
        let mut builder = crate::linalg::BlockBuilder::new(td, sd);
        for (i, &(p, q)) in src.iter().enumerate() {
            if let Some(j) = tgt.iter().position(|&c| c == (p + 1, q)) {
                builder.add_block(to[j], so[i], &self.b(p, q));
            }
            if let Some(j) = tgt.iter().position(|&c| c == (p, q + 1)) {
                builder.add_block(to[j], so[i], &self.delta(p, q).scale(&sign(p)));
            }
        }
        builder.build()
    }

    pub fn total_dim(&self, n: i64) -> usize {
        self.cells_in_degree(n).iter().map(|&(p, q)| self.cell_dim(p, q)).sum()
    }

    /// `dim HH^n(A, M)`.
    pub fn hh_dim(&self, n: i64) -> usize {
        let dim = self.total_dim(n);
        dim - rank(&self.differential(n)) - rank(&self.differential(n - 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::dga::bimodule::dual_bimodule;
    use crate::hochschild::{cochains_of, hh_dim};

    #[test]
    fn squares_and_commutation() {
        for name in catalog::ALGEBRAS {
            let a = catalog::algebra(name).unwrap();
            for m in [DgBimodule::regular(&a), dual_bimodule(&a)] {
                let g = GeneralHochschild::new(&a, &m);
                for p in 0..3 {
                    for q in -3i64..4 {
                        assert!(g.b(p + 1, q).mul(&g.b(p, q)).is_zero(), "{name} bb p={p} q={q}");
                        assert!(g.delta(p, q + 1).mul(&g.delta(p, q)).is_zero(), "{name} δδ");
                        let l = g.delta(p + 1, q).mul(&g.b(p, q));
                        let r = g.b(p, q + 1).mul(&g.delta(p, q));
                        assert_eq!(l, r, "{name} δb p={p} q={q}");
                    }
                }
                for n in -2i64..4 {
                    assert!(g.differential(n + 1).mul(&g.differential(n)).is_zero());
                }
            }
        }
    }

    #[test]
    fn dual_coefficients_match_cyclic_cochains() {
        for name in catalog::ALGEBRAS {
            let a = catalog::algebra(name).unwrap();
            let g = GeneralHochschild::new(&a, &dual_bimodule(&a));
            let c = cochains_of(&a);
            for n in 0..4 {
                assert_eq!(g.hh_dim(n as i64), hh_dim(&c, n), "{name} n={n}");
            }
        }
    }

    #[test]
    fn ground_field_with_itself() {
        let k = catalog::algebra("ground_field").unwrap();
        let g = GeneralHochschild::new(&k, &DgBimodule::regular(&k));
        let dims: Vec<usize> = (0..4).map(|n| g.hh_dim(n)).collect();
        assert_eq!(dims, vec![1, 0, 0, 0]);
    }
}
