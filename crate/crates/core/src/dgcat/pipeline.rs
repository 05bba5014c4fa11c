//! Hochschild and cyclic cohomology of a dg-category with coefficients in
//! its dual bimodule, through the same cochain machinery as for dgas.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use crate::chain::{ChainAlgebra, Cochains};
use crate::cyclic::{hc_dim, Method};
use crate::hochschild::{cochains_for, hh_dim};
use crate::spectral::{
    convergence_check, degeneracy_edge_check, e1_identification, low_degree_hc, ConvergenceReport, DegeneracyReport,
    E1Report, Filtration, LowDegreeReport, TriSpectral,
};

use super::DgCategory;

pub fn cat_cochains(c: &DgCategory) -> Arc<Cochains> {
    cochains_for(c.clone())
}

/// One cell `EH(𝒜, 𝒟)^{n,q}`, split by object tuple `(X_0, …, X_n)`.
#[derive(Clone, Debug, Serialize)]
pub struct CatCell {
    pub n: usize,
    pub q: usize,
    pub dim: usize,
    pub by_tuple: BTreeMap<Vec<usize>, usize>,
}

/// Chains `a_0 ⊗ … ⊗ a_n` with `a_0 ∈ 𝒜(X_n, X_0)` and
/// `a_i ∈ 𝒜(X_{i-1}, X_i)`, grouped by `(X_0, …, X_n)`.
pub fn eh_cat_cell(c: &Cochains, n: usize, q: usize) -> CatCell {
    let basis = c.basis(n, q);
    let alg = c.algebra();
    let mut by_tuple = BTreeMap::new();
    for chain in basis.iter() {
        let tuple: Vec<usize> = chain.iter().map(|&e| alg.target(e as usize)).collect();
        *by_tuple.entry(tuple).or_insert(0) += 1;
    }
    CatCell {
        n,
        q,
        dim: basis.len(),
        by_tuple,
    }
}

pub fn hh_cat_dim(c: &DgCategory, n: usize) -> usize {
    hh_dim(&cat_cochains(c), n)
}

pub fn hc_cat_dim(c: &DgCategory, n: usize, method: Method) -> usize {
    hc_dim(&cat_cochains(c), n, method)
}

#[derive(Clone, Debug, Serialize)]
pub struct CatF1Report {
    pub convergence: Vec<ConvergenceReport>,
    pub band_vanishes: bool,
    pub e1: E1Report,
    pub low_degree: LowDegreeReport,
    pub degeneracy: Vec<DegeneracyReport>,
}

impl CatF1Report {
    pub fn all_hold(&self) -> bool {
        self.convergence.iter().all(|c| c.holds)
            && self.band_vanishes
            && self.e1.all_hold()
            && self.low_degree.holds
            && self.degeneracy.iter().all(|d| d.edge_holds != Some(false))
    }
}

/// The `F1` spectral sequence of `EC(𝒜)` in total degrees `≤ max`.
pub fn f1_ss_cat(c: &DgCategory, max: usize) -> CatF1Report {
    let co = cat_cochains(c);
    let ss = TriSpectral::new(co.clone(), Filtration::F1);
    let band_vanishes = (0..=max).all(|n| (n / 2 + 1..=n).all(|p| ss.infinity_dim(p, (n - p) as i64) == 0));
    CatF1Report {
        convergence: (0..=max).map(|n| convergence_check(&co, Filtration::F1, n)).collect(),
        band_vanishes,
        e1: e1_identification(&co, Filtration::F1, max),
        low_degree: low_degree_hc(&co),
        degeneracy: (1..=max).map(|n| degeneracy_edge_check(&co, n)).collect(),
    }
}

/// Whether the cells of `a ⊔ b` are the block sums of those of `a` and `b`:
/// every tuple mixing objects of both contributes nothing.
pub fn union_is_blockwise(a: &DgCategory, b: &DgCategory, n: usize, q: usize) -> bool {
    let u = a.disjoint_union(b);
    let (ca, cb, cu) = (cat_cochains(a), cat_cochains(b), cat_cochains(&u));
    let (xa, xb, xu) = (eh_cat_cell(&ca, n, q), eh_cat_cell(&cb, n, q), eh_cat_cell(&cu, n, q));
    let shift = ChainAlgebra::objects(a);
    let mixed = xu
        .by_tuple
        .keys()
        .any(|t| t.iter().any(|&x| x < shift) && t.iter().any(|&x| x >= shift));
    let left: usize = xu
        .by_tuple
        .iter()
        .filter(|(t, _)| t.iter().all(|&x| x < shift))
        .map(|(_, d)| d)
        .sum();
    xu.dim == xa.dim + xb.dim && !mixed && left == xa.dim
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cyclic::{hc_dims, hcp_dim, verify_cocyclic_identities, Standard};
    use crate::hochschild::{cochains_of, hhp_dim};

    #[test]
    fn one_object_matches_the_algebra() {
        for name in catalog::ALGEBRAS {
            let a = catalog::algebra(name).unwrap();
            let cat = DgCategory::from_dga(&a);
            let (ca, cc) = (cochains_of(&a), cat_cochains(&cat));
            for n in 0..=3 {
                assert_eq!(hh_dim(&ca, n), hh_dim(&cc, n), "{name} HH^{n}");
                assert_eq!(
                    hc_dim(&ca, n, Method::Lambda),
                    hc_dim(&cc, n, Method::Tricomplex),
                    "{name}"
                );
                for m in 0..=2 {
                    assert_eq!(hcp_dim(&ca, n, m), hcp_dim(&cc, n, m));
                    assert_eq!(hhp_dim(&ca, n, m), hhp_dim(&cc, n, m));
                }
            }
            let (sa, sc) = (
                TriSpectral::new(ca, Filtration::F1),
                TriSpectral::new(cc, Filtration::F1),
            );
            for r in 0..=2 {
                assert_eq!(sa.grid(Some(r), 3), sc.grid(Some(r), 3), "{name} E_{r}");
            }
        }
    }

    #[test]
    fn a2_path_category() {
        let c = catalog::category("a2_path").unwrap();
        let co = cat_cochains(&c);
        // Hereditary with two vertices: HH lives in degree 0 only.
        assert_eq!((0..=3).map(|n| hh_dim(&co, n)).collect::<Vec<_>>(), vec![2, 0, 0, 0]);
        assert_eq!(hc_dims(&co, 3, Method::Tricomplex), vec![2, 0, 2, 0]);
        assert!(verify_cocyclic_identities(&Standard(co), 3, 0).all_hold());
        let r = f1_ss_cat(&c, 3);
        assert!(r.all_hold(), "{r:?}");
    }

    #[test]
    fn disjoint_union_is_additive() {
        let a = DgCategory::from_dga(&catalog::algebra("dual_numbers").unwrap());
        let b = DgCategory::from_dga(&catalog::algebra("koszul").unwrap());
        for n in 0..=3 {
            for q in 0..=3 {
                assert!(union_is_blockwise(&a, &b, n, q), "n={n} q={q}");
            }
        }
        let u = a.disjoint_union(&b);
        assert!(u.check().is_empty());
        for n in 0..=2 {
            assert_eq!(hh_cat_dim(&u, n), hh_cat_dim(&a, n) + hh_cat_dim(&b, n));
            assert_eq!(
                hc_cat_dim(&u, n, Method::Lambda),
                hc_cat_dim(&a, n, Method::Lambda) + hc_cat_dim(&b, n, Method::Lambda)
            );
        }
        let (su, sa, sb) = (
            TriSpectral::new(cat_cochains(&u), Filtration::F1),
            TriSpectral::new(cat_cochains(&a), Filtration::F1),
            TriSpectral::new(cat_cochains(&b), Filtration::F1),
        );
        for p in 0..=2 {
            for q in 0..=2 {
                assert_eq!(su.page_dim(1, p, q), sa.page_dim(1, p, q) + sb.page_dim(1, p, q));
            }
        }
    }

    #[test]
    fn degree_zero_cells() {
        let c = catalog::category("a2_path").unwrap();
        let cell = eh_cat_cell(&cat_cochains(&c), 0, 0);
        // n = 0: one functional per endomorphism, Σ_X dim 𝒜(X, X).
        assert_eq!(cell.dim, 2);
        assert_eq!(cell.by_tuple.len(), 2);
    }
}
