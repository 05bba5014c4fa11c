//! Morphisms of spectral sequences on pages 0 and 1, the maps to the
//! degree-zero part, and the partial-cohomology reductions.

use std::sync::Arc;

use serde::Serialize;

use crate::chain::Cochains;
use crate::complex::{self, assemble, Complex};
use crate::cyclic::{hc_dim, hcp_dim, EcComplex, HcpComplex, LambdaSequence, Method};
use crate::dga::Dga;
use crate::hochschild::{cochains_of, hh_dim, hhp_dim, hhp_inclusion_check, EhComplex, InclusionReport, RowComplex};
use crate::linalg::{rank, Rat, RatMatrix};

use super::{induced_page_map, preserves_filtration, Filtered, Filtration};

#[derive(Clone, Debug, Serialize)]
pub struct PageMapRank {
    pub r: usize,
    pub p: usize,
    pub n: usize,
    pub rank: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismCheck {
    pub name: String,
    pub preserves_filtration: bool,
    pub commutes_page0: bool,
    pub commutes_page1: bool,
    pub ranks: Vec<PageMapRank>,
}

impl MorphismCheck {
    pub fn holds(&self) -> bool {
        self.preserves_filtration && self.commutes_page0 && self.commutes_page1
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MorphismReport {
    pub morphisms: Vec<MorphismCheck>,
}

impl MorphismReport {
    pub fn all_hold(&self) -> bool {
        self.morphisms.iter().all(MorphismCheck::holds)
    }
}

fn check_morphism(
    name: &str,
    src: &Filtered,
    tgt: &Filtered,
    f: &dyn Fn(usize) -> RatMatrix,
    n_max: usize,
) -> MorphismCheck {
    let maps: Vec<RatMatrix> = (0..=n_max + 1).map(f).collect();
    let preserves = (0..=n_max + 1).all(|n| preserves_filtration(src, tgt, &maps[n], n));
    let mut commutes = [true, true];
    let mut ranks = Vec::new();
    if preserves {
        for (r, commutes_r) in commutes.iter_mut().enumerate() {
            for n in 0..=n_max {
                let top = src.max_level(n).max(tgt.max_level(n));
                for p in 0..=top {
                    let here = induced_page_map(src, tgt, &maps[n], r, p, n)
                        .expect("filtration-preserving map sends Z_r into Z_r");
                    let there = induced_page_map(src, tgt, &maps[n + 1], r, p + r, n + 1)
                        .expect("filtration-preserving map sends Z_r into Z_r");
                    let lhs = there.mul(&src.page_differential(r, p, n));
                    let rhs = tgt.page_differential(r, p, n).mul(&here);
                    *commutes_r &= lhs == rhs;
                    ranks.push(PageMapRank {
                        r,
                        p,
                        n,
                        rank: rank(&here),
                    });
                }
            }
        }
    }
    MorphismCheck {
        name: name.to_string(),
        preserves_filtration: preserves,
        commutes_page0: preserves && commutes[0],
        commutes_page1: preserves && commutes[1],
        ranks,
    }
}

/// The identity of `T(EC)` as maps `F1 → F13` and `F3 → F13`, and the
/// inclusion `C_Λ ⊂ T(EH)` with both filtered by arity.
pub fn ss_morphism_check(c: &Arc<Cochains>, n_max: usize) -> MorphismReport {
    let ec = EcComplex::new(c.clone());
    let id = |n: usize| RatMatrix::identity(ec.layout(n).dim());
    let f13 = Filtered::new(&ec, Filtration::F13.level_fn());
    let f1 = Filtered::new(&ec, Filtration::F1.level_fn());
    let f3 = Filtered::new(&ec, Filtration::F3.level_fn());

    let seq = LambdaSequence::new(c.clone());
    let arity: super::LevelFn = Arc::new(|k: &[usize]| k[0]);
    let sub = Filtered::new(&seq.sub, arity.clone());
    let eh = Filtered::new(&seq.eh, arity);
    let inc = |n: usize| seq.inclusion(n);

    MorphismReport {
        morphisms: vec![
            check_morphism("F1 -> F13", &f1, &f13, &id, n_max),
            check_morphism("F3 -> F13", &f3, &f13, &id, n_max),
            check_morphism("C_Lambda -> EH", &sub, &eh, &inc, n_max),
        ],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionMap {
    pub name: String,
    pub n: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    pub chain_map: bool,
    pub rank: usize,
}

/// Matrix from functionals on degree-0 chains of `a` to those of `a0`,
/// restricting along the inclusion `a0 ⊂ a` (matched by labels).
fn restriction_block(a: &Cochains, a0: &Cochains, n: usize) -> RatMatrix {
    let (big, small) = (a.basis(n, 0), a0.basis(n, 0));
    let to_big: Vec<u32> = (0..a0.algebra().dim())
        .map(|i| {
            let l = a0.algebra().label(i);
            (0..a.algebra().dim())
                .find(|&j| a.algebra().label(j) == l)
                .expect("degree-zero label present in the algebra") as u32
        })
        .collect();
    let trip = (0..small.len())
        .map(|i| {
            let chain: Vec<u32> = small.chain(i).iter().map(|&e| to_big[e as usize]).collect();
            let j = big.find(&chain).expect("chain of the degree-zero part");
            (i, j, Rat::from_integer(1.into()))
        })
        .collect();
    RatMatrix::from_triplets(small.len(), big.len(), trip)
}

fn induced(
    name: &str,
    n: usize,
    src: &dyn Complex,
    tgt: &dyn Complex,
    f: &dyn Fn(usize) -> RatMatrix,
) -> RestrictionMap {
    let (f_n, f_next) = (f(n), f(n + 1));
    let chain_map = complex::commutes(&f_n, &f_next, &src.differential(n), &tgt.differential(n));
    let reps = complex::cohomology_representatives(src, n);
    RestrictionMap {
        name: name.to_string(),
        n,
        source_dim: reps.ncols(),
        target_dim: complex::cohomology_dim(tgt, n),
        chain_map,
        rank: complex::induced_rank(&f_n, &reps, &complex::coboundaries(tgt, n)),
    }
}

/// `HH^n(A) → HH^n(A^0)`, `HCP^n_0 → HHP^n_0` and `HC^n(A^0) → HH^n(A^0)`,
/// each induced by projecting onto a boundary row or column.
pub fn restriction_maps(a: &Dga, n_max: usize) -> Vec<RestrictionMap> {
    let c = cochains_of(a);
    let c0 = cochains_of(&a.degree_zero_part());
    let eh = EhComplex::new(c.clone());
    let eh0 = EhComplex::new(c0.clone());
    let ec0 = EcComplex::new(c0.clone());
    let hcp = HcpComplex::new(c.clone(), 0);
    let row = RowComplex::new(c.clone(), 0);

    let to_a0 = |n: usize| {
        let block = restriction_block(&c, &c0, n);
        assemble(&eh.layout(n), &eh0.layout(n), |key| {
            if key[1] == 0 {
                vec![(key.to_vec(), block.clone())]
            } else {
                Vec::new()
            }
        })
    };
    let hcp_to_row = |n: usize| {
        assemble(&hcp.layout(n), &row.layout(n), |key| {
            if key[0] == 0 {
                vec![(vec![n, 0], RatMatrix::identity(c.dim(n, 0)))]
            } else {
                Vec::new()
            }
        })
    };
    let ec_to_eh = |n: usize| {
        assemble(&ec0.layout(n), &eh0.layout(n), |key| {
            if key[0] == 0 {
                vec![(vec![key[1], key[2]], RatMatrix::identity(c0.dim(key[1], key[2])))]
            } else {
                Vec::new()
            }
        })
    };

    let mut out = Vec::new();
    for n in 0..=n_max {
        out.push(induced("HH(A) -> HH(A0)", n, &eh, &eh0, &to_a0));
        out.push(induced("HCP_0 -> HHP_0", n, &hcp, &row, &hcp_to_row));
        out.push(induced("HC(A0) -> HH(A0)", n, &ec0, &eh0, &ec_to_eh));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PartialReduction {
    pub m: usize,
    pub hcp0: usize,
    pub hc_a0: usize,
    pub hhp0: usize,
    pub hh_a0: usize,
    pub hhp_inclusion: InclusionReport,
    pub hcp_inclusion: InclusionReport,
}

impl PartialReduction {
    pub fn reductions_hold(&self) -> bool {
        self.hcp0 == self.hc_a0 && self.hhp0 == self.hh_a0
    }

    pub fn inclusions_injective(&self) -> bool {
        self.hhp_inclusion.injective && self.hcp_inclusion.injective
    }
}

/// Tests whether the internal-degree-0 part of the `(b, B)` bicomplex
/// induces an injection `HCP^n_0 → HC^n`.
pub fn hcp_inclusion_check(c: &Arc<Cochains>, n: usize) -> InclusionReport {
    let ec = EcComplex::new(c.clone());
    let hcp = HcpComplex::new(c.clone(), 0);
    let inc = assemble(&hcp.layout(n), &ec.layout(n), |key| {
        let (p, q) = (key[0], key[1]);
        vec![(vec![p, q, 0], RatMatrix::identity(c.dim(q - p, 0)))]
    });
    let z = complex::cocycles(&hcp, n);
    let is_cochain_map = ec.differential(n).mul(&inc.mul(z.basis())).is_zero();
    let reps = complex::cohomology_representatives(&hcp, n);
    let induced_rank = is_cochain_map.then(|| complex::induced_rank(&inc, &reps, &complex::coboundaries(&ec, n)));
    let source_dim = reps.ncols();
    InclusionReport {
        n,
        source_dim,
        target_dim: complex::cohomology_dim(&ec, n),
        is_cochain_map,
        induced_rank,
        injective: induced_rank == Some(source_dim),
    }
}

/// `HCP^m_0(A) ≃ HC^m(A^0)` and `HHP^m_0(A) ≃ HH^m(A^0)` in dimension, with
/// the inclusions into `HC^m` and `HH^m` tested for injectivity.
pub fn partial_reductions(a: &Dga, m_max: usize) -> Vec<PartialReduction> {
    let c = cochains_of(a);
    let c0 = cochains_of(&a.degree_zero_part());
    (0..=m_max)
        .map(|m| PartialReduction {
            m,
            hcp0: hcp_dim(&c, m, 0),
            hc_a0: hc_dim(&c0, m, Method::Lambda),
            hhp0: hhp_dim(&c, m, 0),
            hh_a0: hh_dim(&c0, m),
            hhp_inclusion: hhp_inclusion_check(&c, m),
            hcp_inclusion: hcp_inclusion_check(&c, m),
        })
        .collect()
}
