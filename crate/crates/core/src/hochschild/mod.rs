//! The Hochschild bicomplex with coefficients in the dual bimodule.
//!
//! `EH^{p,q} = C^p_q`: functionals on cyclic chains of `p + 1` elements and
//! total degree `q`. The total differential is `d = b + (-1)^p δ`.

pub mod general;

use std::sync::Arc;

use num_traits::One;

use crate::chain::{ChainAlgebra, Cochains};
use crate::complex::{self, assemble, Cell, Complex, Layout, SliceCache};
use crate::dga::Dga;
use crate::linalg::{sign, Rat, RatMatrix};

/// Cochains of a dga.
pub fn cochains_of(a: &Dga) -> Arc<Cochains> {
    Arc::new(Cochains::new(Arc::new(a.clone())))
}

/// Cochains of any chain algebra.
pub fn cochains_for<A: ChainAlgebra + 'static>(a: A) -> Arc<Cochains> {
    Arc::new(Cochains::new(Arc::new(a)))
}

/// The coface `∂^i: EH^{p,q} → EH^{p+1,q}`, `0 ≤ i ≤ p + 1`.
pub fn coface_matrix(c: &Cochains, i: usize, p: usize, q: usize) -> Arc<RatMatrix> {
    c.coface(i, p + 1, q)
}

/// `b` (or `b′` when `primed`) out of `EH^{p,q}`.
pub fn hochschild_b(c: &Cochains, p: usize, q: usize, primed: bool) -> Arc<RatMatrix> {
    if primed {
        c.b_prime(p, q)
    } else {
        c.b(p, q)
    }
}

pub fn internal_delta(c: &Cochains, p: usize, q: usize) -> Arc<RatMatrix> {
    c.delta(p, q)
}

/// `T(EH)` with cells `[p, q]`, `p + q = n`, ascending `p`.
pub struct EhComplex {
    c: Arc<Cochains>,
    cache: SliceCache,
}

impl EhComplex {
    pub fn new(c: Arc<Cochains>) -> Self {
        EhComplex {
            c,
            cache: SliceCache::default(),
        }
    }

    pub fn cochains(&self) -> &Arc<Cochains> {
        &self.c
    }
}

impl Complex for EhComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let cells = (0..=n)
                .map(|p| Cell {
                    key: vec![p, n - p],
                    dim: self.c.dim(p, n - p),
                })
                .collect();
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let (s, t) = (self.layout(n), self.layout(n + 1));
            assemble(&s, &t, |key| {
                let (p, q) = (key[0], key[1]);
                vec![
                    (vec![p + 1, q], (*self.c.b(p, q)).clone()),
                    (vec![p, q + 1], self.c.delta(p, q).scale(&sign(p))),
                ]
            })
        })
    }
}

/// `dim HH^n(A, A^*)`.
pub fn hh_dim(c: &Arc<Cochains>, n: usize) -> usize {
    complex::cohomology_dim(&EhComplex::new(c.clone()), n)
}

/// One row `C^0_m → C^1_m → …` of the bicomplex under `b` (or `-b′`).
pub struct RowComplex {
    c: Arc<Cochains>,
    internal: usize,
    cache: SliceCache,
}

impl RowComplex {
    pub fn new(c: Arc<Cochains>, internal: usize) -> Self {
        RowComplex {
            c,
            internal,
            cache: SliceCache::default(),
        }
    }
}

impl Complex for RowComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            Layout::new(
                n,
                vec![Cell {
                    key: vec![n, self.internal],
                    dim: self.c.dim(n, self.internal),
                }],
            )
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let (s, t) = (self.layout(n), self.layout(n + 1));
            let m = self.internal;
            assemble(&s, &t, |_| vec![(vec![n + 1, m], (*self.c.b(n, m)).clone())])
        })
    }
}

/// Partial Hochschild cohomology `HHP^n_m`: degree `n` of row `m`.
pub fn hhp_dim(c: &Arc<Cochains>, n: usize, internal: usize) -> usize {
    if internal > (n + 1) * c.max_degree() {
        return 0;
    }
    complex::cohomology_dim(&RowComplex::new(c.clone(), internal), n)
}

/// The inclusion of the row-0 cocycles `ker b ⊂ C^n_0` into `T(EH)^n`,
/// as a matrix from `C^n_0` coordinates.
pub fn row_zero_inclusion(eh: &EhComplex, n: usize) -> RatMatrix {
    let l = eh.layout(n);
    let d = eh.cochains().dim(n, 0);
    let trip = match l.position(&[n, 0]) {
        Some(i) => (0..d).map(|k| (l.offset(i) + k, k, Rat::one())).collect(),
        None => Vec::new(),
    };
    RatMatrix::from_triplets(l.dim(), d, trip)
}

/// Result of testing whether `HHP^n_0 → HH^n` is injective.
#[derive(Clone, Debug, serde::Serialize)]
pub struct InclusionReport {
    pub n: usize,
    pub source_dim: usize,
    pub target_dim: usize,
    /// Whether the row-0 cocycles are cocycles of the total complex, so
    /// that the inclusion induces a map at all.
    pub is_cochain_map: bool,
    pub induced_rank: Option<usize>,
    pub injective: bool,
}

/// Tests the claimed inclusion `HHP^n_0 ⊂ HH^n` on representatives.
pub fn hhp_inclusion_check(c: &Arc<Cochains>, n: usize) -> InclusionReport {
    let eh = EhComplex::new(c.clone());
    let row = RowComplex::new(c.clone(), 0);
    let source_dim = complex::cohomology_dim(&row, n);
    let target_dim = complex::cohomology_dim(&eh, n);
    let inc = row_zero_inclusion(&eh, n);
    let reps = complex::cohomology_representatives(&row, n);
    let z = complex::cocycles(&row, n);
    let images = inc.mul(z.basis());
    let is_cochain_map = eh.differential(n).mul(&images).is_zero();
    let induced_rank = is_cochain_map.then(|| complex::induced_rank(&inc, &reps, &complex::coboundaries(&eh, n)));
    InclusionReport {
        n,
        source_dim,
        target_dim,
        is_cochain_map,
        induced_rank,
        injective: induced_rank == Some(source_dim),
    }
}

/// Dimension of `EH^{p,q}` counted from degree compositions: the number of
/// cyclic chains of `p + 1` elements with degree sum `q`.
pub fn eh_cell_count(a: &dyn ChainAlgebra, p: usize, q: usize) -> u128 {
    crate::chain::count_cyclic_chains(a, p + 1, q)
}

/// The first `C^k_r` with `k ≤ k_max`, `r ≤ r_max` and `k + r ≤ total`
/// whose dimension exceeds `bound`, as `(k, r, dim)`.
pub fn oversized_cell(
    a: &dyn ChainAlgebra,
    k_max: usize,
    r_max: usize,
    total: usize,
    bound: u128,
) -> Option<(usize, usize, u128)> {
    (0..=k_max).find_map(|k| {
        (0..=r_max.min(total.saturating_sub(k))).find_map(|r| {
            let dim = eh_cell_count(a, k, r);
            (dim > bound).then_some((k, r, dim))
        })
    })
}
