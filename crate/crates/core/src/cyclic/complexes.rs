//! The cyclic tricomplex, the cyclic bicomplex and its odd part, and the
//! comparison maps between them.

use std::sync::Arc;

use crate::chain::Cochains;
use crate::complex::{assemble, Cell, Complex, Layout, SliceCache};
use crate::linalg::{sign, RatMatrix};

/// `T(EC)`: cells `[p, q, r]` holding `C^{q-p}_r`, with `q ≥ p` and
/// `p + q + r = n`, ordered by `p` then `q`. The differential is
/// `b: q ↦ q+1`, `B: p ↦ p+1` and `(-1)^{q-p} δ: r ↦ r+1`.
pub struct EcComplex {
    c: Arc<Cochains>,
    cache: SliceCache,
}

impl EcComplex {
    pub fn new(c: Arc<Cochains>) -> Self {
        EcComplex {
            c,
            cache: SliceCache::default(),
        }
    }

    pub fn cochains(&self) -> &Arc<Cochains> {
        &self.c
    }
}

impl Complex for EcComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let mut cells = Vec::new();
            for p in 0..=n / 2 {
                for q in p..=n - p {
                    let r = n - p - q;
                    cells.push(Cell {
                        key: vec![p, q, r],
                        dim: self.c.dim(q - p, r),
                    });
                }
            }
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let (s, t) = (self.layout(n), self.layout(n + 1));
            assemble(&s, &t, |key| {
                let (p, q, r) = (key[0], key[1], key[2]);
                let k = q - p;
                let mut out = vec![
                    (vec![p, q + 1, r], (*self.c.b(k, r)).clone()),
                    (vec![p, q, r + 1], self.c.delta(k, r).scale(&sign(k))),
                ];
                if k >= 1 {
                    out.push((vec![p + 1, q, r], self.c.connes_b(k, r)));
                }
                out
            })
        })
    }
}

/// `T(CC_dg)`: cells `[j, k, r]` holding `C^k_r` in column `j`. Columns
/// alternate `b` (even) and `-b′` (odd) vertically; horizontal maps are
/// `1-Λ` out of even columns and `∇` out of odd ones; `δ` carries the sign
/// `(-1)^{j+k}`.
pub struct CcComplex {
    c: Arc<Cochains>,
    odd_only: bool,
    cache: SliceCache,
}

impl CcComplex {
    pub fn new(c: Arc<Cochains>) -> Self {
        CcComplex {
            c,
            odd_only: false,
            cache: SliceCache::default(),
        }
    }

    /// The odd columns alone, each with `-b′ ± δ`: the quotient of `CC_dg`
    /// by the image of the tricomplex.
    pub fn odd(c: Arc<Cochains>) -> Self {
        CcComplex {
            c,
            odd_only: true,
            cache: SliceCache::default(),
        }
    }
}

impl Complex for CcComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let mut cells = Vec::new();
            for j in 0..=n {
                if self.odd_only && j % 2 == 0 {
                    continue;
                }
                for k in 0..=n - j {
                    let r = n - j - k;
                    cells.push(Cell {
                        key: vec![j, k, r],
                        dim: self.c.dim(k, r),
                    });
                }
            }
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let (s, t) = (self.layout(n), self.layout(n + 1));
            assemble(&s, &t, |key| {
                let (j, k, r) = (key[0], key[1], key[2]);
                let vertical = if j % 2 == 0 {
                    (*self.c.b(k, r)).clone()
                } else {
                    self.c.b_prime(k, r).neg()
                };
                let mut out = vec![
                    (vec![j, k + 1, r], vertical),
                    (vec![j, k, r + 1], self.c.delta(k, r).scale(&sign(j + k))),
                ];
                if !self.odd_only {
                    let horizontal = if j % 2 == 0 {
                        self.c.one_minus_lambda(k, r)
                    } else {
                        self.c.norm(k, r)
                    };
                    out.push((vec![j + 1, k, r], horizontal));
                }
                out
            })
        })
    }
}

/// `Ψ: T(EC)^n → T(CC_dg)^n`, sending the copy of `C^k_r` in column `p` to
/// `(f, s(1-Λ) f)` in columns `2p` and `2p + 1`.
pub fn psi(ec: &EcComplex, cc: &CcComplex, n: usize) -> RatMatrix {
    let c = ec.cochains().clone();
    assemble(&ec.layout(n), &cc.layout(n), move |key| {
        let (p, q, r) = (key[0], key[1], key[2]);
        let k = q - p;
        let mut out = vec![(vec![2 * p, k, r], RatMatrix::identity(c.dim(k, r)))];
        if k >= 1 {
            out.push((vec![2 * p + 1, k - 1, r], c.s_one_minus_lambda(k, r)));
        }
        out
    })
}

/// `Φ: T(CC_dg)^n → T(CC^O)^n`, `(f, g) ↦ g - s(1-Λ) f`.
pub fn phi(cc: &CcComplex, odd: &CcComplex, n: usize) -> RatMatrix {
    let c = cc.c.clone();
    assemble(&cc.layout(n), &odd.layout(n), move |key| {
        let (j, k, r) = (key[0], key[1], key[2]);
        if j % 2 == 1 {
            vec![(vec![j, k, r], RatMatrix::identity(c.dim(k, r)))]
        } else if k >= 1 {
            vec![(vec![j + 1, k - 1, r], c.s_one_minus_lambda(k, r).neg())]
        } else {
            Vec::new()
        }
    })
}

/// The contracting homotopy `h = -s: T(CC^O)^n → T(CC^O)^{n-1}`.
pub fn odd_homotopy(odd: &CcComplex, n: usize) -> RatMatrix {
    if n == 0 {
        return RatMatrix::zeros(0, odd.layout(0).dim());
    }
    let c = odd.c.clone();
    assemble(&odd.layout(n), &odd.layout(n - 1), move |key| {
        let (j, k, r) = (key[0], key[1], key[2]);
        if k == 0 {
            Vec::new()
        } else {
            vec![(vec![j, k - 1, r], c.s(k - 1, r).neg())]
        }
    })
}

/// `(b, B)` bicomplex at fixed internal degree `m`: cells `[p, q]` holding
/// `C^{q-p}_m`, total degree `p + q`. Its cohomology is `HCP^*_m`.
pub struct HcpComplex {
    c: Arc<Cochains>,
    internal: usize,
    cache: SliceCache,
}

impl HcpComplex {
    pub fn new(c: Arc<Cochains>, internal: usize) -> Self {
        HcpComplex {
            c,
            internal,
            cache: SliceCache::default(),
        }
    }
}

impl Complex for HcpComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let cells = (0..=n / 2)
                .map(|p| Cell {
                    key: vec![p, n - p],
                    dim: self.c.dim(n - 2 * p, self.internal),
                })
                .collect();
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let (s, t) = (self.layout(n), self.layout(n + 1));
            let m = self.internal;
            assemble(&s, &t, |key| {
                let (p, q) = (key[0], key[1]);
                let k = q - p;
                let mut out = vec![(vec![p, q + 1], (*self.c.b(k, m)).clone())];
                if k >= 1 {
                    out.push((vec![p + 1, q], self.c.connes_b(k, m)));
                }
                out
            })
        })
    }
}
