//! The `Λ`-invariant subcomplex `C_Λ ⊂ T(EH)` and the quotient
//! `T(EH)/C_Λ`.
//!
//! Each cell of `C_Λ` is `ker(1-Λ)` on the matching cell of `T(EH)`, in the
//! coordinates of a fixed kernel basis `K`. The quotient uses the standard
//! basis vectors `E_J` completing `K`; its coordinates are the last rows of
//! `[K | E_J]^{-1}`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_traits::One;
use thiserror::Error;

use crate::chain::Cochains;
use crate::complex::{assemble, Cell, Complex, Layout, SliceCache};
use crate::hochschild::EhComplex;
use crate::linalg::{kernel_matrix, solve, Rat, RatMatrix, Subspace};

#[derive(Debug, Error, PartialEq, Eq)]
#[error("the differential does not preserve ker(1-Λ) on cell ({p}, {q})")]
pub struct RestrictionFailure {
    pub p: usize,
    pub q: usize,
}

/// Kernel basis, complement indices and quotient projection of one cell.
pub struct CellSplit {
    pub kernel: RatMatrix,
    pub complement: Vec<usize>,
    pub projection: RatMatrix,
}

impl CellSplit {
    fn new(one_minus_lambda: &RatMatrix) -> Self {
        let dim = one_minus_lambda.ncols();
        let kernel = kernel_matrix(one_minus_lambda);
        let mut m = Subspace::from_independent(kernel.clone()).membership();
        let complement: Vec<usize> = (0..dim).filter(|&i| m.insert(&vec![(i, Rat::one())])).collect();
        let e = RatMatrix::identity(dim).select_cols(&complement);
        let full = kernel.hstack(&e);
        let inv = solve(&full, &RatMatrix::identity(dim)).expect("[K | E_J] is invertible");
        let tail: Vec<usize> = (kernel.ncols()..dim).collect();
        CellSplit {
            projection: inv.select_rows(&tail),
            complement,
            kernel,
        }
    }

    pub fn lift(&self) -> RatMatrix {
        RatMatrix::identity(self.kernel.nrows()).select_cols(&self.complement)
    }
}

pub struct Splits {
    c: Arc<Cochains>,
    cells: Mutex<HashMap<(usize, usize), Arc<CellSplit>>>,
}

impl Splits {
    fn new(c: Arc<Cochains>) -> Self {
        Splits {
            c,
            cells: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, p: usize, q: usize) -> Arc<CellSplit> {
        if let Some(s) = self.cells.lock().unwrap().get(&(p, q)) {
            return s.clone();
        }
        let s = Arc::new(CellSplit::new(&self.c.one_minus_lambda(p, q)));
        self.cells.lock().unwrap().entry((p, q)).or_insert(s).clone()
    }
}

/// The short exact sequence `0 → C_Λ → T(EH) → Q → 0`.
pub struct LambdaSequence {
    pub eh: EhComplex,
    pub sub: CLambdaComplex,
    pub quotient: QuotientComplex,
}

impl LambdaSequence {
    pub fn new(c: Arc<Cochains>) -> Self {
        let splits = Arc::new(Splits::new(c.clone()));
        LambdaSequence {
            eh: EhComplex::new(c.clone()),
            sub: CLambdaComplex {
                eh: EhComplex::new(c.clone()),
                splits: splits.clone(),
                cache: SliceCache::default(),
            },
            quotient: QuotientComplex {
                eh: EhComplex::new(c),
                splits,
                cache: SliceCache::default(),
            },
        }
    }

    /// `C_Λ^n → T(EH)^n`.
    pub fn inclusion(&self, n: usize) -> RatMatrix {
        let splits = self.sub.splits.clone();
        assemble(&self.sub.layout(n), &self.eh.layout(n), move |key| {
            vec![(key.to_vec(), splits.get(key[0], key[1]).kernel.clone())]
        })
    }

    /// `T(EH)^n → Q^n`.
    pub fn projection(&self, n: usize) -> RatMatrix {
        let splits = self.sub.splits.clone();
        assemble(&self.eh.layout(n), &self.quotient.layout(n), move |key| {
            vec![(key.to_vec(), splits.get(key[0], key[1]).projection.clone())]
        })
    }

    /// `Q^n → T(EH)^n`, a linear section of the projection.
    pub fn lift(&self, n: usize) -> RatMatrix {
        let splits = self.sub.splits.clone();
        assemble(&self.quotient.layout(n), &self.eh.layout(n), move |key| {
            vec![(key.to_vec(), splits.get(key[0], key[1]).lift())]
        })
    }
}

pub struct CLambdaComplex {
    eh: EhComplex,
    splits: Arc<Splits>,
    cache: SliceCache,
}

impl CLambdaComplex {
    pub fn new(c: Arc<Cochains>) -> Self {
        CLambdaComplex {
            eh: EhComplex::new(c.clone()),
            splits: Arc::new(Splits::new(c)),
            cache: SliceCache::default(),
        }
    }

    /// The differential out of degree `n` in kernel coordinates, or the
    /// first cell whose image leaves `ker(1-Λ)`.
    pub fn try_differential(&self, n: usize) -> Result<RatMatrix, RestrictionFailure> {
        let (s, t) = (self.layout(n), self.layout(n + 1));
        let eh_s = self.eh.layout(n);
        let eh_t = self.eh.layout(n + 1);
        let d = self.eh.differential(n);
        // Image of each kernel block in each target cell of T(EH).
        let image = |p: usize, q: usize, tk: &[usize]| -> Option<RatMatrix> {
            let si = eh_s.position(&[p, q])?;
            let ti = eh_t.position(tk)?;
            let rows: Vec<usize> = eh_t.range(ti).collect();
            let cols: Vec<usize> = eh_s.range(si).collect();
            Some(
                d.select_rows(&rows)
                    .select_cols(&cols)
                    .mul(&self.splits.get(p, q).kernel),
            )
        };
        for cell in &s.cells {
            let (p, q) = (cell.key[0], cell.key[1]);
            for tk in [[p + 1, q], [p, q + 1]] {
                if let Some(img) = image(p, q, &tk) {
                    let olam = self.eh.cochains().one_minus_lambda(tk[0], tk[1]);
                    if !olam.mul(&img).is_zero() {
                        return Err(RestrictionFailure { p, q });
                    }
                }
            }
        }
        Ok(assemble(&s, &t, |key| {
            let (p, q) = (key[0], key[1]);
            [[p + 1, q], [p, q + 1]]
                .into_iter()
                .filter_map(|tk| {
                    let img = image(p, q, &tk)?;
                    let k = &self.splits.get(tk[0], tk[1]).kernel;
                    let x = solve(k, &img).expect("image lies in the kernel");
                    Some((tk.to_vec(), x))
                })
                .collect()
        }))
    }
}

impl Complex for CLambdaComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let cells = (0..=n)
                .map(|p| Cell {
                    key: vec![p, n - p],
                    dim: self.splits.get(p, n - p).kernel.ncols(),
                })
                .collect();
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache
            .differential(n, || self.try_differential(n).unwrap_or_else(|e| panic!("{e}")))
    }
}

pub struct QuotientComplex {
    eh: EhComplex,
    splits: Arc<Splits>,
    cache: SliceCache,
}

impl Complex for QuotientComplex {
    fn layout(&self, n: usize) -> Arc<Layout> {
        self.cache.layout(n, || {
            let cells = (0..=n)
                .map(|p| Cell {
                    key: vec![p, n - p],
                    dim: self.splits.get(p, n - p).complement.len(),
                })
                .collect();
            Layout::new(n, cells)
        })
    }

    fn differential(&self, n: usize) -> Arc<RatMatrix> {
        self.cache.differential(n, || {
            let (s, t) = (self.layout(n), self.layout(n + 1));
            let eh_s = self.eh.layout(n);
            let eh_t = self.eh.layout(n + 1);
            let d = self.eh.differential(n);
            assemble(&s, &t, |key| {
                let (p, q) = (key[0], key[1]);
                let si = eh_s.position(key).expect("cell of T(EH)");
                let cols: Vec<usize> = eh_s.range(si).collect();
                let lift = self.splits.get(p, q).lift();
                let mut out = Vec::new();
                for tk in [vec![p + 1, q], vec![p, q + 1]] {
                    let Some(ti) = eh_t.position(&tk) else { continue };
                    let rows: Vec<usize> = eh_t.range(ti).collect();
                    let proj = &self.splits.get(tk[0], tk[1]).projection;
                    let block = proj.mul(&d.select_rows(&rows).select_cols(&cols).mul(&lift));
                    out.push((tk, block));
                }
                out
            })
        })
    }
}
