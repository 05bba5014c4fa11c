//! Total complexes assembled from blocks, and their cohomology.
//!
//! A total complex is described degree by degree: a [`Layout`] lists the
//! cells (multi-indexed summands) of `T^n` in order, and the differential
//! `d^n: T^n → T^{n+1}` is a block matrix between consecutive layouts.
//! Vectors are columns; `d^n` has `dim T^{n+1}` rows.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use serde::Serialize;

use crate::linalg::{kernel_basis, rank, BlockBuilder, RatMatrix, Subspace};
use crate::par;

/// One summand of a total-complex degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Cell {
    pub key: Vec<usize>,
    pub dim: usize,
}

/// The ordered cells of one degree with their coordinate offsets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Layout {
    pub degree: usize,
    pub cells: Vec<Cell>,
    offsets: Vec<usize>,
    dim: usize,
}

impl Layout {
    /// Keeps only non-empty cells.
    pub fn new(degree: usize, cells: Vec<Cell>) -> Self {
        let cells: Vec<Cell> = cells.into_iter().filter(|c| c.dim > 0).collect();
        let mut offsets = Vec::with_capacity(cells.len());
        let mut dim = 0;
        for c in &cells {
            offsets.push(dim);
            dim += c.dim;
        }
        Layout {
            degree,
            cells,
            offsets,
            dim,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn position(&self, key: &[usize]) -> Option<usize> {
        self.cells.iter().position(|c| c.key == key)
    }

    pub fn offset(&self, i: usize) -> usize {
        self.offsets[i]
    }

    pub fn range(&self, i: usize) -> std::ops::Range<usize> {
        self.offsets[i]..self.offsets[i] + self.cells[i].dim
    }

    /// The cell containing coordinate `x`.
    pub fn cell_of(&self, x: usize) -> usize {
        match self.offsets.binary_search(&x) {
            Ok(i) => {
                // Skip nothing: empty cells are filtered out, so offsets are
                // strictly increasing.
                i
            }
            Err(i) => i - 1,
        }
    }

    /// Coordinate indices of every cell whose key satisfies `keep`.
    pub fn coordinates_where(&self, keep: impl Fn(&[usize]) -> bool) -> Vec<usize> {
        let mut out = Vec::new();
        for (i, c) in self.cells.iter().enumerate() {
            if keep(&c.key) {
                out.extend(self.range(i));
            }
        }
        out
    }
}

/// One degree of a total complex together with its outgoing differential.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    pub layout: Arc<Layout>,
    pub d_out: Arc<RatMatrix>,
}

pub trait Complex: Send + Sync {
    fn layout(&self, n: usize) -> Arc<Layout>;
    /// `d^n: T^n → T^{n+1}`.
    fn differential(&self, n: usize) -> Arc<RatMatrix>;

    fn slice(&self, n: usize) -> ComplexSlice {
        ComplexSlice {
            layout: self.layout(n),
            d_out: self.differential(n),
        }
    }
}

/// Memoizes layouts and differentials of a complex.
#[derive(Default)]
pub struct SliceCache {
    layouts: Mutex<HashMap<usize, Arc<Layout>>>,
    diffs: Mutex<HashMap<usize, Arc<RatMatrix>>>,
}

impl SliceCache {
    pub fn layout(&self, n: usize, build: impl FnOnce() -> Layout) -> Arc<Layout> {
        if let Some(l) = self.layouts.lock().unwrap().get(&n) {
            return l.clone();
        }
        let l = Arc::new(build());
        self.layouts.lock().unwrap().entry(n).or_insert(l).clone()
    }

    pub fn differential(&self, n: usize, build: impl FnOnce() -> RatMatrix) -> Arc<RatMatrix> {
        if let Some(d) = self.diffs.lock().unwrap().get(&n) {
            return d.clone();
        }
        let d = Arc::new(build());
        self.diffs.lock().unwrap().entry(n).or_insert(d).clone()
    }
}

/// Assembles a block matrix from `src` to `tgt`. `blocks` lists, for a
/// source cell key, the target keys and block matrices it maps to; blocks
/// landing in cells absent from `tgt` must be zero-sized and are dropped.
pub fn assemble<F>(src: &Layout, tgt: &Layout, blocks: F) -> RatMatrix
where
    F: Fn(&[usize]) -> Vec<(Vec<usize>, RatMatrix)> + Sync + Send,
{
    let per_cell = par::map_range(src.cells.len(), |i| blocks(&src.cells[i].key));
    let mut b = BlockBuilder::new(tgt.dim(), src.dim());
    for (i, list) in per_cell.into_iter().enumerate() {
        for (key, m) in list {
            match tgt.position(&key) {
                Some(j) => {
                    debug_assert_eq!(m.nrows(), tgt.cells[j].dim);
                    debug_assert_eq!(m.ncols(), src.cells[i].dim);
                    b.add_block(tgt.offset(j), src.offset(i), &m);
                }
                None => debug_assert!(m.nrows() == 0 || m.is_zero()),
            }
        }
    }
    b.build()
}

/// `d^{n-1}`, or the empty map into degree 0.
pub fn incoming(c: &dyn Complex, n: usize) -> Arc<RatMatrix> {
    if n == 0 {
        Arc::new(RatMatrix::zeros(c.layout(0).dim(), 0))
    } else {
        c.differential(n - 1)
    }
}

pub fn cohomology_dim(c: &dyn Complex, n: usize) -> usize {
    let dim = c.layout(n).dim();
    dim - rank(&c.differential(n)) - rank(&incoming(c, n))
}

pub fn cocycles(c: &dyn Complex, n: usize) -> Subspace {
    kernel_basis(&c.differential(n))
}

pub fn coboundaries(c: &dyn Complex, n: usize) -> Subspace {
    Subspace::span(&incoming(c, n))
}

/// Cocycles representing a basis of `H^n`: a complement of the
/// coboundaries inside the cocycles.
pub fn cohomology_representatives(c: &dyn Complex, n: usize) -> RatMatrix {
    complement_in(&cocycles(c, n), &coboundaries(c, n))
}

/// Columns of `big` that extend a basis of `small ⊆ big` to one of `big`.
pub fn complement_in(big: &Subspace, small: &Subspace) -> RatMatrix {
    let mut m = small.membership();
    let mut keep = Vec::new();
    for (j, v) in big.vectors().into_iter().enumerate() {
        if m.insert(&v) {
            keep.push(j);
        }
    }
    big.basis().select_cols(&keep)
}

/// Rank of the map induced on cohomology by a cochain map whose degree-`n`
/// component is `f`, given representatives of the source cohomology and the
/// coboundaries of the target.
pub fn induced_rank(f: &RatMatrix, reps: &RatMatrix, target_boundaries: &Subspace) -> usize {
    let mut m = target_boundaries.membership();
    let base = m.dim();
    for v in f.mul(reps).columns() {
        m.insert(&v);
    }
    m.dim() - base
}

/// Whether `d_tgt^n f^n = f^{n+1} d_src^n`.
pub fn commutes(f_n: &RatMatrix, f_next: &RatMatrix, d_src: &RatMatrix, d_tgt: &RatMatrix) -> bool {
    d_tgt.mul(f_n) == f_next.mul(d_src)
}

/// Euler characteristic style dimension list `dim H^0..=H^max`.
pub fn cohomology_dims(c: &dyn Complex, max: usize) -> Vec<usize> {
    (0..=max).map(|n| cohomology_dim(c, n)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::RatMatrix;

    /// `Q --1--> Q` in degrees 0 and 1, then `Q` alone in degree 2.
    struct Toy {
        cache: SliceCache,
    }

    impl Complex for Toy {
        fn layout(&self, n: usize) -> Arc<Layout> {
            self.cache.layout(n, || {
                let dim = usize::from(n <= 2);
                Layout::new(n, vec![Cell { key: vec![n], dim }])
            })
        }
        fn differential(&self, n: usize) -> Arc<RatMatrix> {
            self.cache.differential(n, || {
                let (s, t) = (self.layout(n), self.layout(n + 1));
                assemble(&s, &t, |key| {
                    if key[0] == 0 {
                        vec![(vec![1], RatMatrix::identity(1))]
                    } else {
                        Vec::new()
                    }
                })
            })
        }
    }

    #[test]
    fn toy_cohomology() {
        let t = Toy {
            cache: SliceCache::default(),
        };
        assert_eq!(cohomology_dims(&t, 3), vec![0, 0, 1, 0]);
        assert_eq!(cohomology_representatives(&t, 2).ncols(), 1);
        let f = RatMatrix::identity(1);
        let reps = cohomology_representatives(&t, 2);
        assert_eq!(induced_rank(&f, &reps, &coboundaries(&t, 2)), 1);
    }

    #[test]
    fn layouts_skip_empty_cells() {
        let l = Layout::new(
            3,
            vec![
                Cell { key: vec![0], dim: 2 },
                Cell { key: vec![1], dim: 0 },
                Cell { key: vec![2], dim: 3 },
            ],
        );
        assert_eq!(l.dim(), 5);
        assert_eq!(l.cells.len(), 2);
        assert_eq!(l.cell_of(1), 0);
        assert_eq!(l.cell_of(2), 1);
        assert_eq!(l.cell_of(4), 1);
        assert_eq!(l.coordinates_where(|k| k[0] == 2), vec![2, 3, 4]);
    }
}
