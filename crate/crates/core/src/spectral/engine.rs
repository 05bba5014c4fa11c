//! Spectral sequence of a complex with a decreasing filtration by cells.
//!
//! `F^s T^n` is spanned by the coordinates of cells of level `≥ s`. With
//! `Z_r^s = {x ∈ F^s : dx ∈ F^{s+r}}` the pages are
//! `E_r^s = Z_r^s / (Z_{r-1}^{s+1} + d Z_{r-1}^{s-r+1})`, placed at
//! `(s, n - s)` in total degree `n`.

use std::sync::Arc;

use crate::complex::{Complex, Layout};
use crate::linalg::{kernel_matrix, solve, RatMatrix, SparseRow, Subspace};

pub type LevelFn = Arc<dyn Fn(&[usize]) -> usize + Send + Sync>;

/// A complex with a filtration level on each cell.
#[derive(Clone)]
pub struct Filtered<'a> {
    pub complex: &'a dyn Complex,
    pub level: LevelFn,
}

/// A slice plus the filtration level of each coordinate.
#[derive(Clone, Debug)]
pub struct FilteredSlice {
    pub layout: Arc<Layout>,
    pub d_out: Arc<RatMatrix>,
    pub levels: Vec<usize>,
}

/// Basis of a page term: representatives and the subspace divided out.
#[derive(Clone, Debug)]
pub struct PageBasis {
    pub reps: RatMatrix,
    pub denominator: Subspace,
}

impl PageBasis {
    pub fn dim(&self) -> usize {
        self.reps.ncols()
    }

    /// Coordinates of the class of `v` (which must lie in `Z`), or `None`
    /// when `v` is not in the span of representatives and denominator.
    pub fn coordinates(&self, v: &RatMatrix) -> Option<RatMatrix> {
        let full = self.reps.hstack(self.denominator.basis());
        let x = solve(&full, v)?;
        let top: Vec<usize> = (0..self.dim()).collect();
        Some(x.select_rows(&top))
    }
}

impl<'a> Filtered<'a> {
    pub fn new(complex: &'a dyn Complex, level: LevelFn) -> Self {
        Filtered { complex, level }
    }

    pub fn levels(&self, n: usize) -> Vec<usize> {
        let l = self.complex.layout(n);
        let mut out = Vec::with_capacity(l.dim());
        for c in &l.cells {
            let lv = (self.level)(&c.key);
            out.extend(std::iter::repeat_n(lv, c.dim));
        }
        out
    }

    pub fn slice(&self, n: usize) -> FilteredSlice {
        FilteredSlice {
            layout: self.complex.layout(n),
            d_out: self.complex.differential(n),
            levels: self.levels(n),
        }
    }

    pub fn max_level(&self, n: usize) -> usize {
        self.levels(n).into_iter().max().unwrap_or(0)
    }

    /// Levels present in degree `n`, ascending.
    pub fn level_set(&self, n: usize) -> Vec<usize> {
        let mut v = self.levels(n);
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Checks `d F^s ⊆ F^s` in degree `n`.
    pub fn is_compatible(&self, n: usize) -> bool {
        let src = self.levels(n);
        let tgt = self.levels(n + 1);
        let d = self.complex.differential(n);
        d.rows()
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().all(|(j, _)| tgt[i] >= src[*j]))
    }

    fn coords_at_least(levels: &[usize], s: i64) -> Vec<usize> {
        (0..levels.len()).filter(|&i| levels[i] as i64 >= s).collect()
    }

    /// Basis of `F^s T^n`.
    pub fn filtered_part(&self, s: i64, n: usize) -> RatMatrix {
        let levels = self.levels(n);
        let cols = Self::coords_at_least(&levels, s);
        RatMatrix::identity(levels.len()).select_cols(&cols)
    }

    /// Basis of `Z_r^s` in degree `n` (columns in full coordinates).
    pub fn z(&self, r: i64, s: i64, n: usize) -> RatMatrix {
        let src = self.levels(n);
        let tgt = self.levels(n + 1);
        let cols = Self::coords_at_least(&src, s);
        let bad: Vec<usize> = (0..tgt.len()).filter(|&i| (tgt[i] as i64) < s + r).collect();
        let d = self.complex.differential(n);
        let k = kernel_matrix(&d.select_rows(&bad).select_cols(&cols));
        RatMatrix::identity(src.len()).select_cols(&cols).mul(&k)
    }

    /// `Z_{r-1}^{s+1} + d Z_{r-1}^{s-r+1}` in degree `n`.
    pub fn denominator(&self, r: i64, s: i64, n: usize) -> Subspace {
        let z = self.z(r - 1, s + 1, n);
        let b = if n == 0 {
            RatMatrix::zeros(z.nrows(), 0)
        } else {
            self.complex.differential(n - 1).mul(&self.z(r - 1, s - r + 1, n - 1))
        };
        Subspace::span(&z.hstack(&b))
    }

    pub fn page_basis(&self, r: usize, s: usize, n: usize) -> PageBasis {
        let (r, s) = (r as i64, s as i64);
        let z = Subspace::span(&self.z(r, s, n));
        let denominator = self.denominator(r, s, n);
        let reps = crate::complex::complement_in(&z, &denominator);
        PageBasis { reps, denominator }
    }

    /// `dim E_r^{s, n-s}`.
    pub fn page_dim(&self, r: usize, s: usize, n: usize) -> usize {
        let (ri, si) = (r as i64, s as i64);
        let z = self.z(ri, si, n).ncols();
        z - self.denominator(ri, si, n).dim()
    }

    /// A page number past which every page is constant in degree `n`.
    pub fn stable_page(&self, n: usize) -> usize {
        self.max_level(n) + self.max_level(n + 1) + 2
    }

    /// First `(r, s)` with `r ≥ from` where `E_{r+1}^s ≠ E_r^s` in degree
    /// `n`, or `None` if every page from `E_from` on equals `E_∞` there.
    pub fn first_change(&self, from: usize, n: usize) -> Option<(usize, usize)> {
        let top = self.stable_page(n);
        for s in self.level_set(n) {
            let mut prev = self.page_dim(from, s, n);
            for r in from + 1..=top {
                let cur = self.page_dim(r, s, n);
                if cur != prev {
                    return Some((r - 1, s));
                }
                prev = cur;
            }
        }
        None
    }

    pub fn infinity_dim(&self, s: usize, n: usize) -> usize {
        self.page_dim(self.stable_page(n), s, n)
    }

    /// `dim gr^s H^n`, computed from cocycles and coboundaries directly.
    pub fn graded_cohomology_dim(&self, s: usize, n: usize) -> usize {
        let z_s = self.z(i64::MAX / 4, s as i64, n);
        let z_next = self.z(i64::MAX / 4, s as i64 + 1, n);
        let b = crate::complex::coboundaries(self.complex, n);
        let a = Subspace::span(&z_s.hstack(b.basis())).dim();
        let c = Subspace::span(&z_next.hstack(b.basis())).dim();
        a - c
    }

    /// Matrix of `d_r: E_r^{s,n-s} → E_r^{s+r, n-s-r+1}` in the bases of
    /// [`Filtered::page_basis`].
    pub fn page_differential(&self, r: usize, s: usize, n: usize) -> RatMatrix {
        let src = self.page_basis(r, s, n);
        let tgt = self.page_basis(r, s + r, n + 1);
        let img = self.complex.differential(n).mul(&src.reps);
        tgt.coordinates(&img)
            .expect("d of a representative lies in Z of the target page")
    }
}

/// Matrix of the map induced on `E_r` by a filtration-preserving cochain
/// map with degree-`n` component `f`.
pub fn induced_page_map(
    src: &Filtered,
    tgt: &Filtered,
    f: &RatMatrix,
    r: usize,
    s: usize,
    n: usize,
) -> Option<RatMatrix> {
    let a = src.page_basis(r, s, n);
    let b = tgt.page_basis(r, s, n);
    b.coordinates(&f.mul(&a.reps))
}

/// Whether `f` sends `F^s` into `F^s` in degree `n`.
pub fn preserves_filtration(src: &Filtered, tgt: &Filtered, f: &RatMatrix, n: usize) -> bool {
    let a = src.levels(n);
    let b = tgt.levels(n);
    f.rows()
        .iter()
        .enumerate()
        .all(|(i, row): (usize, &SparseRow)| row.iter().all(|(j, _)| b[i] >= a[*j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::cyclic::EcComplex;
    use crate::hochschild::cochains_of;

    /// `x` in degree 0 at level 0, `y` in degree 1 at level 2, `dx = y`.
    struct Jump {
        cache: crate::complex::SliceCache,
    }

    impl Complex for Jump {
        fn layout(&self, n: usize) -> Arc<Layout> {
            self.cache.layout(n, || {
                let cells = match n {
                    0 => vec![crate::complex::Cell { key: vec![0], dim: 1 }],
                    1 => vec![crate::complex::Cell { key: vec![2], dim: 1 }],
                    _ => Vec::new(),
                };
                Layout::new(n, cells)
            })
        }

        fn differential(&self, n: usize) -> Arc<RatMatrix> {
            self.cache.differential(n, || {
                let (s, t) = (self.layout(n).dim(), self.layout(n + 1).dim());
                if n == 0 {
                    RatMatrix::identity(1)
                } else {
                    RatMatrix::zeros(t, s)
                }
            })
        }
    }

    #[test]
    fn detects_a_second_differential() {
        let j = Jump {
            cache: Default::default(),
        };
        let f = Filtered::new(&j, Arc::new(|k: &[usize]| k[0]));
        assert_eq!(f.page_dim(2, 0, 0), 1);
        assert_eq!(f.page_dim(3, 0, 0), 0);
        assert_eq!(f.page_differential(2, 0, 0), RatMatrix::identity(1));
        assert_eq!(f.first_change(2, 0), Some((2, 0)));
        assert_eq!(f.first_change(3, 0), None);
        assert_eq!(f.infinity_dim(0, 0), 0);
    }

    #[test]
    fn page_zero_is_the_associated_graded() {
        let c = cochains_of(&catalog::algebra("koszul").unwrap());
        let ec = EcComplex::new(c);
        let f = Filtered::new(&ec, Arc::new(|k: &[usize]| k[0]));
        for n in 0..4 {
            let total: usize = (0..=n).map(|s| f.page_dim(0, s, n)).sum();
            assert_eq!(total, ec.layout(n).dim());
        }
    }

    #[test]
    fn infinity_page_matches_graded_cohomology() {
        for name in ["ground_field", "koszul", "exterior"] {
            let c = cochains_of(&catalog::algebra(name).unwrap());
            let ec = EcComplex::new(c);
            let f = Filtered::new(&ec, Arc::new(|k: &[usize]| k[0] + k[2]));
            for n in 0..4 {
                for s in 0..=n + 1 {
                    assert_eq!(f.infinity_dim(s, n), f.graded_cohomology_dim(s, n), "{name}");
                }
            }
        }
    }
}
