//! Sparse Gaussian elimination over the rationals.
//!
//! Rows are inserted one at a time into a reduced row echelon form. The
//! pivot of a new row is chosen among its nonzero columns by a static fill
//! estimate (fewest nonzeros in that column of the input), ties broken by
//! the lowest column index. Rows are processed sparsest first, ties by row
//! index, so every result is reproducible.

use num_traits::{One, Zero};

use super::matrix::{sub_scaled, RatMatrix, SparseRow};
use super::rat::Rat;

/// Reduced row echelon form built incrementally.
///
/// Every stored row has a `1` at its pivot column and zeros at the pivot
/// columns of all other stored rows.
pub struct Echelon {
    ncols: usize,
    /// Columns at or beyond this bound are never chosen as pivots.
    pivot_limit: usize,
    col_weight: Vec<usize>,
    rows: Vec<SparseRow>,
    pivots: Vec<usize>,
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    pub fn new(ncols: usize, col_weight: Vec<usize>) -> Self {
        Self::with_pivot_limit(ncols, ncols, col_weight)
    }

    pub fn with_pivot_limit(ncols: usize, pivot_limit: usize, col_weight: Vec<usize>) -> Self {
        assert_eq!(col_weight.len(), ncols);
        Echelon {
            ncols,
            pivot_limit,
            col_weight,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_row: vec![None; ncols],
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    /// Reduces `v` against the stored rows.
    pub fn reduce(&self, v: &SparseRow) -> SparseRow {
        let hits: Vec<(usize, Rat)> = v
            .iter()
            .filter_map(|(c, x)| self.pivot_row[*c].map(|r| (r, x.clone())))
            .collect();
        let mut out = v.clone();
        // Stored rows vanish on each other's pivots, so the coefficient read
        // from the input stays valid after earlier subtractions.
        for (r, coeff) in hits {
            out = sub_scaled(&out, &coeff, &self.rows[r]);
        }
        out
    }

    /// Inserts `v`; returns the new pivot column, or `None` when `v` is
    /// dependent on the stored rows (or has no admissible pivot).
    pub fn insert(&mut self, v: &SparseRow) -> Option<usize> {
        let reduced = self.reduce(v);
        let pivot = reduced
            .iter()
            .filter(|(c, _)| *c < self.pivot_limit)
            .min_by_key(|(c, _)| (self.col_weight[*c], *c))
            .map(|(c, x)| (*c, x.clone()))?;
        let (pc, pv) = pivot;
        let inv = Rat::one() / pv;
        let new_row: SparseRow = reduced.into_iter().map(|(c, x)| (c, x * &inv)).collect();
        for r in 0..self.rows.len() {
            let row = &self.rows[r];
            if let Ok(k) = row.binary_search_by_key(&pc, |(c, _)| *c) {
                let coeff = row[k].1.clone();
                self.rows[r] = sub_scaled(row, &coeff, &new_row);
            }
        }
        self.pivot_row[pc] = Some(self.rows.len());
        self.rows.push(new_row);
        self.pivots.push(pc);
        Some(pc)
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn pivot_row_of(&self, col: usize) -> Option<usize> {
        self.pivot_row[col]
    }
}

fn column_weights(m: &RatMatrix) -> Vec<usize> {
    let mut w = vec![0usize; m.ncols()];
    for row in m.rows() {
        for (c, _) in row {
            w[*c] += 1;
        }
    }
    w
}

fn row_order(m: &RatMatrix) -> Vec<usize> {
    let mut order: Vec<usize> = (0..m.nrows()).collect();
    order.sort_by_key(|&i| (m.row(i).len(), i));
    order
}

/// Echelon form of the rows of `m`.
pub fn echelon(m: &RatMatrix) -> Echelon {
    let mut e = Echelon::new(m.ncols(), column_weights(m));
    for i in row_order(m) {
        if !m.row(i).is_empty() {
            e.insert(m.row(i));
        }
    }
    e
}

/// Exact rank over the rationals.
pub fn rank(m: &RatMatrix) -> usize {
    // Fewer rows than columns keeps the echelon small.
    if m.nrows() > m.ncols() {
        echelon(&m.transpose()).rank()
    } else {
        echelon(m).rank()
    }
}

/// Basis of the right kernel `{x : m x = 0}` as the columns of a matrix.
pub fn kernel_matrix(m: &RatMatrix) -> RatMatrix {
    let e = echelon(m);
    kernel_from_echelon(&e)
}

pub(crate) fn kernel_from_echelon(e: &Echelon) -> RatMatrix {
    let n = e.ncols();
    let mut is_pivot = vec![false; n];
    for &p in e.pivots() {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..n).filter(|c| !is_pivot[*c]).collect();
    let mut free_index = vec![usize::MAX; n];
    for (k, &f) in free.iter().enumerate() {
        free_index[f] = k;
    }
    let mut trip: Vec<(usize, usize, Rat)> = Vec::new();
    for &f in &free {
        trip.push((f, free_index[f], Rat::one()));
    }
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        for (c, v) in row {
            if *c != p {
                trip.push((p, free_index[*c], -v.clone()));
            }
        }
    }
    RatMatrix::from_triplets(n, free.len(), trip)
}

/// Solves `m x = rhs` column by column; `None` if some column is inconsistent.
/// Free variables are set to zero.
pub fn solve(m: &RatMatrix, rhs: &RatMatrix) -> Option<RatMatrix> {
    assert_eq!(m.nrows(), rhs.nrows(), "solve: row mismatch");
    let n = m.ncols();
    let aug = m.hstack(rhs);
    let mut weights = column_weights(&aug);
    for w in weights.iter_mut().skip(n) {
        *w = usize::MAX;
    }
    let mut e = Echelon::with_pivot_limit(aug.ncols(), n, weights);
    for i in row_order(&aug) {
        let row = aug.row(i);
        if row.is_empty() {
            continue;
        }
        if e.insert(row).is_none() {
            let reduced = e.reduce(row);
            if !reduced.is_empty() {
                return None;
            }
        }
    }
    let mut trip = Vec::new();
    for (row, &p) in e.rows().iter().zip(e.pivots()) {
        for (c, v) in row {
            if *c >= n {
                trip.push((p, c - n, v.clone()));
            }
        }
    }
    Some(RatMatrix::from_triplets(n, rhs.ncols(), trip))
}

/// Indices of a maximal set of linearly independent columns, chosen
/// greedily left to right.
pub fn independent_columns(m: &RatMatrix) -> Vec<usize> {
    let cols = m.columns();
    let mut e = Echelon::new(m.nrows(), vec![0; m.nrows()]);
    let mut keep = Vec::new();
    for (j, c) in cols.iter().enumerate() {
        if !c.is_empty() && e.insert(c).is_some() {
            keep.push(j);
        }
    }
    keep
}

pub fn is_zero_vec(v: &SparseRow) -> bool {
    v.iter().all(|(_, x)| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat::{rat, ratio};

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RatMatrix::identity(3)), 3);
        assert_eq!(rank(&RatMatrix::from_dense_i64(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&RatMatrix::zeros(4, 7)), 0);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel_matrix(&RatMatrix::identity(3)).ncols(), 0);
        let k = kernel_matrix(&RatMatrix::zeros(2, 5));
        assert_eq!(k.ncols(), 5);
        let m = RatMatrix::from_dense_i64(&[&[1, 2], &[2, 4]]);
        let k = kernel_matrix(&m);
        assert_eq!(k.ncols(), 1);
        assert!(m.mul(&k).is_zero());
        // proportional to (-2, 1)
        let (a, b) = (k.get(0, 0), k.get(1, 0));
        assert_eq!(a, &b * rat(-2));
    }

    #[test]
    fn solve_consistent_and_not() {
        let m = RatMatrix::from_dense_i64(&[&[2, 0], &[0, 3], &[1, 1]]);
        let rhs = RatMatrix::from_dense_i64(&[&[2], &[3], &[2]]);
        let x = solve(&m, &rhs).unwrap();
        assert_eq!(m.mul(&x), rhs);
        let bad = RatMatrix::from_dense_i64(&[&[2], &[3], &[5]]);
        assert!(solve(&m, &bad).is_none());
        let sq = RatMatrix::from_dense_i64(&[&[2, 0], &[1, 1]]);
        let x = solve(&sq, &RatMatrix::from_dense_i64(&[&[1], &[0]])).unwrap();
        assert_eq!(x.get(0, 0), ratio(1, 2));
        assert_eq!(x.get(1, 0), ratio(-1, 2));
    }

    #[test]
    fn independent_columns_greedy() {
        let m = RatMatrix::from_dense_i64(&[&[1, 2, 0, 1], &[0, 0, 1, 1]]);
        assert_eq!(independent_columns(&m), vec![0, 2]);
    }
}
