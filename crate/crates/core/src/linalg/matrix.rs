use std::fmt;

use num_traits::{One, Zero};

use super::rat::{format_rat, Rat};

/// A sparse row: `(column, value)` pairs sorted by column, no zero values.
pub type SparseRow = Vec<(usize, Rat)>;

/// Exact sparse rational matrix stored by rows.
///
/// No stored entry is zero and every index is in range.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    nrows: usize,
    ncols: usize,
    data: Vec<SparseRow>,
}

impl RatMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMatrix {
            nrows,
            ncols,
            data: vec![Vec::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let data = (0..n).map(|i| vec![(i, Rat::one())]).collect();
        RatMatrix {
            nrows: n,
            ncols: n,
            data,
        }
    }

    pub fn scalar(n: usize, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zeros(n, n);
        }
        let data = (0..n).map(|i| vec![(i, c.clone())]).collect();
        RatMatrix {
            nrows: n,
            ncols: n,
            data,
        }
    }

    /// Builds from rows; entries are sorted, duplicates summed, zeros dropped.
    pub fn from_rows(ncols: usize, rows: Vec<Vec<(usize, Rat)>>) -> Self {
        let data = rows
            .into_iter()
            .map(|r| {
                let r = normalize_row(r);
                if let Some((c, _)) = r.last() {
                    assert!(*c < ncols, "column {c} out of range {ncols}");
                }
                r
            })
            .collect::<Vec<_>>();
        RatMatrix {
            nrows: data.len(),
            ncols,
            data,
        }
    }

    /// Builds from `(row, col, value)` triplets; duplicates are summed.
    pub fn from_triplets(nrows: usize, ncols: usize, triplets: Vec<(usize, usize, Rat)>) -> Self {
        let mut rows: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); nrows];
        for (r, c, v) in triplets {
            assert!(r < nrows && c < ncols, "index ({r},{c}) out of range");
            rows[r].push((c, v));
        }
        Self::from_rows(ncols, rows)
    }

    pub fn from_dense_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), ncols, "ragged dense matrix");
                r.iter()
                    .enumerate()
                    .filter(|(_, v)| **v != 0)
                    .map(|(c, v)| (c, Rat::from_integer((*v).into())))
                    .collect()
            })
            .collect();
        RatMatrix {
            nrows: rows.len(),
            ncols,
            data,
        }
    }

    /// Matrix whose columns are the given vectors (each of length `nrows`).
    pub fn from_columns(nrows: usize, columns: &[SparseRow]) -> Self {
        let mut trip = Vec::new();
        for (j, col) in columns.iter().enumerate() {
            for (i, v) in col {
                trip.push((*i, j, v.clone()));
            }
        }
        Self::from_triplets(nrows, columns.len(), trip)
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &SparseRow {
        &self.data[i]
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.data
    }

    pub fn into_rows(self) -> Vec<SparseRow> {
        self.data
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn get(&self, i: usize, j: usize) -> Rat {
        let row = &self.data[i];
        match row.binary_search_by_key(&j, |(c, _)| *c) {
            Ok(k) => row[k].1.clone(),
            Err(_) => Rat::zero(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut rows: Vec<SparseRow> = vec![Vec::new(); self.ncols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                rows[*j].push((i, v.clone()));
            }
        }
        RatMatrix {
            nrows: self.ncols,
            ncols: self.nrows,
            data: rows,
        }
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseRow> {
        self.transpose().data
    }

    pub fn column(&self, j: usize) -> SparseRow {
        self.data
            .iter()
            .enumerate()
            .filter_map(|(i, row)| {
                row.binary_search_by_key(&j, |(c, _)| *c)
                    .ok()
                    .map(|k| (i, row[k].1.clone()))
            })
            .collect()
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(
            self.ncols, other.nrows,
            "shape mismatch in product: {}x{} * {}x{}",
            self.nrows, self.ncols, other.nrows, other.ncols
        );
        let mut acc = DenseAccumulator::new(other.ncols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        acc.add(*j, &(a * b));
                    }
                }
                acc.drain()
            })
            .collect();
        RatMatrix {
            nrows: self.nrows,
            ncols: other.ncols,
            data,
        }
    }

    pub fn mul_vec(&self, v: &SparseRow) -> SparseRow {
        let mut dense: Vec<Option<&Rat>> = vec![None; self.ncols];
        for (i, x) in v {
            dense[*i] = Some(x);
        }
        let mut out = Vec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut s = Rat::zero();
            for (j, a) in row {
                if let Some(x) = dense[*j] {
                    s += a * x;
                }
            }
            if !s.is_zero() {
                out.push((i, s));
            }
        }
        out
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        self.lin_comb(&Rat::one(), other, &Rat::one())
    }

    pub fn sub(&self, other: &RatMatrix) -> RatMatrix {
        self.lin_comb(&Rat::one(), other, &-Rat::one())
    }

    /// `a*self + b*other`.
    pub fn lin_comb(&self, a: &Rat, other: &RatMatrix, b: &Rat) -> RatMatrix {
        assert_eq!(
            (self.nrows, self.ncols),
            (other.nrows, other.ncols),
            "shape mismatch in sum"
        );
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| axpby(a, x, b, y))
            .collect();
        RatMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data,
        }
    }

    pub fn scale(&self, c: &Rat) -> RatMatrix {
        if c.is_zero() {
            return Self::zeros(self.nrows, self.ncols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
            .collect();
        RatMatrix {
            nrows: self.nrows,
            ncols: self.ncols,
            data,
        }
    }

    pub fn neg(&self) -> RatMatrix {
        self.scale(&-Rat::one())
    }

    pub fn pow(&self, e: usize) -> RatMatrix {
        assert_eq!(self.nrows, self.ncols, "power of a non-square matrix");
        let mut out = Self::identity(self.nrows);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `[self | other]`.
    pub fn hstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.nrows, other.nrows, "hstack row mismatch");
        let off = self.ncols;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| {
                let mut r = x.clone();
                r.extend(y.iter().map(|(j, v)| (j + off, v.clone())));
                r
            })
            .collect();
        RatMatrix {
            nrows: self.nrows,
            ncols: self.ncols + other.ncols,
            data,
        }
    }

    pub fn vstack(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.ncols, other.ncols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        RatMatrix {
            nrows: self.nrows + other.nrows,
            ncols: self.ncols,
            data,
        }
    }

    pub fn select_rows(&self, rows: &[usize]) -> RatMatrix {
        RatMatrix {
            nrows: rows.len(),
            ncols: self.ncols,
            data: rows.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    pub fn select_cols(&self, cols: &[usize]) -> RatMatrix {
        let mut map = vec![usize::MAX; self.ncols];
        for (new, &old) in cols.iter().enumerate() {
            map[old] = new;
        }
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut out: SparseRow = r
                    .iter()
                    .filter(|(j, _)| map[*j] != usize::MAX)
                    .map(|(j, v)| (map[*j], v.clone()))
                    .collect();
                out.sort_by_key(|(j, _)| *j);
                out
            })
            .collect();
        RatMatrix {
            nrows: self.nrows,
            ncols: cols.len(),
            data,
        }
    }

    /// Row-permuted copy: row `i` of the result is row `perm[i]` of `self`.
    pub fn permute_rows(&self, perm: &[usize]) -> RatMatrix {
        self.select_rows(perm)
    }

    pub fn permute_cols(&self, perm: &[usize]) -> RatMatrix {
        self.select_cols(perm)
    }

    pub fn to_dense(&self) -> Vec<Vec<Rat>> {
        let mut out = vec![vec![Rat::zero(); self.ncols]; self.nrows];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                out[i][*j] = v.clone();
            }
        }
        out
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.nrows, self.ncols)?;
        if self.nrows <= 12 && self.ncols <= 12 {
            for row in self.to_dense() {
                let cells: Vec<String> = row.iter().map(format_rat).collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            for (i, row) in self.data.iter().enumerate().filter(|(_, r)| !r.is_empty()).take(20) {
                let cells: Vec<String> = row.iter().map(|(j, v)| format!("{j}:{}", format_rat(v))).collect();
                writeln!(f, "  {i}: {}", cells.join(" "))?;
            }
        }
        write!(f, "]")
    }
}

/// Assembles a matrix from blocks placed at row/column offsets.
pub struct BlockBuilder {
    nrows: usize,
    ncols: usize,
    rows: Vec<SparseRow>,
}

impl BlockBuilder {
    pub fn new(nrows: usize, ncols: usize) -> Self {
        BlockBuilder {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn add_block(&mut self, row_off: usize, col_off: usize, block: &RatMatrix) {
        assert!(row_off + block.nrows() <= self.nrows, "block rows overflow");
        assert!(col_off + block.ncols() <= self.ncols, "block cols overflow");
        for (i, row) in block.rows().iter().enumerate() {
            let target = &mut self.rows[row_off + i];
            target.extend(row.iter().map(|(j, v)| (j + col_off, v.clone())));
        }
    }

    pub fn build(self) -> RatMatrix {
        RatMatrix::from_rows(self.ncols, self.rows)
    }
}

pub(crate) fn normalize_row(mut r: Vec<(usize, Rat)>) -> SparseRow {
    r.sort_by_key(|(c, _)| *c);
    let mut out: SparseRow = Vec::with_capacity(r.len());
    for (c, v) in r {
        match out.last_mut() {
            Some((lc, lv)) if *lc == c => *lv += v,
            _ => out.push((c, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a*x + b*y` for sorted sparse rows.
pub(crate) fn axpby(a: &Rat, x: &SparseRow, b: &Rat, y: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            let v = a * &x[i].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
        } else if take_y {
            let v = b * &y[j].1;
            if !v.is_zero() {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = a * &x[i].1 + b * &y[j].1;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `x - c*y`, the elimination step.
pub(crate) fn sub_scaled(x: &SparseRow, c: &Rat, y: &SparseRow) -> SparseRow {
    axpby(&Rat::one(), x, &-c, y)
}

struct DenseAccumulator {
    vals: Vec<Rat>,
    touched: Vec<usize>,
    flag: Vec<bool>,
}

impl DenseAccumulator {
    fn new(n: usize) -> Self {
        DenseAccumulator {
            vals: vec![Rat::zero(); n],
            touched: Vec::new(),
            flag: vec![false; n],
        }
    }

    fn add(&mut self, j: usize, v: &Rat) {
        if !self.flag[j] {
            self.flag[j] = true;
            self.touched.push(j);
        }
        self.vals[j] += v;
    }

    fn drain(&mut self) -> SparseRow {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &j in &self.touched {
            self.flag[j] = false;
            let v = std::mem::replace(&mut self.vals[j], Rat::zero());
            if !v.is_zero() {
                out.push((j, v));
            }
        }
        self.touched.clear();
        out
    }
}
