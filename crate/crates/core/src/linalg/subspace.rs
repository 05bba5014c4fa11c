use thiserror::Error;

use super::elim::{echelon, independent_columns, kernel_matrix, Echelon};
use super::matrix::{RatMatrix, SparseRow};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SubspaceError {
    #[error("ambient dimensions differ: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("subspace is not contained in the ambient subspace")]
    NotContained,
}

/// A linear subspace of `Q^n`, stored as a matrix of independent columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: RatMatrix,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            basis: RatMatrix::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            basis: RatMatrix::identity(ambient),
        }
    }

    /// Column span of `m`; dependent columns are dropped.
    pub fn span(m: &RatMatrix) -> Self {
        let keep = independent_columns(m);
        Subspace {
            basis: m.select_cols(&keep),
        }
    }

    pub fn span_vectors(ambient: usize, vectors: &[SparseRow]) -> Self {
        Self::span(&RatMatrix::from_columns(ambient, vectors))
    }

    /// Wraps `basis` without checking independence.
    pub fn from_independent(basis: RatMatrix) -> Self {
        Subspace { basis }
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis(&self) -> &RatMatrix {
        &self.basis
    }

    pub fn into_basis(self) -> RatMatrix {
        self.basis
    }

    pub fn vectors(&self) -> Vec<SparseRow> {
        self.basis.columns()
    }

    /// Image of this subspace under `m`.
    pub fn image_under(&self, m: &RatMatrix) -> Subspace {
        Subspace::span(&m.mul(&self.basis))
    }

    /// An echelon form of the basis vectors, for repeated membership tests.
    pub fn membership(&self) -> Membership {
        let t = self.basis.transpose();
        Membership { e: echelon(&t) }
    }

    pub fn contains_vector(&self, v: &SparseRow) -> bool {
        self.membership().contains(v)
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        if self.ambient_dim() != other.ambient_dim() {
            return false;
        }
        let m = self.membership();
        other.vectors().iter().all(|v| m.contains(v))
    }
}

/// Membership oracle for a fixed subspace.
pub struct Membership {
    e: Echelon,
}

impl Membership {
    pub fn contains(&self, v: &SparseRow) -> bool {
        self.e.reduce(v).is_empty()
    }

    pub fn dim(&self) -> usize {
        self.e.rank()
    }

    /// Adds `v` to the spanning set; returns whether the span grew.
    pub fn insert(&mut self, v: &SparseRow) -> bool {
        self.e.insert(v).is_some()
    }
}

pub fn kernel_basis(m: &RatMatrix) -> Subspace {
    Subspace::from_independent(kernel_matrix(m))
}

pub fn image_basis(m: &RatMatrix) -> Subspace {
    Subspace::span(m)
}

fn check(u: &Subspace, v: &Subspace) -> Result<(), SubspaceError> {
    if u.ambient_dim() != v.ambient_dim() {
        Err(SubspaceError::DimensionMismatch(u.ambient_dim(), v.ambient_dim()))
    } else {
        Ok(())
    }
}

pub fn subspace_sum(u: &Subspace, v: &Subspace) -> Result<Subspace, SubspaceError> {
    check(u, v)?;
    Ok(Subspace::span(&u.basis.hstack(&v.basis)))
}

/// Intersection via the kernel of `[u | -v]`, projected onto the `u` half.
pub fn subspace_intersection(u: &Subspace, v: &Subspace) -> Result<Subspace, SubspaceError> {
    check(u, v)?;
    if u.dim() == 0 || v.dim() == 0 {
        return Ok(Subspace::zero(u.ambient_dim()));
    }
    let k = kernel_matrix(&u.basis.hstack(&v.basis.neg()));
    let top: Vec<usize> = (0..u.dim()).collect();
    let coeffs = k.select_rows(&top);
    // u has independent columns, so distinct kernel vectors give
    // independent images.
    Ok(Subspace::from_independent(u.basis.mul(&coeffs)))
}

pub fn quotient_dim(v: &Subspace, w: &Subspace) -> Result<usize, SubspaceError> {
    check(v, w)?;
    if !v.contains(w) {
        return Err(SubspaceError::NotContained);
    }
    Ok(v.dim() - w.dim())
}
