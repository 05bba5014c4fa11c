//! Exact rational linear algebra.

pub mod elim;
pub mod matrix;
pub mod rat;
pub mod subspace;

pub use elim::{independent_columns, kernel_matrix, rank, solve};
pub use matrix::{BlockBuilder, RatMatrix, SparseRow};
pub use rat::{format_rat, parse_rat, rat, ratio, sign, Rat};
pub use subspace::{
    image_basis, kernel_basis, quotient_dim, subspace_intersection, subspace_sum, Subspace, SubspaceError,
};
