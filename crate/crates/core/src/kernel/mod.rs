//! Exact scalars and linear algebra.

mod matrix;
mod scalar;
mod smith;

pub use matrix::{axpy, scale, Accum, Echelon, FieldMatrix, SparseVec};
pub use scalar::{is_prime, Field, Scalar};
pub use smith::IntMatrix;

/// Rank of a matrix over a field.
pub fn rank(m: &FieldMatrix) -> usize {
    m.rank()
}

pub fn kernel_dim(m: &FieldMatrix) -> usize {
    m.kernel_dim()
}

pub fn smith_normal_form(m: &IntMatrix) -> Vec<num_bigint::BigInt> {
    m.smith_normal_form()
}
