//! Exact dense linear and tensor algebra over the rationals.

mod matrix;
pub mod scalar;
mod tensor;

pub use matrix::{flat_index, flip, kron_all, leg_permutation, legs, multi_index, permute_legs, LegPerm, Matrix};
pub use scalar::{frac, int, one, parse_scalar, zero, Scalar};
pub use tensor::Tensor3;

/// `kron(a, b)` as a free function.
pub fn kron(a: &Matrix, b: &Matrix) -> Matrix {
    a.kron(b)
}

/// Exact inverse, `SingularMatrix` on a vanishing determinant.
pub fn invert(a: &Matrix) -> crate::Result<Matrix> {
    a.invert()
}

pub fn apply3(t: &Tensor3, mode: usize, m: &Matrix) -> crate::Result<Tensor3> {
    t.apply3(mode, m)
}
