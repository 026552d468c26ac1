use num_traits::Zero;

use super::matrix::Matrix;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Three-index array of structure constants, indexed `[i][j][k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tensor3 {
    dims: [usize; 3],
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn new(dims: [usize; 3], data: Vec<Scalar>) -> Result<Self> {
        if data.len() != dims.iter().product::<usize>() {
            return Err(Error::DimensionMismatch(format!(
                "tensor {dims:?} needs {} entries, got {}",
                dims.iter().product::<usize>(),
                data.len()
            )));
        }
        Ok(Self { dims, data })
    }

    pub fn zeros(dims: [usize; 3]) -> Self {
        Self { dims, data: vec![Scalar::zero(); dims.iter().product()] }
    }

    pub fn from_nested(nested: Vec<Vec<Vec<Scalar>>>) -> Result<Self> {
        let d0 = nested.len();
        let d1 = nested.first().map_or(0, Vec::len);
        let d2 = nested.first().and_then(|m| m.first()).map_or(0, Vec::len);
        if nested.iter().any(|m| m.len() != d1 || m.iter().any(|r| r.len() != d2)) {
            return Err(Error::DimensionMismatch("ragged three-index array".into()));
        }
        Self::new([d0, d1, d2], nested.into_iter().flatten().flatten().collect())
    }

    pub fn to_nested(&self) -> Vec<Vec<Vec<Scalar>>> {
        let [d0, d1, d2] = self.dims;
        (0..d0)
            .map(|i| (0..d1).map(|j| (0..d2).map(|k| self.get(i, j, k).clone()).collect()).collect())
            .collect()
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[(i * self.dims[1] + j) * self.dims[2] + k]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: Scalar) {
        let idx = (i * self.dims[1] + j) * self.dims[2] + k;
        self.data[idx] = v;
    }

    /// Applies the linear map `m` to the leg at position `mode`:
    /// `out[.., a, ..] = Σ_b m[a][b] · self[.., b, ..]`.
    pub fn apply3(&self, mode: usize, m: &Matrix) -> Result<Tensor3> {
        if mode > 2 {
            return Err(Error::DimensionMismatch(format!("no tensor leg {mode}")));
        }
        if m.cols() != self.dims[mode] {
            return Err(Error::DimensionMismatch(format!(
                "leg {mode} has size {}, map expects {}",
                self.dims[mode],
                m.cols()
            )));
        }
        let mut dims = self.dims;
        dims[mode] = m.rows();
        let mut out = Tensor3::zeros(dims);
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    let v = self.get(i, j, k);
                    if v.is_zero() {
                        continue;
                    }
                    let src = [i, j, k][mode];
                    for a in 0..m.rows() {
                        let c = m.get(a, src);
                        if c.is_zero() {
                            continue;
                        }
                        let mut idx = [i, j, k];
                        idx[mode] = a;
                        let pos = (idx[0] * dims[1] + idx[1]) * dims[2] + idx[2];
                        out.data[pos] += v * c;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Reads `t[x][y][z]` as the coefficient of output `z` on input `x ⊗ y`
    /// (products, actions) and returns the `d2 x (d0·d1)` matrix.
    pub fn to_product_map(&self) -> Matrix {
        let [d0, d1, d2] = self.dims;
        let mut m = Matrix::zeros(d2, d0 * d1);
        for x in 0..d0 {
            for y in 0..d1 {
                for z in 0..d2 {
                    m.set(z, x * d1 + y, self.get(x, y, z).clone());
                }
            }
        }
        m
    }

    /// Inverse of [`Tensor3::to_product_map`].
    pub fn from_product_map(m: &Matrix, d0: usize, d1: usize) -> Result<Tensor3> {
        if m.cols() != d0 * d1 {
            return Err(Error::DimensionMismatch("product map width".into()));
        }
        let d2 = m.rows();
        let mut t = Tensor3::zeros([d0, d1, d2]);
        for x in 0..d0 {
            for y in 0..d1 {
                for z in 0..d2 {
                    t.set(x, y, z, m.get(z, x * d1 + y).clone());
                }
            }
        }
        Ok(t)
    }

    /// Reads `t[x][y][z]` as the coefficient of `y ⊗ z` in the image of `x`
    /// (coproducts, coactions) and returns the `(d1·d2) x d0` matrix.
    pub fn to_coproduct_map(&self) -> Matrix {
        let [d0, d1, d2] = self.dims;
        let mut m = Matrix::zeros(d1 * d2, d0);
        for x in 0..d0 {
            for y in 0..d1 {
                for z in 0..d2 {
                    m.set(y * d2 + z, x, self.get(x, y, z).clone());
                }
            }
        }
        m
    }

    /// Inverse of [`Tensor3::to_coproduct_map`].
    pub fn from_coproduct_map(m: &Matrix, d1: usize, d2: usize) -> Result<Tensor3> {
        if m.rows() != d1 * d2 {
            return Err(Error::DimensionMismatch("coproduct map height".into()));
        }
        let d0 = m.cols();
        let mut t = Tensor3::zeros([d0, d1, d2]);
        for x in 0..d0 {
            for y in 0..d1 {
                for z in 0..d2 {
                    t.set(x, y, z, m.get(y * d2 + z, x).clone());
                }
            }
        }
        Ok(t)
    }
}
