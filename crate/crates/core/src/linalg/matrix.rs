use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_scalar, int, Scalar};
use crate::error::{Error, Result};

/// Dense row-major matrix over the rationals.
///
/// A matrix is always read as a linear map acting on column vectors:
/// `m[(i, j)]` is the coefficient of the `i`-th output basis vector in the
/// image of the `j`-th input basis vector. Tensor-product bases are ordered
/// lexicographically with the first factor most significant.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// On the wire a matrix is a list of rows of scalars.
impl serde::Serialize for Matrix {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        use super::scalar::JsonScalar;
        let rows: Vec<Vec<JsonScalar>> =
            self.to_rows().into_iter().map(|r| r.into_iter().map(JsonScalar).collect()).collect();
        serde::Serialize::serialize(&rows, ser)
    }
}

impl<'de> serde::Deserialize<'de> for Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        use super::scalar::JsonScalar;
        let rows: Vec<Vec<JsonScalar>> = serde::Deserialize::deserialize(de)?;
        Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|s| s.0).collect()).collect())
            .map_err(serde::de::Error::custom)
    }
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Self { rows, cols, data })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn scalar(s: Scalar) -> Self {
        Self { rows: 1, cols: 1, data: vec![s] }
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor for integer test data.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular integer matrix")
    }

    pub fn column(entries: Vec<Scalar>) -> Self {
        Self { rows: entries.len(), cols: 1, data: entries }
    }

    pub fn row(entries: Vec<Scalar>) -> Self {
        Self { rows: 1, cols: entries.len(), data: entries }
    }

    /// Standard basis column `e_i` of length `n`.
    pub fn basis_column(n: usize, i: usize) -> Self {
        let mut m = Self::zeros(n, 1);
        m.data[i] = Scalar::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &Scalar) {
        self.data[i * self.cols + j] += value;
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn col_matrix(&self, j: usize) -> Matrix {
        Matrix::column(self.col(j))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[Scalar]>::to_vec).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * s).collect() }
    }

    pub fn try_mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot compose {}x{} after {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                let row = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (j, b) in row.iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product: the matrix of `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Matrix) -> Matrix {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for p in 0..rhs.rows {
                    for q in 0..rhs.cols {
                        let b = rhs.get(p, q);
                        if !b.is_zero() {
                            out.data[(i * rhs.rows + p) * cols + j * rhs.cols + q] = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Gauss-Jordan inverse; `SingularMatrix` when the determinant vanishes.
    pub fn invert(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!(
                "cannot invert a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for c in 0..n {
            let pivot = (c..n).find(|&r| !a.get(r, c).is_zero()).ok_or(Error::SingularMatrix)?;
            a.swap_rows(c, pivot);
            inv.swap_rows(c, pivot);
            let p = a.get(c, c).recip();
            a.scale_row(c, &p);
            inv.scale_row(c, &p);
            for r in 0..n {
                if r != c && !a.get(r, c).is_zero() {
                    let f = a.get(r, c).clone();
                    a.sub_row_multiple(r, c, &f);
                    inv.sub_row_multiple(r, c, &f);
                }
            }
        }
        Ok(inv)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Integer power; negative exponents go through the inverse.
    pub fn pow(&self, e: i32) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut out = Self::identity(self.rows);
        for _ in 0..e.unsigned_abs() {
            out = &out * &base;
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn row_echelon(&self) -> (Matrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(r, p);
            let inv = a.get(r, c).recip();
            a.scale_row(r, &inv);
            for i in 0..a.rows {
                if i != r && !a.get(i, c).is_zero() {
                    let f = a.get(i, c).clone();
                    a.sub_row_multiple(i, r, &f);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    /// One solution `x` of `self · x = rhs` (free variables set to zero), or
    /// `None` when the system is inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Result<Option<Matrix>> {
        if rhs.rows != self.rows {
            return Err(Error::DimensionMismatch("right-hand side height".into()));
        }
        let (rre, pivots) = self.hstack(rhs)?.row_echelon();
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(c, j, rre.get(r, self.cols + j).clone());
            }
        }
        Ok(Some(x))
    }

    /// Basis of the kernel, one column per free variable.
    pub fn nullspace(&self) -> Vec<Matrix> {
        let (rre, pivots) = self.row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Self::zeros(self.cols, 1);
                v.set(f, 0, Scalar::one());
                for (r, &c) in pivots.iter().enumerate() {
                    v.set(c, 0, -rre.get(r, f).clone());
                }
                v
            })
            .collect()
    }

    pub fn hstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.rows != rhs.rows {
            return Err(Error::DimensionMismatch("hstack heights differ".into()));
        }
        let cols = self.cols + rhs.cols;
        let mut out = Self::zeros(self.rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
            for j in 0..rhs.cols {
                out.set(i, self.cols + j, rhs.get(i, j).clone());
            }
        }
        Ok(out)
    }

    pub fn vstack(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.cols {
            return Err(Error::DimensionMismatch("vstack widths differ".into()));
        }
        let mut data = self.data.clone();
        data.extend(rhs.data.iter().cloned());
        Self::new(self.rows + rhs.rows, self.cols, data)
    }

    /// Reshapes a column vector in `A⊗B` (first factor major) into the
    /// `dim(A) x dim(B)` coefficient matrix, and back with [`Matrix::flatten`].
    pub fn reshape(&self, rows: usize, cols: usize) -> Result<Matrix> {
        Self::new(rows, cols, self.data.clone())
    }

    pub fn flatten(&self) -> Matrix {
        Matrix::column(self.data.clone())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for j in 0..self.cols {
            self.data[r * self.cols + j] *= s;
        }
    }

    fn sub_row_multiple(&mut self, target: usize, source: usize, f: &Scalar) {
        for j in 0..self.cols {
            let v = &self.data[source * self.cols + j];
            if !v.is_zero() {
                let d = v * f;
                self.data[target * self.cols + j] -= d;
            }
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;

    /// Composition `self ∘ rhs`. Panics on incompatible shapes; use
    /// [`Matrix::try_mul`] for untrusted input.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &Matrix {
    type Output = Matrix;

    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix sum shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;

    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.shape(), rhs.shape(), "matrix difference shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;

    fn neg(self) -> Matrix {
        self.scale(&-Scalar::one())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for (i, row) in self.to_rows().iter().enumerate() {
            if i > 0 {
                write!(f, ";")?;
            }
            let cells: Vec<String> = row.iter().map(format_scalar).collect();
            write!(f, " {}", cells.join(" "))?;
        }
        write!(f, " ]")
    }
}

/// Kronecker product of a list of factors, left to right.
pub fn kron_all(factors: &[&Matrix]) -> Matrix {
    factors.iter().fold(Matrix::identity(1), |acc, m| acc.kron(m))
}

/// Linear index of a multi-index under first-factor-major ordering.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    dims.iter().zip(idx).fold(0, |acc, (&d, &i)| acc * d + i)
}

/// Inverse of [`flat_index`].
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for (slot, &d) in idx.iter_mut().zip(dims).rev() {
        *slot = flat % d;
        flat /= d;
    }
    idx
}

/// Permutation of tensor legs. Input legs have sizes `dims`; output leg `t`
/// is input leg `order[t]`. For example `leg_permutation(&[m, n], &[1, 0])`
/// is the flip `M⊗N → N⊗M`.
pub fn leg_permutation(dims: &[usize], order: &[usize]) -> Matrix {
    assert_eq!(dims.len(), order.len(), "leg permutation arity");
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let total: usize = dims.iter().product();
    let mut p = Matrix::zeros(total, total);
    for col in 0..total {
        let idx = multi_index(dims, col);
        let out: Vec<usize> = order.iter().map(|&k| idx[k]).collect();
        p.set(flat_index(&out_dims, &out), col, Scalar::one());
    }
    p
}

/// A leg permutation kept as an index map, so composing with it only moves
/// entries around. Same convention as [`leg_permutation`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegPerm {
    dims: Vec<usize>,
    order: Vec<usize>,
}

/// Sparse form of [`leg_permutation`].
pub fn legs(dims: &[usize], order: &[usize]) -> LegPerm {
    assert_eq!(dims.len(), order.len(), "leg permutation arity");
    LegPerm { dims: dims.to_vec(), order: order.to_vec() }
}

impl LegPerm {
    fn targets(&self) -> Vec<usize> {
        let out_dims: Vec<usize> = self.order.iter().map(|&k| self.dims[k]).collect();
        let total: usize = self.dims.iter().product();
        (0..total)
            .map(|c| {
                let idx = multi_index(&self.dims, c);
                let moved: Vec<usize> = self.order.iter().map(|&k| idx[k]).collect();
                flat_index(&out_dims, &moved)
            })
            .collect()
    }

    pub fn to_matrix(&self) -> Matrix {
        leg_permutation(&self.dims, &self.order)
    }
}

impl Mul<&Matrix> for &LegPerm {
    type Output = Matrix;

    fn mul(self, x: &Matrix) -> Matrix {
        permute_legs(x, &self.dims, &self.order)
    }
}

impl Mul<&LegPerm> for &Matrix {
    type Output = Matrix;

    fn mul(self, p: &LegPerm) -> Matrix {
        let t = p.targets();
        assert_eq!(t.len(), self.cols, "leg permutation width");
        let mut out = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for (c, &dst) in t.iter().enumerate() {
                out.data[i * self.cols + c] = self.data[i * self.cols + dst].clone();
            }
        }
        out
    }
}

/// `leg_permutation(dims, order) * x`, computed by moving rows.
pub fn permute_legs(x: &Matrix, dims: &[usize], order: &[usize]) -> Matrix {
    assert_eq!(dims.iter().product::<usize>(), x.rows, "leg permutation height");
    let out_dims: Vec<usize> = order.iter().map(|&k| dims[k]).collect();
    let mut out = Matrix::zeros(x.rows, x.cols);
    for row in 0..x.rows {
        let idx = multi_index(dims, row);
        let moved: Vec<usize> = order.iter().map(|&k| idx[k]).collect();
        let dst = flat_index(&out_dims, &moved);
        out.data[dst * x.cols..(dst + 1) * x.cols].clone_from_slice(&x.data[row * x.cols..(row + 1) * x.cols]);
    }
    out
}

/// The flip `M⊗N → N⊗M`.
pub fn flip(m: usize, n: usize) -> Matrix {
    leg_permutation(&[m, n], &[1, 0])
}
