//! The Hom-Long equation `R¹²∘R²³ = R²³∘R¹²` with `R¹² = R⊗μ`, `R²³ = μ⊗R`.

mod coords;
mod dimodule;
mod search;

pub use coords::{coordinate_criterion, literal_operator, tau_transforms, CriterionReport, TauTransforms};
pub use dimodule::{
    comodule_extension, dimodule_solution, module_extension, module_extension_corrected, validate_halpha_dimodule, HAlphaLongDimodule,
};
pub use search::{search_solutions, SearchShape, SEARCH_CAP};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use num_traits::{One, Zero};

use crate::linalg::{multi_index, Matrix, Scalar};
use crate::report::{AxiomCheck, AxiomReport, Witness};

/// An endomorphism of `M⊗M` together with the structure map of `M`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawOperator", into = "RawOperator")]
pub struct OperatorOnTensorSquare {
    n: usize,
    matrix: Matrix,
    mu: Matrix,
}

#[derive(Serialize, Deserialize)]
struct RawOperator {
    n: usize,
    mu: Matrix,
    matrix: Matrix,
}

impl TryFrom<RawOperator> for OperatorOnTensorSquare {
    type Error = Error;

    fn try_from(raw: RawOperator) -> Result<Self> {
        let op = Self::new(raw.matrix, raw.mu)?;
        if op.n != raw.n {
            return Err(Error::DimensionMismatch(format!("n = {} but mu is {}x{}", raw.n, op.n, op.n)));
        }
        Ok(op)
    }
}

impl From<OperatorOnTensorSquare> for RawOperator {
    fn from(op: OperatorOnTensorSquare) -> Self {
        RawOperator { n: op.n, mu: op.mu, matrix: op.matrix }
    }
}

impl OperatorOnTensorSquare {
    /// `matrix` is `n² x n²`, `mu` an invertible `n x n`.
    pub fn new(matrix: Matrix, mu: Matrix) -> Result<Self> {
        let n = mu.rows();
        if !mu.is_square() {
            return Err(Error::DimensionMismatch(format!("mu is {}x{}", mu.rows(), mu.cols())));
        }
        if matrix.shape() != (n * n, n * n) {
            return Err(Error::DimensionMismatch(format!(
                "operator on M⊗M must be {0}x{0}, got {1}x{2}",
                n * n,
                matrix.rows(),
                matrix.cols()
            )));
        }
        if !mu.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(Self { n, matrix, mu })
    }

    pub fn carrier_dim(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn structure_map(&self) -> &Matrix {
        &self.mu
    }

    /// `R⊗μ`.
    pub fn r12(&self) -> Matrix {
        self.matrix.kron(&self.mu)
    }

    /// `μ⊗R`.
    pub fn r23(&self) -> Matrix {
        self.mu.kron(&self.matrix)
    }

    /// Same structure map, different operator.
    pub fn with_matrix(&self, matrix: Matrix) -> Result<Self> {
        Self::new(matrix, self.mu.clone())
    }
}

/// `R¹²∘R²³ = R²³∘R¹²` with a witness triple on failure.
///
/// Both composites are applied to one basis triple at a time with sparse
/// columns, so `n = 16` stays cheap.
pub fn long_equation_check(r: &OperatorOnTensorSquare) -> AxiomCheck {
    use rayon::prelude::*;
    let n = r.n;
    let rc = sparse_cols(&r.matrix);
    let mc = sparse_cols(&r.mu);
    let r12 = |v: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (idx, x) in v {
            let (ab, c) = (idx / n, idx % n);
            for (pq, y) in &rc[ab] {
                for (c2, z) in &mc[c] {
                    *out.entry(pq * n + c2).or_insert_with(Scalar::zero) += x * y * z;
                }
            }
        }
        prune(out)
    };
    let r23 = |v: &Sparse| -> Sparse {
        let mut out = Sparse::new();
        for (idx, x) in v {
            let (a, bc) = (idx / (n * n), idx % (n * n));
            for (a2, z) in &mc[a] {
                for (qr, y) in &rc[bc] {
                    *out.entry(a2 * n * n + qr).or_insert_with(Scalar::zero) += x * y * z;
                }
            }
        }
        prune(out)
    };
    let cols = n * n * n;
    let column = |j: usize| {
        let e = Sparse::from([(j, Scalar::one())]);
        let (lhs, rhs) = (r12(&r23(&e)), r23(&r12(&e)));
        (lhs != rhs).then_some((lhs, rhs))
    };
    let sides: Vec<Option<(Sparse, Sparse)>> =
        if cols < 512 { (0..cols).map(column).collect() } else { (0..cols).into_par_iter().map(column).collect() };
    let failures = sides.iter().flatten().count();
    let witness = sides.iter().enumerate().find_map(|(j, s)| {
        s.as_ref().map(|(l, r)| Witness { inputs: multi_index(&[n, n, n], j), lhs: dense(l, cols), rhs: dense(r, cols) })
    });
    AxiomCheck { id: "long-equation".into(), passed: failures == 0, witness, failures, note: None, informational: false }
}

type Sparse = std::collections::BTreeMap<usize, Scalar>;

fn sparse_cols(m: &Matrix) -> Vec<Vec<(usize, Scalar)>> {
    (0..m.cols())
        .map(|j| (0..m.rows()).filter(|&i| !m.get(i, j).is_zero()).map(|i| (i, m.get(i, j).clone())).collect())
        .collect()
}

fn prune(mut v: Sparse) -> Sparse {
    v.retain(|_, x| !x.is_zero());
    v
}

fn dense(v: &Sparse, len: usize) -> Vec<Scalar> {
    let mut out = vec![Scalar::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn check_long_equation(r: &OperatorOnTensorSquare) -> AxiomReport {
    let mut rep = AxiomReport::new();
    rep.push(long_equation_check(r));
    rep
}

/// `R` solves the equation iff `R⁻¹` does (same `μ`).
pub fn check_invertible_iff(r: &OperatorOnTensorSquare) -> Result<AxiomReport> {
    let inv = r.with_matrix(r.matrix.invert()?)?;
    let a = long_equation_check(r);
    let mut b = long_equation_check(&inv);
    b.id = "long-equation(inverse)".into();
    let mut rep = AxiomReport::new();
    let same = a.passed == b.passed;
    for mut c in [a, b] {
        c.informational = true;
        rep.push(c);
    }
    rep.flag("same-verdict", same, None);
    Ok(rep)
}

/// `μ(m_i) = a_i m_i`, `R(m_i⊗m_j) = b_{ij} m_i⊗m_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalSolution {
    pub operator: OperatorOnTensorSquare,
    /// All `a_i = 1`, so `R` solves the classical Long equation.
    pub classical: bool,
}

pub fn diagonal_solution(a: &[Scalar], b: &Matrix) -> Result<DiagonalSolution> {
    use num_traits::{One, Zero};
    let n = a.len();
    if b.shape() != (n, n) {
        return Err(Error::DimensionMismatch(format!("b must be {n}x{n}, got {}x{}", b.rows(), b.cols())));
    }
    if a.iter().any(Zero::is_zero) {
        return Err(Error::ZeroDiagonal);
    }
    let entries: Vec<Scalar> = (0..n * n).map(|k| b.get(k / n, k % n).clone()).collect();
    let operator = OperatorOnTensorSquare::new(Matrix::diagonal(&entries), Matrix::diagonal(a))?;
    Ok(DiagonalSolution { operator, classical: a.iter().all(One::is_one) })
}
