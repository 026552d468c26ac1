use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{long_equation_check, OperatorOnTensorSquare};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar};

/// Largest grid `search_solutions` will walk.
pub const SEARCH_CAP: u64 = 1 << 22;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchShape {
    /// `R(m_i⊗m_j) = b_{ij} m_i⊗m_j`.
    Diagonal,
    /// Every entry of the `n² x n²` matrix.
    Full,
}

impl std::str::FromStr for SearchShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "diagonal" => Ok(Self::Diagonal),
            "full" => Ok(Self::Full),
            _ => Err(Error::Parse(format!("unknown shape {s:?} (diagonal|full)"))),
        }
    }
}

/// Every operator with entries from `set` (in the chosen shape) solving the
/// Hom-Long equation for `mu`, in lexicographic grid order.
pub fn search_solutions(mu: &Matrix, set: &[Scalar], shape: SearchShape) -> Result<Vec<OperatorOnTensorSquare>> {
    let n = mu.rows();
    if !mu.is_square() {
        return Err(Error::DimensionMismatch("mu must be square".into()));
    }
    if !mu.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    let slots = match shape {
        SearchShape::Diagonal => n * n,
        SearchShape::Full => n.pow(4),
    };
    let cardinality = BigUint::from(set.len()).pow(slots as u32);
    let too_large = || Error::SearchSpaceTooLarge { cardinality: cardinality.to_string(), cap: SEARCH_CAP };
    if shape == SearchShape::Full && n > 2 && !cardinality.is_zero() {
        return Err(too_large());
    }
    let total = cardinality.to_u64().filter(|&c| c <= SEARCH_CAP).ok_or_else(too_large)?;

    let build = |t: u64| -> Matrix {
        let digits = grid_digits(t, set.len(), slots);
        match shape {
            SearchShape::Diagonal => Matrix::diagonal(&digits.iter().map(|&d| set[d].clone()).collect::<Vec<_>>()),
            SearchShape::Full => {
                Matrix::new(n * n, n * n, digits.iter().map(|&d| set[d].clone()).collect()).expect("n⁴ entries")
            }
        }
    };
    let fast = IntGrid::new(mu, set);
    let found: Vec<Matrix> = (0..total)
        .into_par_iter()
        .filter_map(|t| {
            let passes = match &fast {
                Some(g) => g.solves(&grid_digits(t, set.len(), slots), shape),
                None => {
                    let op = OperatorOnTensorSquare::new(build(t), mu.clone()).expect("shape");
                    long_equation_check(&op).passed
                }
            };
            passes.then(|| build(t))
        })
        .collect();
    found.into_iter().map(|m| OperatorOnTensorSquare::new(m, mu.clone())).collect()
}

/// Base-`k` digits of `t`, most significant first.
fn grid_digits(mut t: u64, k: usize, slots: usize) -> Vec<usize> {
    let mut out = vec![0; slots];
    for slot in out.iter_mut().rev() {
        *slot = (t % k as u64) as usize;
        t /= k as u64;
    }
    out
}

/// Integer arithmetic when `mu` and the grid are small integers.
struct IntGrid {
    n: usize,
    mu: Vec<i128>,
    set: Vec<i128>,
}

const INT_BOUND: i64 = 1 << 20;

impl IntGrid {
    fn new(mu: &Matrix, set: &[Scalar]) -> Option<Self> {
        let small = |s: &Scalar| -> Option<i128> {
            if !s.is_integer() {
                return None;
            }
            let v = s.numer().to_i64()?;
            (v.abs() <= INT_BOUND).then_some(v as i128)
        };
        Some(Self {
            n: mu.rows(),
            mu: mu.entries().iter().map(small).collect::<Option<_>>()?,
            set: set.iter().map(small).collect::<Option<_>>()?,
        })
    }

    fn solves(&self, digits: &[usize], shape: SearchShape) -> bool {
        let n = self.n;
        let n2 = n * n;
        let mut r = vec![0i128; n2 * n2];
        match shape {
            SearchShape::Diagonal => {
                for (i, &d) in digits.iter().enumerate() {
                    r[i * n2 + i] = self.set[d];
                }
            }
            SearchShape::Full => {
                for (i, &d) in digits.iter().enumerate() {
                    r[i] = self.set[d];
                }
            }
        }
        let r12 = kron(&r, n2, &self.mu, n);
        let r23 = kron(&self.mu, n, &r, n2);
        let n3 = n2 * n;
        mul(&r12, &r23, n3) == mul(&r23, &r12, n3)
    }
}

fn kron(a: &[i128], da: usize, b: &[i128], db: usize) -> Vec<i128> {
    let d = da * db;
    let mut out = vec![0; d * d];
    for i in 0..da {
        for j in 0..da {
            let x = a[i * da + j];
            if x == 0 {
                continue;
            }
            for p in 0..db {
                for q in 0..db {
                    out[(i * db + p) * d + j * db + q] = x * b[p * db + q];
                }
            }
        }
    }
    out
}

fn mul(a: &[i128], b: &[i128], d: usize) -> Vec<i128> {
    let mut out = vec![0; d * d];
    for i in 0..d {
        for k in 0..d {
            let x = a[i * d + k];
            if x == 0 {
                continue;
            }
            for j in 0..d {
                out[i * d + j] += x * b[k * d + j];
            }
        }
    }
    out
}
