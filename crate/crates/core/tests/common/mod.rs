//! Seeded generators shared by the acceptance run and the property tests.
#![allow(dead_code)]

use homlong::linalg::{frac, int, Matrix, Scalar};
use homlong::longeq::literal_operator;
use rand::Rng;

pub fn small(rng: &mut impl Rng) -> Scalar {
    frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
}

pub fn nonzero(rng: &mut impl Rng) -> Scalar {
    loop {
        let s = small(rng);
        if s != int(0) {
            return s;
        }
    }
}

pub fn int_matrix(rng: &mut impl Rng, rows: usize, cols: usize, lo: i64, hi: i64) -> Matrix {
    Matrix::new(rows, cols, (0..rows * cols).map(|_| int(rng.gen_range(lo..=hi))).collect()).unwrap()
}

/// Upper triangular with nonzero diagonal.
pub fn invertible(rng: &mut impl Rng, n: usize) -> Matrix {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        m.set(i, i, nonzero(rng));
        for j in i + 1..n {
            m.set(i, j, int(rng.gen_range(-2..=2)));
        }
    }
    m
}

/// Coordinates `x` whose literal operator is `diag(b)` for the structure map `diag(a)`.
pub fn diagonal_coords(a: &[Scalar], b: &Matrix) -> Matrix {
    let n = a.len();
    Matrix::diagonal(&(0..n * n).map(|c| b.get(c / n, c % n) * &a[c % n]).collect::<Vec<_>>())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InstanceKind {
    Generic,
    Diagonal,
    ForcedFailure,
    ScalarStructure,
}

/// An `(x, y, z)` instance of the coordinate criterion at `n = 2`.
pub fn criterion_instance(rng: &mut impl Rng, kind: InstanceKind) -> (Matrix, Matrix, Matrix) {
    let n = 2;
    match kind {
        InstanceKind::Generic => (int_matrix(rng, 4, 4, -2, 2), int_matrix(rng, 4, 4, -2, 2), invertible(rng, n)),
        InstanceKind::Diagonal => {
            let a = [nonzero(rng), nonzero(rng)];
            let x = diagonal_coords(&a, &int_matrix(rng, 2, 2, -4, 4));
            let y = diagonal_coords(&a, &int_matrix(rng, 2, 2, -4, 4));
            (x, y, Matrix::diagonal(&a))
        }
        InstanceKind::ForcedFailure => loop {
            let (mut x, y, z) = criterion_instance(rng, InstanceKind::Diagonal);
            // (0,0) and (1,1) share the eigenvalue 1 of μ⊗μ⁻¹, so R stays equivariant
            let (i, j) = if rng.gen_bool(0.5) { (0, 3) } else { (3, 0) };
            x.add_to(i, j, &int(rng.gen_range(1..=3)));
            let r = literal_operator(&x, &z).unwrap();
            let s = literal_operator(&y, &z).unwrap();
            if &s.r12() * &r.r23() != &r.r23() * &s.r12() {
                return (x, y, z);
            }
        },
        InstanceKind::ScalarStructure => {
            let c = nonzero(rng);
            let z = Matrix::scalar(c.clone()).kron(&Matrix::identity(n));
            let id = Matrix::identity(n);
            let x = id.kron(&int_matrix(rng, 2, 2, -3, 3).scale(&c));
            let y = id.kron(&int_matrix(rng, 2, 2, -3, 3).scale(&c));
            (x, y, z)
        }
    }
}

pub const KINDS: [InstanceKind; 4] =
    [InstanceKind::Generic, InstanceKind::Diagonal, InstanceKind::ForcedFailure, InstanceKind::ScalarStructure];
