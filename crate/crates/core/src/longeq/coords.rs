use num_traits::Zero;

use super::{long_equation_check, OperatorOnTensorSquare};
use crate::error::{Error, Result};
use crate::linalg::{flat_index, flip, legs, Matrix, Scalar};
use crate::report::{compare_maps, AxiomCheck, AxiomReport};

/// `m_k⊗m_l ↦ x_{kl}^{ij} m_i⊗μ⁻¹(m_j)` where `x[(i,j)][(k,l)] = x_{kl}^{ij}`
/// and `z` is the matrix of `μ`.
pub fn literal_operator(x: &Matrix, z: &Matrix) -> Result<OperatorOnTensorSquare> {
    let n = z.rows();
    let zi = z.invert()?;
    OperatorOnTensorSquare::new(&Matrix::identity(n).kron(&zi) * x, z.clone())
}

/// Verdicts of the coordinate criterion and of the operator identity it is
/// meant to encode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    /// `z_u^i x_{vw}^{jk} y_{ij}^{pq} = z_i^p x_{jw}^{qk} y_{uv}^{ij}` for all free indices.
    pub index_identity: AxiomCheck,
    /// `S¹²∘R²³ = R²³∘S¹²` on the literal operators.
    pub operator_identity: AxiomCheck,
    /// Both operators commute with `μ⊗μ⁻¹`.
    pub equivariant: bool,
}

impl CriterionReport {
    pub fn agree(&self) -> bool {
        self.index_identity.passed == self.operator_identity.passed
    }

    pub fn to_report(&self) -> AxiomReport {
        let mut r = AxiomReport::new();
        for c in [&self.index_identity, &self.operator_identity] {
            let mut c = c.clone();
            c.informational = true;
            r.push(c);
        }
        r.info("mu-equivariant", self.equivariant, None);
        r.flag("agreement", self.agree(), None);
        r
    }
}

pub fn coordinate_criterion(x: &Matrix, y: &Matrix, z: &Matrix) -> Result<CriterionReport> {
    let n = z.rows();
    for (name, m) in [("x", x), ("y", y)] {
        if m.shape() != (n * n, n * n) {
            return Err(Error::DimensionMismatch(format!("{name} must be {0}x{0}", n * n)));
        }
    }
    if !z.is_square() {
        return Err(Error::DimensionMismatch("z must be square".into()));
    }
    let r = literal_operator(x, z)?;
    let s = literal_operator(y, z)?;

    // coefficient tables indexed like the displayed formula
    let d2 = [n, n];
    let xc = |k: usize, l: usize, i: usize, j: usize| x.get(flat_index(&d2, &[i, j]), flat_index(&d2, &[k, l]));
    let yc = |k: usize, l: usize, i: usize, j: usize| y.get(flat_index(&d2, &[i, j]), flat_index(&d2, &[k, l]));
    let zc = |l: usize, i: usize| z.get(i, l);
    let d3 = [n, n, n];
    let mut lhs = Matrix::zeros(n * n * n, n * n * n);
    let mut rhs = Matrix::zeros(n * n * n, n * n * n);
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let col = flat_index(&d3, &[u, v, w]);
                for p in 0..n {
                    for q in 0..n {
                        for k in 0..n {
                            let row = flat_index(&d3, &[p, q, k]);
                            let mut a = Scalar::zero();
                            let mut b = Scalar::zero();
                            for i in 0..n {
                                for j in 0..n {
                                    a += zc(u, i) * xc(v, w, j, k) * yc(i, j, p, q);
                                    b += zc(i, p) * xc(j, w, q, k) * yc(u, v, i, j);
                                }
                            }
                            lhs.set(row, col, a);
                            rhs.set(row, col, b);
                        }
                    }
                }
            }
        }
    }
    let index_identity = compare_maps("index-identity", &lhs, &rhs, &d3);
    let (s12, r23) = (s.r12(), r.r23());
    let operator_identity = compare_maps("operator-identity", &(&s12 * &r23), &(&r23 * &s12), &d3);
    let twist = z.kron(&z.invert()?);
    let eq = |o: &OperatorOnTensorSquare| o.matrix() * &twist == &twist * o.matrix();
    Ok(CriterionReport { index_identity, operator_identity, equivariant: eq(&r) && eq(&s) })
}

/// `U = τ∘R`, `T = R∘τ`, `W = τ∘R∘τ` and their equations
/// `U¹³U²³ = τ₁₂₃U¹³U¹²`, `T¹²T¹³ = T²³T¹³τ₁₂₃`, `τ₁₂₃W²³W¹³ = W¹²W¹³τ₁₂₃`,
/// where `F¹³ = (id⊗τ)(F⊗μ)(id⊗τ)` and `τ₁₂₃(x⊗y⊗z) = z⊗x⊗y`.
/// The `W` equation is not equivalent to the others for non-symmetric
/// diagonal `R`; the report also carries the plain equation for `W`, which is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TauTransforms {
    pub u: OperatorOnTensorSquare,
    pub t: OperatorOnTensorSquare,
    pub w: OperatorOnTensorSquare,
    /// Verdicts for `R`, `U`, `T`, `W` (informational) and whether they coincide.
    pub report: AxiomReport,
}

pub fn tau_transforms(r: &OperatorOnTensorSquare) -> Result<TauTransforms> {
    let n = r.carrier_dim();
    let tau = flip(n, n);
    let id = Matrix::identity(n);
    let mu = r.structure_map();
    let u = r.with_matrix(&tau * r.matrix())?;
    let t = r.with_matrix(r.matrix() * &tau)?;
    let w = r.with_matrix(&(&tau * r.matrix()) * &tau)?;
    let f12 = |f: &OperatorOnTensorSquare| f.matrix().kron(mu);
    let f23 = |f: &OperatorOnTensorSquare| mu.kron(f.matrix());
    let side = id.kron(&tau);
    let f13 = |f: &OperatorOnTensorSquare| &(&side * &f12(f)) * &side;
    let cyc = legs(&[n, n, n], &[2, 0, 1]);
    let d3 = [n, n, n];

    let mut checks: Vec<AxiomCheck> = vec![long_equation_check(r)];
    checks.push(compare_maps("U-equation", &(&f13(&u) * &f23(&u)), &(&cyc * &(&f13(&u) * &f12(&u))), &d3));
    checks.push(compare_maps("T-equation", &(&f12(&t) * &f13(&t)), &(&(&f23(&t) * &f13(&t)) * &cyc), &d3));
    checks.push(compare_maps(
        "W-equation",
        &(&cyc * &(&f23(&w) * &f13(&w))),
        &(&(&f12(&w) * &f13(&w)) * &cyc),
        &d3,
    ));
    let same = checks.iter().all(|c| c.passed == checks[0].passed);
    let mut report = AxiomReport::new();
    for mut c in checks {
        c.informational = true;
        report.push(c);
    }
    // reversing the legs turns R¹²R²³ = R²³R¹² into W²³W¹² = W¹²W²³
    let mut plain = long_equation_check(&w);
    plain.id = "W-long-equation".into();
    plain.informational = true;
    report.push(plain);
    report.flag("equivalent", same, None);
    Ok(TauTransforms { u, t, w, report })
}

#[cfg(test)]
mod tests {
    use super::super::tests::flip_op;
    use super::super::{check_long_equation, diagonal_solution};
    use super::*;
    use crate::linalg::int;

    /// `x_{kl}^{ij} = b_{kl} a_l δ_k^i δ_l^j`, so that the literal operator is `diag(b)`.
    fn diagonal_x(a: &[i64], b: &[&[i64]]) -> Matrix {
        let n = a.len();
        let e: Vec<Scalar> = (0..n * n).map(|c| int(b[c / n][c % n] * a[c % n])).collect();
        Matrix::diagonal(&e)
    }

    #[test]
    fn one_dimensional() {
        let c = coordinate_criterion(&Matrix::scalar(int(3)), &Matrix::scalar(int(-2)), &Matrix::scalar(int(5))).unwrap();
        assert!(c.index_identity.passed && c.operator_identity.passed && c.agree());
    }

    #[test]
    fn diagonal_family_through_coordinates() {
        let x = diagonal_x(&[1, 2], &[&[1, 3], &[5, 7]]);
        let z = Matrix::diagonal(&[int(1), int(2)]);
        let lit = literal_operator(&x, &z).unwrap();
        let d = diagonal_solution(&[int(1), int(2)], &Matrix::from_ints(&[&[1, 3], &[5, 7]])).unwrap();
        assert_eq!(lit, d.operator);
        let c = coordinate_criterion(&x, &x, &z).unwrap();
        assert!(c.index_identity.passed && c.operator_identity.passed);
        assert!(c.equivariant);
        assert!(c.to_report().all_passed());
    }

    #[test]
    fn flip_coordinates_fail_together() {
        let z = Matrix::diagonal(&[int(1), int(2)]);
        let x = &Matrix::identity(2).kron(&z) * &flip(2, 2);
        assert_eq!(literal_operator(&x, &z).unwrap(), flip_op());
        let c = coordinate_criterion(&x, &x, &z).unwrap();
        assert!(!c.index_identity.passed && !c.operator_identity.passed);
        assert!(c.agree());
    }

    #[test]
    fn tau_equivalence() {
        let f = tau_transforms(&flip_op()).unwrap();
        assert!(f.report.all_passed(), "{}", f.report);
        assert!(!f.report.passed("long-equation"));
        let d = diagonal_solution(&[int(1), int(2)], &Matrix::from_ints(&[&[1, 3], &[5, 7]])).unwrap();
        let t = tau_transforms(&d.operator).unwrap();
        assert!(t.report.passed("U-equation") && t.report.passed("T-equation"));
        assert!(t.report.passed("W-long-equation"));
        let w = t.report.get("W-equation").unwrap();
        assert!(!w.passed);
        assert_eq!(w.witness.as_ref().unwrap().inputs, vec![0, 0, 1]);
        assert!(!t.report.passed("equivalent"));
        // symmetric b keeps all four in line
        let d = diagonal_solution(&[int(1), int(2)], &Matrix::from_ints(&[&[1, 3], &[3, 7]])).unwrap();
        assert!(tau_transforms(&d.operator).unwrap().report.all_passed());
        let one = OperatorOnTensorSquare::new(Matrix::scalar(int(2)), Matrix::scalar(int(3))).unwrap();
        assert!(tau_transforms(&one).unwrap().report.checks.iter().all(|c| c.passed));
        assert!(check_long_equation(&t.w).checks.len() == 1);
    }
}
