use super::{associator, check_morphism, left_unitor, right_unitor, tensor_dimodule, HomLongDimodule};
use crate::error::{Error, Result};
use crate::linalg::{one, Matrix};
use crate::report::{compare_maps, AxiomReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualSide {
    Left,
    Right,
}

/// A dual object with its evaluation and coevaluation. For the left dual
/// `ev : M*⊗M → k` and `coev : k → M⊗M*`; for the right dual
/// `ev : M⊗*M → k` and `coev : k → *M⊗M`. In both cases the matrices are
/// the coordinate pairing of the dual bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualityData {
    pub side: DualSide,
    pub dual: HomLongDimodule,
    pub ev: Matrix,
    pub coev: Matrix,
}

fn pairing(n: usize) -> Matrix {
    let mut v = Matrix::zeros(n * n, 1);
    for i in 0..n {
        v.set(i * n + i, 0, one());
    }
    v
}

/// `(h·f)(m) = f(σ_H(h)·μ⁻²(m))` and `f₋₁⊗f₀(m) = σ_B(m₋₁)⊗f(μ⁻²(m₀))`.
fn dual_object(m: &HomLongDimodule, sigma_h: &Matrix, sigma_b: &Matrix) -> Result<HomLongDimodule> {
    let (dh, db, n) = (m.h().dim(), m.b().dim(), m.dim());
    let mu_m2 = m.mu_pow(-2)?;
    let mut action = Matrix::zeros(n, dh * n);
    for h in 0..dh {
        let lh = m.action() * &sigma_h.col_matrix(h).kron(&mu_m2);
        for i in 0..n {
            for j in 0..n {
                action.set(j, h * n + i, lh.get(i, j).clone());
            }
        }
    }
    let k = &sigma_b.kron(&mu_m2) * m.coaction();
    let mut coaction = Matrix::zeros(db * n, n);
    for a in 0..db {
        for kk in 0..n {
            for i in 0..n {
                coaction.set(a * n + i, kk, k.get(a * n + kk, i).clone());
            }
        }
    }
    m.with_structure(action, coaction, m.mu_pow(-1)?.transpose())
}

/// `M*` with `σ_H = S_H∘α⁻¹` and `σ_B = S_B⁻¹∘β⁻¹`.
pub fn left_dual(m: &HomLongDimodule) -> Result<DualityData> {
    let sigma_h = m.h().antipode()? * &m.h().twist_pow(-1)?;
    let sigma_b = &m.b().antipode_inverse()? * &m.b().twist_pow(-1)?;
    let dual = dual_object(m, &sigma_h, &sigma_b)?;
    let p = pairing(m.dim());
    Ok(DualityData { side: DualSide::Left, dual, ev: p.transpose(), coev: p })
}

/// `*M` with `σ_H = S_H⁻¹∘α⁻¹` and `σ_B = S_B∘β⁻¹`.
pub fn right_dual(m: &HomLongDimodule) -> Result<DualityData> {
    let sigma_h = &m.h().antipode_inverse()? * &m.h().twist_pow(-1)?;
    let sigma_b = m.b().antipode()? * &m.b().twist_pow(-1)?;
    let dual = dual_object(m, &sigma_h, &sigma_b)?;
    let p = pairing(m.dim());
    Ok(DualityData { side: DualSide::Right, dual, ev: p.transpose(), coev: p })
}

/// Both zig-zag composites, built from the associator and unit constraints,
/// and the morphism properties of `ev` and `coev`.
pub fn check_snake(m: &HomLongDimodule, d: &DualityData) -> Result<AxiomReport> {
    let dual = &d.dual;
    if dual.dim() != m.dim() || d.ev.shape() != (1, m.dim() * m.dim()) || d.coev.shape() != (m.dim() * m.dim(), 1) {
        return Err(Error::DimensionMismatch("duality data does not match the dimodule".into()));
    }
    let n = m.dim();
    let id = Matrix::identity(n);
    let inv = |x: Matrix| x.invert();
    let mut r = AxiomReport::new();
    let unit = HomLongDimodule::unit_object(m.h(), m.b());
    let (snake_m, snake_d, ev_src, coev_dst) = match d.side {
        DualSide::Left => {
            let s1 = &(&(&(&right_unitor(m) * &id.kron(&d.ev)) * &associator(m, dual, m)?)
                * &d.coev.kron(&id))
                * &inv(left_unitor(m))?;
            let s2 = &(&(&(&left_unitor(dual) * &d.ev.kron(&id)) * &inv(associator(dual, m, dual)?)?)
                * &id.kron(&d.coev))
                * &inv(right_unitor(dual))?;
            (s1, s2, tensor_dimodule(dual, m)?, tensor_dimodule(m, dual)?)
        }
        DualSide::Right => {
            let s1 = &(&(&(&left_unitor(m) * &d.ev.kron(&id)) * &inv(associator(m, dual, m)?)?)
                * &id.kron(&d.coev))
                * &inv(right_unitor(m))?;
            let s2 = &(&(&(&right_unitor(dual) * &id.kron(&d.ev)) * &associator(dual, m, dual)?)
                * &d.coev.kron(&id))
                * &inv(left_unitor(dual))?;
            (s1, s2, tensor_dimodule(m, dual)?, tensor_dimodule(dual, m)?)
        }
    };
    r.push(compare_maps("snake-object", &snake_m, &id, &[n]));
    r.push(compare_maps("snake-dual", &snake_d, &id, &[n]));
    r.absorb("ev", check_morphism(&d.ev, &ev_src, &unit)?);
    r.absorb("coev", check_morphism(&d.coev, &unit, &coev_dst)?);
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::linalg::int;
    use crate::longdimod::tests::{arc, sign};
    use crate::longdimod::{canonical_dimodule, validate_long_dimodule};

    #[test]
    fn dual_of_unit_is_unit() {
        let z2 = arc(fixtures::kz2());
        let u = HomLongDimodule::unit_object(&z2, &z2);
        for d in [left_dual(&u).unwrap(), right_dual(&u).unwrap()] {
            assert_eq!(d.dual, u);
            assert_eq!(d.ev, Matrix::identity(1));
            assert!(check_snake(&u, &d).unwrap().all_passed());
        }
    }

    #[test]
    fn dual_of_sign_dimodule() {
        let z2 = arc(fixtures::kz2());
        let s = sign(&z2, &z2);
        let l = left_dual(&s).unwrap();
        assert_eq!(l.dual.action(), &Matrix::from_ints(&[&[1, -1]]));
        assert_eq!(l.dual.coaction(), &Matrix::from_ints(&[&[0], &[1]]));
        let r = right_dual(&s).unwrap();
        assert_eq!(r.dual.action(), &Matrix::from_ints(&[&[1, -1]]));
        for d in [&l, &r] {
            assert!(check_snake(&s, d).unwrap().all_passed());
        }
    }

    #[test]
    fn duals_validate_and_snakes_hold_on_twisted_fixtures() {
        let z2 = arc(fixtures::kz2());
        let z4 = arc(fixtures::kz4_twisted());
        let sw = arc(fixtures::sweedler_twisted());
        for m in [canonical_dimodule(&z4, &z2), canonical_dimodule(&z2, &z4), canonical_dimodule(&sw, &z2)] {
            for d in [left_dual(&m).unwrap(), right_dual(&m).unwrap()] {
                let v = validate_long_dimodule(&d.dual);
                assert!(v.all_passed(), "{v}");
                let s = check_snake(&m, &d).unwrap();
                assert!(s.all_passed(), "{s}");
            }
            assert_eq!(right_dual(&left_dual(&m).unwrap().dual).unwrap().dual, m);
            assert_eq!(left_dual(&right_dual(&m).unwrap().dual).unwrap().dual, m);
        }
    }

    #[test]
    fn corrupted_evaluation_breaks_both_snakes() {
        let z2 = arc(fixtures::kz2());
        let s = sign(&z2, &z2);
        let mut d = left_dual(&s).unwrap();
        d.ev = d.ev.scale(&int(2));
        let r = check_snake(&s, &d).unwrap();
        assert!(!r.passed("snake-object"));
        assert!(!r.passed("snake-dual"));
    }

    #[test]
    fn singular_antipode_is_reported() {
        let z2 = fixtures::kz2();
        let bad = arc(z2.clone().with_antipode(Matrix::from_ints(&[&[1, 1], &[0, 0]])).unwrap());
        let s = sign(&arc(z2), &bad);
        assert!(matches!(left_dual(&s), Err(Error::AntipodeNotInvertible)));
    }
}
