//! Hom-Long dimodules over a pair of Hom-bialgebras `(H, B)`: a left
//! `H`-module and left `B`-comodule structure on one space, sharing one
//! structure map, with `ρ(h·m) = β(m₋₁) ⊗ α(h)·m₀`.

mod dual;
mod monoidal;
mod morphism;
mod smash;

use std::sync::Arc;

pub use dual::{check_snake, left_dual, right_dual, DualSide, DualityData};
pub use monoidal::{
    associator, check_coherence, check_pentagon, check_triangle, left_unitor, monoidal_constraints,
    right_unitor, MonoidalConstraints,
};
pub use morphism::{check_morphism, morphism_space};
pub use smash::{from_smash_module, smash_algebra, to_smash_module};

use crate::error::{Error, Result};
use crate::homstruct::{expect_shape, HomBialgebra};
use crate::linalg::{legs, Matrix, Tensor3};
use crate::repmod::{validate_hom_comodule, validate_hom_module, HomComodule, HomModule};
use crate::report::AxiomReport;

#[derive(Clone, Debug)]
pub struct HomLongDimodule {
    h: Arc<HomBialgebra>,
    b: Arc<HomBialgebra>,
    action: Matrix,
    coaction: Matrix,
    mu: Matrix,
}

impl PartialEq for HomLongDimodule {
    fn eq(&self, other: &Self) -> bool {
        self.same_base(other)
            && self.action == other.action
            && self.coaction == other.coaction
            && self.mu == other.mu
    }
}

impl Eq for HomLongDimodule {}

impl HomLongDimodule {
    /// `action` is `n x (dim H · n)`, `coaction` is `(dim B · n) x n`.
    pub fn new(
        h: &Arc<HomBialgebra>,
        b: &Arc<HomBialgebra>,
        action: Matrix,
        coaction: Matrix,
        mu: Matrix,
    ) -> Result<Self> {
        let n = mu.rows();
        expect_shape("mu", &mu, n, n)?;
        expect_shape("action", &action, n, h.dim() * n)?;
        expect_shape("coaction", &coaction, b.dim() * n, n)?;
        Ok(Self { h: Arc::clone(h), b: Arc::clone(b), action, coaction, mu })
    }

    /// From `action[h][i][j]` (coefficient of `m_j` in `e_h·m_i`) and
    /// `coaction[i][a][j]` (coefficient of `b_a⊗m_j` in `ρ(m_i)`).
    pub fn from_constants(
        h: &Arc<HomBialgebra>,
        b: &Arc<HomBialgebra>,
        action: &Tensor3,
        coaction: &Tensor3,
        mu: Matrix,
    ) -> Result<Self> {
        let module = HomModule::from_constants(action, mu.clone())?;
        let comodule = HomComodule::from_constants(coaction, mu.clone())?;
        Self::new(h, b, module.action().clone(), comodule.coaction().clone(), mu)
    }

    /// An `H`-module viewed as a dimodule with `ρ(m) = 1_B⊗μ(m)`.
    pub fn from_module(h: &Arc<HomBialgebra>, b: &Arc<HomBialgebra>, m: &HomModule) -> Result<Self> {
        let rho = b.unit().kron(m.nu());
        Self::new(h, b, m.action().clone(), rho, m.nu().clone())
    }

    /// A `B`-comodule viewed as a dimodule with `h·m = ε(h)μ(m)`.
    pub fn from_comodule(h: &Arc<HomBialgebra>, b: &Arc<HomBialgebra>, m: &HomComodule) -> Result<Self> {
        let action = h.counit().kron(m.mu());
        Self::new(h, b, action, m.coaction().clone(), m.mu().clone())
    }

    /// The unit object `(k, id)`.
    pub fn unit_object(h: &Arc<HomBialgebra>, b: &Arc<HomBialgebra>) -> Self {
        Self::new(h, b, h.counit().clone(), b.unit().clone(), Matrix::identity(1)).expect("shapes")
    }

    pub fn dim(&self) -> usize {
        self.mu.rows()
    }

    pub fn h(&self) -> &Arc<HomBialgebra> {
        &self.h
    }

    pub fn b(&self) -> &Arc<HomBialgebra> {
        &self.b
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn mu_pow(&self, k: i32) -> Result<Matrix> {
        self.mu.pow(k)
    }

    pub fn module(&self) -> HomModule {
        HomModule::new(self.h.dim(), self.action.clone(), self.mu.clone()).expect("shapes")
    }

    pub fn comodule(&self) -> HomComodule {
        HomComodule::new(self.b.dim(), self.coaction.clone(), self.mu.clone()).expect("shapes")
    }

    pub fn action_constants(&self) -> Tensor3 {
        self.module().action_constants()
    }

    pub fn coaction_constants(&self) -> Tensor3 {
        self.comodule().coaction_constants()
    }

    /// Whether both dimodules live over the same `(H, B)`.
    pub fn same_base(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.h, &other.h) || self.h == other.h)
            && (Arc::ptr_eq(&self.b, &other.b) || self.b == other.b)
    }

    pub(crate) fn require_same_base(&self, other: &Self) -> Result<()> {
        if self.same_base(other) {
            Ok(())
        } else {
            Err(Error::MismatchedBase)
        }
    }

    /// Same base and structure maps, new action/coaction.
    pub(crate) fn with_structure(&self, action: Matrix, coaction: Matrix, mu: Matrix) -> Result<Self> {
        Self::new(&self.h, &self.b, action, coaction, mu)
    }
}

/// Module axioms, comodule axioms and the compatibility
/// `ρ(h·m) = β(m₋₁) ⊗ α(h)·m₀`.
pub fn validate_long_dimodule(d: &HomLongDimodule) -> AxiomReport {
    let mut r = AxiomReport::new();
    r.absorb("module", validate_hom_module(d.h().algebra(), &d.module()).expect("dims checked"));
    r.absorb("comodule", validate_hom_comodule(d.b().coalgebra(), &d.comodule()).expect("dims checked"));
    let (dh, db, n) = (d.h().dim(), d.b().dim(), d.dim());
    let rhs = &(&d.b().twist().kron(&(d.action() * &d.h().twist().kron(&Matrix::identity(n))))
        * &legs(&[dh, db, n], &[1, 0, 2]))
        * &Matrix::identity(dh).kron(d.coaction());
    r.identity("dimodule-compat", &(d.coaction() * d.action()), &rhs, &[dh, n]);
    r
}

/// `H⊗B` with `h·(g⊗x) = hg⊗β(x)`, `ρ(g⊗x) = x₁⊗(α(g)⊗x₂)` and structure map `α⊗β`.
pub fn canonical_dimodule(h: &Arc<HomBialgebra>, b: &Arc<HomBialgebra>) -> HomLongDimodule {
    let (dh, db) = (h.dim(), b.dim());
    let action = h.mult().kron(b.twist());
    let coaction = &(&Matrix::identity(db).kron(h.twist()).kron(&Matrix::identity(db))
        * &legs(&[dh, db, db], &[1, 0, 2]))
        * &Matrix::identity(dh).kron(b.comult());
    HomLongDimodule::new(h, b, action, coaction, h.twist().kron(b.twist())).expect("shapes")
}

/// `h·(m⊗n) = h₁·m ⊗ h₂·n`, `ρ(m⊗n) = β⁻²(m₋₁n₋₁) ⊗ m₀ ⊗ n₀`.
pub fn tensor_dimodule(m: &HomLongDimodule, n: &HomLongDimodule) -> Result<HomLongDimodule> {
    m.require_same_base(n)?;
    let (dh, db, dm, dn) = (m.h().dim(), m.b().dim(), m.dim(), n.dim());
    let id_m = Matrix::identity(dm);
    let id_n = Matrix::identity(dn);
    let action = &(&m.action().kron(n.action()) * &legs(&[dh, dh, dm, dn], &[0, 2, 1, 3]))
        * &m.h().comult().kron(&id_m).kron(&id_n);
    let bm2 = m.b().twist_pow(-2)?;
    let coaction = &(&(&bm2 * m.b().mult()).kron(&id_m).kron(&id_n)
        * &legs(&[db, dm, db, dn], &[0, 2, 1, 3]))
        * &m.coaction().kron(n.coaction());
    m.with_structure(action, coaction, m.mu().kron(n.mu()))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::fixtures;

    pub fn arc(h: HomBialgebra) -> Arc<HomBialgebra> {
        Arc::new(h)
    }

    pub fn sign(h: &Arc<HomBialgebra>, b: &Arc<HomBialgebra>) -> HomLongDimodule {
        fixtures::sign_dimodule(h, b)
    }

    #[test]
    fn basic_fixtures_validate() {
        let z2 = arc(fixtures::kz2());
        let r = validate_long_dimodule(&sign(&z2, &z2));
        assert!(r.all_passed(), "{r}");
        assert!(validate_long_dimodule(&HomLongDimodule::unit_object(&z2, &z2)).all_passed());
        let can = canonical_dimodule(&z2, &z2);
        assert_eq!(can.dim(), 4);
        assert!(validate_long_dimodule(&can).all_passed());
        let k = arc(fixtures::trivial());
        let one = canonical_dimodule(&k, &k);
        assert_eq!(one, HomLongDimodule::unit_object(&k, &k));
    }

    #[test]
    fn twisted_canonical_dimodules_validate() {
        let z4 = arc(fixtures::kz4_twisted());
        let z2 = arc(fixtures::kz2());
        let sw = arc(fixtures::sweedler_twisted());
        for (h, b) in [(&z4, &z2), (&z2, &z4), (&sw, &z2), (&z2, &sw)] {
            let c = canonical_dimodule(h, b);
            assert!(validate_long_dimodule(&c).all_passed());
            assert_eq!(c.mu(), &h.twist().kron(b.twist()));
        }
    }

    #[test]
    fn modules_and_comodules_as_dimodules() {
        let z2 = arc(fixtures::kz2());
        let sw = arc(fixtures::sweedler_twisted());
        let m = HomLongDimodule::from_module(&sw, &z2, &HomModule::regular(sw.algebra())).unwrap();
        assert!(validate_long_dimodule(&m).all_passed());
        let c = HomLongDimodule::from_comodule(&z2, &sw, &HomComodule::regular(sw.coalgebra())).unwrap();
        assert!(validate_long_dimodule(&c).all_passed());
    }

    #[test]
    fn tensor_products_validate() {
        let z2 = arc(fixtures::kz2());
        let z4 = arc(fixtures::kz4_twisted());
        let can = canonical_dimodule(&z2, &z2);
        let t = tensor_dimodule(&can, &can).unwrap();
        assert_eq!(t.dim(), 16);
        assert!(validate_long_dimodule(&t).all_passed());
        let c4 = canonical_dimodule(&z4, &z2);
        let s = HomLongDimodule::from_module(&z4, &z2, &HomModule::new(4, Matrix::from_ints(&[&[1, -1, 1, -1]]), Matrix::identity(1)).unwrap()).unwrap();
        assert!(validate_long_dimodule(&s).all_passed());
        let t = tensor_dimodule(&c4, &s).unwrap();
        assert!(validate_long_dimodule(&t).all_passed());
        let t = tensor_dimodule(&s, &c4).unwrap();
        assert!(validate_long_dimodule(&t).all_passed());
    }

    #[test]
    fn defects_propagate_through_tensor_products() {
        let z2 = arc(fixtures::kz2());
        // ρ(v) = (1+g)⊗v breaks the comodule axioms
        let bad = HomLongDimodule::new(&z2, &z2, Matrix::from_ints(&[&[1, -1]]), Matrix::from_ints(&[&[1], &[1]]), Matrix::identity(1)).unwrap();
        assert!(!validate_long_dimodule(&bad).all_passed());
        let t = tensor_dimodule(&sign(&z2, &z2), &bad).unwrap();
        assert!(!validate_long_dimodule(&t).all_passed());
    }

    #[test]
    fn unit_object_is_a_tensor_unit_up_to_structure_map() {
        let z2 = arc(fixtures::kz2());
        let can = canonical_dimodule(&z2, &z2);
        let t = tensor_dimodule(&can, &HomLongDimodule::unit_object(&z2, &z2)).unwrap();
        assert_eq!(t.mu(), can.mu());
        assert_eq!(t.action(), can.action());
        assert_eq!(t.coaction(), &(&z2.twist_pow(-2).unwrap().kron(&Matrix::identity(4)) * can.coaction()));
    }

    #[test]
    fn mismatched_bases_are_rejected() {
        let z2 = arc(fixtures::kz2());
        let z4 = arc(fixtures::kz4_twisted());
        let a = canonical_dimodule(&z2, &z2);
        let b = canonical_dimodule(&z4, &z2);
        assert!(matches!(tensor_dimodule(&a, &b), Err(Error::MismatchedBase)));
        let c = canonical_dimodule(&arc(fixtures::kz2()), &z2);
        assert!(tensor_dimodule(&a, &c).is_ok());
    }
}
