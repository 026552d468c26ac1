//! Hom-modules, Hom-comodules and Hom-Yetter-Drinfeld modules.

mod yd;

pub use yd::{check_yd, yd_prebraiding};

use crate::error::{Error, Result};
use crate::homstruct::{expect_shape, HomAlgebra, HomCoalgebra};
use crate::linalg::{Matrix, Tensor3};
use crate::report::AxiomReport;

/// A left Hom-module: action `A⊗M → M` stored as an `m x (a·m)` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomModule {
    algebra_dim: usize,
    action: Matrix,
    nu: Matrix,
}

impl HomModule {
    pub fn new(algebra_dim: usize, action: Matrix, nu: Matrix) -> Result<Self> {
        let m = nu.rows();
        expect_shape("nu", &nu, m, m)?;
        expect_shape("action", &action, m, algebra_dim * m)?;
        Ok(Self { algebra_dim, action, nu })
    }

    /// From `action[h][i][j]` = coefficient of `m_j` in `e_h ▷ m_i`.
    pub fn from_constants(action: &Tensor3, nu: Matrix) -> Result<Self> {
        let [a, m, m2] = action.dims();
        if m != m2 {
            return Err(Error::DimensionMismatch(format!("action has shape {:?}", action.dims())));
        }
        Self::new(a, action.to_product_map(), nu)
    }

    pub fn dim(&self) -> usize {
        self.nu.rows()
    }

    pub fn algebra_dim(&self) -> usize {
        self.algebra_dim
    }

    pub fn action(&self) -> &Matrix {
        &self.action
    }

    pub fn nu(&self) -> &Matrix {
        &self.nu
    }

    pub fn action_constants(&self) -> Tensor3 {
        Tensor3::from_product_map(&self.action, self.algebra_dim, self.dim()).expect("shape checked")
    }

    /// The regular module `A` over itself.
    pub fn regular(a: &HomAlgebra) -> Self {
        Self::new(a.dim(), a.mult().clone(), a.alpha().clone()).expect("shapes")
    }
}

/// A left Hom-comodule: coaction `M → C⊗M` stored as a `(c·m) x m` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomComodule {
    coalgebra_dim: usize,
    coaction: Matrix,
    mu: Matrix,
}

impl HomComodule {
    pub fn new(coalgebra_dim: usize, coaction: Matrix, mu: Matrix) -> Result<Self> {
        let m = mu.rows();
        expect_shape("mu", &mu, m, m)?;
        expect_shape("coaction", &coaction, coalgebra_dim * m, m)?;
        Ok(Self { coalgebra_dim, coaction, mu })
    }

    /// From `coaction[i][a][j]` = coefficient of `b_a⊗m_j` in `ρ(m_i)`.
    pub fn from_constants(coaction: &Tensor3, mu: Matrix) -> Result<Self> {
        let [m, c, m2] = coaction.dims();
        if m != m2 {
            return Err(Error::DimensionMismatch(format!("coaction has shape {:?}", coaction.dims())));
        }
        Self::new(c, coaction.to_coproduct_map(), mu)
    }

    pub fn dim(&self) -> usize {
        self.mu.rows()
    }

    pub fn coalgebra_dim(&self) -> usize {
        self.coalgebra_dim
    }

    pub fn coaction(&self) -> &Matrix {
        &self.coaction
    }

    pub fn mu(&self) -> &Matrix {
        &self.mu
    }

    pub fn coaction_constants(&self) -> Tensor3 {
        Tensor3::from_coproduct_map(&self.coaction, self.coalgebra_dim, self.dim()).expect("shape checked")
    }

    pub fn regular(c: &HomCoalgebra) -> Self {
        Self::new(c.dim(), c.comult().clone(), c.beta().clone()).expect("shapes")
    }

    /// `ρ(m) = 1⊗μ(m)`.
    pub fn trivial(unit: &Matrix, mu: Matrix) -> Self {
        Self::new(unit.rows(), unit.kron(&mu), mu).expect("shapes")
    }
}

/// Module and comodule structures on one carrier with a shared structure map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YetterDrinfeldModule {
    module: HomModule,
    comodule: HomComodule,
}

impl YetterDrinfeldModule {
    pub fn new(module: HomModule, comodule: HomComodule) -> Result<Self> {
        if module.nu() != comodule.mu() {
            return Err(Error::DimensionMismatch("module and comodule structure maps differ".into()));
        }
        if module.algebra_dim() != comodule.coalgebra_dim() {
            return Err(Error::DimensionMismatch("module and comodule live over different spaces".into()));
        }
        Ok(Self { module, comodule })
    }

    pub fn module(&self) -> &HomModule {
        &self.module
    }

    pub fn comodule(&self) -> &HomComodule {
        &self.comodule
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn action(&self) -> &Matrix {
        self.module.action()
    }

    pub fn coaction(&self) -> &Matrix {
        self.comodule.coaction()
    }

    pub fn structure_map(&self) -> &Matrix {
        self.module.nu()
    }
}

pub fn validate_hom_module(a: &HomAlgebra, m: &HomModule) -> Result<AxiomReport> {
    if m.algebra_dim() != a.dim() {
        return Err(Error::DimensionMismatch(format!(
            "module over a {}-dimensional algebra, got {}",
            m.algebra_dim(),
            a.dim()
        )));
    }
    let (d, n) = (a.dim(), m.dim());
    let (act, nu, al) = (m.action(), m.nu(), a.alpha());
    let mut r = AxiomReport::new();
    r.flag("nu-invertible", nu.is_invertible(), None);
    r.identity("HM1", &(nu * act), &(act * &al.kron(nu)), &[d, n]);
    r.identity(
        "HM2-assoc",
        &(act * &al.kron(act)),
        &(act * &a.mult().kron(nu)),
        &[d, d, n],
    );
    r.identity("HM2-unit", &(act * &a.unit().kron(&Matrix::identity(n))), nu, &[n]);
    Ok(r)
}

pub fn validate_hom_comodule(c: &HomCoalgebra, m: &HomComodule) -> Result<AxiomReport> {
    if m.coalgebra_dim() != c.dim() {
        return Err(Error::DimensionMismatch(format!(
            "comodule over a {}-dimensional coalgebra, got {}",
            m.coalgebra_dim(),
            c.dim()
        )));
    }
    let n = m.dim();
    let (rho, mu, b) = (m.coaction(), m.mu(), c.beta());
    let mut r = AxiomReport::new();
    r.flag("mu-invertible", mu.is_invertible(), None);
    r.identity("HCM1-a", &(rho * mu), &(&b.kron(mu) * rho), &[n]);
    r.identity("HCM1-b", &(&c.counit().kron(&Matrix::identity(n)) * rho), mu, &[n]);
    r.identity(
        "HCM2",
        &(&b.kron(rho) * rho),
        &(&c.comult().kron(mu) * rho),
        &[n],
    );
    Ok(r)
}
