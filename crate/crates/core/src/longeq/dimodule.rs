use std::sync::Arc;

use super::OperatorOnTensorSquare;
use crate::error::Result;
use crate::homstruct::HomBialgebra;
use crate::linalg::{legs, Matrix};
use crate::longdimod::{validate_long_dimodule, HomLongDimodule};
use crate::repmod::{HomComodule, HomModule};
use crate::report::AxiomReport;

/// A Hom-Long dimodule whose module and comodule sides are over the same
/// `(H, α)`, so the compatibility reads `ρ(h·m) = α(m₋₁)⊗α(h)·m₀`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HAlphaLongDimodule(HomLongDimodule);

impl HAlphaLongDimodule {
    pub fn new(h: &Arc<HomBialgebra>, action: Matrix, coaction: Matrix, mu: Matrix) -> Result<Self> {
        Ok(Self(HomLongDimodule::new(h, h, action, coaction, mu)?))
    }

    pub fn h(&self) -> &Arc<HomBialgebra> {
        self.0.h()
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn action(&self) -> &Matrix {
        self.0.action()
    }

    pub fn coaction(&self) -> &Matrix {
        self.0.coaction()
    }

    pub fn mu(&self) -> &Matrix {
        self.0.mu()
    }

    pub fn as_dimodule(&self) -> &HomLongDimodule {
        &self.0
    }
}

pub fn validate_halpha_dimodule(d: &HAlphaLongDimodule) -> AxiomReport {
    validate_long_dimodule(&d.0)
}

/// On `H⊗M`: `h·(g⊗m) = α(g)⊗h·μ(m)`, `ρ(g⊗m) = g₁⊗g₂⊗μ(m)`, structure map `α⊗μ`.
pub fn module_extension(h: &Arc<HomBialgebra>, m: &HomModule) -> Result<HAlphaLongDimodule> {
    let (d, n) = (h.dim(), m.dim());
    let acted = m.action() * &Matrix::identity(d).kron(m.nu());
    // (h, g, m) -> (g, h, m)
    let action = &h.twist().kron(&acted) * &legs(&[d, d, n], &[1, 0, 2]);
    let coaction = h.comult().kron(m.nu());
    HAlphaLongDimodule::new(h, action, coaction, h.twist().kron(m.nu()))
}

/// [`module_extension`] with `h·(g⊗m) = α(g)⊗h·m`. The literal action
/// `α(g)⊗h·μ(m)` gives `1·(g⊗m) = α(g)⊗μ²(m)`, which breaks the unit axiom
/// unless `μ² = μ`; this one passes on every fixture.
pub fn module_extension_corrected(h: &Arc<HomBialgebra>, m: &HomModule) -> Result<HAlphaLongDimodule> {
    let (d, n) = (h.dim(), m.dim());
    let action = &h.twist().kron(m.action()) * &legs(&[d, d, n], &[1, 0, 2]);
    HAlphaLongDimodule::new(h, action, h.comult().kron(m.nu()), h.twist().kron(m.nu()))
}

/// On `H⊗M`: `h·(g⊗m) = hg⊗μ(m)`, `ρ(g⊗m) = m₋₁⊗α(g)⊗m₀`, structure map `α⊗μ`.
pub fn comodule_extension(h: &Arc<HomBialgebra>, m: &HomComodule) -> Result<HAlphaLongDimodule> {
    let (d, n) = (h.dim(), m.dim());
    let action = h.mult().kron(m.mu());
    // (g, m-1, m0) -> (m-1, g, m0)
    let coaction = &legs(&[d, d, n], &[1, 0, 2]) * &h.twist().kron(m.coaction());
    HAlphaLongDimodule::new(h, action, coaction, h.twist().kron(m.mu()))
}

/// `R_M(m⊗n) = n₋₁·m ⊗ n₀`, with structure map `μ`.
pub fn dimodule_solution(d: &HAlphaLongDimodule) -> Result<OperatorOnTensorSquare> {
    let (dh, n) = (d.h().dim(), d.dim());
    let id = Matrix::identity(n);
    let spread = &legs(&[n, dh, n], &[1, 0, 2]) * &id.kron(d.coaction());
    OperatorOnTensorSquare::new(&d.action().kron(&id) * &spread, d.mu().clone())
}
