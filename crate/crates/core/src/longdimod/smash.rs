use std::sync::Arc;

use super::HomLongDimodule;
use crate::error::{Error, Result};
use crate::homstruct::{dual_hopf, opposite_algebra, tensor_algebra, HomAlgebra, HomBialgebra};
use crate::linalg::{legs, Matrix};
use crate::repmod::HomModule;

/// The Hom-algebra `B*ᵒᵖ⊗H`, basis `e^a⊗e_h` with `e^a` dual to the basis of `B`.
pub fn smash_algebra(h: &HomBialgebra, b: &HomBialgebra) -> Result<HomAlgebra> {
    let dual = dual_hopf(b)?;
    Ok(tensor_algebra(&opposite_algebra(dual.algebra()), h.algebra()))
}

fn pairing_row(n: usize) -> Matrix {
    let mut e = Matrix::zeros(1, n * n);
    for i in 0..n {
        e.set(0, i * n + i, crate::linalg::one());
    }
    e
}

/// `(p⊗h)⇀m = p(m₋₁) h·μ⁻¹(m₀)`.
pub fn to_smash_module(m: &HomLongDimodule) -> Result<HomModule> {
    let (dh, db, n) = (m.h().dim(), m.b().dim(), m.dim());
    let inner = m.action() * &Matrix::identity(dh).kron(&m.mu_pow(-1)?);
    let action = &(&pairing_row(db).kron(&inner) * &legs(&[db, dh, db, n], &[0, 2, 1, 3]))
        * &Matrix::identity(db * dh).kron(m.coaction());
    HomModule::new(db * dh, action, m.mu().clone())
}

/// `h·m = (ε⊗h)⇀m` and `ρ(m) = Σ e_a ⊗ (e^a⊗1)⇀m`.
pub fn from_smash_module(
    module: &HomModule,
    h: &Arc<HomBialgebra>,
    b: &Arc<HomBialgebra>,
) -> Result<HomLongDimodule> {
    let (dh, db, n) = (h.dim(), b.dim(), module.dim());
    if module.algebra_dim() != dh * db {
        return Err(Error::DimensionMismatch(format!(
            "module over a {}-dimensional algebra, expected {}",
            module.algebra_dim(),
            dh * db
        )));
    }
    let id_n = Matrix::identity(n);
    let action = module.action() * &b.counit().transpose().kron(&Matrix::identity(dh)).kron(&id_n);
    let mut coaction = Matrix::zeros(0, n);
    for a in 0..db {
        let block = module.action() * &Matrix::basis_column(db, a).kron(h.unit()).kron(&id_n);
        coaction = coaction.vstack(&block)?;
    }
    HomLongDimodule::new(h, b, action, coaction, module.nu().clone())
}
