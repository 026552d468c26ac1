use super::YetterDrinfeldModule;
use crate::error::{Error, Result};
use crate::homstruct::HomBialgebra;
use crate::linalg::{legs, Matrix};
use crate::report::AxiomReport;

fn check_base(h: &HomBialgebra, m: &YetterDrinfeldModule) -> Result<()> {
    if m.module().algebra_dim() != h.dim() {
        return Err(Error::DimensionMismatch(format!(
            "Yetter-Drinfeld module over a {}-dimensional algebra, got {}",
            m.module().algebra_dim(),
            h.dim()
        )));
    }
    Ok(())
}

/// `h₁β(m₋₁) ⊗ β³(h₂)▷m₀ = (β²(h₁)▷m)₋₁h₂ ⊗ (β²(h₁)▷m)₀`, and for Hopf
/// algebras also the reformulation
/// `ρ(β⁴(h)▷m) = β⁻²(h₁₁β(m₋₁))S(h₂) ⊗ β³(h₁₂)▷m₀` with an agreement flag.
pub fn check_yd(h: &HomBialgebra, m: &YetterDrinfeldModule) -> Result<AxiomReport> {
    check_base(h, m)?;
    let (d, n) = (h.dim(), m.dim());
    let id_h = Matrix::identity(d);
    let id_m = Matrix::identity(n);
    let (mult, dl, b) = (h.mult(), h.comult(), h.twist());
    let (act, rho) = (m.action(), m.coaction());
    let b2 = b * b;
    let b3 = &b2 * b;

    let lhs = &(&(mult * &id_h.kron(b)).kron(&(act * &b3.kron(&id_m)))
        * &legs(&[d, d, d, n], &[0, 2, 1, 3]))
        * &dl.kron(rho);
    let acted = rho * &(act * &b2.kron(&id_m));
    let rhs = &(&(&mult.kron(&id_m) * &legs(&[d, n, d], &[0, 2, 1])) * &acted.kron(&id_h))
        * &(&legs(&[d, d, n], &[0, 2, 1]) * &dl.kron(&id_m));
    let mut r = AxiomReport::new();
    let hyd = r.identity("HYD", &lhs, &rhs, &[d, n]);

    if let Ok(s) = h.antipode() {
        let bm2 = h.twist_pow(-2)?;
        let b4 = &b2 * &b2;
        let lhs2 = &(rho * act) * &b4.kron(&id_m);
        let left = &(mult * &bm2.kron(s)) * &(mult * &id_h.kron(b)).kron(&id_h);
        let ddl = &dl.kron(&id_h) * dl;
        let rhs2 = &(&left.kron(&(act * &b3.kron(&id_m))) * &legs(&[d, d, d, d, n], &[0, 3, 2, 1, 4]))
            * &ddl.kron(rho);
        let hyd2 = r.identity("HYD-prime", &lhs2, &rhs2, &[d, n]);
        r.info("HYD-agreement", hyd == hyd2, None);
    }
    Ok(r)
}

/// `C(m⊗n) = β²(m₋₁)▷ν⁻¹(n) ⊗ μ⁻¹(m₀)` as a map `M⊗N → N⊗M`.
pub fn yd_prebraiding(h: &HomBialgebra, m: &YetterDrinfeldModule, n: &YetterDrinfeldModule) -> Result<Matrix> {
    check_base(h, m)?;
    check_base(h, n)?;
    let (d, dm, dn) = (h.dim(), m.dim(), n.dim());
    let b2 = h.twist_pow(2)?;
    let nu_inv = n.structure_map().invert()?;
    let mu_inv = m.structure_map().invert()?;
    let front = (n.action() * &b2.kron(&Matrix::identity(dn))).kron(&mu_inv);
    Ok(&(&front * &legs(&[d, dm, dn], &[0, 2, 1])) * &m.coaction().kron(&nu_inv))
}
