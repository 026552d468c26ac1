use super::{long_braiding, BraidingContext};
use crate::error::Result;
use crate::homstruct::tensor_hopf;
use crate::linalg::{kron_all, permute_legs, Matrix};
use crate::longdimod::HomLongDimodule;
use crate::repmod::{check_yd, validate_hom_comodule, validate_hom_module, yd_prebraiding, HomComodule, HomModule, YetterDrinfeldModule};
use crate::report::{compare_maps, AxiomReport};

/// `M` as a Yetter-Drinfeld module over `H⊗B`:
/// `(h⊗x)⇀m = ⟨x|m₋₁⟩ α⁻³(h)·μ⁻¹(m₀)` and
/// `ρ̄(m) = R²⊗β⁻³(m₋₁) ⊗ R¹·μ⁻¹(m₀)`.
pub fn hb_yd_structure(ctx: &BraidingContext, m: &HomLongDimodule) -> Result<YetterDrinfeldModule> {
    ctx.require(m)?;
    let (dh, db, n) = (ctx.h().dim(), ctx.b().dim(), m.dim());
    let id_h = Matrix::identity(dh);
    let id_b = Matrix::identity(db);
    let id_m = Matrix::identity(n);
    let mu_inv = m.mu_pow(-1)?;
    let act_twisted = m.action() * &ctx.h().twist_pow(-3)?.kron(&mu_inv);
    let pair = kron_all(&[&id_h, &ctx.form().functional(), &id_m]);
    let action = &(&act_twisted * &pair) * &kron_all(&[&id_h, &id_b, m.coaction()]);

    let spread = ctx.r().element().kron(m.coaction());
    // (R1,R2,m-1,m0) -> (R2,m-1,R1,m0)
    let moved = permute_legs(&spread, &[dh, dh, db, n], &[1, 2, 0, 3]);
    let tail = kron_all(&[&id_h, &ctx.b().twist_pow(-3)?, &(m.action() * &id_h.kron(&mu_inv))]);
    let coaction = &tail * &moved;

    YetterDrinfeldModule::new(
        HomModule::new(dh * db, action, m.mu().clone())?,
        HomComodule::new(dh * db, coaction, m.mu().clone())?,
    )
}

/// Module, comodule and (HYD) validation of [`hb_yd_structure`] over `H⊗B`.
pub fn check_hb_yd(ctx: &BraidingContext, m: &HomLongDimodule) -> Result<AxiomReport> {
    let hb = tensor_hopf(ctx.h(), ctx.b());
    let yd = hb_yd_structure(ctx, m)?;
    let mut r = AxiomReport::new();
    r.absorb("module", validate_hom_module(hb.algebra(), yd.module())?);
    r.absorb("comodule", validate_hom_comodule(hb.coalgebra(), yd.comodule())?);
    r.absorb("yd", check_yd(&hb, &yd)?);
    Ok(r)
}

/// The Yetter-Drinfeld pre-braiding of the `H⊗B` structures equals `C_{M,N}`.
pub fn check_braiding_compatibility(
    ctx: &BraidingContext,
    m: &HomLongDimodule,
    n: &HomLongDimodule,
) -> Result<AxiomReport> {
    let hb = tensor_hopf(ctx.h(), ctx.b());
    let pre = yd_prebraiding(&hb, &hb_yd_structure(ctx, m)?, &hb_yd_structure(ctx, n)?)?;
    let c = long_braiding(ctx, m, n)?;
    let mut r = AxiomReport::new();
    r.push(compare_maps("prebraiding-equals-C", &pre, &c.matrix, &[m.dim(), n.dim()]));
    Ok(r)
}
