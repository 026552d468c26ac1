//! Symmetry C_{N,M}∘C_{M,N} = id under a triangular, cotriangular context,
//! the restricted formulas for modules and comodules, and what happens
//! when R is not triangular.
//!
//!     cargo run --example symmetry

use std::sync::Arc;

use homlong::braidcat::{check_restricted_braiding, check_symmetry, diagnose_symmetry, module_as_dimodule, BraidingContext};
use homlong::fixtures;
use homlong::linalg::Matrix;
use homlong::repmod::HomModule;

fn main() -> homlong::Result<()> {
    let ctx = fixtures::twisted_context(1);
    let objs = fixtures::twisted_objects(&ctx);
    println!("module with comodule:\n{}", check_symmetry(&ctx, &objs[1], &objs[2])?);

    let m = module_as_dimodule(ctx.h(), ctx.b(), &HomModule::regular(ctx.h().algebra()))?;
    println!("restricted to modules:\n{}", check_restricted_braiding(&ctx, &m, &m, true)?);
    println!("restricted to comodules:\n{}", check_restricted_braiding(&ctx, &objs[2], &objs[2], false)?);

    // R = 1⊗1 + 2g⊗g is not even quasitriangular; only the unchecked constructor takes it
    let z2 = Arc::new(fixtures::kz2());
    let bad = BraidingContext::new_unchecked(&z2, Matrix::from_ints(&[&[1, 0], &[0, 2]]), &z2, fixtures::sign_form())?;
    let objs = fixtures::z2_objects(&bad);
    match check_symmetry(&bad, &objs[1], &objs[2]) {
        Ok(_) => println!("unexpectedly accepted"),
        Err(e) => println!("refused: {e}"),
    }
    println!("diagnosis:\n{}", diagnose_symmetry(&bad, &objs[1], &objs[2])?);
    Ok(())
}
