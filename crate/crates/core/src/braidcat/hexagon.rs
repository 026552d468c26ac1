use super::{long_braiding, BraidingContext};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::longdimod::{associator, tensor_dimodule, HomLongDimodule};
use crate::report::AxiomReport;

fn c(ctx: &BraidingContext, m: &HomLongDimodule, n: &HomLongDimodule) -> Result<Matrix> {
    Ok(long_braiding(ctx, m, n)?.matrix)
}

fn id(m: &HomLongDimodule) -> Matrix {
    Matrix::identity(m.dim())
}

/// H1: `a_{V,W,U}∘C_{U,V⊗W}∘a_{U,V,W} = (id_V⊗C_{U,W})∘a_{V,U,W}∘(C_{U,V}⊗id_W)`
/// on `(U⊗V)⊗W`, and
/// H2: `a⁻¹_{W,U,V}∘C_{U⊗V,W}∘a⁻¹_{U,V,W} = (C_{U,W}⊗id_V)∘a⁻¹_{U,W,V}∘(id_U⊗C_{V,W})`
/// on `U⊗(V⊗W)`.
pub fn check_hexagons(
    ctx: &BraidingContext,
    u: &HomLongDimodule,
    v: &HomLongDimodule,
    w: &HomLongDimodule,
) -> Result<AxiomReport> {
    for x in [u, v, w] {
        ctx.require(x)?;
    }
    let dims = [u.dim(), v.dim(), w.dim()];
    let vw = tensor_dimodule(v, w)?;
    let uv = tensor_dimodule(u, v)?;
    let mut r = AxiomReport::new();

    let lhs1 = &(&associator(v, w, u)? * &c(ctx, u, &vw)?) * &associator(u, v, w)?;
    let rhs1 = &(&id(v).kron(&c(ctx, u, w)?) * &associator(v, u, w)?) * &c(ctx, u, v)?.kron(&id(w));
    r.identity("H1", &lhs1, &rhs1, &dims);

    let inv = |a: &HomLongDimodule, b: &HomLongDimodule, c: &HomLongDimodule| associator(a, b, c)?.invert();
    let lhs2 = &(&inv(w, u, v)? * &c(ctx, &uv, w)?) * &inv(u, v, w)?;
    let rhs2 = &(&c(ctx, u, w)?.kron(&id(v)) * &inv(u, w, v)?) * &id(u).kron(&c(ctx, v, w)?);
    r.identity("H2", &lhs2, &rhs2, &dims);
    Ok(r)
}

/// The two six-fold composites `(U⊗V)⊗W → W⊗(V⊗U)`:
/// `(id_W⊗C_{U,V})∘a_{W,U,V}∘(C_{U,W}⊗id_V)∘a⁻¹_{U,W,V}∘(id_U⊗C_{V,W})∘a_{U,V,W}` and
/// `a_{W,V,U}∘(C_{V,W}⊗id_U)∘a⁻¹_{V,W,U}∘(id_V⊗C_{U,W})∘a_{V,U,W}∘(C_{U,V}⊗id_W)`.
pub fn check_qybe(
    ctx: &BraidingContext,
    u: &HomLongDimodule,
    v: &HomLongDimodule,
    w: &HomLongDimodule,
) -> Result<AxiomReport> {
    for x in [u, v, w] {
        ctx.require(x)?;
    }
    let a = associator;
    let lhs = [
        id(w).kron(&c(ctx, u, v)?),
        a(w, u, v)?,
        c(ctx, u, w)?.kron(&id(v)),
        a(u, w, v)?.invert()?,
        id(u).kron(&c(ctx, v, w)?),
        a(u, v, w)?,
    ];
    let rhs = [
        a(w, v, u)?,
        c(ctx, v, w)?.kron(&id(u)),
        a(v, w, u)?.invert()?,
        id(v).kron(&c(ctx, u, w)?),
        a(v, u, w)?,
        c(ctx, u, v)?.kron(&id(w)),
    ];
    let compose = |ms: &[Matrix]| ms.iter().skip(1).fold(ms[0].clone(), |acc, m| &acc * m);
    let mut r = AxiomReport::new();
    r.identity("QYBE", &compose(&lhs), &compose(&rhs), &[u.dim(), v.dim(), w.dim()]);
    Ok(r)
}
