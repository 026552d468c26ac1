//! The braiding on Hom-Long dimodules induced by a quasitriangular `(H, R)`
//! and a coquasitriangular `(B, ⟨|⟩)`.

mod embed;
mod hexagon;
mod symmetric;

use std::sync::Arc;

pub use embed::{check_braiding_compatibility, check_hb_yd, hb_yd_structure};
pub use hexagon::{check_hexagons, check_qybe};
pub use symmetric::{
    check_restricted_braiding, check_symmetry, comodule_as_dimodule, diagnose_symmetry, module_as_dimodule,
};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homstruct::{
    validate_coquasitriangular, validate_quasitriangular, CoQuasiTriangularStructure, HomBialgebra,
    QuasiTriangularStructure,
};
use crate::linalg::{kron_all, permute_legs, Matrix};
use crate::longdimod::{check_morphism, morphism_space, tensor_dimodule, HomLongDimodule};
use crate::report::{compare_maps, AxiomReport};

#[derive(Clone, Debug)]
pub struct BraidingContext {
    h: Arc<HomBialgebra>,
    r: QuasiTriangularStructure,
    b: Arc<HomBialgebra>,
    form: CoQuasiTriangularStructure,
}

impl BraidingContext {
    /// Validates `R` against QHA1-5 and the form against CHA1-5.
    pub fn new(h: &Arc<HomBialgebra>, r: Matrix, b: &Arc<HomBialgebra>, form: Matrix) -> Result<Self> {
        check_square("R", &r, h.dim())?;
        check_square("form", &form, b.dim())?;
        Ok(Self {
            r: QuasiTriangularStructure::new(h, r)?,
            form: CoQuasiTriangularStructure::new(b, form)?,
            h: Arc::clone(h),
            b: Arc::clone(b),
        })
    }

    /// Skips QHA/CHA validation. Only useful for showing what goes wrong
    /// with a broken `R` or form; the triangular flags are still computed.
    pub fn new_unchecked(h: &Arc<HomBialgebra>, r: Matrix, b: &Arc<HomBialgebra>, form: Matrix) -> Result<Self> {
        check_square("R", &r, h.dim())?;
        check_square("form", &form, b.dim())?;
        let tri = validate_quasitriangular(h, &r)?.get("triangular").is_some_and(|c| c.passed);
        let cotri = validate_coquasitriangular(b, &form)?.get("cotriangular").is_some_and(|c| c.passed);
        Ok(Self {
            r: QuasiTriangularStructure::from_parts(r, tri),
            form: CoQuasiTriangularStructure::from_parts(form, cotri),
            h: Arc::clone(h),
            b: Arc::clone(b),
        })
    }

    pub fn h(&self) -> &Arc<HomBialgebra> {
        &self.h
    }

    pub fn b(&self) -> &Arc<HomBialgebra> {
        &self.b
    }

    pub fn r(&self) -> &QuasiTriangularStructure {
        &self.r
    }

    pub fn form(&self) -> &CoQuasiTriangularStructure {
        &self.form
    }

    pub fn triangular(&self) -> bool {
        self.r.triangular()
    }

    pub fn cotriangular(&self) -> bool {
        self.form.cotriangular()
    }

    /// A dimodule is usable only if it lives over exactly this `(H, B)`.
    pub fn require(&self, m: &HomLongDimodule) -> Result<()> {
        let same = |x: &Arc<HomBialgebra>, y: &Arc<HomBialgebra>| Arc::ptr_eq(x, y) || x == y;
        if same(m.h(), &self.h) && same(m.b(), &self.b) {
            Ok(())
        } else {
            Err(Error::InvalidContext("dimodule lives over a different (H, B)".into()))
        }
    }
}

fn check_square(name: &str, m: &Matrix, d: usize) -> Result<()> {
    if m.shape() != (d, d) {
        return Err(Error::InvalidContext(format!(
            "{name} must be {d}x{d}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// `C_{M,N} : M⊗N → N⊗M` as a matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidOperator {
    /// `(dim M, dim N)`.
    pub source: (usize, usize),
    pub matrix: Matrix,
}

/// `m⊗n ↦ ⟨m₋₁|n₋₁⟩ R²·ν⁻²(n₀) ⊗ R¹·μ⁻²(m₀)`.
pub fn long_braiding(ctx: &BraidingContext, m: &HomLongDimodule, n: &HomLongDimodule) -> Result<BraidOperator> {
    ctx.require(m)?;
    ctx.require(n)?;
    let (dh, db, dm, dn) = (ctx.h.dim(), ctx.b.dim(), m.dim(), n.dim());
    let spread = ctx.r.element().kron(&m.coaction().kron(n.coaction()));
    // (R1,R2,m-1,m0,n-1,n0) -> (m-1,n-1,R2,n0,R1,m0)
    let moved = permute_legs(&spread, &[dh, dh, db, dm, db, dn], &[2, 4, 1, 5, 0, 3]);
    let act_n = n.action() * &Matrix::identity(dh).kron(&n.mu_pow(-2)?);
    let act_m = m.action() * &Matrix::identity(dh).kron(&m.mu_pow(-2)?);
    let tail = kron_all(&[&ctx.form.functional(), &act_n, &act_m]);
    Ok(BraidOperator { source: (dm, dn), matrix: &tail * &moved })
}

/// `n⊗m ↦ ⟨S⁻¹(m₋₁)|n₋₁⟩ S(R¹)·μ⁻²(m₀) ⊗ R²·ν⁻²(n₀)`, a map `N⊗M → M⊗N`.
pub fn long_braiding_inverse(
    ctx: &BraidingContext,
    m: &HomLongDimodule,
    n: &HomLongDimodule,
) -> Result<BraidOperator> {
    ctx.require(m)?;
    ctx.require(n)?;
    let (dh, db, dm, dn) = (ctx.h.dim(), ctx.b.dim(), m.dim(), n.dim());
    let s_h = ctx.h.antipode()?;
    let s_b_inv = ctx.b.antipode_inverse()?;
    let spread = ctx.r.element().kron(&n.coaction().kron(m.coaction()));
    // (R1,R2,n-1,n0,m-1,m0) -> (m-1,n-1,R1,m0,R2,n0)
    let moved = permute_legs(&spread, &[dh, dh, db, dn, db, dm], &[4, 2, 0, 5, 1, 3]);
    let pairing = &ctx.form.functional() * &s_b_inv.kron(&Matrix::identity(db));
    let act_m = m.action() * &s_h.kron(&m.mu_pow(-2)?);
    let act_n = n.action() * &Matrix::identity(dh).kron(&n.mu_pow(-2)?);
    let tail = kron_all(&[&pairing, &act_m, &act_n]);
    Ok(BraidOperator { source: (dn, dm), matrix: &tail * &moved })
}

/// `C_{M,N}` is a dimodule map `M⊗N → N⊗M`, and the displayed inverse is a
/// two-sided inverse.
pub fn check_braiding_linearity(
    ctx: &BraidingContext,
    m: &HomLongDimodule,
    n: &HomLongDimodule,
) -> Result<AxiomReport> {
    let c = long_braiding(ctx, m, n)?;
    let mn = tensor_dimodule(m, n)?;
    let nm = tensor_dimodule(n, m)?;
    let mut r = AxiomReport::new();
    r.absorb("C", check_morphism(&c.matrix, &mn, &nm)?);
    if ctx.h.has_antipode() && ctx.b.has_antipode() {
        let ci = long_braiding_inverse(ctx, m, n)?;
        let (dm, dn) = (m.dim(), n.dim());
        r.identity("inverse-left", &(&ci.matrix * &c.matrix), &Matrix::identity(dm * dn), &[dm, dn]);
        r.identity("inverse-right", &(&c.matrix * &ci.matrix), &Matrix::identity(dm * dn), &[dn, dm]);
    }
    Ok(r)
}

fn require_morphism(name: &str, f: &Matrix, src: &HomLongDimodule, dst: &HomLongDimodule) -> Result<()> {
    let rep = check_morphism(f, src, dst)?;
    match rep.first_failure() {
        Some(c) => Err(Error::NotAMorphism(format!("{name}: {}", c.id))),
        None => Ok(()),
    }
}

/// `(g⊗f)∘C_{M,N} = C_{M′,N′}∘(f⊗g)` for dimodule maps `f: M → M′`, `g: N → N′`.
pub fn check_naturality(
    ctx: &BraidingContext,
    f: (&Matrix, &HomLongDimodule, &HomLongDimodule),
    g: (&Matrix, &HomLongDimodule, &HomLongDimodule),
) -> Result<AxiomReport> {
    let (f, m, m2) = f;
    let (g, n, n2) = g;
    require_morphism("f", f, m, m2)?;
    require_morphism("g", g, n, n2)?;
    let c = long_braiding(ctx, m, n)?;
    let c2 = long_braiding(ctx, m2, n2)?;
    let mut r = AxiomReport::new();
    r.identity("naturality", &(&g.kron(f) * &c.matrix), &(&c2.matrix * &f.kron(g)), &[m.dim(), n.dim()]);
    Ok(r)
}

/// Naturality against a basis of every morphism space `M → M′`, `N → N′`.
/// Both sides are bilinear in `(f, g)`, so this covers all morphisms.
pub fn check_naturality_exhaustive(
    ctx: &BraidingContext,
    m: &HomLongDimodule,
    m2: &HomLongDimodule,
    n: &HomLongDimodule,
    n2: &HomLongDimodule,
) -> Result<AxiomReport> {
    let fs = morphism_space(m, m2)?;
    let gs = morphism_space(n, n2)?;
    let c = long_braiding(ctx, m, n)?;
    let c2 = long_braiding(ctx, m2, n2)?;
    let mut r = AxiomReport::new();
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in gs.iter().enumerate() {
            let chk = compare_maps(
                &format!("naturality({i},{j})"),
                &(&g.kron(f) * &c.matrix),
                &(&c2.matrix * &f.kron(g)),
                &[m.dim(), n.dim()],
            );
            r.push(chk);
        }
    }
    if r.is_empty() {
        r.info("naturality", true, Some("no nonzero morphisms".into()));
    }
    Ok(r)
}
