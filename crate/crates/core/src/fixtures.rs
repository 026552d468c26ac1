//! Small Hom-Hopf algebras and structures used by tests, examples and the
//! bundled data files.

use std::sync::Arc;

use crate::braidcat::BraidingContext;
use crate::homstruct::{yau_twist, HomAlgebra, HomBialgebra, HomCoalgebra};
use crate::linalg::{frac, int, Matrix, Scalar, Tensor3};
use crate::longdimod::{canonical_dimodule, HomLongDimodule};
use crate::repmod::{HomComodule, HomModule};

fn hopf(mult: Tensor3, unit: Vec<Scalar>, comult: Tensor3, counit: Vec<Scalar>, antipode: Matrix) -> HomBialgebra {
    let d = unit.len();
    let a = HomAlgebra::from_constants(&mult, unit, Matrix::identity(d)).expect("fixture shape");
    let c = HomCoalgebra::from_constants(&comult, counit, Matrix::identity(d)).expect("fixture shape");
    HomBialgebra::new(a, c).and_then(|h| h.with_antipode(antipode)).expect("fixture shape")
}

/// The ground field as a one-dimensional Hopf algebra.
pub fn trivial() -> HomBialgebra {
    cyclic_group(1)
}

/// Group algebra of the cyclic group of order `n`, basis `1, g, …, g^{n-1}`.
pub fn cyclic_group(n: usize) -> HomBialgebra {
    let mut mult = Tensor3::zeros([n, n, n]);
    let mut comult = Tensor3::zeros([n, n, n]);
    let mut s = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            mult.set(i, j, (i + j) % n, int(1));
        }
        comult.set(i, i, i, int(1));
        s.set((n - i) % n, i, int(1));
    }
    let mut unit = vec![int(0); n];
    unit[0] = int(1);
    hopf(mult, unit, comult, vec![int(1); n], s)
}

pub fn kz2() -> HomBialgebra {
    cyclic_group(2)
}

/// The automorphism `g^i ↦ g^{ki}` of the cyclic group algebra.
pub fn power_map(n: usize, k: usize) -> Matrix {
    let mut phi = Matrix::zeros(n, n);
    for i in 0..n {
        phi.set((i * k) % n, i, int(1));
    }
    phi
}

/// `kℤ₄` twisted along `g ↦ g³`.
pub fn kz4_twisted() -> HomBialgebra {
    yau_twist(&cyclic_group(4), &power_map(4, 3)).expect("g ↦ g³ is a Hopf automorphism")
}

/// Sweedler's four-dimensional Hopf algebra, basis `1, g, x, gx`.
pub fn sweedler() -> HomBialgebra {
    let mut m = Tensor3::zeros([4, 4, 4]);
    let table: [(usize, usize, usize, i64); 10] = [
        (1, 1, 0, 1),
        (1, 2, 3, 1),
        (1, 3, 2, 1),
        (2, 1, 3, -1),
        (3, 1, 2, -1),
        (0, 0, 0, 1),
        (0, 1, 1, 1),
        (0, 2, 2, 1),
        (0, 3, 3, 1),
        (2, 0, 2, 1),
    ];
    for (a, b, c, v) in table {
        m.set(a, b, c, int(v));
    }
    m.set(1, 0, 1, int(1));
    m.set(3, 0, 3, int(1));
    let mut dl = Tensor3::zeros([4, 4, 4]);
    dl.set(0, 0, 0, int(1));
    dl.set(1, 1, 1, int(1));
    dl.set(2, 2, 0, int(1));
    dl.set(2, 1, 2, int(1));
    dl.set(3, 3, 1, int(1));
    dl.set(3, 0, 3, int(1));
    let s = Matrix::from_ints(&[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
    hopf(m, vec![int(1), int(0), int(0), int(0)], dl, vec![int(1), int(1), int(0), int(0)], s)
}

/// Sweedler's algebra twisted along `x ↦ -x` (so `gx ↦ -gx`).
pub fn sweedler_twisted() -> HomBialgebra {
    let phi = Matrix::diagonal(&[int(1), int(1), int(-1), int(-1)]);
    yau_twist(&sweedler(), &phi).expect("x ↦ -x is a Hopf automorphism")
}

/// `R = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)` on `kℤ₂`.
pub fn r_t() -> Matrix {
    Matrix::from_rows(vec![vec![frac(1, 2), frac(1, 2)], vec![frac(1, 2), frac(-1, 2)]]).expect("2x2")
}

/// `R_λ = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g) + λ/2(x⊗x − x⊗gx + gx⊗x + gx⊗gx)` on
/// Sweedler's algebra; also quasitriangular for the `x ↦ −x` twist.
pub fn sweedler_r(lambda: &Scalar) -> Matrix {
    let mut r = Matrix::zeros(4, 4);
    for (i, j, v) in [(0, 0, 1), (0, 1, 1), (1, 0, 1), (1, 1, -1)] {
        r.set(i, j, frac(v, 2));
    }
    for (i, j, v) in [(2, 2, 1), (2, 3, -1), (3, 2, 1), (3, 3, 1)] {
        r.set(i, j, lambda * frac(v, 2));
    }
    r
}

/// The form on `kℤ₂` with `⟨g|g⟩ = −1` and all other pairings `1`.
pub fn sign_form() -> Matrix {
    Matrix::from_ints(&[&[1, 1], &[1, -1]])
}

/// `⟨h|g⟩ = ε(h)ε(g)`.
pub fn counit_form(h: &HomBialgebra) -> Matrix {
    &h.counit().transpose() * h.counit()
}

/// `R = 1⊗1`.
pub fn unit_r(h: &HomBialgebra) -> Matrix {
    h.unit() * &h.unit().transpose()
}


/// `⟨gⁱ|gʲ⟩ = (−1)^{ij}` on the cyclic group algebra of order `n`.
pub fn parity_form(n: usize) -> Matrix {
    Matrix::from_rows((0..n).map(|i| (0..n).map(|j| int(if i * j % 2 == 0 { 1 } else { -1 })).collect()).collect())
        .expect("square")
}

/// `g·v = −v`, `ρ(v) = g⊗v` over `(kℤ₂, kℤ₂)`.
pub fn sign_dimodule(h: &Arc<HomBialgebra>, b: &Arc<HomBialgebra>) -> HomLongDimodule {
    HomLongDimodule::new(h, b, Matrix::from_ints(&[&[1, -1]]), Matrix::from_ints(&[&[0], &[1]]), Matrix::identity(1))
        .expect("kZ2 shapes")
}

/// `(kℤ₂, R_t; kℤ₂, sign form)`.
pub fn z2_context() -> BraidingContext {
    let z2 = Arc::new(kz2());
    BraidingContext::new(&z2, r_t(), &z2, sign_form()).expect("valid fixture context")
}

/// Twisted Sweedler with `R_λ` against twisted `kℤ₄` with the parity form.
pub fn twisted_context(lambda: i64) -> BraidingContext {
    let sw = Arc::new(sweedler_twisted());
    let z4 = Arc::new(kz4_twisted());
    BraidingContext::new(&sw, sweedler_r(&int(lambda)), &z4, parity_form(4)).expect("valid fixture context")
}

/// Unit object, sign dimodule and canonical dimodule `H⊗B` of a `kℤ₂` context.
pub fn z2_objects(ctx: &BraidingContext) -> Vec<HomLongDimodule> {
    vec![HomLongDimodule::unit_object(ctx.h(), ctx.b()), sign_dimodule(ctx.h(), ctx.b()), canonical_dimodule(ctx.h(), ctx.b())]
}

/// Unit object, the regular `H`-module and the regular `B`-comodule.
pub fn twisted_objects(ctx: &BraidingContext) -> Vec<HomLongDimodule> {
    let (h, b) = (ctx.h(), ctx.b());
    vec![
        HomLongDimodule::unit_object(h, b),
        HomLongDimodule::from_module(h, b, &HomModule::regular(h.algebra())).expect("shapes"),
        HomLongDimodule::from_comodule(h, b, &HomComodule::regular(b.coalgebra())).expect("shapes"),
    ]
}
