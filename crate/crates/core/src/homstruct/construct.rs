use super::{middle_flip, HomAlgebra, HomBialgebra, HomCoalgebra};
use crate::error::{Error, Result};
use crate::linalg::{flip, Matrix};

/// Yau twist of a classical bialgebra or Hopf algebra along a bialgebra
/// automorphism `φ`: product `φ∘m`, coproduct `Δ∘φ`, structure map `φ`.
pub fn yau_twist(h: &HomBialgebra, phi: &Matrix) -> Result<HomBialgebra> {
    let d = h.dim();
    if !h.twist().is_identity() {
        return Err(Error::Precondition("yau_twist expects an identity structure map".into()));
    }
    if phi.shape() != (d, d) {
        return Err(Error::DimensionMismatch(format!("phi must be {d}x{d}")));
    }
    let not_auto = |what: &str| Err(Error::NotAutomorphism(what.into()));
    if !phi.is_invertible() {
        return not_auto("invertibility");
    }
    if phi * h.mult() != h.mult() * &phi.kron(phi) {
        return not_auto("phi∘mult = mult∘(phi⊗phi)");
    }
    if &(phi * h.unit()) != h.unit() {
        return not_auto("phi(1) = 1");
    }
    if &phi.kron(phi) * h.comult() != h.comult() * phi {
        return not_auto("(phi⊗phi)∘Δ = Δ∘phi");
    }
    if &(h.counit() * phi) != h.counit() {
        return not_auto("ε∘phi = ε");
    }
    if let Ok(s) = h.antipode() {
        if s * phi != phi * s {
            return not_auto("S∘phi = phi∘S");
        }
    }
    let algebra = HomAlgebra::new(phi * h.mult(), h.unit().clone(), phi.clone())?;
    let coalgebra = HomCoalgebra::new(h.comult() * phi, h.counit().clone(), phi.clone())?;
    let out = HomBialgebra::new(algebra, coalgebra)?;
    match h.antipode() {
        Ok(s) => out.with_antipode(s.clone()),
        Err(_) => Ok(out),
    }
}

/// The dual Hom-Hopf algebra in the dual basis: product
/// `(f∗g)(y) = f(β⁻²(y₁))g(β⁻²(y₂))`, coproduct `Δ(f)(x⊗y) = f(β⁻²(xy))`,
/// unit `ε`, counit `f ↦ f(1)`, antipode `S*` and structure map `f ↦ f∘β⁻¹`.
pub fn dual_hopf(b: &HomBialgebra) -> Result<HomBialgebra> {
    let s = b.antipode()?;
    let bm1 = b.twist_pow(-1)?;
    let bm2 = &bm1 * &bm1;
    let mult = (&bm2.kron(&bm2) * b.comult()).transpose();
    let comult = (&bm2 * b.mult()).transpose();
    let alpha = bm1.transpose();
    let algebra = HomAlgebra::new(mult, b.counit().transpose(), alpha.clone())?;
    let coalgebra = HomCoalgebra::new(comult, b.unit().transpose(), alpha)?;
    HomBialgebra::new(algebra, coalgebra)?.with_antipode(s.transpose())
}

/// `(a⊗x)(a'⊗x') = aa'⊗xx'` with structure map `α₁⊗α₂`.
pub fn tensor_algebra(a1: &HomAlgebra, a2: &HomAlgebra) -> HomAlgebra {
    let (d1, d2) = (a1.dim(), a2.dim());
    let mult = &a1.mult().kron(a2.mult()) * &middle_flip(d1, d2, d1, d2);
    HomAlgebra::new(mult, a1.unit().kron(a2.unit()), a1.alpha().kron(a2.alpha()))
        .expect("tensor shapes are consistent")
}

/// `Δ(c⊗x) = (c₁⊗x₁)⊗(c₂⊗x₂)`, `ε = ε₁⊗ε₂`.
pub fn tensor_coalgebra(c1: &HomCoalgebra, c2: &HomCoalgebra) -> HomCoalgebra {
    let (d1, d2) = (c1.dim(), c2.dim());
    let comult = &middle_flip(d1, d1, d2, d2) * &c1.comult().kron(c2.comult());
    HomCoalgebra::new(comult, c1.counit().kron(c2.counit()), c1.beta().kron(c2.beta()))
        .expect("tensor shapes are consistent")
}

/// Componentwise tensor product; the antipode is `S_H⊗S_B` when both exist.
pub fn tensor_hopf(h: &HomBialgebra, b: &HomBialgebra) -> HomBialgebra {
    let out = HomBialgebra::new(
        tensor_algebra(h.algebra(), b.algebra()),
        tensor_coalgebra(h.coalgebra(), b.coalgebra()),
    )
    .expect("structure maps agree");
    match (h.antipode(), b.antipode()) {
        (Ok(s), Ok(t)) => out.with_antipode(s.kron(t)).expect("square antipode"),
        _ => out,
    }
}

pub fn opposite_algebra(a: &HomAlgebra) -> HomAlgebra {
    let d = a.dim();
    HomAlgebra::new(a.mult() * &flip(d, d), a.unit().clone(), a.alpha().clone())
        .expect("same shapes")
}
