use super::{HomAlgebra, HomBialgebra, HomCoalgebra};
use crate::linalg::{flip, Matrix};
use crate::report::AxiomReport;

fn stack(a: &Matrix, b: &Matrix) -> Matrix {
    a.vstack(b).expect("stacked sides share a domain")
}

pub fn validate_hom_algebra(a: &HomAlgebra) -> AxiomReport {
    let d = a.dim();
    let id = Matrix::identity(d);
    let (m, u, al) = (a.mult(), a.unit(), a.alpha());
    let mut r = AxiomReport::new();
    r.flag("alpha-invertible", al.is_invertible(), None);
    r.identity("HA1-mult", &(al * m), &(m * &al.kron(al)), &[d, d]);
    r.identity("HA1-unit", &(al * u), u, &[1]);
    r.identity(
        "HA2-assoc",
        &(m * &al.kron(m)),
        &(m * &m.kron(al)),
        &[d, d, d],
    );
    r.identity(
        "HA2-unit",
        &stack(&(m * &id.kron(u)), &(m * &u.kron(&id))),
        &stack(al, al),
        &[d],
    );
    r
}

pub fn validate_hom_coalgebra(c: &HomCoalgebra) -> AxiomReport {
    let d = c.dim();
    let id = Matrix::identity(d);
    let (dl, e, b) = (c.comult(), c.counit(), c.beta());
    let mut r = AxiomReport::new();
    r.flag("beta-invertible", b.is_invertible(), None);
    hc_identities(&mut r, dl, e, b, &id);
    r
}

fn hc_identities(r: &mut AxiomReport, dl: &Matrix, e: &Matrix, b: &Matrix, id: &Matrix) {
    let d = id.rows();
    r.identity(
        "HC1",
        &stack(&(dl * b), &(e * b)),
        &stack(&(&b.kron(b) * dl), e),
        &[d],
    );
    r.identity(
        "HC2-coassoc",
        &(&b.kron(dl) * dl),
        &(&dl.kron(b) * dl),
        &[d],
    );
    r.identity(
        "HC2-counit",
        &stack(&(&e.kron(id) * dl), &(&id.kron(e) * dl)),
        &stack(b, b),
        &[d],
    );
}

/// The full tower: Hom-algebra axioms, Hom-coalgebra axioms (the shared
/// structure map is checked once) and the four compatibility identities.
pub fn validate_hom_bialgebra(h: &HomBialgebra) -> AxiomReport {
    let d = h.dim();
    let id = Matrix::identity(d);
    let mut r = validate_hom_algebra(h.algebra());
    hc_identities(&mut r, h.comult(), h.counit(), h.twist(), &id);
    let (m, u, dl, e) = (h.mult(), h.unit(), h.comult(), h.counit());
    r.identity(
        "Delta-mult",
        &(dl * m),
        &(&h.tensor_square_mult() * &dl.kron(dl)),
        &[d, d],
    );
    r.identity("Delta-unit", &(dl * u), &u.kron(u), &[1]);
    r.identity("eps-mult", &(e * m), &e.kron(e), &[d, d]);
    r.identity("eps-unit", &(e * u), &Matrix::identity(1), &[1]);
    r
}

/// The bialgebra tower plus the antipode identities. Invertibility of `S`
/// is reported as information only.
pub fn validate_hom_hopf(h: &HomBialgebra) -> AxiomReport {
    let mut r = validate_hom_bialgebra(h);
    let d = h.dim();
    let Ok(s) = h.antipode() else {
        r.flag("antipode", false, Some("no antipode given".into()));
        return r;
    };
    let id = Matrix::identity(d);
    let (m, dl) = (h.mult(), h.comult());
    let ue = h.unit() * h.counit();
    r.identity(
        "antipode",
        &stack(&(m * &(&s.kron(&id) * dl)), &(m * &(&id.kron(s) * dl))),
        &stack(&ue, &ue),
        &[d],
    );
    r.identity("S-twist", &(s * h.twist()), &(h.twist() * s), &[d]);
    r.info("S-invertible", s.is_invertible(), None);
    r
}

/// `Δ^cop = τ∘Δ`.
pub(crate) fn cop(h: &HomBialgebra) -> Matrix {
    &flip(h.dim(), h.dim()) * h.comult()
}
