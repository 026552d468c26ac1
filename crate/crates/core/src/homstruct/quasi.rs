use super::validate::cop;
use super::{middle_flip, HomBialgebra};
use crate::error::{Error, Result};
use crate::linalg::{flip, legs, Matrix};
use crate::report::AxiomReport;

/// `R = Σ R[i][j] e_i⊗e_j` as a verified quasitriangular structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiTriangularStructure {
    r: Matrix,
    triangular: bool,
}

impl QuasiTriangularStructure {
    /// Validates QHA1-QHA5 and records the triangularity verdict.
    pub fn new(h: &HomBialgebra, r: Matrix) -> Result<Self> {
        let report = validate_quasitriangular(h, &r)?;
        if let Some(f) = report.first_failure() {
            return Err(Error::InvalidContext(format!("R fails {}", f.id)));
        }
        Ok(Self { triangular: report.passed("triangular"), r })
    }

    pub(crate) fn from_parts(r: Matrix, triangular: bool) -> Self {
        Self { r, triangular }
    }

    /// Coefficient matrix `R[i][j]`.
    pub fn coefficients(&self) -> &Matrix {
        &self.r
    }

    /// `R` as a vector in `H⊗H`.
    pub fn element(&self) -> Matrix {
        self.r.flatten()
    }

    pub fn triangular(&self) -> bool {
        self.triangular
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoQuasiTriangularStructure {
    form: Matrix,
    cotriangular: bool,
}

impl CoQuasiTriangularStructure {
    pub fn new(b: &HomBialgebra, form: Matrix) -> Result<Self> {
        let report = validate_coquasitriangular(b, &form)?;
        if let Some(f) = report.first_failure() {
            return Err(Error::InvalidContext(format!("form fails {}", f.id)));
        }
        Ok(Self { cotriangular: report.passed("cotriangular"), form })
    }

    pub(crate) fn from_parts(form: Matrix, cotriangular: bool) -> Self {
        Self { form, cotriangular }
    }

    /// `form[i][j] = ⟨e_i|e_j⟩`.
    pub fn coefficients(&self) -> &Matrix {
        &self.form
    }

    /// The form as a functional `B⊗B → k`.
    pub fn functional(&self) -> Matrix {
        self.form.flatten().transpose()
    }

    pub fn cotriangular(&self) -> bool {
        self.cotriangular
    }
}

/// The convolution inverse of `x ∈ H⊗H`, if one exists.
pub fn convolution_inverse(h: &HomBialgebra, x: &Matrix) -> Option<Matrix> {
    let n = h.dim() * h.dim();
    let mm = h.tensor_square_mult();
    let id = Matrix::identity(n);
    let left = &mm * &x.kron(&id);
    let right = &mm * &id.kron(x);
    let one = h.unit().kron(h.unit());
    let sys = left.vstack(&right).expect("same width");
    sys.solve(&one.vstack(&one).expect("same width")).expect("shapes")
}

pub fn validate_quasitriangular(h: &HomBialgebra, r: &Matrix) -> Result<AxiomReport> {
    let d = h.dim();
    if r.shape() != (d, d) {
        return Err(Error::DimensionMismatch(format!("R must be {d}x{d}")));
    }
    let rv = r.flatten();
    let id = Matrix::identity(d);
    let (m, dl, e, b, u) = (h.mult(), h.comult(), h.counit(), h.twist(), h.unit());
    let rr = rv.kron(&rv);
    let dims4 = [d, d, d, d];
    let mut rep = AxiomReport::new();
    rep.identity(
        "QHA1",
        &(&e.kron(&id) * &rv).vstack(&(&id.kron(e) * &rv))?,
        &u.vstack(u)?,
        &[1],
    );
    rep.identity(
        "QHA2",
        &(&dl.kron(b) * &rv),
        &(&(&b.kron(b).kron(m) * &legs(&dims4, &[0, 2, 1, 3])) * &rr),
        &[1],
    );
    rep.identity(
        "QHA3",
        &(&b.kron(dl) * &rv),
        &(&(&m.kron(b).kron(b) * &legs(&dims4, &[0, 2, 3, 1])) * &rr),
        &[1],
    );
    let mm = h.tensor_square_mult();
    rep.identity(
        "QHA4",
        &(&mm * &cop(h).kron(&rv)),
        &(&mm * &rv.kron(dl)),
        &[d],
    );
    rep.identity("QHA5", &(&b.kron(b) * &rv), &rv, &[1]);
    let flipped = &flip(d, d) * &rv;
    let inverse = convolution_inverse(h, &rv);
    rep.info("convolution-invertible", inverse.is_some(), None);
    let one = u.kron(u);
    let triangular = inverse.is_some()
        && &mm * &rv.kron(&flipped) == one
        && &mm * &flipped.kron(&rv) == one;
    rep.info("triangular", triangular, None);
    Ok(rep)
}

pub fn validate_coquasitriangular(h: &HomBialgebra, form: &Matrix) -> Result<AxiomReport> {
    let d = h.dim();
    if form.shape() != (d, d) {
        return Err(Error::DimensionMismatch(format!("form must be {d}x{d}")));
    }
    let f = form.flatten().transpose();
    let ff = f.kron(&f);
    let id = Matrix::identity(d);
    let (m, dl, e, b, u) = (h.mult(), h.comult(), h.counit(), h.twist(), h.unit());
    let dims4 = [d, d, d, d];
    let mut rep = AxiomReport::new();
    // ⟨hg|β(l)⟩ = ⟨β(h)|l₂⟩⟨β(g)|l₁⟩
    let rhs1 = &(&ff * &b.kron(&id).kron(b).kron(&id))
        * &(&legs(&dims4, &[0, 3, 1, 2]) * &id.kron(&id).kron(dl));
    rep.identity("CHA1", &(&f * &m.kron(b)), &rhs1, &[d, d, d]);
    // ⟨β(h)|gl⟩ = ⟨h₁|β(g)⟩⟨h₂|β(l)⟩
    let rhs2 = &(&ff * &id.kron(b).kron(&id).kron(b))
        * &(&legs(&dims4, &[0, 2, 1, 3]) * &dl.kron(&id).kron(&id));
    rep.identity("CHA2", &(&f * &b.kron(m)), &rhs2, &[d, d, d]);
    // ⟨h₁|g₁⟩g₂h₂ = h₁g₁⟨h₂|g₂⟩
    let dd = dl.kron(dl);
    let lhs3 = &(&f.kron(m) * &legs(&dims4, &[0, 2, 3, 1])) * &dd;
    let rhs3 = &(&m.kron(&f) * &middle_flip(d, d, d, d)) * &dd;
    rep.identity("CHA3", &lhs3, &rhs3, &[d, d]);
    rep.identity(
        "CHA4",
        &(&f * &u.kron(&id)).vstack(&(&f * &id.kron(u)))?,
        &e.vstack(e)?,
        &[d],
    );
    rep.identity("CHA5", &(&f * &b.kron(b)), &f, &[d, d]);
    let conv = &(&ff * &legs(&dims4, &[0, 2, 3, 1])) * &dd;
    let cotri = crate::report::compare_maps("cotriangular", &conv, &e.kron(e), &[d, d]);
    rep.push(crate::report::AxiomCheck { informational: true, ..cotri });
    Ok(rep)
}
