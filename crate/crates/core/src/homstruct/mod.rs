//! The Hom-algebra tower: Hom-algebras, Hom-coalgebras, Hom-bialgebras and
//! Hom-Hopf algebras, with (co)quasitriangular structures.
//!
//! Structures are stored as linear maps on the lexicographic tensor basis:
//! the product is a `d x d²` matrix, the unit a `d x 1` column, the coproduct
//! `d² x d` and the counit `1 x d`.

mod construct;
mod quasi;
mod validate;

pub use construct::{dual_hopf, opposite_algebra, tensor_algebra, tensor_coalgebra, tensor_hopf, yau_twist};
pub use quasi::{
    convolution_inverse, validate_coquasitriangular, validate_quasitriangular, CoQuasiTriangularStructure,
    QuasiTriangularStructure,
};
pub use validate::{validate_hom_algebra, validate_hom_bialgebra, validate_hom_coalgebra, validate_hom_hopf};

use crate::error::{Error, Result};
use crate::linalg::{legs, LegPerm, Matrix, Scalar, Tensor3};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    mult: Matrix,
    unit: Matrix,
    alpha: Matrix,
}

impl HomAlgebra {
    pub fn new(mult: Matrix, unit: Matrix, alpha: Matrix) -> Result<Self> {
        let d = alpha.rows();
        expect_shape("alpha", &alpha, d, d)?;
        expect_shape("mult", &mult, d, d * d)?;
        expect_shape("unit", &unit, d, 1)?;
        Ok(Self { mult, unit, alpha })
    }

    /// From `mult[i][j][k]` = coefficient of `e_k` in `e_i e_j`.
    pub fn from_constants(mult: &Tensor3, unit: Vec<Scalar>, alpha: Matrix) -> Result<Self> {
        let [d0, d1, _] = mult.dims();
        if d0 != d1 {
            return Err(Error::DimensionMismatch(format!("mult has shape {:?}", mult.dims())));
        }
        Self::new(mult.to_product_map(), Matrix::column(unit), alpha)
    }

    pub fn dim(&self) -> usize {
        self.alpha.rows()
    }

    pub fn mult(&self) -> &Matrix {
        &self.mult
    }

    pub fn unit(&self) -> &Matrix {
        &self.unit
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn mult_constants(&self) -> Tensor3 {
        Tensor3::from_product_map(&self.mult, self.dim(), self.dim()).expect("shape checked")
    }

    /// `α^k`; negative powers need α invertible.
    pub fn alpha_pow(&self, k: i32) -> Result<Matrix> {
        self.alpha.pow(k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    comult: Matrix,
    counit: Matrix,
    beta: Matrix,
}

impl HomCoalgebra {
    pub fn new(comult: Matrix, counit: Matrix, beta: Matrix) -> Result<Self> {
        let d = beta.rows();
        expect_shape("beta", &beta, d, d)?;
        expect_shape("comult", &comult, d * d, d)?;
        expect_shape("counit", &counit, 1, d)?;
        Ok(Self { comult, counit, beta })
    }

    /// From `comult[i][j][k]` = coefficient of `e_j ⊗ e_k` in `Δ(e_i)`.
    pub fn from_constants(comult: &Tensor3, counit: Vec<Scalar>, beta: Matrix) -> Result<Self> {
        let [_, d1, d2] = comult.dims();
        if d1 != d2 {
            return Err(Error::DimensionMismatch(format!("comult has shape {:?}", comult.dims())));
        }
        Self::new(comult.to_coproduct_map(), Matrix::row(counit), beta)
    }

    pub fn dim(&self) -> usize {
        self.beta.rows()
    }

    pub fn comult(&self) -> &Matrix {
        &self.comult
    }

    pub fn counit(&self) -> &Matrix {
        &self.counit
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    pub fn comult_constants(&self) -> Tensor3 {
        Tensor3::from_coproduct_map(&self.comult, self.dim(), self.dim()).expect("shape checked")
    }
}

/// A Hom-bialgebra, optionally carrying an antipode. The algebra and
/// coalgebra parts share one structure map `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    algebra: HomAlgebra,
    coalgebra: HomCoalgebra,
    antipode: Option<Matrix>,
}

/// A Hom-bialgebra whose antipode is present.
pub type HomHopfAlgebra = HomBialgebra;

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.dim() != coalgebra.dim() {
            return Err(Error::DimensionMismatch(format!(
                "algebra has dimension {}, coalgebra {}",
                algebra.dim(),
                coalgebra.dim()
            )));
        }
        if algebra.alpha() != coalgebra.beta() {
            return Err(Error::DimensionMismatch(
                "algebra and coalgebra structure maps differ".into(),
            ));
        }
        Ok(Self { algebra, coalgebra, antipode: None })
    }

    pub fn with_antipode(mut self, antipode: Matrix) -> Result<Self> {
        expect_shape("antipode", &antipode, self.dim(), self.dim())?;
        self.antipode = Some(antipode);
        Ok(self)
    }

    pub fn without_antipode(mut self) -> Self {
        self.antipode = None;
        self
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn coalgebra(&self) -> &HomCoalgebra {
        &self.coalgebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn mult(&self) -> &Matrix {
        self.algebra.mult()
    }

    pub fn unit(&self) -> &Matrix {
        self.algebra.unit()
    }

    pub fn comult(&self) -> &Matrix {
        self.coalgebra.comult()
    }

    pub fn counit(&self) -> &Matrix {
        self.coalgebra.counit()
    }

    /// The common structure map `γ`.
    pub fn twist(&self) -> &Matrix {
        self.algebra.alpha()
    }

    pub fn twist_pow(&self, k: i32) -> Result<Matrix> {
        self.twist().pow(k)
    }

    pub fn has_antipode(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn antipode(&self) -> Result<&Matrix> {
        self.antipode.as_ref().ok_or(Error::MissingAntipode)
    }

    pub fn antipode_inverse(&self) -> Result<Matrix> {
        self.antipode()?.invert().map_err(|_| Error::AntipodeNotInvertible)
    }

    /// The product of the algebra `H⊗H`: `(m⊗m)∘(id⊗τ⊗id)`.
    pub fn tensor_square_mult(&self) -> Matrix {
        let d = self.dim();
        &self.mult().kron(self.mult()) * &middle_flip(d, d, d, d)
    }
}

/// `id⊗τ⊗id : A⊗B⊗C⊗D → A⊗C⊗B⊗D`.
pub(crate) fn middle_flip(a: usize, b: usize, c: usize, d: usize) -> LegPerm {
    legs(&[a, b, c, d], &[0, 2, 1, 3])
}

pub(crate) fn expect_shape(name: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::DimensionMismatch(format!(
            "{name} is {}x{}, expected {rows}x{cols}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}
