use super::{check_morphism, morphism_space, tensor_dimodule, HomLongDimodule};
use crate::error::Result;
use crate::linalg::Matrix;
use crate::report::{compare_maps, AxiomCheck, AxiomReport};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidalConstraints {
    /// `a_{U,V,W} : (U⊗V)⊗W → U⊗(V⊗W)`.
    pub assoc: Matrix,
    /// `l_V : k⊗V → V`.
    pub left_unit: Matrix,
    /// `r_V : V⊗k → V`.
    pub right_unit: Matrix,
}

/// `(u⊗v)⊗w ↦ μ⁻¹(u)⊗(v⊗ω(w))`.
pub fn associator(u: &HomLongDimodule, v: &HomLongDimodule, w: &HomLongDimodule) -> Result<Matrix> {
    u.require_same_base(v)?;
    v.require_same_base(w)?;
    Ok(u.mu_pow(-1)?.kron(&Matrix::identity(v.dim())).kron(w.mu()))
}

/// `k⊗v ↦ ν(v)`.
pub fn left_unitor(v: &HomLongDimodule) -> Matrix {
    v.mu().clone()
}

/// `v⊗k ↦ ν(v)`.
pub fn right_unitor(v: &HomLongDimodule) -> Matrix {
    v.mu().clone()
}

/// The associator of `(U, V, W)` and the unit constraints of `V`.
pub fn monoidal_constraints(
    u: &HomLongDimodule,
    v: &HomLongDimodule,
    w: &HomLongDimodule,
) -> Result<MonoidalConstraints> {
    Ok(MonoidalConstraints {
        assoc: associator(u, v, w)?,
        left_unit: left_unitor(v),
        right_unit: right_unitor(v),
    })
}

/// Pentagon for an arbitrary family of associators:
/// `a_{U,V,W⊗X} ∘ a_{U⊗V,W,X} = (id⊗a_{V,W,X}) ∘ a_{U,V⊗W,X} ∘ (a_{U,V,W}⊗id)`.
pub fn check_pentagon<F>(
    u: &HomLongDimodule,
    v: &HomLongDimodule,
    w: &HomLongDimodule,
    x: &HomLongDimodule,
    assoc: F,
) -> Result<AxiomCheck>
where
    F: Fn(&HomLongDimodule, &HomLongDimodule, &HomLongDimodule) -> Result<Matrix>,
{
    let uv = tensor_dimodule(u, v)?;
    let vw = tensor_dimodule(v, w)?;
    let wx = tensor_dimodule(w, x)?;
    let lhs = &assoc(u, v, &wx)? * &assoc(&uv, w, x)?;
    let id_u = Matrix::identity(u.dim());
    let id_x = Matrix::identity(x.dim());
    let rhs = &(&id_u.kron(&assoc(v, w, x)?) * &assoc(u, &vw, x)?) * &assoc(u, v, w)?.kron(&id_x);
    Ok(compare_maps("pentagon", &lhs, &rhs, &[u.dim(), v.dim(), w.dim(), x.dim()]))
}

/// `(id_U⊗l_V) ∘ a_{U,I,V} = r_U⊗id_V`.
pub fn check_triangle(u: &HomLongDimodule, v: &HomLongDimodule) -> Result<AxiomCheck> {
    let unit = HomLongDimodule::unit_object(u.h(), u.b());
    let lhs = &Matrix::identity(u.dim()).kron(&left_unitor(v)) * &associator(u, &unit, v)?;
    let rhs = right_unitor(u).kron(&Matrix::identity(v.dim()));
    Ok(compare_maps("triangle", &lhs, &rhs, &[u.dim(), v.dim()]))
}

/// Naturality of the associator in one slot, over a basis of the
/// endomorphisms of the object in that slot.
fn assoc_naturality(slot: usize, objs: [&HomLongDimodule; 3]) -> Result<AxiomCheck> {
    let a = associator(objs[0], objs[1], objs[2])?;
    let dims = objs.map(HomLongDimodule::dim);
    let names = ["U", "V", "W"];
    let mut lhs = Matrix::zeros(0, a.cols());
    let mut rhs = Matrix::zeros(0, a.cols());
    for f in morphism_space(objs[slot], objs[slot])? {
        let mut parts = dims.map(Matrix::identity);
        parts[slot] = f;
        let lifted = parts[0].kron(&parts[1]).kron(&parts[2]);
        lhs = lhs.vstack(&(&a * &lifted))?;
        rhs = rhs.vstack(&(&lifted * &a))?;
    }
    let mut c = compare_maps(&format!("assoc-natural-{}", names[slot]), &lhs, &rhs, &dims);
    if lhs.rows() == 0 {
        c.note = Some("no endomorphisms".into());
    }
    Ok(c)
}

/// Associator invertibility, morphism properties and naturality, pentagons
/// against every `X` in `xs`, the triangle for `(U, V)`, and the morphism
/// properties of the unit constraints of `U`.
pub fn check_coherence(
    u: &HomLongDimodule,
    v: &HomLongDimodule,
    w: &HomLongDimodule,
    xs: &[&HomLongDimodule],
) -> Result<AxiomReport> {
    let a = associator(u, v, w)?;
    let mut r = AxiomReport::new();
    r.flag("assoc-invertible", a.is_invertible(), None);
    let left = tensor_dimodule(&tensor_dimodule(u, v)?, w)?;
    let right = tensor_dimodule(u, &tensor_dimodule(v, w)?)?;
    r.absorb("assoc", check_morphism(&a, &left, &right)?);
    for slot in 0..3 {
        r.push(assoc_naturality(slot, [u, v, w])?);
    }
    for (i, x) in xs.iter().enumerate() {
        let mut c = check_pentagon(u, v, w, x, associator)?;
        if xs.len() > 1 {
            c.id = format!("pentagon-{i}");
        }
        r.push(c);
    }
    r.push(check_triangle(u, v)?);
    let unit = HomLongDimodule::unit_object(u.h(), u.b());
    r.absorb("left-unit", check_morphism(&left_unitor(u), &tensor_dimodule(&unit, u)?, u)?);
    r.absorb("right-unit", check_morphism(&right_unitor(u), &tensor_dimodule(u, &unit)?, u)?);
    Ok(r)
}
