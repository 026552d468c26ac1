use super::HomLongDimodule;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::report::AxiomReport;

fn check_dims(f: &Matrix, m: &HomLongDimodule, n: &HomLongDimodule) -> Result<()> {
    m.require_same_base(n)?;
    if f.shape() != (n.dim(), m.dim()) {
        return Err(Error::DimensionMismatch(format!(
            "morphism must be {}x{}, got {}x{}",
            n.dim(),
            m.dim(),
            f.rows(),
            f.cols()
        )));
    }
    Ok(())
}

/// H-linearity, B-colinearity and compatibility with the structure maps.
pub fn check_morphism(f: &Matrix, m: &HomLongDimodule, n: &HomLongDimodule) -> Result<AxiomReport> {
    check_dims(f, m, n)?;
    let (dh, db) = (m.h().dim(), m.b().dim());
    let mut r = AxiomReport::new();
    r.identity(
        "H-linear",
        &(f * m.action()),
        &(n.action() * &Matrix::identity(dh).kron(f)),
        &[dh, m.dim()],
    );
    r.identity(
        "B-colinear",
        &(&Matrix::identity(db).kron(f) * m.coaction()),
        &(n.coaction() * f),
        &[m.dim()],
    );
    r.identity("structure-map", &(f * m.mu()), &(n.mu() * f), &[m.dim()]);
    Ok(r)
}

fn residual(f: &Matrix, m: &HomLongDimodule, n: &HomLongDimodule) -> Matrix {
    let (dh, db) = (m.h().dim(), m.b().dim());
    let lin = &(f * m.action()) - &(n.action() * &Matrix::identity(dh).kron(f));
    let colin = &(&Matrix::identity(db).kron(f) * m.coaction()) - &(n.coaction() * f);
    let st = &(f * m.mu()) - &(n.mu() * f);
    lin.flatten()
        .vstack(&colin.flatten())
        .and_then(|x| x.vstack(&st.flatten()))
        .expect("column vectors")
}

/// A basis of the space of dimodule morphisms `M → N`.
pub fn morphism_space(m: &HomLongDimodule, n: &HomLongDimodule) -> Result<Vec<Matrix>> {
    m.require_same_base(n)?;
    let (rows, cols) = (n.dim(), m.dim());
    let mut columns: Option<Matrix> = None;
    for i in 0..rows {
        for j in 0..cols {
            let mut e = Matrix::zeros(rows, cols);
            e.set(i, j, crate::linalg::one());
            let c = residual(&e, m, n);
            columns = Some(match columns {
                None => c,
                Some(acc) => acc.hstack(&c)?,
            });
        }
    }
    let Some(system) = columns else {
        return Ok(Vec::new());
    };
    system
        .nullspace()
        .into_iter()
        .map(|v| v.reshape(rows, cols))
        .collect()
}
