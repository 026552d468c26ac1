//! The Hom-Long equation R¹²R²³ = R²³R¹²: a diagonal family, a failing
//! flip, the coordinate criterion, τ-transforms and exhaustive search.
//!
//!     cargo run --example hom_long_equation

use homlong::linalg::{flip, int, Matrix};
use homlong::longeq::{
    check_long_equation, coordinate_criterion, diagonal_solution, search_solutions, tau_transforms,
    OperatorOnTensorSquare, SearchShape,
};

fn main() -> homlong::Result<()> {
    let mu = Matrix::diagonal(&[int(1), int(2)]);

    let diag = diagonal_solution(&[int(1), int(2)], &Matrix::from_ints(&[&[1, 3], &[5, 7]]))?;
    println!("diagonal R:\n{}", check_long_equation(&diag.operator));

    let flipped = OperatorOnTensorSquare::new(flip(2, 2), mu.clone())?;
    println!("flip with μ = diag(1,2):\n{}", check_long_equation(&flipped));

    // x = (I⊗μ)R recovers R as the literal operator of its coordinates
    let x = &Matrix::identity(2).kron(&mu) * diag.operator.matrix();
    println!("coordinate criterion:\n{}", coordinate_criterion(&x, &x, &mu)?.to_report());

    // the stated W-equation parts ways with the others for non-symmetric b
    println!("τ-transforms:\n{}", tau_transforms(&diag.operator)?.report);

    let found = search_solutions(&mu, &[int(0), int(1)], SearchShape::Full)?;
    println!("{} solutions with entries in {{0, 1}} among 65536 candidates", found.len());
    Ok(())
}
