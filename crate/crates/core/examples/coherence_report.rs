//! Monoidal coherence of the dimodule category: associator, pentagon,
//! triangle and unit constraints. Structure maps that are not involutions
//! break the triangle.
//!
//!     cargo run --example coherence_report

use std::sync::Arc;

use homlong::fixtures;
use homlong::linalg::int;
use homlong::linalg::Matrix;
use homlong::longdimod::{check_coherence, HomLongDimodule};

fn main() -> homlong::Result<()> {
    let ctx = fixtures::z2_context();
    let objs = fixtures::z2_objects(&ctx);
    println!("kZ2 fixtures:\n{}", check_coherence(&objs[1], &objs[2], &objs[1], &[&objs[0], &objs[2]])?);

    let k = Arc::new(fixtures::trivial());
    let scaled = |s: i64| {
        let m = Matrix::scalar(int(s));
        HomLongDimodule::new(&k, &k, m.clone(), m.clone(), m)
    };
    let (two, three) = (scaled(2)?, scaled(3)?);
    let rep = check_coherence(&two, &three, &two, &[&three])?;
    println!("structure maps 2 and 3 on k:\n{rep}");
    println!("failing: {:?}", rep.failed_ids());
    Ok(())
}
