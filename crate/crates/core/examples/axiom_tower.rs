//! Validating the Hom-Hopf axiom tower and reading a witness.
//!
//!     cargo run --example axiom_tower

use homlong::fixtures;
use homlong::homstruct::{validate_hom_bialgebra, validate_hom_hopf, yau_twist, HomAlgebra, HomBialgebra};
use homlong::linalg::int;

fn main() -> homlong::Result<()> {
    let kz2 = fixtures::kz2();
    println!("kZ2 as a Hom-Hopf algebra with identity twist:\n{}", validate_hom_hopf(&kz2));

    // g ↦ g³ on kZ4
    let twisted = yau_twist(&fixtures::cyclic_group(4), &fixtures::power_map(4, 3))?;
    println!("Yau-twisted kZ4:\n{}", validate_hom_hopf(&twisted));

    // g·g = 2·1 breaks Hom-associativity; the witness names the basis triple
    let mut mult = kz2.algebra().mult_constants();
    mult.set(1, 1, 0, int(2));
    let alg = HomAlgebra::from_constants(&mult, kz2.unit().col(0), kz2.twist().clone())?;
    let broken = HomBialgebra::new(alg, kz2.coalgebra().clone())?;
    let rep = validate_hom_bialgebra(&broken);
    println!("mutated kZ2:\n{rep}");
    if let Some(c) = rep.first_failure() {
        println!("first failure: {} at basis tuple {:?}", c.id, c.witness.as_ref().map(|w| &w.inputs));
    }
    Ok(())
}
