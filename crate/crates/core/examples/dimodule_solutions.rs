//! Solutions of the Hom-Long equation coming from (H, α)-Long dimodules,
//! including the extensions H⊗M of modules and comodules.
//!
//!     cargo run --example dimodule_solutions

use std::sync::Arc;

use homlong::fixtures;
use homlong::longeq::{
    check_long_equation, comodule_extension, dimodule_solution, module_extension, module_extension_corrected,
    validate_halpha_dimodule,
};
use homlong::repmod::{HomComodule, HomModule};

fn main() -> homlong::Result<()> {
    let h = Arc::new(fixtures::kz4_twisted());
    let regular = HomModule::regular(h.algebra());

    // the literal action carries an extra structure map and fails here
    let literal = module_extension(&h, &regular)?;
    println!("literal module extension:\n{}", validate_halpha_dimodule(&literal));

    for (name, d) in [
        ("corrected module extension", module_extension_corrected(&h, &regular)?),
        ("comodule extension", comodule_extension(&h, &HomComodule::regular(h.coalgebra()))?),
    ] {
        let valid = validate_halpha_dimodule(&d).all_passed();
        let r = dimodule_solution(&d)?;
        println!("{name}: dimension {}, valid {valid}, solves the equation {}", d.dim(), check_long_equation(&r).all_passed());
    }
    Ok(())
}
