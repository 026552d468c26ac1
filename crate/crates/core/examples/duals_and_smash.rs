//! Left and right duals with their snake identities, and the passage to
//! modules over the smash product B*ᵒᵖ⊗H and back.
//!
//!     cargo run --example duals_and_smash

use homlong::fixtures;
use homlong::longdimod::{check_snake, from_smash_module, left_dual, right_dual, smash_algebra, to_smash_module};
use homlong::repmod::validate_hom_module;

fn main() -> homlong::Result<()> {
    let ctx = fixtures::twisted_context(1);
    let objs = fixtures::twisted_objects(&ctx);
    let m = &objs[2];

    let left = left_dual(m)?;
    let right = right_dual(m)?;
    println!("left dual snakes:\n{}", check_snake(m, &left)?);
    println!("right dual snakes:\n{}", check_snake(m, &right)?);

    let smash = smash_algebra(m.h(), m.b())?;
    let module = to_smash_module(m)?;
    println!("as a module over the {}-dimensional smash algebra:\n{}", smash.dim(), validate_hom_module(&smash, &module)?);
    let back = from_smash_module(&module, m.h(), m.b())?;
    println!("recovered exactly: {}", &back == m);
    Ok(())
}
