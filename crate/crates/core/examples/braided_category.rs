//! The braiding of Hom-Long dimodules over (kZ2, R_t; kZ2, sign form):
//! the braid matrix, its inverse, hexagons and the Yang-Baxter identity.
//!
//!     cargo run --example braided_category

use homlong::braidcat::{check_braiding_linearity, check_hexagons, check_qybe, long_braiding};
use homlong::fixtures;

fn main() -> homlong::Result<()> {
    let ctx = fixtures::z2_context();
    let [unit, sign, canonical]: [_; 3] = fixtures::z2_objects(&ctx).try_into().expect("three objects");

    let c = long_braiding(&ctx, &sign, &canonical)?;
    println!("C_(sign, canonical) on the basis v⊗(1⊗1), …, v⊗(g⊗g):\n{:?}", c.matrix);
    println!("{}", check_braiding_linearity(&ctx, &sign, &canonical)?);

    println!("hexagons on (sign, canonical, unit):\n{}", check_hexagons(&ctx, &sign, &canonical, &unit)?);
    println!("Yang-Baxter on (canonical, sign, canonical):\n{}", check_qybe(&ctx, &canonical, &sign, &canonical)?);

    // the same identities with non-trivial twists on both sides
    let tctx = fixtures::twisted_context(1);
    let objs = fixtures::twisted_objects(&tctx);
    println!("twisted Sweedler / twisted kZ4:\n{}", check_qybe(&tctx, &objs[1], &objs[2], &objs[1])?);
    Ok(())
}
