//! A Hom-Long dimodule seen as a Yetter-Drinfeld module over H⊗B, and the
//! Yetter-Drinfeld pre-braiding compared with the dimodule braiding.
//!
//!     cargo run --example yetter_drinfeld

use homlong::braidcat::{check_braiding_compatibility, check_hb_yd, hb_yd_structure};
use homlong::fixtures;

fn main() -> homlong::Result<()> {
    let ctx = fixtures::z2_context();
    let objs = fixtures::z2_objects(&ctx);
    let canonical = &objs[2];

    let yd = hb_yd_structure(&ctx, canonical)?;
    println!("H⊗B action on the canonical dimodule:\n{:?}", yd.action());
    println!("{}", check_hb_yd(&ctx, canonical)?);
    for n in &objs {
        let same = check_braiding_compatibility(&ctx, canonical, n)?.all_passed();
        println!("pre-braiding equals C against a {}-dimensional object: {same}", n.dim());
    }
    Ok(())
}
