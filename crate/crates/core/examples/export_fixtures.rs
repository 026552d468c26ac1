//! Writes the JSON fixture files used by the CLI tests into a directory
//! (default: the crate's `data/`).
//!
//!     cargo run --example export_fixtures -- [DIR]

use std::path::{Path, PathBuf};
use std::sync::Arc;

use homlong::braidcat::hb_yd_structure;
use homlong::fixtures;
use homlong::homstruct::tensor_hopf;
use homlong::io::{AlgebraFile, ComoduleFile, ContextFile, DimoduleFile, ModuleFile, Source, YdFile};
use homlong::linalg::{flip, int, Matrix};
use homlong::longdimod::{canonical_dimodule, HomLongDimodule};
use homlong::longeq::{diagonal_solution, OperatorOnTensorSquare};
use homlong::repmod::{HomComodule, HomModule};

fn names(v: &[&str]) -> Option<Vec<String>> {
    Some(v.iter().map(|s| s.to_string()).collect())
}

fn path(p: &str) -> Source<AlgebraFile> {
    Source::Path(p.into())
}

fn main() -> homlong::Result<()> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(|| Path::new(env!("CARGO_MANIFEST_DIR")).join("data"));
    std::fs::create_dir_all(&dir).map_err(|source| homlong::Error::Io { path: dir.display().to_string(), source })?;
    let put = |name: &str, v: &dyn erased::Json| v.write(&dir.join(name));

    let z2b = names(&["1", "g"]);
    let z4b = names(&["1", "g", "g2", "g3"]);
    let swb = names(&["1", "g", "x", "gx"]);

    // algebras
    put("kz2.json", &AlgebraFile::from_bialgebra(&fixtures::kz2().without_antipode(), z2b.clone()))?;
    let kz2_hopf = AlgebraFile::from_bialgebra(&fixtures::kz2(), z2b.clone()).with_r(fixtures::r_t()).with_form(fixtures::sign_form());
    put("kz2_hopf.json", &kz2_hopf)?;
    put("kz4.json", &AlgebraFile::from_bialgebra(&fixtures::cyclic_group(4), z4b.clone()))?;
    put("inv.json", &fixtures::power_map(4, 3))?;
    put("kz4_twisted.json", &AlgebraFile::from_bialgebra(&fixtures::kz4_twisted(), z4b.clone()).with_form(fixtures::parity_form(4)))?;
    put("sweedler.json", &AlgebraFile::from_bialgebra(&fixtures::sweedler(), swb.clone()).with_r(fixtures::sweedler_r(&int(1))))?;
    put(
        "sweedler_twisted.json",
        &AlgebraFile::from_bialgebra(&fixtures::sweedler_twisted(), swb.clone()).with_r(fixtures::sweedler_r(&int(1))),
    )?;
    let mut broken = AlgebraFile::from_bialgebra(&fixtures::kz2().without_antipode(), z2b.clone());
    broken.gamma = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
    put("broken.json", &broken)?;

    // contexts
    let ctx = |h: &str, b: &str| ContextFile { h: path(h), r: None, b: path(b), form: None, unchecked: false };
    put("ctx_z2.json", &ctx("kz2_hopf.json", "kz2_hopf.json"))?;
    put("ctx_twisted.json", &ctx("sweedler_twisted.json", "kz4_twisted.json"))?;
    let mut bad = ctx("kz2_hopf.json", "kz2_hopf.json");
    bad.r = Some(Source::Inline(Box::new(Matrix::from_ints(&[&[1, 0], &[0, 2]]))));
    bad.unchecked = true;
    put("ctx_nontriangular.json", &bad)?;

    // dimodules over (kZ2, kZ2)
    let z2 = Arc::new(fixtures::kz2());
    let dimod = |d: &HomLongDimodule, h: &str, b: Option<&str>, basis: Option<Vec<String>>| {
        DimoduleFile::from_dimodule(path(h), b.map(path), d, basis)
    };
    put("unit.json", &dimod(&HomLongDimodule::unit_object(&z2, &z2), "kz2_hopf.json", Some("kz2_hopf.json"), names(&["1"])))?;
    let sign = fixtures::sign_dimodule(&z2, &z2);
    put("sign.json", &dimod(&sign, "kz2_hopf.json", Some("kz2_hopf.json"), names(&["v"])))?;
    put(
        "canonical.json",
        &dimod(&canonical_dimodule(&z2, &z2), "kz2_hopf.json", Some("kz2_hopf.json"), names(&["1⊗1", "1⊗g", "g⊗1", "g⊗g"])),
    )?;
    put("halpha_sign.json", &dimod(&sign, "kz2_hopf.json", None, names(&["v"])))?;

    // dimodules over (twisted Sweedler, twisted kZ4)
    let tctx = fixtures::twisted_context(1);
    let objs = fixtures::twisted_objects(&tctx);
    for (name, d) in ["tw_unit.json", "tw_module.json", "tw_comodule.json"].iter().zip(&objs) {
        put(name, &dimod(d, "sweedler_twisted.json", Some("kz4_twisted.json"), None))?;
    }

    // (co)modules and a Yetter-Drinfeld module
    let z4 = fixtures::kz4_twisted();
    put("module_kz4.json", &ModuleFile::from_module(path("kz4_twisted.json"), &HomModule::regular(z4.algebra()), z4b.clone()))?;
    put(
        "comodule_kz4.json",
        &ComoduleFile::from_comodule(path("kz4_twisted.json"), &HomComodule::regular(z4.coalgebra()), z4b.clone()),
    )?;
    let zctx = fixtures::z2_context();
    let hb = tensor_hopf(zctx.h(), zctx.b());
    let yd = hb_yd_structure(&zctx, &fixtures::sign_dimodule(zctx.h(), zctx.b()))?;
    put("yd_sign.json", &YdFile::from_yd(Source::Inline(Box::new(AlgebraFile::from_bialgebra(&hb, None))), &yd, names(&["v"])))?;

    // operators and structure maps
    let d12 = Matrix::diagonal(&[int(1), int(2)]);
    put("op_flip.json", &OperatorOnTensorSquare::new(flip(2, 2), d12.clone())?)?;
    put("op_diag.json", &diagonal_solution(&[int(1), int(2)], &Matrix::from_ints(&[&[1, 3], &[5, 7]]))?.operator)?;
    put("id2.json", &Matrix::identity(2))?;
    put("diag12.json", &d12)?;

    println!("fixtures written to {}", dir.display());
    Ok(())
}

/// Lets one closure write values of different types.
mod erased {
    use std::path::Path;

    pub trait Json {
        fn write(&self, path: &Path) -> homlong::Result<()>;
    }

    impl<T: serde::Serialize> Json for T {
        fn write(&self, path: &Path) -> homlong::Result<()> {
            homlong::io::write_json(path, self)
        }
    }
}
