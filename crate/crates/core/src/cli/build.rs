use std::path::{Path, PathBuf};

use clap::{Subcommand, ValueEnum};

use super::RunReport;
use crate::braidcat::{check_braiding_linearity, long_braiding, long_braiding_inverse};
use crate::error::{Error, Result};
use crate::homstruct::{validate_hom_bialgebra, validate_hom_hopf, yau_twist};
use crate::io::{self, tensor_labels, AlgebraFile, DimoduleFile, LabelledMatrix, ModuleFile, Source};
use crate::longdimod::{check_snake, left_dual, right_dual, smash_algebra, tensor_dimodule, to_smash_module, validate_long_dimodule};
use crate::longeq::{
    check_long_equation, comodule_extension, dimodule_solution, module_extension, module_extension_corrected,
    validate_halpha_dimodule,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(super) enum DualSide {
    Left,
    Right,
}

#[derive(Subcommand, Debug)]
pub(super) enum BuildCmd {
    /// The braiding `C_{M,N}` (or its inverse) as a labelled matrix.
    Braid {
        #[arg(long)]
        ctx: PathBuf,
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(short = 'N')]
        n: PathBuf,
        /// Emit `C⁻¹_{M,N} : N⊗M → M⊗N` instead.
        #[arg(long)]
        inverse: bool,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// Left or right dual dimodule.
    Dual {
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(long, value_enum, default_value_t = DualSide::Left)]
        side: DualSide,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// Tensor product `M⊗N` of two dimodules.
    Tensor {
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(short = 'N')]
        n: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// Yau twist of a classical Hopf algebra along an automorphism.
    Twist {
        #[arg(long)]
        base: PathBuf,
        /// Matrix file of the automorphism.
        #[arg(long)]
        phi: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// The Hom-Long solution `R(m⊗n) = n₋₁·m⊗n₀` of an `(H, α)`-Long dimodule.
    DimoduleSolution {
        #[arg(short = 'D')]
        d: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// `H⊗M` as an `(H, α)`-Long dimodule, from a module or a comodule.
    Extension {
        #[arg(long, conflicts_with = "comodule", required_unless_present = "comodule")]
        module: Option<PathBuf>,
        #[arg(long)]
        comodule: Option<PathBuf>,
        /// Use `h·(g⊗m) = α(g)⊗h·m` for the module case.
        #[arg(long)]
        corrected: bool,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
    /// The module over `B*ᵒᵖ⊗H` of a dimodule.
    Smash {
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(short = 'o', long)]
        out: PathBuf,
    },
}

impl BuildCmd {
    pub(super) fn name(&self) -> &'static str {
        match self {
            BuildCmd::Braid { .. } => "braid",
            BuildCmd::Dual { .. } => "dual",
            BuildCmd::Tensor { .. } => "tensor",
            BuildCmd::Twist { .. } => "twist",
            BuildCmd::DimoduleSolution { .. } => "dimodule-solution",
            BuildCmd::Extension { .. } => "extension",
            BuildCmd::Smash { .. } => "smash",
        }
    }
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn emit<T: serde::Serialize>(rep: &mut RunReport, out: &Path, value: &T) -> Result<()> {
    io::write_json(out, value)?;
    rep.outputs.push(out.display().to_string());
    Ok(())
}

pub(super) fn run(rep: &mut RunReport, cmd: &BuildCmd) -> Result<()> {
    match cmd {
        BuildCmd::Braid { ctx, m, n, inverse, out } => {
            for p in [ctx, m, n] {
                rep.input(p);
            }
            let c = io::load_context(ctx)?;
            let (m, n) = (io::load_dimodule(m)?, io::load_dimodule(n)?);
            let mn = tensor_labels(&m.basis, &n.basis);
            let nm = tensor_labels(&n.basis, &m.basis);
            let file = if *inverse {
                let inv = long_braiding_inverse(&c, &m.dimodule, &n.dimodule)?;
                LabelledMatrix { domain: nm, codomain: mn, matrix: inv.matrix }
            } else {
                let b = long_braiding(&c, &m.dimodule, &n.dimodule)?;
                LabelledMatrix { domain: mn, codomain: nm, matrix: b.matrix }
            };
            rep.absorb("", check_braiding_linearity(&c, &m.dimodule, &n.dimodule)?);
            emit(rep, out, &file)?;
        }
        BuildCmd::Dual { m, side, out } => {
            rep.input(m);
            let src = io::load_dimodule(m)?;
            let data = match side {
                DualSide::Left => left_dual(&src.dimodule)?,
                DualSide::Right => right_dual(&src.dimodule)?,
            };
            rep.absorb("dual", validate_long_dimodule(&data.dual));
            rep.absorb("snake", check_snake(&src.dimodule, &data)?);
            let basis = src.basis.iter().map(|b| format!("{b}*")).collect();
            let file = DimoduleFile::from_dimodule(src.h.inline()?, Some(src.b.inline()?), &data.dual, Some(basis));
            emit(rep, out, &file)?;
        }
        BuildCmd::Tensor { m, n, out } => {
            rep.input(m);
            rep.input(n);
            let (m, n) = (io::load_dimodule(m)?, io::load_dimodule(n)?);
            let t = tensor_dimodule(&m.dimodule, &n.dimodule)?;
            rep.absorb("", validate_long_dimodule(&t));
            let basis = tensor_labels(&m.basis, &n.basis);
            let file = DimoduleFile::from_dimodule(m.h.inline()?, Some(m.b.inline()?), &t, Some(basis));
            emit(rep, out, &file)?;
        }
        BuildCmd::Twist { base, phi, out } => {
            rep.input(base);
            rep.input(phi);
            let loaded = io::load_algebra(base)?;
            let h = loaded.bialgebra()?;
            let twisted = yau_twist(&h, &io::load_matrix(phi)?)?;
            let r = if twisted.has_antipode() { validate_hom_hopf(&twisted) } else { validate_hom_bialgebra(&twisted) };
            rep.absorb("", r);
            emit(rep, out, &AlgebraFile::from_bialgebra(&twisted, Some(loaded.basis.clone())))?;
        }
        BuildCmd::DimoduleSolution { d, out } => {
            rep.input(d);
            let loaded = io::load_dimodule(d)?;
            let hd = loaded.halpha()?;
            rep.absorb("dimodule", validate_halpha_dimodule(&hd));
            let op = dimodule_solution(&hd)?;
            rep.absorb("", check_long_equation(&op));
            emit(rep, out, &op)?;
        }
        BuildCmd::Extension { module, comodule, corrected, out } => {
            let (over, basis, ext) = match (module, comodule) {
                (Some(p), _) => {
                    rep.input(p);
                    let m = io::read_json::<ModuleFile>(p)?.load(&dir_of(p))?;
                    let h = m.over.bialgebra()?;
                    let ext = if *corrected {
                        module_extension_corrected(&h, &m.module)?
                    } else {
                        module_extension(&h, &m.module)?
                    };
                    (m.over, m.basis, ext)
                }
                (None, Some(p)) => {
                    rep.input(p);
                    let m = io::read_json::<io::ComoduleFile>(p)?.load(&dir_of(p))?;
                    let h = m.over.bialgebra()?;
                    let ext = comodule_extension(&h, &m.comodule)?;
                    (m.over, m.basis, ext)
                }
                (None, None) => return Err(Error::Parse("extension needs --module or --comodule".into())),
            };
            rep.absorb("", validate_halpha_dimodule(&ext));
            let labels = tensor_labels(&over.basis, &basis);
            let file = DimoduleFile::from_dimodule(over.inline()?, None, ext.as_dimodule(), Some(labels));
            emit(rep, out, &file)?;
        }
        BuildCmd::Smash { m, out } => {
            rep.input(m);
            let src = io::load_dimodule(m)?;
            let d = &src.dimodule;
            let smash = smash_algebra(d.h(), d.b())?;
            let module = to_smash_module(d)?;
            rep.absorb("", super::check::roundtrip(&src)?);
            let over_basis = tensor_labels(&src.b.basis.iter().map(|b| format!("{b}*")).collect::<Vec<_>>(), &src.h.basis);
            let over = Source::Inline(Box::new(AlgebraFile::from_algebra(&smash, Some(over_basis))));
            emit(rep, out, &ModuleFile::from_module(over, &module, Some(src.basis.clone())))?;
        }
    }
    Ok(())
}
