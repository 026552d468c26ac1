use std::path::{Path, PathBuf};

use clap::{Subcommand, ValueEnum};

use super::RunReport;
use crate::braidcat::{
    check_braiding_compatibility, check_hb_yd, check_hexagons, check_qybe, check_symmetry, diagnose_symmetry, BraidingContext,
};
use crate::error::{Error, Result};
use crate::io::{self, LoadedDimodule};
use crate::longdimod::{check_coherence, check_snake, from_smash_module, left_dual, right_dual, smash_algebra, to_smash_module};
use crate::longeq::check_long_equation;
use crate::repmod::{check_yd, validate_hom_module};
use crate::report::AxiomReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(super) enum Side {
    Left,
    Right,
    Both,
}

#[derive(Subcommand, Debug)]
pub(super) enum CheckCmd {
    /// Categorical quantum Yang-Baxter equation for `C` on `U⊗V⊗W`.
    Ybe {
        #[arg(long)]
        ctx: PathBuf,
        #[arg(short = 'U')]
        u: PathBuf,
        #[arg(short = 'V')]
        v: PathBuf,
        #[arg(short = 'W')]
        w: PathBuf,
    },
    /// Both hexagon identities for `(U, V, W)`.
    Hexagon {
        #[arg(long)]
        ctx: PathBuf,
        #[arg(short = 'U')]
        u: PathBuf,
        #[arg(short = 'V')]
        v: PathBuf,
        #[arg(short = 'W')]
        w: PathBuf,
    },
    /// `C_{N,M}∘C_{M,N} = id`; needs a triangular and cotriangular context.
    Symmetry {
        #[arg(long)]
        ctx: PathBuf,
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(short = 'N')]
        n: PathBuf,
    },
    /// The Hom-Long equation for an operator file.
    Longeq {
        #[arg(short = 'R')]
        r: PathBuf,
    },
    /// (HYD) for a Yetter-Drinfeld file, or for the `H⊗B` structure of a
    /// dimodule under a context (with the braiding comparison).
    Yd {
        #[arg(short = 'Y', conflicts_with_all = ["ctx", "m"])]
        y: Option<PathBuf>,
        #[arg(long, requires = "m")]
        ctx: Option<PathBuf>,
        #[arg(short = 'M', requires = "ctx")]
        m: Option<PathBuf>,
    },
    /// Zig-zag identities for the left and/or right dual.
    Snake {
        #[arg(short = 'M')]
        m: PathBuf,
        #[arg(long, value_enum, default_value_t = Side::Both)]
        side: Side,
    },
    /// Dimodule → smash module → dimodule is the identity.
    Roundtrip {
        #[arg(short = 'M')]
        m: PathBuf,
    },
    /// Associator, pentagon, triangle and unit-constraint checks.
    Coherence {
        #[arg(short = 'U')]
        u: PathBuf,
        #[arg(short = 'V')]
        v: PathBuf,
        #[arg(short = 'W')]
        w: PathBuf,
        /// Fourth objects for the pentagon; defaults to `U`.
        #[arg(short = 'X')]
        x: Vec<PathBuf>,
    },
}

impl CheckCmd {
    pub(super) fn name(&self) -> &'static str {
        match self {
            CheckCmd::Ybe { .. } => "ybe",
            CheckCmd::Hexagon { .. } => "hexagon",
            CheckCmd::Symmetry { .. } => "symmetry",
            CheckCmd::Longeq { .. } => "longeq",
            CheckCmd::Yd { .. } => "yd",
            CheckCmd::Snake { .. } => "snake",
            CheckCmd::Roundtrip { .. } => "roundtrip",
            CheckCmd::Coherence { .. } => "coherence",
        }
    }
}

fn ctx(rep: &mut RunReport, p: &Path) -> Result<BraidingContext> {
    rep.input(p);
    io::load_context(p)
}

fn dimodule(rep: &mut RunReport, p: &Path) -> Result<LoadedDimodule> {
    rep.input(p);
    io::load_dimodule(p)
}

pub(super) fn run(rep: &mut RunReport, cmd: &CheckCmd, diagnose: bool) -> Result<()> {
    match cmd {
        CheckCmd::Ybe { ctx: c, u, v, w } | CheckCmd::Hexagon { ctx: c, u, v, w } => {
            let c = ctx(rep, c)?;
            let (u, v, w) = (dimodule(rep, u)?, dimodule(rep, v)?, dimodule(rep, w)?);
            let r = if matches!(cmd, CheckCmd::Ybe { .. }) {
                check_qybe(&c, &u.dimodule, &v.dimodule, &w.dimodule)?
            } else {
                check_hexagons(&c, &u.dimodule, &v.dimodule, &w.dimodule)?
            };
            rep.absorb("", r);
        }
        CheckCmd::Symmetry { ctx: c, m, n } => {
            let c = ctx(rep, c)?;
            let (m, n) = (dimodule(rep, m)?, dimodule(rep, n)?);
            match check_symmetry(&c, &m.dimodule, &n.dimodule) {
                Ok(r) => rep.absorb("", r),
                Err(e @ Error::InvalidContext(_)) if diagnose => {
                    rep.absorb("diagnose", diagnose_symmetry(&c, &m.dimodule, &n.dimodule)?);
                    return Err(e);
                }
                Err(e) => return Err(e),
            }
        }
        CheckCmd::Longeq { r } => {
            rep.input(r);
            rep.absorb("", check_long_equation(&io::load_operator(r)?));
        }
        CheckCmd::Yd { y: Some(y), .. } => {
            rep.input(y);
            let dir = y.parent().map(Path::to_path_buf).unwrap_or_default();
            let m = io::read_json::<io::YdFile>(y)?.load(&dir)?;
            rep.absorb("", check_yd(&*m.over.bialgebra()?, &m.yd)?);
        }
        CheckCmd::Yd { ctx: Some(c), m: Some(m), .. } => {
            let c = ctx(rep, c)?;
            let m = dimodule(rep, m)?;
            rep.absorb("", check_hb_yd(&c, &m.dimodule)?);
            rep.absorb("", check_braiding_compatibility(&c, &m.dimodule, &m.dimodule)?);
        }
        CheckCmd::Yd { .. } => return Err(Error::Parse("check yd needs -Y, or --ctx with -M".into())),
        CheckCmd::Snake { m, side } => {
            let m = dimodule(rep, m)?;
            if matches!(side, Side::Left | Side::Both) {
                rep.absorb("left", check_snake(&m.dimodule, &left_dual(&m.dimodule)?)?);
            }
            if matches!(side, Side::Right | Side::Both) {
                rep.absorb("right", check_snake(&m.dimodule, &right_dual(&m.dimodule)?)?);
            }
        }
        CheckCmd::Roundtrip { m } => {
            let m = dimodule(rep, m)?;
            rep.absorb("", roundtrip(&m)?);
        }
        CheckCmd::Coherence { u, v, w, x } => {
            let (u, v, w) = (dimodule(rep, u)?, dimodule(rep, v)?, dimodule(rep, w)?);
            let xs = x.iter().map(|p| dimodule(rep, p)).collect::<Result<Vec<_>>>()?;
            let mut refs: Vec<_> = xs.iter().map(|d| &d.dimodule).collect();
            if refs.is_empty() {
                refs.push(&u.dimodule);
            }
            rep.absorb("", check_coherence(&u.dimodule, &v.dimodule, &w.dimodule, &refs)?);
        }
    }
    Ok(())
}

/// `Ψ∘Φ = Id` on the dimodule, `Φ∘Ψ = Id` on its smash module, and the
/// smash module axioms.
pub(super) fn roundtrip(m: &LoadedDimodule) -> Result<AxiomReport> {
    let d = &m.dimodule;
    let smash = smash_algebra(d.h(), d.b())?;
    let module = to_smash_module(d)?;
    let back = from_smash_module(&module, d.h(), d.b())?;
    let again = to_smash_module(&back)?;
    let mut r = AxiomReport::new();
    r.absorb("smash-module", validate_hom_module(&smash, &module)?);
    let (dh, db, n) = (d.h().dim(), d.b().dim(), d.dim());
    r.identity("Psi-Phi/action", back.action(), d.action(), &[dh, n]);
    r.identity("Psi-Phi/coaction", back.coaction(), d.coaction(), &[n]);
    r.identity("Psi-Phi/mu", back.mu(), d.mu(), &[n]);
    r.identity("Phi-Psi/action", again.action(), module.action(), &[db * dh, n]);
    Ok(r)
}
