//! The `homlong` command line: `validate`, `check`, `build`, `search`.
//!
//! Exit codes: 0 when every verdict passes, 1 when some check fails, 2 on
//! input, shape or precondition errors.

mod build;
mod check;

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homstruct::{
    validate_coquasitriangular, validate_hom_algebra, validate_hom_bialgebra, validate_hom_coalgebra, validate_hom_hopf,
    validate_quasitriangular,
};
use crate::io::{self, AlgebraKind, AlgebraValue, FileKind};
use crate::linalg::{parse_scalar, Matrix, Scalar};
use crate::longdimod::validate_long_dimodule;
use crate::longeq::{check_long_equation, search_solutions, validate_halpha_dimodule, SearchShape};
use crate::repmod::{check_yd, validate_hom_comodule, validate_hom_module};
use crate::report::{AxiomCheck, AxiomReport};

/// Outcome of one invocation, as printed with `--format json`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub inputs: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
    pub checks: Vec<AxiomCheck>,
    /// Number of solutions found by `search`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub exit_code: i32,
}

impl RunReport {
    fn new(command: &str) -> Self {
        Self { command: command.into(), ..Self::default() }
    }

    fn input(&mut self, p: &Path) {
        self.inputs.push(p.display().to_string());
    }

    fn absorb(&mut self, prefix: &str, r: AxiomReport) {
        let mut tmp = AxiomReport::new();
        tmp.absorb(prefix, r);
        self.checks.extend(tmp.checks);
    }

    fn finish(&mut self, outcome: Result<()>) {
        match outcome {
            Err(e) => {
                self.error = Some(e.to_string());
                self.exit_code = 2;
            }
            Ok(()) => {
                let ok = self.checks.iter().all(|c| c.passed || c.informational);
                self.exit_code = if ok { 0 } else { 1 };
            }
        }
    }

    pub fn to_text(&self, verbose: bool) -> String {
        let mut out = String::new();
        if verbose {
            out += &format!("{} {}\n", self.command, self.inputs.join(" "));
        }
        for c in &self.checks {
            out += &format!("{c}\n");
        }
        if let Some(n) = self.count {
            out += &format!("{n} solutions\n");
        }
        if verbose {
            for o in &self.outputs {
                out += &format!("wrote {o}\n");
            }
        }
        let counted = self.checks.iter().filter(|c| !c.informational).count();
        let failed = self.checks.iter().filter(|c| !c.informational && !c.passed).count();
        match self.exit_code {
            0 => out += &format!("ok: {counted} checks passed\n"),
            1 => out += &format!("FAILED: {failed} of {counted} checks failed\n"),
            _ => {}
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "homlong", version, about = "Exact checks for Hom-Hopf algebras, Hom-Long dimodules and the Hom-Long equation")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[arg(long, global = true)]
    verbose: bool,
    /// Run diagnostics even when a theorem's hypotheses fail.
    #[arg(long, global = true)]
    diagnose: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check every axiom of a definition file.
    Validate {
        file: PathBuf,
        /// Override the detected file kind.
        #[arg(long)]
        kind: Option<FileKind>,
    },
    /// Check one identity of the theory on concrete inputs.
    Check {
        #[command(subcommand)]
        subject: check::CheckCmd,
    },
    /// Construct a structure and write it to a file.
    Build {
        #[command(subcommand)]
        what: build::BuildCmd,
    },
    /// Enumerate grid operators solving the Hom-Long equation.
    Search {
        /// Structure map file; defaults to the identity of size --n.
        #[arg(long)]
        mu: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated grid values (integers or p/q).
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long, default_value = "diagonal")]
        shape: SearchShape,
        #[arg(short = 'o', long)]
        out: Option<PathBuf>,
    },
}

/// Parses arguments, runs the command, prints the report and returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let report = execute(&cli);
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match cli.format {
        Format::Json => {
            let _ = writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        }
        Format::Text => {
            let _ = write!(out, "{}", report.to_text(cli.verbose));
            if let Some(e) = &report.error {
                eprintln!("error: {e}");
            }
        }
    }
    report.exit_code
}

fn execute(cli: &Cli) -> RunReport {
    let (outcome, mut rep) = match &cli.command {
        Command::Validate { file, kind } => {
            let mut rep = RunReport::new("validate");
            let r = cmd_validate(&mut rep, file, *kind);
            (r, rep)
        }
        Command::Check { subject } => {
            let mut rep = RunReport::new(&format!("check {}", subject.name()));
            let r = check::run(&mut rep, subject, cli.diagnose);
            (r, rep)
        }
        Command::Build { what } => {
            let mut rep = RunReport::new(&format!("build {}", what.name()));
            let r = build::run(&mut rep, what);
            (r, rep)
        }
        Command::Search { mu, n, set, shape, out } => {
            let mut rep = RunReport::new("search");
            let r = cmd_search(&mut rep, mu.as_deref(), *n, set, *shape, out.as_deref());
            (r, rep)
        }
    };
    rep.finish(outcome);
    rep
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

fn cmd_validate(rep: &mut RunReport, file: &Path, kind: Option<FileKind>) -> Result<()> {
    rep.input(file);
    let value: serde_json::Value = io::read_json(file)?;
    let kind = match kind {
        Some(k) => k,
        None => io::detect_kind(&value)?,
    };
    let parse = |e: serde_json::Error| Error::Parse(format!("{}: {e}", file.display()));
    let base = dir_of(file);
    match kind {
        FileKind::Algebra => {
            let a = serde_json::from_value::<io::AlgebraFile>(value).map_err(parse)?.load()?;
            let r = match (&a.value, a.kind) {
                (AlgebraValue::Algebra(x), _) => validate_hom_algebra(x),
                (AlgebraValue::Coalgebra(x), _) => validate_hom_coalgebra(x),
                (AlgebraValue::Bialgebra(h), AlgebraKind::HomHopf) => validate_hom_hopf(h),
                (AlgebraValue::Bialgebra(h), _) => validate_hom_bialgebra(h),
            };
            rep.absorb("", r);
            if let AlgebraValue::Bialgebra(h) = &a.value {
                if let Some(r) = &a.r {
                    rep.absorb("R", validate_quasitriangular(h, r)?);
                }
                if let Some(f) = &a.form {
                    rep.absorb("form", validate_coquasitriangular(h, f)?);
                }
            }
        }
        FileKind::Module => {
            let m = serde_json::from_value::<io::ModuleFile>(value).map_err(parse)?.load(&base)?;
            rep.absorb("", validate_hom_module(&m.over.algebra()?, &m.module)?);
        }
        FileKind::Comodule => {
            let m = serde_json::from_value::<io::ComoduleFile>(value).map_err(parse)?.load(&base)?;
            rep.absorb("", validate_hom_comodule(&m.over.coalgebra()?, &m.comodule)?);
        }
        FileKind::Yd => {
            let m = serde_json::from_value::<io::YdFile>(value).map_err(parse)?.load(&base)?;
            let h = m.over.bialgebra()?;
            rep.absorb("module", validate_hom_module(h.algebra(), m.yd.module())?);
            rep.absorb("comodule", validate_hom_comodule(h.coalgebra(), m.yd.comodule())?);
            rep.absorb("", check_yd(&h, &m.yd)?);
        }
        FileKind::Dimodule => {
            let d = serde_json::from_value::<io::DimoduleFile>(value).map_err(parse)?.load(&base)?;
            rep.absorb("", validate_long_dimodule(&d.dimodule));
        }
        FileKind::HalphaDimodule => {
            let d = serde_json::from_value::<io::DimoduleFile>(value).map_err(parse)?.load(&base)?;
            rep.absorb("", validate_halpha_dimodule(&d.halpha()?));
        }
        FileKind::Context => {
            let mut c = serde_json::from_value::<io::ContextFile>(value).map_err(parse)?;
            c.unchecked = true;
            let ctx = c.load(&base)?;
            rep.absorb("R", validate_quasitriangular(ctx.h(), ctx.r().coefficients())?);
            rep.absorb("form", validate_coquasitriangular(ctx.b(), ctx.form().coefficients())?);
        }
        FileKind::Operator => {
            let op: crate::longeq::OperatorOnTensorSquare = serde_json::from_value(value).map_err(parse)?;
            rep.absorb("", check_long_equation(&op));
        }
    }
    Ok(())
}

/// `"0,1,-1/2"`; the empty string is the empty set.
pub fn parse_set(text: &str) -> Result<Vec<Scalar>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',').map(parse_scalar).collect()
}

fn cmd_search(rep: &mut RunReport, mu: Option<&Path>, n: usize, set: &str, shape: SearchShape, out: Option<&Path>) -> Result<()> {
    let mu = match mu {
        Some(p) => {
            rep.input(p);
            io::load_matrix(p)?
        }
        None => Matrix::identity(n),
    };
    let set = parse_set(set)?;
    let found = search_solutions(&mu, &set, shape)?;
    rep.count = Some(found.len());
    for (i, op) in found.iter().enumerate() {
        let mut c = crate::longeq::long_equation_check(op);
        c.id = format!("solution-{i}");
        rep.checks.push(c);
    }
    if let Some(p) = out {
        io::write_json(p, &found)?;
        rep.outputs.push(p.display().to_string());
    }
    Ok(())
}
