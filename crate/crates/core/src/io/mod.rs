//! JSON definition files: algebras, (co)modules, Yetter-Drinfeld modules,
//! dimodules, braiding contexts and operators.
//!
//! Nested objects may be given inline or as a path, resolved relative to the
//! file that mentions them. Scalars are integers or `"p/q"` strings.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::braidcat::BraidingContext;
use crate::error::{Error, Result};
use crate::homstruct::{HomAlgebra, HomBialgebra, HomCoalgebra};
use crate::linalg::scalar::JsonScalar;
use crate::linalg::{Matrix, Scalar, Tensor3};
use crate::longdimod::HomLongDimodule;
use crate::longeq::HAlphaLongDimodule;
use crate::repmod::{HomComodule, HomModule, YetterDrinfeldModule};

/// `[i][j][k]` structure constants as written in files.
pub type Nested3 = Vec<Vec<Vec<JsonScalar>>>;

fn to_tensor(name: &str, n: &Nested3, dims: [usize; 3]) -> Result<Tensor3> {
    let t = Tensor3::from_nested(n.iter().map(|a| a.iter().map(|b| b.iter().map(|s| s.0.clone()).collect()).collect()).collect())
        .map_err(|e| Error::Parse(format!("{name}: {e}")))?;
    if t.dims() != dims {
        return Err(Error::Parse(format!("{name} has shape {:?}, expected {:?}", t.dims(), dims)));
    }
    Ok(t)
}

fn from_tensor(t: &Tensor3) -> Nested3 {
    t.to_nested()
        .into_iter()
        .map(|a| a.into_iter().map(|b| b.into_iter().map(JsonScalar).collect()).collect())
        .collect()
}

fn to_vec(name: &str, v: &[JsonScalar], len: usize) -> Result<Vec<Scalar>> {
    if v.len() != len {
        return Err(Error::Parse(format!("{name} has length {}, expected {len}", v.len())));
    }
    Ok(v.iter().map(|s| s.0.clone()).collect())
}

fn check_matrix(name: &str, m: &Matrix, rows: usize, cols: usize) -> Result<()> {
    if m.shape() != (rows, cols) {
        return Err(Error::Parse(format!("{name} is {}x{}, expected {rows}x{cols}", m.rows(), m.cols())));
    }
    Ok(())
}

fn check_basis(basis: &Option<Vec<String>>, dim: usize, prefix: &str) -> Result<Vec<String>> {
    match basis {
        Some(b) if b.len() != dim => Err(Error::Parse(format!("basis has {} names, dim is {dim}", b.len()))),
        Some(b) => Ok(b.clone()),
        None => Ok(default_basis(prefix, dim)),
    }
}

pub fn default_basis(prefix: &str, dim: usize) -> Vec<String> {
    (0..dim).map(|i| format!("{prefix}{i}")).collect()
}

/// Reads and parses a JSON file; parse errors carry line and column.
pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io { path: path.display().to_string(), source })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = to_json_string(value)?;
    std::fs::write(path, text + "\n").map_err(|source| Error::Io { path: path.display().to_string(), source })
}

pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))
}

/// An inline value or a path to a file holding it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Source<T> {
    Path(String),
    Inline(Box<T>),
}

impl<T: DeserializeOwned + Clone> Source<T> {
    /// The value, and the directory further relative paths are resolved from.
    pub fn resolve(&self, base: &Path) -> Result<(T, PathBuf)> {
        match self {
            Source::Path(p) => {
                let path = base.join(p);
                let dir = path.parent().map(Path::to_path_buf).unwrap_or_default();
                Ok((read_json(&path)?, dir))
            }
            Source::Inline(v) => Ok(((**v).clone(), base.to_path_buf())),
        }
    }
}

fn dir_of(path: &Path) -> PathBuf {
    path.parent().map(Path::to_path_buf).unwrap_or_default()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AlgebraKind {
    HomAlgebra,
    HomCoalgebra,
    HomBialgebra,
    HomHopf,
}

/// Algebra definition file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub kind: AlgebraKind,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Nested3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<JsonScalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Nested3>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<JsonScalar>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Matrix>,
    pub gamma: Matrix,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Matrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Matrix>,
}

/// The structure an algebra file describes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraValue {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomBialgebra),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LoadedAlgebra {
    pub kind: AlgebraKind,
    pub basis: Vec<String>,
    pub value: AlgebraValue,
    pub r: Option<Matrix>,
    pub form: Option<Matrix>,
}

impl AlgebraFile {
    pub fn load(&self) -> Result<LoadedAlgebra> {
        let d = self.dim;
        let basis = check_basis(&self.basis, d, "e")?;
        check_matrix("gamma", &self.gamma, d, d)?;
        let need = |name: &str, present: bool| {
            if present {
                Ok(())
            } else {
                Err(Error::Parse(format!("{:?} file needs `{name}`", self.kind)))
            }
        };
        let algebra = || -> Result<HomAlgebra> {
            need("mult", self.mult.is_some())?;
            need("unit", self.unit.is_some())?;
            let mult = to_tensor("mult", self.mult.as_ref().unwrap(), [d, d, d])?;
            let unit = to_vec("unit", self.unit.as_ref().unwrap(), d)?;
            HomAlgebra::from_constants(&mult, unit, self.gamma.clone())
        };
        let coalgebra = || -> Result<HomCoalgebra> {
            need("comult", self.comult.is_some())?;
            need("counit", self.counit.is_some())?;
            let comult = to_tensor("comult", self.comult.as_ref().unwrap(), [d, d, d])?;
            let counit = to_vec("counit", self.counit.as_ref().unwrap(), d)?;
            HomCoalgebra::from_constants(&comult, counit, self.gamma.clone())
        };
        let value = match self.kind {
            AlgebraKind::HomAlgebra => AlgebraValue::Algebra(algebra()?),
            AlgebraKind::HomCoalgebra => AlgebraValue::Coalgebra(coalgebra()?),
            AlgebraKind::HomBialgebra | AlgebraKind::HomHopf => {
                let mut h = HomBialgebra::new(algebra()?, coalgebra()?)?;
                if self.kind == AlgebraKind::HomHopf {
                    need("antipode", self.antipode.is_some())?;
                }
                if let Some(s) = &self.antipode {
                    check_matrix("antipode", s, d, d)?;
                    h = h.with_antipode(s.clone())?;
                }
                AlgebraValue::Bialgebra(h)
            }
        };
        for (name, m) in [("R", &self.r), ("form", &self.form)] {
            if let Some(m) = m {
                check_matrix(name, m, d, d)?;
            }
        }
        Ok(LoadedAlgebra { kind: self.kind, basis, value, r: self.r.clone(), form: self.form.clone() })
    }

    /// A `hom-hopf` file when `h` has an antipode, `hom-bialgebra` otherwise.
    pub fn from_bialgebra(h: &HomBialgebra, basis: Option<Vec<String>>) -> Self {
        let antipode = h.antipode().ok().cloned();
        Self {
            kind: if antipode.is_some() { AlgebraKind::HomHopf } else { AlgebraKind::HomBialgebra },
            dim: h.dim(),
            basis,
            mult: Some(from_tensor(&h.algebra().mult_constants())),
            unit: Some(h.unit().col(0).into_iter().map(JsonScalar).collect()),
            comult: Some(from_tensor(&h.coalgebra().comult_constants())),
            counit: Some(h.counit().entries().iter().cloned().map(JsonScalar).collect()),
            antipode,
            gamma: h.twist().clone(),
            r: None,
            form: None,
        }
    }

    pub fn from_algebra(a: &HomAlgebra, basis: Option<Vec<String>>) -> Self {
        Self {
            kind: AlgebraKind::HomAlgebra,
            dim: a.dim(),
            basis,
            mult: Some(from_tensor(&a.mult_constants())),
            unit: Some(a.unit().col(0).into_iter().map(JsonScalar).collect()),
            comult: None,
            counit: None,
            antipode: None,
            gamma: a.alpha().clone(),
            r: None,
            form: None,
        }
    }

    pub fn with_r(mut self, r: Matrix) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_form(mut self, form: Matrix) -> Self {
        self.form = Some(form);
        self
    }
}

impl LoadedAlgebra {
    pub fn bialgebra(&self) -> Result<Arc<HomBialgebra>> {
        match &self.value {
            AlgebraValue::Bialgebra(h) => Ok(Arc::new(h.clone())),
            _ => Err(Error::Parse(format!("expected a hom-bialgebra or hom-hopf file, got {:?}", self.kind))),
        }
    }

    pub fn algebra(&self) -> Result<HomAlgebra> {
        match &self.value {
            AlgebraValue::Algebra(a) => Ok(a.clone()),
            AlgebraValue::Bialgebra(h) => Ok(h.algebra().clone()),
            AlgebraValue::Coalgebra(_) => Err(Error::Parse("expected an algebra, got a hom-coalgebra file".into())),
        }
    }

    pub fn coalgebra(&self) -> Result<HomCoalgebra> {
        match &self.value {
            AlgebraValue::Coalgebra(c) => Ok(c.clone()),
            AlgebraValue::Bialgebra(h) => Ok(h.coalgebra().clone()),
            AlgebraValue::Algebra(_) => Err(Error::Parse("expected a coalgebra, got a hom-algebra file".into())),
        }
    }
}

impl LoadedAlgebra {
    /// Back to a file, basis names and `R`/form included.
    pub fn to_file(&self) -> Result<AlgebraFile> {
        let mut f = match &self.value {
            AlgebraValue::Bialgebra(h) => AlgebraFile::from_bialgebra(h, Some(self.basis.clone())),
            AlgebraValue::Algebra(a) => AlgebraFile::from_algebra(a, Some(self.basis.clone())),
            AlgebraValue::Coalgebra(_) => return Err(Error::Parse("cannot re-emit a bare hom-coalgebra".into())),
        };
        f.kind = self.kind;
        f.r = self.r.clone();
        f.form = self.form.clone();
        Ok(f)
    }

    pub fn inline(&self) -> Result<Source<AlgebraFile>> {
        Ok(Source::Inline(Box::new(self.to_file()?)))
    }
}

pub fn load_algebra(path: &Path) -> Result<LoadedAlgebra> {
    read_json::<AlgebraFile>(path)?.load()
}

fn resolve_algebra(src: &Source<AlgebraFile>, base: &Path) -> Result<LoadedAlgebra> {
    src.resolve(base)?.0.load()
}

/// Module definition file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    pub over: Source<AlgebraFile>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub action: Nested3,
    pub nu: Matrix,
}

/// Comodule definition file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleFile {
    pub over: Source<AlgebraFile>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub coaction: Nested3,
    pub mu: Matrix,
}

/// Yetter-Drinfeld module file: action and coaction with one structure map.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdFile {
    pub over: Source<AlgebraFile>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub action: Nested3,
    pub coaction: Nested3,
    pub structure_map: Matrix,
}

fn build_module(over: &LoadedAlgebra, dim: usize, action: &Nested3, nu: &Matrix) -> Result<HomModule> {
    check_matrix("nu", nu, dim, dim)?;
    let d = over.basis.len();
    HomModule::from_constants(&to_tensor("action", action, [d, dim, dim])?, nu.clone())
}

fn build_comodule(over: &LoadedAlgebra, dim: usize, coaction: &Nested3, mu: &Matrix) -> Result<HomComodule> {
    check_matrix("mu", mu, dim, dim)?;
    let d = over.basis.len();
    HomComodule::from_constants(&to_tensor("coaction", coaction, [dim, d, dim])?, mu.clone())
}

pub struct LoadedModule {
    pub over: LoadedAlgebra,
    pub basis: Vec<String>,
    pub module: HomModule,
}

pub struct LoadedComodule {
    pub over: LoadedAlgebra,
    pub basis: Vec<String>,
    pub comodule: HomComodule,
}

pub struct LoadedYd {
    pub over: LoadedAlgebra,
    pub basis: Vec<String>,
    pub yd: YetterDrinfeldModule,
}

impl ModuleFile {
    pub fn load(&self, base: &Path) -> Result<LoadedModule> {
        let over = resolve_algebra(&self.over, base)?;
        let module = build_module(&over, self.dim, &self.action, &self.nu)?;
        Ok(LoadedModule { basis: check_basis(&self.basis, self.dim, "m")?, over, module })
    }

    pub fn from_module(over: Source<AlgebraFile>, m: &HomModule, basis: Option<Vec<String>>) -> Self {
        Self { over, dim: m.dim(), basis, action: from_tensor(&m.action_constants()), nu: m.nu().clone() }
    }
}

impl ComoduleFile {
    pub fn load(&self, base: &Path) -> Result<LoadedComodule> {
        let over = resolve_algebra(&self.over, base)?;
        let comodule = build_comodule(&over, self.dim, &self.coaction, &self.mu)?;
        Ok(LoadedComodule { basis: check_basis(&self.basis, self.dim, "m")?, over, comodule })
    }

    pub fn from_comodule(over: Source<AlgebraFile>, m: &HomComodule, basis: Option<Vec<String>>) -> Self {
        Self { over, dim: m.dim(), basis, coaction: from_tensor(&m.coaction_constants()), mu: m.mu().clone() }
    }
}

impl YdFile {
    pub fn load(&self, base: &Path) -> Result<LoadedYd> {
        let over = resolve_algebra(&self.over, base)?;
        let module = build_module(&over, self.dim, &self.action, &self.structure_map)?;
        let comodule = build_comodule(&over, self.dim, &self.coaction, &self.structure_map)?;
        let yd = YetterDrinfeldModule::new(module, comodule)?;
        Ok(LoadedYd { basis: check_basis(&self.basis, self.dim, "m")?, over, yd })
    }

    pub fn from_yd(over: Source<AlgebraFile>, m: &YetterDrinfeldModule, basis: Option<Vec<String>>) -> Self {
        Self {
            over,
            dim: m.dim(),
            basis,
            action: from_tensor(&m.module().action_constants()),
            coaction: from_tensor(&m.comodule().coaction_constants()),
            structure_map: m.structure_map().clone(),
        }
    }
}

/// Dimodule definition file. Without `B` the file describes an
/// `(H, α)`-Long dimodule, i.e. `B = H`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DimoduleFile {
    #[serde(rename = "H")]
    pub h: Source<AlgebraFile>,
    #[serde(rename = "B", default, skip_serializing_if = "Option::is_none")]
    pub b: Option<Source<AlgebraFile>>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub action: Nested3,
    pub coaction: Nested3,
    pub mu: Matrix,
}

#[derive(Clone, Debug)]
pub struct LoadedDimodule {
    pub h: LoadedAlgebra,
    pub b: LoadedAlgebra,
    pub basis: Vec<String>,
    pub dimodule: HomLongDimodule,
}

impl LoadedDimodule {
    /// The dimodule as an `(H, α)`-Long dimodule; needs `B = H`.
    pub fn halpha(&self) -> Result<HAlphaLongDimodule> {
        if self.dimodule.h() != self.dimodule.b() {
            return Err(Error::MismatchedBase);
        }
        let d = &self.dimodule;
        HAlphaLongDimodule::new(d.h(), d.action().clone(), d.coaction().clone(), d.mu().clone())
    }
}

impl DimoduleFile {
    pub fn load(&self, base: &Path) -> Result<LoadedDimodule> {
        let h = resolve_algebra(&self.h, base)?;
        let b = match &self.b {
            Some(src) => resolve_algebra(src, base)?,
            None => h.clone(),
        };
        let (ha, ba) = (h.bialgebra()?, b.bialgebra()?);
        check_matrix("mu", &self.mu, self.dim, self.dim)?;
        let action = to_tensor("action", &self.action, [ha.dim(), self.dim, self.dim])?;
        let coaction = to_tensor("coaction", &self.coaction, [self.dim, ba.dim(), self.dim])?;
        let dimodule = HomLongDimodule::from_constants(&ha, &ba, &action, &coaction, self.mu.clone())?;
        Ok(LoadedDimodule { basis: check_basis(&self.basis, self.dim, "m")?, h, b, dimodule })
    }

    pub fn from_dimodule(
        h: Source<AlgebraFile>,
        b: Option<Source<AlgebraFile>>,
        d: &HomLongDimodule,
        basis: Option<Vec<String>>,
    ) -> Self {
        Self {
            h,
            b,
            dim: d.dim(),
            basis,
            action: from_tensor(&d.action_constants()),
            coaction: from_tensor(&d.coaction_constants()),
            mu: d.mu().clone(),
        }
    }
}

pub fn load_dimodule(path: &Path) -> Result<LoadedDimodule> {
    read_json::<DimoduleFile>(path)?.load(&dir_of(path))
}

/// Braiding context file. `R` and `form` fall back to the fields of the
/// same name in the `H` and `B` files. `unchecked` skips the QHA/CHA
/// validation so that corrupted contexts can be diagnosed.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ContextFile {
    #[serde(rename = "H")]
    pub h: Source<AlgebraFile>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Source<Matrix>>,
    #[serde(rename = "B")]
    pub b: Source<AlgebraFile>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<Source<Matrix>>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub unchecked: bool,
}

impl ContextFile {
    pub fn load(&self, base: &Path) -> Result<BraidingContext> {
        let h = resolve_algebra(&self.h, base)?;
        let b = resolve_algebra(&self.b, base)?;
        let r = match &self.r {
            Some(src) => src.resolve(base)?.0,
            None => h.r.clone().ok_or_else(|| Error::Parse("context has no R and the H file has none".into()))?,
        };
        let form = match &self.form {
            Some(src) => src.resolve(base)?.0,
            None => b.form.clone().ok_or_else(|| Error::Parse("context has no form and the B file has none".into()))?,
        };
        let (ha, ba) = (h.bialgebra()?, b.bialgebra()?);
        if self.unchecked {
            BraidingContext::new_unchecked(&ha, r, &ba, form)
        } else {
            BraidingContext::new(&ha, r, &ba, form)
        }
    }
}

pub fn load_context(path: &Path) -> Result<BraidingContext> {
    read_json::<ContextFile>(path)?.load(&dir_of(path))
}

pub fn load_operator(path: &Path) -> Result<crate::longeq::OperatorOnTensorSquare> {
    read_json(path)
}

pub fn load_matrix(path: &Path) -> Result<Matrix> {
    read_json(path)
}

/// A linear map with basis labels for its domain and codomain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelledMatrix {
    pub domain: Vec<String>,
    pub codomain: Vec<String>,
    pub matrix: Matrix,
}

/// `a⊗b` labels of a tensor product basis, first factor major.
pub fn tensor_labels(a: &[String], b: &[String]) -> Vec<String> {
    a.iter().flat_map(|x| b.iter().map(move |y| format!("{x}⊗{y}"))).collect()
}

/// The file kinds `validate` understands.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FileKind {
    Algebra,
    Module,
    Comodule,
    Yd,
    Dimodule,
    HalphaDimodule,
    Context,
    Operator,
}

impl std::str::FromStr for FileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        serde_json::from_value(serde_json::Value::String(s.into()))
            .map_err(|_| Error::Parse(format!("unknown file kind {s:?}")))
    }
}

/// Guesses the kind of a definition file from its top-level keys.
pub fn detect_kind(value: &serde_json::Value) -> Result<FileKind> {
    let obj = value.as_object().ok_or_else(|| Error::Parse("top level is not a JSON object".into()))?;
    let has = |k: &str| obj.contains_key(k);
    Ok(if has("kind") {
        FileKind::Algebra
    } else if has("H") && has("action") {
        if has("B") {
            FileKind::Dimodule
        } else {
            FileKind::HalphaDimodule
        }
    } else if has("H") && has("B") {
        FileKind::Context
    } else if has("over") && has("structure_map") {
        FileKind::Yd
    } else if has("over") && has("nu") {
        FileKind::Module
    } else if has("over") && has("coaction") {
        FileKind::Comodule
    } else if has("n") && has("matrix") {
        FileKind::Operator
    } else {
        return Err(Error::Parse("cannot tell what kind of definition file this is".into()));
    })
}
