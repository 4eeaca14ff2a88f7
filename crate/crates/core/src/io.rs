//! JSON file formats for structures, groups, crossed systems, comodule algebras and cleft data.
//!
//! Scalars are strings such as `"3/2"` or `"-1"` (plain integers are accepted too). Matrices
//! are row-major: `alpha[i][j]` is the coefficient of `e_i` in `α(e_j)`. Three-index arrays
//! `t[i][j][k]` are read as `e_i·e_j = Σ_k t[i][j][k] e_k` for products and actions, and as
//! `Δ(e_i) = Σ t[i][j][k] e_j⊗e_k` for coproducts and coactions. Paths inside system, comodule
//! and cleft files are resolved relative to the referencing file.

use std::fs;
use std::path::{Path, PathBuf};

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::cleft::{CleftData, ComoduleAlgebra};
use crate::crossed::{CrossedSystem, WeakAction};
use crate::error::{Error, Result};
use crate::homgroup::{FiniteGroup, HomGroup};
use crate::homstruct::{compute_antipode, HomAlgebra, HomCoalgebra, HomHopf};
use crate::linalg::{Field, LabeledSpace, LinMap, Matrix, Scalar, Vector};

/// A scalar as written in a file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Text(String),
    Int(i64),
}

impl ScalarRepr {
    fn parse(&self, field: Field) -> Result<Scalar> {
        match self {
            ScalarRepr::Text(s) => field.parse(s),
            ScalarRepr::Int(n) => Ok(field.from_i64(*n)),
        }
    }
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        ScalarRepr::Text(s.to_string())
    }
}

pub type MatrixRepr = Vec<Vec<ScalarRepr>>;
pub type Tensor3Repr = Vec<Vec<Vec<ScalarRepr>>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StructureKind {
    HomAlgebra,
    HomCoalgebra,
    HomBialgebra,
    HomHopf,
}

/// Structure-constant file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureFile {
    pub kind: StructureKind,
    pub field: Field,
    pub basis: Vec<String>,
    pub alpha: MatrixRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult: Option<Tensor3Repr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unit: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub comult: Option<Tensor3Repr>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counit: Option<Vec<ScalarRepr>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<MatrixRepr>,
}

/// A parsed structure file.
#[derive(Clone, Debug)]
pub enum Structure {
    Algebra(HomAlgebra),
    Coalgebra(HomCoalgebra),
    Bialgebra(HomAlgebra, HomCoalgebra),
    Hopf(HomHopf),
}

fn vector_from(field: Field, v: &[ScalarRepr], n: usize, what: &str) -> Result<Vector> {
    if v.len() != n {
        return Err(Error::Parse(format!("{what} has length {}, expected {n}", v.len())));
    }
    v.iter().map(|x| x.parse(field)).collect()
}

fn matrix_from(
    field: Field,
    m: &MatrixRepr,
    domain: &LabeledSpace,
    codomain: &LabeledSpace,
    what: &str,
) -> Result<LinMap> {
    if m.len() != codomain.dim() {
        return Err(Error::Parse(format!(
            "{what} has {} rows, expected {}",
            m.len(),
            codomain.dim()
        )));
    }
    let rows = m
        .iter()
        .enumerate()
        .map(|(i, r)| vector_from(field, r, domain.dim(), &format!("{what} row {i}")))
        .collect::<Result<Vec<_>>>()?;
    let matrix = Matrix::from_rows(field, rows, domain.dim())?;
    LinMap::new(field, domain.clone(), codomain.clone(), matrix)
}

fn matrix_to(m: &LinMap) -> MatrixRepr {
    (0..m.codomain().dim())
        .map(|r| m.matrix().row(r).iter().map(ScalarRepr::from).collect())
        .collect()
}

/// `t[i][j]` is the image of `e_i⊗e_j` in `codomain`.
fn bilinear_from(
    field: Field,
    t: &Tensor3Repr,
    left: &LabeledSpace,
    right: &LabeledSpace,
    codomain: &LabeledSpace,
    what: &str,
) -> Result<LinMap> {
    if t.len() != left.dim() || t.iter().any(|r| r.len() != right.dim()) {
        return Err(Error::Parse(format!(
            "{what} must be a {}×{}×{} array",
            left.dim(),
            right.dim(),
            codomain.dim()
        )));
    }
    let mut cols = Vec::with_capacity(left.dim() * right.dim());
    for (i, row) in t.iter().enumerate() {
        for (j, v) in row.iter().enumerate() {
            cols.push(vector_from(field, v, codomain.dim(), &format!("{what}[{i}][{j}]"))?);
        }
    }
    LinMap::from_columns(field, left.tensor(right), codomain.clone(), &cols)
}

fn bilinear_to(m: &LinMap, left: usize, right: usize) -> Tensor3Repr {
    (0..left)
        .map(|i| {
            (0..right)
                .map(|j| m.column(i * right + j).iter().map(ScalarRepr::from).collect())
                .collect()
        })
        .collect()
}

/// `t[i][j][k]` is the coefficient of `e_j⊗e_k` in the image of `e_i`.
fn colinear_from(
    field: Field,
    t: &Tensor3Repr,
    domain: &LabeledSpace,
    left: &LabeledSpace,
    right: &LabeledSpace,
    what: &str,
) -> Result<LinMap> {
    if t.len() != domain.dim() || t.iter().any(|r| r.len() != left.dim()) {
        return Err(Error::Parse(format!(
            "{what} must be a {}×{}×{} array",
            domain.dim(),
            left.dim(),
            right.dim()
        )));
    }
    let mut cols = Vec::with_capacity(domain.dim());
    for (i, block) in t.iter().enumerate() {
        let mut col = Vec::with_capacity(left.dim() * right.dim());
        for (j, v) in block.iter().enumerate() {
            col.extend(vector_from(field, v, right.dim(), &format!("{what}[{i}][{j}]"))?);
        }
        cols.push(col);
    }
    LinMap::from_columns(field, domain.clone(), left.tensor(right), &cols)
}

fn colinear_to(m: &LinMap, right: usize) -> Tensor3Repr {
    (0..m.domain().dim())
        .map(|i| {
            m.column(i)
                .chunks(right)
                .map(|c| c.iter().map(ScalarRepr::from).collect())
                .collect()
        })
        .collect()
}

impl StructureFile {
    pub fn space(&self) -> Result<LabeledSpace> {
        if self.basis.is_empty() {
            return Err(Error::Parse("basis is empty".into()));
        }
        LabeledSpace::new(self.basis.iter().cloned())
    }

    fn algebra(&self, field: Field, space: &LabeledSpace, alpha: &LinMap) -> Result<HomAlgebra> {
        let mult = self
            .mult
            .as_ref()
            .ok_or_else(|| Error::Parse("missing field `mult`".into()))?;
        let unit = self
            .unit
            .as_ref()
            .ok_or_else(|| Error::Parse("missing field `unit`".into()))?;
        let mult = bilinear_from(field, mult, space, space, space, "mult")?;
        let unit = vector_from(field, unit, space.dim(), "unit")?;
        HomAlgebra::new(alpha.clone(), mult, unit)
    }

    fn coalgebra(&self, field: Field, space: &LabeledSpace, alpha: &LinMap) -> Result<HomCoalgebra> {
        let comult = self
            .comult
            .as_ref()
            .ok_or_else(|| Error::Parse("missing field `comult`".into()))?;
        let counit = self
            .counit
            .as_ref()
            .ok_or_else(|| Error::Parse("missing field `counit`".into()))?;
        let comult = colinear_from(field, comult, space, space, space, "comult")?;
        let counit = vector_from(field, counit, space.dim(), "counit")?;
        let counit = LinMap::from_fn(field, space.clone(), LabeledSpace::ground(), |i| {
            vec![counit[i].clone()]
        })?;
        HomCoalgebra::new(alpha.clone(), comult, counit)
    }

    /// Builds the declared structure; `field` overrides the file's field when given. A Hopf file
    /// without `antipode` gets one computed.
    pub fn build(&self, field: Option<Field>) -> Result<Structure> {
        let field = field.unwrap_or(self.field);
        let space = self.space()?;
        let alpha = matrix_from(field, &self.alpha, &space, &space, "alpha")?;
        Ok(match self.kind {
            StructureKind::HomAlgebra => Structure::Algebra(self.algebra(field, &space, &alpha)?),
            StructureKind::HomCoalgebra => {
                Structure::Coalgebra(self.coalgebra(field, &space, &alpha)?)
            }
            StructureKind::HomBialgebra => Structure::Bialgebra(
                self.algebra(field, &space, &alpha)?,
                self.coalgebra(field, &space, &alpha)?,
            ),
            StructureKind::HomHopf => {
                let a = self.algebra(field, &space, &alpha)?;
                let c = self.coalgebra(field, &space, &alpha)?;
                let s = match &self.antipode {
                    Some(m) => matrix_from(field, m, &space, &space, "antipode")?,
                    None => compute_antipode(&a, &c)?,
                };
                Structure::Hopf(HomHopf::new(a, c, s)?)
            }
        })
    }

    pub fn build_algebra(&self, field: Option<Field>) -> Result<HomAlgebra> {
        match self.build(field)? {
            Structure::Algebra(a) | Structure::Bialgebra(a, _) => Ok(a),
            Structure::Hopf(h) => Ok(h.algebra),
            Structure::Coalgebra(_) => Err(Error::Parse("expected an algebra file".into())),
        }
    }

    pub fn build_hopf(&self, field: Option<Field>) -> Result<HomHopf> {
        match self.build(field)? {
            Structure::Hopf(h) => Ok(h),
            _ => Err(Error::Parse("expected a hom_hopf file".into())),
        }
    }

    pub fn from_algebra(a: &HomAlgebra) -> Self {
        Self {
            kind: StructureKind::HomAlgebra,
            field: a.field(),
            basis: a.space().labels().to_vec(),
            alpha: matrix_to(a.alpha()),
            mult: Some(bilinear_to(a.mult(), a.dim(), a.dim())),
            unit: Some(a.unit().iter().map(ScalarRepr::from).collect()),
            comult: None,
            counit: None,
            antipode: None,
        }
    }

    pub fn from_hopf(h: &HomHopf) -> Self {
        let mut f = Self::from_algebra(&h.algebra);
        f.kind = StructureKind::HomHopf;
        f.comult = Some(colinear_to(h.coalgebra.comult(), h.dim()));
        f.counit = Some(
            h.coalgebra
                .counit()
                .matrix()
                .row(0)
                .iter()
                .map(ScalarRepr::from)
                .collect(),
        );
        f.antipode = Some(matrix_to(&h.antipode));
        f
    }
}

/// Group file: a table over labels plus an automorphism permutation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub labels: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub automorphism: Vec<usize>,
}

impl GroupFile {
    pub fn build(&self) -> Result<HomGroup> {
        if self.labels.len() != self.order {
            return Err(Error::Parse(format!(
                "{} labels for order {}",
                self.labels.len(),
                self.order
            )));
        }
        let name = self.name.clone().unwrap_or_else(|| "G".into());
        let g = FiniteGroup::new(name, self.labels.clone(), self.table.clone())?;
        HomGroup::new(g, self.automorphism.clone())
    }

    pub fn from_hom_group(hg: &HomGroup) -> Self {
        let g = hg.group();
        Self {
            name: Some(g.name().to_string()),
            order: g.order(),
            labels: g.labels().to_vec(),
            table: g.table().to_vec(),
            automorphism: hg.auto().to_vec(),
        }
    }
}

/// Crossed system file: `action[h][a]` is `h·a`, `sigma[h][k]` is `σ(h, k)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SystemFile {
    pub algebra: String,
    pub hopf: String,
    pub action: Tensor3Repr,
    pub sigma: Tensor3Repr,
}

impl SystemFile {
    pub fn build(&self, base: &Path, field: Option<Field>) -> Result<CrossedSystem> {
        let a = load_structure(&resolve(base, &self.algebra))?;
        let h = load_structure(&resolve(base, &self.hopf))?;
        let field = field.unwrap_or(a.field);
        let a = a.build_algebra(Some(field))?;
        let h = h.build_hopf(Some(field))?;
        let act = bilinear_from(field, &self.action, h.space(), a.space(), a.space(), "action")?;
        let sigma = bilinear_from(field, &self.sigma, h.space(), h.space(), a.space(), "sigma")?;
        CrossedSystem::new(WeakAction::new(h, a, act)?, sigma)
    }

    pub fn from_system(s: &CrossedSystem, algebra: &str, hopf: &str) -> Self {
        let (na, nh) = (s.a().dim(), s.h().dim());
        Self {
            algebra: algebra.into(),
            hopf: hopf.into(),
            action: bilinear_to(&s.action.act, nh, na),
            sigma: bilinear_to(&s.sigma, nh, nh),
        }
    }
}

/// Comodule-algebra file: `rho[i][j][k]` is the coefficient of `e_j⊗h_k` in `ρ(e_i)`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComoduleFile {
    pub algebra: String,
    pub hopf: String,
    pub rho: Tensor3Repr,
}

impl ComoduleFile {
    pub fn build(&self, base: &Path, field: Option<Field>) -> Result<ComoduleAlgebra> {
        let b = load_structure(&resolve(base, &self.algebra))?;
        let h = load_structure(&resolve(base, &self.hopf))?;
        let field = field.unwrap_or(b.field);
        let b = b.build_algebra(Some(field))?;
        let h = h.build_hopf(Some(field))?;
        let rho = colinear_from(field, &self.rho, b.space(), b.space(), h.space(), "rho")?;
        ComoduleAlgebra::new(b, h, rho)
    }

    pub fn from_comodule(c: &ComoduleAlgebra, algebra: &str, hopf: &str) -> Self {
        Self {
            algebra: algebra.into(),
            hopf: hopf.into(),
            rho: colinear_to(&c.rho, c.h.dim()),
        }
    }
}

/// Cleft file: a comodule file plus `gamma` and optionally `gamma_inv`, both `H → B` matrices.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CleftFile {
    pub comodule: String,
    pub gamma: MatrixRepr,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_inv: Option<MatrixRepr>,
}

impl CleftFile {
    pub fn build(&self, base: &Path, field: Option<Field>) -> Result<CleftData> {
        let path = resolve(base, &self.comodule);
        let comod: ComoduleFile = read_json(&path)?;
        let comod = comod.build(parent_dir(&path), field)?;
        let f = comod.field();
        let gamma = matrix_from(f, &self.gamma, comod.h.space(), comod.b.space(), "gamma")?;
        let gamma_inv = self
            .gamma_inv
            .as_ref()
            .map(|m| matrix_from(f, m, comod.h.space(), comod.b.space(), "gamma_inv"))
            .transpose()?;
        CleftData::new(comod, gamma, gamma_inv)
    }

    pub fn from_cleft(cd: &CleftData, comodule: &str) -> Self {
        Self {
            comodule: comodule.into(),
            gamma: matrix_to(&cd.gamma),
            gamma_inv: Some(matrix_to(&cd.gamma_inv)),
        }
    }
}

pub fn parent_dir(path: &Path) -> &Path {
    path.parent().unwrap_or_else(|| Path::new("."))
}

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

pub fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("serializable");
    text.push('\n');
    fs::write(path, text).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })
}

pub fn load_structure(path: &Path) -> Result<StructureFile> {
    read_json(path)
}
