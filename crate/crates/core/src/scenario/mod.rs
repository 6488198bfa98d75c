//! Declarative scenario files: structure constants plus an ordered task list,
//! resolved into engine objects and run into a versioned report.

mod export;
mod report;
mod run;

use std::collections::BTreeMap;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::algcore::{AlgebraData, CoalgebraData, ComoduleData, Side};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Matrix, Scalar, SparseVec};
use crate::hopfalgebroid::{gallery, HopfAlgebroidData, LeftBialgebroidData, SaydModuleData, YdAlgebraData};
use crate::lierinehart::{examples as lr_examples, LieRinehartData};
use crate::measuring::{examples as m_examples, ComoduleMeasuringData, MeasuringData};
use crate::operadcyc::{build_yd_comp_module, build_yd_operad, examples as op_examples, CompModuleData, OperadData};

pub use export::{algebra_spec, coalgebra_spec, hopf_spec, measuring_spec};
pub use report::{emit, Format, ReportDocument, TaskReport, TaskStatus};
pub use run::{run, RunOptions};

pub const SCHEMA_VERSION: u32 = 1;

/// Sparse constants: each row is indices followed by numerator and denominator.
pub type Constants = Vec<Vec<i64>>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioDocument {
    pub version: u32,
    /// `"Q"` or `"F<p>"`.
    pub field: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub algebras: BTreeMap<String, AlgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub coalgebras: BTreeMap<String, CoalgebraSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub hopf_algebroids: BTreeMap<String, HopfSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub sayd_modules: BTreeMap<String, SaydSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub measurings: BTreeMap<String, MeasuringSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comodule_measurings: BTreeMap<String, ComoduleMeasuringSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub lie_rinehart: BTreeMap<String, ExampleSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub yd_algebras: BTreeMap<String, YdSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub operads: BTreeMap<String, OperadSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub comp_modules: BTreeMap<String, CompModuleSpec>,
    #[serde(default)]
    pub tasks: Vec<TaskSpec>,
}

/// `mul` rows `[i, j, k, num, den]`: `e_i e_j += (num/den) e_k`; `unit` rows `[i, num, den]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub dim: usize,
    pub mul: Constants,
    pub unit: Constants,
}

/// `comul` rows `[i, j, k, num, den]`: `Δ e_i += (num/den) e_j ⊗ e_k`; `counit` rows `[i, num, den]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoalgebraSpec {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub basis: Vec<String>,
    pub comul: Constants,
    pub counit: Constants,
}

/// Either a gallery name or explicit maps. Map rows `[src, dst, num, den]`
/// mean `f(e_src) += (num/den) e_dst`; `delta` rows are `[u, v, w, num, den]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum HopfSpec {
    Gallery {
        gallery: String,
    },
    Explicit {
        total: String,
        base: String,
        source: Constants,
        target: Constants,
        delta: Constants,
        counit: Constants,
        antipode: Constants,
    },
}

/// `action` rows `[p, u, q, num, den]`: `p·u += c q`; `coaction` rows
/// `[p, u, q, num, den]`: `p ↦ … + c u ⊗ q`. `base: true` is `P = A`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SaydSpec {
    pub hopf: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub base: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub action: Constants,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub coaction: Constants,
}

/// `big` rows `[x, u, v, num, den]`: `Ψ(c_x)(e_u) += c e_v`; `small` likewise on `A`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MeasuringSpec {
    pub coalgebra: String,
    pub source: String,
    pub target: String,
    pub big: Constants,
    pub small: Constants,
}

/// `D = C` coacting on itself; `omega` rows `[y, p, q, num, den]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComoduleMeasuringSpec {
    pub measuring: String,
    pub source: String,
    pub target: String,
    pub omega: Constants,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExampleSpec {
    pub example: String,
}

/// `example` is `trivial` (`Z = k`) or `regular` (`k[G]` coacting by `Δ`).
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdSpec {
    pub hopf: String,
    pub example: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum OperadSpec {
    Point { arity: usize },
    Yd { hopf: String, z: String, arity: usize },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum CompModuleSpec {
    Point { operad: String, degree: usize },
    Yd { operad: String, coefficients: String, z: String, degree: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TaskKind {
    Validate,
    Homology,
    Measure,
    Induced,
    HopfGalois,
}

impl TaskKind {
    pub fn name(self) -> &'static str {
        match self {
            TaskKind::Validate => "validate",
            TaskKind::Homology => "homology",
            TaskKind::Measure => "measure",
            TaskKind::Induced => "induced",
            TaskKind::HopfGalois => "hopf_galois",
        }
    }
}

/// Which (co)cyclic module a task refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ComplexKind {
    Cyclic,
    Cocyclic,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TheoryKind {
    #[serde(rename = "HH")]
    Hh,
    #[serde(rename = "HH_normalized")]
    HhNormalized,
    #[serde(rename = "HC")]
    Hc,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementRef {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TaskSpec {
    pub kind: TaskKind,
    pub object: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theory: Option<TheoryKind>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_degree: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub element: Option<ElementRef>,
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    match s.trim() {
        "Q" | "QQ" => Ok(FieldSpec::Rationals),
        other => {
            let p = other
                .strip_prefix('F')
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| Error::Parse(format!("field {other:?}: expected \"Q\" or \"F<p>\"")))?;
            Ok(FieldSpec::prime(p)?)
        }
    }
}

/// Reads and validates a scenario: JSON syntax, schema version, field and every reference.
pub fn parse_scenario(path: &Path) -> Result<ScenarioDocument> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let doc = parse_scenario_str(&text).map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })?;
    Ok(doc)
}

pub fn parse_scenario_str(text: &str) -> Result<ScenarioDocument> {
    let doc: ScenarioDocument =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("line {} column {}: {e}", e.line(), e.column())))?;
    if doc.version != SCHEMA_VERSION {
        return Err(Error::Parse(format!("unsupported scenario version {}", doc.version)));
    }
    let field = parse_field(&doc.field)?;
    Objects::resolve(&doc, field)?;
    Ok(doc)
}

/// The engine objects named by a document.
#[derive(Clone, Debug, Default)]
pub struct Objects {
    pub algebras: BTreeMap<String, AlgebraData>,
    pub coalgebras: BTreeMap<String, (CoalgebraData, Vec<String>)>,
    pub hopf: BTreeMap<String, HopfAlgebroidData>,
    pub sayd: BTreeMap<String, SaydModuleData>,
    pub measurings: BTreeMap<String, MeasuringData>,
    pub comodule_measurings: BTreeMap<String, ComoduleMeasuringData>,
    pub lie_rinehart: BTreeMap<String, LieRinehartData>,
    pub yd: BTreeMap<String, YdAlgebraData>,
    pub operads: BTreeMap<String, OperadData>,
    pub comp_modules: BTreeMap<String, (String, CompModuleData)>,
}

fn lookup<'a, T>(map: &'a BTreeMap<String, T>, what: &str, name: &str, from: &str) -> Result<&'a T> {
    map.get(name).ok_or_else(|| Error::Reference(format!("{what} {name:?} referenced by {from:?}")))
}

fn scalar(f: FieldSpec, row: &[i64], at: &str) -> Result<Scalar> {
    let [n, d] = row[row.len() - 2..] else { unreachable!() };
    f.from_frac(n, d).map_err(|e| Error::Parse(format!("{at}: {e}")))
}

/// Splits rows of `k` indices plus a fraction, checking each index against `bounds`.
fn rows(f: FieldSpec, c: &Constants, bounds: &[usize], at: &str) -> Result<Vec<(Vec<usize>, Scalar)>> {
    c.iter()
        .enumerate()
        .map(|(r, row)| {
            let here = format!("{at} row {r}");
            if row.len() != bounds.len() + 2 {
                return Err(Error::Parse(format!("{here}: expected {} entries, found {}", bounds.len() + 2, row.len())));
            }
            let ix = row[..bounds.len()]
                .iter()
                .zip(bounds)
                .map(|(&i, &b)| {
                    usize::try_from(i)
                        .ok()
                        .filter(|&i| i < b)
                        .ok_or_else(|| Error::DimensionMismatch(format!("{here}: index {i} out of range 0..{b}")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok((ix, scalar(f, row, &here)?))
        })
        .collect()
}

fn vector(f: FieldSpec, dim: usize, c: &Constants, at: &str) -> Result<SparseVec> {
    let mut acc = crate::exactlin::Accum::new(dim);
    for (ix, s) in rows(f, c, &[dim], at)? {
        acc.add(ix[0], &s);
    }
    Ok(acc.finish())
}

/// Map rows `[src, dst, c]` as a `dst_dim x src_dim` matrix.
fn map(f: FieldSpec, src: usize, dst: usize, c: &Constants, at: &str) -> Result<Matrix> {
    let t = rows(f, c, &[src, dst], at)?.into_iter().map(|(ix, s)| (ix[1], ix[0], s));
    Ok(Matrix::from_triplets(f, dst, src, t))
}

/// Rows `[x, src, dst, c]` as one matrix per `x`.
fn map_family(f: FieldSpec, n: usize, src: usize, dst: usize, c: &Constants, at: &str) -> Result<Vec<Matrix>> {
    let all = rows(f, c, &[n, src, dst], at)?;
    Ok((0..n)
        .map(|x| {
            let t = all.iter().filter(|(ix, _)| ix[0] == x).map(|(ix, s)| (ix[2], ix[1], s.clone()));
            Matrix::from_triplets(f, dst, src, t)
        })
        .collect())
}

impl Objects {
    pub fn resolve(doc: &ScenarioDocument, f: FieldSpec) -> Result<Objects> {
        let mut o = Objects::default();
        for (name, a) in &doc.algebras {
            let at = format!("algebra {name}");
            let t = rows(f, &a.mul, &[a.dim, a.dim, a.dim], &at)?;
            let unit = vector(f, a.dim, &a.unit, &at)?;
            let alg = AlgebraData::from_constants(f, a.dim, name, t.into_iter().map(|(i, c)| (i[0], i[1], i[2], c)), unit)?;
            o.algebras.insert(name.clone(), alg);
        }
        for (name, c) in &doc.coalgebras {
            let at = format!("coalgebra {name}");
            if !c.basis.is_empty() && c.basis.len() != c.dim {
                return Err(Error::DimensionMismatch(format!("{at}: {} basis names for dimension {}", c.basis.len(), c.dim)));
            }
            let t = rows(f, &c.comul, &[c.dim, c.dim, c.dim], &at)?;
            let eps = vector(f, c.dim, &c.counit, &at)?;
            let counit: Vec<Scalar> = (0..c.dim).map(|i| eps.get(i).cloned().unwrap_or_else(|| f.zero())).collect();
            let co = CoalgebraData::from_constants(f, c.dim, name, t.into_iter().map(|(i, s)| (i[0], i[1], i[2], s)), &counit)?;
            o.coalgebras.insert(name.clone(), (co, c.basis.clone()));
        }
        for (name, h) in &doc.hopf_algebroids {
            let at = format!("hopf algebroid {name}");
            let data = match h {
                HopfSpec::Gallery { gallery: g } => {
                    let mut d = gallery::by_name(g, f).map_err(|_| Error::Reference(format!("gallery algebroid {g:?} in {at}")))?;
                    d.bialgebroid.label = name.clone();
                    d
                }
                HopfSpec::Explicit { total, base, source, target, delta, counit, antipode } => {
                    let u = lookup(&o.algebras, "algebra", total, &at)?.clone();
                    let a = lookup(&o.algebras, "algebra", base, &at)?.clone();
                    let (du, da) = (u.dim(), a.dim());
                    let s = map(f, da, du, source, &format!("{at} source"))?;
                    let t = map(f, da, du, target, &format!("{at} target"))?;
                    let d = rows(f, delta, &[du, du, du], &format!("{at} delta"))?;
                    let d = Matrix::from_triplets(f, du * du, du, d.into_iter().map(|(i, c)| (i[1] * du + i[2], i[0], c)));
                    let e = map(f, du, da, counit, &format!("{at} counit"))?;
                    let sa = map(f, du, du, antipode, &format!("{at} antipode"))?;
                    HopfAlgebroidData::new(LeftBialgebroidData::new(name, u, a, s, t, d, e)?, sa)?
                }
            };
            o.hopf.insert(name.clone(), data);
        }
        for (name, p) in &doc.sayd_modules {
            let at = format!("sayd module {name}");
            let h = lookup(&o.hopf, "hopf algebroid", &p.hopf, &at)?;
            let m = if p.base {
                let mut m = SaydModuleData::base(h);
                m.label = name.clone();
                m
            } else {
                let dim = p.dim.ok_or_else(|| Error::Parse(format!("{at}: needs either base or dim")))?;
                let du = h.du();
                let act = rows(f, &p.action, &[dim, du, dim], &format!("{at} action"))?;
                let action = Matrix::from_triplets(f, dim, dim * du, act.into_iter().map(|(i, c)| (i[2], i[0] * du + i[1], c)));
                let co = rows(f, &p.coaction, &[dim, du, dim], &format!("{at} coaction"))?;
                let coaction = Matrix::from_triplets(f, du * dim, dim, co.into_iter().map(|(i, c)| (i[1] * dim + i[2], i[0], c)));
                SaydModuleData::new(h, name, dim, action, coaction)?
            };
            o.sayd.insert(name.clone(), m);
        }
        for (name, y) in &doc.yd_algebras {
            let at = format!("yd algebra {name}");
            let h = lookup(&o.hopf, "hopf algebroid", &y.hopf, &at)?;
            let mut z = match y.example.as_str() {
                "trivial" => YdAlgebraData::trivial(h)?,
                "regular" if h.da() == 1 && h.du() == 2 => m_examples::c2_regular_yd(h),
                other => return Err(Error::Reference(format!("yd example {other:?} in {at}"))),
            };
            z.label = name.clone();
            o.yd.insert(name.clone(), z);
        }
        for (name, e) in &doc.lie_rinehart {
            let mut d = match e.example.as_str() {
                "affine" => lr_examples::affine(f),
                "affine_with_trace" => lr_examples::affine_with_trace(f),
                "heisenberg" => lr_examples::heisenberg(f),
                "sl2" => lr_examples::sl2(f),
                "dual_numbers_euler" => lr_examples::dual_numbers_euler(f),
                other => return Err(Error::Reference(format!("lie-rinehart example {other:?} in {name}"))),
            };
            d.label = name.clone();
            o.lie_rinehart.insert(name.clone(), d);
        }
        for (name, m) in &doc.measurings {
            let at = format!("measuring {name}");
            let (c, _) = lookup(&o.coalgebras, "coalgebra", &m.coalgebra, &at)?;
            let s = lookup(&o.hopf, "hopf algebroid", &m.source, &at)?;
            let t = lookup(&o.hopf, "hopf algebroid", &m.target, &at)?;
            let big = map_family(f, c.dim(), s.du(), t.du(), &m.big, &format!("{at} big"))?;
            let small = map_family(f, c.dim(), s.da(), t.da(), &m.small, &format!("{at} small"))?;
            let md = MeasuringData::new(name, c.clone(), s.clone(), t.clone(), big, small)?;
            o.measurings.insert(name.clone(), md);
        }
        for (name, cm) in &doc.comodule_measurings {
            let at = format!("comodule measuring {name}");
            let base = lookup(&o.measurings, "measuring", &cm.measuring, &at)?;
            let p = lookup(&o.sayd, "sayd module", &cm.source, &at)?;
            let p2 = lookup(&o.sayd, "sayd module", &cm.target, &at)?;
            let d = ComoduleData::regular(&base.c, Side::Right);
            let omega = map_family(f, base.c.dim(), p.dim(), p2.dim(), &cm.omega, &format!("{at} omega"))?;
            let data = ComoduleMeasuringData::new(name, base.clone(), d, p.clone(), p2.clone(), omega)?;
            o.comodule_measurings.insert(name.clone(), data);
        }
        for (name, op) in &doc.operads {
            let at = format!("operad {name}");
            let mut data = match op {
                OperadSpec::Point { arity } => op_examples::point_operad(f, *arity),
                OperadSpec::Yd { hopf, z, arity } => {
                    let h = lookup(&o.hopf, "hopf algebroid", hopf, &at)?;
                    let z = lookup(&o.yd, "yd algebra", z, &at)?;
                    build_yd_operad(h, z, *arity)?
                }
            };
            data.label = name.clone();
            o.operads.insert(name.clone(), data);
        }
        for (name, cm) in &doc.comp_modules {
            let at = format!("comp module {name}");
            let (operad, mut data) = match cm {
                CompModuleSpec::Point { operad, degree } => {
                    let op = lookup(&o.operads, "operad", operad, &at)?;
                    (operad.clone(), op_examples::point_comp_module(f, op.top(), *degree))
                }
                CompModuleSpec::Yd { operad, coefficients, z, degree } => {
                    let op = lookup(&o.operads, "operad", operad, &at)?;
                    let l = lookup(&o.sayd, "sayd module", coefficients, &at)?;
                    let z = lookup(&o.yd, "yd algebra", z, &at)?;
                    (operad.clone(), build_yd_comp_module(op, l, z, *degree)?)
                }
            };
            data.label = name.clone();
            o.comp_modules.insert(name.clone(), (operad, data));
        }
        for (i, t) in doc.tasks.iter().enumerate() {
            if !o.has(&t.object) {
                return Err(Error::Reference(format!("object {:?} referenced by task {i}", t.object)));
            }
        }
        Ok(o)
    }

    pub fn has(&self, name: &str) -> bool {
        self.algebras.contains_key(name)
            || self.coalgebras.contains_key(name)
            || self.hopf.contains_key(name)
            || self.sayd.contains_key(name)
            || self.measurings.contains_key(name)
            || self.comodule_measurings.contains_key(name)
            || self.lie_rinehart.contains_key(name)
            || self.yd.contains_key(name)
            || self.operads.contains_key(name)
            || self.comp_modules.contains_key(name)
    }
}
