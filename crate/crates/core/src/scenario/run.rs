use rayon::prelude::*;

use crate::cyclichom::{
    build_cocyclic_cu, build_cocyclic_with_coeffs, build_cyclic_cu, build_cyclic_with_coeffs, check_cyclic_module,
    check_morphism, cyclic_homology_char0, hochschild_homology, hopf_galois_square, hopf_galois_square_coeffs,
    induced_coeff_maps, induced_map_on_homology, induced_maps, normalized_hochschild_homology, CyclicModuleData,
    InducedSide, Variant, N_MAX,
};
use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, SparseVec};
use crate::hopfalgebroid::{check_hopf_algebroid, check_sayd, check_yd_algebra};
use crate::lierinehart::{check_lie_rinehart, check_lr_complex, lr_complex, lr_homology};
use crate::measuring::{check_hopf_algebroid_measuring, check_sayd_comodule_measuring};
use crate::operadcyc::{check_comp_module, check_operad, comp_cyclic_module};

use super::report::{matrix_strings, ErrorRecord, HomologyTable};
use super::{
    parse_field, ComplexKind, ElementRef, Objects, ReportDocument, ScenarioDocument, TaskKind, TaskReport, TaskSpec,
    TheoryKind,
};

#[derive(Clone, Debug, Default)]
pub struct RunOptions {
    /// Overrides every task's `max_degree`.
    pub max_degree: Option<usize>,
    /// Overrides the document's field.
    pub field: Option<FieldSpec>,
    /// Restricts to these task kinds; empty runs everything.
    pub kinds: Vec<TaskKind>,
    pub parallel: bool,
}

/// Executes the selected tasks in document order. Object resolution errors are
/// returned; errors inside a task are recorded in that task only.
pub fn run(doc: &ScenarioDocument, opts: &RunOptions) -> Result<ReportDocument> {
    let field = match opts.field {
        Some(f) => f,
        None => parse_field(&doc.field)?,
    };
    let objects = Objects::resolve(doc, field)?;
    let selected: Vec<(usize, &TaskSpec)> =
        doc.tasks.iter().enumerate().filter(|(_, t)| opts.kinds.is_empty() || opts.kinds.contains(&t.kind)).collect();
    let go = |(i, t): &(usize, &TaskSpec)| {
        let mut rep = TaskReport::new(*i, t.kind.name(), &t.object);
        if let Err(e) = run_task(doc, &objects, t, opts, &mut rep) {
            rep.error = Some(ErrorRecord::from(&e));
        }
        rep.settle()
    };
    let tasks = if opts.parallel { selected.par_iter().map(go).collect() } else { selected.iter().map(go).collect() };
    Ok(ReportDocument { tasks, ..ReportDocument::default() })
}

fn degree(t: &TaskSpec, opts: &RunOptions) -> usize {
    opts.max_degree.or(t.max_degree).unwrap_or(N_MAX - 1)
}

fn variant(t: &TaskSpec) -> Variant {
    match t.theory.unwrap_or(TheoryKind::Hc) {
        TheoryKind::Hh => Variant::Hochschild,
        TheoryKind::HhNormalized => Variant::Normalized,
        TheoryKind::Hc => Variant::Cyclic,
    }
}

fn complex(t: &TaskSpec) -> ComplexKind {
    t.complex.unwrap_or(ComplexKind::Cyclic)
}

/// The (co)cyclic module an object names, truncated at `top`.
fn module_of(o: &Objects, t: &TaskSpec, top: usize) -> Result<Option<CyclicModuleData>> {
    let name = t.object.as_str();
    if let Some(h) = o.hopf.get(name) {
        return Ok(Some(match complex(t) {
            ComplexKind::Cyclic => build_cyclic_cu(h, top)?,
            ComplexKind::Cocyclic => build_cocyclic_cu(h, top)?,
        }));
    }
    if let Some(p) = o.sayd.get(name) {
        return Ok(Some(match complex(t) {
            ComplexKind::Cyclic => build_cyclic_with_coeffs(p, top)?,
            ComplexKind::Cocyclic => build_cocyclic_with_coeffs(p, top)?,
        }));
    }
    if let Some((op, l)) = o.comp_modules.get(name) {
        return Ok(Some(comp_cyclic_module(&o.operads[op], l, top)?));
    }
    Ok(None)
}

fn element(o: &Objects, t: &TaskSpec, coalgebra: &str) -> Result<SparseVec> {
    let (c, names) = &o.coalgebras[coalgebra];
    let r = t.element.as_ref().ok_or_else(|| Error::InvalidData(format!("task on {:?} needs an element", t.object)))?;
    let i = match r {
        ElementRef::Index(i) => Some(*i).filter(|&i| i < c.dim()),
        ElementRef::Name(n) => names.iter().position(|b| b == n),
    }
    .ok_or_else(|| Error::Reference(format!("element {r:?} of coalgebra {coalgebra:?}")))?;
    Ok(c.basis(i))
}

fn run_task(doc: &ScenarioDocument, o: &Objects, t: &TaskSpec, opts: &RunOptions, rep: &mut TaskReport) -> Result<()> {
    let name = t.object.as_str();
    let n = degree(t, opts);
    match t.kind {
        TaskKind::Validate => {
            if t.complex.is_some() {
                let m = module_of(o, t, n + 1)?.ok_or_else(|| unsupported(t))?;
                rep.checks.push(check_cyclic_module(&m));
            } else if let Some(a) = o.algebras.get(name) {
                rep.checks.push(a.check());
            } else if let Some((c, _)) = o.coalgebras.get(name) {
                rep.checks.push(c.check());
            } else if let Some(h) = o.hopf.get(name) {
                rep.checks.push(check_hopf_algebroid(h));
            } else if let Some(p) = o.sayd.get(name) {
                rep.checks.push(check_sayd(p));
            } else if let Some(z) = o.yd.get(name) {
                rep.checks.push(check_yd_algebra(z));
            } else if let Some(d) = o.lie_rinehart.get(name) {
                rep.checks.push(check_lie_rinehart(d));
                rep.checks.push(check_lr_complex(&lr_complex(d, n + 1)?));
            } else if let Some(op) = o.operads.get(name) {
                rep.checks.push(check_operad(op));
            } else if let Some((op, l)) = o.comp_modules.get(name) {
                rep.checks.push(check_comp_module(&o.operads[op], l));
            } else {
                return Err(unsupported(t));
            }
        }
        TaskKind::Homology => {
            let h = if let Some(d) = o.lie_rinehart.get(name) {
                lr_homology(d, n)?
            } else {
                let m = module_of(o, t, n + 1)?.ok_or_else(|| unsupported(t))?;
                match variant(t) {
                    Variant::Hochschild => hochschild_homology(&m)?,
                    Variant::Normalized => normalized_hochschild_homology(&m)?,
                    Variant::Cyclic => cyclic_homology_char0(&m)?,
                }
            };
            rep.homology = Some(HomologyTable::from(&h));
        }
        TaskKind::Measure => {
            if let Some(m) = o.measurings.get(name) {
                rep.checks.push(check_hopf_algebroid_measuring(m));
            } else if let Some(cm) = o.comodule_measurings.get(name) {
                rep.checks.push(check_sayd_comodule_measuring(cm));
            } else {
                return Err(unsupported(t));
            }
        }
        TaskKind::Induced => {
            let top = n + 1;
            let side = match complex(t) {
                ComplexKind::Cyclic => InducedSide::Cyclic,
                ComplexKind::Cocyclic => InducedSide::Cocyclic,
            };
            let (src, dst, maps) = if let Some(m) = o.measurings.get(name) {
                let x = element(o, t, &doc.measurings[name].coalgebra)?;
                let maps = induced_maps(m, &x, side, top)?;
                let (src, dst) = match side {
                    InducedSide::Cyclic => (build_cyclic_cu(&m.source, top)?, build_cyclic_cu(&m.target, top)?),
                    InducedSide::Cocyclic => (build_cocyclic_cu(&m.source, top)?, build_cocyclic_cu(&m.target, top)?),
                };
                (src, dst, maps)
            } else if let Some(cm) = o.comodule_measurings.get(name) {
                let base = &doc.comodule_measurings[name].measuring;
                let y = element(o, t, &doc.measurings[base].coalgebra)?;
                let maps = induced_coeff_maps(cm, &y, side, top)?;
                let (src, dst) = match side {
                    InducedSide::Cyclic => (build_cyclic_with_coeffs(&cm.p, top)?, build_cyclic_with_coeffs(&cm.p2, top)?),
                    InducedSide::Cocyclic => {
                        (build_cocyclic_with_coeffs(&cm.p, top)?, build_cocyclic_with_coeffs(&cm.p2, top)?)
                    }
                };
                (src, dst, maps)
            } else {
                return Err(unsupported(t));
            };
            let cert = check_morphism(&src, &dst, &maps);
            let passed = cert.passed();
            rep.checks.push(cert);
            if passed {
                let hm = induced_map_on_homology(&src, &dst, &maps, variant(t))?;
                rep.maps = Some(hm.iter().map(matrix_strings).collect());
            }
        }
        TaskKind::HopfGalois => {
            if let Some(m) = o.measurings.get(name) {
                let x = element(o, t, &doc.measurings[name].coalgebra)?;
                rep.checks.push(hopf_galois_square(m, &x, n)?);
            } else if let Some(cm) = o.comodule_measurings.get(name) {
                let base = &doc.comodule_measurings[name].measuring;
                let y = element(o, t, &doc.measurings[base].coalgebra)?;
                rep.checks.push(hopf_galois_square_coeffs(cm, &y, n)?);
            } else {
                return Err(unsupported(t));
            }
        }
    }
    Ok(())
}

fn unsupported(t: &TaskSpec) -> Error {
    Error::InvalidData(format!("task {} does not apply to {:?}", t.kind.name(), t.object))
}
