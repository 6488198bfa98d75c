use crate::algcore::{first_diff_col, find_witness, measuring_at, CheckReport, ComoduleData, Side};
use crate::error::{Error, Result};
use crate::exactlin::{descend, tensor::terms, Accum, LinMap, Matrix, SparseVec, TensorShape};
use crate::hopfalgebroid::{CoeffTower, SaydModuleData};

use super::{check_hopf_algebroid_measuring, compose_measurings, MeasuringData};

/// `(C, Ψ, ψ)`-comodule measuring `Ω: D → Hom(P, P')` for a right `C`-comodule `D`.
#[derive(Clone, Debug)]
pub struct ComoduleMeasuringData {
    pub label: String,
    pub base: MeasuringData,
    pub d: ComoduleData,
    pub p: SaydModuleData,
    pub p2: SaydModuleData,
    /// `Ω(d_i): P → P'`
    pub omega: Vec<Matrix>,
}

impl ComoduleMeasuringData {
    pub fn new(
        label: &str,
        base: MeasuringData,
        d: ComoduleData,
        p: SaydModuleData,
        p2: SaydModuleData,
        omega: Vec<Matrix>,
    ) -> Result<Self> {
        let ok = d.side == Side::Right
            && d.coalgebra.dim() == base.c.dim()
            && omega.len() == d.space.dim
            && omega.iter().all(|m| m.rows == p2.dim() && m.cols == p.dim())
            && super::same_algebroid(&p.hopf, &base.source)
            && super::same_algebroid(&p2.hopf, &base.target);
        if !ok {
            return Err(Error::DimensionMismatch(format!("comodule measuring {label} has inconsistent data")));
        }
        Ok(ComoduleMeasuringData { label: label.to_string(), base, d, p, p2, omega })
    }

    pub fn omega_at(&self, y: &SparseVec) -> Matrix {
        measuring_at(&self.omega, y)
    }

    /// Terms `(c, y₍₀₎, [y₍₁₎, ..., y₍ₙ₎])` of the iterated coaction.
    pub fn iterated_coaction(&self, y: &SparseVec, n: usize) -> Vec<(crate::exactlin::Scalar, usize, Vec<usize>)> {
        let c = &self.base.c;
        let mut out = Vec::new();
        for (i, a) in &y.entries {
            for (b, ci, d0) in self.d.coact(*i) {
                if n == 0 {
                    out.push((&(a * &b) * &c.counit_of(&c.basis(ci)), d0, vec![]));
                    continue;
                }
                let shape = TensorShape::power(c.dim(), n);
                for (x, ix) in terms(&shape, &c.iterated(n).mul_vec(&c.basis(ci))) {
                    out.push((&(a * &b) * &x, d0, ix));
                }
            }
        }
        out
    }

    /// `Ω(y₍₀₎) ⊗ Ψ(y₍₁₎) ⊗ ... ⊗ Ψ(y₍ₙ₎)` on the coefficient tower, with `P` placed as
    /// the tower places it, descended.
    pub fn slotwise(&self, y: &SparseVec, n: usize, kind: CoeffTower) -> Result<LinMap> {
        let src = self.p.tower(kind, n)?;
        let dst = self.p2.tower(kind, n)?;
        let field = self.base.c.field;
        let mut free = Matrix::zeros(field, dst.ambient.dim, src.ambient.dim);
        for (coef, d0, cs) in self.iterated_coaction(y, n) {
            let us: Vec<&Matrix> = cs.iter().map(|&i| &self.base.big[i]).collect();
            let om = &self.omega[d0];
            let k = match kind {
                CoeffTower::Cyclic => us.iter().fold(om.clone(), |m, u| m.kron(u)),
                CoeffTower::Cocyclic => {
                    let mut m = Matrix::identity(field, 1);
                    for u in &us {
                        m = m.kron(u);
                    }
                    m.kron(om)
                }
            };
            free = free.add(&k.scale(&coef));
        }
        descend(&free, &src, &dst).map_err(|f| Error::descent(format!("{} on coefficients in degree {n}", self.label), f))
    }
}

pub fn check_sayd_comodule_measuring(cm: &ComoduleMeasuringData) -> CheckReport {
    let mut r = CheckReport::new(format!("comodule measuring {}", cm.label));
    r.merge(check_hopf_algebroid_measuring(&cm.base));
    r.merge(cm.d.check());
    let (h, h2) = (&cm.base.source, &cm.base.target);
    let (dd, dp, du) = (cm.d.space.dim, cm.p.dim(), h.du());
    let om = &cm.omega;
    r.record(
        "action compatible",
        find_witness(&[dd, dp, du], |ix| {
            let lhs = om[ix[0]].mul_vec(cm.p.act(ix[1], ix[2]));
            let mut acc = Accum::new(cm.p2.dim());
            for (c, ci, d0) in cm.d.coact(ix[0]) {
                let pv = om[d0].mul_vec(&cm.p.pbasis(ix[1]));
                acc.add_vec(&c, &cm.p2.act_vec(&pv, cm.base.big[ci].col(ix[2])));
            }
            lhs != acc.finish()
        }),
    );
    let c = &cm.base.c;
    let dc = c.dim();
    r.record(
        "enveloping action compatible",
        find_witness(&[dd, dp, h.da(), h.da()], |ix| {
            let st = h.mul(h.s_of(ix[2]), h.t_of(ix[3]));
            let lhs = om[ix[0]].mul_vec(&cm.p.act_vec(&cm.p.pbasis(ix[1]), &st));
            let mut acc = Accum::new(cm.p2.dim());
            for (co, ci, d0) in cm.d.coact(ix[0]) {
                let pv = om[d0].mul_vec(&cm.p.pbasis(ix[1]));
                for (f, x) in &c.comul_basis(ci).entries {
                    let a = cm.base.small[f / dc].col(ix[2]);
                    let b = cm.base.small[f % dc].col(ix[3]);
                    let st2 = h2.mul(&h2.s_vec(a), &h2.t_vec(b));
                    acc.add_vec(&(&co * x), &cm.p2.act_vec(&pv, &st2));
                }
            }
            lhs != acc.finish()
        }),
    );
    let mut descent = None;
    let mut coaction = None;
    for y in 0..dd {
        match cm.slotwise(&SparseVec::unit(dd, y, c.field.one()), 1, CoeffTower::Cocyclic) {
            Ok(on_t1) => {
                let lhs = cm.p2.coaction.mul(&om[y]);
                let rhs = on_t1.mat.mul(&cm.p.coaction);
                if coaction.is_none() {
                    coaction = first_diff_col(&lhs, &rhs).map(|w| vec![y, w[0]]);
                }
            }
            Err(Error::Descent { failure, .. }) if descent.is_none() => descent = Some(vec![y, failure.relation]),
            Err(e) if descent.is_none() => {
                r.record_detail("coaction map descends", Some(vec![y]), e.to_string());
                return r;
            }
            Err(_) => {}
        }
    }
    r.record("coaction map descends", descent);
    r.record("coaction compatible", coaction);
    r
}

/// Comodule measuring over `(C ⊗ C', D ⊗ D')` with `Ω''(y ⊗ y') = Ω'(y') ∘ Ω(y)`.
pub fn compose_comodule_measurings(cm: &ComoduleMeasuringData, cm2: &ComoduleMeasuringData) -> Result<ComoduleMeasuringData> {
    let middle_ok = cm.p2.label == cm2.p.label
        && cm.p2.action == cm2.p.action
        && cm.p2.coaction == cm2.p.coaction;
    if !middle_ok {
        return Err(Error::InvalidData(format!(
            "cannot compose {} with {}: middle coefficients differ",
            cm.label, cm2.label
        )));
    }
    let base = compose_measurings(&cm.base, &cm2.base)?;
    let (d1, d2) = (&cm.d, &cm2.d);
    let (n1, n2) = (d1.space.dim, d2.space.dim);
    let c2 = cm2.base.c.dim();
    let dc = base.c.dim();
    let field = base.c.field;
    let mut cols = Vec::with_capacity(n1 * n2);
    for y in 0..n1 {
        for y2 in 0..n2 {
            let mut acc = Accum::new(n1 * n2 * dc);
            for (a, ca, da) in d1.coact(y) {
                for (b, cb, db) in d2.coact(y2) {
                    acc.add((da * n2 + db) * dc + ca * c2 + cb, &(&a * &b));
                }
            }
            cols.push(acc.finish());
        }
    }
    let space = crate::exactlin::Space::new(n1 * n2, format!("{}⊗{}", d1.space.label, d2.space.label));
    let d = ComoduleData::new(base.c.clone(), space, Matrix::from_columns(field, n1 * n2 * dc, cols), Side::Right)?;
    let mut omega = Vec::with_capacity(n1 * n2);
    for y in 0..n1 {
        for y2 in 0..n2 {
            omega.push(cm2.omega[y2].mul(&cm.omega[y]));
        }
    }
    ComoduleMeasuringData::new(&format!("{}∘{}", cm2.label, cm.label), base, d, cm.p.clone(), cm2.p2.clone(), omega)
}
