use std::sync::{Arc, Mutex, OnceLock};
use std::collections::HashMap;

use crate::algcore::{find_witness, iterated_balanced_tensor, CheckReport, TowerSlot};
use crate::error::{Error, Result};
use crate::exactlin::{
    tensor::outer, Accum, Matrix, QuotientPresentation, Scalar, Space, SparseVec,
};

use super::{HopfAlgebroidData, TowerKind};

/// Which coefficient tower.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoeffTower {
    /// `P ⊗_{A^op} U^{⊗_{A^op} n}`
    Cyclic,
    /// `U^{⊗_A n} ⊗_A P`
    Cocyclic,
}

#[derive(Debug, Default)]
struct SaydCache {
    towers: Mutex<HashMap<(CoeffTower, usize), Arc<QuotientPresentation>>>,
    coaction_lift: OnceLock<Matrix>,
}

/// Right `U`-module, left `U`-comodule `P` with coaction `P → U◁ ⊗_A P`.
/// The left `A`-module structure of the comodule is `a·p = p·t(a)`.
#[derive(Clone, Debug)]
pub struct SaydModuleData {
    pub label: String,
    pub hopf: HopfAlgebroidData,
    pub space: Space,
    /// `P ⊗ U → P`, column `p * dU + u`.
    pub action: Matrix,
    /// Coaction in coordinates of `U◁ ⊗_A P`.
    pub coaction: Matrix,
    perturbed: bool,
    cache: Arc<SaydCache>,
}

impl SaydModuleData {
    /// `coaction_lift` is any lift of the coaction into the plain `U ⊗ P`.
    pub fn new(hopf: &HopfAlgebroidData, label: &str, dim: usize, action: Matrix, coaction_lift: Matrix) -> Result<Self> {
        let du = hopf.du();
        if action.rows != dim || action.cols != dim * du || coaction_lift.rows != du * dim || coaction_lift.cols != dim {
            return Err(Error::DimensionMismatch(format!("SAYD data {label} has inconsistent shapes")));
        }
        let mut p = SaydModuleData {
            label: label.to_string(),
            hopf: hopf.clone(),
            space: Space::new(dim, label.to_string()),
            action,
            coaction: Matrix::zeros(hopf.field, 0, dim),
            perturbed: false,
            cache: Arc::new(SaydCache::default()),
        };
        let t = p.tower(CoeffTower::Cocyclic, 1)?;
        p.coaction = t.projection.mat.mul(&coaction_lift);
        Ok(p)
    }

    /// `P = A`, `p·u = p ε(u)`, `p ↦ s(p) ⊗ 1`.
    pub fn base(hopf: &HopfAlgebroidData) -> Self {
        let (du, da) = (hopf.du(), hopf.da());
        let a = &hopf.a;
        let mut cols = Vec::with_capacity(da * du);
        for p in 0..da {
            for u in 0..du {
                cols.push(a.mul_vec(&a.basis(p), hopf.eps_of(u)));
            }
        }
        let action = Matrix::from_columns(hopf.field, da, cols);
        let co = (0..da).map(|p| outer(&[hopf.s_of(p), &a.unit])).collect();
        let coaction = Matrix::from_columns(hopf.field, du * da, co);
        SaydModuleData::new(hopf, &format!("{}_base", hopf.label), da, action, coaction).expect("base SAYD shape")
    }

    /// One-dimensional `P` over a Hopf algebroid with `A = k`: character action, given coaction element.
    pub fn one_dimensional(hopf: &HopfAlgebroidData, label: &str, character: &[Scalar], coact: &SparseVec) -> Result<Self> {
        let du = hopf.du();
        if hopf.da() != 1 || character.len() != du || coact.dim != du {
            return Err(Error::DimensionMismatch("one-dimensional SAYD needs A = k".into()));
        }
        let action = Matrix::from_triplets(hopf.field, 1, du, character.iter().enumerate().map(|(u, c)| (0, u, c.clone())));
        let coaction = Matrix::from_columns(hopf.field, du, vec![coact.clone()]);
        SaydModuleData::new(hopf, label, 1, action, coaction)
    }

    pub fn dim(&self) -> usize {
        self.space.dim
    }

    pub fn with_perturbed_lifts(&self) -> Self {
        let mut p = self.clone();
        p.hopf = self.hopf.with_perturbed_lifts();
        p.perturbed = true;
        p.cache = Arc::new(SaydCache {
            towers: Mutex::new(self.cache.towers.lock().unwrap().clone()),
            ..SaydCache::default()
        });
        p
    }

    pub fn pbasis(&self, p: usize) -> SparseVec {
        SparseVec::unit(self.dim(), p, self.hopf.field.one())
    }

    pub fn act(&self, p: usize, u: usize) -> &SparseVec {
        self.action.col(p * self.hopf.du() + u)
    }

    pub fn act_vec(&self, p: &SparseVec, u: &SparseVec) -> SparseVec {
        let mut acc = Accum::new(self.dim());
        for (i, x) in &p.entries {
            for (j, y) in &u.entries {
                acc.add_vec(&(x * y), self.act(*i, *j));
            }
        }
        acc.finish()
    }

    /// `a·p = p·t(a)`
    pub fn left_a(&self, a: &SparseVec, p: &SparseVec) -> SparseVec {
        self.act_vec(p, &self.hopf.t_vec(a))
    }

    pub fn p_slot(&self, kind: CoeffTower) -> TowerSlot {
        let (dp, da) = (self.dim(), self.hopf.da());
        match kind {
            CoeffTower::Cyclic => {
                let mut right = Vec::with_capacity(dp * da);
                for p in 0..dp {
                    for a in 0..da {
                        right.push(self.act_vec(&self.pbasis(p), self.hopf.t_of(a)));
                    }
                }
                TowerSlot { dim: dp, left: None, right: Some(Matrix::from_columns(self.hopf.field, dp, right)) }
            }
            CoeffTower::Cocyclic => {
                let mut left = Vec::with_capacity(da * dp);
                for a in 0..da {
                    for p in 0..dp {
                        left.push(self.act_vec(&self.pbasis(p), self.hopf.t_of(a)));
                    }
                }
                TowerSlot { dim: dp, left: Some(Matrix::from_columns(self.hopf.field, dp, left)), right: None }
            }
        }
    }

    /// Coefficient towers; the `P` slot is first for `Cyclic` and last for `Cocyclic`.
    pub fn tower(&self, kind: CoeffTower, n: usize) -> Result<Arc<QuotientPresentation>> {
        if let Some(p) = self.cache.towers.lock().unwrap().get(&(kind, n)) {
            return Ok(p.clone());
        }
        let mut slots = Vec::with_capacity(n + 1);
        let label = match kind {
            CoeffTower::Cyclic => {
                slots.push(self.p_slot(kind));
                slots.extend(std::iter::repeat(self.hopf.u_slot(TowerKind::Right)).take(n));
                format!("{}⊗_Aop {}^{n}", self.label, self.hopf.label)
            }
            CoeffTower::Cocyclic => {
                slots.extend(std::iter::repeat(self.hopf.u_slot(TowerKind::Left)).take(n));
                slots.push(self.p_slot(kind));
                format!("{}^{n} ⊗_A {}", self.hopf.label, self.label)
            }
        };
        let p = Arc::new(iterated_balanced_tensor(self.hopf.field, self.hopf.da(), &slots, &label)?);
        self.cache.towers.lock().unwrap().insert((kind, n), p.clone());
        Ok(p)
    }

    /// Lifted coaction `P → U ⊗ P`.
    pub fn coaction_lift(&self) -> &Matrix {
        self.cache.coaction_lift.get_or_init(|| {
            let t = self.tower(CoeffTower::Cocyclic, 1).expect("coaction target");
            let base = t.section.mat.mul(&self.coaction);
            let rel = &t.relations.mat;
            let cols = (0..self.dim())
                .map(|p| {
                    if self.perturbed && rel.cols > 0 {
                        base.col(p).add(rel.col((p * 5 + 1) % rel.cols))
                    } else {
                        base.col(p).clone()
                    }
                })
                .collect();
            Matrix::from_columns(self.hopf.field, self.hopf.du() * self.dim(), cols)
        })
    }

    /// Terms `(c, p₍₋₁₎, p₍₀₎)` of the lifted coaction.
    pub fn coaction_terms(&self, p: usize) -> Vec<(Scalar, usize, usize)> {
        let dp = self.dim();
        self.coaction_lift().col(p).entries.iter().map(|(f, c)| (c.clone(), f / dp, f % dp)).collect()
    }
}

pub fn check_sayd(m: &SaydModuleData) -> CheckReport {
    let mut r = CheckReport::new(format!("SAYD {}", m.label));
    let h = &m.hopf;
    let (du, da, dp) = (h.du(), h.da(), m.dim());
    let (t1, t2) = match (m.tower(CoeffTower::Cocyclic, 1), m.tower(CoeffTower::Cocyclic, 2)) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            r.record_detail("coefficient towers", Some(vec![]), e.to_string());
            return r;
        }
    };
    let e = |i| h.ubasis(i);
    let pb = |i| m.pbasis(i);
    let coact_vec = |pv: &SparseVec| m.coaction_lift().mul_vec(pv);

    r.record(
        "right module",
        find_witness(&[dp, du, du], |ix| {
            m.act_vec(m.act(ix[0], ix[1]), &e(ix[2])) != m.act_vec(&pb(ix[0]), h.u.mul_basis(ix[1], ix[2]))
        }),
    );
    r.record("right module unit", find_witness(&[dp], |ix| m.act_vec(&pb(ix[0]), h.one_u()) != pb(ix[0])));
    r.record(
        "coaction A-linear",
        find_witness(&[da, dp], |ix| {
            let lhs = coact_vec(&m.left_a(&h.a.basis(ix[0]), &pb(ix[1])));
            let mut acc = Accum::new(du * dp);
            for (c, u, p0) in m.coaction_terms(ix[1]) {
                acc.add_vec(&c, &outer(&[&h.mul(h.s_of(ix[0]), &e(u)), &pb(p0)]));
            }
            t1.project(&lhs) != t1.project(&acc.finish())
        }),
    );
    r.record(
        "coaction coassociative",
        find_witness(&[dp], |ix| {
            let (mut l, mut rr) = (Accum::new(du * du * dp), Accum::new(du * du * dp));
            for (c, u, p0) in m.coaction_terms(ix[0]) {
                l.add_vec(&c, &outer(&[h.delta_of(u), &pb(p0)]));
                rr.add_vec(&c, &outer(&[&e(u), &coact_vec(&pb(p0))]));
            }
            t2.project(&l.finish()) != t2.project(&rr.finish())
        }),
    );
    r.record(
        "coaction counital",
        find_witness(&[dp], |ix| {
            let mut acc = Accum::new(dp);
            for (c, u, p0) in m.coaction_terms(ix[0]) {
                acc.add_vec(&c, &m.left_a(h.eps_of(u), &pb(p0)));
            }
            acc.finish() != pb(ix[0])
        }),
    );
    r.record(
        "induced bimodule structure",
        find_witness(&[dp, da, da], |ix| {
            let st = h.mul(h.s_of(ix[1]), h.t_of(ix[2]));
            let lhs = m.act_vec(&pb(ix[0]), &st);
            let mut acc = Accum::new(dp);
            for (c, u, p0) in m.coaction_terms(ix[0]) {
                let a = h.eps_vec(&h.mul(&e(u), h.s_of(ix[1])));
                acc.add_vec(&c, &m.left_a(&h.a.basis(ix[2]), &m.left_a(&a, &pb(p0))));
            }
            lhs != acc.finish()
        }),
    );
    let ayd = |m: &SaydModuleData| -> Result<Option<Vec<usize>>> {
        let h = &m.hopf;
        let mut out = None;
        for p in 0..dp {
            for u in 0..du {
                let lhs = m.coaction_lift().mul_vec(m.act(p, u));
                let mut acc = Accum::new(du * dp);
                for (c, up, um) in h.translation_terms(u)? {
                    for (x, u1, u2) in h.delta_terms(up) {
                        for (y, pm, p0) in m.coaction_terms(p) {
                            let left = h.prod(&[&e(um), &e(pm), &e(u1)]);
                            let right = m.act(p0, u2);
                            acc.add_vec(&(&(&c * &x) * &y), &outer(&[&left, right]));
                        }
                    }
                }
                if t1.project(&lhs) != t1.project(&acc.finish()) {
                    out = Some(vec![p, u]);
                    break;
                }
            }
            if out.is_some() {
                break;
            }
        }
        Ok(out)
    };
    match ayd(m) {
        Ok(w) => r.record("anti Yetter-Drinfel'd", w),
        Err(err) => r.record_detail("anti Yetter-Drinfel'd", Some(vec![]), err.to_string()),
    }
    match ayd(&m.with_perturbed_lifts()) {
        Ok(w) => r.record("anti Yetter-Drinfel'd lift-independent", w),
        Err(err) => r.record_detail("anti Yetter-Drinfel'd lift-independent", Some(vec![]), err.to_string()),
    }
    r.record(
        "stable",
        find_witness(&[dp], |ix| {
            let mut acc = Accum::new(dp);
            for (c, u, p0) in m.coaction_terms(ix[0]) {
                acc.add_vec(&c, m.act(p0, u));
            }
            acc.finish() != pb(ix[0])
        }),
    );
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::hopfalgebroid::gallery;

    #[test]
    fn base_sayd_on_gallery() {
        for h in gallery::all(FieldSpec::Rationals) {
            let p = SaydModuleData::base(&h);
            let r = check_sayd(&p);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn sign_twist_unstable_coaction() {
        let q = FieldSpec::Rationals;
        let h = gallery::group_algebra(q, 2);
        let sign = [q.one(), q.from_i64(-1)];
        let ok = SaydModuleData::one_dimensional(&h, "sign", &sign, &SparseVec::unit(2, 0, q.one())).unwrap();
        assert!(check_sayd(&ok).passed());
        let bad = SaydModuleData::one_dimensional(&h, "sign_g", &sign, &SparseVec::unit(2, 1, q.one())).unwrap();
        let r = check_sayd(&bad);
        assert_eq!(r.status_of("stable"), Some(crate::algcore::Status::Fail));
        assert_eq!(r.status_of("anti Yetter-Drinfel'd"), Some(crate::algcore::Status::Pass));
    }

    #[test]
    fn swap_module_breaks_ayd() {
        let q = FieldSpec::Rationals;
        let h = gallery::group_algebra(q, 2);
        let one = q.one();
        // g swaps e1, e2; coaction e1 ↦ g⊗e1, e2 ↦ 1⊗e2
        let action = Matrix::from_triplets(q, 2, 4, [(0, 0, one.clone()), (1, 1, one.clone()), (1, 2, one.clone()), (0, 3, one.clone())]);
        let coaction = Matrix::from_triplets(q, 4, 2, [(2, 0, one.clone()), (1, 1, one.clone())]);
        let p = SaydModuleData::new(&h, "swap", 2, action, coaction).unwrap();
        let r = check_sayd(&p);
        assert_eq!(r.status_of("anti Yetter-Drinfel'd"), Some(crate::algcore::Status::Fail));
    }
}
