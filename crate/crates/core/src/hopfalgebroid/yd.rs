use std::sync::Arc;

use crate::algcore::{find_witness, iterated_balanced_tensor, AlgebraData, CheckReport, TowerSlot};
use crate::error::{Error, Result};
use crate::exactlin::{tensor::outer, Accum, Matrix, QuotientPresentation, Scalar, SparseVec};

use super::{HopfAlgebroidData, TowerKind};

/// Left-left Yetter-Drinfel'd algebra `Z`: left `U`-module algebra and left
/// `U`-comodule algebra with coaction `Z → U◁ ⊗_A Z` (`a·z = s(a)z`).
#[derive(Clone, Debug)]
pub struct YdAlgebraData {
    pub label: String,
    pub hopf: HopfAlgebroidData,
    pub z: AlgebraData,
    /// `U ⊗ Z → Z`, column `u * dZ + z`.
    pub action: Matrix,
    /// Lifted coaction `Z → U ⊗ Z`.
    pub coaction_lift: Matrix,
    /// Recorded by `check_yd_algebra`.
    pub braided_commutative: bool,
    target: Arc<QuotientPresentation>,
}

impl YdAlgebraData {
    pub fn new(hopf: &HopfAlgebroidData, label: &str, z: AlgebraData, action: Matrix, coaction_lift: Matrix) -> Result<Self> {
        let (du, dz) = (hopf.du(), z.dim());
        if action.rows != dz || action.cols != du * dz || coaction_lift.rows != du * dz || coaction_lift.cols != dz {
            return Err(Error::DimensionMismatch(format!("YD algebra {label} has inconsistent shapes")));
        }
        let mut left = Vec::with_capacity(hopf.da() * dz);
        for a in 0..hopf.da() {
            for zi in 0..dz {
                left.push(act_into(&action, dz, hopf.s_of(a), &z.basis(zi)));
            }
        }
        let slots = [
            hopf.u_slot(TowerKind::Left),
            TowerSlot { dim: dz, left: Some(Matrix::from_columns(hopf.field, dz, left)), right: None },
        ];
        let target = Arc::new(iterated_balanced_tensor(hopf.field, hopf.da(), &slots, &format!("U⊗_A {label}"))?);
        let mut y = YdAlgebraData {
            label: label.to_string(),
            hopf: hopf.clone(),
            z,
            action,
            coaction_lift,
            braided_commutative: false,
            target,
        };
        y.coaction_lift = y.target.section.mat.mul(&y.target.projection.mat.mul(&y.coaction_lift));
        y.braided_commutative = y.braiding_witness().is_none();
        Ok(y)
    }

    /// The ground field over a Hopf algebroid with `A = k`: `u·z = ε(u)z`, `z ↦ 1 ⊗ z`.
    pub fn trivial(hopf: &HopfAlgebroidData) -> Result<Self> {
        if hopf.da() != 1 {
            return Err(Error::InvalidData("trivial YD algebra needs A = k".into()));
        }
        let z = AlgebraData::ground(hopf.field);
        let du = hopf.du();
        let action = Matrix::from_columns(hopf.field, 1, (0..du).map(|u| hopf.eps_of(u).clone()).collect());
        let coaction = Matrix::from_columns(hopf.field, du, vec![hopf.one_u().clone()]);
        YdAlgebraData::new(hopf, "k", z, action, coaction)
    }

    pub fn dim(&self) -> usize {
        self.z.dim()
    }

    pub fn zbasis(&self, i: usize) -> SparseVec {
        self.z.basis(i)
    }

    pub fn act(&self, u: &SparseVec, z: &SparseVec) -> SparseVec {
        act_into(&self.action, self.dim(), u, z)
    }

    /// Terms `(c, z₍₋₁₎, z₍₀₎)` of the lifted coaction of a vector.
    pub fn coaction_terms(&self, z: &SparseVec) -> Vec<(Scalar, usize, usize)> {
        let dz = self.dim();
        self.coaction_lift.mul_vec(z).entries.iter().map(|(f, c)| (c.clone(), f / dz, f % dz)).collect()
    }

    pub fn coaction_target(&self) -> &QuotientPresentation {
        &self.target
    }

    /// `z z' = (z₍₋₁₎ z') z₍₀₎` fails at the returned pair, if anywhere.
    fn braiding_witness(&self) -> Option<Vec<usize>> {
        let dz = self.dim();
        find_witness(&[dz, dz], |ix| {
            let lhs = self.z.mul_vec(&self.zbasis(ix[0]), &self.zbasis(ix[1]));
            let mut acc = Accum::new(dz);
            for (c, u, z0) in self.coaction_terms(&self.zbasis(ix[0])) {
                let acted = self.act(&self.hopf.ubasis(u), &self.zbasis(ix[1]));
                acc.add_vec(&c, &self.z.mul_vec(&acted, &self.zbasis(z0)));
            }
            lhs != acc.finish()
        })
    }
}

fn act_into(action: &Matrix, dz: usize, u: &SparseVec, z: &SparseVec) -> SparseVec {
    let mut acc = Accum::new(dz);
    for (i, x) in &u.entries {
        for (j, y) in &z.entries {
            acc.add_vec(&(x * y), action.col(i * dz + j));
        }
    }
    acc.finish()
}

pub fn check_yd_algebra(y: &YdAlgebraData) -> CheckReport {
    let h = &y.hopf;
    let (du, dz) = (h.du(), y.dim());
    let mut r = CheckReport::new(format!("YD algebra {}", y.label));
    r.merge(y.z.check());
    let e = |i| h.ubasis(i);
    let zb = |i| y.zbasis(i);
    let t = &y.target;
    r.record(
        "module",
        find_witness(&[du, du, dz], |ix| {
            y.act(&e(ix[0]), &y.act(&e(ix[1]), &zb(ix[2]))) != y.act(h.u.mul_basis(ix[0], ix[1]), &zb(ix[2]))
        }),
    );
    r.record("module unit", find_witness(&[dz], |ix| y.act(h.one_u(), &zb(ix[0])) != zb(ix[0])));
    r.record(
        "module algebra",
        find_witness(&[du, dz, dz], |ix| {
            let lhs = y.act(&e(ix[0]), y.z.mul_basis(ix[1], ix[2]));
            let mut acc = Accum::new(dz);
            for (c, u1, u2) in h.delta_terms(ix[0]) {
                acc.add_vec(&c, &y.z.mul_vec(&y.act(&e(u1), &zb(ix[1])), &y.act(&e(u2), &zb(ix[2]))));
            }
            lhs != acc.finish()
        }),
    );
    r.record(
        "module algebra unit",
        find_witness(&[du], |ix| y.act(&e(ix[0]), &y.z.unit) != y.act(&h.s_vec(h.eps_of(ix[0])), &y.z.unit)),
    );
    let coact = |v: &SparseVec| y.coaction_lift.mul_vec(v);
    r.record(
        "comodule counit",
        find_witness(&[dz], |ix| {
            let mut acc = Accum::new(dz);
            for (c, u, z0) in y.coaction_terms(&zb(ix[0])) {
                acc.add_vec(&c, &y.act(&h.s_vec(h.eps_of(u)), &zb(z0)));
            }
            acc.finish() != zb(ix[0])
        }),
    );
    r.record(
        "comodule algebra",
        find_witness(&[dz, dz], |ix| {
            let lhs = coact(y.z.mul_basis(ix[0], ix[1]));
            let mut acc = Accum::new(du * dz);
            for (c, u, z0) in y.coaction_terms(&zb(ix[0])) {
                for (d, v, z1) in y.coaction_terms(&zb(ix[1])) {
                    acc.add_vec(&(&c * &d), &outer(&[&h.mul(&e(u), &e(v)), y.z.mul_basis(z0, z1)]));
                }
            }
            t.project(&lhs) != t.project(&acc.finish())
        }),
    );
    r.record(
        "comodule algebra unit",
        if t.project(&coact(&y.z.unit)) == t.project(&outer(&[h.one_u(), &y.z.unit])) { None } else { Some(vec![]) },
    );
    r.record(
        "yetter-drinfel'd compatibility",
        find_witness(&[du, dz], |ix| {
            let mut lhs = Accum::new(du * dz);
            let mut rhs = Accum::new(du * dz);
            for (c, u1, u2) in h.delta_terms(ix[0]) {
                for (d, zm, z0) in y.coaction_terms(&zb(ix[1])) {
                    lhs.add_vec(&(&c * &d), &outer(&[&h.mul(&e(u1), &e(zm)), &y.act(&e(u2), &zb(z0))]));
                }
                let uz = y.act(&e(u1), &zb(ix[1]));
                for (d, w, w0) in y.coaction_terms(&uz) {
                    rhs.add_vec(&(&c * &d), &outer(&[&h.mul(&e(w), &e(u2)), &zb(w0)]));
                }
            }
            t.project(&lhs.finish()) != t.project(&rhs.finish())
        }),
    );
    r.record("braided commutative", y.braiding_witness());
    r
}
