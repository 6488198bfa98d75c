use crate::algcore::{check_sweedler_measuring, find_witness, CheckReport, CoalgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{tensor::outer, Accum, Matrix};
use crate::hopfalgebroid::YdAlgebraData;

/// `C`-measuring `ψ: C → Hom(Z, Z')` of Yetter-Drinfel'd algebras over one Hopf algebroid.
#[derive(Clone, Debug)]
pub struct YdMeasuringData {
    pub label: String,
    pub c: CoalgebraData,
    pub z: YdAlgebraData,
    pub z2: YdAlgebraData,
    pub psi: Vec<Matrix>,
}

impl YdMeasuringData {
    pub fn new(label: &str, c: CoalgebraData, z: YdAlgebraData, z2: YdAlgebraData, psi: Vec<Matrix>) -> Result<Self> {
        let ok = psi.len() == c.dim()
            && psi.iter().all(|m| m.rows == z2.dim() && m.cols == z.dim())
            && super::same_algebroid(&z.hopf, &z2.hopf);
        if !ok {
            return Err(Error::DimensionMismatch(format!("YD measuring {label} has inconsistent data")));
        }
        Ok(YdMeasuringData { label: label.to_string(), c, z, z2, psi })
    }
}

pub fn check_yd_measuring(ym: &YdMeasuringData) -> CheckReport {
    let mut r = CheckReport::new(format!("YD measuring {}", ym.label));
    r.merge(ym.c.check());
    r.record("coalgebra cocommutative", if ym.c.is_cocommutative() { None } else { Some(vec![]) });
    let mut sub = check_sweedler_measuring(&ym.c, &ym.z.z, &ym.z2.z, &ym.psi);
    sub.subject = String::new();
    r.merge(sub);
    let h = &ym.z.hopf;
    let (dc, dz, du) = (ym.c.dim(), ym.z.dim(), h.du());
    r.record(
        "U-linear",
        find_witness(&[dc, du, dz], |ix| {
            let u = h.ubasis(ix[1]);
            let lhs = ym.psi[ix[0]].mul_vec(&ym.z.act(&u, &ym.z.zbasis(ix[2])));
            lhs != ym.z2.act(&u, &ym.psi[ix[0]].mul_vec(&ym.z.zbasis(ix[2])))
        }),
    );
    let t = ym.z2.coaction_target();
    r.record(
        "coaction compatible",
        find_witness(&[dc, dz], |ix| {
            let image = ym.psi[ix[0]].mul_vec(&ym.z.zbasis(ix[1]));
            let lhs = ym.z2.coaction_lift.mul_vec(&image);
            let mut acc = Accum::new(du * ym.z2.dim());
            for (c, u, z0) in ym.z.coaction_terms(&ym.z.zbasis(ix[1])) {
                acc.add_vec(&c, &outer(&[&h.ubasis(u), ym.psi[ix[0]].col(z0)]));
            }
            t.project(&lhs) != t.project(&acc.finish())
        }),
    );
    r
}
