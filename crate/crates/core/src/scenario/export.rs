use crate::algcore::{AlgebraData, CoalgebraData};
use crate::error::{Error, Result};
use crate::exactlin::{Matrix, Scalar, SparseVec};
use crate::hopfalgebroid::HopfAlgebroidData;
use crate::measuring::MeasuringData;

use super::{AlgebraSpec, CoalgebraSpec, Constants, HopfSpec, MeasuringSpec};

fn frac(c: &Scalar) -> Result<[i64; 2]> {
    if let Some((n, d)) = c.as_i64_frac() {
        return Ok([n, d]);
    }
    Err(Error::InvalidData(format!("constant {c} does not fit the scenario format")))
}

fn row(ix: &[usize], c: &Scalar) -> Result<Vec<i64>> {
    let mut r: Vec<i64> = ix.iter().map(|&i| i as i64).collect();
    r.extend(frac(c)?);
    Ok(r)
}

fn vector_rows(v: &SparseVec) -> Result<Constants> {
    v.entries.iter().map(|(i, c)| row(&[*i], c)).collect()
}

/// Rows `[src, dst, c]` of `m`, column-major.
fn map_rows(m: &Matrix) -> Result<Constants> {
    let mut out = Vec::new();
    for j in 0..m.cols {
        for (i, c) in &m.col(j).entries {
            out.push(row(&[j, *i], c)?);
        }
    }
    Ok(out)
}

fn family_rows(ms: &[Matrix]) -> Result<Constants> {
    let mut out = Vec::new();
    for (x, m) in ms.iter().enumerate() {
        for mut r in map_rows(m)? {
            r.insert(0, x as i64);
            out.push(r);
        }
    }
    Ok(out)
}

pub fn algebra_spec(a: &AlgebraData) -> Result<AlgebraSpec> {
    let d = a.dim();
    let mut mul = Vec::new();
    for col in 0..d * d {
        for (k, c) in &a.mul.mat.col(col).entries {
            mul.push(row(&[col / d, col % d, *k], c)?);
        }
    }
    Ok(AlgebraSpec { dim: d, mul, unit: vector_rows(&a.unit)? })
}

pub fn coalgebra_spec(c: &CoalgebraData, basis: &[&str]) -> Result<CoalgebraSpec> {
    let d = c.dim();
    let mut comul = Vec::new();
    for i in 0..d {
        for (jk, s) in &c.comul.mat.col(i).entries {
            comul.push(row(&[i, jk / d, jk % d], s)?);
        }
    }
    let counit = (0..d)
        .filter_map(|i| {
            let e = c.counit.mat.get(0, i);
            (!e.is_zero()).then(|| row(&[i], &e))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CoalgebraSpec { dim: d, basis: basis.iter().map(|s| s.to_string()).collect(), comul, counit })
}

/// Explicit form of `h` referring to algebras named `total` and `base`.
pub fn hopf_spec(h: &HopfAlgebroidData, total: &str, base: &str) -> Result<HopfSpec> {
    let du = h.du();
    let mut delta = Vec::new();
    for u in 0..du {
        for (vw, c) in &h.delta_lift().col(u).entries {
            delta.push(row(&[u, vw / du, vw % du], c)?);
        }
    }
    Ok(HopfSpec::Explicit {
        total: total.into(),
        base: base.into(),
        source: map_rows(&h.s.mat)?,
        target: map_rows(&h.t.mat)?,
        delta,
        counit: map_rows(&h.eps.mat)?,
        antipode: map_rows(&h.antipode.mat)?,
    })
}

pub fn measuring_spec(m: &MeasuringData, coalgebra: &str, source: &str, target: &str) -> Result<MeasuringSpec> {
    Ok(MeasuringSpec {
        coalgebra: coalgebra.into(),
        source: source.into(),
        target: target.into(),
        big: family_rows(&m.big)?,
        small: family_rows(&m.small)?,
    })
}
