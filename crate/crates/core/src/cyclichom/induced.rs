use crate::algcore::{first_diff_col, CheckReport};
use crate::error::{Error, Result};
use crate::exactlin::{LinMap, Matrix, SparseVec};
use crate::hopfalgebroid::{CoeffTower, TowerKind};
use crate::measuring::{ComoduleMeasuringData, MeasuringData};

use super::{homology_classes, hopf_galois_chain_map, CyclicModuleData, Direction, Variant};

/// Which of the two module families an induced map acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InducedSide {
    /// `C_•`, slots balanced over `A^op`.
    Cyclic,
    /// `C^•`, slots balanced over `A`.
    Cocyclic,
}

/// `x₍₁₎(u¹) ⊗ … ⊗ x₍ₙ₎(uⁿ)` in degrees `0..=top`.
pub fn induced_maps(m: &MeasuringData, x: &SparseVec, side: InducedSide, top: usize) -> Result<Vec<LinMap>> {
    let kind = match side {
        InducedSide::Cyclic => TowerKind::Right,
        InducedSide::Cocyclic => TowerKind::Left,
    };
    (0..=top).map(|n| m.slotwise(x, n, kind)).collect()
}

/// `y₍₀₎(p) ⊗ y₍₁₎(u¹) ⊗ …` in degrees `0..=top`, `P` placed as the side's tower places it.
pub fn induced_coeff_maps(
    cm: &ComoduleMeasuringData,
    y: &SparseVec,
    side: InducedSide,
    top: usize,
) -> Result<Vec<LinMap>> {
    let kind = match side {
        InducedSide::Cyclic => CoeffTower::Cyclic,
        InducedSide::Cocyclic => CoeffTower::Cocyclic,
    };
    (0..=top).map(|n| cm.slotwise(y, n, kind)).collect()
}

fn family(r: &mut CheckReport, name: &str, pairs: impl Iterator<Item = (Vec<usize>, Matrix, Matrix)>) {
    let mut w = None;
    for (ix, a, b) in pairs {
        if (a.rows, a.cols) != (b.rows, b.cols) {
            w = Some(ix);
            break;
        }
        if let Some(c) = first_diff_col(&a, &b) {
            let mut ix = ix;
            ix.extend(c);
            w = Some(ix);
            break;
        }
    }
    r.record(name, w);
}

/// Certificate that `maps` commute with every face, degeneracy and cyclic operator.
/// Witnesses are `(n, i, column)`.
pub fn check_morphism(src: &CyclicModuleData, dst: &CyclicModuleData, maps: &[LinMap]) -> CheckReport {
    let mut r = CheckReport::new(format!("morphism {} → {}", src.label, dst.label));
    let top = src.top();
    let shapes_ok = src.direction == dst.direction
        && dst.top() == top
        && maps.len() > top
        && (0..=top).all(|n| maps[n].mat.cols == src.dim(n) && maps[n].mat.rows == dst.dim(n));
    r.record("shapes", if shapes_ok { None } else { Some(vec![]) });
    if !shapes_ok {
        return r;
    }
    let (face_to, deg_to): (fn(usize) -> usize, fn(usize) -> usize) = match src.direction {
        Direction::Cyclic => (|n| n - 1, |n| n + 1),
        Direction::Cocyclic => (|n| n + 1, |n| n - 1),
    };
    let f = |n: usize| &maps[n].mat;
    family(
        &mut r,
        "commutes with faces",
        (0..=top).flat_map(|n| {
            (0..src.faces[n].len()).map(move |i| {
                (vec![n, i], f(face_to(n)).mul(src.face(n, i)), dst.face(n, i).mul(f(n)))
            })
        }),
    );
    family(
        &mut r,
        "commutes with degeneracies",
        (0..=top).flat_map(|n| {
            (0..src.degeneracies[n].len()).map(move |i| {
                (vec![n, i], f(deg_to(n)).mul(src.degeneracy(n, i)), dst.degeneracy(n, i).mul(f(n)))
            })
        }),
    );
    family(
        &mut r,
        "commutes with cyclic operators",
        (0..=top).map(|n| (vec![n], f(n).mul(src.t(n)), dst.t(n).mul(f(n)))),
    );
    r
}

/// Matrices of the maps induced on homology bases, degrees `0..top`.
pub fn induced_map_on_homology(
    src: &CyclicModuleData,
    dst: &CyclicModuleData,
    maps: &[LinMap],
    variant: Variant,
) -> Result<Vec<Matrix>> {
    let a = homology_classes(src, variant)?;
    let b = homology_classes(dst, variant)?;
    a.iter()
        .zip(&b)
        .map(|(ca, cb)| {
            let n = ca.degree;
            let images = maps[n].mat.mul(&ca.chain_reps());
            let cols = images
                .columns()
                .iter()
                .map(|v| {
                    cb.class_of(v)
                        .ok_or_else(|| Error::CertificateFailure(format!("image of a degree {n} class is not a cycle")))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(src.field, cb.dim(), cols))
        })
        .collect()
}

fn square(r: &mut CheckReport, top: usize, lhs: impl Fn(usize) -> Matrix, rhs: impl Fn(usize) -> Matrix) {
    family(r, "ξ' ∘ cyclic-side map = cocyclic-side map ∘ ξ", (0..=top).map(|n| (vec![n], lhs(n), rhs(n))));
}

/// Compares `ξ' ∘ Ψ_n(x)` with `Ψ^n(x) ∘ ξ` in degrees `0..=top`.
pub fn hopf_galois_square(m: &MeasuringData, x: &SparseVec, top: usize) -> Result<CheckReport> {
    let xi = hopf_galois_chain_map(&m.source, None, top)?;
    let xi2 = hopf_galois_chain_map(&m.target, None, top)?;
    let lower = induced_maps(m, x, InducedSide::Cyclic, top)?;
    let upper = induced_maps(m, x, InducedSide::Cocyclic, top)?;
    let mut r = CheckReport::new(format!("Hopf-Galois square for {}", m.label));
    square(&mut r, top, |n| xi2.forward[n].mat.mul(&lower[n].mat), |n| upper[n].mat.mul(&xi.forward[n].mat));
    Ok(r)
}

/// The same square with SAYD coefficients and a comodule measuring.
pub fn hopf_galois_square_coeffs(cm: &ComoduleMeasuringData, y: &SparseVec, top: usize) -> Result<CheckReport> {
    let xi = hopf_galois_chain_map(&cm.p.hopf, Some(&cm.p), top)?;
    let xi2 = hopf_galois_chain_map(&cm.p2.hopf, Some(&cm.p2), top)?;
    let lower = induced_coeff_maps(cm, y, InducedSide::Cyclic, top)?;
    let upper = induced_coeff_maps(cm, y, InducedSide::Cocyclic, top)?;
    let mut r = CheckReport::new(format!("Hopf-Galois square for {}", cm.label));
    square(&mut r, top, |n| xi2.forward[n].mat.mul(&lower[n].mat), |n| upper[n].mat.mul(&xi.forward[n].mat));
    Ok(r)
}
