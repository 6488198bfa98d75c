use std::sync::Arc;

use crate::algcore::{first_diff_col, CheckReport};
use crate::cyclichom::{chain_homology, HomologyClasses, HomologyReport, Theory};
use crate::error::{Error, Result};
use crate::exactlin::{
    descend, quotient_by, tensor::free_matrix, tensor::outer, Accum, FieldSpec, LinMap, Matrix, QuotientPresentation,
    Space, SparseVec, TensorShape,
};
use crate::measuring::slotwise_free;

use super::{LieRinehartData, LrMeasuringData};

/// `∧ⁿ_R 𝔏` as the quotient of `𝔏^{⊗n}` by `R`-balancing and alternation in adjacent slots.
/// Degree 0 is `R`.
pub(super) fn wedge_space(d: &LieRinehartData, n: usize) -> Result<Arc<QuotientPresentation>> {
    let f = d.field;
    if n == 0 {
        return Ok(Arc::new(QuotientPresentation::trivial(f, &d.r.space)));
    }
    let dl = d.dl();
    let shape = TensorShape::power(dl, n);
    let ambient = Space::new(shape.total(), format!("L({})^{n}", d.label));
    let mut rels = Vec::new();
    for flat in 0..shape.total() {
        let ix = shape.unflatten(flat);
        let slots: Vec<SparseVec> = ix.iter().map(|&z| d.lbasis(z)).collect();
        for k in 0..n.saturating_sub(1) {
            let mut swapped = ix.clone();
            swapped.swap(k, k + 1);
            rels.push(SparseVec::unit(shape.total(), flat, f.one()).add(&SparseVec::unit(shape.total(), shape.flatten(&swapped), f.one())));
            for r in 0..d.dr() {
                let rv = d.rbasis(r);
                let mut left = slots.clone();
                left[k] = d.act(&rv, &slots[k]);
                let mut right = slots.clone();
                right[k + 1] = d.act(&rv, &slots[k + 1]);
                let v = outer(&left.iter().collect::<Vec<_>>()).sub(&outer(&right.iter().collect::<Vec<_>>()));
                if !v.is_zero() {
                    rels.push(v);
                }
            }
        }
    }
    let rel = Matrix::from_columns(f, shape.total(), rels);
    Ok(Arc::new(quotient_by(&ambient, &rel, &format!("∧^{n}_R L({})", d.label))?))
}

/// `(∧^•_R 𝔏, ∂)` in degrees `0..=top`.
#[derive(Clone, Debug)]
pub struct LrComplex {
    pub label: String,
    pub field: FieldSpec,
    pub spaces: Vec<Arc<QuotientPresentation>>,
    /// `∂_n: ∧ⁿ → ∧ⁿ⁻¹`; `∂_0` has no rows.
    pub differentials: Vec<LinMap>,
}

impl LrComplex {
    pub fn top(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn dim(&self, n: usize) -> usize {
        self.spaces[n].dim()
    }
}

/// `∂` on plain tensors: the `∇_{Z_i}(1)` sum and the bracket sum.
fn boundary_free(d: &LieRinehartData, n: usize) -> Matrix {
    let f = d.field;
    let dl = d.dl();
    let div = d.divergence();
    let out_dim = if n == 1 { d.dr() } else { dl.pow(n as u32 - 1) };
    let sign = |k: usize| if k % 2 == 0 { f.one() } else { f.from_i64(-1) };
    free_matrix(f, &TensorShape::power(dl, n), out_dim, |ix| {
        let z: Vec<SparseVec> = ix.iter().map(|&i| d.lbasis(i)).collect();
        let mut acc = Accum::new(out_dim);
        for i in 0..n {
            let r = div.col(ix[i]);
            if n == 1 {
                acc.add_vec(&f.one(), r);
                continue;
            }
            let mut rest: Vec<SparseVec> = z.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| v.clone()).collect();
            rest[0] = d.act(r, &rest[0]);
            acc.add_vec(&sign(i), &outer(&rest.iter().collect::<Vec<_>>()));
        }
        for i in 0..n {
            for j in i + 1..n {
                let mut rest = vec![d.br(&z[i], &z[j])];
                rest.extend(z.iter().enumerate().filter(|(k, _)| *k != i && *k != j).map(|(_, v)| v.clone()));
                // (-1)^{(i+1)+(j+1)}
                acc.add_vec(&sign(i + j), &outer(&rest.iter().collect::<Vec<_>>()));
            }
        }
        acc.finish()
    })
}

pub fn lr_complex(d: &LieRinehartData, top: usize) -> Result<LrComplex> {
    let spaces = (0..=top).map(|n| wedge_space(d, n)).collect::<Result<Vec<_>>>()?;
    let mut differentials = Vec::with_capacity(top + 1);
    differentials.push(LinMap {
        dom: spaces[0].quotient.clone(),
        cod: Space::new(0, "0"),
        mat: Matrix::zeros(d.field, 0, spaces[0].dim()),
    });
    for n in 1..=top {
        let free = boundary_free(d, n);
        let m = descend(&free, &spaces[n], &spaces[n - 1]).map_err(|e| Error::descent(format!("∂_{n} on {}", d.label), e))?;
        differentials.push(m);
    }
    Ok(LrComplex { label: d.label.clone(), field: d.field, spaces, differentials })
}

/// Records `∂_{n-1} ∂_n = 0`; witness `(n, column)`.
pub fn check_lr_complex(c: &LrComplex) -> CheckReport {
    let mut r = CheckReport::new(format!("LR complex {}", c.label));
    let bad = (2..=c.top()).find_map(|n| {
        let sq = c.differentials[n - 1].mat.mul(&c.differentials[n].mat);
        sq.first_nonzero().map(|(_, col)| vec![n, col])
    });
    r.record("∂∂ = 0", bad);
    r
}

fn classes(c: &LrComplex, count: usize) -> Vec<HomologyClasses> {
    chain_homology(c.field, c.differentials.iter().map(|m| m.mat.clone()).collect(), true, count)
}

/// `H_n(R, 𝔏, ∇)` for `n = 0..=top`.
pub fn lr_homology(d: &LieRinehartData, top: usize) -> Result<HomologyReport> {
    let c = lr_complex(d, top + 1)?;
    let cl = classes(&c, top + 1);
    Ok(HomologyReport {
        theory: Theory::Lr,
        label: d.label.clone(),
        dims: cl.iter().map(|k| k.dim()).collect(),
        top,
        representatives: Some(cl.iter().map(|k| k.chain_reps()).collect()),
    })
}

/// `Z₁∧…∧Zₙ ↦ x₍₁₎(Z₁)∧…∧x₍ₙ₎(Zₙ)`; degree 0 is `ψ(x)`.
pub fn wedge_action(m: &LrMeasuringData, x: &SparseVec, n: usize) -> Result<LinMap> {
    let src = wedge_space(&m.source, n)?;
    let dst = wedge_space(&m.target, n)?;
    if n == 0 {
        let mat = crate::algcore::measuring_at(&m.small, x);
        return Ok(LinMap { dom: src.quotient.clone(), cod: dst.quotient.clone(), mat });
    }
    let free = slotwise_free(&m.c, &m.big, x, n);
    descend(&free, &src, &dst).map_err(|e| Error::descent(format!("{} on ∧^{n}", m.label), e))
}

/// Certificate that `maps` commute with `∂`; witness `(n, column)`.
pub fn lr_chain_map_certificate(src: &LrComplex, dst: &LrComplex, maps: &[LinMap]) -> CheckReport {
    let mut r = CheckReport::new(format!("LR chain map {} → {}", src.label, dst.label));
    let bad = (1..=src.top()).find_map(|n| {
        let lhs = maps[n - 1].mat.mul(&src.differentials[n].mat);
        let rhs = dst.differentials[n].mat.mul(&maps[n].mat);
        first_diff_col(&lhs, &rhs).map(|c| vec![n, c[0]])
    });
    r.record("commutes with ∂", bad);
    r
}

/// Induced maps in degrees `0..=top`, refused unless they commute with `∂`.
pub fn induced_lr_chain_map(m: &LrMeasuringData, x: &SparseVec, top: usize) -> Result<Vec<LinMap>> {
    let maps = (0..=top).map(|n| wedge_action(m, x, n)).collect::<Result<Vec<_>>>()?;
    let cert = lr_chain_map_certificate(&lr_complex(&m.source, top)?, &lr_complex(&m.target, top)?, &maps);
    if !cert.passed() {
        return Err(Error::CertificateFailure(cert.to_string().trim_end().to_string()));
    }
    Ok(maps)
}

/// Matrices of the induced maps on homology bases, degrees `0..=top`.
pub fn induced_lr_homology_maps(m: &LrMeasuringData, x: &SparseVec, top: usize) -> Result<Vec<Matrix>> {
    let maps = induced_lr_chain_map(m, x, top + 1)?;
    let a = classes(&lr_complex(&m.source, top + 1)?, top + 1);
    let b = classes(&lr_complex(&m.target, top + 1)?, top + 1);
    a.iter()
        .zip(&b)
        .map(|(ca, cb)| {
            let images = maps[ca.degree].mat.mul(&ca.chain_reps());
            let cols = images
                .columns()
                .iter()
                .map(|v| cb.class_of(v).ok_or_else(|| Error::CertificateFailure("image is not a cycle".into())))
                .collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(m.field(), cb.dim(), cols))
        })
        .collect()
}

impl LrMeasuringData {
    pub fn field(&self) -> FieldSpec {
        self.source.field
    }
}
