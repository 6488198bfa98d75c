use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{
    descend, tensor::free_matrix, tensor::outer, Accum, LinMap, Matrix, QuotientPresentation, Scalar, Space,
    SparseVec, TensorShape,
};
use crate::hopfalgebroid::{check_sayd, CoeffTower, HopfAlgebroidData, SaydModuleData, TowerKind};

use super::{CyclicModuleData, Direction};

fn tens(factors: &[SparseVec]) -> SparseVec {
    outer(&factors.iter().collect::<Vec<_>>())
}

/// All combinations of one term from each list, coefficients multiplied.
pub(crate) fn product_terms<T: Clone>(field: crate::exactlin::FieldSpec, lists: &[Vec<(Scalar, T)>]) -> Vec<(Scalar, Vec<T>)> {
    let mut out = vec![(field.one(), Vec::new())];
    for list in lists {
        let mut next = Vec::with_capacity(out.len() * list.len());
        for (c, prefix) in &out {
            for (d, x) in list {
                let mut v = prefix.clone();
                v.push(x.clone());
                next.push((c * d, v));
            }
        }
        out = next;
    }
    out
}

fn tower_shape(h: &HopfAlgebroidData, n: usize) -> TensorShape {
    if n == 0 {
        TensorShape::new(vec![h.da()])
    } else {
        TensorShape::power(h.du(), n)
    }
}

fn coeff_shape(p: &SaydModuleData, kind: CoeffTower, n: usize) -> TensorShape {
    let mut dims = vec![p.hopf.du(); n];
    match kind {
        CoeffTower::Cyclic => dims.insert(0, p.dim()),
        CoeffTower::Cocyclic => dims.push(p.dim()),
    }
    TensorShape::new(dims)
}

/// Free formula on the ambient of `src`, descended to `dst`.
fn op(
    src: &QuotientPresentation,
    shape: &TensorShape,
    dst: &QuotientPresentation,
    name: String,
    f: impl Fn(&[usize]) -> SparseVec + Sync,
) -> Result<LinMap> {
    let free = free_matrix(src.field(), shape, dst.ambient.dim, f);
    descend(&free, src, dst).map_err(|e| Error::descent(name, e))
}

/// Same formula evaluated with fallible term expansion (translation map).
fn try_op(
    src: &QuotientPresentation,
    shape: &TensorShape,
    dst: &QuotientPresentation,
    name: String,
    f: impl Fn(&[usize]) -> Result<SparseVec> + Sync,
) -> Result<LinMap> {
    let cols = (0..shape.total()).map(|flat| f(&shape.unflatten(flat))).collect::<Result<Vec<_>>>()?;
    let free = Matrix::from_columns(src.field(), dst.ambient.dim, cols);
    descend(&free, src, dst).map_err(|e| Error::descent(name, e))
}

fn identity_on(q: &QuotientPresentation) -> LinMap {
    LinMap::identity(q.field(), &q.quotient)
}

fn spaces_of(towers: &[Arc<QuotientPresentation>]) -> Vec<Space> {
    towers.iter().map(|t| t.quotient.clone()).collect()
}

/// `C^n(U) = U^{⊗_A n}`, `C^0 = A`.
pub fn build_cocyclic_cu(h: &HopfAlgebroidData, top: usize) -> Result<CyclicModuleData> {
    let towers = (0..=top).map(|n| h.tower(TowerKind::Left, n)).collect::<Result<Vec<_>>>()?;
    let e = |i: usize| h.ubasis(i);
    let one = h.one_u().clone();
    let mut faces = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n < top {
            let (src, dst, sh) = (&towers[n], &towers[n + 1], tower_shape(h, n));
            for i in 0..=n + 1 {
                let name = format!("δ_{i} on C^{n}({})", h.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    let us: Vec<SparseVec> = ix.iter().map(|&x| e(x)).collect();
                    if n == 0 {
                        return if i == 0 { h.t_of(ix[0]).clone() } else { h.s_of(ix[0]).clone() };
                    }
                    if i == 0 || i == n + 1 {
                        let mut f = us;
                        f.insert(if i == 0 { 0 } else { n }, one.clone());
                        return tens(&f);
                    }
                    let mut acc = Accum::new(dst.ambient.dim);
                    for (c, a, b) in h.delta_terms(ix[i - 1]) {
                        let mut f = us.clone();
                        f[i - 1] = e(b);
                        f.insert(i - 1, e(a));
                        acc.add_vec(&c, &tens(&f));
                    }
                    acc.finish()
                })?);
            }
        }
        faces.push(row);
    }
    let mut degeneracies = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n > 0 {
            let (src, dst, sh) = (&towers[n], &towers[n - 1], tower_shape(h, n));
            for i in 0..n {
                let name = format!("σ_{i} on C^{n}({})", h.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    if n == 1 {
                        return h.eps_of(ix[0]).clone();
                    }
                    let mut f: Vec<SparseVec> = ix.iter().map(|&x| e(x)).collect();
                    let a = h.eps_of(ix[i]);
                    if i + 1 < n {
                        f[i + 1] = h.mul(&h.s_vec(a), &f[i + 1]);
                    } else {
                        f[i - 1] = h.mul(&h.t_vec(a), &f[i - 1]);
                    }
                    f.remove(i);
                    tens(&f)
                })?);
            }
        }
        degeneracies.push(row);
    }
    let mut cyclic = Vec::with_capacity(top + 1);
    for n in 0..=top {
        if n == 0 {
            cyclic.push(identity_on(&towers[0]));
            continue;
        }
        let (src, sh) = (&towers[n], tower_shape(h, n));
        let name = format!("τ_{n} on C^{n}({})", h.label);
        cyclic.push(op(src, &sh, src, name, |ix| {
            let mut acc = Accum::new(src.ambient.dim);
            for (c, w) in h.sweedler(h.antipode_of(ix[0]), n) {
                let mut f: Vec<SparseVec> = (1..n).map(|k| h.mul(&e(w[k - 1]), &e(ix[k]))).collect();
                f.push(e(w[n - 1]));
                acc.add_vec(&c, &tens(&f));
            }
            acc.finish()
        })?);
    }
    Ok(CyclicModuleData {
        label: format!("C^•({})", h.label),
        field: h.field,
        direction: Direction::Cocyclic,
        spaces: spaces_of(&towers),
        faces,
        degeneracies,
        cyclic,
    })
}

/// `(c, u₍₁₎, u₍₂₎)` choices for each listed basis element.
fn delta_choices(h: &HopfAlgebroidData, ix: &[usize]) -> Vec<(Scalar, Vec<(usize, usize)>)> {
    let lists: Vec<Vec<(Scalar, (usize, usize))>> =
        ix.iter().map(|&u| h.delta_terms(u).into_iter().map(|(c, a, b)| (c, (a, b))).collect()).collect();
    product_terms(h.field, &lists)
}

/// `C_n(U) = U^{⊗_{A^op} n}`, `C_0 = A`.
pub fn build_cyclic_cu(h: &HopfAlgebroidData, top: usize) -> Result<CyclicModuleData> {
    let towers = (0..=top).map(|n| h.tower(TowerKind::Right, n)).collect::<Result<Vec<_>>>()?;
    let e = |i: usize| h.ubasis(i);
    let one = h.one_u().clone();
    let mut faces = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n > 0 {
            let (src, dst, sh) = (&towers[n], &towers[n - 1], tower_shape(h, n));
            for i in 0..=n {
                let name = format!("d_{i} on C_{n}({})", h.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    if n == 1 {
                        return if i == 0 { h.eps_vec(h.antipode_of(ix[0])) } else { h.eps_of(ix[0]).clone() };
                    }
                    let mut f: Vec<SparseVec> = ix.iter().map(|&x| e(x)).collect();
                    if i == 0 {
                        let a = h.eps_vec(h.antipode_of(ix[0]));
                        f[1] = h.mul(&h.t_vec(&a), &f[1]);
                        f.remove(0);
                    } else if i < n {
                        f[i - 1] = h.mul(&f[i - 1], &f[i]);
                        f.remove(i);
                    } else {
                        f[n - 2] = h.mul(&f[n - 2], &h.t_vec(h.eps_of(ix[n - 1])));
                        f.pop();
                    }
                    tens(&f)
                })?);
            }
        }
        faces.push(row);
    }
    let mut degeneracies = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n < top {
            let (src, dst, sh) = (&towers[n], &towers[n + 1], tower_shape(h, n));
            for i in 0..=n {
                let name = format!("s_{i} on C_{n}({})", h.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    if n == 0 {
                        return h.t_of(ix[0]).clone();
                    }
                    let mut f: Vec<SparseVec> = ix.iter().map(|&x| e(x)).collect();
                    f.insert(i, one.clone());
                    tens(&f)
                })?);
            }
        }
        degeneracies.push(row);
    }
    let mut cyclic = Vec::with_capacity(top + 1);
    for n in 0..=top {
        if n == 0 {
            cyclic.push(identity_on(&towers[0]));
            continue;
        }
        let (src, sh) = (&towers[n], tower_shape(h, n));
        let name = format!("t_{n} on C_{n}({})", h.label);
        cyclic.push(op(src, &sh, src, name, |ix| {
            let mut acc = Accum::new(src.ambient.dim);
            for (c, pieces) in delta_choices(h, &ix[..n - 1]) {
                let mut seconds: Vec<SparseVec> = pieces.iter().map(|&(_, b)| e(b)).collect();
                seconds.push(e(ix[n - 1]));
                let prod = h.prod(&seconds.iter().collect::<Vec<_>>());
                let mut f = vec![h.antipode_vec(&prod)];
                f.extend(pieces.iter().map(|&(a, _)| e(a)));
                acc.add_vec(&c, &tens(&f));
            }
            acc.finish()
        })?);
    }
    Ok(CyclicModuleData {
        label: format!("C_•({})", h.label),
        field: h.field,
        direction: Direction::Cyclic,
        spaces: spaces_of(&towers),
        faces,
        degeneracies,
        cyclic,
    })
}

fn require_stable(p: &SaydModuleData) -> Result<()> {
    let r = check_sayd(p);
    if r.passed() {
        Ok(())
    } else if r.status_of("stable") == Some(crate::algcore::Status::Fail) {
        Err(Error::StabilityFailure(p.label.clone()))
    } else {
        let first = r.failures().next().map(|f| f.axiom.clone()).unwrap_or_default();
        Err(Error::InvalidData(format!("{} is not an SAYD module ({first})", p.label)))
    }
}

/// `C_n(U;P) = P ⊗_{A^op} U^{⊗_{A^op} n}`.
pub fn build_cyclic_with_coeffs(p: &SaydModuleData, top: usize) -> Result<CyclicModuleData> {
    require_stable(p)?;
    let h = &p.hopf;
    let kind = CoeffTower::Cyclic;
    let towers = (0..=top).map(|n| p.tower(kind, n)).collect::<Result<Vec<_>>>()?;
    let e = |i: usize| h.ubasis(i);
    let one = h.one_u().clone();
    let mut faces = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n > 0 {
            let (src, dst, sh) = (&towers[n], &towers[n - 1], coeff_shape(p, kind, n));
            for i in 0..=n {
                let name = format!("d_{i} on C_{n}({};{})", h.label, p.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    let pv = p.pbasis(ix[0]);
                    let mut us: Vec<SparseVec> = ix[1..].iter().map(|&x| e(x)).collect();
                    if i == 0 {
                        let ta = h.t_vec(h.eps_of(ix[n]));
                        if n == 1 {
                            return p.act_vec(&pv, &ta);
                        }
                        us[n - 2] = h.mul(&us[n - 2], &ta);
                        us.pop();
                    } else if i < n {
                        let k = n - i - 1;
                        us[k] = h.mul(&us[k], &us[k + 1]);
                        us.remove(k + 1);
                    } else {
                        let head = p.act_vec(&pv, &us.remove(0));
                        us.insert(0, head);
                        return tens(&us);
                    }
                    us.insert(0, pv);
                    tens(&us)
                })?);
            }
        }
        faces.push(row);
    }
    let mut degeneracies = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n < top {
            let (src, dst, sh) = (&towers[n], &towers[n + 1], coeff_shape(p, kind, n));
            for i in 0..=n {
                let name = format!("s_{i} on C_{n}({};{})", h.label, p.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    let mut f: Vec<SparseVec> = vec![p.pbasis(ix[0])];
                    f.extend(ix[1..].iter().map(|&x| e(x)));
                    f.insert(n - i + 1, one.clone());
                    tens(&f)
                })?);
            }
        }
        degeneracies.push(row);
    }
    let mut cyclic = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let (src, sh) = (&towers[n], coeff_shape(p, kind, n));
        let name = format!("t_{n} on C_{n}({};{})", h.label, p.label);
        cyclic.push(try_op(src, &sh, src, name, |ix| {
            let mut acc = Accum::new(src.ambient.dim);
            let lists = ix[1..]
                .iter()
                .map(|&u| Ok(h.translation_terms(u)?.into_iter().map(|(c, a, b)| (c, (a, b))).collect()))
                .collect::<Result<Vec<Vec<_>>>>()?;
            for (c, pm, p0) in p.coaction_terms(ix[0]) {
                for (d, tr) in product_terms(h.field, &lists) {
                    let coef = &c * &d;
                    if n == 0 {
                        acc.add_vec(&coef, p.act(p0, pm));
                        continue;
                    }
                    let mut f = vec![p.act(p0, tr[0].0).clone()];
                    f.extend(tr[1..].iter().map(|&(a, _)| e(a)));
                    let mut minus: Vec<SparseVec> = tr.iter().rev().map(|&(_, b)| e(b)).collect();
                    minus.push(e(pm));
                    f.push(h.prod(&minus.iter().collect::<Vec<_>>()));
                    acc.add_vec(&coef, &tens(&f));
                }
            }
            Ok(acc.finish())
        })?);
    }
    Ok(CyclicModuleData {
        label: format!("C_•({};{})", h.label, p.label),
        field: h.field,
        direction: Direction::Cyclic,
        spaces: spaces_of(&towers),
        faces,
        degeneracies,
        cyclic,
    })
}

/// `C^n(U;P) = U^{⊗_A n} ⊗_A P`.
pub fn build_cocyclic_with_coeffs(p: &SaydModuleData, top: usize) -> Result<CyclicModuleData> {
    require_stable(p)?;
    let h = &p.hopf;
    let kind = CoeffTower::Cocyclic;
    let towers = (0..=top).map(|n| p.tower(kind, n)).collect::<Result<Vec<_>>>()?;
    let e = |i: usize| h.ubasis(i);
    let one = h.one_u().clone();
    let mut faces = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n < top {
            let (src, dst, sh) = (&towers[n], &towers[n + 1], coeff_shape(p, kind, n));
            for i in 0..=n + 1 {
                let name = format!("δ_{i} on C^{n}({};{})", h.label, p.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    let mut us: Vec<SparseVec> = ix[..n].iter().map(|&x| e(x)).collect();
                    let pi = ix[n];
                    let mut acc = Accum::new(dst.ambient.dim);
                    if i == 0 {
                        us.insert(0, one.clone());
                        us.push(p.pbasis(pi));
                        return tens(&us);
                    }
                    if i == n + 1 {
                        for (c, pm, p0) in p.coaction_terms(pi) {
                            let mut f = us.clone();
                            f.push(e(pm));
                            f.push(p.pbasis(p0));
                            acc.add_vec(&c, &tens(&f));
                        }
                        return acc.finish();
                    }
                    for (c, a, b) in h.delta_terms(ix[i - 1]) {
                        let mut f = us.clone();
                        f[i - 1] = e(b);
                        f.insert(i - 1, e(a));
                        f.push(p.pbasis(pi));
                        acc.add_vec(&c, &tens(&f));
                    }
                    acc.finish()
                })?);
            }
        }
        faces.push(row);
    }
    let mut degeneracies = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row = Vec::new();
        if n > 0 {
            let (src, dst, sh) = (&towers[n], &towers[n - 1], coeff_shape(p, kind, n));
            for i in 0..n {
                let name = format!("σ_{i} on C^{n}({};{})", h.label, p.label);
                row.push(op(src, &sh, dst, name, |ix| {
                    let mut f: Vec<SparseVec> = ix[..n].iter().map(|&x| e(x)).collect();
                    f.push(p.pbasis(ix[n]));
                    let a = h.eps_of(ix[i]);
                    f[i + 1] = if i + 1 < n { h.mul(&h.s_vec(a), &f[i + 1]) } else { p.left_a(a, &f[n]) };
                    f.remove(i);
                    tens(&f)
                })?);
            }
        }
        degeneracies.push(row);
    }
    let mut cyclic = Vec::with_capacity(top + 1);
    for n in 0..=top {
        if n == 0 {
            cyclic.push(identity_on(&towers[0]));
            continue;
        }
        let (src, sh) = (&towers[n], coeff_shape(p, kind, n));
        let name = format!("τ_{n} on C^{n}({};{})", h.label, p.label);
        cyclic.push(try_op(src, &sh, src, name, |ix| {
            let mut acc = Accum::new(src.ambient.dim);
            for (c, up, um) in h.translation_terms(ix[0])? {
                for (d, w) in h.sweedler(&e(um), n) {
                    for (g, pm, p0) in p.coaction_terms(ix[n]) {
                        let mut f: Vec<SparseVec> = (1..n).map(|k| h.mul(&e(w[k - 1]), &e(ix[k]))).collect();
                        f.push(h.mul(&e(w[n - 1]), &e(pm)));
                        f.push(p.act(p0, up).clone());
                        acc.add_vec(&(&(&c * &d) * &g), &tens(&f));
                    }
                }
            }
            Ok(acc.finish())
        })?);
    }
    Ok(CyclicModuleData {
        label: format!("C^•({};{})", h.label, p.label),
        field: h.field,
        direction: Direction::Cocyclic,
        spaces: spaces_of(&towers),
        faces,
        degeneracies,
        cyclic,
    })
}

/// Degreewise `ξ_n` and its inverse.
#[derive(Clone, Debug)]
pub struct HopfGaloisMaps {
    pub forward: Vec<LinMap>,
    pub inverse: Vec<LinMap>,
}

/// `u¹⊗…⊗uⁿ ↦ u¹₍₁₎ ⊗ u¹₍₂₎u²₍₁₎ ⊗ … ⊗ u¹₍ₙ₎…u^{n-1}₍₂₎uⁿ`; with coefficients
/// `p` moves from the front to the back.
pub fn hopf_galois_chain_map(h: &HopfAlgebroidData, p: Option<&SaydModuleData>, top: usize) -> Result<HopfGaloisMaps> {
    let e = |i: usize| h.ubasis(i);
    let mut forward = Vec::with_capacity(top + 1);
    let mut inverse = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let (src, dst, sh, off) = match p {
            None => (h.tower(TowerKind::Right, n)?, h.tower(TowerKind::Left, n)?, tower_shape(h, n), 0),
            Some(p) => (
                p.tower(CoeffTower::Cyclic, n)?,
                p.tower(CoeffTower::Cocyclic, n)?,
                coeff_shape(p, CoeffTower::Cyclic, n),
                1,
            ),
        };
        let name = format!("ξ_{n} for {}", h.label);
        let f = if n == 0 {
            identity_on(&src)
        } else {
            op(&src, &sh, &dst, name.clone(), |ix| {
                let us = &ix[off..];
                let lists: Vec<Vec<(Scalar, Vec<usize>)>> =
                    (0..n).map(|j| h.sweedler(&e(us[j]), n - j)).collect();
                let mut acc = Accum::new(dst.ambient.dim);
                for (c, pieces) in product_terms(h.field, &lists) {
                    let mut f: Vec<SparseVec> = (0..n)
                        .map(|k| {
                            let factors: Vec<SparseVec> = (0..=k).map(|j| e(pieces[j][k - j])).collect();
                            h.prod(&factors.iter().collect::<Vec<_>>())
                        })
                        .collect();
                    if off == 1 {
                        f.push(p.unwrap().pbasis(ix[0]));
                    }
                    acc.add_vec(&c, &tens(&f));
                }
                acc.finish()
            })?
        };
        let inv = f.inverse().map_err(|_| Error::NotInvertible(name))?;
        forward.push(f);
        inverse.push(inv);
    }
    Ok(HopfGaloisMaps { forward, inverse })
}

/// Operators of `m` conjugated by degreewise isomorphisms `f_n` (with inverses `g_n`).
pub fn transport(m: &CyclicModuleData, f: &[LinMap], g: &[LinMap]) -> Result<CyclicModuleData> {
    let top = m.top();
    if f.len() <= top || g.len() <= top {
        return Err(Error::DimensionMismatch("transport needs maps in every degree".into()));
    }
    let conj = |op: &LinMap, from: usize, to: usize| -> Result<LinMap> {
        Ok(f[to].compose(op)?.compose(&g[from])?)
    };
    let target = |n: usize, face: bool| match (m.direction, face) {
        (Direction::Cyclic, true) | (Direction::Cocyclic, false) => n - 1,
        _ => n + 1,
    };
    let mut out = m.clone();
    for n in 0..=top {
        out.spaces[n] = f[n].cod.clone();
        out.faces[n] = m.faces[n].iter().map(|op| conj(op, n, target(n, true))).collect::<Result<_>>()?;
        out.degeneracies[n] = m.degeneracies[n].iter().map(|op| conj(op, n, target(n, false))).collect::<Result<_>>()?;
        out.cyclic[n] = conj(&m.cyclic[n], n, n)?;
    }
    out.label = format!("transported {}", m.label);
    Ok(out)
}

/// Cyclic module obtained from a cocyclic one by cyclic duality:
/// `d_0 = σ_{n-1} τ_n`, `d_i = σ_{i-1}` (`i ≥ 1`), `s_i = δ_i`, `t_n = τ_n^{-1}`.
/// With this indexing `ξ` carries `C_•(U)` onto the dual of `C^•(U)` operator by operator.
pub fn cyclic_dual(m: &CyclicModuleData) -> Result<CyclicModuleData> {
    if m.direction != Direction::Cocyclic {
        return Err(Error::InvalidData("cyclic dual expects a cocyclic module".into()));
    }
    let top = m.top();
    let inv = m.cyclic.iter().map(|t| t.inverse()).collect::<Result<Vec<_>, _>>()?;
    let mut faces = Vec::with_capacity(top + 1);
    let mut degeneracies = Vec::with_capacity(top + 1);
    for n in 0..=top {
        let mut row: Vec<LinMap> = Vec::with_capacity(n + 1);
        if n > 0 {
            row.push(m.degeneracies[n][n - 1].compose(&m.cyclic[n])?);
            row.extend(m.degeneracies[n].iter().cloned());
        }
        faces.push(row);
        degeneracies.push(if n < top { m.faces[n][..=n].to_vec() } else { vec![] });
    }
    Ok(CyclicModuleData {
        label: format!("dual {}", m.label),
        field: m.field,
        direction: Direction::Cyclic,
        spaces: m.spaces.clone(),
        faces,
        degeneracies,
        cyclic: inv,
    })
}

/// Opposite cyclic module: `d_i ↦ d_{n-i}`, `s_i ↦ s_{n-i}`, `t ↦ t^{-1}`. Same homology.
pub fn opposite(m: &CyclicModuleData) -> Result<CyclicModuleData> {
    let mut out = m.clone();
    for n in 0..=m.top() {
        out.faces[n].reverse();
        out.degeneracies[n].reverse();
        out.cyclic[n] = m.cyclic[n].inverse()?;
    }
    out.label = format!("opposite {}", m.label);
    Ok(out)
}
