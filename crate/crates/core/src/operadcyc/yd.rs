//! `C^•(U, Z)` and `C_•(U, L ⊗ Z)` for a Hopf algebra `U` (base `A = k`), built
//! from explicit formulas on plain tensors.

use crate::algcore::{find_witness, CheckReport, ComoduleData, Side};
use crate::error::{Error, Result};
use crate::exactlin::{tensor::free_matrix, tensor::outer, Accum, FieldSpec, Matrix, Scalar, Space, SparseVec, TensorShape};
use crate::hopfalgebroid::{CoeffTower, HopfAlgebroidData, SaydModuleData, YdAlgebraData};
use crate::measuring::{check_yd_measuring, YdMeasuringData};

use super::{CompComoduleMeasuringData, CompModuleData, OperadData, OperadMeasuringData};

fn require_hopf_algebra(h: &HopfAlgebroidData) -> Result<()> {
    if h.da() != 1 {
        return Err(Error::InvalidData(format!(
            "Yetter-Drinfel'd operads are implemented over a base of dimension 1; {} has base of dimension {}",
            h.label,
            h.da()
        )));
    }
    Ok(())
}

type Terms = Vec<(Scalar, Vec<usize>, Vec<usize>)>;

/// Coproduct terms of `u¹ ⊗ … ⊗ uⁿ` slotwise: `(c, (uʲ₍₁₎)ⱼ, (uʲ₍₂₎)ⱼ)`.
fn coproducts(h: &HopfAlgebroidData, us: &[usize]) -> Terms {
    split(h.field.one(), us, |u| h.delta_terms(u))
}

/// Translation terms slotwise: `(c, (uʲ₊)ⱼ, (uʲ₋)ⱼ)`.
fn translations(h: &HopfAlgebroidData, us: &[usize]) -> Result<Terms> {
    let per = us.iter().map(|&u| h.translation_terms(u)).collect::<Result<Vec<_>>>()?;
    let mut i = 0;
    Ok(split(h.field.one(), us, |_| {
        i += 1;
        per[i - 1].clone()
    }))
}

fn split(one: Scalar, us: &[usize], mut terms: impl FnMut(usize) -> Vec<(Scalar, usize, usize)>) -> Terms {
    let mut out: Terms = vec![(one, vec![], vec![])];
    for &u in us {
        let t = terms(u);
        let mut next = Vec::with_capacity(out.len() * t.len());
        for (c, a, b) in &out {
            for (d, x, y) in &t {
                let mut a2 = a.clone();
                a2.push(*x);
                let mut b2 = b.clone();
                b2.push(*y);
                next.push((c * d, a2, b2));
            }
        }
        out = next;
    }
    out
}

fn product(h: &HopfAlgebroidData, factors: &[SparseVec]) -> SparseVec {
    factors.iter().fold(h.one_u().clone(), |acc, f| h.mul(&acc, f))
}

fn units(h: &HopfAlgebroidData, us: &[usize]) -> Vec<SparseVec> {
    us.iter().map(|&u| h.ubasis(u)).collect()
}

/// `f ∈ Hom(U^{⊗n}, Z)` as the vector with entry `w * dZ + k` the `k`-th
/// coordinate of `f(u_w)`; evaluation on a tensor in `U^{⊗n}`.
fn eval(f: &SparseVec, dz: usize, arg: &SparseVec) -> SparseVec {
    let mut acc = Accum::new(dz);
    for (w, c) in &arg.entries {
        for (k, x) in &f.entries {
            if k / dz == *w {
                acc.add(k % dz, &(c * x));
            }
        }
    }
    acc.finish()
}

/// `outer` with the empty product read as `1 ∈ k`.
fn tensor_of(f: FieldSpec, vs: &[SparseVec]) -> SparseVec {
    if vs.is_empty() {
        return SparseVec::unit(1, 0, f.one());
    }
    outer(&vs.iter().collect::<Vec<_>>())
}

/// `C^n(U, Z) = Hom(U^{⊗n}, Z)` for `n ≤ top` with
/// `(f ∘_i g)(u¹…u^{p+q-1}) = f(u¹₍₁₎, …, u^{p-i}₍₁₎, g(…)₍₋₁₎ u^{p-i+1}₍₂₎…u^{p+q-i}₍₂₎, u^{p+q-i+1}, …)
/// · (u¹₍₂₎…u^{p-i}₍₂₎ ▷ g(…)₍₀₎)`, `m = ε(u¹u²)1`, `𝟙 = ε(u)1`, `e = 1`.
pub fn build_yd_operad(h: &HopfAlgebroidData, z: &YdAlgebraData, top: usize) -> Result<OperadData> {
    require_hopf_algebra(h)?;
    let f = h.field;
    let (du, dz) = (h.du(), z.dim());
    let dim = |n: usize| du.pow(n as u32) * dz;
    let spaces: Vec<Space> = (0..=top).map(|n| Space::new(dim(n), format!("C^{n}(U,{})", z.label))).collect();
    let eps = |u: &SparseVec| h.eps_vec(u).get(0).cloned().unwrap_or_else(|| f.zero());
    let function = |n: usize, value: &dyn Fn(&[usize]) -> SparseVec| {
        let shape = TensorShape::power(du, n);
        let mut acc = Accum::new(dim(n));
        for w in 0..shape.total() {
            for (k, c) in &value(&shape.unflatten(w)).entries {
                acc.add(w * dz + k, c);
            }
        }
        acc.finish()
    };
    let one = function(1, &|w| z.z.unit.scale(&eps(&h.ubasis(w[0]))));
    let m = if top >= 2 {
        function(2, &|w| z.z.unit.scale(&eps(h.u.mul_basis(w[0], w[1]))))
    } else {
        SparseVec::zero(0)
    };
    let e = z.z.unit.clone();

    let compose = |p: usize, q: usize, i: usize, fv: &SparseVec, gv: &SparseVec| -> SparseVec {
        let n = p + q - 1;
        let a = p - i;
        function(n, &|w| {
            let (lead, rest) = w.split_at(a);
            let (block, tail) = rest.split_at(q);
            let mut acc = Accum::new(dz);
            for (c, l1, l2) in coproducts(h, lead) {
                let lead2 = product(h, &units(h, &l2));
                for (d, b1, b2) in coproducts(h, block) {
                    let g = eval(gv, dz, &tensor_of(f, &units(h, &b1)));
                    for (e, gm, g0) in z.coaction_terms(&g) {
                        let mut factors = vec![h.ubasis(gm)];
                        factors.extend(units(h, &b2));
                        let mut args = units(h, &l1);
                        args.push(product(h, &factors));
                        args.extend(units(h, tail));
                        let fval = eval(fv, dz, &tensor_of(f, &args));
                        let right = z.act(&lead2, &z.zbasis(g0));
                        acc.add_vec(&(&(&c * &d) * &e), &z.z.mul_vec(&fval, &right));
                    }
                }
            }
            acc.finish()
        })
    };
    let mut comp = vec![vec![Vec::new(); top + 1]; top + 1];
    for p in 1..=top {
        for q in 0..=top + 1 - p {
            for i in 1..=p {
                let cols = TensorShape::new(vec![dim(p), dim(q)]);
                let mat = free_matrix(f, &cols, dim(p + q - 1), |ix| {
                    compose(p, q, i, &SparseVec::unit(dim(p), ix[0], f.one()), &SparseVec::unit(dim(q), ix[1], f.one()))
                });
                comp[p][q].push(mat);
            }
        }
    }
    let o = OperadData { label: format!("C(U,{})", z.label), field: f, spaces, comp, one, m, e };
    o.validate()?;
    Ok(o)
}

/// `L ⊗ Z` with coaction `l⊗z ↦ z₍₋₁₎l₍₋₁₎ ⊗ l₍₀₎⊗z₍₀₎` and action
/// `(l⊗z)·u = l u₊ ⊗ u₋ z` is stable; witness `(l, z)`.
pub fn tensor_is_stable(l: &SaydModuleData, z: &YdAlgebraData) -> Result<Option<Vec<usize>>> {
    let h = &l.hopf;
    require_hopf_algebra(h)?;
    let (dl, dz) = (l.dim(), z.dim());
    let mut failure = None;
    'outer: for x in 0..dl {
        for y in 0..dz {
            let mut acc = Accum::new(dl * dz);
            for (c, zm, z0) in z.coaction_terms(&z.zbasis(y)) {
                for (d, lm, l0) in l.coaction_terms(x) {
                    let w = h.u.mul_basis(zm, lm).clone();
                    for (e, wp, wm) in h.translation_vec(&w)? {
                        let left = l.act(l0, wp);
                        let right = z.act(&h.ubasis(wm), &z.zbasis(z0));
                        acc.add_vec(&(&(&c * &d) * &e), &outer(&[left, &right]));
                    }
                }
            }
            if acc.finish() != outer(&[&l.pbasis(x), &z.zbasis(y)]) {
                failure = Some(vec![x, y]);
                break 'outer;
            }
        }
    }
    Ok(failure)
}

/// `C_k(U, L ⊗ Z) = L ⊗ Z ⊗ U^{⊗k}`, coordinates `(l * dZ + z) * dU^k + u`, as a
/// comp module over `C^•(U, Z)` with the `•_i` (`i > 0`), `•_0` and `t` formulas.
pub fn build_yd_comp_module(o: &OperadData, l: &SaydModuleData, z: &YdAlgebraData, top: usize) -> Result<CompModuleData> {
    let h = &l.hopf;
    require_hopf_algebra(h)?;
    if let Some(w) = tensor_is_stable(l, z)? {
        return Err(Error::StabilityFailure(format!("{} ⊗ {} at basis pair {w:?}", l.label, z.label)));
    }
    let f = h.field;
    let (du, dz, dl) = (h.du(), z.dim(), l.dim());
    let dim = |k: usize| dl * dz * du.pow(k as u32);
    let spaces: Vec<Space> = (0..=top).map(|k| Space::new(dim(k), format!("C_{k}(U,{}⊗{})", l.label, z.label))).collect();
    let chain = |lv: &SparseVec, zv: &SparseVec, us: &[SparseVec]| {
        let mut parts = vec![lv.clone(), zv.clone()];
        parts.extend_from_slice(us);
        tensor_of(f, &parts)
    };
    let decode = |k: usize, x: usize| -> (usize, usize, Vec<usize>) {
        let shape = TensorShape::power(du, k);
        let (lz, w) = (x / shape.total(), x % shape.total());
        (lz / dz, lz % dz, shape.unflatten(w))
    };

    // f •_i (l ⊗ z ⊗ u¹…u^k) for i > 0
    let bullet_pos = |p: usize, i: usize, fv: &SparseVec, k: usize, x: usize| -> Result<SparseVec> {
        let (lb, zb, us) = decode(k, x);
        let a = k + 1 - p - i;
        let (lead, rest) = us.split_at(a);
        let (block, tail) = rest.split_at(p);
        let mut acc = Accum::new(dim(k + 1 - p));
        for (c, l1, l2) in coproducts(h, lead) {
            let lead2 = product(h, &units(h, &l2));
            for (d, b1, b2) in coproducts(h, block) {
                let fval = eval(fv, dz, &tensor_of(f, &units(h, &b1)));
                for (e, fm, f0) in z.coaction_terms(&fval) {
                    let zpart = z.z.mul_vec(&z.act(&lead2, &z.zbasis(f0)), &z.zbasis(zb));
                    let mut factors = vec![h.ubasis(fm)];
                    factors.extend(units(h, &b2));
                    let mut us2 = units(h, &l1);
                    us2.push(product(h, &factors));
                    us2.extend(units(h, tail));
                    acc.add_vec(&(&(&c * &d) * &e), &chain(&l.pbasis(lb), &zpart, &us2));
                }
            }
        }
        Ok(acc.finish())
    };

    // f •_0 (l ⊗ z ⊗ u¹…u^k) for p ≥ 1
    let bullet_zero = |p: usize, fv: &SparseVec, k: usize, x: usize| -> Result<SparseVec> {
        let (lb, zb, us) = decode(k, x);
        let b = k + 1 - p;
        let mut acc = Accum::new(dim(b));
        for (c, plus, minus) in translations(h, &us)? {
            let (head, back) = plus.split_at(b);
            for (d, zm, z0) in z.coaction_terms(&z.zbasis(zb)) {
                for (e, lm, l0) in l.coaction_terms(lb) {
                    // u^k₋ … u¹₋ z₍₋₁₎ l₍₋₁₎
                    let mut factors: Vec<SparseVec> = minus.iter().rev().map(|&u| h.ubasis(u)).collect();
                    factors.push(h.ubasis(zm));
                    factors.push(h.ubasis(lm));
                    let mut args = units(h, back);
                    args.push(product(h, &factors));
                    let fval = eval(fv, dz, &tensor_of(f, &args));
                    for (g, h1, h2) in coproducts(h, head) {
                        let zpart = z.z.mul_vec(&z.act(&product(h, &units(h, &h2)), &fval), &z.zbasis(z0));
                        let coeff = &(&(&c * &d) * &e) * &g;
                        acc.add_vec(&coeff, &chain(&l.pbasis(l0), &zpart, &units(h, &h1)));
                    }
                }
            }
        }
        Ok(acc.finish())
    };

    // t(l ⊗ z ⊗ u¹…u^k) = l₍₀₎u¹₊₊ ⊗ u¹₊₋z₍₀₎ ⊗ u²₊ ⊗ … ⊗ u^k₊ ⊗ u^k₋…u¹₋z₍₋₁₎l₍₋₁₎
    let cyclic = |k: usize, x: usize| -> Result<SparseVec> {
        if k == 0 {
            return Ok(SparseVec::unit(dim(0), x, f.one()));
        }
        let (lb, zb, us) = decode(k, x);
        let mut acc = Accum::new(dim(k));
        for (c, plus, minus) in translations(h, &us)? {
            for (d, pp, pm) in h.translation_terms(plus[0])? {
                for (e, zm, z0) in z.coaction_terms(&z.zbasis(zb)) {
                    for (g, lm, l0) in l.coaction_terms(lb) {
                        let lpart = l.act(l0, pp).clone();
                        let zpart = z.act(&h.ubasis(pm), &z.zbasis(z0));
                        let mut factors: Vec<SparseVec> = minus.iter().rev().map(|&u| h.ubasis(u)).collect();
                        factors.push(h.ubasis(zm));
                        factors.push(h.ubasis(lm));
                        let mut us2 = units(h, &plus[1..]);
                        us2.push(product(h, &factors));
                        let coeff = &(&(&c * &d) * &e) * &g;
                        acc.add_vec(&coeff, &chain(&lpart, &zpart, &us2));
                    }
                }
            }
        }
        Ok(acc.finish())
    };

    let mut bullet = vec![vec![Vec::new(); top + 1]; o.top() + 1];
    for p in 0..=o.top() {
        for k in 0..=top {
            if p > k + 1 {
                continue;
            }
            for i in 0..=k + 1 - p {
                if k + 1 - p > top || (p == 0 && i == 0) {
                    bullet[p][k].push(None);
                    continue;
                }
                let shape = TensorShape::new(vec![o.dim(p), dim(k)]);
                let failed = std::sync::Mutex::new(None);
                let mat = free_matrix(f, &shape, dim(k + 1 - p), |ix| {
                    let fv = o.basis(p, ix[0]);
                    let out = if i == 0 { bullet_zero(p, &fv, k, ix[1]) } else { bullet_pos(p, i, &fv, k, ix[1]) };
                    out.unwrap_or_else(|e| {
                        *failed.lock().unwrap() = Some(e);
                        SparseVec::zero(dim(k + 1 - p))
                    })
                });
                if let Some(e) = failed.into_inner().unwrap() {
                    return Err(e);
                }
                bullet[p][k].push(Some(mat));
            }
        }
    }
    let t = (0..=top)
        .map(|k| {
            let cols = (0..dim(k)).map(|x| cyclic(k, x)).collect::<Result<Vec<_>>>()?;
            Ok(Matrix::from_columns(f, dim(k), cols))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CompModuleData { label: format!("{}⊗{}", l.label, z.label), field: f, spaces, bullet, t })
}

/// `h: L → L'` commutes with the right actions and the coactions; witnesses `(l, u)` and `(l)`.
pub fn check_ayd_morphism(l: &SaydModuleData, l2: &SaydModuleData, map: &Matrix) -> CheckReport {
    let mut r = CheckReport::new(format!("AYD morphism {} → {}", l.label, l2.label));
    let shapes = map.rows == l2.dim() && map.cols == l.dim() && l.hopf.du() == l2.hopf.du();
    r.record("shapes", if shapes { None } else { Some(vec![]) });
    if !shapes {
        return r;
    }
    let h = &l.hopf;
    r.record(
        "action",
        find_witness(&[l.dim(), h.du()], |ix| {
            map.mul_vec(l.act(ix[0], ix[1])) != l2.act_vec(map.col(ix[0]), &h.ubasis(ix[1]))
        }),
    );
    let target = match l2.tower(CoeffTower::Cocyclic, 1) {
        Ok(t) => t,
        Err(e) => {
            r.unchecked("coaction", e.to_string());
            return r;
        }
    };
    r.record(
        "coaction",
        find_witness(&[l.dim()], |ix| {
            let lhs = l2.coaction.mul_vec(map.col(ix[0]));
            let mut acc = Accum::new(h.du() * l2.dim());
            for (c, u, p0) in l.coaction_terms(ix[0]) {
                acc.add_vec(&c, &outer(&[&h.ubasis(u), map.col(p0)]));
            }
            lhs != target.project(&acc.finish())
        }),
    );
    r
}

/// From a YD measuring `ψ` and an AYD morphism `h: L → L'`: `Ψ_n(x)(f) = ψ(x) ∘ f`
/// and `Ω_k(y) = h ⊗ ψ(y) ⊗ id^{⊗k}` with `D = C` coacting by its coproduct.
pub fn induce_from_yd(
    ym: &YdMeasuringData,
    l: &SaydModuleData,
    l2: &SaydModuleData,
    map: &Matrix,
    top: usize,
) -> Result<(OperadMeasuringData, CompComoduleMeasuringData)> {
    let yr = check_yd_measuring(ym);
    if !yr.passed() {
        return Err(Error::CertificateFailure(yr.to_string().trim_end().to_string()));
    }
    let hr = check_ayd_morphism(l, l2, map);
    if !hr.passed() {
        return Err(Error::CertificateFailure(hr.to_string().trim_end().to_string()));
    }
    let h = &ym.z.hopf;
    let f = h.field;
    let o = build_yd_operad(h, &ym.z, top)?;
    let o2 = build_yd_operad(h, &ym.z2, top)?;
    let du = h.du();
    let psi = (0..=top)
        .map(|n| ym.psi.iter().map(|p| Matrix::identity(f, du.pow(n as u32)).kron(p)).collect())
        .collect();
    let om = OperadMeasuringData::new(&format!("Ψ({})", ym.label), ym.c.clone(), o, o2, psi)?;
    let lm = build_yd_comp_module(&om.source, l, &ym.z, top)?;
    let lm2 = build_yd_comp_module(&om.target, l2, &ym.z2, top)?;
    let omega = (0..=top)
        .map(|k| ym.psi.iter().map(|p| map.kron(p).kron(&Matrix::identity(f, du.pow(k as u32)))).collect())
        .collect();
    let d = ComoduleData::regular(&ym.c, Side::Left);
    let ccm = CompComoduleMeasuringData::new(&format!("({}, {})", ym.label, l.label), om.clone(), d, lm, lm2, omega)?;
    Ok((om, ccm))
}
