use crate::algcore::{first_diff_col, CheckReport};
use crate::error::{Error, Result};
use crate::exactlin::{tensor::free_matrix, tensor::outer, tensor_space, Accum, LinMap, Matrix, SparseVec, TensorShape};
use crate::hopfalgebroid::{HopfAlgebroidData, TowerKind};
use crate::measuring::MeasuringData;

use super::{build_cyclic_cu, homology_classes, Variant};

/// `(positions of the first block, sign)` for every `(p,q)`-shuffle.
fn shuffles(p: usize, q: usize) -> Vec<(Vec<usize>, bool)> {
    let n = p + q;
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize != p {
            continue;
        }
        let first: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let second: Vec<usize> = (0..n).filter(|i| mask & (1 << i) == 0).collect();
        let inversions: usize = first.iter().map(|a| second.iter().filter(|&&b| b < *a).count()).sum();
        out.push((first, inversions % 2 == 1));
    }
    out
}

fn ambient_dims(h: &HopfAlgebroidData, n: usize) -> Vec<usize> {
    if n == 0 {
        vec![h.da()]
    } else {
        vec![h.du(); n]
    }
}

/// `sh_pq: C_p(U) ⊗ C_q(U) → C_{p+q}(U)` for a commutative Hopf algebroid, on the
/// Kronecker product of quotient coordinates.
pub fn shuffle_product(h: &HopfAlgebroidData, p: usize, q: usize) -> Result<LinMap> {
    if !h.is_commutative() {
        return Err(Error::NotCommutative(format!("Hopf algebroid {}", h.label)));
    }
    let tp = h.tower(TowerKind::Right, p)?;
    let tq = h.tower(TowerKind::Right, q)?;
    let dst = h.tower(TowerKind::Right, p + q)?;
    let mut dims = ambient_dims(h, p);
    dims.extend(ambient_dims(h, q));
    let shape = TensorShape::new(dims);
    let e = |i: usize| h.ubasis(i);
    let table = shuffles(p, q);
    let free = free_matrix(h.field, &shape, dst.ambient.dim, |ix| match (p, q) {
        (0, 0) => h.a.mul_basis(ix[0], ix[1]).clone(),
        (_, 0) => {
            let mut f: Vec<SparseVec> = ix[..p].iter().map(|&x| e(x)).collect();
            f[0] = h.mul(h.t_of(ix[p]), &f[0]);
            outer(&f.iter().collect::<Vec<_>>())
        }
        (0, _) => {
            let mut f: Vec<SparseVec> = ix[1..].iter().map(|&x| e(x)).collect();
            f[q - 1] = h.mul(&f[q - 1], h.t_of(ix[0]));
            outer(&f.iter().collect::<Vec<_>>())
        }
        _ => {
            let mut acc = Accum::new(dst.ambient.dim);
            let (one, minus) = (h.field.one(), h.field.from_i64(-1));
            for (first, odd) in &table {
                let mut slots = vec![0; p + q];
                let mut rest = (0..p + q).filter(|k| !first.contains(k));
                for (k, &pos) in first.iter().enumerate() {
                    slots[pos] = ix[k];
                }
                for j in 0..q {
                    slots[rest.next().unwrap()] = ix[p + j];
                }
                let f: Vec<SparseVec> = slots.iter().map(|&x| e(x)).collect();
                acc.add_vec(if *odd { &minus } else { &one }, &outer(&f.iter().collect::<Vec<_>>()));
            }
            acc.finish()
        }
    });
    let proj = dst.projection.mat.mul(&free);
    let id = |n: usize| Matrix::identity(h.field, n);
    let on_rel = proj
        .mul(&tp.relations.mat.kron(&id(tq.ambient.dim)))
        .hstack(&proj.mul(&id(tp.ambient.dim).kron(&tq.relations.mat)));
    if let Some((coordinate, relation)) = on_rel.first_nonzero() {
        return Err(Error::descent(
            format!("sh_{p}{q} on {}", h.label),
            crate::exactlin::DescentFailure { relation, coordinate },
        ));
    }
    Ok(LinMap {
        dom: tensor_space(&tp.quotient, &tq.quotient),
        cod: dst.quotient.clone(),
        mat: proj.mul(&tp.section.mat.kron(&tq.section.mat)),
    })
}

/// Checks that the maps induced by `x` measure the shuffle product: at chain level for
/// `p + q ≤ top`, on the unit, and on Hochschild classes for `p + q < top`.
pub fn check_shuffle_measuring(m: &MeasuringData, x: &SparseVec, top: usize) -> Result<CheckReport> {
    for h in [&m.source, &m.target] {
        if !h.is_commutative() {
            return Err(Error::NotCommutative(format!("Hopf algebroid {}", h.label)));
        }
    }
    let c = &m.c;
    let mut r = CheckReport::new(format!("shuffle measuring {}", m.label));
    let psi = |v: &SparseVec, n: usize| m.slotwise(v, n, TowerKind::Right);
    let coproduct: Vec<(crate::exactlin::Scalar, usize, usize)> = {
        let d = c.dim();
        c.comul.mat.mul_vec(x).entries.iter().map(|(f, s)| (s.clone(), f / d, f % d)).collect()
    };
    let rhs_map = |p: usize, q: usize| -> Result<Matrix> {
        let sh = shuffle_product(&m.target, p, q)?;
        let src_dim = m.source.tower(TowerKind::Right, p)?.dim() * m.source.tower(TowerKind::Right, q)?.dim();
        let mut k = Matrix::zeros(c.field, sh.mat.cols, src_dim);
        for (s, a, b) in &coproduct {
            k = k.add(&psi(&c.basis(*a), p)?.mat.kron(&psi(&c.basis(*b), q)?.mat).scale(s));
        }
        Ok(sh.mat.mul(&k))
    };
    let mut chain = None;
    for n in 0..=top {
        for p in 0..=n {
            let q = n - p;
            let lhs = psi(x, n)?.mat.mul(&shuffle_product(&m.source, p, q)?.mat);
            if let Some(col) = first_diff_col(&lhs, &rhs_map(p, q)?) {
                chain = chain.or(Some(vec![p, q, col[0]]));
            }
        }
    }
    r.record("chain-level measuring", chain);
    let unit = psi(x, 0)?.mat.mul_vec(&m.source.a.unit);
    let expected = m.target.a.unit.scale(&c.counit_of(x));
    r.record("unit", if unit == expected { None } else { Some(vec![]) });

    let src = build_cyclic_cu(&m.source, top)?;
    let dst = build_cyclic_cu(&m.target, top)?;
    let ca = homology_classes(&src, Variant::Hochschild)?;
    let cb = homology_classes(&dst, Variant::Hochschild)?;
    let mut classes = None;
    'outer: for n in 0..top {
        for p in 0..=n {
            let q = n - p;
            let (ra, rb) = (ca[p].chain_reps(), ca[q].chain_reps());
            let lhs = psi(x, n)?.mat.mul(&shuffle_product(&m.source, p, q)?.mat);
            let rhs = rhs_map(p, q)?;
            for i in 0..ra.cols {
                for j in 0..rb.cols {
                    let pair = outer(&[ra.col(i), rb.col(j)]);
                    let diff = lhs.mul_vec(&pair).sub(&rhs.mul_vec(&pair));
                    if cb[n].class_of(&diff).map_or(true, |v| !v.is_zero()) {
                        classes = Some(vec![p, q, i, j]);
                        break 'outer;
                    }
                }
            }
        }
    }
    r.record("measuring on Hochschild classes", classes);
    Ok(r)
}
