use crate::algcore::AlgebraData;
use crate::error::{Error, Result};
use crate::exactlin::{tensor::outer, FieldSpec, Matrix, SparseVec};

use super::{HopfAlgebroidData, LeftBialgebroidData};

pub const GALLERY_NAMES: [&str; 5] = ["trivial", "group_c2", "group_c3", "pair_dual_numbers", "pair_split"];

/// `U = A = k`.
pub fn trivial(field: FieldSpec) -> HopfAlgebroidData {
    let k = AlgebraData::ground(field);
    let id = Matrix::identity(field, 1);
    let b = LeftBialgebroidData::new("trivial", k.clone(), k, id.clone(), id.clone(), id.clone(), id.clone())
        .expect("trivial bialgebroid");
    HopfAlgebroidData::new(b, id).expect("trivial antipode")
}

/// Group algebra of the cyclic group of order `n`, basis `g^0, ..., g^{n-1}`.
pub fn cyclic_group_algebra_data(field: FieldSpec, n: usize) -> AlgebraData {
    let one = field.one();
    let consts = (0..n).flat_map(|i| (0..n).map(move |j| (i, j, (i + j) % n)));
    AlgebraData::from_constants(
        field,
        n,
        &format!("k[C{n}]"),
        consts.map(|(i, j, k)| (i, j, k, one.clone())).collect::<Vec<_>>(),
        SparseVec::unit(n, 0, one.clone()),
    )
    .expect("group algebra")
}

/// `k[C_n]` over `A = k`: grouplike coproduct, `S(g) = g^{-1}`.
pub fn group_algebra(field: FieldSpec, n: usize) -> HopfAlgebroidData {
    let u = cyclic_group_algebra_data(field, n);
    let k = AlgebraData::ground(field);
    let one = field.one();
    let unit_col = Matrix::from_triplets(field, n, 1, [(0, 0, one.clone())]);
    let delta = Matrix::from_triplets(field, n * n, n, (0..n).map(|i| (i * n + i, i, one.clone())));
    let eps = Matrix::from_triplets(field, 1, n, (0..n).map(|i| (0, i, one.clone())));
    let anti = Matrix::from_triplets(field, n, n, (0..n).map(|i| ((n - i) % n, i, one.clone())));
    let b = LeftBialgebroidData::new(&format!("group_c{n}"), u, k, unit_col.clone(), unit_col, delta, eps)
        .expect("group bialgebroid");
    HopfAlgebroidData::new(b, anti).expect("group antipode")
}

/// `k[ε]/(ε²)`, basis `1, ε`.
pub fn dual_numbers(field: FieldSpec) -> AlgebraData {
    let one = field.one();
    AlgebraData::from_constants(
        field,
        2,
        "k[e]/(e^2)",
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 0, 1, one.clone())],
        SparseVec::unit(2, 0, one),
    )
    .expect("dual numbers")
}

/// `k × k`, basis of orthogonal idempotents.
pub fn split_algebra(field: FieldSpec) -> AlgebraData {
    let one = field.one();
    AlgebraData::from_constants(
        field,
        2,
        "kxk",
        [(0, 0, 0, one.clone()), (1, 1, 1, one.clone())],
        SparseVec::from_entries(2, [(0, one.clone()), (1, one)]),
    )
    .expect("split algebra")
}

/// Pair algebroid `U = A ⊗ A^op`: `s(a) = a⊗1`, `t(b) = 1⊗b`,
/// `Δ(a⊗b) = (a⊗1) ⊗_A (1⊗b)`, `ε(a⊗b) = ab`, `S(a⊗b) = b⊗a`.
pub fn pair(a: &AlgebraData, label: &str) -> HopfAlgebroidData {
    let field = a.field;
    let da = a.dim();
    let du = da * da;
    let u = a.tensor(&a.opposite());
    let e = |i: usize| a.basis(i);
    let s = Matrix::from_columns(field, du, (0..da).map(|i| outer(&[&e(i), &a.unit])).collect());
    let t = Matrix::from_columns(field, du, (0..da).map(|j| outer(&[&a.unit, &e(j)])).collect());
    let delta = Matrix::from_columns(
        field,
        du * du,
        (0..du)
            .map(|x| outer(&[&outer(&[&e(x / da), &a.unit]), &outer(&[&a.unit, &e(x % da)])]))
            .collect(),
    );
    let eps = Matrix::from_columns(field, da, (0..du).map(|x| a.mul_basis(x / da, x % da).clone()).collect());
    let one = field.one();
    let anti = Matrix::from_triplets(field, du, du, (0..du).map(|x| ((x % da) * da + x / da, x, one.clone())));
    let b = LeftBialgebroidData::new(label, u, a.clone(), s, t, delta, eps).expect("pair bialgebroid");
    HopfAlgebroidData::new(b, anti).expect("pair antipode")
}

pub fn pair_dual_numbers(field: FieldSpec) -> HopfAlgebroidData {
    pair(&dual_numbers(field), "pair_dual_numbers")
}

pub fn pair_split(field: FieldSpec) -> HopfAlgebroidData {
    pair(&split_algebra(field), "pair_split")
}

pub fn by_name(name: &str, field: FieldSpec) -> Result<HopfAlgebroidData> {
    Ok(match name {
        "trivial" => trivial(field),
        "group_c2" => group_algebra(field, 2),
        "group_c3" => group_algebra(field, 3),
        "pair_dual_numbers" => pair_dual_numbers(field),
        "pair_split" => pair_split(field),
        other => return Err(Error::Reference(format!("gallery algebroid {other:?}"))),
    })
}

pub fn all(field: FieldSpec) -> Vec<HopfAlgebroidData> {
    GALLERY_NAMES.iter().map(|n| by_name(n, field).expect("gallery name")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopfalgebroid::{check_hopf_algebroid, TowerKind};

    #[test]
    fn gallery_validates() {
        for h in all(FieldSpec::Rationals) {
            let r = check_hopf_algebroid(&h);
            assert!(r.passed(), "{r}");
        }
    }

    #[test]
    fn pair_dimensions() {
        let h = pair_dual_numbers(FieldSpec::Rationals);
        assert_eq!(h.du(), 4);
        assert_eq!(h.tower(TowerKind::Left, 2).unwrap().dim(), 8);
        for n in 1..=4 {
            assert_eq!(h.tower(TowerKind::Left, n).unwrap().dim(), 1 << (n + 1));
            assert_eq!(h.tower(TowerKind::Right, n).unwrap().dim(), 1 << (n + 1));
        }
    }
}
