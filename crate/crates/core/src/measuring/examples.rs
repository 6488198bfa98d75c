//! Measurings used by tests, scenarios and the acceptance suite.

use crate::algcore::{AlgebraData, CoalgebraData, ComoduleData, Side};
use crate::exactlin::{FieldSpec, Matrix, SparseVec};
use crate::hopfalgebroid::{gallery, HopfAlgebroidData, SaydModuleData, YdAlgebraData};

use super::{ComoduleMeasuringData, MeasuringData, YdMeasuringData};

/// `span{g, x}` with `g` grouplike and `x` primitive over `g`.
pub fn gx_coalgebra(field: FieldSpec) -> CoalgebraData {
    let one = field.one();
    CoalgebraData::from_constants(
        field,
        2,
        "span{g,x}",
        [(0, 0, 0, one.clone()), (1, 1, 0, one.clone()), (1, 0, 1, one.clone())],
        &[one, field.zero()],
    )
    .expect("gx coalgebra")
}

/// `span{g, h, x}` with `Δx = x⊗g + h⊗x`; not cocommutative.
pub fn skew_primitive_coalgebra(field: FieldSpec) -> CoalgebraData {
    let one = field.one();
    CoalgebraData::from_constants(
        field,
        3,
        "span{g,h,x}",
        [
            (0, 0, 0, one.clone()),
            (1, 1, 1, one.clone()),
            (2, 2, 0, one.clone()),
            (2, 1, 2, one.clone()),
        ],
        &[one.clone(), one, field.zero()],
    )
    .expect("skew primitive coalgebra")
}

/// Euler derivation `δ(1) = 0`, `δ(ε) = ε` of the dual numbers.
pub fn euler(field: FieldSpec) -> Matrix {
    Matrix::from_triplets(field, 2, 2, [(1, 1, field.one())])
}

/// `x ↦ (δ⊗1 + 1⊗δ, δ)` on the pair algebroid of the dual numbers.
pub fn pair_euler(field: FieldSpec) -> MeasuringData {
    let h = gallery::pair_dual_numbers(field);
    let (d, id) = (euler(field), Matrix::identity(field, 2));
    let big = vec![Matrix::identity(field, 4), d.kron(&id).add(&id.kron(&d))];
    MeasuringData::new("euler", gx_coalgebra(field), h.clone(), h, big, vec![id, d]).expect("euler shapes")
}

/// `pair_euler` with the second summand of `Ψ(x)` dropped.
pub fn pair_euler_broken(field: FieldSpec) -> MeasuringData {
    let mut m = pair_euler(field);
    m.big[1] = euler(field).kron(&Matrix::identity(field, 2));
    m.label = "euler_broken".into();
    m
}

/// Upper triangular `2 x 2` matrices, basis `e11, e12, e22`.
pub fn upper_triangular(field: FieldSpec) -> AlgebraData {
    let one = field.one();
    AlgebraData::from_constants(
        field,
        3,
        "T2",
        [(0, 0, 0, one.clone()), (0, 1, 1, one.clone()), (1, 2, 1, one.clone()), (2, 2, 2, one.clone())],
        SparseVec::from_entries(3, [(0, one.clone()), (2, one)]),
    )
    .expect("triangular algebra")
}

/// Candidate `Ψ(x) = id⊗D + D⊗σ` on the pair algebroid of the upper triangular
/// matrices over the skew-primitive coalgebra. `σ` is conjugation by `diag(1, 2)`
/// and `D(a) = a e12 − e12 σ(a)`. Both `ψ(x)` and `Ψ(x)` are twisted derivations,
/// but the slotwise action of `x` on `U ⊗ U` does not respect `⊗_A`.
pub fn pair_triangular_skew(field: FieldSpec) -> MeasuringData {
    let a = upper_triangular(field);
    let h = gallery::pair(&a, "pair_t2");
    let one = field.one();
    let id = Matrix::identity(field, 3);
    let sigma = Matrix::from_triplets(field, 3, 3, [(0, 0, one.clone()), (1, 1, field.from_i64(2)), (2, 2, one.clone())]);
    let dd = Matrix::from_triplets(field, 3, 3, [(1, 0, one), (1, 2, field.from_i64(-1))]);
    let big = vec![Matrix::identity(field, 9), sigma.kron(&sigma), id.kron(&dd).add(&dd.kron(&sigma))];
    MeasuringData::new("skew", skew_primitive_coalgebra(field), h.clone(), h, big, vec![id, sigma, dd]).expect("skew shapes")
}

/// `(g, x)`-measuring of `k[C₂]` with `Ψ(x) = 0`, `ψ(x) = 0`.
pub fn group_c2_gx(field: FieldSpec) -> MeasuringData {
    let h = gallery::group_algebra(field, 2);
    let big = vec![Matrix::identity(field, 2), Matrix::zeros(field, 2, 2)];
    let small = vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1)];
    MeasuringData::new("c2_gx", gx_coalgebra(field), h.clone(), h, big, small).expect("c2 shapes")
}

/// Sign character of `k[C₂]` with trivial coaction.
pub fn sign_sayd(h: &HopfAlgebroidData) -> SaydModuleData {
    let f = h.field;
    SaydModuleData::one_dimensional(h, "sign", &[f.one(), f.from_i64(-1)], &SparseVec::unit(2, 0, f.one()))
        .expect("sign module")
}

/// Over `k[C₂]`: `D = C = span{g,x}`, `P = P' = k` with `Ω(g) = id`, `Ω(x) = 0`.
pub fn c2_sayd_measuring(field: FieldSpec) -> ComoduleMeasuringData {
    let base = group_c2_gx(field);
    let p = SaydModuleData::base(&base.source);
    let d = ComoduleData::regular(&base.c, Side::Right);
    let omega = vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1)];
    ComoduleMeasuringData::new("c2_sayd", base, d, p.clone(), p, omega).expect("c2 sayd shapes")
}

/// `Ω(g) = id` from the counit module to the sign module; the action condition fails.
pub fn c2_sayd_measuring_to_sign(field: FieldSpec) -> ComoduleMeasuringData {
    let base = group_c2_gx(field);
    let p = SaydModuleData::base(&base.source);
    let p2 = sign_sayd(&base.target);
    let d = ComoduleData::regular(&base.c, Side::Right);
    let omega = vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1)];
    ComoduleMeasuringData::new("c2_to_sign", base, d, p, p2, omega).expect("shapes")
}

/// Identity comodule measuring of `P` over the identity measuring.
pub fn identity_comodule_measuring(p: &SaydModuleData) -> ComoduleMeasuringData {
    let base = MeasuringData::identity(&p.hopf);
    let d = ComoduleData::regular(&base.c, Side::Right);
    let omega = vec![Matrix::identity(p.hopf.field, p.dim())];
    ComoduleMeasuringData::new(&format!("id_{}", p.label), base, d, p.clone(), p.clone(), omega).expect("identity shapes")
}

/// `k[C₂]` as a Yetter-Drinfel'd algebra over itself: trivial action, regular coaction.
pub fn c2_regular_yd(h: &HopfAlgebroidData) -> YdAlgebraData {
    let f = h.field;
    let z = gallery::cyclic_group_algebra_data(f, 2);
    let cols = (0..4).map(|c| {
        let e = h.eps_of(c / 2).get(0).cloned().unwrap_or_else(|| f.zero());
        SparseVec::unit(2, c % 2, f.one()).scale(&e)
    });
    let action = Matrix::from_columns(f, 2, cols.collect());
    let coaction = h.delta_lift().clone();
    YdAlgebraData::new(h, "k[C2]", z, action, coaction).expect("regular YD")
}

/// The base algebra `A` as a Yetter-Drinfel'd algebra over its pair algebroid:
/// `(a⊗b)·z = azb`, `z ↦ s(z) ⊗ 1`.
pub fn pair_base_yd(h: &HopfAlgebroidData, a: &AlgebraData) -> YdAlgebraData {
    let f = h.field;
    let da = a.dim();
    let mut cols = Vec::with_capacity(da * da * da);
    for u in 0..da * da {
        for z in 0..da {
            cols.push(a.product(&[&a.basis(u / da), &a.basis(z), &a.basis(u % da)]));
        }
    }
    let coaction = Matrix::from_columns(f, da * da * da, (0..da).map(|z| crate::exactlin::tensor::outer(&[h.s_of(z), &a.unit])).collect());
    YdAlgebraData::new(h, "A", a.clone(), Matrix::from_columns(f, da, cols), coaction).expect("base YD")
}

/// Trivial `Z = Z' = k` over `k[C₂]`, `ψ(g) = id`, `ψ(x) = 0`.
pub fn c2_trivial_yd_measuring(field: FieldSpec) -> YdMeasuringData {
    let h = gallery::group_algebra(field, 2);
    let z = YdAlgebraData::trivial(&h).expect("trivial YD");
    let psi = vec![Matrix::identity(field, 1), Matrix::zeros(field, 1, 1)];
    YdMeasuringData::new("c2_trivial", gx_coalgebra(field), z.clone(), z, psi).expect("shapes")
}

/// Euler derivation on the base-algebra YD algebra of the dual-number pair algebroid.
pub fn pair_base_yd_measuring(field: FieldSpec) -> YdMeasuringData {
    let h = gallery::pair_dual_numbers(field);
    let z = pair_base_yd(&h, &gallery::dual_numbers(field));
    let psi = vec![Matrix::identity(field, 2), euler(field)];
    YdMeasuringData::new("pair_base_euler", gx_coalgebra(field), z.clone(), z, psi).expect("shapes")
}

/// Augmentation `g ↦ 1` on the regular YD algebra `k[C₂]`; breaks coaction compatibility.
pub fn c2_augmentation_yd_measuring(field: FieldSpec) -> YdMeasuringData {
    let h = gallery::group_algebra(field, 2);
    let z = c2_regular_yd(&h);
    let one = field.one();
    let aug = Matrix::from_triplets(field, 2, 2, [(0, 0, one.clone()), (0, 1, one)]);
    YdMeasuringData::new("c2_augmentation", CoalgebraData::grouplikes(field, 1, "k"), z.clone(), z, vec![aug]).expect("shapes")
}
