//! Lie-Rinehart algebras and measurings used by tests, scenarios and acceptance.

use crate::algcore::AlgebraData;
use crate::exactlin::{FieldSpec, Matrix, Scalar};
use crate::hopfalgebroid::gallery;
use crate::measuring::examples::gx_coalgebra;

use super::{LieRinehartData, LrMeasuringData};

/// A Lie algebra over `R = k` with trivial anchor and `∇_Z(r) = θ(Z) r`.
/// `constants` are `(i, j, k, c)` with `[e_i, e_j] ∋ c e_k`, antisymmetry filled in.
pub fn lie_algebra(
    field: FieldSpec,
    label: &str,
    dim: usize,
    constants: &[(usize, usize, usize, i64)],
    theta: &[i64],
) -> LieRinehartData {
    let mut t = Vec::new();
    for &(i, j, k, c) in constants {
        t.push((k, i * dim + j, field.from_i64(c)));
        t.push((k, j * dim + i, field.from_i64(-c)));
    }
    let bracket = Matrix::from_triplets(field, dim, dim * dim, t);
    let nabla = Matrix::from_triplets(field, 1, dim, theta.iter().enumerate().map(|(z, &c)| (0, z, field.from_i64(c))));
    LieRinehartData::new(
        label,
        AlgebraData::ground(field),
        dim,
        Matrix::identity(field, dim),
        bracket,
        Matrix::zeros(field, 1, dim),
        nabla,
    )
    .expect("Lie algebra data")
}

pub fn abelian(field: FieldSpec, dim: usize) -> LieRinehartData {
    lie_algebra(field, &format!("abelian{dim}"), dim, &[], &vec![0; dim])
}

/// `span{e, f}` with `[e, f] = f`.
pub fn affine(field: FieldSpec) -> LieRinehartData {
    lie_algebra(field, "aff", 2, &[(0, 1, 1, 1)], &[0, 0])
}

/// `affine` with the flat connection `∇_e = 1`, `∇_f = 0`.
pub fn affine_with_trace(field: FieldSpec) -> LieRinehartData {
    lie_algebra(field, "aff_trace", 2, &[(0, 1, 1, 1)], &[1, 0])
}

/// `[x, y] = z`.
pub fn heisenberg(field: FieldSpec) -> LieRinehartData {
    lie_algebra(field, "heis", 3, &[(0, 1, 2, 1)], &[0, 0, 0])
}

/// Basis `h, e, f`.
pub fn sl2(field: FieldSpec) -> LieRinehartData {
    lie_algebra(field, "sl2", 3, &[(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)], &[0, 0, 0])
}

/// `R = k[ε]/(ε²)`, `𝔏 = R·E` with `E` the Euler derivation; `k`-basis `E, εE`.
/// `∇_Z(r) = −Z(r) + r θ(Z)` with `θ(E) = 0`, `θ(εE) = −ε`.
pub fn dual_numbers_euler(field: FieldSpec) -> LieRinehartData {
    let r = gallery::dual_numbers(field);
    let (one, m1) = (field.one(), field.from_i64(-1));
    // R ⊗ 𝔏 → 𝔏, column r * 2 + z
    let r_action = Matrix::from_triplets(field, 2, 4, [(0, 0, one.clone()), (1, 1, one.clone()), (1, 2, one.clone())]);
    let bracket = Matrix::from_triplets(field, 2, 4, [(1, 1, one.clone()), (1, 2, m1.clone())]);
    // columns z * 2 + r
    let anchor = Matrix::from_triplets(field, 2, 4, [(1, 1, one.clone())]);
    let nabla = Matrix::from_triplets(field, 2, 4, [(1, 1, m1.clone()), (1, 2, m1)]);
    LieRinehartData::new("euler_lr", r, 2, r_action, bracket, anchor, nabla).expect("dual numbers LR")
}

/// Over `span{g, x}`: `g` acts by the identity, `x` by the Lie derivation `d` with `ψ(x) = 0`.
pub fn derivation_measuring(d: &LieRinehartData, label: &str, der: Matrix) -> LrMeasuringData {
    let f = d.field;
    let (id_l, id_r) = (Matrix::identity(f, d.dl()), Matrix::identity(f, d.dr()));
    let zero_r = Matrix::zeros(f, d.dr(), d.dr());
    LrMeasuringData::new(label, gx_coalgebra(f), d.clone(), d.clone(), vec![id_l, der], vec![id_r, zero_r])
        .expect("derivation measuring shapes")
}

/// `D(e) = 0`, `D(f) = f` on `affine`.
pub fn affine_derivation(field: FieldSpec) -> LrMeasuringData {
    let der = Matrix::from_triplets(field, 2, 2, [(1, 1, field.one())]);
    derivation_measuring(&affine(field), "aff_der", der)
}

/// `D(f) = e`; not a derivation of the bracket.
pub fn affine_bad_derivation(field: FieldSpec) -> LrMeasuringData {
    let der = Matrix::from_triplets(field, 2, 2, [(0, 1, field.one())]);
    derivation_measuring(&affine(field), "aff_bad", der)
}

/// `x` acts by the Euler derivation on `R` and by `rE ↦ δ(r)E` on `𝔏`.
pub fn dual_numbers_euler_measuring(field: FieldSpec) -> LrMeasuringData {
    let d = dual_numbers_euler(field);
    let one: Scalar = field.one();
    let (id, delta) = (Matrix::identity(field, 2), crate::measuring::examples::euler(field));
    let big = Matrix::from_triplets(field, 2, 2, [(1, 1, one)]);
    LrMeasuringData::new("euler_lr", gx_coalgebra(field), d.clone(), d, vec![id.clone(), big], vec![id, delta])
        .expect("euler LR measuring shapes")
}
