//! Small operads and comp modules used by tests and scenarios.

use crate::exactlin::{FieldSpec, Matrix, Space, SparseVec};
use crate::hopfalgebroid::{gallery, HopfAlgebroidData, SaydModuleData, YdAlgebraData};
use crate::measuring::examples::{c2_regular_yd, sign_sayd};

use super::{CompModuleData, OperadData};

/// `O(n) = k` with every `∘_i` the multiplication of `k`.
pub fn point_operad(field: FieldSpec, top: usize) -> OperadData {
    let one = || Matrix::identity(field, 1);
    let comp = (0..=top)
        .map(|p| {
            (0..=top)
                .map(|q| if p >= 1 && p + q - 1 <= top { (0..p).map(|_| one()).collect() } else { Vec::new() })
                .collect()
        })
        .collect();
    let unit = SparseVec::unit(1, 0, field.one());
    OperadData {
        label: "point".into(),
        field,
        spaces: (0..=top).map(|n| Space::new(1, format!("k({n})"))).collect(),
        comp,
        one: unit.clone(),
        m: if top >= 2 { unit.clone() } else { SparseVec::zero(0) },
        e: unit,
    }
}

/// `L(n) = k` over the point operad, `t = id`; `•_0` with `p = 0` is left undefined.
pub fn point_comp_module(field: FieldSpec, otop: usize, top: usize) -> CompModuleData {
    let bullet = (0..=otop)
        .map(|p| {
            (0..=top)
                .map(|n| {
                    if p > n + 1 {
                        return Vec::new();
                    }
                    (0..=n + 1 - p)
                        .map(|i| (n + 1 - p <= top && !(p == 0 && i == 0)).then(|| Matrix::identity(field, 1)))
                        .collect()
                })
                .collect()
        })
        .collect();
    CompModuleData {
        label: "point".into(),
        field,
        spaces: (0..=top).map(|n| Space::new(1, format!("k_{n}"))).collect(),
        bullet,
        t: (0..=top).map(|_| Matrix::identity(field, 1)).collect(),
    }
}

pub fn c2(field: FieldSpec) -> HopfAlgebroidData {
    gallery::group_algebra(field, 2)
}

/// `(L, Z) = (k, k[C₂])` over `k[C₂]`: stable.
pub fn c2_regular_pair(field: FieldSpec) -> (SaydModuleData, YdAlgebraData) {
    let h = c2(field);
    (SaydModuleData::base(&h), c2_regular_yd(&h))
}

/// `(L, Z) = (sign, k[C₂])`: `L ⊗ Z` is not stable.
pub fn c2_unstable_pair(field: FieldSpec) -> (SaydModuleData, YdAlgebraData) {
    let h = c2(field);
    (sign_sayd(&h), c2_regular_yd(&h))
}

/// `k` with trivial action and coaction `1 ↦ g ⊗ 1`; the identity of `k` from
/// the counit module into it does not respect coactions.
pub fn c2_g_coacted(field: FieldSpec) -> SaydModuleData {
    let h = c2(field);
    SaydModuleData::one_dimensional(&h, "k_g", &[field.one(), field.one()], &SparseVec::unit(2, 1, field.one()))
        .expect("one dimensional")
}
