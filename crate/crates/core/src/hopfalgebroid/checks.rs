use crate::algcore::{check_algebra_map, find_witness, CheckReport};
use crate::exactlin::{tensor::lin_extend, tensor::outer, Accum, SparseVec, TensorShape};

use super::{HopfAlgebroidData, LeftBialgebroidData, TowerKind};

/// Componentwise product of two lifted elements of `U ⊗ U`.
pub(crate) fn pair_product(b: &LeftBialgebroidData, x: &SparseVec, y: &SparseVec) -> SparseVec {
    let du = b.du();
    let mut acc = Accum::new(du * du);
    for (fx, cx) in &x.entries {
        for (fy, cy) in &y.entries {
            let p1 = b.u.mul_basis(fx / du, fy / du);
            let p2 = b.u.mul_basis(fx % du, fy % du);
            acc.add_vec(&(cx * cy), &outer(&[p1, p2]));
        }
    }
    acc.finish()
}

pub fn check_bialgebroid(b: &LeftBialgebroidData) -> CheckReport {
    let mut r = CheckReport::new(format!("bialgebroid {}", b.label));
    r.merge(b.u.check());
    r.merge(b.a.check());
    r.merge(check_algebra_map("source map", &b.a, &b.u, &b.s.mat, false));
    r.merge(check_algebra_map("target map", &b.a, &b.u, &b.t.mat, true));
    let (du, da) = (b.du(), b.da());
    let (l2, l3) = match (b.tower(TowerKind::Left, 2), b.tower(TowerKind::Left, 3)) {
        (Ok(x), Ok(y)) => (x, y),
        (Err(e), _) | (_, Err(e)) => {
            r.record_detail("balanced tensor powers", Some(vec![]), e.to_string());
            return r;
        }
    };
    let sh2 = TensorShape::power(du, 2);
    let e = |i| b.ubasis(i);

    r.record(
        "source/target commute",
        find_witness(&[da, da], |ix| {
            b.mul(b.s_of(ix[0]), b.t_of(ix[1])) != b.mul(b.t_of(ix[1]), b.s_of(ix[0]))
        }),
    );
    r.record(
        "coproduct bimodule map",
        find_witness(&[da, da, du], |ix| {
            let st = b.mul(b.s_of(ix[0]), b.t_of(ix[1]));
            let lhs = l2.project(&b.delta_lift().mul_vec(&b.mul(&st, &e(ix[2]))));
            let rhs = lin_extend(b.delta_of(ix[2]), &sh2, du * du, |j| {
                outer(&[&b.mul(b.s_of(ix[0]), &e(j[0])), &b.mul(b.t_of(ix[1]), &e(j[1]))])
            });
            lhs != l2.project(&rhs)
        }),
    );
    r.record(
        "counit bimodule map",
        find_witness(&[da, da, du], |ix| {
            let st = b.mul(b.s_of(ix[0]), b.t_of(ix[1]));
            let lhs = b.eps_vec(&b.mul(&st, &e(ix[2])));
            let rhs = b.a.product(&[&b.a.basis(ix[0]), b.eps_of(ix[2]), &b.a.basis(ix[1])]);
            lhs != rhs
        }),
    );
    r.record(
        "coassociativity",
        find_witness(&[du], |ix| {
            let v = b.delta_of(ix[0]);
            let left = lin_extend(v, &sh2, du * du * du, |j| outer(&[b.delta_of(j[0]), &e(j[1])]));
            let right = lin_extend(v, &sh2, du * du * du, |j| outer(&[&e(j[0]), b.delta_of(j[1])]));
            l3.project(&left) != l3.project(&right)
        }),
    );
    r.record(
        "counit",
        find_witness(&[du], |ix| {
            let v = b.delta_of(ix[0]);
            let left = lin_extend(v, &sh2, du, |j| b.mul(&b.s_vec(b.eps_of(j[0])), &e(j[1])));
            let right = lin_extend(v, &sh2, du, |j| b.mul(&b.t_vec(b.eps_of(j[1])), &e(j[0])));
            left != e(ix[0]) || right != e(ix[0])
        }),
    );
    r.record(
        "takeuchi",
        find_witness(&[du, da], |ix| {
            let v = b.delta_of(ix[0]);
            let left = lin_extend(v, &sh2, du * du, |j| outer(&[&b.mul(&e(j[0]), b.t_of(ix[1])), &e(j[1])]));
            let right = lin_extend(v, &sh2, du * du, |j| outer(&[&e(j[0]), &b.mul(&e(j[1]), b.s_of(ix[1]))]));
            l2.project(&left) != l2.project(&right)
        }),
    );
    let alt = b.with_perturbed_lifts();
    r.record(
        "coproduct multiplicative",
        find_witness(&[du, du], |ix| {
            let lhs = l2.project(&b.delta_lift().mul_vec(b.u.mul_basis(ix[0], ix[1])));
            let rhs = l2.project(&pair_product(b, b.delta_of(ix[0]), b.delta_of(ix[1])));
            let alt_rhs = l2.project(&pair_product(&alt, alt.delta_of(ix[0]), alt.delta_of(ix[1])));
            lhs != rhs || rhs != alt_rhs
        }),
    );
    r.record(
        "coproduct unital",
        if l2.project(&b.delta_lift().mul_vec(b.one_u())) == l2.project(&outer(&[b.one_u(), b.one_u()])) {
            None
        } else {
            Some(vec![])
        },
    );
    r.record(
        "counit on products",
        find_witness(&[du, du], |ix| {
            let (u, v) = (e(ix[0]), e(ix[1]));
            let mid = b.eps_vec(&b.mul(&u, &v));
            let via_s = b.eps_vec(&b.mul(&u, &b.s_vec(b.eps_of(ix[1]))));
            let via_t = b.eps_vec(&b.mul(&u, &b.t_vec(b.eps_of(ix[1]))));
            via_s != mid || mid != via_t
        }),
    );
    r
}

/// Both antipode identities in `U ⊗_A U`, evaluated on the lifts of `b`.
fn antipode_identities(h: &HopfAlgebroidData, b: &LeftBialgebroidData) -> (Option<Vec<usize>>, Option<Vec<usize>>) {
    let du = b.du();
    let Ok(l2) = b.tower(TowerKind::Left, 2) else {
        return (Some(vec![]), Some(vec![]));
    };
    let e = |i| b.ubasis(i);
    let first = find_witness(&[du], |ix| {
        let mut acc = Accum::new(du * du);
        for (c, u1, u2) in b.delta_terms(ix[0]) {
            let su1 = h.antipode_of(u1);
            let d = b.delta_lift().mul_vec(su1);
            for (f, x) in &d.entries {
                acc.add_vec(&(&c * x), &outer(&[&b.mul(&e(f / du), &e(u2)), &e(f % du)]));
            }
        }
        l2.project(&acc.finish()) != l2.project(&outer(&[b.one_u(), h.antipode_of(ix[0])]))
    });
    let second = find_witness(&[du], |ix| {
        let mut acc = Accum::new(du * du);
        for (c, u1, u2) in b.delta_terms(ix[0]) {
            let d = b.delta_lift().mul_vec(h.antipode_of(u2));
            for (f, x) in &d.entries {
                acc.add_vec(&(&c * x), &outer(&[&e(f / du), &b.mul(&e(f % du), &e(u1))]));
            }
        }
        l2.project(&acc.finish()) != l2.project(&outer(&[h.antipode_of(ix[0]), b.one_u()]))
    });
    (first, second)
}

pub fn check_hopf_algebroid(h: &HopfAlgebroidData) -> CheckReport {
    let mut r = check_bialgebroid(&h.bialgebroid);
    r.subject = format!("hopf algebroid {}", h.label);
    let du = h.du();
    let s = &h.antipode.mat;
    r.merge(check_algebra_map("antipode", &h.u, &h.u, s, true));
    r.record("antipode involutive", crate::algcore::first_diff_col(&s.mul(s), &crate::exactlin::Matrix::identity(h.field, du)));
    r.record("antipode intertwines target and source", crate::algcore::first_diff_col(&s.mul(&h.t.mat), &h.s.mat));
    let (a1, a2) = antipode_identities(h, &h.bialgebroid);
    r.record("antipode identity S(u1)1 u2 ⊗ S(u1)2", a1);
    r.record("antipode identity S(u2)1 ⊗ S(u2)2 u1", a2);
    let alt = h.bialgebroid.with_perturbed_lifts();
    let (b1, b2) = antipode_identities(h, &alt);
    r.record("antipode identities lift-independent", b1.or(b2));
    match h.beta() {
        Ok(beta) => r.record("galois map bijective", if beta.inverse().is_ok() { None } else { Some(vec![]) }),
        Err(e) => r.record_detail("galois map bijective", Some(vec![]), e.to_string()),
    }
    r
}
