use super::examples::*;
use super::*;
use crate::algcore::Status;
use crate::cyclichom::{check_cyclic_module, cyclic_homology_char0};

fn q() -> FieldSpec {
    FieldSpec::Rationals
}

#[test]
fn point_operad_and_module_pass() {
    let o = point_operad(q(), 3);
    let r = check_operad(&o);
    assert!(r.passed(), "{r}");
    let l = point_comp_module(q(), 3, 3);
    let r = check_comp_module(&o, &l);
    assert!(r.passed(), "{r}");
}

#[test]
fn point_cyclic_homology() {
    let o = point_operad(q(), 3);
    let l = point_comp_module(q(), 3, 4);
    let c = comp_cyclic_module(&o, &l, 4).unwrap();
    assert!(check_cyclic_module(&c).passed());
    assert_eq!(cyclic_homology_char0(&c).unwrap().dims, vec![1, 0, 1, 0]);
}

#[test]
fn yd_operad_over_c2() {
    let (_, z) = c2_regular_pair(q());
    let o = build_yd_operad(&c2(q()), &z, 3).unwrap();
    assert_eq!((0..=3).map(|n| o.dim(n)).collect::<Vec<_>>(), vec![2, 4, 8, 16]);
    let r = check_operad(&o);
    assert!(r.passed(), "{r}");
    assert_eq!(r.status_of("m∘₁m = m∘₂m"), Some(Status::Pass));
}

#[test]
fn yd_comp_module_over_c2() {
    let (l, z) = c2_regular_pair(q());
    let o = build_yd_operad(&l.hopf, &z, 3).unwrap();
    let m = build_yd_comp_module(&o, &l, &z, 3).unwrap();
    let r = check_comp_module(&o, &m);
    assert!(r.passed(), "{r}");
    let c = comp_cyclic_module(&o, &m, 3).unwrap();
    let r = check_cyclic_module(&c);
    assert!(r.passed(), "{r}");
}

#[test]
fn trivial_yd_matches_point() {
    let h = crate::hopfalgebroid::gallery::trivial(q());
    let z = crate::hopfalgebroid::YdAlgebraData::trivial(&h).unwrap();
    let l = crate::hopfalgebroid::SaydModuleData::base(&h);
    let o = build_yd_operad(&h, &z, 3).unwrap();
    let p = point_operad(q(), 3);
    for pp in 1..=3 {
        for qq in 0..=4 - pp {
            assert_eq!(o.comp[pp][qq], p.comp[pp][qq]);
        }
    }
    let m = build_yd_comp_module(&o, &l, &z, 4).unwrap();
    let c = comp_cyclic_module(&o, &m, 4).unwrap();
    assert_eq!(cyclic_homology_char0(&c).unwrap().dims, vec![1, 0, 1, 0]);
}

#[test]
fn cyclic_operator_squares_to_identity_in_degree_one() {
    let (l, z) = c2_regular_pair(q());
    let o = build_yd_operad(&l.hopf, &z, 2).unwrap();
    let m = build_yd_comp_module(&o, &l, &z, 2).unwrap();
    assert!(m.t[1].mul(&m.t[1]).is_identity());
}

#[test]
fn unstable_tensor_is_rejected() {
    let (l, z) = c2_unstable_pair(q());
    assert!(tensor_is_stable(&l, &z).unwrap().is_some());
    let o = build_yd_operad(&l.hopf, &z, 2).unwrap();
    assert!(matches!(build_yd_comp_module(&o, &l, &z, 2), Err(Error::StabilityFailure(_))));
}

#[test]
fn nontrivial_base_is_rejected() {
    let h = crate::hopfalgebroid::gallery::pair_dual_numbers(q());
    let z = crate::measuring::examples::pair_base_yd(&h, &crate::hopfalgebroid::gallery::dual_numbers(q()));
    assert!(matches!(build_yd_operad(&h, &z, 2), Err(Error::InvalidData(_))));
}

#[test]
fn induced_from_trivial_yd_measuring() {
    let ym = crate::measuring::examples::c2_trivial_yd_measuring(q());
    let l = crate::hopfalgebroid::SaydModuleData::base(&ym.z.hopf);
    let id = Matrix::identity(q(), 1);
    let (om, ccm) = induce_from_yd(&ym, &l, &l, &id, 3).unwrap();
    let r = check_operad_measuring(&om).unwrap();
    assert!(r.passed(), "{r}");
    let r = check_comp_comodule_measuring(&ccm);
    assert!(r.passed(), "{r}");
    let g = SparseVec::unit(2, 0, q().one());
    let x = SparseVec::unit(2, 1, q().one());
    let ig = induced_comp_map(&ccm, &g, 2).unwrap();
    assert!(ig.certificate.passed());
    assert!(ig.hc.iter().all(|m| m.is_identity()));
    let ix = induced_comp_map(&ccm, &x, 2).unwrap();
    assert!(ix.hc.iter().all(|m| m.is_zero()));
}

#[test]
fn coaction_breaking_map_is_refused() {
    let ym = crate::measuring::examples::c2_trivial_yd_measuring(q());
    let l = crate::hopfalgebroid::SaydModuleData::base(&ym.z.hopf);
    let l2 = c2_g_coacted(q());
    let id = Matrix::identity(q(), 1);
    let r = check_ayd_morphism(&l, &l2, &id);
    assert_eq!(r.status_of("coaction"), Some(Status::Fail));
    assert_eq!(r.status_of("action"), Some(Status::Pass));
    assert!(matches!(induce_from_yd(&ym, &l, &l2, &id, 2), Err(Error::CertificateFailure(_))));
}

#[test]
fn broken_yd_measuring_is_refused() {
    let ym = crate::measuring::examples::c2_augmentation_yd_measuring(q());
    let l = crate::hopfalgebroid::SaydModuleData::base(&ym.z.hopf);
    let id = Matrix::identity(q(), 1);
    assert!(matches!(induce_from_yd(&ym, &l, &l, &id, 2), Err(Error::CertificateFailure(_))));
}

#[test]
fn perturbed_composition_is_caught() {
    let (_, z) = c2_regular_pair(q());
    let mut o = build_yd_operad(&c2(q()), &z, 3).unwrap();
    let m = &o.comp[2][2][0];
    let (r0, c0) = (0, 5);
    let v = m.get(r0, c0);
    o.comp[2][2][0] = m.add(&Matrix::from_triplets(q(), m.rows, m.cols, [(r0, c0, q().one())]));
    assert_ne!(o.comp[2][2][0].get(r0, c0), v);
    let r = check_operad(&o);
    assert!(!r.passed());
    assert!(r.failures().any(|f| f.axiom.starts_with("associativity")), "{r}");
}

#[test]
fn perturbed_bullet_is_caught() {
    let o = point_operad(q(), 3);
    let mut l = point_comp_module(q(), 3, 3);
    l.bullet[1][2][1] = Some(Matrix::from_i64_rows(q(), &[vec![2]]));
    let r = check_comp_module(&o, &l);
    assert!(r.failures().count() > 0);
    assert!(r.failures().any(|f| f.axiom.starts_with("p > 0") || f.axiom.starts_with("p = 0")), "{r}");
}

#[test]
fn point_measuring_by_grouplikes() {
    let o = point_operad(q(), 3);
    let c = crate::algcore::CoalgebraData::grouplikes(q(), 2, "g");
    let psi = (0..=3).map(|_| vec![Matrix::identity(q(), 1); 2]).collect();
    let om = OperadMeasuringData::new("id", c.clone(), o.clone(), o.clone(), psi).unwrap();
    assert!(check_operad_measuring(&om).unwrap().passed());
    let bad: Vec<Vec<Matrix>> = (0..=3).map(|_| vec![Matrix::from_i64_rows(q(), &[vec![2]]); 2]).collect();
    let om = OperadMeasuringData::new("double", c, o.clone(), o, bad).unwrap();
    let r = check_operad_measuring(&om).unwrap();
    assert_eq!(r.status_of("composition"), Some(Status::Fail));
}

#[test]
fn identity_on_regular_yd_induces_identity() {
    let (l, z) = c2_regular_pair(q());
    let c = crate::algcore::CoalgebraData::grouplikes(q(), 1, "k");
    let ym = crate::measuring::YdMeasuringData::new("id", c, z.clone(), z, vec![Matrix::identity(q(), 2)]).unwrap();
    let (_, ccm) = induce_from_yd(&ym, &l, &l, &Matrix::identity(q(), 1), 2).unwrap();
    let r = check_comp_comodule_measuring(&ccm);
    assert!(r.passed(), "{r}");
    let out = induced_comp_map(&ccm, &SparseVec::unit(1, 0, q().one()), 2).unwrap();
    assert!(out.hc.iter().all(|m| m.is_identity()));
}
