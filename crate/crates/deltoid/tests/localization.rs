use deltoid::deltamatroid::{enumerate_deltamatroids, DeltaMatroid};
use deltoid::ground::{group, AdmissibleSet, SignedPermutation};
use deltoid::localization::*;
use deltoid::polyhedra::{lattice_count, signed_transversal_count, BnPolytope};
use deltoid::poly::q;
use deltoid::QPoly;

fn dm(n: usize, sets: &[&[i32]]) -> DeltaMatroid {
    DeltaMatroid::from_signed(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn t(name: &str, k: i32) -> QPoly {
    QPoly::monomial(q(1), &[(name, k)]).with_laurent(true).unwrap()
}

fn w(images: &[i32]) -> SignedPermutation {
    SignedPermutation::from_images(images.to_vec()).unwrap()
}

#[test]
fn polytope_classes() {
    let origin = class_of_polytope(&BnPolytope::origin(2).unwrap()).unwrap();
    assert!(origin.values.iter().all(|v| *v == QPoly::one()));
    let d = class_of_polytope(&BnPolytope::cross_polytope(1).unwrap()).unwrap();
    assert_eq!(*d.value(&w(&[1])).unwrap(), t("T1", 1));
    assert_eq!(*d.value(&w(&[-1])).unwrap(), t("T1", -1));
    let s = class_of_polytope(&BnPolytope::simplex(&AdmissibleSet::from_signed(1, &[1]).unwrap()).unwrap()).unwrap();
    assert_eq!(*s.value(&w(&[1])).unwrap(), QPoly::one());
    assert_eq!(*s.value(&w(&[-1])).unwrap(), t("T1", -1));
}

#[test]
fn validation() {
    assert!(validate_class(&EqClass::constant(2, Side::K, QPoly::constant(q(3))).unwrap()));
    let d = class_of_polytope(&BnPolytope::cross_polytope(2).unwrap()).unwrap();
    assert!(validate_class(&d));
    let mut bad = d.clone();
    bad.values[0] = bad.values[0].clone() + QPoly::one();
    assert!(!validate_class(&bad));
    let c = total_chern(&d).unwrap();
    assert!(validate_class(&c));
    let mut bad = c.clone();
    bad.values[3] = -bad.values[3].clone();
    assert!(!validate_class(&bad));
}

#[test]
fn tautological_classes_at_n1() {
    let dpm = dm(1, &[&[1], &[-1]]);
    let iso = iso_class(&dpm).unwrap();
    assert_eq!(*iso.value(&w(&[1])).unwrap(), t("T1", -1));
    assert_eq!(*iso.value(&w(&[-1])).unwrap(), t("T1", 1));
    let c = chern(&iso, "u").unwrap();
    assert_eq!(*c.value(&w(&[1])).unwrap(), QPoly::one() - QPoly::monomial(q(1), &[("t1", 1), ("u", 1)]));
    let dp = dm(1, &[&[1]]);
    assert_eq!(env_quot(&dp).unwrap().add(&env_sub(&dp).unwrap()).unwrap(), box_class(1).unwrap());
}

#[test]
fn all_classes_valid_up_to_3() {
    for n in 0..=3 {
        assert!(validate_class(&box_class(n).unwrap()));
        for d in enumerate_deltamatroids(n).unwrap() {
            for c in [iso_class(&d).unwrap(), env_quot(&d).unwrap(), env_sub(&d).unwrap()] {
                assert!(validate_class(&c), "{d}");
            }
        }
    }
}

#[test]
fn equivariance_of_iso_class() {
    for d in enumerate_deltamatroids(2).unwrap() {
        let f = iso_class(&d).unwrap();
        for g in group(2).unwrap().elements() {
            assert_eq!(iso_class(&d.twist(g).unwrap()).unwrap(), f.act(g).unwrap(), "{d} {g}");
        }
    }
}

#[test]
fn phi_intertwines_action() {
    let d = dm(2, &[&[1, 2], &[-1, -2], &[1, -2]]);
    for f in [iso_class(&d).unwrap(), env_quot(&d).unwrap(), class_of_polytope(&BnPolytope::signed_permutohedron(2).unwrap()).unwrap()] {
        for g in group(2).unwrap().elements() {
            assert_eq!(phi_b(&f.act(g).unwrap()).unwrap(), phi_b(&f).unwrap().act(g).unwrap());
        }
        assert!(validate_class(&phi_b(&f).unwrap()));
        assert!(validate_class(&zeta_b(&f).unwrap()));
    }
}

#[test]
fn chern_times_segre() {
    let d = dm(2, &[&[1, 2], &[-1, -2]]);
    let e = env_quot(&d).unwrap();
    let prod = chern(&e, "u").unwrap().mul(&segre(&e, "u").unwrap()).unwrap();
    assert!(prod.values.iter().all(|v| *v == QPoly::one()));
    assert!(total_chern(&EqClass::constant(2, Side::K, QPoly::constant(q(2))).unwrap()).unwrap().values.iter().all(|v| *v == QPoly::one()));
}

#[test]
fn exceptional_maps() {
    let one = EqClass::constant(2, Side::K, QPoly::one()).unwrap();
    assert!(phi_b(&one).unwrap().values.iter().all(|v| *v == QPoly::one()));
    let s = AdmissibleSet::from_signed(2, &[1, -2]).unwrap();
    let phi = phi_b(&class_of_polytope(&BnPolytope::simplex(&s).unwrap()).unwrap()).unwrap();
    let h = h_class(&s).unwrap();
    for (a, b) in phi.values.iter().zip(&h.values) {
        assert_eq!(a.truncate_in(&["t1", "t2"], 1), QPoly::one() + b.clone());
    }
    for i in 1..=2 {
        let f = EqClass::constant(2, Side::K, t(&big_t(i), 1) - QPoly::one()).unwrap();
        for v in phi_b(&f).unwrap().values {
            assert!(v.constant_term() == q(0));
        }
    }
}

#[test]
fn calibration() {
    for n in 1..=3 {
        let top = total_chern(&box_one(n).unwrap()).unwrap();
        assert_eq!(integrate(&top).unwrap(), QPoly::one(), "n = {n}");
        assert_eq!(integrate(&EqClass::constant(n, Side::Chow, QPoly::one()).unwrap()).unwrap(), QPoly::zero());
    }
    assert_eq!(euler_char(&class_of_polytope(&BnPolytope::cube(2).unwrap()).unwrap()).unwrap(), 4.into());
    assert_eq!(euler_char(&class_of_polytope(&BnPolytope::origin(2).unwrap()).unwrap()).unwrap(), 1.into());
    assert_eq!(euler_char(&class_of_polytope(&BnPolytope::cross_polytope(2).unwrap()).unwrap()).unwrap(), 5.into());
}

#[test]
fn h_products_count_transversals() {
    let n = 2;
    let sets: Vec<AdmissibleSet> = deltoid::ground::nonempty_ads(n).unwrap();
    for a in &sets {
        for b in &sets {
            let p = integrate_product(&[&h_class(a).unwrap(), &h_class(b).unwrap()]).unwrap();
            let want = signed_transversal_count(&[*a, *b]).unwrap();
            assert_eq!(p, QPoly::constant(q(want as i64)), "{a} {b}");
        }
    }
}

#[test]
fn euler_char_matches_lattice_count() {
    let n = 2;
    for p in [
        BnPolytope::cube(n).unwrap(),
        BnPolytope::signed_permutohedron(n).unwrap(),
        BnPolytope::cross_polytope(n).unwrap().scale(&q(2)),
    ] {
        let h = hrr_check(&p).unwrap();
        assert_eq!(h.lattice_points, lattice_count(&p).unwrap());
        assert!(h.passed(), "{h:?}");
    }
}

#[test]
fn identities_n1() {
    for d in enumerate_deltamatroids(1).unwrap() {
        let r = verify_identities(&d).unwrap();
        assert!(r.passed(), "{d}: {r:?}");
    }
}

#[test]
fn identities_n2() {
    for d in enumerate_deltamatroids(2).unwrap() {
        let r = verify_identities(&d).unwrap();
        assert!(r.passed(), "{d}: {r:?}");
    }
}

#[test]
fn isotropic_identity_circle() {
    let circle = dm(2, &[&[1, 2], &[-1, -2], &[1, -2], &[-1, 2]]);
    assert!(check_isotropic(&circle).unwrap().passed);
}

#[test]
fn identities_sample_n3() {
    let all = enumerate_deltamatroids(3).unwrap();
    for d in all.iter().step_by(all.len() / 5) {
        let r = verify_identities(d).unwrap();
        assert!(r.passed(), "{d}: {r:?}");
    }
}

#[test]
fn hrr_for_schubert_polytopes() {
    for n in 1..=3 {
        for d in deltoid::schubert::all_schubert(n).unwrap().iter() {
            let h = hrr_check(&BnPolytope::from_deltamatroid(d).unwrap()).unwrap();
            assert!(h.passed(), "{d}: {h:?}");
        }
    }
}
