use deltoid::deltamatroid::DeltaMatroid;
use deltoid::ground::AdmissibleSet;
use deltoid::poly::q;
use deltoid::polyhedra::*;
use num_bigint::BigInt;

fn ads(n: usize, e: &[i32]) -> AdmissibleSet {
    AdmissibleSet::from_signed(n, e).unwrap()
}

fn circle() -> DeltaMatroid {
    DeltaMatroid::from_signed(2, &[vec![1, 2], vec![-1, -2]]).unwrap()
}

#[test]
fn simplex_support() {
    let s = BnPolytope::simplex(&ads(1, &[1])).unwrap();
    assert_eq!(s.support(&ads(1, &[1])), q(1));
    assert_eq!(s.support(&ads(1, &[-1])), q(0));
    let s = BnPolytope::simplex(&ads(2, &[1, 2])).unwrap();
    assert_eq!(s.support(&ads(2, &[-1, -2])), q(0));
    assert!(BnPolytope::simplex(&AdmissibleSet::empty(2)).is_err());
}

#[test]
fn vertices_of_small_polytopes() {
    let id = deltoid::ground::SignedPermutation::identity(2);
    assert_eq!(BnPolytope::cube(2).unwrap().vertex(&id), vec![q(1), q(1)]);
    assert_eq!(BnPolytope::cross_polytope(2).unwrap().vertex(&id), vec![q(1), q(0)]);
    let t = deltoid::ground::SignedPermutation::tau_last(1).unwrap();
    assert_eq!(BnPolytope::simplex(&ads(1, &[1])).unwrap().vertex(&t), vec![q(0)]);
}

#[test]
fn minkowski_examples() {
    let a = BnPolytope::simplex(&ads(2, &[1])).unwrap();
    let b = BnPolytope::simplex(&ads(2, &[2])).unwrap();
    assert_eq!(minkowski_combine(&[(1, &a), (1, &b)]).unwrap(), BnPolytope::cube(2).unwrap());
    let s = BnPolytope::simplex(&ads(1, &[1])).unwrap();
    let two = minkowski_combine(&[(2, &s)]).unwrap();
    assert_eq!(two.support(&ads(1, &[1])), q(2));
    // Δ_{1} − Δ_{1̄} is the translate [1, 1]... of length zero plus e₁: a point
    let sb = BnPolytope::simplex(&ads(1, &[-1])).unwrap();
    let d = minkowski_combine(&[(1, &s), (-1, &sb)]).unwrap();
    assert_eq!(d, BnPolytope::point(&[q(1)]).unwrap());
    // Δ_{1} − Δ_{2} is not a polytope
    assert!(minkowski_combine(&[(1, &a), (-1, &b)]).is_err());
}

#[test]
fn decompositions() {
    let d = delta_decompose(&BnPolytope::cube(2).unwrap()).unwrap();
    assert_eq!(d.coeffs, vec![(ads(2, &[1]), BigInt::from(1)), (ads(2, &[2]), BigInt::from(1))]);
    for p in [BnPolytope::from_deltamatroid(&circle()).unwrap(), BnPolytope::signed_permutohedron(2).unwrap()] {
        let d = delta_decompose(&p).unwrap();
        assert_eq!(reconstruct(&d).unwrap(), p);
    }
}

#[test]
fn incidence_nonsingular_up_to_six() {
    for n in 1..=6 {
        assert!(incidence_nonsingular(n).unwrap(), "n = {n}");
    }
}

#[test]
fn transversals() {
    let c = |n, s: &[&[i32]]| signed_transversal_count(&s.iter().map(|e| ads(n, e)).collect::<Vec<_>>()).unwrap();
    assert_eq!(c(2, &[&[1], &[2]]), 1);
    assert_eq!(c(2, &[&[1], &[1]]), 0);
    assert_eq!(c(2, &[&[1, -2], &[-2, 1]]), 1);
}

#[test]
fn volumes() {
    let cube = BnPolytope::cube(2).unwrap();
    assert_eq!(volume(&delta_decompose(&cube).unwrap()).unwrap(), q(2));
    assert_eq!(volume(&delta_decompose(&cube.scale(&q(2))).unwrap()).unwrap(), q(8));
    for n in 1..=3 {
        let full = AdmissibleSet::new(n, (1 << n) - 1, 0).unwrap();
        let s = BnPolytope::simplex(&full).unwrap();
        assert_eq!(volume(&delta_decompose(&s).unwrap()).unwrap(), q(1));
        assert_eq!(volume_oracle(&s).unwrap(), q(1));
    }
    let seg = BnPolytope::simplex(&ads(1, &[1])).unwrap().scale(&q(2));
    assert_eq!(volume_oracle(&seg).unwrap(), q(2));
    assert_eq!(volume_oracle(&cube).unwrap(), q(2));
    assert_eq!(ehrhart_polynomial(&cube).unwrap(), vec![q(1), q(2), q(1)]);
    assert_eq!(volume_oracle(&BnPolytope::from_deltamatroid(&circle()).unwrap()).unwrap(), q(0));
    let perm = BnPolytope::signed_permutohedron(2).unwrap();
    assert_eq!(volume(&delta_decompose(&perm).unwrap()).unwrap(), volume_oracle(&perm).unwrap());
}

#[test]
fn lattice_point_counts() {
    assert_eq!(lattice_count(&BnPolytope::cube(2).unwrap()).unwrap(), 4);
    assert_eq!(lattice_count(&BnPolytope::cross_polytope(2).unwrap()).unwrap(), 5);
    assert_eq!(lattice_count(&BnPolytope::origin(2).unwrap()).unwrap(), 1);
}

#[test]
fn psi_examples() {
    use deltoid::QPoly;
    let x = QPoly::var("x");
    let y = QPoly::var("y");
    assert_eq!(psi(&(x.clone() * x.clone())), (x.clone() * x.clone() - x.clone()).scale(&deltoid::poly::qf(1, 2)));
    assert_eq!(psi(&(x.clone() * y.clone())), x.clone() * y);
    let cube = x.pow(3).unwrap().scale(&q(3));
    let expect = (x.clone() * (x.clone() - QPoly::one()) * (x.clone() - QPoly::constant(q(2)))).scale(&deltoid::poly::qf(1, 2));
    assert_eq!(psi(&cube), expect);
}

#[test]
fn lattice_formula_examples() {
    let cube = delta_decompose(&BnPolytope::cube(2).unwrap()).unwrap();
    assert_eq!(lattice_count_formula(&cube, LatticeConvention::Multiset).unwrap(), BigInt::from(1));
    assert_eq!(lattice_count_formula(&cube, LatticeConvention::OrderedPsi).unwrap(), BigInt::from(2));
    let seg = delta_decompose(&BnPolytope::simplex(&ads(1, &[1])).unwrap().scale(&q(3))).unwrap();
    assert_eq!(lattice_count_formula(&seg, LatticeConvention::Multiset).unwrap(), BigInt::from(3));
    assert_eq!(lattice_count_formula(&seg, LatticeConvention::OrderedPsi).unwrap(), BigInt::from(3));
    let c2 = delta_decompose(&BnPolytope::cube(2).unwrap().scale(&q(2))).unwrap();
    assert_eq!(lattice_count_formula(&c2, LatticeConvention::Multiset).unwrap(), BigInt::from(4));
}

#[test]
fn cube_intersections() {
    let c2 = BnPolytope::cube(2).unwrap().scale(&q(2));
    assert_eq!(intersect_with_cube(&c2, &[0, 0]).unwrap().unwrap(), BnPolytope::cube(2).unwrap());
    let dia = BnPolytope::cross_polytope(2).unwrap();
    let tri = BnPolytope::simplex(&ads(2, &[1, 2])).unwrap();
    assert_eq!(intersect_with_cube(&dia, &[0, 0]).unwrap().unwrap(), tri);
    let s = BnPolytope::simplex(&ads(2, &[1])).unwrap();
    assert!(intersect_with_cube(&s, &[5, 0]).unwrap().is_none());
}

#[test]
fn delta_matroid_polytopes_meet_unit_cube_in_delta_matroids() {
    for d in deltoid::deltamatroid::enumerate_deltamatroids(2).unwrap() {
        let p = BnPolytope::from_deltamatroid(&d).unwrap();
        let x = intersect_with_cube(&p, &[0, 0]).unwrap().unwrap();
        assert_eq!(x, p);
    }
}
