use deltoid::deltamatroid::{enumerate_deltamatroids, DeltaMatroid};
use deltoid::ground::AdmissibleSet;
use deltoid::poly::q;
use deltoid::polyhedra::{intersect_with_cube, BnPolytope};
use deltoid::schubert::*;

fn ads(n: usize, e: &[i32]) -> AdmissibleSet {
    AdmissibleSet::from_signed(n, e).unwrap()
}

fn dm(n: usize, sets: &[&[i32]]) -> DeltaMatroid {
    DeltaMatroid::from_signed(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
}

#[test]
fn standard_schubert_examples() {
    assert_eq!(standard_schubert(&ads(2, &[-1, -2])).unwrap(), dm(2, &[&[-1, -2]]));
    assert_eq!(standard_schubert(&ads(1, &[1])).unwrap(), dm(1, &[&[1], &[-1]]));
    // {1,2̄} sorts to (2̄,1), below (1̄,2) elementwise
    assert_eq!(standard_schubert(&ads(2, &[-1, 2])).unwrap(), dm(2, &[&[-1, -2], &[1, -2], &[-1, 2]]));
    assert!(standard_schubert(&ads(2, &[1])).is_err());
}

#[test]
fn schubert_matroid_examples() {
    let m = schubert_matroid(0b10, 2).unwrap();
    assert_eq!(m.bases_labels(), vec![vec![1], vec![2]]);
    assert_eq!(schubert_matroid(0b01, 2).unwrap().bases_labels(), vec![vec![1]]);
    assert_eq!(schubert_matroid(0b101, 3).unwrap().bases_labels(), vec![vec![1, 2], vec![1, 3]]);
}

#[test]
fn schubert_is_independence_polytope_of_schubert_matroid() {
    for n in 1..=4 {
        for s in deltoid::ground::maximal_ads(n) {
            let d = standard_schubert(&s).unwrap();
            let m = schubert_matroid(s.pos(), n).unwrap();
            assert_eq!(d, DeltaMatroid::from_independents(&m).unwrap());
        }
    }
}

#[test]
fn cone_cube_examples() {
    assert_eq!(cone_cube_intersect(&[1, 1, 1]).unwrap().feasible().len(), 8);
    assert_eq!(cone_cube_intersect(&[0, 0, 0]).unwrap(), dm(3, &[&[-1, -2, -3]]));
    assert_eq!(cone_cube_intersect(&[2, 0]), cone_cube_direct(&[2, 0]));
}

#[test]
fn cone_cube_matches_direct_intersection() {
    for n in 1..=3usize {
        let mut m = vec![-3i64; n];
        loop {
            assert_eq!(cone_cube_intersect(&m), cone_cube_direct(&m), "m = {m:?}");
            let mut k = 0;
            while k < n {
                m[k] += 1;
                if m[k] <= 3 {
                    break;
                }
                m[k] = -3;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
}

#[test]
fn census_matches_eulerian() {
    let expect = [vec![1, 1], vec![1, 6, 1], vec![1, 23, 23, 1]];
    for (n, e) in (1..=3).zip(expect) {
        let r = coloop_free_schubert_census(n).unwrap();
        assert_eq!(r.counts, e);
        assert_eq!(r.eulerian, e);
    }
}

#[test]
fn schubert_closed_under_cube_faces() {
    for n in 1..=3 {
        for d in all_schubert(n).unwrap().iter() {
            for fixed in 0u32..(1 << n) {
                for vals in 0u32..(1 << n) {
                    if vals & !fixed != 0 {
                        continue;
                    }
                    let fam: Vec<u32> = d.feasible().iter().copied().filter(|x| x & fixed == vals).collect();
                    if let Ok(f) = DeltaMatroid::from_bitsets(n, fam) {
                        assert!(is_schubert(&f).unwrap(), "{d} face {fixed:b}={vals:b}");
                    }
                }
            }
        }
    }
}

#[test]
fn indicator_examples() {
    let seg = |a: i64, b: i64| BnPolytope::from_vertices(1, &[vec![q(a)], vec![q(b)]]).unwrap();
    let term = |c: i64, p: BnPolytope| IndicatorTerm { coeff: c, translation: vec![0; p.n()], polytope: p, dm: None };
    let comb = IndicatorCombination {
        n: 1,
        terms: vec![term(1, seg(0, 2)), term(-1, seg(0, 1)), term(-1, seg(1, 2)), term(1, seg(1, 1))],
    };
    assert!(verify_indicator(&comb, None, 0).unwrap().passed());
    let cube = BnPolytope::cube(2).unwrap();
    let one = IndicatorCombination { n: 2, terms: vec![term(1, cube.clone())] };
    assert!(verify_indicator(&one, Some(&cube), 0).unwrap().passed());
    let bad = IndicatorCombination { n: 2, terms: vec![term(1, cube.clone()), term(-1, BnPolytope::origin(2).unwrap())] };
    assert!(!verify_indicator(&bad, Some(&cube), 0).unwrap().passed());
}

#[test]
fn schubert_polytopes_decompose_to_themselves() {
    for n in 1..=3 {
        for d in all_schubert(n).unwrap().iter() {
            let p = BnPolytope::from_deltamatroid(d).unwrap();
            let c = schubert_decompose(&p).unwrap();
            assert_eq!(c.terms.len(), 1, "{d}");
            assert_eq!(c.terms[0].coeff, 1);
            assert_eq!(c.terms[0].dm.as_ref(), Some(d));
        }
    }
}

#[test]
fn decompositions_verify() {
    for n in 1..=2 {
        for d in enumerate_deltamatroids(n).unwrap() {
            let p = BnPolytope::from_deltamatroid(&d).unwrap();
            let c = schubert_decompose(&p).unwrap();
            let r = verify_indicator(&c, Some(&p), 7).unwrap();
            assert!(r.passed(), "{d}: {:?}", r.first_mismatch);
        }
    }
    for p in [BnPolytope::cross_polytope(2).unwrap(), BnPolytope::signed_permutohedron(2).unwrap()] {
        let c = schubert_decompose(&p).unwrap();
        let r = verify_indicator(&c, Some(&p), 7).unwrap();
        assert!(r.passed(), "{:?}", r.first_mismatch);
    }
}

#[test]
fn cube_intersection_of_schubert_matches_reduction() {
    // (m + C) truncated to a large box, intersected with [0,1]ⁿ
    for m in [[2i64, 0], [1, 1], [0, 2], [-1, 2], [3, -1]] {
        let big = 6;
        let pts: Vec<Vec<deltoid::Rational>> = (0..4u32)
            .flat_map(|k| {
                let a = if k & 1 != 0 { big } else { -big };
                let b = if k & 2 != 0 { big } else { -big };
                [vec![a, b]]
            })
            .map(|v| v.iter().map(|&x| q(x)).collect())
            .collect();
        let _ = pts;
        let h = |s: &AdmissibleSet| -> deltoid::Rational {
            // support of (m + C) ∩ [−big, big]² by brute force over the lattice
            let mut best = i64::MIN;
            for x in -big..=big {
                for y in -big..=big {
                    let v = [x - m[0], y - m[1]];
                    if v[1] <= 0 && v[0] + v[1] <= 0 {
                        best = best.max(s.pair_i64(&[x, y]));
                    }
                }
            }
            q(best)
        };
        let p = BnPolytope::from_fn(2, h).unwrap();
        let x = intersect_with_cube(&p, &[0, 0]).unwrap();
        let expect = cone_cube_intersect(&m).map(|d| BnPolytope::from_deltamatroid(&d).unwrap());
        assert_eq!(x, expect, "m = {m:?}");
    }
}
