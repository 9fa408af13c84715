use deltoid::deltamatroid::{enumerate_deltamatroids, DeltaMatroid};
use deltoid::envelope::{find_envelope, Strategy};
use deltoid::logconc::*;
use deltoid::matroid::Matroid;
use deltoid::poly::q;
use deltoid::represent::{adjacency_delta, circ_uniform_u_poly, Graph};
use deltoid::{QPoly, Rational};
use proptest::prelude::*;

fn dm(n: usize, sets: &[&[i32]]) -> DeltaMatroid {
    DeltaMatroid::from_signed(n, &sets.iter().map(|s| s.to_vec()).collect::<Vec<_>>()).unwrap()
}

fn p(s: &[(i64, &[(&str, i32)])]) -> QPoly {
    s.iter().fold(QPoly::zero(), |acc, (c, m)| acc + QPoly::monomial(q(*c), m))
}

fn qs(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| q(x)).collect()
}

fn dpm() -> DeltaMatroid {
    dm(1, &[&[1], &[-1]])
}

fn circle() -> DeltaMatroid {
    dm(2, &[&[1, 2], &[-1, -2]])
}

#[test]
fn homogenize_examples() {
    let iso = homogenize_u(&dpm(), Target::Isotropic).unwrap();
    assert_eq!(iso, p(&[(1, &[("x", 1)]), (2, &[("y", 1)]), (2, &[("q", 1)])]));
    let plus = homogenize_u(&dm(1, &[&[1]]), Target::Isotropic).unwrap();
    assert_eq!(plus, p(&[(1, &[("x", 1)]), (2, &[("y", 1)])]));
    // U = u + 2 for D±: (2z + x) + 2(y + w)
    let env = homogenize_u(&dpm(), Target::Enveloping).unwrap();
    assert_eq!(env, p(&[(2, &[("z", 1)]), (1, &[("x", 1)]), (2, &[("y", 1)]), (2, &[("w", 1)])]));
    let multi = homogenize_u(&dpm(), Target::Multivariable).unwrap();
    assert_eq!(multi, p(&[(1, &[("x1", 1)]), (2, &[("y", 1)]), (2, &[("q", 1)])]));
    let trivial = homogenize_poly(&QPoly::one(), 0, Target::Isotropic).unwrap();
    assert_eq!(trivial, QPoly::one());
}

#[test]
fn homogenized_outputs_are_homogeneous_and_specialize_back() {
    for d in enumerate_deltamatroids(2).unwrap() {
        let f = homogenize_u(&d, Target::Isotropic).unwrap();
        assert!(f.is_homogeneous());
        assert_eq!(f.total_degree(), Some(2));
        // y = 1, q = 0 recovers U(x, 1)
        let back = f.substitute_values(&[("y", q(1)), ("q", q(0))]).unwrap();
        let u = deltoid::invariants::u_poly_explicit(&d).substitute(&[("u", QPoly::var("x"))]).unwrap();
        assert_eq!(back, u.substitute_values(&[("v", q(1))]).unwrap());
        // the multivariable form with all x_i = x is the isotropic one
        let m = homogenize_u(&d, Target::Multivariable).unwrap();
        let merged = m.substitute(&[("x1", QPoly::var("x")), ("x2", QPoly::var("x"))]).unwrap();
        assert_eq!(merged, f);
    }
}

#[test]
fn sequence_checks() {
    assert_eq!(sequence_failure(&qs(&[1, 2, 1])), None);
    assert_eq!(sequence_failure(&qs(&[0, 0, 0])), None);
    assert_eq!(sequence_failure(&qs(&[0, 1, 1, 0])), None);
    assert_eq!(sequence_failure(&qs(&[1, 0, 1])), Some(SequenceFailure::NotLogConcave(1)));
    assert_eq!(sequence_failure(&qs(&[1, -1])), Some(SequenceFailure::Negative(1)));
    assert_eq!(sequence_failure(&qs(&[1, 1, 0, 0, 1])), Some(SequenceFailure::InternalZero(2)));
    assert_eq!(ultra_failure(&qs(&[2, 4, 1])), None);
    assert_eq!(ultra_failure(&qs(&[1, 2, 1])), None);
    assert_eq!(ultra_failure(&qs(&[1, 1, 1])), Some(SequenceFailure::NotUltraLogConcave(1)));
    assert!(is_unimodal(&qs(&[1, 3, 3, 2])));
    assert!(!is_unimodal(&qs(&[1, 3, 2, 3])));
}

#[test]
fn unbroken_examples() {
    let sq = p(&[(1, &[("x", 2)]), (2, &[("x", 1), ("y", 1)]), (1, &[("y", 2)])]);
    assert!(is_log_concave_unbroken(&sq).unwrap().passed());
    let gap = p(&[(1, &[("x", 2)]), (1, &[("y", 2)])]);
    let r = is_log_concave_unbroken(&gap).unwrap();
    let (arr, fail) = r.witness.unwrap();
    assert_eq!(arr.coeffs, qs(&[1, 0, 1]));
    assert_eq!(fail, SequenceFailure::NotLogConcave(1));
    let lin = homogenize_u(&dpm(), Target::Isotropic).unwrap();
    assert!(is_log_concave_unbroken(&lin).unwrap().passed());
    assert!(is_log_concave_unbroken(&p(&[(1, &[("x", 1)]), (1, &[("y", 2)])])).is_err());
}

#[test]
fn lorentzian_examples() {
    let sq = p(&[(1, &[("x", 2)]), (2, &[("x", 1), ("y", 1)]), (1, &[("y", 2)])]);
    let r = is_denormalized_lorentzian(&sq).unwrap();
    assert!(r.passed());
    assert_eq!(r.hessians_checked, 1);
    let gap = p(&[(1, &[("x", 2)]), (1, &[("y", 2)])]);
    assert!(!is_denormalized_lorentzian(&gap).unwrap().passed());
    // e₂(x, y, z) is multiaffine, so N(e₂) = e₂ is a matroid basis polynomial
    let e2 = p(&[(1, &[("x", 1), ("y", 1)]), (1, &[("x", 1), ("z", 1)]), (1, &[("y", 1), ("z", 1)])]);
    assert!(is_denormalized_lorentzian(&e2).unwrap().passed());
    // x³ + y³: support not M-convex
    let cubes = p(&[(1, &[("x", 3)]), (1, &[("y", 3)])]);
    assert!(matches!(
        is_denormalized_lorentzian(&cubes).unwrap().failure,
        Some(LorentzianFailure::NotMConvex { .. })
    ));
    // x² + xy + 2y²: support is fine but N(f) has Hessian [[1,1],[1,2]], definite
    let def = p(&[(1, &[("x", 2)]), (1, &[("x", 1), ("y", 1)]), (2, &[("y", 2)])]);
    assert!(matches!(
        is_denormalized_lorentzian(&def).unwrap().failure,
        Some(LorentzianFailure::Hessian { positive: 2, .. })
    ));
    let neg = p(&[(1, &[("x", 1)]), (-1, &[("y", 1)])]);
    assert!(matches!(
        is_denormalized_lorentzian(&neg).unwrap().failure,
        Some(LorentzianFailure::NegativeCoefficient(_))
    ));
}

#[test]
fn normalization() {
    let f = p(&[(6, &[("x", 3)]), (2, &[("x", 1), ("y", 2)])]);
    assert_eq!(normalize(&f), p(&[(1, &[("x", 3)]), (1, &[("x", 1), ("y", 2)])]));
}

#[test]
fn hessian_cap() {
    let names: Vec<String> = (0..9).map(|i| format!("a{i}")).collect();
    let f = names.iter().fold(QPoly::zero(), |acc, n| acc + QPoly::var(n));
    let f = f.mul_ref(&f);
    assert!(is_denormalized_lorentzian(&f).is_err());
}

#[test]
fn circle_multivariable_is_lorentzian() {
    let f = homogenize_u(&circle(), Target::Multivariable).unwrap();
    let r = is_denormalized_lorentzian(&f).unwrap();
    assert!(r.passed(), "{r:?}");
    assert!(is_log_concave_unbroken(&f).unwrap().passed());
}

fn enveloped_family(n: usize) -> Vec<DeltaMatroid> {
    let mut out = Vec::new();
    for d in enumerate_deltamatroids(n).unwrap() {
        let cheap = find_envelope(&d, &Strategy::Base).unwrap().is_some()
            || find_envelope(&d, &Strategy::Indep).unwrap().is_some();
        if cheap || (n <= 2 && find_envelope(&d, &Strategy::Auto).unwrap().is_some()) {
            out.push(d);
        }
    }
    out
}

#[test]
fn theorem_b_for_small_enveloped() {
    let mut fam = enveloped_family(1);
    fam.extend(enveloped_family(2));
    assert_eq!(fam.len(), enumerate_deltamatroids(1).unwrap().len() + enumerate_deltamatroids(2).unwrap().len());
    for g in Graph::all(3) {
        fam.push(adjacency_delta(&g).unwrap());
    }
    for d in &fam {
        let s = lorentzian_suite(d).unwrap();
        for (t, f, l, u) in &s.results {
            assert!(l.passed(), "{} {d}: {f} {l:?}", t.name());
            assert!(u.passed(), "{} {d}: {f}", t.name());
        }
    }
}

#[test]
fn corollary_examples() {
    let pu = DeltaMatroid::from_bases(&Matroid::uniform(1, 2).unwrap()).unwrap();
    let r = corollary_checks(&pu, None).unwrap();
    let b = r.base.as_ref().unwrap();
    assert_eq!(b.direct, qs(&[2, 4, 1]));
    assert_eq!(b.from_u, qs(&[2, 4, 1]));
    assert!(r.passed());

    let r = corollary_checks(&dpm(), None).unwrap();
    let s = r.sequences.iter().find(|s| s.name == "u-2u-minus-u").unwrap();
    assert_eq!(s.values, qs(&[2, 2]));
    assert!(r.base.is_none());

    // Int = 2 + 2v, so (y+1)²(2 + 2(y−1)/(y+1)) = 4y + 4y²
    let r = corollary_checks(&circle(), None).unwrap();
    assert_eq!(r.interlace, qs(&[2, 2, 0]));
    let s = r.sequences.iter().find(|s| s.name == "interlace-transform").unwrap();
    assert_eq!(s.values, qs(&[0, 4, 4]));
    assert!(r.passed());

    let wit = find_envelope(&dpm(), &Strategy::Auto).unwrap().unwrap();
    assert_eq!(corollary_checks(&dpm(), Some(&wit)).unwrap().has_envelope, Some(true));
    assert!(corollary_checks(&circle(), Some(&wit)).is_err());
}

#[test]
fn corollaries_for_matroid_catalog() {
    for k in 0..=5 {
        for r in 0..=k {
            let m = Matroid::uniform(r, k).unwrap();
            let d = DeltaMatroid::from_bases(&m).unwrap();
            let rep = corollary_checks(&d, None).unwrap();
            assert!(rep.passed(), "U_{{{r},{k}}}: {rep:?}");
            let ip = DeltaMatroid::from_independents(&m).unwrap();
            assert!(corollary_checks(&ip, None).unwrap().passed());
        }
    }
    for g in Graph::all(4) {
        let edges: Vec<(usize, usize)> = g.edges.iter().map(|&(a, b)| (a - 1, b - 1)).collect();
        let m = Matroid::graphic(4, &edges).unwrap();
        let d = DeltaMatroid::from_bases(&m).unwrap();
        assert!(corollary_checks(&d, None).unwrap().passed());
    }
}

#[test]
fn corollaries_for_all_n3() {
    for d in enumerate_deltamatroids(3).unwrap() {
        let r = corollary_checks(&d, None).unwrap();
        assert!(r.passed(), "{d}: {r:?}");
    }
}

#[test]
fn circ_family_keeps_transform_log_concave() {
    let u = circ_uniform_u_poly(7, 20).unwrap();
    let r = corollary_checks_from_u(&u, 20, None).unwrap();
    assert_eq!(&r.interlace[..4], &qs(&[94184, 169766, 167960, 184756])[..]);
    assert!(!r.interlace_unimodal);
    let t = r.sequences.iter().find(|s| s.name == "interlace-transform").unwrap();
    assert!(t.failure.is_none());
    assert!(r.passed());
}

#[test]
fn flawless_examples() {
    assert_eq!(u_2u_minus_u(&dpm()).unwrap(), qs(&[2, 2]));
    assert!(is_flawless(&qs(&[2, 2]), 1));
    assert!(!is_flawless(&qs(&[3, 1]), 1));
    assert!(is_flawless(&qs(&[1, 5, 2]), 2));
    let all: Vec<DeltaMatroid> = (1..=3).flat_map(|n| enumerate_deltamatroids(n).unwrap()).collect();
    let r = flawless_scan(&all).unwrap();
    assert_eq!(r.checked, all.len());
    assert!(r.counterexamples.is_empty(), "{:?}", r.counterexamples.first());
    let graphs: Vec<DeltaMatroid> = (1..=4).flat_map(Graph::all).map(|g| adjacency_delta(&g).unwrap()).collect();
    assert!(flawless_scan(&graphs).unwrap().counterexamples.is_empty());
}

fn linear(vars: &[&str], c: &[u8]) -> QPoly {
    vars.iter().zip(c).fold(QPoly::zero(), |acc, (v, &k)| acc + QPoly::var(v).scale(&q(k as i64)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // two-variable quadratics: N(f) has Hessian [[a,b],[b,c]], so b² ≥ ac decides
    #[test]
    fn quadratic_oracle(a in 0i64..6, b in 0i64..8, c in 0i64..6) {
        let f = p(&[(a, &[("x", 2)]), (b, &[("x", 1), ("y", 1)]), (c, &[("y", 2)])]);
        let got = is_denormalized_lorentzian(&f).unwrap().passed();
        prop_assert_eq!(got, b * b >= a * c);
    }

    // products of nonnegative linear forms are denormalized Lorentzian,
    // and Lorentzian implies an unbroken log-concave array
    #[test]
    fn products_of_linear_forms(forms in prop::collection::vec(prop::collection::vec(0u8..4, 3), 1..4)) {
        let vars = ["x", "y", "z"];
        let f = forms.iter().fold(QPoly::one(), |acc, c| acc.mul_ref(&linear(&vars, c)));
        prop_assume!(!f.is_zero());
        prop_assert!(is_denormalized_lorentzian(&f).unwrap().passed());
        prop_assert!(is_log_concave_unbroken(&f).unwrap().passed());
    }

    #[test]
    fn lorentzian_implies_unbroken(coeffs in prop::collection::vec(0i64..4, 6)) {
        let monos: [&[(&str, i32)]; 6] = [
            &[("x", 2)], &[("y", 2)], &[("z", 2)],
            &[("x", 1), ("y", 1)], &[("x", 1), ("z", 1)], &[("y", 1), ("z", 1)],
        ];
        let f = monos.iter().zip(&coeffs).fold(QPoly::zero(), |acc, (m, &c)| acc + QPoly::monomial(q(c), m));
        prop_assume!(!f.is_zero());
        if is_denormalized_lorentzian(&f).unwrap().passed() {
            prop_assert!(is_log_concave_unbroken(&f).unwrap().passed());
        }
    }
}
