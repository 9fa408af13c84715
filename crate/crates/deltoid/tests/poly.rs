use deltoid::linalg::{char_poly, inverse, positive_eigenvalue_count, rank, rank_mod_p, solve};
use deltoid::poly::{q, qf, MPoly};
use deltoid::{QPoly, Rational, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn v(name: &str) -> QPoly {
    QPoly::var(name)
}

fn c(n: i64) -> QPoly {
    QPoly::constant(q(n))
}

#[test]
fn arithmetic_examples() {
    let u = v("u");
    assert_eq!(&(&u + &c(1)) * &(&u - &c(1)), &u * &u - c(1));

    let t = QPoly::monomial(q(1), &[("T1", 1)]);
    let tinv = QPoly::monomial(q(1), &[("T1", -1)]);
    assert!(tinv.is_laurent());
    assert_eq!(&t * &tinv, QPoly::one());

    let cube = (&v("x") + &v("y")).pow(3).unwrap();
    assert_eq!(cube.coeff(&[("x", 1), ("y", 2)]), q(3));
}

#[test]
fn negative_power_of_non_monomial_is_rejected() {
    assert!((&v("x") + &c(1)).pow(-1).is_err());
    assert!(QPoly::monomial(q(2), &[("x", 1)]).pow(-1).is_err());
    let x = QPoly::monomial(q(-1), &[("x", 1), ("y", 2)]);
    assert!(x.pow(-1).is_err(), "needs Laurent mode");
    let x = x.with_laurent(true).unwrap();
    assert_eq!(x.pow(-3).unwrap(), QPoly::monomial(q(-1), &[("x", -3), ("y", -6)]));
}

#[test]
fn substitution_examples() {
    let f = &v("u") + &c(2);
    assert_eq!(f.substitute(&[("u", QPoly::zero())]).unwrap(), c(2));

    let f = &v("u") * &v("v");
    let got = f.substitute(&[("u", &v("x") + &c(1)), ("v", &v("x") - &c(1))]).unwrap();
    assert_eq!(got, &v("x") * &v("x") - c(1));

    let f = &v("u") * &v("u");
    assert_eq!(f.eval(&[("u", qf(3, 2))]).unwrap(), qf(9, 4));
}

#[test]
fn substitute_fraction_clears_the_denominator() {
    // (y+q)^2 · U(x/(y+q), (y−q)/(y+q)) for U = u + v
    let f = &v("u") + &v("v");
    let den = &v("y") + &v("q");
    let got = f.substitute_fraction(&[("u", v("x")), ("v", &v("y") - &v("q"))], &den, 2).unwrap();
    let want = &(&v("x") + &(&v("y") - &v("q"))) * &den;
    assert_eq!(got, want);
}

#[test]
fn truncation_examples() {
    let one_plus_t = (&c(1) + &v("t")).pow(3).unwrap();
    assert_eq!(one_plus_t.truncate_degree(1), &c(1) + &QPoly::monomial(q(3), &[("t", 1)]));
    assert!((&v("t") * &v("t")).truncate_degree(1).is_zero());
    assert_eq!(one_plus_t.truncate_degree(3), one_plus_t);
}

#[test]
fn univariate_round_trip() {
    let coeffs = vec![q(1), q(0), q(-3), qf(1, 2)];
    let p = QPoly::from_univariate("z", &coeffs);
    assert_eq!(p.univariate_coeffs("z").unwrap(), coeffs);
    assert_eq!(p.degree_in("z"), 3);
    assert_eq!(p.derivative("z"), QPoly::from_univariate("z", &[q(0), q(-6), qf(3, 2)]));
}

#[test]
fn integer_polynomials() {
    let x = ZPoly::var("x");
    let one = ZPoly::one();
    let sq = (&x + &one).pow(2).unwrap();
    assert_eq!(sq.coeff(&[("x", 1)]), BigInt::from(2));
    let as_q: QPoly = sq.map_coeffs(|k| Rational::from_integer(k.clone()));
    assert_eq!(as_q.eval(&[("x", q(2))]).unwrap(), q(9));
}

#[test]
fn linear_algebra() {
    let a = vec![vec![q(2), q(1)], vec![q(1), q(3)]];
    assert_eq!(rank(&a), 2);
    let inv = inverse(&a).unwrap();
    assert_eq!(inv, vec![vec![qf(3, 5), qf(-1, 5)], vec![qf(-1, 5), qf(2, 5)]]);
    assert_eq!(solve(&a, &[q(3), q(4)]).unwrap(), vec![q(1), q(1)]);
    // det(λI − A) = λ² − 5λ + 5, both roots positive
    assert_eq!(positive_eigenvalue_count(&a), 2);
    let b = vec![vec![q(1), q(2)], vec![q(2), q(1)]];
    assert_eq!(positive_eigenvalue_count(&b), 1);
    assert!(!char_poly(&b).is_empty());
    let singular = vec![vec![q(1), q(2)], vec![q(2), q(4)]];
    assert!(inverse(&singular).is_none());
    assert_eq!(rank_mod_p(&[vec![1, 2], vec![2, 4]], 7), 1);
    assert_eq!(rank_mod_p(&[vec![1, 2], vec![3, 4]], 2), 1);
}

fn small_poly() -> impl Strategy<Value = QPoly> {
    let term = (-3i64..=3, 1i64..=3, 0i32..=2, 0i32..=2, 0i32..=1);
    proptest::collection::vec(term, 0..5).prop_map(|ts| {
        ts.into_iter().fold(QPoly::zero(), |acc, (n, d, a, b, c)| {
            &acc + &MPoly::monomial(qf(n, d), &[("x", a), ("y", b), ("z", c)])
        })
    })
}

proptest! {
    #[test]
    fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a - &a, QPoly::zero());
        prop_assert_eq!(&a * &QPoly::one(), a.clone());
        prop_assert_eq!(&a + &QPoly::zero(), a);
    }

    #[test]
    fn substitution_is_a_homomorphism(a in small_poly(), b in small_poly(), g in small_poly()) {
        let s = |p: &QPoly| p.substitute(&[("x", g.clone())]).unwrap();
        prop_assert_eq!(s(&(&a * &b)), &s(&a) * &s(&b));
        prop_assert_eq!(s(&(&a + &b)), &s(&a) + &s(&b));
    }

    #[test]
    fn substitution_composes(f in small_poly(), g in small_poly(), h in small_poly()) {
        // f[x := g][x := h] = f[x := g[x := h]]
        let two_steps = f.substitute(&[("x", g.clone())]).unwrap().substitute(&[("x", h.clone())]).unwrap();
        let g_h = g.substitute(&[("x", h.clone())]).unwrap();
        let one_step = f.substitute(&[("x", g_h)]).unwrap();
        prop_assert_eq!(two_steps, one_step);
    }

    #[test]
    fn evaluation_respects_products(a in small_poly(), b in small_poly(), x in -4i64..=4, y in -4i64..=4) {
        let pt = [("x", q(x)), ("y", q(y)), ("z", qf(1, 3))];
        prop_assert_eq!((&a * &b).eval(&pt).unwrap(), a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
    }

    #[test]
    fn truncation_keeps_low_degrees(a in small_poly(), d in 0i32..=5) {
        let t = a.truncate_degree(d);
        prop_assert!(t.total_degree().map_or(true, |k| k <= d));
        let rest = &a - &t;
        prop_assert!(rest.min_total_degree().map_or(true, |k| k > d));
    }
}
