//! Torus-fixed-point calculus on the B_n permutohedral variety.
//!
//! A class is a tuple of polynomials indexed by signed permutations, in the
//! order of [`group`]. K-classes are Laurent polynomials in `T1..Tn`; Chow
//! classes are polynomials in `t1..tn`, possibly with extra formal parameters,
//! truncated at degree n in the t's.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::deltamatroid::DeltaMatroid;
use crate::error::{invalid, Error, Result};
use crate::ground::{group, AdmissibleSet, SignedPermutation};
use crate::invariants::{interlace, u_poly_explicit, u_poly_multi, u_var};
use crate::limits;
use crate::poly::{as_integer, q};
use crate::polyhedra::{lattice_count, BnPolytope};
use crate::{QPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    K,
    Chow,
}

pub fn big_t(i: usize) -> String {
    format!("T{i}")
}

pub fn small_t(i: usize) -> String {
    format!("t{i}")
}

fn names(n: usize, side: Side) -> Vec<String> {
    (1..=n).map(|i| if side == Side::K { big_t(i) } else { small_t(i) }).collect()
}

/// Sign applied to every tangent weight. Fixed by χ(□) = 2ⁿ and ∫c_n(⊞𝒪(1)) = 1.
pub const TANGENT_SIGN: i64 = 1;

/// The weights e_{w(k)} − e_{w(k+1)} (k < n) and e_{w(n)}, dual to the chain of C_w.
pub fn tangent_weights(w: &SignedPermutation) -> Vec<Vec<i64>> {
    let n = w.n();
    let e = |l: i32| {
        let mut v = vec![0i64; n];
        v[l.unsigned_abs() as usize - 1] = if l > 0 { 1 } else { -1 };
        v
    };
    let im = w.images();
    (0..n)
        .map(|k| {
            let mut v = e(im[k]);
            if k + 1 < n {
                for (a, b) in v.iter_mut().zip(e(im[k + 1])) {
                    *a -= b;
                }
            }
            v.iter().map(|x| x * TANGENT_SIGN).collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct EqClass {
    pub n: usize,
    pub side: Side,
    pub values: Vec<QPoly>,
}

/// T_l (or t_l) for a signed label, with T_ī = T_i^{-1} and t_ī = −t_i.
pub fn label_poly(l: i32, side: Side) -> QPoly {
    let i = l.unsigned_abs() as usize;
    match side {
        Side::K => QPoly::monomial(q(1), &[(&big_t(i), l.signum())]).with_laurent(true).expect("monomial"),
        Side::Chow => QPoly::monomial(q(l.signum() as i64), &[(&small_t(i), 1)]),
    }
}

/// Σ m_i t_i.
fn linear_form(m: &[i64]) -> QPoly {
    let mut p = QPoly::zero();
    for (i, &c) in m.iter().enumerate() {
        if c != 0 {
            p = p + QPoly::monomial(q(c), &[(&small_t(i + 1), 1)]);
        }
    }
    p
}

/// Exponent vectors over T1..Tn of a K-side value.
fn k_terms(f: &QPoly, n: usize) -> Result<Vec<(Vec<i64>, Rational)>> {
    let mut out = Vec::new();
    for (key, c) in f.canonical_terms() {
        let mut e = vec![0i64; n];
        for (name, k) in key {
            let i = name
                .strip_prefix('T')
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|&i| i >= 1 && i <= n)
                .ok_or_else(|| Error::InvalidArgument(format!("unexpected variable {name} in a K-class")))?;
            e[i - 1] = k as i64;
        }
        out.push((e, c));
    }
    Ok(out)
}

fn k_monomial(e: &[i64]) -> QPoly {
    let names: Vec<String> = (1..=e.len()).map(big_t).collect();
    let powers: Vec<(&str, i32)> = e.iter().enumerate().filter(|(_, &k)| k != 0).map(|(i, &k)| (names[i].as_str(), k as i32)).collect();
    QPoly::monomial(q(1), &powers)
}

/// Multiplication followed by truncation at degree `deg` in the t's.
struct Trunc {
    names: Vec<String>,
    deg: i32,
}

impl Trunc {
    fn new(n: usize) -> Self {
        Trunc { names: names(n, Side::Chow), deg: n as i32 }
    }
    fn cut(&self, p: &QPoly) -> QPoly {
        let r: Vec<&str> = self.names.iter().map(String::as_str).collect();
        p.truncate_in(&r, self.deg)
    }
    fn mul(&self, a: &QPoly, b: &QPoly) -> QPoly {
        self.cut(&(a * b))
    }
    /// (1 + x)^a as a binomial series; x must have positive t-degree.
    fn binom(&self, x: &QPoly, a: i64) -> QPoly {
        let mut total = QPoly::one();
        let mut xp = QPoly::one();
        let mut c = q(1);
        for j in 1..=self.deg as i64 {
            if a >= 0 && j > a {
                break;
            }
            xp = self.mul(&xp, x);
            c = c * q(a - j + 1) / q(j);
            total = total + xp.scale(&c);
        }
        total
    }
}

impl EqClass {
    pub fn from_fn(n: usize, side: Side, f: impl Fn(&SignedPermutation) -> Result<QPoly>) -> Result<Self> {
        limits::check("localization", n, limits::LOCALIZATION)?;
        let g = group(n)?;
        let values = g.elements().iter().map(f).collect::<Result<_>>()?;
        Ok(EqClass { n, side, values })
    }

    pub fn constant(n: usize, side: Side, c: QPoly) -> Result<Self> {
        EqClass::from_fn(n, side, |_| Ok(c.clone()))
    }

    fn zip(&self, other: &Self, f: impl Fn(&QPoly, &QPoly) -> QPoly) -> Result<Self> {
        if self.n != other.n || self.side != other.side {
            return invalid("classes live on different spaces");
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(EqClass { n: self.n, side: self.side, values })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product, truncated at degree n on the Chow side.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let t = Trunc::new(self.n);
        let chow = self.side == Side::Chow;
        self.zip(other, |a, b| if chow { t.mul(a, b) } else { a * b })
    }

    pub fn value(&self, w: &SignedPermutation) -> Result<&QPoly> {
        let g = group(self.n)?;
        Ok(&self.values[g.index_of(w)])
    }

    /// [ℰ] ↦ [ℰ^∨]: T^m ↦ T^{−m}.
    pub fn dual(&self) -> Result<Self> {
        if self.side != Side::K {
            return invalid("dual is defined on K-classes");
        }
        let n = self.n;
        let values = self
            .values
            .iter()
            .map(|f| {
                let mut out = QPoly::zero();
                for (e, c) in k_terms(f, n)? {
                    let neg: Vec<i64> = e.iter().map(|x| -x).collect();
                    out = out + k_monomial(&neg).scale(&c);
                }
                Ok(out)
            })
            .collect::<Result<_>>()?;
        Ok(EqClass { n, side: Side::K, values })
    }

    /// (w·f)_{w′} = f_{w⁻¹w′}(T_{w(1)}, …, T_{w(n)}).
    pub fn act(&self, w: &SignedPermutation) -> Result<Self> {
        if w.n() != self.n {
            return invalid("acting by a permutation of a different size");
        }
        let g = group(self.n)?;
        let winv = w.inverse();
        let names = names(self.n, self.side);
        let bind: Vec<(&str, QPoly)> =
            (1..=self.n).map(|i| (names[i - 1].as_str(), label_poly(w.apply(i as i32), self.side))).collect();
        let values = g
            .elements()
            .iter()
            .map(|wp| {
                let v = self.values[g.index_of(&winv.compose(wp))].clone();
                let v = if self.side == Side::K { v.with_laurent(true)? } else { v };
                v.substitute(&bind)
            })
            .collect::<Result<_>>()?;
        Ok(EqClass { n: self.n, side: self.side, values })
    }
}

/// The character of the edge between C_w and C_{w′}: e_{w(i)} − e_{w(i+1)} or e_{w(n)}.
fn edge_vector(w: &SignedPermutation, i: usize) -> Vec<i64> {
    let n = w.n();
    let mut v = vec![0i64; n];
    let mut put = |l: i32, s: i64| v[l.unsigned_abs() as usize - 1] += s * l.signum() as i64;
    put(w.images()[i - 1], 1);
    if i < n {
        put(w.images()[i], -1);
    }
    v
}

/// Is g divisible by 1 − T^μ (K) or by ⟨μ, t⟩ (Chow)? μ has a ±1 entry.
fn divisible(g: &QPoly, mu: &[i64], side: Side, n: usize) -> Result<bool> {
    let j = mu.iter().position(|&x| x != 0).expect("nonzero edge vector");
    match side {
        Side::K => {
            // The quotient by T^μ = 1 is the group ring of Zⁿ/Zμ.
            let mut sums: BTreeMap<Vec<i64>, Rational> = BTreeMap::new();
            for (e, c) in k_terms(g, n)? {
                let k = e[j] * mu[j];
                let r: Vec<i64> = e.iter().zip(mu).map(|(a, b)| a - k * b).collect();
                *sums.entry(r).or_insert_with(Rational::zero) += c;
            }
            Ok(sums.values().all(Zero::is_zero))
        }
        Side::Chow => {
            let mut rest = QPoly::zero();
            for (k, &m) in mu.iter().enumerate() {
                if k != j && m != 0 {
                    rest = rest + QPoly::monomial(q(-m * mu[j]), &[(&small_t(k + 1), 1)]);
                }
            }
            Ok(g.substitute(&[(&small_t(j + 1), rest)])?.is_zero())
        }
    }
}

/// All n·|𝔖^B_n| adjacency congruences.
pub fn validate_class(f: &EqClass) -> bool {
    let Ok(g) = group(f.n) else { return false };
    if f.values.len() != g.len() {
        return false;
    }
    for (k, w) in g.elements().iter().enumerate() {
        for i in 1..=f.n {
            let wp = if i < f.n { w.times_tau_adjacent(i) } else { w.times_tau_last() };
            let kp = g.index_of(&wp);
            if kp < k {
                continue;
            }
            let diff = &f.values[k] - &f.values[kp];
            match divisible(&diff, &edge_vector(w, i), f.side, f.n) {
                Ok(true) => {}
                _ => return false,
            }
        }
    }
    true
}

/// The line bundle of a lattice polytope: f_w = T^{−v}, v the w-minimal vertex.
pub fn class_of_polytope(p: &BnPolytope) -> Result<EqClass> {
    let class = EqClass::from_fn(p.n(), Side::K, |w| {
        let v = p.min_vertex(w);
        let e: Vec<i64> = v
            .iter()
            .map(|x| as_integer(x).and_then(|z| i64::try_from(-z).ok()))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidArgument("polytope is not a lattice polytope".into()))?;
        Ok(k_monomial(&e))
    })?;
    if !validate_class(&class) {
        return Err(Error::Internal("line bundle class fails the edge congruences".into()));
    }
    Ok(class)
}

fn label_sum(labels: impl IntoIterator<Item = i32>) -> QPoly {
    labels.into_iter().fold(QPoly::zero(), |acc, l| acc + label_poly(l, Side::K))
}

/// [ℐ_D]_w = Σ_{i ∈ B_w} T_i.
pub fn iso_class(d: &DeltaMatroid) -> Result<EqClass> {
    EqClass::from_fn(d.n(), Side::K, |w| Ok(label_sum(d.w_min_feasible(w).to_signed())))
}

/// [ℳ]_w = n + Σ_{i ∈ w([n])} T_i.
pub fn box_class(n: usize) -> Result<EqClass> {
    EqClass::from_fn(n, Side::K, |w| Ok(QPoly::constant(q(n as i64)) + label_sum(w.images().iter().copied())))
}

/// (B^max_w ∩ w([n]), w([n]) ∖ B^max_w) as label lists.
fn max_split(d: &DeltaMatroid, w: &SignedPermutation) -> (Vec<i32>, Vec<i32>) {
    let bmax = d.w_max_feasible(w);
    w.images().iter().copied().partition(|&l| bmax.contains(l))
}

/// [𝒬^E_D]_w = n − |B^max_w ∩ w([n])| + Σ_{i ∈ B^max_w ∩ w([n])} T_i (rank n).
pub fn env_quot(d: &DeltaMatroid) -> Result<EqClass> {
    let n = d.n();
    EqClass::from_fn(n, Side::K, |w| {
        let (inside, _) = max_split(d, w);
        Ok(QPoly::constant(q((n - inside.len()) as i64)) + label_sum(inside))
    })
}

/// [𝒮^E_D]_w = |B^max_w ∩ w([n])| + Σ_{i ∈ w([n]) ∖ B^max_w} T_i.
pub fn env_sub(d: &DeltaMatroid) -> Result<EqClass> {
    EqClass::from_fn(d.n(), Side::K, |w| {
        let (inside, outside) = max_split(d, w);
        Ok(QPoly::constant(q(inside.len() as i64)) + label_sum(outside))
    })
}

/// ⊞𝒪(1) = ⊕_i 𝒪(Δ_{{i}}⁰).
pub fn box_one(n: usize) -> Result<EqClass> {
    let mut total = EqClass::constant(n, Side::K, QPoly::zero())?;
    for i in 1..=n {
        let s = AdmissibleSet::from_signed(n, &[i as i32])?;
        total = total.add(&class_of_polytope(&BnPolytope::simplex(&s)?)?)?;
    }
    Ok(total)
}

/// c^T(f, u) = Π (1 + ⟨m, t⟩u)^{a} over the terms a·T^m, truncated at degree n.
pub fn chern_at(f: &EqClass, u: &QPoly) -> Result<EqClass> {
    if f.side != Side::K {
        return invalid("chern classes are taken of K-classes");
    }
    let n = f.n;
    let t = Trunc::new(n);
    let values = f
        .values
        .iter()
        .map(|v| {
            let mut c = QPoly::one();
            for (m, a) in k_terms(v, n)? {
                let a = as_integer(&a)
                    .and_then(|z| i64::try_from(z).ok())
                    .ok_or_else(|| Error::InvalidArgument("chern class needs integer multiplicities".into()))?;
                if m.iter().all(|&x| x == 0) {
                    continue;
                }
                c = t.mul(&c, &t.binom(&(&linear_form(&m) * u), a));
            }
            Ok(c)
        })
        .collect::<Result<_>>()?;
    Ok(EqClass { n, side: Side::Chow, values })
}

pub fn chern(f: &EqClass, u: &str) -> Result<EqClass> {
    chern_at(f, &QPoly::var(u))
}

pub fn total_chern(f: &EqClass) -> Result<EqClass> {
    chern_at(f, &QPoly::one())
}

/// s^T(f, u) = c^T(f, u)^{-1}, truncated at degree n.
pub fn segre_at(f: &EqClass, u: &QPoly) -> Result<EqClass> {
    let neg = EqClass { n: f.n, side: f.side, values: f.values.iter().map(|v| -v.clone()).collect() };
    chern_at(&neg, u)
}

pub fn segre(f: &EqClass, u: &str) -> Result<EqClass> {
    segre_at(f, &QPoly::var(u))
}

/// c_1 of a line bundle class.
pub fn first_chern(f: &EqClass) -> Result<EqClass> {
    let values = f
        .values
        .iter()
        .map(|v| match k_terms(v, f.n)?.as_slice() {
            [(m, c)] if c.is_one() => Ok(linear_form(m)),
            _ => invalid("first_chern needs a line bundle class"),
        })
        .collect::<Result<_>>()?;
    Ok(EqClass { n: f.n, side: Side::Chow, values })
}

/// γ = c_1(𝒪(◇)).
pub fn gamma(n: usize) -> Result<EqClass> {
    first_chern(&class_of_polytope(&BnPolytope::cross_polytope(n)?)?)
}

/// h_S = c_1(𝒪(Δ_S⁰)).
pub fn h_class(s: &AdmissibleSet) -> Result<EqClass> {
    first_chern(&class_of_polytope(&BnPolytope::simplex(s)?)?)
}

/// 1 + yc + (yc)² + ⋯ up to degree n.
pub fn geometric(c: &EqClass, y: &QPoly) -> Result<EqClass> {
    let t = Trunc::new(c.n);
    let values = c
        .values
        .iter()
        .map(|v| {
            let x = v * y;
            let mut total = QPoly::one();
            let mut p = QPoly::one();
            for _ in 0..c.n {
                p = t.mul(&p, &x);
                total = total + p.clone();
            }
            total
        })
        .collect();
    Ok(EqClass { n: c.n, side: Side::Chow, values })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Exceptional {
    Phi,
    Zeta,
}

/// Apply φ^B or ζ^B at one fixed point to every T-monomial of f; other variables are kept.
fn exceptional_value(f: &QPoly, w: &SignedPermutation, which: Exceptional, t: &Trunc) -> Result<QPoly> {
    let n = w.n();
    let tnames: Vec<String> = names(n, Side::K);
    let mut cache: BTreeMap<(usize, i64), QPoly> = BTreeMap::new();
    let mut out = QPoly::zero();
    for (key, c) in f.canonical_terms() {
        let mut term = QPoly::constant(c);
        for (name, k) in key {
            match tnames.iter().position(|x| *x == name) {
                Some(i) => {
                    let k = k as i64;
                    let img = cache.entry((i, k)).or_insert_with(|| {
                        let eps = w.epsilon(i + 1) as i64;
                        let ti = QPoly::var(&small_t(i + 1));
                        // φ: T ↦ (1 + εt)^ε; ζ: T ↦ (1 − εt)^{−ε}.
                        match which {
                            Exceptional::Phi => t.binom(&ti.scale(&q(eps)), eps * k),
                            Exceptional::Zeta => t.binom(&ti.scale(&q(-eps)), -eps * k),
                        }
                    });
                    term = t.mul(&term, img);
                }
                None => term = &term * &QPoly::monomial(q(1), &[(&name, k)]),
            }
        }
        out = out + term;
    }
    Ok(out)
}

fn exceptional(f: &EqClass, which: Exceptional) -> Result<EqClass> {
    if f.side != Side::K {
        return invalid("the exceptional isomorphisms take K-classes");
    }
    let g = group(f.n)?;
    let t = Trunc::new(f.n);
    let values = g
        .elements()
        .iter()
        .zip(&f.values)
        .map(|(w, v)| exceptional_value(v, w, which, &t))
        .collect::<Result<_>>()?;
    Ok(EqClass { n: f.n, side: Side::Chow, values })
}

/// φ^B: T_i ↦ 1 + t_i where ε_i(w) = +1, T_i ↦ (1 − t_i)^{-1} where ε_i(w) = −1.
pub fn phi_b(f: &EqClass) -> Result<EqClass> {
    exceptional(f, Exceptional::Phi)
}

/// ζ^B = D_A ∘ φ^B ∘ D_K: T_i ↦ (1 − t_i)^{-1} where ε_i(w) = +1, T_i ↦ 1 + t_i otherwise.
pub fn zeta_b(f: &EqClass) -> Result<EqClass> {
    exceptional(f, Exceptional::Zeta)
}

const S: &str = "__s";

/// Three fixed generic points with distinct positive coordinates.
fn sample_points(n: usize) -> [Vec<Rational>; 3] {
    let a = (1..=n as i64).map(|i| q((1 << i) - 1)).collect();
    let b = (1..=n as i64).map(|i| q(i * i + 2 * i + 2)).collect();
    let c = (1..=n as i64).map(|i| Rational::new(BigInt::from(i * i * 3 + 1), BigInt::from(i + 1))).collect();
    [a, b, c]
}

fn euler_weight(w: &SignedPermutation, t0: &[Rational]) -> Result<Rational> {
    let mut e = q(1);
    for chi in tangent_weights(w) {
        let v: Rational = chi.iter().zip(t0).map(|(c, x)| x * q(*c)).sum();
        if v.is_zero() {
            return Err(Error::Internal("sample point hits a tangent weight".into()));
        }
        e *= v;
    }
    Ok(e)
}

/// ∫ Π factors via Σ_w f_w / Π_k ⟨χ_{w,k}, t⟩, evaluated along t = t₀·s at three
/// points. The coefficient of sⁿ is the non-equivariant integral; it is a
/// polynomial in any formal parameters and must not depend on t₀.
pub fn integrate_product(factors: &[&EqClass]) -> Result<QPoly> {
    let Some(first) = factors.first() else { return invalid("nothing to integrate") };
    let n = first.n;
    if factors.iter().any(|f| f.n != n || f.side != Side::Chow) {
        return invalid("integrate takes Chow classes on one space");
    }
    let g = group(n)?;
    let mut results = Vec::new();
    for t0 in sample_points(n) {
        let names = names(n, Side::Chow);
        let bind: Vec<(&str, QPoly)> =
            (0..n).map(|i| (names[i].as_str(), QPoly::monomial(t0[i].clone(), &[(S, 1)]))).collect();
        let mut total = QPoly::zero();
        for (k, w) in g.elements().iter().enumerate() {
            let mut prod = QPoly::one();
            for f in factors {
                let v = f.values[k].substitute(&bind)?.truncate_in(&[S], n as i32);
                prod = (&prod * &v).truncate_in(&[S], n as i32);
            }
            let top = prod.coeff_of(S, n as i32).compact();
            total = total + top.scale(&(q(1) / euler_weight(w, &t0)?));
        }
        results.push(total.compact());
    }
    if results.iter().any(|r| *r != results[0]) {
        return Err(Error::Internal("localization sum depends on the evaluation point".into()));
    }
    Ok(results.swap_remove(0))
}

pub fn integrate(f: &EqClass) -> Result<QPoly> {
    integrate_product(&[f])
}

fn gbinom(a: i64, k: usize) -> Rational {
    let mut c = q(1);
    for j in 0..k as i64 {
        c = c * q(a - j) / q(j + 1);
    }
    c
}

fn series_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let len = a.len();
    let mut out = vec![Rational::zero(); len];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    out
}

fn series_inv(a: &[Rational]) -> Vec<Rational> {
    let len = a.len();
    let mut out = vec![Rational::zero(); len];
    out[0] = q(1) / a[0].clone();
    for k in 1..len {
        let s: Rational = (1..=k).map(|j| &a[j] * &out[k - j]).sum();
        out[k] = -s * &out[0];
    }
    out
}

/// χ = Σ_w f_w / Π_k (1 − T^{−χ_{w,k}}), evaluated at T = 1 by restricting to
/// the curve T_i = (1+ε)^{a_i} and reading the constant Laurent coefficient in ε.
pub fn euler_char(f: &EqClass) -> Result<BigInt> {
    if f.side != Side::K {
        return invalid("euler_char takes a K-class");
    }
    let n = f.n;
    let g = group(n)?;
    let dirs: [Vec<i64>; 3] = [
        (1..=n as i64).collect(),
        (1..=n as i64).map(|i| 2 * i + 1).collect(),
        (1..=n as i64).map(|i| i * i + 3).collect(),
    ];
    let mut results = Vec::new();
    for a in dirs {
        let mut total = Rational::zero();
        for (w, v) in g.elements().iter().zip(&f.values) {
            let mut num = vec![Rational::zero(); n + 1];
            for (m, c) in k_terms(v, n)? {
                let p: i64 = m.iter().zip(&a).map(|(x, y)| x * y).sum();
                for (k, slot) in num.iter_mut().enumerate() {
                    *slot += &c * gbinom(p, k);
                }
            }
            let mut den = vec![Rational::zero(); n + 1];
            den[0] = q(1);
            for chi in tangent_weights(w) {
                let c: i64 = chi.iter().zip(&a).map(|(x, y)| x * y).sum();
                if c == 0 {
                    return Err(Error::Internal("direction hits a tangent weight".into()));
                }
                let qc: Vec<Rational> = (0..=n).map(|j| -gbinom(-c, j + 1)).collect();
                den = series_mul(&den, &qc);
            }
            total += &series_mul(&num, &series_inv(&den))[n];
        }
        results.push(total);
    }
    if results.iter().any(|r| *r != results[0]) {
        return Err(Error::Internal("Euler characteristic depends on the evaluation curve".into()));
    }
    as_integer(&results[0]).ok_or_else(|| Error::Internal(format!("non-integral Euler characteristic {}", results[0])))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl IdentityCheck {
    fn compare(name: &str, lhs: &QPoly, rhs: &QPoly) -> Self {
        let passed = lhs == rhs;
        let detail = (!passed).then(|| format!("lhs = {lhs}, rhs = {rhs}"));
        IdentityCheck { name: name.into(), passed, detail }
    }

    fn flag(name: &str, passed: bool, detail: impl FnOnce() -> String) -> Self {
        IdentityCheck { name: name.into(), passed, detail: (!passed).then(detail) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalizationReport {
    pub n: usize,
    pub checks: Vec<IdentityCheck>,
}

impl LocalizationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HrrCheck {
    pub lattice_points: u64,
    pub euler_char: String,
    pub phi_side: String,
    pub zeta_side: String,
}

impl HrrCheck {
    pub fn passed(&self) -> bool {
        let l = self.lattice_points.to_string();
        self.euler_char == l && self.phi_side == l && self.zeta_side == l
    }
}

fn constant_of(p: &QPoly) -> Result<Rational> {
    if !p.used_vars().is_empty() {
        return Err(Error::Internal(format!("expected a number, got {p}")));
    }
    Ok(p.constant_term())
}

/// χ of the line bundle of P three ways: lattice count, K-localization, and both
/// exceptional Hirzebruch–Riemann–Roch formulas.
pub fn hrr_check(p: &BnPolytope) -> Result<HrrCheck> {
    let n = p.n();
    let l = class_of_polytope(p)?;
    let b = box_one(n)?;
    let phi = integrate_product(&[&phi_b(&l)?, &total_chern(&b)?])?;
    let td = geometric(&gamma(n)?, &QPoly::one())?;
    let zeta = integrate_product(&[&zeta_b(&l)?, &total_chern(&b.dual()?)?, &td])?;
    Ok(HrrCheck {
        lattice_points: lattice_count(p)?,
        euler_char: euler_char(&l)?.to_string(),
        phi_side: constant_of(&phi)?.to_string(),
        zeta_side: constant_of(&zeta)?.to_string(),
    })
}

fn var(s: &str) -> QPoly {
    QPoly::var(s)
}

/// ∫ c(𝒮^E, u)·c(𝒬^E, v) = vⁿ Int_D(u/v).
pub fn check_interlace(d: &DeltaMatroid) -> Result<IdentityCheck> {
    let n = d.n() as i32;
    let lhs = integrate_product(&[&chern(&env_sub(d)?, "u")?, &chern(&env_quot(d)?, "v")?])?;
    let rhs = interlace(d).substitute_fraction(&[("v", var("u"))], &var("v"), n)?;
    Ok(IdentityCheck::compare("interlace", &lhs, &rhs))
}

/// ∫ s(𝒬^∨, z)·c(𝒬, w)·(1 − yγ)^{-1}·c(⊞𝒪(1), x) = (y+w)ⁿ U_D((2z+x)/(y+w), (y−z)/(y+w)).
pub fn check_enveloping(d: &DeltaMatroid) -> Result<IdentityCheck> {
    let n = d.n();
    let qe = env_quot(d)?;
    let lhs = integrate_product(&[
        &segre_at(&qe.dual()?, &var("z"))?,
        &chern_at(&qe, &var("w"))?,
        &geometric(&gamma(n)?, &var("y"))?,
        &chern_at(&box_one(n)?, &var("x"))?,
    ])?;
    let u = var("z").scale(&q(2)) + var("x");
    let v = var("y") - var("z");
    let rhs = u_poly_explicit(d).substitute_fraction(&[("u", u), ("v", v)], &(var("y") + var("w")), n as i32)?;
    Ok(IdentityCheck::compare("intersect-enveloping", &lhs, &rhs))
}

pub fn x_var(i: usize) -> String {
    format!("x{i}")
}

/// ∫ c(ℐ^∨, q)·(1 − yγ)^{-1}·Π(1 + x_i h_i) = (y+q)ⁿ U_D(x₁/(y+q), …, (y−q)/(y+q)).
pub fn check_isotropic(d: &DeltaMatroid) -> Result<IdentityCheck> {
    let n = d.n();
    let mut factors = vec![chern_at(&iso_class(d)?.dual()?, &var("q"))?, geometric(&gamma(n)?, &var("y"))?];
    for i in 1..=n {
        let h = h_class(&AdmissibleSet::from_signed(n, &[i as i32])?)?;
        let one = EqClass::constant(n, Side::Chow, QPoly::one())?;
        let xh = EqClass { n, side: Side::Chow, values: h.values.iter().map(|v| v * &var(&x_var(i))).collect() };
        factors.push(one.add(&xh)?);
    }
    let refs: Vec<&EqClass> = factors.iter().collect();
    let lhs = integrate_product(&refs)?;
    let uv: Vec<String> = (1..=n).map(u_var).collect();
    let mut nums: Vec<(&str, QPoly)> = (1..=n).map(|i| (uv[i - 1].as_str(), var(&x_var(i)))).collect();
    nums.push(("v", var("y") - var("q")));
    let rhs = u_poly_multi(d).substitute_fraction(&nums, &(var("y") + var("q")), n as i32)?;
    Ok(IdentityCheck::compare("intersect-isotropic", &lhs, &rhs))
}

/// Restrict a K-class to the coordinate X_{B_{n−1}} at i: evaluate at w = (w′, i)
/// with T_i = 1 and shift the labels above i down.
fn restrict(f: &EqClass, i: usize, last: i32) -> Result<EqClass> {
    let n = f.n;
    let mut bind: Vec<(String, QPoly)> = vec![(big_t(i), QPoly::one())];
    for j in i + 1..=n {
        bind.push((big_t(j), label_poly(j as i32 - 1, Side::K)));
    }
    let bind: Vec<(&str, QPoly)> = bind.iter().map(|(a, b)| (a.as_str(), b.clone())).collect();
    let lift = |l: i32| {
        let a = l.unsigned_abs() as usize;
        let a = if a >= i { a + 1 } else { a } as i32;
        a * l.signum()
    };
    EqClass::from_fn(n - 1, Side::K, |wp| {
        let mut images: Vec<i32> = wp.images().iter().map(|&l| lift(l)).collect();
        images.push(last * i as i32);
        let w = SignedPermutation::from_images(images)?;
        f.value(&w)?.substitute(&bind)
    })
}

/// Restriction to a coordinate X_{B_{n−1}} sends [𝒮^E_D], [𝒬^E_D], [ℐ_D] to 1 + the class of D(i).
pub fn check_restriction(d: &DeltaMatroid) -> Result<IdentityCheck> {
    let n = d.n();
    let kinds: [(&str, fn(&DeltaMatroid) -> Result<EqClass>); 3] =
        [("sub", env_sub), ("quot", env_quot), ("iso", iso_class)];
    for i in 1..=n {
        let di = d.project(i)?;
        for (name, make) in kinds {
            let want = make(&di)?;
            let want = EqClass { n: n - 1, side: Side::K, values: want.values.iter().map(|v| v + &QPoly::one()).collect() };
            let f = make(d)?;
            for last in [1, -1] {
                let got = restrict(&f, i, last)?;
                if got != want {
                    return Ok(IdentityCheck::flag("restriction-projection", false, || {
                        format!("{name} class at i = {i} (last label {})", last * i as i32)
                    }));
                }
            }
        }
    }
    Ok(IdentityCheck::flag("restriction-projection", true, String::new))
}

const U: &str = "u";

/// Σ_k p_k · num^k · den^{e−k} for p = Σ p_k s^k, with den^{<0} expanded in u to degree `ku`.
fn clear_fraction(p: &QPoly, s: &str, num: &QPoly, den: &QPoly, e: i64, ku: i32, t: &Trunc) -> Result<QPoly> {
    let den_inv = {
        let c = den.univariate_coeffs(U)?;
        let inv = series_inv(&(0..=ku as usize).map(|k| c.get(k).cloned().unwrap_or_else(Rational::zero)).collect::<Vec<_>>());
        QPoly::from_univariate(U, &inv)
    };
    let cut = |x: &QPoly| t.cut(&x.truncate_in(&[U], ku));
    let power = |k: i64| -> QPoly {
        let (b, k) = if k >= 0 { (den.clone(), k) } else { (den_inv.clone(), -k) };
        let mut r = QPoly::one();
        for _ in 0..k {
            r = cut(&(&r * &b));
        }
        r
    };
    let mut out = QPoly::zero();
    for k in 0..=p.degree_in(s) {
        let pk = p.coeff_of(s, k);
        let mut nk = QPoly::one();
        for _ in 0..k {
            nk = cut(&(&nk * num));
        }
        out = out + cut(&(&cut(&(&pk * &nk)) * &power(e - k as i64)));
    }
    Ok(out)
}

/// Π (1 + σ T^m u)^{σ a} over the terms a·T^m: λ_u for σ = 1, the symmetric series for σ = −1.
fn lambda_series(f: &QPoly, n: usize, sigma: i64, ku: i32) -> Result<QPoly> {
    let mut out = QPoly::one();
    for (m, a) in k_terms(f, n)? {
        let a = as_integer(&a).and_then(|z| i64::try_from(z).ok()).ok_or_else(|| Error::Internal("non-integral class".into()))?;
        let x = &k_monomial(&m) * &QPoly::monomial(q(sigma), &[(U, 1)]);
        let mut fac = QPoly::one();
        let mut xp = QPoly::one();
        let mut c = q(1);
        for j in 1..=ku as i64 {
            xp = (&xp * &x).truncate_in(&[U], ku);
            c = c * q(sigma * a - j + 1) / q(j);
            fac = fac + xp.scale(&c);
        }
        out = (&out * &fac).truncate_in(&[U], ku);
    }
    Ok(out)
}

/// The four generating-function identities for a class with nice Chern roots,
/// checked per fixed point up to u-degree n + 2.
pub fn check_nice_chern(e: &EqClass) -> Result<IdentityCheck> {
    let n = e.n;
    let ku = n as i32 + 2;
    let t = Trunc::new(n);
    let g = group(n)?;
    let ed = e.dual()?;
    let sv = "__c";
    let c_e = chern(e, sv)?;
    let s_e = segre(e, sv)?;
    let c_ed = chern(&ed, sv)?;
    let s_ed = segre(&ed, sv)?;
    let c_ed1 = total_chern(&ed)?;
    let s_ed1 = segre_at(&ed, &QPoly::one())?;
    let one_plus = QPoly::one() + var(U);
    let one_minus = QPoly::one() - var(U);
    let cut = |x: &QPoly| t.cut(&x.truncate_in(&[U], ku));
    for (k, w) in g.elements().iter().enumerate() {
        let rk = as_integer(&e.values[k].eval(&names(n, Side::K).iter().map(|s| (s.as_str(), q(1))).collect::<Vec<_>>())?)
            .and_then(|z| i64::try_from(z).ok())
            .ok_or_else(|| Error::Internal("non-integral rank".into()))?;
        let lam = lambda_series(&e.values[k], n, 1, ku)?;
        let sym = lambda_series(&e.values[k], n, -1, ku)?;
        let sides = [
            (
                "zeta-lambda",
                cut(&exceptional_value(&lam, w, Exceptional::Zeta, &t)?),
                clear_fraction(&c_e.values[k], sv, &var(U), &one_plus, rk, ku, &t)?,
            ),
            (
                "phi-lambda",
                cut(&exceptional_value(&lam, w, Exceptional::Phi, &t)?),
                cut(&(&s_ed1.values[k] * &clear_fraction(&c_ed.values[k], sv, &QPoly::one(), &one_plus, rk, ku, &t)?)),
            ),
            (
                "zeta-sym",
                cut(&exceptional_value(&sym, w, Exceptional::Zeta, &t)?),
                clear_fraction(&s_e.values[k], sv, &(-var(U)), &one_minus, -rk, ku, &t)?,
            ),
            (
                "phi-sym",
                cut(&exceptional_value(&sym, w, Exceptional::Phi, &t)?),
                cut(&(&c_ed1.values[k] * &clear_fraction(&s_ed.values[k], sv, &QPoly::one(), &one_minus, -rk, ku, &t)?)),
            ),
        ];
        for (name, lhs, rhs) in sides {
            if lhs != rhs {
                return Ok(IdentityCheck::flag("nice-chern", false, || format!("{name} at w = {w}: {lhs} vs {rhs}")));
            }
        }
    }
    Ok(IdentityCheck::flag("nice-chern", true, String::new))
}

/// Every localization identity for one delta-matroid.
pub fn verify_identities(d: &DeltaMatroid) -> Result<LocalizationReport> {
    let n = d.n();
    limits::check("identity verification", n, 4)?;
    let mut checks = Vec::new();
    let classes = [
        ("iso", iso_class(d)?),
        ("quot", env_quot(d)?),
        ("sub", env_sub(d)?),
        ("box", box_class(n)?),
    ];
    let bad: Vec<&str> = classes.iter().filter(|(_, c)| !validate_class(c)).map(|(s, _)| *s).collect();
    checks.push(IdentityCheck::flag("classes-valid", bad.is_empty(), || format!("invalid: {bad:?}")));
    let sum = classes[1].1.add(&classes[2].1)?;
    checks.push(IdentityCheck::flag("sub-plus-quot", sum == classes[3].1, || "[S] + [Q] differs from [M]".into()));
    checks.push(check_interlace(d)?);
    checks.push(check_enveloping(d)?);
    checks.push(check_isotropic(d)?);
    if n >= 1 {
        checks.push(check_restriction(d)?);
    }
    if n <= 2 {
        checks.push(check_nice_chern(&classes[1].1.dual()?)?);
    }
    let h = hrr_check(&BnPolytope::from_deltamatroid(d)?)?;
    checks.push(IdentityCheck::flag("hrr", h.passed(), || format!("{h:?}")));
    Ok(LocalizationReport { n, checks })
}
