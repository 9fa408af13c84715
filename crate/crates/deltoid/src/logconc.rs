//! Log-concavity and Lorentzian checks for homogenized U-polynomials.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::deltamatroid::DeltaMatroid;
use crate::envelope::EnvelopeWitness;
use crate::error::{invalid, Result};
use crate::invariants::{u_poly_explicit, u_poly_multi, u_var};
use crate::limits;
use crate::linalg::positive_eigenvalue_count;
use crate::matroid::Matroid;
use crate::poly::{factorial, q};
use crate::{QPoly, Rational};

pub const HESSIAN_MAX_VARS: usize = 8;
pub const HESSIAN_MAX_DEGREE: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// (y+q)ⁿ U(x/(y+q), (y−q)/(y+q))
    Isotropic,
    /// (y+w)ⁿ U((2z+x)/(y+w), (y−z)/(y+w))
    Enveloping,
    /// (y+q)ⁿ U(x₁/(y+q), …, xₙ/(y+q), (y−q)/(y+q))
    Multivariable,
}

pub fn x_name(i: usize) -> String {
    format!("x{i}")
}

fn v(name: &str) -> QPoly {
    QPoly::var(name)
}

/// Homogenize an already computed U-polynomial in u, v (or u1..un, v).
pub fn homogenize_poly(u: &QPoly, n: usize, target: Target) -> Result<QPoly> {
    let deg = n as i32;
    match target {
        Target::Isotropic => {
            u.substitute_fraction(&[("u", v("x")), ("v", v("y") - v("q"))], &(v("y") + v("q")), deg)
        }
        Target::Enveloping => u.substitute_fraction(
            &[("u", v("z").scale(&q(2)) + v("x")), ("v", v("y") - v("z"))],
            &(v("y") + v("w")),
            deg,
        ),
        Target::Multivariable => {
            let names: Vec<(String, String)> = (1..=n).map(|i| (u_var(i), x_name(i))).collect();
            let mut nums: Vec<(&str, QPoly)> = names.iter().map(|(a, b)| (a.as_str(), v(b))).collect();
            nums.push(("v", v("y") - v("q")));
            u.substitute_fraction(&nums, &(v("y") + v("q")), deg)
        }
    }
}

pub fn homogenize_u(d: &DeltaMatroid, target: Target) -> Result<QPoly> {
    let u = match target {
        Target::Multivariable => u_poly_multi(d),
        _ => u_poly_explicit(d),
    };
    homogenize_poly(&u, d.n(), target)
}

/// Why a finite sequence fails to be nonnegative, log-concave and unbroken.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SequenceFailure {
    Negative(usize),
    NotLogConcave(usize),
    InternalZero(usize),
    /// a_k² < (k+1)/k · a_{k−1}a_{k+1}
    NotUltraLogConcave(usize),
}

/// First failure of nonnegativity, log-concavity or contiguity. All-zero passes.
pub fn sequence_failure(a: &[Rational]) -> Option<SequenceFailure> {
    if let Some(k) = a.iter().position(|c| c.is_negative()) {
        return Some(SequenceFailure::Negative(k));
    }
    for k in 1..a.len().saturating_sub(1) {
        if &a[k] * &a[k] < &a[k - 1] * &a[k + 1] {
            return Some(SequenceFailure::NotLogConcave(k));
        }
    }
    let nz: Vec<usize> = (0..a.len()).filter(|&k| !a[k].is_zero()).collect();
    if let (Some(&lo), Some(&hi)) = (nz.first(), nz.last()) {
        if let Some(k) = (lo..=hi).find(|&k| a[k].is_zero()) {
            return Some(SequenceFailure::InternalZero(k));
        }
    }
    None
}

/// The stronger inequality a_k² ≥ (k+1)/k · a_{k−1}a_{k+1}, k ≥ 1.
pub fn ultra_failure(a: &[Rational]) -> Option<SequenceFailure> {
    for k in 1..a.len().saturating_sub(1) {
        let kk = q(k as i64);
        if &a[k] * &a[k] * &kk < &a[k - 1] * &a[k + 1] * (kk + Rational::one()) {
            return Some(SequenceFailure::NotUltraLogConcave(k));
        }
    }
    None
}

pub fn is_unimodal(a: &[Rational]) -> bool {
    let mut falling = false;
    for w in a.windows(2) {
        if w[1] > w[0] && falling {
            return false;
        }
        if w[1] < w[0] {
            falling = true;
        }
    }
    true
}

/// A coefficient slice x_i^k x_j^{L−k} x^m, k = 0..L.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffArray {
    pub source: String,
    pub pair: (String, String),
    pub rest: Vec<(String, i32)>,
    pub coeffs: Vec<Rational>,
}

#[derive(Clone, Debug)]
pub struct UnbrokenReport {
    pub slices_checked: usize,
    pub witness: Option<(CoeffArray, SequenceFailure)>,
}

impl UnbrokenReport {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

fn require_homogeneous(f: &QPoly) -> Result<i32> {
    if !f.is_homogeneous() {
        return invalid(format!("polynomial is not homogeneous: {f}"));
    }
    Ok(f.total_degree().unwrap_or(0))
}

/// Every slice along every variable pair is nonnegative, log-concave and unbroken.
pub fn is_log_concave_unbroken(f: &QPoly) -> Result<UnbrokenReport> {
    let f = f.compact();
    let d = require_homogeneous(&f)?;
    let vars = f.vars().to_vec();
    let terms: Vec<(&Vec<i32>, &Rational)> = f.terms().collect();
    if vars.len() < 2 {
        let witness = terms.iter().find(|(_, c)| c.is_negative()).map(|(e, c)| {
            let rest = e.iter().zip(&vars).map(|(&k, n)| (n.clone(), k)).collect();
            let arr = CoeffArray { source: f.to_string(), pair: (String::new(), String::new()), rest, coeffs: vec![(*c).clone()] };
            (arr, SequenceFailure::Negative(0))
        });
        return Ok(UnbrokenReport { slices_checked: terms.len(), witness });
    }
    let mut checked = 0;
    for i in 0..vars.len() {
        for j in (i + 1)..vars.len() {
            let mut slices: BTreeMap<Vec<i32>, Vec<Rational>> = BTreeMap::new();
            for (e, c) in &terms {
                let mut m = (*e).clone();
                m[i] = 0;
                m[j] = 0;
                let len = (d - m.iter().sum::<i32>()) as usize + 1;
                let s = slices.entry(m).or_insert_with(|| vec![Rational::zero(); len]);
                s[e[i] as usize] = (*c).clone();
            }
            for (m, coeffs) in slices {
                checked += 1;
                if let Some(fail) = sequence_failure(&coeffs) {
                    let rest = m
                        .iter()
                        .zip(&vars)
                        .filter(|(&k, _)| k != 0)
                        .map(|(&k, n)| (n.clone(), k))
                        .collect();
                    let arr = CoeffArray { source: f.to_string(), pair: (vars[i].clone(), vars[j].clone()), rest, coeffs };
                    return Ok(UnbrokenReport { slices_checked: checked, witness: Some((arr, fail)) });
                }
            }
        }
    }
    Ok(UnbrokenReport { slices_checked: checked, witness: None })
}

/// N(f) = Σ a_m x^m / m!.
pub fn normalize(f: &QPoly) -> QPoly {
    let terms = f.terms().map(|(e, c)| {
        let den: BigInt = e.iter().map(|&k| factorial(k.max(0) as u32)).product();
        (e.clone(), c / Rational::from_integer(den))
    });
    QPoly::from_terms(f.vars().to_vec(), terms, f.is_laurent()).expect("same shape")
}

#[derive(Clone, Debug, PartialEq)]
pub enum LorentzianFailure {
    NegativeCoefficient(Vec<(String, i32)>),
    /// α, β in the support, i with α_i > β_i, and no valid exchange j.
    NotMConvex { alpha: Vec<i32>, beta: Vec<i32>, i: usize },
    /// ∂^α N(f) has a Hessian with more than one positive eigenvalue.
    Hessian { alpha: Vec<i32>, positive: usize },
}

#[derive(Clone, Debug)]
pub struct LorentzianReport {
    pub vars: Vec<String>,
    pub degree: i32,
    pub hessians_checked: usize,
    pub failure: Option<LorentzianFailure>,
}

impl LorentzianReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn m_convex_failure(support: &BTreeSet<Vec<i32>>) -> Option<LorentzianFailure> {
    for a in support {
        for b in support {
            for i in 0..a.len() {
                if a[i] <= b[i] {
                    continue;
                }
                let ok = (0..a.len()).any(|j| {
                    if a[j] >= b[j] {
                        return false;
                    }
                    let mut c = a.clone();
                    c[i] -= 1;
                    c[j] += 1;
                    support.contains(&c)
                });
                if !ok {
                    return Some(LorentzianFailure::NotMConvex { alpha: a.clone(), beta: b.clone(), i });
                }
            }
        }
    }
    None
}

/// Exponent vectors of total degree k in m variables.
fn compositions(m: usize, k: i32) -> Vec<Vec<i32>> {
    if m == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(m - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Whether f is the denormalization of a Lorentzian polynomial.
pub fn is_denormalized_lorentzian(f: &QPoly) -> Result<LorentzianReport> {
    let f = f.compact();
    let d = require_homogeneous(&f)?;
    let vars = f.vars().to_vec();
    let m = vars.len();
    let report = |checked, failure| LorentzianReport { vars: vars.clone(), degree: d, hessians_checked: checked, failure };
    let coeffs: BTreeMap<Vec<i32>, Rational> = f.terms().map(|(e, c)| (e.clone(), c.clone())).collect();
    if let Some((e, _)) = coeffs.iter().find(|(_, c)| c.is_negative()) {
        let mono = e.iter().zip(&vars).filter(|(&k, _)| k != 0).map(|(&k, n)| (n.clone(), k)).collect();
        return Ok(report(0, Some(LorentzianFailure::NegativeCoefficient(mono))));
    }
    let support: BTreeSet<Vec<i32>> = coeffs.keys().cloned().collect();
    if let Some(fail) = m_convex_failure(&support) {
        return Ok(report(0, Some(fail)));
    }
    if d < 2 {
        return Ok(report(0, None));
    }
    limits::check("Lorentzian Hessian variables", m, HESSIAN_MAX_VARS)?;
    limits::check("Lorentzian Hessian degree", d as usize, HESSIAN_MAX_DEGREE)?;
    // ∂_i∂_j∂^α N(f) is the coefficient of x^{α+e_i+e_j} in f itself.
    let mut checked = 0;
    for alpha in compositions(m, d - 2) {
        let entry = |i: usize, j: usize| {
            let mut e = alpha.clone();
            e[i] += 1;
            e[j] += 1;
            coeffs.get(&e).cloned().unwrap_or_else(Rational::zero)
        };
        let live: Vec<usize> = (0..m).filter(|&i| (0..m).any(|j| !entry(i, j).is_zero())).collect();
        if live.is_empty() {
            continue;
        }
        checked += 1;
        let h: Vec<Vec<Rational>> = live.iter().map(|&i| live.iter().map(|&j| entry(i, j)).collect()).collect();
        let positive = positive_eigenvalue_count(&h);
        if positive > 1 {
            return Ok(report(checked, Some(LorentzianFailure::Hessian { alpha, positive })));
        }
    }
    Ok(report(checked, None))
}

#[derive(Clone, Debug)]
pub struct SequenceCheck {
    pub name: &'static str,
    pub values: Vec<Rational>,
    pub failure: Option<SequenceFailure>,
}

impl SequenceCheck {
    fn new(name: &'static str, values: Vec<Rational>) -> Self {
        let failure = sequence_failure(&values);
        SequenceCheck { name, values, failure }
    }
}

#[derive(Clone, Debug)]
pub struct BaseCheck {
    /// a_k counted from independent/spanning pairs.
    pub direct: Vec<Rational>,
    /// Coefficients of U_{P(M)}(u, 0).
    pub from_u: Vec<Rational>,
    pub ultra: Option<SequenceFailure>,
}

impl BaseCheck {
    pub fn passed(&self) -> bool {
        self.direct == self.from_u && self.ultra.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct CorollaryReport {
    pub n: usize,
    /// Raw interlace coefficients; informational, not required to be unimodal.
    pub interlace: Vec<Rational>,
    pub interlace_unimodal: bool,
    pub sequences: Vec<SequenceCheck>,
    pub base: Option<BaseCheck>,
    pub has_envelope: Option<bool>,
}

impl CorollaryReport {
    pub fn passed(&self) -> bool {
        self.sequences.iter().all(|s| s.failure.is_none()) && self.base.as_ref().is_none_or(|b| b.passed())
    }
}

fn padded(p: &QPoly, var: &str, len: usize) -> Result<Vec<Rational>> {
    let mut c = p.univariate_coeffs(var)?;
    if c.len() < len {
        c.resize(len, Rational::zero());
    }
    Ok(c)
}

fn times_factorial(mut c: Vec<Rational>) -> Vec<Rational> {
    for (k, x) in c.iter_mut().enumerate() {
        *x = &*x * Rational::from_integer(factorial(k as u32));
    }
    c
}

/// a_k = #{T ⊆ S : T independent, S spanning, |S| − |T| = k}.
pub fn independent_spanning_counts(m: &Matroid) -> Vec<Rational> {
    let k = m.len();
    let indep: BTreeSet<u64> = m.independent_sets().into_iter().collect();
    let mut a = vec![0i64; k + 1];
    for s in 0..(1u64 << k) {
        if !m.is_spanning(s) {
            continue;
        }
        let mut t = s;
        loop {
            if indep.contains(&t) {
                a[(s.count_ones() - t.count_ones()) as usize] += 1;
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
    }
    a.into_iter().map(q).collect()
}

/// The sequence checks on a U-polynomial in u, v of a delta-matroid on [n].
pub fn corollary_checks_from_u(u: &QPoly, n: usize, base: Option<&Matroid>) -> Result<CorollaryReport> {
    let len = n + 1;
    let int = u.substitute_values(&[("u", Rational::zero())])?;
    let interlace = padded(&int, "v", len)?;
    let transform = int.substitute_fraction(&[("v", v("y") - QPoly::one())], &(v("y") + QPoly::one()), n as i32)?;
    let shifted = u.substitute(&[("u", v("u").scale(&q(2))), ("v", v("u").scale(&q(-1)))])?;
    let at0 = u.substitute_values(&[("v", Rational::zero())])?;
    let at_m1 = u.substitute_values(&[("v", q(-1))])?;
    let sequences = vec![
        SequenceCheck::new("interlace-transform", padded(&transform, "y", len)?),
        SequenceCheck::new("u-2u-minus-u", padded(&shifted, "u", len)?),
        SequenceCheck::new("u-at-0-factorial", times_factorial(padded(&at0, "u", len)?)),
        SequenceCheck::new("u-at-minus-1-factorial", times_factorial(padded(&at_m1, "u", len)?)),
    ];
    let base = match base {
        Some(m) => {
            let direct = independent_spanning_counts(m);
            let from_u = padded(&at0, "u", direct.len())?;
            let ultra = ultra_failure(&direct);
            Some(BaseCheck { direct, from_u, ultra })
        }
        None => None,
    };
    Ok(CorollaryReport { n, interlace_unimodal: is_unimodal(&interlace), interlace, sequences, base, has_envelope: None })
}

pub fn corollary_checks(d: &DeltaMatroid, witness: Option<&EnvelopeWitness>) -> Result<CorollaryReport> {
    if let Some(w) = witness {
        if w.dm != *d {
            return invalid("envelope witness belongs to a different delta-matroid");
        }
    }
    let base = d.as_base_polytope();
    let mut r = corollary_checks_from_u(&u_poly_explicit(d), d.n(), base.as_ref())?;
    r.has_envelope = witness.map(|_| true);
    Ok(r)
}

#[derive(Clone, Debug)]
pub struct FlawlessReport {
    pub checked: usize,
    pub counterexamples: Vec<(DeltaMatroid, Vec<Rational>)>,
}

/// a_i ≤ a_{n−i} for i ≤ ⌊n/2⌋.
pub fn is_flawless(a: &[Rational], n: usize) -> bool {
    let at = |i: usize| a.get(i).cloned().unwrap_or_else(Rational::zero);
    (0..=n / 2).all(|i| at(i) <= at(n - i))
}

pub fn u_2u_minus_u(d: &DeltaMatroid) -> Result<Vec<Rational>> {
    let u = u_poly_explicit(d);
    let s = u.substitute(&[("u", v("u").scale(&q(2))), ("v", v("u").scale(&q(-1)))])?;
    padded(&s, "u", d.n() + 1)
}

/// Test the flawless conjecture for U_D(2u, −u) across a family.
pub fn flawless_scan<'a>(family: impl IntoIterator<Item = &'a DeltaMatroid>) -> Result<FlawlessReport> {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    for d in family {
        checked += 1;
        let a = u_2u_minus_u(d)?;
        if !is_flawless(&a, d.n()) {
            counterexamples.push((d.clone(), a));
        }
    }
    Ok(FlawlessReport { checked, counterexamples })
}

/// All three homogenizations of D, each checked for the Lorentzian property
/// and for an unbroken log-concave array.
#[derive(Clone, Debug)]
pub struct LorentzianSuite {
    pub results: Vec<(Target, QPoly, LorentzianReport, UnbrokenReport)>,
}

impl LorentzianSuite {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|(_, _, l, u)| l.passed() && u.passed())
    }
}

pub fn lorentzian_suite(d: &DeltaMatroid) -> Result<LorentzianSuite> {
    let mut results = Vec::new();
    for t in [Target::Isotropic, Target::Enveloping, Target::Multivariable] {
        let f = homogenize_u(d, t)?;
        let l = is_denormalized_lorentzian(&f)?;
        let u = is_log_concave_unbroken(&f)?;
        results.push((t, f, l, u));
    }
    Ok(LorentzianSuite { results })
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::Isotropic => "isotropic",
            Target::Enveloping => "enveloping",
            Target::Multivariable => "multivariable",
        }
    }
}
