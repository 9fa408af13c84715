//! Sparse multivariate (Laurent) polynomials with exact coefficients.
//!
//! Variables are named; binary operations merge variable lists by name.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{invalid, Error, Result};
use crate::Coeff;

#[derive(Clone, Debug)]
pub struct MPoly<C> {
    vars: Vec<String>,
    terms: BTreeMap<Vec<i32>, C>,
    laurent: bool,
}

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qf(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

impl<C: Coeff> MPoly<C> {
    pub fn zero() -> Self {
        MPoly { vars: Vec::new(), terms: BTreeMap::new(), laurent: false }
    }

    pub fn one() -> Self {
        MPoly::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MPoly { vars: Vec::new(), terms, laurent: false }
    }

    pub fn var(name: &str) -> Self {
        MPoly::monomial(C::one(), &[(name, 1)])
    }

    /// c · Π name^exp. Negative exponents switch Laurent mode on.
    pub fn monomial(c: C, powers: &[(&str, i32)]) -> Self {
        let mut p = MPoly::zero();
        for (name, _) in powers {
            p.ensure_var(name);
        }
        let mut e = vec![0; p.vars.len()];
        for (name, k) in powers {
            let i = p.var_index(name).unwrap();
            e[i] += k;
        }
        p.laurent = e.iter().any(|&k| k < 0);
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Build from raw parts; zero coefficients are dropped.
    pub fn from_terms(vars: Vec<String>, terms: impl IntoIterator<Item = (Vec<i32>, C)>, laurent: bool) -> Result<Self> {
        let mut p = MPoly { vars, terms: BTreeMap::new(), laurent };
        let arity = p.vars.len();
        for (e, c) in terms {
            if e.len() != arity {
                return invalid("exponent vector arity does not match variable list");
            }
            if !laurent && e.iter().any(|&k| k < 0) {
                return Err(Error::InvalidState("negative exponent in non-Laurent polynomial".into()));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn with_laurent(mut self, on: bool) -> Result<Self> {
        if !on && self.terms.keys().any(|e| e.iter().any(|&k| k < 0)) {
            return Err(Error::InvalidState("polynomial has negative exponents".into()));
        }
        self.laurent = on;
        Ok(self)
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }
    pub fn vars(&self) -> &[String] {
        &self.vars
    }
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &C)> {
        self.terms.iter()
    }
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    fn ensure_var(&mut self, name: &str) -> usize {
        if let Some(i) = self.var_index(name) {
            return i;
        }
        self.vars.push(name.to_string());
        let old = std::mem::take(&mut self.terms);
        self.terms = old
            .into_iter()
            .map(|(mut e, c)| {
                e.push(0);
                (e, c)
            })
            .collect();
        self.vars.len() - 1
    }

    fn add_term(&mut self, e: Vec<i32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&e);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Re-express over `vars` (which must contain every variable actually used).
    fn aligned_to(&self, vars: &[String]) -> Self {
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("variable list must cover"))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; vars.len()];
            for (k, &x) in e.iter().enumerate() {
                ne[map[k]] += x;
            }
            terms.insert(ne, c.clone());
        }
        MPoly { vars: vars.to_vec(), terms, laurent: self.laurent }
    }

    fn merged_vars(&self, other: &Self) -> Vec<String> {
        let mut vars = self.vars.clone();
        for v in &other.vars {
            if !vars.contains(v) {
                vars.push(v.clone());
            }
        }
        vars
    }

    fn aligned_pair(&self, other: &Self) -> (Self, Self) {
        if self.vars == other.vars {
            return (self.clone(), other.clone());
        }
        let vars = self.merged_vars(other);
        (self.aligned_to(&vars), other.aligned_to(&vars))
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        let (mut a, b) = self.aligned_pair(other);
        a.laurent |= b.laurent;
        for (e, c) in b.terms {
            a.add_term(e, c);
        }
        a
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect(),
            laurent: self.laurent,
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        let (a, b) = self.aligned_pair(other);
        let mut out = MPoly { vars: a.vars.clone(), terms: BTreeMap::new(), laurent: a.laurent || b.laurent };
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, x)| (e.clone(), x.clone() * c.clone())).collect(),
            laurent: self.laurent,
        }
    }

    /// Nonnegative powers for any polynomial; negative powers only for Laurent monomials.
    pub fn pow(&self, k: i32) -> Result<Self> {
        if k < 0 {
            return self.inverse_monomial()?.pow(-k);
        }
        let mut result = MPoly::one();
        let mut base = self.clone();
        let mut k = k as u32;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_ref(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_ref(&base);
            }
        }
        Ok(result)
    }

    /// Inverse of a monomial with unit (±1) coefficient.
    pub fn inverse_monomial(&self) -> Result<Self> {
        if self.terms.len() != 1 {
            return invalid("only monomials can be inverted");
        }
        let (e, c) = self.terms.iter().next().unwrap();
        if !(c.is_one() || (-c.clone()).is_one()) {
            return invalid("only monomials with coefficient ±1 can be inverted");
        }
        if !self.laurent && e.iter().any(|&k| k != 0) {
            return Err(Error::InvalidState("inverting a monomial needs Laurent mode".into()));
        }
        let mut t = BTreeMap::new();
        t.insert(e.iter().map(|k| -k).collect(), c.clone());
        Ok(MPoly { vars: self.vars.clone(), terms: t, laurent: self.laurent })
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn min_total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).min()
    }

    pub fn degree_in(&self, name: &str) -> i32 {
        match self.var_index(name) {
            None => 0,
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match it.next() {
            None => true,
            Some(d) => it.all(|x| x == d),
        }
    }

    /// Drop monomials of total degree > d.
    pub fn truncate_degree(&self, d: i32) -> Self {
        self.filter_terms(|e| e.iter().sum::<i32>() <= d)
    }

    /// Drop monomials whose degree in the listed variables exceeds d.
    pub fn truncate_in(&self, names: &[&str], d: i32) -> Self {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.var_index(n)).collect();
        self.filter_terms(|e| idx.iter().map(|&i| e[i]).sum::<i32>() <= d)
    }

    /// The part of degree exactly d in the listed variables.
    pub fn homogeneous_part_in(&self, names: &[&str], d: i32) -> Self {
        let idx: Vec<usize> = names.iter().filter_map(|n| self.var_index(n)).collect();
        self.filter_terms(|e| idx.iter().map(|&i| e[i]).sum::<i32>() == d)
    }

    fn filter_terms(&self, keep: impl Fn(&[i32]) -> bool) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
            laurent: self.laurent,
        }
    }

    /// Coefficient of the given monomial (missing variables have exponent 0).
    pub fn coeff(&self, powers: &[(&str, i32)]) -> C {
        let mut e = vec![0; self.vars.len()];
        for (name, k) in powers {
            match self.var_index(name) {
                Some(i) => e[i] += k,
                None => {
                    if *k != 0 {
                        return C::zero();
                    }
                }
            }
        }
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coeff(&[])
    }

    /// Coefficient of name^k as a polynomial in the remaining variables.
    pub fn coeff_of(&self, name: &str, k: i32) -> Self {
        let Some(i) = self.var_index(name) else {
            return if k == 0 { self.clone() } else { MPoly::zero() };
        };
        let mut out = MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
        for (e, c) in &self.terms {
            if e[i] == k {
                let mut ne = e.clone();
                ne[i] = 0;
                out.terms.insert(ne, c.clone());
            }
        }
        out.compact()
    }

    /// Dense coefficient list c_0..c_d of a polynomial in at most one variable.
    pub fn univariate_coeffs(&self, name: &str) -> Result<Vec<C>> {
        let used = self.used_vars();
        if used.iter().any(|v| v != name) {
            return invalid(format!("polynomial is not univariate in {name}: uses {used:?}"));
        }
        let i = self.var_index(name);
        let mut out: Vec<C> = Vec::new();
        for (e, c) in &self.terms {
            let k = i.map(|i| e[i]).unwrap_or(0);
            if k < 0 {
                return invalid("negative exponent in univariate extraction");
            }
            let k = k as usize;
            if out.len() <= k {
                out.resize(k + 1, C::zero());
            }
            out[k] = c.clone();
        }
        if out.is_empty() {
            out.push(C::zero());
        }
        Ok(out)
    }

    pub fn from_univariate(name: &str, coeffs: &[C]) -> Self {
        let mut p = MPoly::zero();
        p.ensure_var(name);
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(vec![k as i32], c.clone());
        }
        p
    }

    /// Variables with a nonzero exponent in some term.
    pub fn used_vars(&self) -> Vec<String> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] != 0))
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Drop unused variables.
    pub fn compact(&self) -> Self {
        let used = self.used_vars();
        if used.len() == self.vars.len() {
            return self.clone();
        }
        let keep: Vec<usize> = self.vars.iter().enumerate().filter(|(_, v)| used.contains(v)).map(|(i, _)| i).collect();
        MPoly {
            vars: used,
            terms: self.terms.iter().map(|(e, c)| (keep.iter().map(|&i| e[i]).collect(), c.clone())).collect(),
            laurent: self.laurent,
        }
    }

    /// Rename variables (names absent from the map are kept).
    pub fn rename(&self, map: &[(&str, &str)]) -> Self {
        let mut out = MPoly::zero();
        out.laurent = self.laurent;
        let names: Vec<String> = self
            .vars
            .iter()
            .map(|v| map.iter().find(|(a, _)| a == v).map(|(_, b)| b.to_string()).unwrap_or_else(|| v.clone()))
            .collect();
        for v in &names {
            out.ensure_var(v);
        }
        for (e, c) in &self.terms {
            let mut ne = vec![0; out.vars.len()];
            for (k, &x) in e.iter().enumerate() {
                ne[out.var_index(&names[k]).unwrap()] += x;
            }
            out.add_term(ne, c.clone());
        }
        out
    }

    pub fn derivative(&self, name: &str) -> Self {
        let Some(i) = self.var_index(name) else { return MPoly::zero() };
        let mut out = MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
        for (e, c) in &self.terms {
            if e[i] != 0 {
                let mut ne = e.clone();
                let k = ne[i];
                ne[i] -= 1;
                let mut f = C::zero();
                for _ in 0..k.unsigned_abs() {
                    f = f + C::one();
                }
                if k < 0 {
                    f = -f;
                }
                out.add_term(ne, c.clone() * f);
            }
        }
        out
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        let mut out = MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c));
        }
        out
    }

    /// Substitute polynomials for variables. Variables without a binding stay.
    ///
    /// A negative exponent requires its binding to be an invertible monomial.
    pub fn substitute(&self, bindings: &[(&str, MPoly<C>)]) -> Result<Self> {
        let mut slots: Vec<Option<&MPoly<C>>> = vec![None; self.vars.len()];
        for (name, p) in bindings {
            if let Some(i) = self.var_index(name) {
                slots[i] = Some(p);
            }
        }
        let mut cache: BTreeMap<(usize, i32), MPoly<C>> = BTreeMap::new();
        let mut out = MPoly::zero();
        for (e, c) in &self.terms {
            let mut term = MPoly::constant(c.clone());
            let mut rest = vec![0; self.vars.len()];
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                match slots[i] {
                    None => rest[i] = k,
                    Some(p) => {
                        let pk = match cache.get(&(i, k)) {
                            Some(v) => v.clone(),
                            None => {
                                let v = p.pow(k).map_err(|_| {
                                    Error::InvalidArgument(format!(
                                        "cannot raise binding of {} to negative power {k}",
                                        self.vars[i]
                                    ))
                                })?;
                                cache.insert((i, k), v.clone());
                                v
                            }
                        };
                        term = term.mul_ref(&pk);
                    }
                }
            }
            if rest.iter().any(|&k| k != 0) {
                let mut m = MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
                m.terms.insert(rest, C::one());
                term = term.mul_ref(&m);
            }
            out = out.add_ref(&term);
        }
        if !self.laurent && out.terms.keys().any(|e| e.iter().any(|&k| k < 0)) {
            return Err(Error::InvalidState("substitution produced a negative exponent".into()));
        }
        Ok(out)
    }

    /// Substitute constants.
    pub fn substitute_values(&self, values: &[(&str, C)]) -> Result<Self> {
        let b: Vec<(&str, MPoly<C>)> = values.iter().map(|(n, c)| (*n, MPoly::constant(c.clone()))).collect();
        let has_neg = values.iter().any(|(n, _)| {
            self.var_index(n).map(|i| self.terms.keys().any(|e| e[i] < 0)).unwrap_or(false)
        });
        if !has_neg {
            return self.substitute(&b);
        }
        // Laurent evaluation through field inverses.
        let mut out = MPoly::zero();
        out.laurent = self.laurent;
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut rest = vec![0; self.vars.len()];
            for (i, &k) in e.iter().enumerate() {
                match values.iter().find(|(n, _)| *n == self.vars[i]) {
                    Some((_, v)) => {
                        if k < 0 && v.is_zero() {
                            return invalid(format!("pole at {} = 0", self.vars[i]));
                        }
                        let mut pw = C::one();
                        for _ in 0..k.unsigned_abs() {
                            pw = pw * v.clone();
                        }
                        coef = if k < 0 { coef / pw } else { coef * pw };
                    }
                    None => rest[i] = k,
                }
            }
            let mut m = MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
            m.terms.insert(rest, coef);
            out = out.add_ref(&m);
        }
        Ok(out)
    }

    /// Full evaluation; every used variable needs a value.
    pub fn eval(&self, values: &[(&str, C)]) -> Result<C> {
        let r = self.substitute_values(values)?;
        let used = r.used_vars();
        if !used.is_empty() {
            return invalid(format!("unbound variables {used:?}"));
        }
        Ok(r.constant_term())
    }

    /// Termwise clearing of a common denominator. Each monomial Π v^{a_v} of total
    /// degree k in the bound variables becomes Π num_v^{a_v} · denom^{degree - k}.
    /// This realises degree-homogenised substitution of num_v / denom.
    pub fn substitute_fraction(&self, numerators: &[(&str, MPoly<C>)], denom: &MPoly<C>, degree: i32) -> Result<Self> {
        let idx: Vec<Option<usize>> = numerators.iter().map(|(n, _)| self.var_index(n)).collect();
        let mut out = MPoly::zero();
        let mut dpow: BTreeMap<i32, MPoly<C>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut k = 0;
            let mut term = MPoly::constant(c.clone());
            let mut rest = e.clone();
            for (slot, (_, num)) in idx.iter().zip(numerators) {
                if let Some(i) = slot {
                    let a = e[*i];
                    if a < 0 {
                        return invalid("negative exponent under fraction substitution");
                    }
                    k += a;
                    rest[*i] = 0;
                    term = term.mul_ref(&num.pow(a)?);
                }
            }
            if k > degree {
                return invalid(format!("uncleared denominator: term degree {k} exceeds clearing degree {degree}"));
            }
            let dp = match dpow.get(&(degree - k)) {
                Some(p) => p.clone(),
                None => {
                    let p = denom.pow(degree - k)?;
                    dpow.insert(degree - k, p.clone());
                    p
                }
            };
            term = term.mul_ref(&dp);
            if rest.iter().any(|&x| x != 0) {
                let mut m = MPoly { vars: self.vars.clone(), terms: BTreeMap::new(), laurent: self.laurent };
                m.terms.insert(rest, C::one());
                term = term.mul_ref(&m);
            }
            out = out.add_ref(&term);
        }
        Ok(out)
    }

    /// Canonical form: name-sorted, zero exponents dropped.
    fn canonical(&self) -> BTreeMap<Vec<(String, i32)>, C> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut key: Vec<(String, i32)> =
                    e.iter().enumerate().filter(|(_, &k)| k != 0).map(|(i, &k)| (self.vars[i].clone(), k)).collect();
                key.sort();
                (key, c.clone())
            })
            .collect()
    }

    /// Terms in canonical form: ([(var, exp)], coeff), sorted by name.
    pub fn canonical_terms(&self) -> Vec<(Vec<(String, i32)>, C)> {
        self.canonical().into_iter().collect()
    }
}

impl<C: Coeff> PartialEq for MPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        self.canonical() == other.canonical()
    }
}

impl<C: Coeff> Add for MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}
impl<C: Coeff> Add for &MPoly<C> {
    type Output = MPoly<C>;
    fn add(self, rhs: Self) -> MPoly<C> {
        self.add_ref(rhs)
    }
}
impl<C: Coeff> Sub for MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}
impl<C: Coeff> Sub for &MPoly<C> {
    type Output = MPoly<C>;
    fn sub(self, rhs: Self) -> MPoly<C> {
        self.sub_ref(rhs)
    }
}
impl<C: Coeff> Mul for MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}
impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;
    fn mul(self, rhs: Self) -> MPoly<C> {
        self.mul_ref(rhs)
    }
}
impl<C: Coeff> Neg for MPoly<C> {
    type Output = MPoly<C>;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

fn fmt_coeff<C: Coeff>(c: &C) -> String {
    format!("{c}")
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<(Vec<(String, i32)>, C)> = self.canonical_terms();
        // higher total degree first
        terms.sort_by(|a, b| {
            let da: i32 = a.0.iter().map(|x| x.1).sum();
            let db: i32 = b.0.iter().map(|x| x.1).sum();
            db.cmp(&da).then_with(|| a.0.cmp(&b.0))
        });
        let mut first = true;
        for (mono, c) in terms {
            let neg = c < C::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            let m: Vec<String> = mono
                .iter()
                .map(|(v, k)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            if m.is_empty() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.join("*"))?;
            } else {
                write!(f, "{}*{}", fmt_coeff(&abs), m.join("*"))?;
            }
        }
        Ok(())
    }
}

/// binom(x, d) = x(x-1)...(x-d+1)/d! as a polynomial in x.
pub fn binomial_poly(x: &str, d: u32) -> MPoly<BigRational> {
    let mut p = MPoly::one();
    let mut fact = BigInt::one();
    for k in 0..d {
        p = p.mul_ref(&(MPoly::var(x) - MPoly::constant(q(k as i64))));
        fact *= BigInt::from(k + 1);
    }
    p.scale(&BigRational::new(BigInt::one(), fact))
}

/// Exact binomial coefficient binom(c, k) for integer c (c may be negative).
pub fn binomial_int(c: &BigInt, k: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for j in 0..k {
        num *= c - BigInt::from(j);
        den *= BigInt::from(j + 1);
    }
    num / den
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k).fold(BigInt::one(), |a, j| a * BigInt::from(j))
}

/// A rational coefficient as an integer, if it is one.
pub fn as_integer(c: &BigRational) -> Option<BigInt> {
    if c.is_integer() {
        Some(c.to_integer())
    } else {
        None
    }
}

/// Whether a rational coefficient is negative.
pub fn is_negative(c: &BigRational) -> bool {
    c.is_negative()
}
