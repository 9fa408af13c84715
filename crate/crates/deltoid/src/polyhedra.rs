//! B_n generalized permutohedra, stored by support numbers on the rays e_S.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::deltamatroid::DeltaMatroid;
use crate::error::{invalid, Error, Result};
use crate::ground::{full_mask, group, nonempty_ads, AdmissibleSet, SignedPermutation};
use crate::limits;
use crate::linalg;
use crate::poly::{binomial_int, binomial_poly, factorial, q};
use crate::{QPoly, Rational};

/// The 3ⁿ − 1 rays in canonical order, with a lookup by base-3 code.
#[derive(Debug)]
pub struct Rays {
    pub n: usize,
    pub sets: Vec<AdmissibleSet>,
    by_code: Vec<usize>,
}

impl Rays {
    pub fn index(&self, s: &AdmissibleSet) -> usize {
        self.by_code[s.code()]
    }
    pub fn len(&self) -> usize {
        self.sets.len()
    }
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

pub fn rays(n: usize) -> Result<Arc<Rays>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Rays>>>> = OnceLock::new();
    limits::check("ray table", n, limits::POLYTOPE)?;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().map_err(|_| Error::Internal("ray cache poisoned".into()))?;
    if let Some(r) = guard.get(&n) {
        return Ok(r.clone());
    }
    let sets = nonempty_ads(n)?;
    let mut by_code = vec![usize::MAX; 3usize.pow(n as u32)];
    for (k, s) in sets.iter().enumerate() {
        by_code[s.code()] = k;
    }
    let r = Arc::new(Rays { n, sets, by_code });
    guard.insert(n, r.clone());
    Ok(r)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BnPolytope {
    n: usize,
    h: Vec<Rational>,
}

fn lcm_denominators(h: &[Rational]) -> BigInt {
    h.iter().fold(BigInt::one(), |a, x| a.lcm(x.denom()))
}

impl BnPolytope {
    /// Support numbers in canonical ray order; validated.
    pub fn from_support(n: usize, h: Vec<Rational>) -> Result<Self> {
        let p = BnPolytope::from_support_unchecked(n, h)?;
        p.validate()?;
        Ok(p)
    }

    /// Support numbers without the vertex check (e.g. env images, P − □ candidates).
    pub fn from_support_unchecked(n: usize, h: Vec<Rational>) -> Result<Self> {
        let r = rays(n)?;
        if h.len() != r.len() {
            return invalid(format!("expected {} support numbers, got {}", r.len(), h.len()));
        }
        Ok(BnPolytope { n, h })
    }

    pub fn from_fn(n: usize, f: impl Fn(&AdmissibleSet) -> Rational) -> Result<Self> {
        let r = rays(n)?;
        Ok(BnPolytope { n, h: r.sets.iter().map(f).collect() })
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn support_numbers(&self) -> &[Rational] {
        &self.h
    }

    pub fn support(&self, s: &AdmissibleSet) -> Rational {
        if s.is_empty() {
            return Rational::zero();
        }
        let r = rays(self.n).expect("ray table exists");
        self.h[r.index(s)].clone()
    }

    pub fn point(x: &[Rational]) -> Result<Self> {
        BnPolytope::from_fn(x.len(), |s| pair(s, x))
    }

    pub fn origin(n: usize) -> Result<Self> {
        BnPolytope::from_fn(n, |_| Rational::zero())
    }

    /// conv({e_i : i ∈ S} ∪ {0}).
    pub fn simplex(s: &AdmissibleSet) -> Result<Self> {
        if s.is_empty() {
            return invalid("simplex of the empty set");
        }
        BnPolytope::from_fn(s.n(), |r| if s.intersects(r) { q(1) } else { q(0) })
    }

    pub fn cube(n: usize) -> Result<Self> {
        BnPolytope::from_fn(n, |s| q(s.pos().count_ones() as i64))
    }

    pub fn cross_polytope(n: usize) -> Result<Self> {
        BnPolytope::from_fn(n, |_| q(1))
    }

    /// Π_{B_n}: the orbit of (n, n−1, …, 1).
    pub fn signed_permutohedron(n: usize) -> Result<Self> {
        BnPolytope::from_fn(n, |s| q((0..s.len()).map(|k| (n - k) as i64).sum()))
    }

    pub fn from_vertices(n: usize, pts: &[Vec<Rational>]) -> Result<Self> {
        if pts.is_empty() {
            return invalid("no points");
        }
        let p = BnPolytope::from_fn(n, |s| pts.iter().map(|x| pair(s, x)).max().unwrap())?;
        p.validate()?;
        Ok(p)
    }

    pub fn from_deltamatroid(d: &DeltaMatroid) -> Result<Self> {
        let pts: Vec<Vec<Rational>> = d.feasible().iter().map(|&x| indicator(d.n(), x)).collect();
        BnPolytope::from_fn(d.n(), |s| pts.iter().map(|x| pair(s, x)).max().unwrap())
    }

    /// Maximising vertex on C_w: solve ⟨x, e_{S_k}⟩ = h(S_k) along the chain.
    pub fn vertex(&self, w: &SignedPermutation) -> Vec<Rational> {
        let mut x = vec![Rational::zero(); self.n];
        let mut prev = Rational::zero();
        for k in 1..=self.n {
            let hk = self.support(&w.chain(k));
            let diff = hk.clone() - prev;
            let v = w.images()[k - 1];
            if v > 0 {
                x[(v - 1) as usize] = diff;
            } else {
                x[(-v - 1) as usize] = -diff;
            }
            prev = hk;
        }
        x
    }

    /// Minimising vertex on C_w (the maximiser for w̄).
    pub fn min_vertex(&self, w: &SignedPermutation) -> Vec<Rational> {
        self.vertex(&w.bar_images())
    }

    pub fn vertices(&self) -> Result<Vec<Vec<Rational>>> {
        let mut v: Vec<Vec<Rational>> = group(self.n)?.elements().iter().map(|w| self.vertex(w)).collect();
        v.sort();
        v.dedup();
        Ok(v)
    }

    /// Every chain-solved candidate vertex satisfies every inequality.
    pub fn validate(&self) -> Result<()> {
        let r = rays(self.n)?;
        let den = lcm_denominators(&self.h);
        let scaled: Option<Vec<i128>> = self.h.iter().map(|x| (x.numer() * (&den / x.denom())).to_i128()).collect();
        let Some(hs) = scaled else {
            return self.validate_rational();
        };
        let g = group(self.n)?;
        let n = self.n;
        let mut sub = vec![0i128; 1 << n];
        for w in g.elements() {
            let mut x = vec![0i128; n];
            let mut prev = 0i128;
            for k in 1..=n {
                let hk = hs[r.index(&w.chain(k))];
                let v = w.images()[k - 1];
                if v > 0 {
                    x[(v - 1) as usize] = hk - prev;
                } else {
                    x[(-v - 1) as usize] = prev - hk;
                }
                prev = hk;
            }
            for m in 1usize..(1 << n) {
                let low = m.trailing_zeros() as usize;
                sub[m] = sub[m & (m - 1)] + x[low];
            }
            for (s, &hv) in r.sets.iter().zip(&hs) {
                let val = sub[s.pos() as usize] - sub[s.neg() as usize];
                if val > hv {
                    return Err(Error::InvalidCombination(format!(
                        "candidate vertex for w = {w} violates the inequality on ray {s}"
                    )));
                }
            }
        }
        Ok(())
    }

    fn validate_rational(&self) -> Result<()> {
        for w in group(self.n)?.elements() {
            let x = self.vertex(w);
            if !self.contains(&x) {
                return Err(Error::InvalidCombination(format!("candidate vertex for w = {w} lies outside")));
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        let r = rays(self.n).expect("ray table");
        r.sets.iter().zip(&self.h).all(|(s, h)| pair(s, x) <= *h)
    }

    /// Integer support numbers, if all are integers.
    pub fn integer_support(&self) -> Option<Vec<i64>> {
        self.h.iter().map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None }).collect()
    }

    pub fn is_lattice(&self) -> bool {
        match group(self.n) {
            Ok(g) => g.elements().iter().all(|w| self.vertex(w).iter().all(|c| c.is_integer())),
            Err(_) => false,
        }
    }

    pub fn add(&self, other: &BnPolytope) -> Result<BnPolytope> {
        if self.n != other.n {
            return invalid("Minkowski sum of polytopes in different dimensions");
        }
        Ok(BnPolytope { n: self.n, h: self.h.iter().zip(&other.h).map(|(a, b)| a + b).collect() })
    }

    pub fn scale(&self, c: &Rational) -> BnPolytope {
        BnPolytope { n: self.n, h: self.h.iter().map(|a| a * c).collect() }
    }

    pub fn translate(&self, m: &[Rational]) -> BnPolytope {
        let r = rays(self.n).expect("ray table");
        BnPolytope { n: self.n, h: self.h.iter().zip(&r.sets).map(|(a, s)| a + pair(s, m)).collect() }
    }

    /// Coordinate bounds [−h(ī), h(i)].
    pub fn bounding_box(&self) -> Vec<(Rational, Rational)> {
        (1..=self.n)
            .map(|i| {
                let lo = -self.support(&AdmissibleSet::from_signed(self.n, &[-(i as i32)]).unwrap());
                let hi = self.support(&AdmissibleSet::from_signed(self.n, &[i as i32]).unwrap());
                (lo, hi)
            })
            .collect()
    }
}

pub fn pair(s: &AdmissibleSet, x: &[Rational]) -> Rational {
    let mut t = Rational::zero();
    for (k, v) in x.iter().enumerate().take(s.n()) {
        let bit = 1u32 << k;
        if s.pos() & bit != 0 {
            t += v;
        } else if s.neg() & bit != 0 {
            t -= v;
        }
    }
    t
}

pub fn indicator(n: usize, x: u32) -> Vec<Rational> {
    (0..n).map(|k| if x & (1 << k) != 0 { q(1) } else { q(0) }).collect()
}

/// Σ c·P, validated.
pub fn minkowski_combine(terms: &[(i64, &BnPolytope)]) -> Result<BnPolytope> {
    let Some((_, first)) = terms.first() else {
        return invalid("empty combination");
    };
    let n = first.n();
    let mut h = vec![Rational::zero(); rays(n)?.len()];
    for (c, p) in terms {
        if p.n() != n {
            return invalid("mixed dimensions in combination");
        }
        for (acc, v) in h.iter_mut().zip(&p.h) {
            *acc += v * q(*c);
        }
    }
    let out = BnPolytope { n, h };
    out.validate()
        .map_err(|e| Error::InvalidCombination(format!("signed sum is not a B_n generalized permutohedron: {e}")))?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaDecomposition {
    pub n: usize,
    /// Nonzero c_S, in canonical ray order.
    pub coeffs: Vec<(AdmissibleSet, BigInt)>,
    /// Always zero: the segments Δ_{ī} absorb translations.
    pub translation: Vec<BigInt>,
}

impl DeltaDecomposition {
    pub fn coefficient(&self, s: &AdmissibleSet) -> BigInt {
        self.coeffs.iter().find(|(t, _)| t == s).map(|(_, c)| c.clone()).unwrap_or_default()
    }

    pub fn from_coeffs(n: usize, coeffs: Vec<(AdmissibleSet, BigInt)>) -> Self {
        let mut c: Vec<(AdmissibleSet, BigInt)> = coeffs.into_iter().filter(|(_, v)| !v.is_zero()).collect();
        c.sort_by(|a, b| a.0.cmp(&b.0));
        DeltaDecomposition { n, coeffs: c, translation: vec![BigInt::zero(); n] }
    }
}

/// M[R][S] = [S ∩ R ≠ ∅] over nonempty admissible sets.
pub fn incidence_matrix(n: usize) -> Result<Vec<Vec<Rational>>> {
    let r = rays(n)?;
    Ok(r.sets
        .iter()
        .map(|row| r.sets.iter().map(|col| if col.intersects(row) { q(1) } else { q(0) }).collect())
        .collect())
}

fn incidence_inverse(n: usize) -> Result<Arc<Vec<Vec<Rational>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Vec<Rational>>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(m) = cache.lock().map_err(|_| Error::Internal("cache poisoned".into()))?.get(&n) {
        return Ok(m.clone());
    }
    let inv = linalg::inverse(&incidence_matrix(n)?)
        .ok_or_else(|| Error::Internal(format!("incidence system singular at n = {n}")))?;
    let inv = Arc::new(inv);
    cache.lock().map_err(|_| Error::Internal("cache poisoned".into()))?.insert(n, inv.clone());
    Ok(inv)
}

/// Nonsingularity of the incidence system, decided over F_p for a few primes.
pub fn incidence_nonsingular(n: usize) -> Result<bool> {
    let r = rays(n)?;
    let m: Vec<Vec<u64>> =
        r.sets.iter().map(|row| r.sets.iter().map(|col| col.intersects(row) as u64).collect()).collect();
    // A nonzero determinant mod p certifies nonsingularity over Q.
    Ok([1_000_000_007u64, 998_244_353, 10007].iter().any(|&p| linalg::nonsingular_mod_p(&m, p)))
}

/// The unique c with Σ c_S Δ_S = P.
pub fn delta_decompose(p: &BnPolytope) -> Result<DeltaDecomposition> {
    limits::check("Δ-decomposition", p.n(), limits::DECOMPOSE)?;
    let r = rays(p.n())?;
    let inv = incidence_inverse(p.n())?;
    let c = linalg::mat_vec(&inv, &p.h);
    let mut coeffs = Vec::new();
    for (s, v) in r.sets.iter().zip(&c) {
        if !v.is_integer() {
            return Err(Error::InvalidCombination(format!("non-integer coefficient {v} on {s}")));
        }
        coeffs.push((*s, v.to_integer()));
    }
    let d = DeltaDecomposition::from_coeffs(p.n(), coeffs);
    if reconstruct(&d)? != *p {
        return Err(Error::Internal("Δ-decomposition does not reconstruct its input".into()));
    }
    Ok(d)
}

/// Support numbers of Σ c_S Δ_S.
pub fn reconstruct(d: &DeltaDecomposition) -> Result<BnPolytope> {
    BnPolytope::from_fn(d.n, |r| {
        let mut t = BigInt::zero();
        for (s, c) in &d.coeffs {
            if s.intersects(r) {
                t += c;
            }
        }
        Rational::from_integer(t)
    })
}

/// Number of maximal admissible τ admitting distinct representatives j(k) ∈ S_k.
pub fn signed_transversal_count(sets: &[AdmissibleSet]) -> Result<u64> {
    let n = sets.len();
    if sets.iter().any(|s| s.n() != n) {
        return invalid("signed transversals need exactly n sets on [n, n̄]");
    }
    if sets.iter().any(|s| s.is_empty()) {
        return Ok(0);
    }
    let mut count = 0;
    for x in 0..=full_mask(n) {
        let tau = AdmissibleSet::maximal(n, x);
        // dp[mask of used coordinates] after matching the first popcount(mask) sets
        let mut dp = vec![false; 1 << n];
        dp[0] = true;
        for mask in 0usize..(1 << n) {
            if !dp[mask] {
                continue;
            }
            let k = mask.count_ones() as usize;
            if k == n {
                continue;
            }
            let s = &sets[k];
            let avail = (s.pos() & tau.pos()) | (s.neg() & tau.neg());
            for c in 0..n {
                if avail & (1 << c) != 0 && mask & (1 << c) == 0 {
                    dp[mask | (1 << c)] = true;
                }
            }
        }
        if dp[(1 << n) - 1] {
            count += 1;
        }
    }
    Ok(count)
}

/// Visit all multisets of size n drawn from `k` items as multiplicity vectors.
fn for_each_multiset(k: usize, n: usize, f: &mut impl FnMut(&[u32])) {
    fn rec(pos: usize, left: u32, mult: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if pos + 1 == mult.len() {
            mult[pos] = left;
            f(mult);
            mult[pos] = 0;
            return;
        }
        for a in (0..=left).rev() {
            mult[pos] = a;
            rec(pos + 1, left - a, mult, f);
        }
        mult[pos] = 0;
    }
    if k == 0 {
        if n == 0 {
            f(&[]);
        }
        return;
    }
    let mut mult = vec![0u32; k];
    rec(0, n as u32, &mut mult, f);
}

fn expand(sets: &[AdmissibleSet], mult: &[u32]) -> Vec<AdmissibleSet> {
    sets.iter().zip(mult).flat_map(|(s, &m)| std::iter::repeat(*s).take(m as usize)).collect()
}

/// Σ over ordered sequences of signed-transversal counts times Π c_{S_k}.
pub fn volume(d: &DeltaDecomposition) -> Result<Rational> {
    let n = d.n;
    let sets: Vec<AdmissibleSet> = d.coeffs.iter().map(|(s, _)| *s).collect();
    let cs: Vec<&BigInt> = d.coeffs.iter().map(|(_, c)| c).collect();
    let nf = factorial(n as u32);
    let mut total = BigInt::zero();
    let mut err = None;
    for_each_multiset(sets.len(), n, &mut |mult| {
        let seq = expand(&sets, mult);
        match signed_transversal_count(&seq) {
            Ok(0) => {}
            Ok(cnt) => {
                let mut term = nf.clone() * BigInt::from(cnt);
                for (c, &m) in cs.iter().zip(mult) {
                    term = term / factorial(m) * num_traits::pow((*c).clone(), m as usize);
                }
                total += term;
            }
            Err(e) => err = Some(e),
        }
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(Rational::from_integer(total))
}

/// The volume as a polynomial in variables c0, c1, … (one per support set of `d`).
pub fn volume_polynomial(d: &DeltaDecomposition) -> Result<QPoly> {
    let n = d.n;
    let sets: Vec<AdmissibleSet> = d.coeffs.iter().map(|(s, _)| *s).collect();
    let names: Vec<String> = (0..sets.len()).map(|k| format!("c{k}")).collect();
    let mut out = QPoly::zero();
    let mut err = None;
    for_each_multiset(sets.len(), n, &mut |mult| {
        let seq = expand(&sets, mult);
        match signed_transversal_count(&seq) {
            Ok(0) => {}
            Ok(cnt) => {
                let mut coef = factorial(n as u32) * BigInt::from(cnt);
                for &m in mult {
                    coef /= factorial(m);
                }
                let powers: Vec<(&str, i32)> =
                    names.iter().zip(mult).filter(|(_, &m)| m > 0).map(|(s, &m)| (s.as_str(), m as i32)).collect();
                out = out.clone() + QPoly::monomial(Rational::from_integer(coef), &powers);
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// Replace every monomial Π x^d by Π binom(x, d).
pub fn psi(f: &QPoly) -> QPoly {
    let mut out = QPoly::zero();
    for (mono, c) in f.canonical_terms() {
        let mut t = QPoly::constant(c);
        for (v, d) in mono {
            t = t * binomial_poly(&v, d.max(0) as u32);
        }
        out = out + t;
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeConvention {
    /// Ψ applied to the ordered-sequence volume polynomial.
    OrderedPsi,
    /// Σ over multisets of Π binom(c_S, k_S) times the transversal count.
    Multiset,
}

/// The lattice-point formula for P({c_S}) − □.
pub fn lattice_count_formula(d: &DeltaDecomposition, convention: LatticeConvention) -> Result<BigInt> {
    let n = d.n;
    let sets: Vec<AdmissibleSet> = d.coeffs.iter().map(|(s, _)| *s).collect();
    let cs: Vec<&BigInt> = d.coeffs.iter().map(|(_, c)| c).collect();
    let mut total = BigInt::zero();
    let mut err = None;
    for_each_multiset(sets.len(), n, &mut |mult| {
        let seq = expand(&sets, mult);
        match signed_transversal_count(&seq) {
            Ok(0) => {}
            Ok(cnt) => {
                let mut term = BigInt::from(cnt);
                if convention == LatticeConvention::OrderedPsi {
                    term *= factorial(n as u32);
                    for &m in mult {
                        term /= factorial(m);
                    }
                }
                for (c, &m) in cs.iter().zip(mult) {
                    term *= binomial_int(c, m);
                }
                total += term;
            }
            Err(e) => err = Some(e),
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

/// Coefficients c′ of P − □: singletons {i} ⊆ [n] lowered by one.
pub fn minus_cube(d: &DeltaDecomposition) -> DeltaDecomposition {
    let mut map: Vec<(AdmissibleSet, BigInt)> = d.coeffs.clone();
    for i in 0..d.n {
        let s = AdmissibleSet::new(d.n, 1 << i, 0).unwrap();
        match map.iter_mut().find(|(t, _)| *t == s) {
            Some(e) => e.1 -= 1,
            None => map.push((s, BigInt::from(-1))),
        }
    }
    DeltaDecomposition::from_coeffs(d.n, map)
}

/// Integer points x with ⟨x, e_S⟩ ≤ h(S) for every ray; h need not be valid.
pub fn count_points_of_system(n: usize, h: &[Rational]) -> Result<u64> {
    let mut count = 0u64;
    enumerate_system(n, h, &mut |_| count += 1)?;
    Ok(count)
}

fn enumerate_system(n: usize, h: &[Rational], f: &mut impl FnMut(&[i64])) -> Result<()> {
    let r = rays(n)?;
    let hi: Vec<i64> = h
        .iter()
        .map(|x| x.floor().to_integer().to_i64().ok_or_else(|| Error::Internal("support number overflow".into())))
        .collect::<Result<_>>()?;
    // rays grouped by their highest coordinate
    let mut by_top: Vec<Vec<(AdmissibleSet, i64)>> = vec![Vec::new(); n];
    for (s, &v) in r.sets.iter().zip(&hi) {
        let top = 31 - s.support().leading_zeros() as usize;
        by_top[top].push((*s, v));
    }
    let mut x = vec![0i64; n];
    fn rec(k: usize, n: usize, x: &mut Vec<i64>, by_top: &[Vec<(AdmissibleSet, i64)>], f: &mut impl FnMut(&[i64])) {
        if k == n {
            f(x);
            return;
        }
        let mut lo = i64::MIN;
        let mut hi = i64::MAX;
        let bit = 1u32 << k;
        for (s, h) in &by_top[k] {
            let rest = s.pair_i64(&x[..]) - if s.pos() & bit != 0 { x[k] } else { -x[k] };
            if s.pos() & bit != 0 {
                hi = hi.min(h - rest);
            } else {
                lo = lo.max(rest - h);
            }
        }
        let mut v = lo;
        while v <= hi {
            x[k] = v;
            rec(k + 1, n, x, by_top, f);
            v += 1;
        }
        x[k] = 0;
    }
    if n == 0 {
        f(&[]);
        return Ok(());
    }
    rec(0, n, &mut x, &by_top, f);
    Ok(())
}

/// All lattice points of P.
pub fn lattice_points(p: &BnPolytope) -> Result<Vec<Vec<i64>>> {
    let mut out = Vec::new();
    enumerate_system(p.n(), &p.h, &mut |x| out.push(x.to_vec()))?;
    Ok(out)
}

pub fn lattice_count(p: &BnPolytope) -> Result<u64> {
    count_points_of_system(p.n(), &p.h)
}

/// Ehrhart polynomial coefficients (constant term first), by interpolation on t = 0..n.
pub fn ehrhart_polynomial(p: &BnPolytope) -> Result<Vec<Rational>> {
    let n = p.n();
    let counts: Vec<Rational> = (0..=n)
        .map(|t| count_points_of_system(n, &p.scale(&q(t as i64)).h).map(|c| q(c as i64)))
        .collect::<Result<_>>()?;
    let vand: Vec<Vec<Rational>> =
        (0..=n).map(|t| (0..=n).map(|k| q((t as i64).pow(k as u32))).collect()).collect();
    linalg::solve(&vand, &counts).ok_or_else(|| Error::Internal("Vandermonde system singular".into()))
}

/// n! times the leading Ehrhart coefficient.
pub fn volume_oracle(p: &BnPolytope) -> Result<Rational> {
    let e = ehrhart_polynomial(p)?;
    if e[0] != q(1) && !e.iter().all(|c| c.is_zero()) {
        return Err(Error::Internal(format!("Ehrhart constant term {} ≠ 1", e[0])));
    }
    Ok(e[p.n()].clone() * Rational::from_integer(factorial(p.n() as u32)))
}

/// P ∩ (m + [0,1]ⁿ), or None when empty.
///
/// The intersection is a lattice polytope, so its support numbers are maxima over
/// the lattice points of P in m + {0,1}ⁿ.
pub fn intersect_with_cube(p: &BnPolytope, m: &[i64]) -> Result<Option<BnPolytope>> {
    let n = p.n();
    if m.len() != n {
        return invalid("translation vector has the wrong length");
    }
    let pts = cube_points_in(p, m);
    if pts.is_empty() {
        return Ok(None);
    }
    let qts: Vec<Vec<Rational>> = pts.iter().map(|x| x.iter().map(|&v| q(v)).collect()).collect();
    let out = BnPolytope::from_fn(n, |s| qts.iter().map(|x| pair(s, x)).max().unwrap())?;
    out.validate().map_err(|e| Error::Internal(format!("cube intersection not a B_n polytope: {e}")))?;
    Ok(Some(out))
}

/// Lattice points of P in m + {0,1}ⁿ.
pub fn cube_points_in(p: &BnPolytope, m: &[i64]) -> Vec<Vec<i64>> {
    let n = p.n();
    let mut out = Vec::new();
    for x in 0..=full_mask(n) {
        let pt: Vec<i64> = (0..n).map(|k| m[k] + ((x >> k) & 1) as i64).collect();
        let qp: Vec<Rational> = pt.iter().map(|&v| q(v)).collect();
        if p.contains(&qp) {
            out.push(pt);
        }
    }
    out
}

/// Whether a rational number is negative (re-export for callers without num-traits).
pub fn negative(x: &Rational) -> bool {
    x.is_negative()
}
