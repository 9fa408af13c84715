//! Schubert delta-matroids and indicator-function decompositions into them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::deltamatroid::DeltaMatroid;
use crate::error::{invalid, Error, Result};
use crate::ground::{eulerian_b, full_mask, gale_leq, group, maximal_ads, nonempty_ads, AdmissibleSet};
use crate::limits;
use crate::matroid::Matroid;
use crate::polyhedra::{lattice_count, BnPolytope};

/// Ω_S: the Gale interval below S.
pub fn standard_schubert(s: &AdmissibleSet) -> Result<DeltaMatroid> {
    if !s.is_maximal() {
        return invalid("Schubert delta-matroids are indexed by maximal admissible sets");
    }
    let mut fam = Vec::new();
    for b in maximal_ads(s.n()) {
        if gale_leq(&b, s)? {
            fam.push(b.pos());
        }
    }
    DeltaMatroid::from_bitsets(s.n(), fam)
}

/// Ω^A_T: sets of size |T| below T in dominance order on 1 < ⋯ < n.
pub fn schubert_matroid(t: u32, n: usize) -> Result<Matroid> {
    let k = t.count_ones();
    let sorted = |m: u32| -> Vec<usize> { (0..n).filter(|i| m & (1 << i) != 0).collect() };
    let tt = sorted(t);
    let bases = (0..=full_mask(n) as u64)
        .filter(|&b| b.count_ones() == k)
        .filter(|&b| sorted(b as u32).iter().zip(&tt).all(|(x, y)| x <= y));
    Matroid::from_masks((1..=n as i32).collect(), bases.collect::<Vec<_>>())
}

/// (m + C) ∩ [0,1]ⁿ with C = {x : Σ_{i≥k} x_i ≤ 0}, by the simple-root reduction.
pub fn cone_cube_intersect(m: &[i64]) -> Option<DeltaMatroid> {
    let n = m.len();
    let mut m = m.to_vec();
    loop {
        if m.iter().all(|&v| v == 0 || v == 1) {
            let x = (0..n).filter(|&i| m[i] == 1).fold(0u32, |a, i| a | (1 << i));
            return standard_schubert(&AdmissibleSet::maximal(n, x)).ok();
        }
        let weight: i64 = m.iter().enumerate().map(|(i, v)| (i as i64 + 1) * v).sum();
        if weight < 0 {
            return None;
        }
        if let Some(i) = (0..n).find(|&i| m[i] > 1) {
            // α_i = −e_1 for i = 1, e_{i−1} − e_i otherwise
            let a = m[i] - 1;
            m[i] -= a;
            if i > 0 {
                m[i - 1] += a;
            }
        } else if let Some(i) = (0..n).find(|&i| m[i] < 0) {
            if i + 1 == n {
                return None;
            }
            let a = -m[i];
            m[i] += a;
            m[i + 1] -= a;
        }
    }
}

/// Lattice points of {0,1}ⁿ satisfying Σ_{i≥k} x_i ≤ Σ_{i≥k} m_i, as a family.
pub fn cone_cube_direct(m: &[i64]) -> Option<DeltaMatroid> {
    let n = m.len();
    let fam: Vec<u32> = (0..=full_mask(n))
        .filter(|&x| {
            (0..n).all(|k| {
                let lhs = (k..n).filter(|&i| x & (1 << i) != 0).count() as i64;
                lhs <= m[k..].iter().sum::<i64>()
            })
        })
        .collect();
    if fam.is_empty() {
        None
    } else {
        DeltaMatroid::from_bitsets(n, fam).ok()
    }
}

/// All Schubert delta-matroids on [n, n̄] (Weyl images of the Ω_S).
pub fn all_schubert(n: usize) -> Result<Arc<BTreeSet<DeltaMatroid>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<BTreeSet<DeltaMatroid>>>>> = OnceLock::new();
    limits::check("Schubert enumeration", n, limits::CENSUS)?;
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(s) = cache.lock().map_err(|_| Error::Internal("cache poisoned".into()))?.get(&n) {
        return Ok(s.clone());
    }
    let g = group(n)?;
    let mut out = BTreeSet::new();
    for s in maximal_ads(n) {
        let d = standard_schubert(&s)?;
        for w in g.elements() {
            out.insert(d.twist(w)?);
        }
    }
    let out = Arc::new(out);
    cache.lock().map_err(|_| Error::Internal("cache poisoned".into()))?.insert(n, out.clone());
    Ok(out)
}

pub fn is_schubert(d: &DeltaMatroid) -> Result<bool> {
    Ok(all_schubert(d.n())?.contains(d))
}

#[derive(Clone, Debug)]
pub struct CensusReport {
    pub n: usize,
    pub schubert_total: usize,
    pub counts: Vec<u64>,
    pub eulerian: Vec<u64>,
}

impl CensusReport {
    pub fn matches(&self) -> bool {
        self.counts == self.eulerian
    }
}

/// Coloop-free Schubert delta-matroids grouped by cornered rank.
pub fn coloop_free_schubert_census(n: usize) -> Result<CensusReport> {
    let all = all_schubert(n)?;
    let mut counts = vec![0u64; n + 1];
    for d in all.iter() {
        if !d.coloops().is_empty() {
            continue;
        }
        let (_, m) = d
            .is_cornered()
            .ok_or_else(|| Error::Internal(format!("Schubert delta-matroid {d} is not cornered")))?;
        counts[m.rank()] += 1;
    }
    Ok(CensusReport { n, schubert_total: all.len(), counts, eulerian: eulerian_b(n)? })
}

/// One term c · 1_{m + P}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndicatorTerm {
    pub coeff: i64,
    pub translation: Vec<i64>,
    pub polytope: BnPolytope,
    pub dm: Option<DeltaMatroid>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IndicatorCombination {
    pub n: usize,
    pub terms: Vec<IndicatorTerm>,
}

/// Cones of Σ_{B_n} as chains of nonempty admissible sets (the empty chain is {0}).
pub fn fan_cones(n: usize) -> Result<Vec<Vec<AdmissibleSet>>> {
    let sets = nonempty_ads(n)?;
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<Vec<AdmissibleSet>> = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for chain in &frontier {
            for s in &sets {
                let ok = match chain.last() {
                    None => true,
                    Some(t) => t.is_subset(s) && t != s,
                };
                if ok {
                    let mut c = chain.clone();
                    c.push(*s);
                    next.push(c);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    Ok(out)
}

/// 1_P as a signed sum of translated Schubert delta-matroid polytopes.
pub fn schubert_decompose(p: &BnPolytope) -> Result<IndicatorCombination> {
    let n = p.n();
    limits::check("Schubert decomposition", n, limits::DECOMPOSE)?;
    let schub = all_schubert(n)?;
    let hs = p.integer_support().ok_or_else(|| Error::InvalidArgument("polytope is not a lattice polytope".into()))?;
    if !p.is_lattice() {
        return invalid("polytope is not a lattice polytope");
    }
    let boxes: Vec<(i64, i64)> = p
        .bounding_box()
        .iter()
        .map(|(a, b)| (a.to_integer().to_i64().unwrap(), b.to_integer().to_i64().unwrap()))
        .collect();
    // Per coordinate: (m_i, whether the face is the point {m_i}).
    let options: Vec<Vec<(i64, bool)>> = boxes
        .iter()
        .map(|&(lo, hi)| {
            if hi - lo <= 1 {
                vec![(lo, false)]
            } else {
                let mut v: Vec<(i64, bool)> = (lo - 1..=hi).map(|k| (k, false)).collect();
                v.extend((lo..=hi).map(|k| (k, true)));
                v
            }
        })
        .collect();
    let rays = crate::polyhedra::rays(n)?;
    let cones = fan_cones(n)?;
    // Lower bounds ⟨x, e_S⟩ ≥ −h(S̄) for every ray.
    let lower: Vec<i64> = rays.sets.iter().map(|s| -hs[rays.index(&s.bar())]).collect();
    let mut acc: BTreeMap<(Vec<i64>, Vec<u32>), i64> = BTreeMap::new();
    let mut idx = vec![0usize; n];
    loop {
        let face: Vec<(i64, bool)> = (0..n).map(|i| options[i][idx[i]]).collect();
        let m: Vec<i64> = face.iter().map(|f| f.0).collect();
        let points = face.iter().filter(|f| f.1).count();
        let free: u32 = (0..n).filter(|&i| !face[i].1).fold(0, |a, i| a | (1 << i));
        for cone in &cones {
            let codim_sigma = n - cone.len();
            let sign = if (points + codim_sigma) % 2 == 0 { 1 } else { -1 };
            let mut fam = Vec::new();
            let mut y = free;
            loop {
                let x: Vec<i64> = (0..n).map(|i| m[i] + ((y >> i) & 1) as i64).collect();
                if cone.iter().all(|s| s.pair_i64(&x) >= lower[rays.index(s)]) {
                    fam.push(y);
                }
                if y == 0 {
                    break;
                }
                y = (y - 1) & free;
            }
            if fam.is_empty() {
                continue;
            }
            // canonical translation: no coordinate where every member has a 1
            let all_one = fam.iter().fold(full_mask(n), |a, b| a & b);
            let mut mm = m.clone();
            for (i, v) in mm.iter_mut().enumerate() {
                if all_one & (1 << i) != 0 {
                    *v += 1;
                }
            }
            let mut fam: Vec<u32> = fam.into_iter().map(|y| y & !all_one).collect();
            // a constant coordinate equal to 1 is kept inside the unit cube
            let any_one = fam.iter().fold(0, |a, b| a | b);
            for (i, v) in mm.iter_mut().enumerate() {
                if any_one & (1 << i) == 0 && *v == 1 {
                    *v = 0;
                    for y in fam.iter_mut() {
                        *y |= 1 << i;
                    }
                }
            }
            fam.sort_unstable();
            *acc.entry((mm, fam)).or_default() += sign;
        }
        // next face
        let mut k = 0;
        while k < n {
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    let mut terms = Vec::new();
    for ((m, fam), c) in acc {
        if c == 0 {
            continue;
        }
        let d = DeltaMatroid::from_bitsets(n, fam)
            .map_err(|e| Error::Internal(format!("decomposition piece is not a delta-matroid: {e}")))?;
        if !schub.contains(&d) {
            return Err(Error::Internal(format!("decomposition piece {d} is not Schubert")));
        }
        let polytope = BnPolytope::from_deltamatroid(&d)?;
        terms.push(IndicatorTerm { coeff: c, translation: m, polytope, dm: Some(d) });
    }
    Ok(IndicatorCombination { n, terms })
}

#[derive(Clone, Debug)]
pub struct IndicatorReport {
    pub grid_points: usize,
    pub random_points: usize,
    pub grid_ok: bool,
    pub random_ok: bool,
    pub valuative_ok: bool,
    pub first_mismatch: Option<String>,
}

impl IndicatorReport {
    pub fn passed(&self) -> bool {
        self.grid_ok && self.random_ok && self.valuative_ok
    }
}

struct ScaledTerm {
    coeff: i64,
    shift: Vec<i64>,
    h: Vec<i64>,
    lo: Vec<i64>,
    hi: Vec<i64>,
}

fn scaled_term(p: &BnPolytope, shift: &[i64], coeff: i64, den: i64) -> Result<ScaledTerm> {
    let h = p.integer_support().ok_or_else(|| Error::InvalidArgument("non-lattice term".into()))?;
    let bb = p.bounding_box();
    let lo = bb.iter().zip(shift).map(|(b, s)| (b.0.to_integer().to_i64().unwrap() + s) * den).collect();
    let hi = bb.iter().zip(shift).map(|(b, s)| (b.1.to_integer().to_i64().unwrap() + s) * den).collect();
    Ok(ScaledTerm { coeff, shift: shift.iter().map(|s| s * den).collect(), h: h.iter().map(|v| v * den).collect(), lo, hi })
}

fn eval_terms(terms: &[ScaledTerm], sets: &[AdmissibleSet], z: &[i64]) -> i64 {
    let mut total = 0;
    for t in terms {
        if z.iter().zip(&t.lo).any(|(a, b)| a < b) || z.iter().zip(&t.hi).any(|(a, b)| a > b) {
            continue;
        }
        let y: Vec<i64> = z.iter().zip(&t.shift).map(|(a, b)| a - b).collect();
        if sets.iter().zip(&t.h).all(|(s, h)| s.pair_i64(&y) <= *h) {
            total += t.coeff;
        }
    }
    total
}

/// Compare Σ c·1_{m+P} with 1_target (or 0) on a grid, at random points, and
/// through lattice-point counts of dilates.
pub fn verify_indicator(comb: &IndicatorCombination, target: Option<&BnPolytope>, seed: u64) -> Result<IndicatorReport> {
    let n = comb.n;
    if let Some(t) = target {
        if t.n() != n {
            return invalid("target dimension differs from combination");
        }
    }
    let rays = crate::polyhedra::rays(n)?;
    let den = 4 * n.max(1) as i64;
    let rden = den + 1;
    let build = |d: i64| -> Result<(Vec<ScaledTerm>, Vec<ScaledTerm>)> {
        let lhs = comb
            .terms
            .iter()
            .map(|t| scaled_term(&t.polytope, &t.translation, t.coeff, d))
            .collect::<Result<Vec<_>>>()?;
        let rhs = match target {
            Some(p) => vec![scaled_term(p, &vec![0; n], 1, d)?],
            None => Vec::new(),
        };
        Ok((lhs, rhs))
    };
    // box: union of all bounding boxes, enlarged by 1
    let mut lo = vec![i64::MAX; n];
    let mut hi = vec![i64::MIN; n];
    let (lhs, rhs) = build(1)?;
    for t in lhs.iter().chain(&rhs) {
        for i in 0..n {
            lo[i] = lo[i].min(t.lo[i]);
            hi[i] = hi[i].max(t.hi[i]);
        }
    }
    if lhs.is_empty() && rhs.is_empty() {
        lo = vec![0; n];
        hi = vec![0; n];
    }
    for i in 0..n {
        lo[i] -= 1;
        hi[i] += 1;
    }
    let mut report = IndicatorReport {
        grid_points: 0,
        random_points: 0,
        grid_ok: true,
        random_ok: true,
        valuative_ok: true,
        first_mismatch: None,
    };
    let (lhs, rhs) = build(den)?;
    let mut z: Vec<i64> = lo.iter().map(|v| v * den).collect();
    if n > 0 {
        'grid: loop {
            report.grid_points += 1;
            let a = eval_terms(&lhs, &rays.sets, &z);
            let b = eval_terms(&rhs, &rays.sets, &z);
            if a != b {
                report.grid_ok = false;
                report.first_mismatch = Some(format!("grid point {z:?}/{den}: combination {a}, target {b}"));
                break 'grid;
            }
            let mut k = 0;
            while k < n {
                z[k] += 1;
                if z[k] <= hi[k] * den {
                    break;
                }
                z[k] = lo[k] * den;
                k += 1;
            }
            if k == n {
                break;
            }
        }
    }
    let (lhs, rhs) = build(rden)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let z: Vec<i64> = (0..n).map(|i| rng.gen_range(lo[i] * rden..=hi[i] * rden)).collect();
        report.random_points += 1;
        let a = eval_terms(&lhs, &rays.sets, &z);
        let b = eval_terms(&rhs, &rays.sets, &z);
        if a != b {
            report.random_ok = false;
            if report.first_mismatch.is_none() {
                report.first_mismatch = Some(format!("random point {z:?}/{rden}: combination {a}, target {b}"));
            }
            break;
        }
    }
    for t in 1..=3i64 {
        let tq = crate::poly::q(t);
        let mut a = 0i64;
        for term in &comb.terms {
            a += term.coeff * lattice_count(&term.polytope.scale(&tq))? as i64;
        }
        let b = match target {
            Some(p) => lattice_count(&p.scale(&tq))? as i64,
            None => 0,
        };
        if a != b {
            report.valuative_ok = false;
            if report.first_mismatch.is_none() {
                report.first_mismatch = Some(format!("lattice points of {t}P: combination {a}, target {b}"));
            }
        }
    }
    Ok(report)
}

/// Sum of coefficients is the Euler characteristic of the represented function.
pub fn total_coefficient(comb: &IndicatorCombination) -> i64 {
    comb.terms.iter().map(|t| t.coeff).sum()
}

/// Whether every support number of `p` is an integer and zero-free translation.
pub fn is_zero_translation(t: &IndicatorTerm) -> bool {
    t.translation.iter().all(|v| v.is_zero())
}
