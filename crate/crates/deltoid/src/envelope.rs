//! Enveloping matroids: matroids on [n, n̄] whose base polytope maps onto 2P(D) − e_[n].

use serde::{Deserialize, Serialize};

use crate::deltamatroid::DeltaMatroid;
use crate::error::{invalid, Error, Result};
use crate::ground::{full_mask, AdmissibleSet, SignedPermutation};
use crate::limits;
use crate::matroid::Matroid;
use crate::polyhedra::{rays, BnPolytope};
use crate::represent::{delta_from_isotropic, is_isotropic, FqMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Construction {
    DirectSum,
    FreeProduct,
    FromRepresentation,
    UserSupplied,
    Search,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeWitness {
    pub dm: DeltaMatroid,
    pub matroid: Matroid,
    pub construction: Construction,
}

impl EnvelopeWitness {
    /// Checks the enveloping property before wrapping.
    pub fn new(dm: DeltaMatroid, matroid: Matroid, construction: Construction) -> Result<Self> {
        if !is_enveloping(&matroid, &dm)? {
            return Err(Error::InvalidArgument(format!("matroid does not envelop {dm}")));
        }
        Ok(EnvelopeWitness { dm, matroid, construction })
    }
}

fn signed_ground(n: usize) -> Vec<i32> {
    (1..=n as i32).chain((1..=n as i32).map(|i| -i)).collect()
}

fn check_ground(m: &Matroid) -> Result<usize> {
    let k = m.len();
    if k % 2 != 0 {
        return invalid("ground set is not of the form [n, n̄]");
    }
    let n = k / 2;
    let mut g = m.ground().to_vec();
    g.sort_unstable();
    let mut want = signed_ground(n);
    want.sort_unstable();
    if g != want {
        return invalid("ground set is not of the form [n, n̄]");
    }
    Ok(n)
}

/// ⟨env(u_ℓ), e_S⟩ for a label ℓ of [n, n̄].
fn env_weight(s: &AdmissibleSet, label: i32) -> i64 {
    let i = label.unsigned_abs() as usize - 1;
    let sigma = if s.pos() & (1 << i) != 0 {
        1
    } else if s.neg() & (1 << i) != 0 {
        -1
    } else {
        0
    };
    if label > 0 {
        sigma
    } else {
        -sigma
    }
}

/// Support numbers of env(P(M)) on every ray, by greedy maximization.
pub fn env_support(m: &Matroid) -> Result<Vec<i64>> {
    let n = check_ground(m)?;
    let r = rays(n)?;
    Ok(r.sets.iter().map(|s| m.max_weight_basis(|l| env_weight(s, l)).0).collect())
}

/// Support numbers of env(IP(M)): greedy with negative weights dropped.
pub fn env_indep_support(m: &Matroid) -> Result<Vec<i64>> {
    let n = check_ground(m)?;
    let r = rays(n)?;
    Ok(r.sets.iter().map(|s| m.max_weight_basis(|l| env_weight(s, l).max(0)).0).collect())
}

/// Support numbers of 2P(D) − e_[n].
pub fn hat_support(d: &DeltaMatroid) -> Result<Vec<i64>> {
    let p = BnPolytope::from_deltamatroid(d)?;
    let h = p.integer_support().ok_or_else(|| Error::Internal("delta-matroid polytope is not lattice".into()))?;
    let r = rays(d.n())?;
    Ok(r.sets.iter().zip(h).map(|(s, v)| 2 * v - (s.pos().count_ones() as i64 - s.neg().count_ones() as i64)).collect())
}

pub fn hat_polytope(d: &DeltaMatroid) -> Result<BnPolytope> {
    let h = hat_support(d)?;
    BnPolytope::from_support(d.n(), h.into_iter().map(crate::poly::q).collect())
}

pub fn is_enveloping(m: &Matroid, d: &DeltaMatroid) -> Result<bool> {
    if check_ground(m)? != d.n() {
        return Ok(false);
    }
    Ok(env_support(m)? == hat_support(d)?)
}

/// M ⊕ M̄^⊥, enveloping P(M).
pub fn envelope_base(m: &Matroid) -> Result<Matroid> {
    check_plain(m)?;
    m.direct_sum(&m.dual().relabel(|l| -l)?)
}

/// Free product M □ M̄^⊥, enveloping IP(M).
pub fn envelope_indep(m: &Matroid) -> Result<Matroid> {
    let n = check_plain(m)?;
    let dual = m.dual();
    let full = full_mask(n) as u64;
    let mut bases = Vec::new();
    for s in 0..=full {
        if !m.is_independent(s) {
            continue;
        }
        for t in 0..=full {
            if (s.count_ones() + t.count_ones()) as usize == n && dual.is_spanning(t) {
                bases.push(s | (t << n));
            }
        }
    }
    Matroid::from_masks(signed_ground(n), bases)
}

/// A matroid on exactly 1..n in order.
fn check_plain(m: &Matroid) -> Result<usize> {
    let n = m.len();
    if m.ground() != (1..=n as i32).collect::<Vec<_>>().as_slice() {
        return invalid("expected a matroid on 1..n");
    }
    Ok(n)
}

/// The matroid of L with the x₀ column forgotten.
pub fn envelope_from_rep(l: &FqMatrix) -> Result<Matroid> {
    if !is_isotropic(l)? {
        return invalid("row span is not isotropic");
    }
    let (n, _) = l.shape()?;
    let proj = l.forget_zero()?;
    Matroid::column_matroid(&proj.rows, signed_ground(n), l.p)
}

/// Act on labels by a signed permutation.
pub fn twist_matroid(m: &Matroid, w: &SignedPermutation) -> Result<Matroid> {
    m.relabel(|l| w.apply(l))
}

pub fn twist_witness(wit: &EnvelopeWitness, w: &SignedPermutation) -> Result<EnvelopeWitness> {
    EnvelopeWitness::new(wit.dm.twist(w)?, twist_matroid(&wit.matroid, w)?, wit.construction)
}

pub fn dual_witness(wit: &EnvelopeWitness) -> Result<EnvelopeWitness> {
    EnvelopeWitness::new(wit.dm.dual(), wit.matroid.dual(), wit.construction)
}

pub fn product_witness(a: &EnvelopeWitness, b: &EnvelopeWitness) -> Result<EnvelopeWitness> {
    let shift = a.dm.n() as i32;
    let mb = b.matroid.relabel(|l| if l > 0 { l + shift } else { l - shift })?;
    EnvelopeWitness::new(a.dm.product(&b.dm), a.matroid.direct_sum(&mb)?, a.construction)
}

fn squeeze(i: usize) -> impl Fn(i32) -> i32 {
    move |l: i32| {
        let a = l.unsigned_abs() as usize;
        let a = if a > i { a - 1 } else { a } as i32;
        if l > 0 {
            a
        } else {
            -a
        }
    }
}

/// M / i ∖ ī envelops D / i.
pub fn contract_witness(wit: &EnvelopeWitness, i: usize) -> Result<EnvelopeWitness> {
    let m = wit.matroid.contract(i as i32)?.delete(-(i as i32))?.relabel(squeeze(i))?;
    EnvelopeWitness::new(wit.dm.contract(i)?, m, wit.construction)
}

/// M ∖ i / ī envelops D ∖ i.
pub fn delete_witness(wit: &EnvelopeWitness, i: usize) -> Result<EnvelopeWitness> {
    let m = wit.matroid.delete(i as i32)?.contract(-(i as i32))?.relabel(squeeze(i))?;
    EnvelopeWitness::new(wit.dm.delete(i)?, m, wit.construction)
}

/// Exhaustive search for n ≤ 3: bases are the feasible sets plus some
/// non-admissible n-subsets of [n, n̄].
pub fn search(d: &DeltaMatroid) -> Result<Option<Matroid>> {
    let n = d.n();
    limits::check("envelope search", n, 3)?;
    let full = (1u64 << (2 * n)) - 1;
    let feasible: Vec<u64> = d.feasible().iter().map(|&x| x as u64 | ((full_mask(n) as u64 & !x as u64) << n)).collect();
    let extra: Vec<u64> = (0..=full)
        .filter(|b| b.count_ones() as usize == n && (b & (b >> n) & full_mask(n) as u64) != 0)
        .collect();
    for pick in 0u64..(1 << extra.len()) {
        let mut bases = feasible.clone();
        bases.extend(extra.iter().enumerate().filter(|(k, _)| pick & (1 << k) != 0).map(|(_, b)| *b));
        if let Ok(m) = Matroid::from_masks(signed_ground(n), bases) {
            if is_enveloping(&m, d)? {
                return Ok(Some(m));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Base,
    Indep,
    Rep(FqMatrix),
    Search,
}

/// Find a witness with the requested construction.
pub fn find_envelope(d: &DeltaMatroid, strategy: &Strategy) -> Result<Option<EnvelopeWitness>> {
    let base = || -> Result<Option<EnvelopeWitness>> {
        match d.as_base_polytope() {
            Some(m) => Ok(Some(EnvelopeWitness::new(d.clone(), envelope_base(&m)?, Construction::DirectSum)?)),
            None => Ok(None),
        }
    };
    let indep = || -> Result<Option<EnvelopeWitness>> {
        match d.is_cornered() {
            Some((w, m)) => {
                let e = twist_matroid(&envelope_indep(&m)?, &w)?;
                Ok(Some(EnvelopeWitness::new(d.clone(), e, Construction::FreeProduct)?))
            }
            None => Ok(None),
        }
    };
    let searched = || -> Result<Option<EnvelopeWitness>> {
        match search(d)? {
            Some(m) => Ok(Some(EnvelopeWitness::new(d.clone(), m, Construction::Search)?)),
            None => Ok(None),
        }
    };
    match strategy {
        Strategy::Base => base(),
        Strategy::Indep => indep(),
        Strategy::Search => searched(),
        Strategy::Rep(l) => {
            if delta_from_isotropic(l)? != *d {
                return invalid("the representation does not represent this delta-matroid");
            }
            Ok(Some(EnvelopeWitness::new(d.clone(), envelope_from_rep(l)?, Construction::FromRepresentation)?))
        }
        Strategy::Auto => {
            if let Some(w) = base()? {
                return Ok(Some(w));
            }
            if let Some(w) = indep()? {
                return Ok(Some(w));
            }
            if d.n() <= 3 {
                return searched();
            }
            Ok(None)
        }
    }
}

#[derive(Clone, Debug)]
pub struct LemmaReport {
    pub indep_image_ok: bool,
    pub loop_coloop_ok: bool,
    pub mismatches: Vec<String>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.indep_image_ok && self.loop_coloop_ok
    }
}

/// env(IP(M)) = P(D) + □ − e_[n], and loops/coloops of D match those of M.
pub fn check_envelope_lemmas(wit: &EnvelopeWitness) -> Result<LemmaReport> {
    let d = &wit.dm;
    let m = &wit.matroid;
    let n = d.n();
    let r = rays(n)?;
    let hd = BnPolytope::from_deltamatroid(d)?
        .integer_support()
        .ok_or_else(|| Error::Internal("delta-matroid polytope is not lattice".into()))?;
    // h_□(S) − ⟨e_[n], e_S⟩ = |S ∩ [n̄]|
    let rhs: Vec<i64> = r.sets.iter().zip(&hd).map(|(s, h)| h + s.neg().count_ones() as i64).collect();
    let lhs = env_indep_support(m)?;
    let mut mismatches = Vec::new();
    let indep_image_ok = lhs == rhs;
    if !indep_image_ok {
        mismatches.push("env(IP(M)) differs from P(D) + □ − e_[n]".to_string());
    }
    let (dl, dc) = (d.loops(), d.coloops());
    let mut loop_coloop_ok = true;
    for i in 1..=n {
        let li = i as i32;
        let m_loop = m.is_loop(li) && m.is_coloop(-li);
        let m_coloop = m.is_coloop(li) && m.is_loop(-li);
        if dl.contains(&i) != m_loop || dc.contains(&i) != m_coloop {
            loop_coloop_ok = false;
            mismatches.push(format!("loop/coloop status of {i} differs between D and M"));
        }
    }
    Ok(LemmaReport { indep_image_ok, loop_coloop_ok, mismatches })
}
