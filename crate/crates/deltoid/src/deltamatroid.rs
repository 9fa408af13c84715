//! Delta-matroids on [n, n̄].
//!
//! A feasible set B is stored as the bit-set B ∩ [n]; the barred part is the
//! complement.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use crate::error::{invalid, Error, Result};
use crate::ground::{full_mask, maximal_ads, weyl_act, AdmissibleSet, SignedPermutation};
use crate::limits;
use crate::matroid::Matroid;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DeltaMatroid {
    n: usize,
    feasible: Vec<u32>,
}

/// First failure of the symmetric exchange axiom: (F₁, F₂, i) with i ∈ F₁ △ F₂.
pub fn exchange_witness(n: usize, family: &[u32]) -> Option<(u32, u32, usize)> {
    let set: HashSet<u32> = family.iter().copied().collect();
    for &f1 in family {
        for &f2 in family {
            let d = f1 ^ f2;
            for i in 0..n {
                if d & (1 << i) == 0 {
                    continue;
                }
                let g = f1 ^ (1 << i);
                let ok = (0..n).any(|j| d & (1 << j) != 0 && set.contains(&(g ^ if j == i { 0 } else { 1 << j })));
                if !ok {
                    return Some((f1, f2, i + 1));
                }
            }
        }
    }
    None
}

impl DeltaMatroid {
    /// Validate a family of bit-sets B ∩ [n].
    pub fn from_bitsets(n: usize, family: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n > 31 {
            return invalid("ground size exceeds 31");
        }
        let full = full_mask(n);
        let set: BTreeSet<u32> = family.into_iter().collect();
        if set.is_empty() {
            return Err(Error::NotADeltaMatroid("empty family".into()));
        }
        if set.iter().any(|&x| x & !full != 0) {
            return invalid("feasible set outside [n]");
        }
        let feasible: Vec<u32> = set.into_iter().collect();
        if let Some((a, b, i)) = exchange_witness(n, &feasible) {
            return Err(Error::NotADeltaMatroid(format!(
                "exchange fails for {} and {} at {}",
                AdmissibleSet::maximal(n, a),
                AdmissibleSet::maximal(n, b),
                i
            )));
        }
        Ok(DeltaMatroid { n, feasible })
    }

    pub fn new(n: usize, sets: &[AdmissibleSet]) -> Result<Self> {
        for s in sets {
            if s.n() != n || !s.is_maximal() {
                return invalid(format!("feasible set {s} is not a maximal admissible set of [{n}, {n}̄]"));
            }
        }
        DeltaMatroid::from_bitsets(n, sets.iter().map(|s| s.pos()))
    }

    pub fn from_signed(n: usize, sets: &[Vec<i32>]) -> Result<Self> {
        let parsed: Result<Vec<AdmissibleSet>> = sets.iter().map(|s| AdmissibleSet::from_signed(n, s)).collect();
        DeltaMatroid::new(n, &parsed?)
    }

    pub fn n(&self) -> usize {
        self.n
    }
    pub fn feasible(&self) -> &[u32] {
        &self.feasible
    }
    pub fn feasible_sets(&self) -> Vec<AdmissibleSet> {
        self.feasible.iter().map(|&x| AdmissibleSet::maximal(self.n, x)).collect()
    }
    pub fn is_feasible(&self, x: u32) -> bool {
        self.feasible.binary_search(&x).is_ok()
    }

    pub fn is_even(&self) -> bool {
        let p = self.feasible[0].count_ones() % 2;
        self.feasible.iter().all(|x| x.count_ones() % 2 == p)
    }

    fn squeeze(x: u32, i: usize) -> u32 {
        let low = (1u32 << (i - 1)) - 1;
        (x & low) | ((x >> i) << (i - 1))
    }

    fn minor(&self, i: usize, keep_with: Option<bool>) -> Result<DeltaMatroid> {
        if i == 0 || i > self.n {
            return invalid(format!("element {i} not in [{}]", self.n));
        }
        let bit = 1u32 << (i - 1);
        let chosen: Vec<u32> = match keep_with {
            None => self.feasible.clone(),
            Some(with) => {
                let k: Vec<u32> = self.feasible.iter().copied().filter(|x| (x & bit != 0) == with).collect();
                if k.is_empty() {
                    self.feasible.clone()
                } else {
                    k
                }
            }
        };
        let fam: BTreeSet<u32> = chosen.into_iter().map(|x| Self::squeeze(x, i)).collect();
        Ok(DeltaMatroid { n: self.n - 1, feasible: fam.into_iter().collect() })
    }

    /// D \ i: feasible sets containing ī, with ī removed (falls back to all sets
    /// when i lies in every feasible set).
    pub fn delete(&self, i: usize) -> Result<DeltaMatroid> {
        self.minor(i, Some(false))
    }

    /// D / i: feasible sets containing i, with i removed (falls back when i is a loop).
    pub fn contract(&self, i: usize) -> Result<DeltaMatroid> {
        self.minor(i, Some(true))
    }

    /// D(i): forget i and ī.
    pub fn project(&self, i: usize) -> Result<DeltaMatroid> {
        self.minor(i, None)
    }

    /// Project away every element of `mask`, keeping the rest in order.
    pub fn project_many(&self, mask: u32) -> DeltaMatroid {
        let mut d = self.clone();
        for i in (1..=self.n).rev() {
            if mask & (1 << (i - 1)) != 0 {
                d = d.project(i).expect("index in range");
            }
        }
        d
    }

    pub fn dual(&self) -> DeltaMatroid {
        let full = full_mask(self.n);
        let fam: BTreeSet<u32> = self.feasible.iter().map(|x| full & !x).collect();
        DeltaMatroid { n: self.n, feasible: fam.into_iter().collect() }
    }

    pub fn product(&self, other: &DeltaMatroid) -> DeltaMatroid {
        let mut fam = BTreeSet::new();
        for &a in &self.feasible {
            for &b in &other.feasible {
                fam.insert(a | (b << self.n));
            }
        }
        DeltaMatroid { n: self.n + other.n, feasible: fam.into_iter().collect() }
    }

    pub fn twist(&self, w: &SignedPermutation) -> Result<DeltaMatroid> {
        if w.n() != self.n {
            return invalid("twist by a permutation of a different size");
        }
        let mut fam = BTreeSet::new();
        for s in self.feasible_sets() {
            fam.insert(weyl_act(w, &s)?.pos());
        }
        Ok(DeltaMatroid { n: self.n, feasible: fam.into_iter().collect() })
    }

    /// Flip membership of the coordinates in `mask`.
    pub fn twist_signs(&self, mask: u32) -> DeltaMatroid {
        let fam: BTreeSet<u32> = self.feasible.iter().map(|x| x ^ mask).collect();
        DeltaMatroid { n: self.n, feasible: fam.into_iter().collect() }
    }

    /// d_D(S) = ½ min |B △ S| for S maximal, given by S ∩ [n].
    pub fn distance_bits(&self, s: u32) -> u32 {
        self.feasible.iter().map(|x| (x ^ s).count_ones()).min().unwrap()
    }

    pub fn distance(&self, s: &AdmissibleSet) -> Result<u32> {
        if s.n() != self.n || !s.is_maximal() {
            return invalid("distance needs a maximal admissible set of the same size");
        }
        Ok(self.distance_bits(s.pos()))
    }

    /// P(M) for a matroid on labels 1..n.
    pub fn from_bases(m: &Matroid) -> Result<DeltaMatroid> {
        let n = m.len();
        let fam: Vec<u32> = m.bases().iter().map(|&b| ground_bits(m, b)).collect::<Result<_>>()?;
        DeltaMatroid::from_bitsets(n, fam)
    }

    /// IP(M) for a matroid on labels 1..n.
    pub fn from_independents(m: &Matroid) -> Result<DeltaMatroid> {
        let n = m.len();
        let fam: Vec<u32> = m.independent_sets().iter().map(|&b| ground_bits(m, b)).collect::<Result<_>>()?;
        DeltaMatroid::from_bitsets(n, fam)
    }

    /// Feasible set whose vertex minimises Σ_k (n−k+1)·x_{w(k)}, a functional in C_w°.
    pub fn w_min_bits(&self, w: &SignedPermutation) -> u32 {
        let weights = chain_weights(w);
        *self
            .feasible
            .iter()
            .min_by_key(|&&x| (0..self.n).filter(|k| x & (1 << k) != 0).map(|k| weights[k]).sum::<i64>())
            .unwrap()
    }

    pub fn w_max_bits(&self, w: &SignedPermutation) -> u32 {
        let weights = chain_weights(w);
        *self
            .feasible
            .iter()
            .max_by_key(|&&x| (0..self.n).filter(|k| x & (1 << k) != 0).map(|k| weights[k]).sum::<i64>())
            .unwrap()
    }

    pub fn w_min_feasible(&self, w: &SignedPermutation) -> AdmissibleSet {
        AdmissibleSet::maximal(self.n, self.w_min_bits(w))
    }

    pub fn w_max_feasible(&self, w: &SignedPermutation) -> AdmissibleSet {
        AdmissibleSet::maximal(self.n, self.w_max_bits(w))
    }

    /// Elements of [n] contained in no feasible set.
    pub fn loops(&self) -> Vec<usize> {
        let union = self.feasible.iter().fold(0, |a, b| a | b);
        (1..=self.n).filter(|i| union & (1 << (i - 1)) == 0).collect()
    }

    /// Elements of [n] contained in every feasible set.
    pub fn coloops(&self) -> Vec<usize> {
        let inter = self.feasible.iter().fold(full_mask(self.n), |a, b| a & b);
        (1..=self.n).filter(|i| inter & (1 << (i - 1)) != 0).collect()
    }

    /// Closed under B ↦ B \ i ∪ ī.
    pub fn is_standard_cornered(&self) -> bool {
        self.feasible
            .iter()
            .all(|&x| (0..self.n).all(|k| x & (1 << k) == 0 || self.is_feasible(x & !(1 << k))))
    }

    /// A sign change w and matroid M with twist(w, D) = IP(M), if one exists.
    pub fn is_cornered(&self) -> Option<(SignedPermutation, Matroid)> {
        for mask in 0..=full_mask(self.n) {
            let t = self.twist_signs(mask);
            if t.is_standard_cornered() {
                let rank = t.feasible.iter().map(|x| x.count_ones()).max().unwrap();
                let bases: Vec<u64> = t.feasible.iter().filter(|x| x.count_ones() == rank).map(|&x| x as u64).collect();
                let ground: Vec<i32> = (1..=self.n as i32).collect();
                let m = Matroid::from_masks(ground, bases).ok()?;
                return Some((SignedPermutation::sign_change(self.n, mask), m));
            }
        }
        None
    }

    /// A matroid M with D = P(M), if the feasible sets all have the same size.
    pub fn as_base_polytope(&self) -> Option<Matroid> {
        let r = self.feasible[0].count_ones();
        if self.feasible.iter().any(|x| x.count_ones() != r) {
            return None;
        }
        let ground: Vec<i32> = (1..=self.n as i32).collect();
        Matroid::from_masks(ground, self.feasible.iter().map(|&x| x as u64)).ok()
    }

    /// Canonical representative of the hyperoctahedral orbit.
    pub fn orbit_canonical(&self) -> Result<DeltaMatroid> {
        let mut best: Option<DeltaMatroid> = None;
        for w in crate::ground::group(self.n)?.elements() {
            let t = self.twist(w)?;
            if best.as_ref().map(|b| t.feasible < b.feasible).unwrap_or(true) {
                best = Some(t);
            }
        }
        Ok(best.unwrap())
    }

    pub fn to_signed(&self) -> Vec<Vec<i32>> {
        self.feasible_sets().iter().map(|s| s.to_signed()).collect()
    }
}

impl fmt::Display for DeltaMatroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sets: Vec<String> = self.feasible_sets().iter().map(|s| s.to_string()).collect();
        write!(f, "D[n={}]{{{}}}", self.n, sets.join(", "))
    }
}

fn ground_bits(m: &Matroid, mask: u64) -> Result<u32> {
    let mut x = 0u32;
    for l in m.labels_of(mask) {
        if l < 1 || l as usize > m.len() {
            return invalid("matroid must live on labels 1..n");
        }
        x |= 1 << (l - 1);
    }
    Ok(x)
}

/// Coefficient of x_k in Σ_j (n−j+1)·e_{w(j)}, k = 0..n−1.
pub fn chain_weights(w: &SignedPermutation) -> Vec<i64> {
    let n = w.n();
    let mut c = vec![0i64; n];
    for (j, &v) in w.images().iter().enumerate() {
        let wt = (n - j) as i64;
        if v > 0 {
            c[(v - 1) as usize] += wt;
        } else {
            c[(-v - 1) as usize] -= wt;
        }
    }
    c
}

/// Every delta-matroid on [n, n̄].
pub fn enumerate_deltamatroids(n: usize) -> Result<Vec<DeltaMatroid>> {
    limits::check("delta-matroid enumeration", n, limits::ENUMERATE_DM)?;
    if n >= 6 {
        return Err(Error::ResourceLimit { what: "delta-matroid enumeration", n, limit: 5 });
    }
    let count = 1u64 << n;
    let mut out = Vec::new();
    for fam in 1u64..(1u64 << count) {
        let members: Vec<u32> = (0..count as u32).filter(|x| fam & (1 << x) != 0).collect();
        if exchange_witness(n, &members).is_none() {
            out.push(DeltaMatroid { n, feasible: members });
        }
    }
    Ok(out)
}

/// The maximal admissible sets of the ground, convenience re-export.
pub fn all_maximal(n: usize) -> Vec<AdmissibleSet> {
    maximal_ads(n)
}
