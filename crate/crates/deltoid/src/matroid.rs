//! Matroids given by their bases, on labelled ground sets.
//!
//! Labels are signed integers so that the same type serves matroids on [n],
//! on [n, n̄] (negative labels are barred) and on [n, n̄] ∪ {0}.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{invalid, Error, Result};
use crate::linalg;
use crate::limits;
use crate::QPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matroid {
    ground: Vec<i32>,
    bases: Vec<u64>,
    rank: usize,
}

impl Matroid {
    pub fn from_masks(ground: Vec<i32>, bases: impl IntoIterator<Item = u64>) -> Result<Self> {
        if ground.len() > limits::cap(limits::MATROID_GROUND).min(63) {
            return Err(Error::ResourceLimit { what: "matroid ground set", n: ground.len(), limit: limits::MATROID_GROUND });
        }
        let uniq: HashSet<i32> = ground.iter().copied().collect();
        if uniq.len() != ground.len() {
            return invalid("repeated ground label");
        }
        let full = if ground.len() == 64 { u64::MAX } else { (1u64 << ground.len()) - 1 };
        let set: BTreeSet<u64> = bases.into_iter().collect();
        if set.is_empty() {
            return Err(Error::NotAMatroid("no bases".into()));
        }
        let rank = set.iter().next().unwrap().count_ones() as usize;
        for b in &set {
            if b & !full != 0 {
                return invalid("basis uses a label outside the ground set");
            }
            if b.count_ones() as usize != rank {
                return Err(Error::NotAMatroid("bases of different sizes".into()));
            }
        }
        let hs: HashSet<u64> = set.iter().copied().collect();
        for &b1 in &set {
            for &b2 in &set {
                let mut d = b1 & !b2;
                while d != 0 {
                    let x = d & d.wrapping_neg();
                    d &= d - 1;
                    let mut e = b2 & !b1;
                    let mut ok = false;
                    while e != 0 {
                        let y = e & e.wrapping_neg();
                        e &= e - 1;
                        if hs.contains(&((b1 & !x) | y)) {
                            ok = true;
                            break;
                        }
                    }
                    if !ok {
                        return Err(Error::NotAMatroid(format!(
                            "exchange fails for bases {:?}, {:?}",
                            mask_labels(&ground, b1),
                            mask_labels(&ground, b2)
                        )));
                    }
                }
            }
        }
        Ok(Matroid { ground, bases: set.into_iter().collect(), rank })
    }

    pub fn new(ground: Vec<i32>, bases: &[Vec<i32>]) -> Result<Self> {
        let masks: Result<Vec<u64>> = bases.iter().map(|b| labels_mask(&ground, b)).collect();
        Matroid::from_masks(ground, masks?)
    }

    pub fn ground(&self) -> &[i32] {
        &self.ground
    }
    pub fn bases(&self) -> &[u64] {
        &self.bases
    }
    pub fn rank(&self) -> usize {
        self.rank
    }
    pub fn len(&self) -> usize {
        self.ground.len()
    }
    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn position(&self, label: i32) -> Option<usize> {
        self.ground.iter().position(|&g| g == label)
    }

    pub fn mask_of(&self, labels: &[i32]) -> Result<u64> {
        labels_mask(&self.ground, labels)
    }

    pub fn labels_of(&self, mask: u64) -> Vec<i32> {
        mask_labels(&self.ground, mask)
    }

    pub fn bases_labels(&self) -> Vec<Vec<i32>> {
        self.bases.iter().map(|&b| self.labels_of(b)).collect()
    }

    pub fn full_mask(&self) -> u64 {
        (1u64 << self.ground.len()) - 1
    }

    pub fn rank_of(&self, mask: u64) -> usize {
        self.bases.iter().map(|b| (b & mask).count_ones() as usize).max().unwrap_or(0)
    }

    pub fn is_independent(&self, mask: u64) -> bool {
        self.bases.iter().any(|b| mask & !b == 0)
    }

    pub fn is_spanning(&self, mask: u64) -> bool {
        self.bases.iter().any(|b| b & !mask == 0)
    }

    pub fn independent_sets(&self) -> Vec<u64> {
        let mut out = BTreeSet::new();
        for &b in &self.bases {
            let mut s = b;
            loop {
                out.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & b;
            }
        }
        out.into_iter().collect()
    }

    pub fn loops(&self) -> Vec<i32> {
        let union = self.bases.iter().fold(0u64, |a, b| a | b);
        self.labels_of(self.full_mask() & !union)
    }

    pub fn coloops(&self) -> Vec<i32> {
        let inter = self.bases.iter().fold(self.full_mask(), |a, b| a & b);
        self.labels_of(inter)
    }

    pub fn is_loop(&self, label: i32) -> bool {
        self.loops().contains(&label)
    }

    pub fn is_coloop(&self, label: i32) -> bool {
        self.coloops().contains(&label)
    }

    pub fn dual(&self) -> Matroid {
        let full = self.full_mask();
        let bases: BTreeSet<u64> = self.bases.iter().map(|b| full & !b).collect();
        Matroid { ground: self.ground.clone(), rank: self.ground.len() - self.rank, bases: bases.into_iter().collect() }
    }

    /// Apply a label map; ground order is kept.
    pub fn relabel(&self, f: impl Fn(i32) -> i32) -> Result<Matroid> {
        let ground: Vec<i32> = self.ground.iter().map(|&g| f(g)).collect();
        let uniq: HashSet<i32> = ground.iter().copied().collect();
        if uniq.len() != ground.len() {
            return invalid("relabelling is not injective");
        }
        Ok(Matroid { ground, bases: self.bases.clone(), rank: self.rank })
    }

    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        if self.ground.iter().any(|g| other.ground.contains(g)) {
            return invalid("direct sum needs disjoint ground sets");
        }
        let shift = self.ground.len();
        let mut ground = self.ground.clone();
        ground.extend_from_slice(&other.ground);
        let mut bases = BTreeSet::new();
        for &a in &self.bases {
            for &b in &other.bases {
                bases.insert(a | (b << shift));
            }
        }
        Ok(Matroid { ground, rank: self.rank + other.rank, bases: bases.into_iter().collect() })
    }

    /// Deletion M \ e (contraction when e is a coloop). The label disappears.
    pub fn delete(&self, label: i32) -> Result<Matroid> {
        let k = self.position(label).ok_or_else(|| Error::InvalidArgument(format!("label {label} not in ground")))?;
        let bit = 1u64 << k;
        let keep: Vec<u64> = self.bases.iter().copied().filter(|b| b & bit == 0).collect();
        let chosen = if keep.is_empty() { self.bases.clone() } else { keep };
        self.drop_position(k, chosen)
    }

    /// Contraction M / e (deletion when e is a loop).
    pub fn contract(&self, label: i32) -> Result<Matroid> {
        let k = self.position(label).ok_or_else(|| Error::InvalidArgument(format!("label {label} not in ground")))?;
        let bit = 1u64 << k;
        let keep: Vec<u64> = self.bases.iter().copied().filter(|b| b & bit != 0).collect();
        let chosen = if keep.is_empty() { self.bases.clone() } else { keep };
        self.drop_position(k, chosen)
    }

    fn drop_position(&self, k: usize, bases: Vec<u64>) -> Result<Matroid> {
        let mut ground = self.ground.clone();
        ground.remove(k);
        let low = (1u64 << k) - 1;
        let squeezed = bases.into_iter().map(|b| (b & low) | ((b >> (k + 1)) << k));
        Matroid::from_masks(ground, squeezed)
    }

    /// Greedy maximum-weight basis. Returns (value, basis mask).
    pub fn max_weight_basis(&self, weight: impl Fn(i32) -> i64) -> (i64, u64) {
        let mut order: Vec<usize> = (0..self.ground.len()).collect();
        order.sort_by_key(|&k| std::cmp::Reverse(weight(self.ground[k])));
        let mut cur = 0u64;
        let mut value = 0;
        for k in order {
            let cand = cur | (1 << k);
            if self.is_independent(cand) {
                cur = cand;
                value += weight(self.ground[k]);
            }
        }
        (value, cur)
    }

    /// Tutte polynomial in x, y via the corank-nullity expansion.
    pub fn tutte(&self) -> QPoly {
        let x1 = QPoly::var("x") - QPoly::one();
        let y1 = QPoly::var("y") - QPoly::one();
        let mut counts = std::collections::BTreeMap::<(usize, usize), i64>::new();
        for s in 0..=self.full_mask() {
            let r = self.rank_of(s);
            *counts.entry((self.rank - r, s.count_ones() as usize - r)).or_default() += 1;
        }
        let mut t = QPoly::zero();
        for ((a, b), c) in counts {
            let term = x1.pow(a as i32).unwrap() * y1.pow(b as i32).unwrap();
            t = t + term.scale(&BigRational::from_integer(BigInt::from(c)));
        }
        t
    }

    /// U_{r,k} on labels 1..k.
    pub fn uniform(r: usize, k: usize) -> Result<Matroid> {
        if r > k {
            return invalid(format!("U_{{{r},{k}}} needs r ≤ k"));
        }
        let ground: Vec<i32> = (1..=k as i32).collect();
        let bases = (0..(1u64 << k)).filter(|m| m.count_ones() as usize == r);
        Matroid::from_masks(ground, bases)
    }

    /// Cycle matroid of a graph on vertices 0..v with the listed edges (labels 1..m).
    pub fn graphic(v: usize, edges: &[(usize, usize)]) -> Result<Matroid> {
        let m = edges.len();
        if edges.iter().any(|&(a, b)| a >= v || b >= v) {
            return invalid("edge endpoint out of range");
        }
        let forest = |mask: u64| -> bool {
            let mut parent: Vec<usize> = (0..v).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut x = x;
                while p[x] != x {
                    p[x] = p[p[x]];
                    x = p[x];
                }
                x
            }
            for (k, &(a, b)) in edges.iter().enumerate() {
                if mask & (1 << k) != 0 {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra == rb {
                        return false;
                    }
                    parent[ra] = rb;
                }
            }
            true
        };
        let forests: Vec<u64> = (0..(1u64 << m)).filter(|&s| forest(s)).collect();
        let r = forests.iter().map(|s| s.count_ones()).max().unwrap_or(0);
        let ground: Vec<i32> = (1..=m as i32).collect();
        Matroid::from_masks(ground, forests.into_iter().filter(|s| s.count_ones() == r))
    }

    /// Column matroid over F_p; column k gets label `labels[k]`.
    pub fn column_matroid(rows: &[Vec<u64>], labels: Vec<i32>, p: u64) -> Result<Matroid> {
        let cols = labels.len();
        if rows.iter().any(|r| r.len() != cols) {
            return invalid("matrix width does not match label count");
        }
        let pick = |mask: u64| -> Vec<Vec<u64>> {
            rows.iter()
                .map(|r| (0..cols).filter(|k| mask & (1 << k) != 0).map(|k| r[k]).collect())
                .collect()
        };
        let full = (1u64 << cols) - 1;
        let r = linalg::rank_mod_p(rows, p);
        let bases = (0..=full)
            .filter(|m| m.count_ones() as usize == r)
            .filter(|&m| r == 0 || linalg::rank_mod_p(&pick(m), p) == r);
        Matroid::from_masks(labels, bases.collect::<Vec<_>>())
    }
}

pub fn labels_mask(ground: &[i32], labels: &[i32]) -> Result<u64> {
    let mut m = 0u64;
    for l in labels {
        let k = ground
            .iter()
            .position(|g| g == l)
            .ok_or_else(|| Error::InvalidArgument(format!("label {l} not in ground set")))?;
        if m & (1 << k) != 0 {
            return invalid(format!("label {l} repeated"));
        }
        m |= 1 << k;
    }
    Ok(m)
}

pub fn mask_labels(ground: &[i32], mask: u64) -> Vec<i32> {
    ground.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &g)| g).collect()
}
