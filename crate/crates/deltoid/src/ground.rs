//! Signed ground sets [n, n̄], admissible sets, the hyperoctahedral group.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{invalid, Error, Result};
use crate::limits;

/// An element of [n, n̄]. Encoded on the wire as a signed integer, -k meaning k̄.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedIndex {
    index: u8,
    barred: bool,
}

impl SignedIndex {
    pub fn new(index: usize, barred: bool) -> Result<Self> {
        if index == 0 || index > 31 {
            return invalid(format!("signed index {index} out of range"));
        }
        Ok(SignedIndex { index: index as u8, barred })
    }

    pub fn from_i32(v: i32) -> Result<Self> {
        SignedIndex::new(v.unsigned_abs() as usize, v < 0)
    }

    pub fn to_i32(self) -> i32 {
        if self.barred {
            -(self.index as i32)
        } else {
            self.index as i32
        }
    }

    pub fn index(self) -> usize {
        self.index as usize
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    pub fn bar(self) -> Self {
        SignedIndex { index: self.index, barred: !self.barred }
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.barred {
            write!(f, "{}̄", self.index)
        } else {
            write!(f, "{}", self.index)
        }
    }
}

/// Subset of [n, n̄] with no pair {i, ī}. Bit k-1 of `pos` is k, bit k-1 of `neg` is k̄.
///
/// The derived order compares (n, pos, neg) lexicographically, which is the
/// canonical enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AdmissibleSet {
    n: u8,
    pos: u32,
    neg: u32,
}

pub(crate) fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

impl AdmissibleSet {
    pub fn new(n: usize, pos: u32, neg: u32) -> Result<Self> {
        if n > 31 {
            return invalid(format!("ground size {n} exceeds 31"));
        }
        let full = full_mask(n);
        if pos & !full != 0 || neg & !full != 0 {
            return invalid("admissible set has elements outside [n]");
        }
        if pos & neg != 0 {
            return invalid("set contains a pair {i, ī}");
        }
        Ok(AdmissibleSet { n: n as u8, pos, neg })
    }

    pub fn empty(n: usize) -> Self {
        AdmissibleSet { n: n as u8, pos: 0, neg: 0 }
    }

    /// The maximal admissible set X ∪ bar([n] \ X).
    pub fn maximal(n: usize, x: u32) -> Self {
        let full = full_mask(n);
        AdmissibleSet { n: n as u8, pos: x & full, neg: !x & full }
    }

    pub fn from_signed(n: usize, elems: &[i32]) -> Result<Self> {
        let (mut pos, mut neg) = (0u32, 0u32);
        for &e in elems {
            let k = e.unsigned_abs() as usize;
            if e == 0 || k > n {
                return invalid(format!("element {e} not in [{n}, {n}̄]"));
            }
            let bit = 1u32 << (k - 1);
            if (pos | neg) & bit != 0 {
                return invalid(format!("element {e} repeated or paired with its bar"));
            }
            if e > 0 {
                pos |= bit;
            } else {
                neg |= bit;
            }
        }
        AdmissibleSet::new(n, pos, neg)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }
    pub fn pos(&self) -> u32 {
        self.pos
    }
    pub fn neg(&self) -> u32 {
        self.neg
    }
    pub fn len(&self) -> usize {
        (self.pos.count_ones() + self.neg.count_ones()) as usize
    }
    pub fn is_empty(&self) -> bool {
        self.pos == 0 && self.neg == 0
    }
    pub fn is_maximal(&self) -> bool {
        self.len() == self.n()
    }
    pub fn support(&self) -> u32 {
        self.pos | self.neg
    }

    pub fn contains(&self, e: i32) -> bool {
        let k = e.unsigned_abs() as usize;
        if e == 0 || k > self.n() {
            return false;
        }
        let bit = 1u32 << (k - 1);
        if e > 0 {
            self.pos & bit != 0
        } else {
            self.neg & bit != 0
        }
    }

    pub fn bar(&self) -> Self {
        AdmissibleSet { n: self.n, pos: self.neg, neg: self.pos }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.pos & !other.pos == 0 && self.neg & !other.neg == 0
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.pos & other.pos != 0 || self.neg & other.neg != 0
    }

    /// Sorted signed elements, in the order n̄ < ... < 1̄ < 1 < ... < n.
    pub fn to_signed(&self) -> Vec<i32> {
        let mut v: Vec<i32> = Vec::with_capacity(self.len());
        for k in 1..=self.n() {
            let bit = 1u32 << (k - 1);
            if self.pos & bit != 0 {
                v.push(k as i32);
            }
            if self.neg & bit != 0 {
                v.push(-(k as i32));
            }
        }
        v.sort_unstable();
        v
    }

    /// The lattice vector e_S, with e_ī = -e_i.
    pub fn e_vector(&self) -> Vec<i64> {
        (0..self.n())
            .map(|k| {
                let bit = 1u32 << k;
                if self.pos & bit != 0 {
                    1
                } else if self.neg & bit != 0 {
                    -1
                } else {
                    0
                }
            })
            .collect()
    }

    /// ⟨x, e_S⟩ for an integer vector.
    pub fn pair_i64(&self, x: &[i64]) -> i64 {
        let mut s = 0;
        for (k, v) in x.iter().enumerate().take(self.n()) {
            let bit = 1u32 << k;
            if self.pos & bit != 0 {
                s += v;
            } else if self.neg & bit != 0 {
                s -= v;
            }
        }
        s
    }

    /// Base-3 code: digit 1 for i, 2 for ī. Dense index for ray tables.
    pub fn code(&self) -> usize {
        let mut c = 0usize;
        for k in (0..self.n()).rev() {
            let bit = 1u32 << k;
            c *= 3;
            if self.pos & bit != 0 {
                c += 1;
            } else if self.neg & bit != 0 {
                c += 2;
            }
        }
        c
    }
}

impl fmt::Display for AdmissibleSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .to_signed()
            .into_iter()
            .map(|e| SignedIndex::from_i32(e).map(|s| s.to_string()).unwrap_or_default())
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// All admissible sets of size k, in canonical order.
pub fn enumerate_ads(n: usize, k: usize) -> Result<Vec<AdmissibleSet>> {
    limits::check("admissible-set enumeration", n, limits::GROUP)?;
    let mut out = Vec::new();
    if k > n {
        return Ok(out);
    }
    let full = full_mask(n);
    for pos in 0..=full {
        let rest = full & !pos;
        let need = k as i64 - pos.count_ones() as i64;
        if need < 0 {
            continue;
        }
        let mut neg = rest;
        loop {
            let sub = neg;
            if sub.count_ones() as i64 == need {
                out.push(AdmissibleSet { n: n as u8, pos, neg: sub });
            }
            if sub == 0 {
                break;
            }
            neg = (neg - 1) & rest;
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All 3ⁿ − 1 nonempty admissible sets, in canonical order.
pub fn nonempty_ads(n: usize) -> Result<Vec<AdmissibleSet>> {
    let mut out = Vec::new();
    for k in 1..=n {
        out.extend(enumerate_ads(n, k)?);
    }
    out.sort_unstable();
    Ok(out)
}

/// The 2ⁿ maximal admissible sets, ordered by B ∩ [n].
pub fn maximal_ads(n: usize) -> Vec<AdmissibleSet> {
    (0..=full_mask(n)).map(|x| AdmissibleSet::maximal(n, x)).collect()
}

fn check_gale_args(a: &AdmissibleSet, b: &AdmissibleSet) -> Result<()> {
    if a.n != b.n {
        return invalid("Gale comparison of sets on different ground sizes");
    }
    if !a.is_maximal() || !b.is_maximal() {
        return invalid("Gale order is defined on maximal admissible sets");
    }
    Ok(())
}

/// Gale order, elementwise form.
pub fn gale_leq(a: &AdmissibleSet, b: &AdmissibleSet) -> Result<bool> {
    check_gale_args(a, b)?;
    Ok(a.to_signed().iter().zip(b.to_signed()).all(|(x, y)| *x <= y))
}

/// Gale order via the segments {i, ..., n}.
pub fn gale_leq_segments(a: &AdmissibleSet, b: &AdmissibleSet) -> Result<bool> {
    check_gale_args(a, b)?;
    let n = a.n();
    Ok((1..=n).all(|i| {
        let seg = full_mask(n) & !full_mask(i - 1);
        (a.pos & seg).count_ones() <= (b.pos & seg).count_ones()
    }))
}

/// Element of the hyperoctahedral group, stored as the images of 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    images: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation { images: (1..=n as i32).collect() }
    }

    pub fn from_images(images: Vec<i32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &v in &images {
            let k = v.unsigned_abs() as usize;
            if v == 0 || k > n || seen[k] {
                return invalid(format!("images {images:?} do not define a signed permutation"));
            }
            seen[k] = true;
        }
        Ok(SignedPermutation { images })
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[i32] {
        &self.images
    }

    /// w(x) for x ∈ [n, n̄] as a signed integer; w(0) = 0.
    pub fn apply(&self, x: i32) -> i32 {
        match x.cmp(&0) {
            std::cmp::Ordering::Greater => self.images[(x - 1) as usize],
            std::cmp::Ordering::Less => -self.images[(-x - 1) as usize],
            std::cmp::Ordering::Equal => 0,
        }
    }

    /// (self ∘ other)(x) = self(other(x)).
    pub fn compose(&self, other: &Self) -> Self {
        SignedPermutation { images: other.images.iter().map(|&x| self.apply(x)).collect() }
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (k, &v) in self.images.iter().enumerate() {
            let src = (k + 1) as i32;
            if v > 0 {
                inv[(v - 1) as usize] = src;
            } else {
                inv[(-v - 1) as usize] = -src;
            }
        }
        SignedPermutation { images: inv }
    }

    /// ε_i(w) = +1 iff i ∈ w([n]).
    pub fn epsilon(&self, i: usize) -> i32 {
        if self.images.contains(&(i as i32)) {
            1
        } else {
            -1
        }
    }

    /// w([n]) as a maximal admissible set.
    pub fn positive_image(&self) -> AdmissibleSet {
        self.chain(self.n())
    }

    /// {w(1), ..., w(k)}.
    pub fn chain(&self, k: usize) -> AdmissibleSet {
        let (mut pos, mut neg) = (0u32, 0u32);
        for &v in &self.images[..k] {
            if v > 0 {
                pos |= 1 << (v - 1);
            } else {
                neg |= 1 << (-v - 1);
            }
        }
        AdmissibleSet { n: self.n() as u8, pos, neg }
    }

    pub fn descent_count(&self) -> usize {
        let mut prev = 0;
        let mut d = 0;
        for &v in &self.images {
            if prev > v {
                d += 1;
            }
            prev = v;
        }
        d
    }

    /// τ_{i,i+1} = (i, i+1)(ī, i+1̄), for 1 ≤ i < n.
    pub fn tau_adjacent(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return invalid(format!("τ_{{{i},{}}} needs 1 ≤ i < n = {n}", i + 1));
        }
        let mut w = SignedPermutation::identity(n);
        w.images.swap(i - 1, i);
        Ok(w)
    }

    /// τ_n = (n, n̄).
    pub fn tau_last(n: usize) -> Result<Self> {
        if n == 0 {
            return invalid("τ_n needs n ≥ 1");
        }
        let mut w = SignedPermutation::identity(n);
        w.images[n - 1] = -(n as i32);
        Ok(w)
    }

    /// The sign change flipping the coordinates in `mask`.
    pub fn sign_change(n: usize, mask: u32) -> Self {
        let images = (0..n)
            .map(|k| if mask & (1 << k) != 0 { -(k as i32 + 1) } else { k as i32 + 1 })
            .collect();
        SignedPermutation { images }
    }

    /// w·τ_{i,i+1}: swap positions i, i+1.
    pub fn times_tau_adjacent(&self, i: usize) -> Self {
        let mut w = self.clone();
        w.images.swap(i - 1, i);
        w
    }

    /// w·τ_n: negate the last image.
    pub fn times_tau_last(&self) -> Self {
        let mut w = self.clone();
        let n = w.n();
        w.images[n - 1] = -w.images[n - 1];
        w
    }

    /// w̄: k ↦ bar(w(k)). Its chain is the complement-bar of w's chain.
    pub fn bar_images(&self) -> Self {
        SignedPermutation { images: self.images.iter().map(|v| -v).collect() }
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// {w(i) : i ∈ S}.
pub fn weyl_act(w: &SignedPermutation, s: &AdmissibleSet) -> Result<AdmissibleSet> {
    if w.n() != s.n() {
        return invalid("permutation and set have different ground sizes");
    }
    let (mut pos, mut neg) = (0u32, 0u32);
    for e in s.to_signed() {
        let v = w.apply(e);
        if v > 0 {
            pos |= 1 << (v - 1);
        } else {
            neg |= 1 << (-v - 1);
        }
    }
    AdmissibleSet::new(s.n(), pos, neg)
}

fn permutations(n: usize) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    let mut cur: Vec<i32> = (1..=n as i32).collect();
    loop {
        out.push(cur.clone());
        // next lexicographic permutation
        let Some(i) = (1..cur.len()).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..cur.len()).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

/// All 2ⁿ·n! signed permutations: underlying permutations in lex order, then sign masks.
pub fn enumerate_group(n: usize) -> Result<Vec<SignedPermutation>> {
    limits::check("group enumeration", n, limits::GROUP)?;
    let mut out = Vec::new();
    for p in permutations(n) {
        for mask in 0..(1u32 << n) {
            let images = p
                .iter()
                .enumerate()
                .map(|(k, &v)| if mask & (1 << k) != 0 { -v } else { v })
                .collect();
            out.push(SignedPermutation { images });
        }
    }
    Ok(out)
}

/// The group together with an index lookup, shared per n.
#[derive(Debug)]
pub struct Group {
    n: usize,
    elements: Vec<SignedPermutation>,
    index: HashMap<Vec<i32>, usize>,
}

impl Group {
    pub fn n(&self) -> usize {
        self.n
    }
    pub fn elements(&self) -> &[SignedPermutation] {
        &self.elements
    }
    pub fn len(&self) -> usize {
        self.elements.len()
    }
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
    pub fn index_of(&self, w: &SignedPermutation) -> usize {
        self.index[&w.images]
    }
}

pub fn group(n: usize) -> Result<Arc<Group>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Group>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(g) = cache.lock().map_err(|_| Error::Internal("group cache poisoned".into()))?.get(&n) {
        return Ok(g.clone());
    }
    let elements = enumerate_group(n)?;
    let index = elements.iter().enumerate().map(|(k, w)| (w.images.clone(), k)).collect();
    let g = Arc::new(Group { n, elements, index });
    cache
        .lock()
        .map_err(|_| Error::Internal("group cache poisoned".into()))?
        .insert(n, g.clone());
    Ok(g)
}

/// Histogram of descent counts, the B_n Eulerian numbers.
pub fn eulerian_b(n: usize) -> Result<Vec<u64>> {
    let mut h = vec![0u64; n + 1];
    for w in enumerate_group(n)? {
        h[w.descent_count()] += 1;
    }
    Ok(h)
}
