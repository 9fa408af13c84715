//! Representations over prime fields: isotropic subspaces and the delta-matroids they define.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::deltamatroid::DeltaMatroid;
use crate::error::{invalid, Error, Result};
use crate::ground::full_mask;
use crate::linalg::{nonsingular_mod_p, rank_mod_p};
use crate::poly::binomial_int;

/// Quadratic space: D-type k^{2n} or B-type k^{2n+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormType {
    B,
    D,
}

/// Row-major matrix over F_p. Columns are ordered 1..n, 1̄..n̄, then 0 for B-type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FqMatrix {
    pub p: u64,
    pub rows: Vec<Vec<u64>>,
}

impl FqMatrix {
    pub fn new(p: u64, rows: Vec<Vec<i64>>) -> Result<Self> {
        if p < 2 || !is_prime(p) {
            return invalid(format!("{p} is not prime"));
        }
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return invalid("ragged matrix");
        }
        let pi = p as i64;
        let rows = rows.into_iter().map(|r| r.into_iter().map(|v| v.rem_euclid(pi) as u64).collect()).collect();
        Ok(FqMatrix { p, rows })
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.rows.first().map_or(0, |r| r.len())
    }

    /// Ground size n and form type inferred from the shape.
    pub fn shape(&self) -> Result<(usize, FormType)> {
        let n = self.n_rows();
        match self.n_cols() {
            c if c == 2 * n => Ok((n, FormType::D)),
            c if c == 2 * n + 1 => Ok((n, FormType::B)),
            c => invalid(format!("{n} rows need 2n or 2n+1 columns, got {c}")),
        }
    }

    /// Append a zero x₀ column.
    pub fn to_b_type(&self) -> FqMatrix {
        let rows = self.rows.iter().map(|r| r.iter().copied().chain([0]).collect()).collect();
        FqMatrix { p: self.p, rows }
    }

    /// Drop the x₀ column of a B-type matrix.
    pub fn forget_zero(&self) -> Result<FqMatrix> {
        match self.shape()? {
            (_, FormType::D) => Ok(self.clone()),
            (n, FormType::B) => {
                Ok(FqMatrix { p: self.p, rows: self.rows.iter().map(|r| r[..2 * n].to_vec()).collect() })
            }
        }
    }

    pub fn rank(&self) -> usize {
        rank_mod_p(&self.rows, self.p)
    }

    /// Left-multiply by an invertible matrix, for row-span invariance checks.
    pub fn left_mul(&self, g: &[Vec<u64>]) -> FqMatrix {
        let p = self.p;
        let rows = g
            .iter()
            .map(|gr| {
                (0..self.n_cols())
                    .map(|j| gr.iter().zip(&self.rows).fold(0, |a, (x, r)| (a + x * r[j]) % p))
                    .collect()
            })
            .collect();
        FqMatrix { p, rows }
    }
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

fn quad(u: &[u64], n: usize, form: FormType, p: u64) -> u64 {
    let mut s = (0..n).fold(0, |a, i| (a + u[i] * u[n + i]) % p);
    if form == FormType::B {
        s = (s + u[2 * n] * u[2 * n]) % p;
    }
    s
}

fn polar(u: &[u64], v: &[u64], n: usize, form: FormType, p: u64) -> u64 {
    let mut s = (0..n).fold(0, |a, i| (a + u[i] * v[n + i] + u[n + i] * v[i]) % p);
    if form == FormType::B {
        s = (s + 2 * u[2 * n] * v[2 * n]) % p;
    }
    s
}

/// q vanishes on the row span: q on every row and the polarization on every pair.
pub fn is_isotropic(l: &FqMatrix) -> Result<bool> {
    let (n, form) = l.shape()?;
    let p = l.p;
    for (a, u) in l.rows.iter().enumerate() {
        if quad(u, n, form, p) != 0 {
            return Ok(false);
        }
        for v in &l.rows[a + 1..] {
            if polar(u, v, n, form, p) != 0 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Maximal admissible S whose column selection is nonsingular.
pub fn delta_from_isotropic(l: &FqMatrix) -> Result<DeltaMatroid> {
    let (n, _) = l.shape()?;
    crate::limits::check("isotropic representation", n, crate::limits::MATROID_GROUND)?;
    if !is_isotropic(l)? {
        return invalid("row span is not isotropic");
    }
    if l.rank() != n {
        return invalid("representation does not have full row rank");
    }
    let mut fam = Vec::new();
    for x in 0..=full_mask(n) {
        let sub: Vec<Vec<u64>> = l
            .rows
            .iter()
            .map(|r| (0..n).map(|i| if x & (1 << i) != 0 { r[i] } else { r[n + i] }).collect())
            .collect();
        if nonsingular_mod_p(&sub, l.p) {
            fam.push(x);
        }
    }
    DeltaMatroid::from_bitsets(n, fam)
}

/// Simple graph on vertices 1..n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut es = Vec::new();
        for &(a, b) in edges {
            if a == b || a == 0 || b == 0 || a > n || b > n {
                return invalid(format!("bad edge ({a}, {b}) on {n} vertices"));
            }
            let e = (a.min(b), a.max(b));
            if es.contains(&e) {
                return invalid(format!("repeated edge ({a}, {b})"));
            }
            es.push(e);
        }
        es.sort_unstable();
        Ok(Graph { n, edges: es })
    }

    /// Every simple graph on n labelled vertices.
    pub fn all(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).collect();
        (0u64..1 << pairs.len())
            .map(|m| Graph {
                n,
                edges: pairs.iter().enumerate().filter(|(k, _)| m & (1 << k) != 0).map(|(_, e)| *e).collect(),
            })
            .collect()
    }

    pub fn path(n: usize) -> Graph {
        Graph { n, edges: (1..n).map(|i| (i, i + 1)).collect() }
    }

    /// [I_n | A_G] over F₂.
    pub fn adjacency_matrix(&self) -> FqMatrix {
        let n = self.n;
        let mut rows = vec![vec![0u64; 2 * n]; n];
        for (i, r) in rows.iter_mut().enumerate() {
            r[i] = 1;
        }
        for &(a, b) in &self.edges {
            rows[a - 1][n + b - 1] = 1;
            rows[b - 1][n + a - 1] = 1;
        }
        FqMatrix { p: 2, rows }
    }
}

pub fn adjacency_delta(g: &Graph) -> Result<DeltaMatroid> {
    delta_from_isotropic(&g.adjacency_matrix())
}

/// U°_{r,n}: positive parts of size ≤ r and of the parity of r.
pub fn circ_uniform(r: usize, n: usize) -> Result<DeltaMatroid> {
    if r > n {
        return invalid(format!("U°_{{{r},{n}}} needs r ≤ n"));
    }
    crate::limits::check("U°", n, crate::limits::MATROID_GROUND)?;
    let fam = (0..=full_mask(n)).filter(|x| {
        let k = x.count_ones() as usize;
        k <= r && k % 2 == r % 2
    });
    DeltaMatroid::from_bitsets(n, fam)
}

pub const CIRC_PRIME: u64 = 10007;

/// [[I_r, A | B, 0], [0, 0 | −Aᵗ, I_{n−r}]] with seeded random A and skew B over F_p.
pub fn circ_uniform_matrix(r: usize, n: usize, seed: u64) -> Result<FqMatrix> {
    if r > n {
        return invalid(format!("U°_{{{r},{n}}} needs r ≤ n"));
    }
    let p = CIRC_PRIME;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a: Vec<Vec<u64>> = (0..r).map(|_| (0..n - r).map(|_| rng.gen_range(0..p)).collect()).collect();
    let mut b = vec![vec![0u64; r]; r];
    for i in 0..r {
        for j in i + 1..r {
            let v = rng.gen_range(0..p);
            b[i][j] = v;
            b[j][i] = (p - v) % p;
        }
    }
    let mut rows = vec![vec![0u64; 2 * n]; n];
    for i in 0..r {
        rows[i][i] = 1;
        for j in 0..n - r {
            rows[i][r + j] = a[i][j];
        }
        for j in 0..r {
            rows[i][n + j] = b[i][j];
        }
    }
    for k in 0..n - r {
        let row = &mut rows[r + k];
        for i in 0..r {
            row[n + i] = (p - a[i][k]) % p;
        }
        row[n + r + k] = 1;
    }
    Ok(FqMatrix { p, rows })
}

#[derive(Clone, Debug)]
pub struct CircCheck {
    pub r: usize,
    pub n: usize,
    pub attempts: usize,
    pub matches: bool,
}

/// Compare circ_uniform with the delta-matroid of a random matrix realization,
/// retrying degenerate draws up to 16 times.
pub fn check_circ_uniform(r: usize, n: usize, seed: u64) -> Result<CircCheck> {
    let target = circ_uniform(r, n)?;
    for attempt in 0..16 {
        let l = circ_uniform_matrix(r, n, seed.wrapping_add(attempt as u64))?;
        if delta_from_isotropic(&l)? == target {
            return Ok(CircCheck { r, n, attempts: attempt + 1, matches: true });
        }
    }
    Ok(CircCheck { r, n, attempts: 16, matches: false })
}

/// Sizes j for which U°_{r,n} has feasible positive parts of size j.
fn circ_sizes(r: usize) -> Vec<usize> {
    (0..=r).filter(|k| k % 2 == r % 2).collect()
}

/// Interlace coefficients of U°_{r,n} through the size profile: a set with k
/// positive elements sits at distance min_j |k − j| from the family.
pub fn circ_uniform_interlace_reduced(r: usize, n: usize) -> Result<Vec<BigInt>> {
    if r > n {
        return invalid(format!("U°_{{{r},{n}}} needs r ≤ n"));
    }
    let sizes = circ_sizes(r);
    let mut out = vec![BigInt::from(0); n + 1];
    for k in 0..=n {
        let d = sizes.iter().map(|&j| j.abs_diff(k)).min().unwrap();
        out[d] += binomial_int(&BigInt::from(n), k as u32);
    }
    Ok(out)
}

/// Leading interlace coefficients of U°_{m−3,2m} by the binomial closed form.
pub fn circ_interlace_closed_form(m: usize) -> Result<[BigInt; 4]> {
    if m < 3 {
        return invalid("the closed form needs m ≥ 3");
    }
    let r = m - 3;
    let nn = BigInt::from(2 * m);
    let c = |k: usize| binomial_int(&nn, k as u32);
    let same: BigInt = (0..=r).filter(|i| i % 2 == r % 2).map(c).sum();
    let other: BigInt = (0..=r).filter(|i| i % 2 != r % 2).map(c).sum();
    Ok([same, other + c(m - 2), c(m - 1), c(m)])
}

/// Error helper for callers that want a hard failure on mismatch.
pub fn require_circ(check: &CircCheck) -> Result<()> {
    if check.matches {
        Ok(())
    } else {
        Err(Error::Internal(format!(
            "no realization of U°_{{{},{}}} found in {} draws",
            check.r, check.n, check.attempts
        )))
    }
}

/// U-polynomial of a delta-matroid whose feasible positive parts are exactly
/// the subsets of [n] with size in `sizes`. Projections stay symmetric, so
/// everything reduces to size profiles.
pub fn symmetric_u_poly(n: usize, sizes: &[usize]) -> crate::QPoly {
    use crate::QPoly;
    let nb = |a: usize, k: usize| binomial_int(&BigInt::from(a), k as u32);
    let mut total = QPoly::zero();
    for i in 0..=n {
        let m = n - i;
        let allowed: Vec<usize> = (0..=m).filter(|&k| sizes.iter().any(|&s| s >= k && s - k <= i)).collect();
        let mut int = vec![BigInt::from(0); m + 1];
        for k in 0..=m {
            let d = allowed.iter().map(|&j| j.abs_diff(k)).min().expect("nonempty family");
            int[d] += nb(m, k);
        }
        let c = nb(n, i);
        for (d, v) in int.into_iter().enumerate() {
            if v != BigInt::from(0) {
                let coeff = crate::Rational::from_integer(v * &c);
                total = total + QPoly::monomial(coeff, &[("u", i as i32), ("v", d as i32)]);
            }
        }
    }
    total
}

pub fn circ_uniform_u_poly(r: usize, n: usize) -> Result<crate::QPoly> {
    if r > n {
        return invalid(format!("U°_{{{r},{n}}} needs r ≤ n"));
    }
    Ok(symmetric_u_poly(n, &circ_sizes(r)))
}
