//! Exact dense linear algebra over a field, plus a mod-p variant.



use crate::Coeff;

pub type Matrix<C> = Vec<Vec<C>>;

/// Row-reduce in place; returns the pivot columns.
fn eliminate<C: Coeff>(m: &mut Matrix<C>) -> Vec<usize> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = C::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone();
                    if !v.is_zero() {
                        m[i][j] = m[i][j].clone() - f.clone() * v;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<C: Coeff>(m: &Matrix<C>) -> usize {
    let mut a = m.clone();
    eliminate(&mut a).len()
}

/// Inverse of a square matrix, or None when singular.
pub fn inverse<C: Coeff>(m: &Matrix<C>) -> Option<Matrix<C>> {
    let n = m.len();
    let mut a: Matrix<C> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { C::one() } else { C::zero() }));
            r
        })
        .collect();
    let piv = eliminate(&mut a);
    if piv.len() < n || piv[n - 1] != n - 1 {
        return None;
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Unique solution of A x = b, or None when A is singular.
pub fn solve<C: Coeff>(a: &Matrix<C>, b: &[C]) -> Option<Vec<C>> {
    let n = a.len();
    let mut m: Matrix<C> = a
        .iter()
        .zip(b)
        .map(|(row, v)| {
            let mut r = row.clone();
            r.push(v.clone());
            r
        })
        .collect();
    let piv = eliminate(&mut m);
    if piv.len() != n || piv.iter().enumerate().any(|(i, &c)| c != i) {
        return None;
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

pub fn mat_vec<C: Coeff>(a: &Matrix<C>, x: &[C]) -> Vec<C> {
    a.iter()
        .map(|row| {
            row.iter().zip(x).fold(C::zero(), |s, (p, q)| if p.is_zero() { s } else { s + p.clone() * q.clone() })
        })
        .collect()
}

/// Characteristic polynomial det(λI − A), coefficients from λ⁰ up to λⁿ.
/// Division-free (Berkowitz-style via Samuelson recursion).
pub fn char_poly<C: Coeff>(a: &Matrix<C>) -> Vec<C> {
    let n = a.len();
    // p holds det(λI − A_k) for the leading k×k block, low-to-high.
    let mut p: Vec<C> = vec![C::one()];
    for k in 0..n {
        // Samuelson: block [[A_k, c],[r, a_kk]].
        let akk = a[k][k].clone();
        let r: Vec<C> = a[k][..k].to_vec();
        let c: Vec<C> = (0..k).map(|i| a[i][k].clone()).collect();
        // q_j = r A_k^j c for j = 0..k-1
        let mut qs: Vec<C> = Vec::with_capacity(k);
        let mut v = c.clone();
        for _ in 0..k {
            qs.push(r.iter().zip(&v).fold(C::zero(), |s, (x, y)| s + x.clone() * y.clone()));
            let block: Matrix<C> = (0..k).map(|i| a[i][..k].to_vec()).collect();
            v = mat_vec(&block, &v);
        }
        // new(λ) = (λ − a_kk) p(λ) − Σ_{j} q_j · S_j(λ),
        // where S_j(λ) = Σ_{m} coefficient expansion of adj; use the identity
        // r adj(λI−A_k) c = Σ_{j=0}^{k-1} q_j · Σ_{i=j+1}^{k} p_i λ^{i-j-1}.
        let mut new = vec![C::zero(); k + 2];
        for (i, pi) in p.iter().enumerate() {
            new[i + 1] = new[i + 1].clone() + pi.clone();
            new[i] = new[i].clone() - akk.clone() * pi.clone();
        }
        for (j, qj) in qs.iter().enumerate() {
            if qj.is_zero() {
                continue;
            }
            for i in (j + 1)..=k {
                let e = i - j - 1;
                new[e] = new[e].clone() - qj.clone() * p[i].clone();
            }
        }
        p = new;
    }
    p
}

/// Number of sign changes in a coefficient sequence (zeros skipped).
pub fn sign_variations<C: Coeff>(coeffs: &[C]) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        let pos = *c > C::zero();
        if let Some(l) = last {
            if l != pos {
                count += 1;
            }
        }
        last = Some(pos);
    }
    count
}

/// Positive eigenvalues of a real symmetric matrix, counted exactly by Descartes'
/// rule on its characteristic polynomial (exact because every root is real).
pub fn positive_eigenvalue_count<C: Coeff>(a: &Matrix<C>) -> usize {
    sign_variations(&char_poly(a))
}

pub fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

pub fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

/// Rank over F_p (p prime).
pub fn rank_mod_p(m: &[Vec<u64>], p: u64) -> usize {
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = mod_inv(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = ((*x as u128 + (p - f) as u128 * y as u128) % p as u128) as u64;
                    }
                }
            }
        }
        r += 1;
    }
    r
}

/// Whether a square matrix is nonsingular over F_p.
pub fn nonsingular_mod_p(m: &[Vec<u64>], p: u64) -> bool {
    rank_mod_p(m, p) == m.len()
}
