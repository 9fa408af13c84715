//! Interlace, U- and Tutte polynomials.

use std::collections::HashMap;

use crate::deltamatroid::DeltaMatroid;
use crate::ground::full_mask;
use crate::matroid::Matroid;
use crate::poly::q;
use crate::QPoly;

/// Histogram of d(Y) over Y ⊆ free, with the family projected onto `free`.
fn distance_histogram(d: &DeltaMatroid, free: u32) -> Vec<u64> {
    let mut proj: Vec<u32> = d.feasible().iter().map(|x| x & free).collect();
    proj.sort_unstable();
    proj.dedup();
    let mut hist = vec![0u64; free.count_ones() as usize + 1];
    let mut y = free;
    loop {
        let dist = proj.iter().map(|x| (x ^ y).count_ones()).min().unwrap();
        hist[dist as usize] += 1;
        if y == 0 {
            break;
        }
        y = (y - 1) & free;
    }
    hist
}

fn hist_poly(hist: &[u64], var: &str) -> QPoly {
    let coeffs: Vec<_> = hist.iter().map(|&c| q(c as i64)).collect();
    QPoly::from_univariate(var, &coeffs)
}

/// Int_D(v) = Σ_S v^{d(S)} over maximal admissible S.
pub fn interlace(d: &DeltaMatroid) -> QPoly {
    hist_poly(&distance_histogram(d, full_mask(d.n())), "v")
}

/// Interlace coefficients as integers.
pub fn interlace_coeffs(d: &DeltaMatroid) -> Vec<u64> {
    distance_histogram(d, full_mask(d.n()))
}

/// U_D(u, v) = Σ_I u^{|I|} Int_{D(I)}(v).
pub fn u_poly_explicit(d: &DeltaMatroid) -> QPoly {
    let full = full_mask(d.n());
    let mut total = QPoly::zero();
    let mut i = full;
    loop {
        let hist = distance_histogram(d, full & !i);
        let term = hist_poly(&hist, "v") * QPoly::monomial(q(1), &[("u", i.count_ones() as i32)]);
        total = total + term;
        if i == 0 {
            break;
        }
        i = (i - 1) & full;
    }
    total
}

pub fn u_var(i: usize) -> String {
    format!("u{i}")
}

/// U_D(u_1, …, u_n, v) = Σ_I u^I Int_{D(I)}(v), u_i keeping original labels.
pub fn u_poly_multi(d: &DeltaMatroid) -> QPoly {
    let n = d.n();
    let full = full_mask(n);
    let mut total = QPoly::zero();
    let names: Vec<String> = (1..=n).map(u_var).collect();
    let mut i = full;
    loop {
        let hist = distance_histogram(d, full & !i);
        let powers: Vec<(&str, i32)> =
            (0..n).filter(|k| i & (1 << k) != 0).map(|k| (names[k].as_str(), 1)).collect();
        total = total + hist_poly(&hist, "v") * QPoly::monomial(q(1), &powers);
        if i == 0 {
            break;
        }
        i = (i - 1) & full;
    }
    total
}

/// Set all u_i equal to u.
pub fn identify_u(multi: &QPoly, n: usize) -> QPoly {
    let b: Vec<(String, QPoly)> = (1..=n).map(|i| (u_var(i), QPoly::var("u"))).collect();
    let b: Vec<(&str, QPoly)> = b.iter().map(|(s, p)| (s.as_str(), p.clone())).collect();
    multi.substitute(&b).expect("polynomial substitution")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PivotOrder {
    First,
    Last,
}

/// U_D via the deletion/contraction/projection recursion.
pub fn u_poly_recursive(d: &DeltaMatroid, order: PivotOrder) -> QPoly {
    let mut memo = HashMap::new();
    recurse(d, order, &mut memo)
}

fn recurse(d: &DeltaMatroid, order: PivotOrder, memo: &mut HashMap<DeltaMatroid, QPoly>) -> QPoly {
    if d.n() == 0 {
        return QPoly::one();
    }
    if let Some(p) = memo.get(d) {
        return p.clone();
    }
    let i = match order {
        PivotOrder::First => 1,
        PivotOrder::Last => d.n(),
    };
    let bit = 1u32 << (i - 1);
    let is_loop = d.feasible().iter().all(|x| x & bit == 0);
    let is_coloop = d.feasible().iter().all(|x| x & bit != 0);
    let del = d.delete(i).expect("pivot in range");
    let out = if is_loop || is_coloop {
        let f = QPoly::var("u") + QPoly::var("v") + QPoly::one();
        f * recurse(&del, order, memo)
    } else {
        let con = d.contract(i).expect("pivot in range");
        let pro = d.project(i).expect("pivot in range");
        recurse(&del, order, memo) + recurse(&con, order, memo) + QPoly::var("u") * recurse(&pro, order, memo)
    };
    memo.insert(d.clone(), out.clone());
    out
}

/// Tutte polynomial T_M(x, y).
pub fn tutte(m: &Matroid) -> QPoly {
    m.tutte()
}

#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub interlace: QPoly,
    pub u_poly: QPoly,
    pub u_multi: QPoly,
}

pub fn invariant_report(d: &DeltaMatroid) -> InvariantReport {
    InvariantReport { interlace: interlace(d), u_poly: u_poly_explicit(d), u_multi: u_poly_multi(d) }
}

/// (u+1)^{n−r} T_M(u+2, (u+v+1)/(u+1)), denominators cleared termwise.
pub fn tutte_ip_form(m: &Matroid) -> QPoly {
    let t = tutte(m);
    let n = m.len() as i32;
    let r = m.rank() as i32;
    let u = QPoly::var("u");
    let one = QPoly::one();
    let tx = t.substitute(&[("x", u.clone() + q_const(2))]).expect("substitution");
    let num = u.clone() + QPoly::var("v") + one.clone();
    tx.substitute_fraction(&[("y", num)], &(u + one), n - r).expect("y-degree of T_M is at most n − r")
}

fn q_const(c: i64) -> QPoly {
    QPoly::constant(q(c))
}

/// Σ_{T⊆S⊆[n]} u^{|S−T|} v^{corank(S) + nullity(T)}.
pub fn base_polytope_double_sum(m: &Matroid) -> QPoly {
    let full = m.full_mask();
    let r = m.rank();
    let mut counts: HashMap<(i32, i32), i64> = HashMap::new();
    let ranks: Vec<usize> = (0..=full).map(|s| m.rank_of(s)).collect();
    for s in 0..=full {
        let mut t = s;
        loop {
            let a = (s.count_ones() - t.count_ones()) as i32;
            let b = (r - ranks[s as usize]) + (t.count_ones() as usize - ranks[t as usize]);
            *counts.entry((a, b as i32)).or_default() += 1;
            if t == 0 {
                break;
            }
            t = (t - 1) & s;
        }
    }
    let mut p = QPoly::zero();
    for ((a, b), c) in counts {
        p = p + QPoly::monomial(q(c), &[("u", a), ("v", b)]);
    }
    p
}

/// Σ_I a^{|I|} U_{D(I)}(u, v) and U_D(u + a, v).
pub fn projection_sum_sides(d: &DeltaMatroid) -> (QPoly, QPoly) {
    let full = full_mask(d.n());
    let mut lhs = QPoly::zero();
    let mut i = full;
    loop {
        let proj = d.project_many(i);
        lhs = lhs + u_poly_explicit(&proj) * QPoly::monomial(q(1), &[("a", i.count_ones() as i32)]);
        if i == 0 {
            break;
        }
        i = (i - 1) & full;
    }
    let rhs = u_poly_explicit(d)
        .substitute(&[("u", QPoly::var("u") + QPoly::var("a"))])
        .expect("substitution");
    (lhs, rhs)
}

#[derive(Clone, Debug)]
pub struct MatroidIdentityReport {
    pub ip_ok: bool,
    pub p_ok: bool,
    pub projection_sum_ok: bool,
    pub u_ip: QPoly,
    pub u_p: QPoly,
    pub mismatches: Vec<String>,
}

impl MatroidIdentityReport {
    pub fn passed(&self) -> bool {
        self.ip_ok && self.p_ok && self.projection_sum_ok
    }
}

/// Check the independence- and base-polytope closed forms and the projection sum.
pub fn check_matroid_identities(m: &Matroid) -> crate::Result<MatroidIdentityReport> {
    let ip = DeltaMatroid::from_independents(m)?;
    let p = DeltaMatroid::from_bases(m)?;
    let u_ip = u_poly_explicit(&ip);
    let u_p = u_poly_explicit(&p);
    let ip_form = tutte_ip_form(m);
    let p_form = base_polytope_double_sum(m);
    let (l1, r1) = projection_sum_sides(&ip);
    let (l2, r2) = projection_sum_sides(&p);
    let mut mismatches = Vec::new();
    let ip_ok = u_ip == ip_form;
    if !ip_ok {
        mismatches.push(format!("U_IP = {u_ip} but Tutte form = {ip_form}"));
    }
    let p_ok = u_p == p_form;
    if !p_ok {
        mismatches.push(format!("U_P = {u_p} but double sum = {p_form}"));
    }
    let projection_sum_ok = l1 == r1 && l2 == r2;
    if !projection_sum_ok {
        mismatches.push("projection sum identity fails".into());
    }
    Ok(MatroidIdentityReport { ip_ok, p_ok, projection_sum_ok, u_ip, u_p, mismatches })
}
