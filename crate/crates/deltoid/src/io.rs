//! JSON documents. Every document carries `"format": 1`; a missing field is read as 1.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::deltamatroid::DeltaMatroid;
use crate::error::{Error, Result};
use crate::ground::AdmissibleSet;
use crate::matroid::Matroid;
use crate::polyhedra::{rays, BnPolytope, DeltaDecomposition};
use crate::represent::{FqMatrix, Graph};
use crate::schubert::{IndicatorCombination, IndicatorTerm};
use crate::{QPoly, Rational};

pub const FORMAT: u32 = 1;

fn one() -> u32 {
    FORMAT
}

fn parse_err(what: &str, e: serde_json::Error) -> Error {
    Error::Parse(format!("{what}: {e}"))
}

fn check_format(what: &str, f: u32) -> Result<()> {
    if f != FORMAT {
        return Err(Error::Parse(format!("{what}: unsupported format {f}, expected {FORMAT}")));
    }
    Ok(())
}

fn from_str<'a, T: Deserialize<'a>>(what: &str, text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| parse_err(what, e))
}

fn to_string<T: Serialize>(doc: &T) -> String {
    serde_json::to_string_pretty(doc).expect("documents serialize")
}

/// Exact numbers travel as strings ("3", "-1/2"); plain JSON integers are accepted on input.
pub fn number_value(x: &Rational) -> Value {
    Value::String(x.to_string())
}

pub fn parse_rational(v: &Value, at: &str) -> Result<Rational> {
    match v {
        Value::String(s) => Rational::from_str(s.trim()).map_err(|_| Error::Parse(format!("{at}: bad number {s:?}"))),
        Value::Number(n) => match n.as_i64() {
            Some(k) => Ok(Rational::from_integer(BigInt::from(k))),
            None => Err(Error::Parse(format!("{at}: {n} is not an integer; write fractions as \"p/q\""))),
        },
        _ => Err(Error::Parse(format!("{at}: expected a number or a \"p/q\" string"))),
    }
}

pub fn parse_integer(v: &Value, at: &str) -> Result<BigInt> {
    let r = parse_rational(v, at)?;
    if !r.is_integer() {
        return Err(Error::Parse(format!("{at}: expected an integer, got {r}")));
    }
    Ok(r.to_integer())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeltaMatroidDoc {
    #[serde(default = "one")]
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<String>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible: Option<Vec<Vec<i32>>>,
    /// Rank parameter of a generated U°_{r,n}.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
}

/// A delta-matroid given explicitly or by a generator too large to list.
#[derive(Clone, Debug, PartialEq)]
pub enum DmSource {
    Explicit(DeltaMatroid),
    CircUniform { r: usize, n: usize },
}

impl DmSource {
    pub fn n(&self) -> usize {
        match self {
            DmSource::Explicit(d) => d.n(),
            DmSource::CircUniform { n, .. } => *n,
        }
    }

    /// Materialize the feasible sets (subject to the generator's own limits).
    pub fn explicit(&self) -> Result<DeltaMatroid> {
        match self {
            DmSource::Explicit(d) => Ok(d.clone()),
            DmSource::CircUniform { r, n } => crate::represent::circ_uniform(*r, *n),
        }
    }
}

pub fn dm_doc(d: &DeltaMatroid) -> DeltaMatroidDoc {
    DeltaMatroidDoc { format: FORMAT, kind: None, n: d.n(), feasible: Some(d.to_signed()), r: None }
}

pub fn write_dm(d: &DeltaMatroid) -> String {
    to_string(&dm_doc(d))
}

pub fn circ_doc(r: usize, n: usize) -> DeltaMatroidDoc {
    DeltaMatroidDoc { format: FORMAT, kind: Some("circ_uniform".into()), n, feasible: None, r: Some(r) }
}

pub fn read_dm_source(text: &str) -> Result<DmSource> {
    let doc: DeltaMatroidDoc = from_str("delta-matroid document", text)?;
    check_format("delta-matroid document", doc.format)?;
    match doc.kind.as_deref() {
        None | Some("explicit") => {
            let sets = doc
                .feasible
                .ok_or_else(|| Error::Parse("delta-matroid document: missing \"feasible\"".into()))?;
            for (k, s) in sets.iter().enumerate() {
                AdmissibleSet::from_signed(doc.n, s)
                    .map_err(|e| Error::Parse(format!("delta-matroid document: feasible[{k}]: {e}")))?;
            }
            Ok(DmSource::Explicit(DeltaMatroid::from_signed(doc.n, &sets)?))
        }
        Some("circ_uniform") => {
            let r = doc.r.ok_or_else(|| Error::Parse("circ_uniform document: missing \"r\"".into()))?;
            if r > doc.n {
                return Err(Error::Parse(format!("circ_uniform document: r = {r} exceeds n = {}", doc.n)));
            }
            Ok(DmSource::CircUniform { r, n: doc.n })
        }
        Some(k) => Err(Error::Parse(format!("delta-matroid document: unknown kind {k:?}"))),
    }
}

pub fn read_dm(text: &str) -> Result<DeltaMatroid> {
    read_dm_source(text)?.explicit()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatroidDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub ground: Vec<i32>,
    pub bases: Vec<Vec<i32>>,
}

pub fn write_matroid(m: &Matroid) -> String {
    to_string(&MatroidDoc { format: FORMAT, ground: m.ground().to_vec(), bases: m.bases_labels() })
}

pub fn read_matroid(text: &str) -> Result<Matroid> {
    let doc: MatroidDoc = from_str("matroid document", text)?;
    check_format("matroid document", doc.format)?;
    Matroid::new(doc.ground, &doc.bases)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GraphDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

pub fn write_graph(g: &Graph) -> String {
    to_string(&GraphDoc { format: FORMAT, n: g.n, edges: g.edges.clone() })
}

pub fn read_graph(text: &str) -> Result<Graph> {
    let doc: GraphDoc = from_str("graph document", text)?;
    check_format("graph document", doc.format)?;
    Graph::new(doc.n, &doc.edges)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub p: u64,
    pub rows: Vec<Vec<i64>>,
}

pub fn write_matrix(m: &FqMatrix) -> String {
    let rows = m.rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
    to_string(&MatrixDoc { format: FORMAT, p: m.p, rows })
}

pub fn read_matrix(text: &str) -> Result<FqMatrix> {
    let doc: MatrixDoc = from_str("matrix document", text)?;
    check_format("matrix document", doc.format)?;
    FqMatrix::new(doc.p, doc.rows)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SupportEntry {
    pub ray: Vec<i32>,
    pub value: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolytopeDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub n: usize,
    pub support: Vec<SupportEntry>,
}

fn support_entries(p: &BnPolytope) -> Result<Vec<SupportEntry>> {
    let r = rays(p.n())?;
    Ok(r.sets
        .iter()
        .zip(p.support_numbers())
        .map(|(s, h)| SupportEntry { ray: s.to_signed(), value: number_value(h) })
        .collect())
}

pub fn write_polytope(p: &BnPolytope) -> Result<String> {
    Ok(to_string(&PolytopeDoc { format: FORMAT, n: p.n(), support: support_entries(p)? }))
}

fn support_from_entries(n: usize, entries: &[SupportEntry], what: &str) -> Result<Vec<Rational>> {
    let r = rays(n)?;
    let mut h: Vec<Option<Rational>> = vec![None; r.len()];
    for (k, e) in entries.iter().enumerate() {
        let at = format!("{what}: support[{k}]");
        let s = AdmissibleSet::from_signed(n, &e.ray).map_err(|err| Error::Parse(format!("{at}: {err}")))?;
        if s.is_empty() {
            return Err(Error::Parse(format!("{at}: the empty set is not a ray")));
        }
        let i = r.index(&s);
        if h[i].is_some() {
            return Err(Error::Parse(format!("{at}: ray {:?} listed twice", e.ray)));
        }
        h[i] = Some(parse_rational(&e.value, &at)?);
    }
    h.into_iter()
        .zip(&r.sets)
        .map(|(v, s)| v.ok_or_else(|| Error::Parse(format!("{what}: missing ray {:?}", s.to_signed()))))
        .collect()
}

/// Reads and validates (submodularity on the ray table).
pub fn read_polytope(text: &str) -> Result<BnPolytope> {
    let doc: PolytopeDoc = from_str("polytope document", text)?;
    check_format("polytope document", doc.format)?;
    let h = support_from_entries(doc.n, &doc.support, "polytope document")?;
    BnPolytope::from_support(doc.n, h)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientEntry {
    pub set: Vec<i32>,
    pub c: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecompositionDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub n: usize,
    pub coefficients: Vec<CoefficientEntry>,
}

pub fn write_decomposition(d: &DeltaDecomposition) -> String {
    let coefficients = d
        .coeffs
        .iter()
        .map(|(s, c)| CoefficientEntry { set: s.to_signed(), c: Value::String(c.to_string()) })
        .collect();
    to_string(&DecompositionDoc { format: FORMAT, n: d.n, coefficients })
}

pub fn read_decomposition(text: &str) -> Result<DeltaDecomposition> {
    let doc: DecompositionDoc = from_str("decomposition document", text)?;
    check_format("decomposition document", doc.format)?;
    let mut coeffs = Vec::new();
    for (k, e) in doc.coefficients.iter().enumerate() {
        let at = format!("decomposition document: coefficients[{k}]");
        let s = AdmissibleSet::from_signed(doc.n, &e.set).map_err(|err| Error::Parse(format!("{at}: {err}")))?;
        if s.is_empty() {
            return Err(Error::Parse(format!("{at}: the empty set has no simplex term")));
        }
        coeffs.push((s, parse_integer(&e.c, &at)?));
    }
    Ok(DeltaDecomposition::from_coeffs(doc.n, coeffs))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermDoc {
    pub coeff: i64,
    pub translation: Vec<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub feasible: Option<Vec<Vec<i32>>>,
    pub support: Vec<SupportEntry>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndicatorDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

pub fn write_indicator(c: &IndicatorCombination) -> Result<String> {
    let mut terms = Vec::new();
    for t in &c.terms {
        terms.push(TermDoc {
            coeff: t.coeff,
            translation: t.translation.clone(),
            feasible: t.dm.as_ref().map(|d| d.to_signed()),
            support: support_entries(&t.polytope)?,
        });
    }
    Ok(to_string(&IndicatorDoc { format: FORMAT, n: c.n, terms }))
}

pub fn read_indicator(text: &str) -> Result<IndicatorCombination> {
    let doc: IndicatorDoc = from_str("indicator document", text)?;
    check_format("indicator document", doc.format)?;
    let mut terms = Vec::new();
    for (k, t) in doc.terms.iter().enumerate() {
        let what = format!("indicator document: terms[{k}]");
        if t.translation.len() != doc.n {
            return Err(Error::Parse(format!("{what}: translation has length {}", t.translation.len())));
        }
        let h = support_from_entries(doc.n, &t.support, &what)?;
        let dm = match &t.feasible {
            Some(f) => Some(DeltaMatroid::from_signed(doc.n, f)?),
            None => None,
        };
        terms.push(IndicatorTerm {
            coeff: t.coeff,
            translation: t.translation.clone(),
            polytope: BnPolytope::from_support_unchecked(doc.n, h)?,
            dm,
        });
    }
    Ok(IndicatorCombination { n: doc.n, terms })
}

/// Exponents are listed in the order of the document's `variables`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyTerm {
    pub exponents: Vec<i32>,
    pub coeff: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolynomialDoc {
    #[serde(default = "one")]
    pub format: u32,
    pub variables: Vec<String>,
    pub terms: Vec<PolyTerm>,
    /// Human-readable form; ignored on input.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

pub fn poly_doc(p: &QPoly) -> PolynomialDoc {
    let mut variables = p.used_vars();
    variables.sort();
    let terms = p
        .canonical_terms()
        .into_iter()
        .map(|(m, c)| {
            let exponents = variables
                .iter()
                .map(|v| m.iter().find(|(w, _)| w == v).map_or(0, |(_, e)| *e))
                .collect();
            PolyTerm { exponents, coeff: number_value(&c) }
        })
        .collect();
    PolynomialDoc { format: FORMAT, variables, terms, text: Some(p.to_string()) }
}

pub fn write_poly(p: &QPoly) -> String {
    to_string(&poly_doc(p))
}

pub fn poly_from_doc(doc: &PolynomialDoc) -> Result<QPoly> {
    check_format("polynomial document", doc.format)?;
    let mut out = QPoly::zero();
    for (k, t) in doc.terms.iter().enumerate() {
        let at = format!("polynomial document: terms[{k}]");
        if t.exponents.len() != doc.variables.len() {
            return Err(Error::Parse(format!("{at}: {} exponents for {} variables", t.exponents.len(), doc.variables.len())));
        }
        let c = parse_rational(&t.coeff, &at)?;
        let powers: Vec<(&str, i32)> = doc.variables.iter().map(|v| v.as_str()).zip(t.exponents.iter().copied()).collect();
        out = out + QPoly::monomial(c, &powers);
    }
    Ok(out)
}

pub fn read_poly(text: &str) -> Result<QPoly> {
    poly_from_doc(&from_str("polynomial document", text)?)
}
