//! `deltoid`: command-line front end.
//!
//! Exit status: 0 when every check passes, 1 when a mathematical violation is
//! found (the report carries a witness), 2 for usage or input errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use deltoid::deltamatroid::{enumerate_deltamatroids, exchange_witness, DeltaMatroid};
use deltoid::envelope::{find_envelope, Strategy};
use deltoid::fixtures;
use deltoid::ground::AdmissibleSet;
use deltoid::invariants::{interlace, interlace_coeffs, u_poly_explicit, u_poly_multi};
use deltoid::io::{self, DmSource};
use deltoid::localization::{check_enveloping, check_interlace, check_isotropic, check_restriction, hrr_check, verify_identities};
use deltoid::logconc::{corollary_checks, corollary_checks_from_u, flawless_scan, lorentzian_suite, SequenceCheck};
use deltoid::polyhedra::{delta_decompose, lattice_count, lattice_count_formula, volume, volume_oracle, BnPolytope, LatticeConvention};
use deltoid::represent::{adjacency_delta, circ_uniform_interlace_reduced, circ_uniform_u_poly, delta_from_isotropic, Graph};
use deltoid::schubert::{all_schubert, coloop_free_schubert_census, schubert_decompose, verify_indicator};
use deltoid::suite::{run_all, run_suite, SuiteConfig, SUITES};
use deltoid::{Error, Rational};

#[derive(Parser, Debug)]
#[command(name = "deltoid", version, about = "Exact computations with delta-matroids and type-B generalized permutohedra")]
struct Cli {
    /// Output mode.
    #[arg(long, value_enum, global = true, default_value_t = Output::Json)]
    output: Output,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Human,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check that a document describes a valid object.
    Validate { file: PathBuf },
    /// U-polynomial of a delta-matroid.
    Upoly {
        file: PathBuf,
        /// One variable u_i per element.
        #[arg(long)]
        multi: bool,
    },
    /// Interlace polynomial of a delta-matroid.
    Interlace { file: PathBuf },
    /// Normalized volume, via signed transversals.
    Volume {
        file: PathBuf,
        /// Also compute the Ehrhart interpolation oracle.
        #[arg(long)]
        check: bool,
    },
    /// Signed Minkowski decomposition into simplices.
    Decompose { file: PathBuf },
    /// Lattice points by enumeration and by the binomial formula.
    LatticeCount { file: PathBuf },
    #[command(subcommand)]
    Schubert(SchubertCmd),
    /// Delta-matroid of the adjacency matrix of a graph.
    FromGraph { file: PathBuf },
    /// Delta-matroid of an isotropic matrix.
    FromMatrix { file: PathBuf },
    /// Find an enveloping matroid.
    Envelope {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Construction::Auto)]
        construction: Construction,
        /// Matrix document, for --construction rep.
        #[arg(long)]
        matrix: Option<PathBuf>,
    },
    /// Run identity checks or whole property suites.
    Verify {
        /// hrr | interlace | isotropic | enveloping | restriction | identities, or a suite name.
        which: Option<String>,
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Every delta-matroid up to --n (or every suite when no check is named).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Log-concavity and Lorentzian checks.
    Logconc {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = LogSuite::Lorentzian)]
        suite: LogSuite,
        /// For flawless scans: all delta-matroids (`all`) or adjacency delta-matroids (`graphs`) up to --n.
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// List the fixture catalog, print one fixture, or write all of them.
    Fixtures {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum SchubertCmd {
    /// Indicator-function decomposition into Schubert pieces.
    Decompose {
        file: PathBuf,
        /// Verify the combination against the input.
        #[arg(long)]
        check: bool,
    },
    /// Coloop-free Schubert delta-matroids by cornered rank.
    Census { n: usize },
    /// All Schubert delta-matroids on [n].
    List { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Construction {
    Auto,
    Base,
    Indep,
    Search,
    Rep,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum LogSuite {
    Lorentzian,
    Corollaries,
    Flawless,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    All,
    Graphs,
}

/// Failure modes mapped onto exit codes.
enum Fail {
    Usage(String),
    Violation(Value),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Run = Result<(bool, Value), Fail>;

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))
}

fn at<T>(path: &Path, r: deltoid::Result<T>) -> Result<T, Fail> {
    r.map_err(|e| match e {
        Error::NotADeltaMatroid(_) | Error::NotAMatroid(_) => Fail::Violation(json!({
            "format": io::FORMAT,
            "file": path.display().to_string(),
            "valid": false,
            "error": e.to_string(),
        })),
        _ => Fail::Usage(format!("{}: {e}", path.display())),
    })
}

fn load_source(path: &Path) -> Result<DmSource, Fail> {
    let text = read(path)?;
    if let Ok(v) = serde_json::from_str::<Value>(&text) {
        // spell out the exchange failure for invalid explicit families
        if v.get("kind").is_none() {
            if let (Some(n), Some(sets)) = (v["n"].as_u64(), v["feasible"].as_array()) {
                if let Some(w) = exchange_failure(n as usize, sets) {
                    return Err(Fail::Violation(w));
                }
            }
        }
    }
    at(path, io::read_dm_source(&text))
}

fn exchange_failure(n: usize, sets: &[Value]) -> Option<Value> {
    let mut fam = Vec::new();
    for s in sets {
        let elems: Vec<i32> = s.as_array()?.iter().map(|x| x.as_i64().map(|v| v as i32)).collect::<Option<_>>()?;
        let a = AdmissibleSet::from_signed(n, &elems).ok()?;
        if !a.is_maximal() {
            return None;
        }
        fam.push(a.pos());
    }
    fam.sort_unstable();
    fam.dedup();
    let (x, y, i) = exchange_witness(n, &fam)?;
    let show = |b: u32| AdmissibleSet::maximal(n, b).to_signed();
    Some(json!({
        "format": io::FORMAT,
        "valid": false,
        "error": "symmetric exchange fails",
        "witness": { "x": show(x), "y": show(y), "element": i + 1 },
    }))
}

fn load_dm(path: &Path) -> Result<DeltaMatroid, Fail> {
    let src = load_source(path)?;
    at(path, src.explicit())
}

fn load_polytope(path: &Path) -> Result<BnPolytope, Fail> {
    let text = read(path)?;
    at(path, io::read_polytope(&text))
}

fn doc(text: String) -> Value {
    serde_json::from_str(&text).expect("documents are JSON")
}

fn rat(x: &Rational) -> Value {
    io::number_value(x)
}

fn seq_json(s: &SequenceCheck) -> Value {
    json!({
        "name": s.name,
        "values": s.values.iter().map(rat).collect::<Vec<_>>(),
        "passed": s.failure.is_none(),
        "failure": s.failure.as_ref().map(|f| format!("{f:?}")),
    })
}

fn validate(path: &Path) -> Run {
    let text = read(path)?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| Fail::Usage(format!("{}: {e}", path.display())))?;
    let kind = if v.get("feasible").is_some() || v.get("kind").is_some() {
        "delta-matroid"
    } else if v.get("bases").is_some() {
        "matroid"
    } else if v.get("support").is_some() {
        "polytope"
    } else if v.get("edges").is_some() {
        "graph"
    } else if v.get("rows").is_some() {
        "matrix"
    } else {
        return Err(Fail::Usage(format!("{}: cannot tell what kind of document this is", path.display())));
    };
    let summary = match kind {
        "delta-matroid" => {
            let s = load_source(path)?;
            match &s {
                DmSource::Explicit(d) => json!({ "n": d.n(), "feasible_sets": d.feasible().len(), "even": d.is_even() }),
                DmSource::CircUniform { r, n } => json!({ "n": n, "generator": "circ_uniform", "r": r }),
            }
        }
        "matroid" => {
            let m = at(path, io::read_matroid(&text))?;
            json!({ "rank": m.rank(), "ground": m.ground(), "bases": m.bases().len() })
        }
        "polytope" => match io::read_polytope(&text) {
            Ok(p) => json!({ "n": p.n(), "lattice": p.is_lattice() }),
            Err(e @ Error::Parse(_)) => return Err(Fail::Usage(format!("{}: {e}", path.display()))),
            Err(e) => {
                return Ok((false, json!({ "format": io::FORMAT, "kind": kind, "valid": false, "error": e.to_string() })));
            }
        },
        "graph" => {
            let g = at(path, io::read_graph(&text))?;
            json!({ "vertices": g.n, "edges": g.edges.len() })
        }
        _ => {
            let m = at(path, io::read_matrix(&text))?;
            json!({ "p": m.p, "rows": m.n_rows(), "columns": m.n_cols(), "rank": m.rank() })
        }
    };
    Ok((true, json!({ "format": io::FORMAT, "kind": kind, "valid": true, "summary": summary })))
}

fn upoly(path: &Path, multi: bool) -> Run {
    let p = match load_source(path)? {
        DmSource::CircUniform { r, n } if !multi => circ_uniform_u_poly(r, n)?,
        src => {
            let d = at(path, src.explicit())?;
            if multi {
                u_poly_multi(&d)
            } else {
                u_poly_explicit(&d)
            }
        }
    };
    Ok((true, doc(io::write_poly(&p))))
}

fn interlace_cmd(path: &Path) -> Run {
    let coeffs: Vec<String> = match load_source(path)? {
        DmSource::CircUniform { r, n } => circ_uniform_interlace_reduced(r, n)?.iter().map(|c| c.to_string()).collect(),
        DmSource::Explicit(d) => interlace_coeffs(&d).iter().map(|c| c.to_string()).collect(),
    };
    let mut out = json!({ "format": io::FORMAT, "coefficients": coeffs });
    if let DmSource::Explicit(d) = load_source(path)? {
        out["polynomial"] = json!(io::poly_doc(&interlace(&d)));
    }
    Ok((true, out))
}

fn volume_cmd(path: &Path, check: bool) -> Run {
    let p = load_polytope(path)?;
    let v = volume(&delta_decompose(&p)?)?;
    let mut out = json!({ "format": io::FORMAT, "n": p.n(), "volume": rat(&v) });
    let mut ok = true;
    if check {
        let o = volume_oracle(&p)?;
        ok = o == v;
        out["ehrhart_volume"] = rat(&o);
        out["agree"] = json!(ok);
    }
    Ok((ok, out))
}

fn lattice_cmd(path: &Path) -> Run {
    let p = load_polytope(path)?;
    if !p.is_lattice() {
        return Err(Fail::Usage(format!("{}: the polytope is not a lattice polytope", path.display())));
    }
    let brute = lattice_count(&p)?;
    // P = (P + □) − □
    let plus = delta_decompose(&p.add(&BnPolytope::cube(p.n())?)?)?;
    let multiset = lattice_count_formula(&plus, LatticeConvention::Multiset)?;
    let ordered = lattice_count_formula(&plus, LatticeConvention::OrderedPsi)?;
    let ok = multiset == brute.into();
    Ok((
        ok,
        json!({
            "format": io::FORMAT,
            "lattice_points": brute,
            "formula_multiset": multiset.to_string(),
            "formula_ordered_psi": ordered.to_string(),
            "agree": ok,
        }),
    ))
}

fn schubert(cmd: &SchubertCmd, seed: u64) -> Run {
    match cmd {
        SchubertCmd::Decompose { file, check } => {
            let p = load_polytope(file)?;
            let c = schubert_decompose(&p)?;
            let mut out = doc(io::write_indicator(&c)?);
            let mut ok = true;
            if *check {
                let r = verify_indicator(&c, Some(&p), seed)?;
                ok = r.passed();
                out["verification"] = json!({
                    "grid_points": r.grid_points,
                    "random_points": r.random_points,
                    "grid_ok": r.grid_ok,
                    "random_ok": r.random_ok,
                    "valuative_ok": r.valuative_ok,
                    "first_mismatch": r.first_mismatch,
                });
            }
            Ok((ok, out))
        }
        SchubertCmd::Census { n } => {
            let c = coloop_free_schubert_census(*n)?;
            Ok((
                c.matches(),
                json!({ "format": io::FORMAT, "n": n, "counts": c.counts, "eulerian": c.eulerian, "schubert_total": c.schubert_total }),
            ))
        }
        SchubertCmd::List { n } => {
            let all = all_schubert(*n)?;
            let list: Vec<Value> = all.iter().map(|d| json!(d.to_signed())).collect();
            Ok((true, json!({ "format": io::FORMAT, "n": n, "count": list.len(), "feasible_families": list })))
        }
    }
}

fn envelope_cmd(path: &Path, construction: Construction, matrix: Option<&Path>) -> Run {
    let d = load_dm(path)?;
    let strategy = match construction {
        Construction::Auto => Strategy::Auto,
        Construction::Base => Strategy::Base,
        Construction::Indep => Strategy::Indep,
        Construction::Search => Strategy::Search,
        Construction::Rep => {
            let m = matrix.ok_or_else(|| Fail::Usage("--construction rep needs --matrix".into()))?;
            Strategy::Rep(at(m, io::read_matrix(&read(m)?))?)
        }
    };
    match find_envelope(&d, &strategy)? {
        Some(w) => {
            let mut out = doc(io::write_matroid(&w.matroid));
            out["construction"] = json!(w.construction);
            Ok((true, out))
        }
        None => Ok((false, json!({ "format": io::FORMAT, "found": false, "construction": format!("{construction:?}").to_lowercase() }))),
    }
}

fn identity_family(n: usize, all: bool, input: Option<&Path>) -> Result<Vec<DeltaMatroid>, Fail> {
    match (all, input) {
        (_, Some(p)) => Ok(vec![load_dm(p)?]),
        (true, None) => {
            let mut out = Vec::new();
            for k in 1..=n {
                out.extend(enumerate_deltamatroids(k)?);
            }
            Ok(out)
        }
        (false, None) => Err(Fail::Usage("give --all or --input".into())),
    }
}

fn verify(which: Option<&str>, n: usize, all: bool, input: Option<&Path>, seed: u64) -> Run {
    let cfg = SuiteConfig { n, seed };
    match which {
        None => {
            if !all {
                return Err(Fail::Usage("name a check or pass --all".into()));
            }
            let results = run_all(&cfg)?;
            let ok = results.iter().all(|r| r.passed);
            Ok((ok, json!({ "format": io::FORMAT, "n": n, "seed": seed, "passed": ok, "suites": results })))
        }
        Some(s) if SUITES.contains(&s) => {
            let r = run_suite(s, &cfg)?;
            Ok((r.passed, json!({ "format": io::FORMAT, "n": n, "seed": seed, "passed": r.passed, "suites": [r] })))
        }
        Some(check) => {
            let fam = identity_family(n, all, input)?;
            let mut failures = Vec::new();
            for d in &fam {
                let results: Vec<Value> = match check {
                    "hrr" => {
                        let h = hrr_check(&BnPolytope::from_deltamatroid(d)?)?;
                        vec![json!({ "name": "hrr", "passed": h.passed(), "detail": h })]
                    }
                    "interlace" => vec![json!(check_interlace(d)?)],
                    "isotropic" => vec![json!(check_isotropic(d)?)],
                    "enveloping" => vec![json!(check_enveloping(d)?)],
                    "restriction" => vec![json!(check_restriction(d)?)],
                    "identities" => verify_identities(d)?.checks.iter().map(|c| json!(c)).collect(),
                    other => {
                        return Err(Fail::Usage(format!(
                            "unknown check {other}; use hrr, interlace, isotropic, enveloping, restriction, identities or one of {}",
                            SUITES.join(", ")
                        )))
                    }
                };
                for r in results {
                    if r["passed"] != true {
                        failures.push(json!({ "dm": d.to_signed(), "n": d.n(), "check": r }));
                    }
                }
            }
            let ok = failures.is_empty();
            Ok((ok, json!({ "format": io::FORMAT, "check": check, "checked": fam.len(), "passed": ok, "failures": failures })))
        }
    }
}

fn logconc_cmd(file: Option<&Path>, suite: LogSuite, family: Option<Family>, n: usize) -> Run {
    match suite {
        LogSuite::Flawless => {
            let fam: Vec<DeltaMatroid> = match (family, file) {
                (Some(Family::All), _) => (1..=n).map(enumerate_deltamatroids).collect::<deltoid::Result<Vec<_>>>()?.concat(),
                (Some(Family::Graphs), _) => (1..=n)
                    .flat_map(Graph::all)
                    .map(|g| adjacency_delta(&g))
                    .collect::<deltoid::Result<_>>()?,
                (None, Some(p)) => vec![load_dm(p)?],
                (None, None) => return Err(Fail::Usage("give a file or --family".into())),
            };
            let r = flawless_scan(&fam)?;
            let counter: Vec<Value> = r
                .counterexamples
                .iter()
                .map(|(d, a)| json!({ "dm": d.to_signed(), "sequence": a.iter().map(rat).collect::<Vec<_>>() }))
                .collect();
            let mut out = json!({ "format": io::FORMAT, "suite": "flawless", "checked": r.checked, "counterexamples": counter });
            if fam.len() == 1 {
                out["sequence"] = deltoid::logconc::u_2u_minus_u(&fam[0])?.iter().map(rat).collect();
            }
            // a counterexample to a conjecture is reported, not a violation
            Ok((true, out))
        }
        LogSuite::Corollaries => {
            let path = file.ok_or_else(|| Fail::Usage("logconc --suite corollaries needs a file".into()))?;
            let r = match load_source(path)? {
                DmSource::CircUniform { r, n } => corollary_checks_from_u(&circ_uniform_u_poly(r, n)?, n, None)?,
                DmSource::Explicit(d) => {
                    let wit = find_envelope(&d, &Strategy::Auto).ok().flatten();
                    let mut rep = corollary_checks(&d, wit.as_ref())?;
                    rep.has_envelope = Some(wit.is_some());
                    rep
                }
            };
            let base = r.base.as_ref().map(|b| {
                json!({
                    "a_direct": b.direct.iter().map(rat).collect::<Vec<_>>(),
                    "a_from_u": b.from_u.iter().map(rat).collect::<Vec<_>>(),
                    "ultra_log_concave": b.ultra.is_none(),
                    "passed": b.passed(),
                })
            });
            Ok((
                r.passed(),
                json!({
                    "format": io::FORMAT,
                    "suite": "corollaries",
                    "n": r.n,
                    "has_envelope": r.has_envelope,
                    "interlace": r.interlace.iter().map(rat).collect::<Vec<_>>(),
                    "interlace_unimodal": r.interlace_unimodal,
                    "sequences": r.sequences.iter().map(seq_json).collect::<Vec<_>>(),
                    "base_polytope": base,
                    "passed": r.passed(),
                }),
            ))
        }
        LogSuite::Lorentzian => {
            let path = file.ok_or_else(|| Fail::Usage("logconc --suite lorentzian needs a file".into()))?;
            let d = load_dm(path)?;
            let s = lorentzian_suite(&d)?;
            let results: Vec<Value> = s
                .results
                .iter()
                .map(|(t, f, l, u)| {
                    json!({
                        "target": t.name(),
                        "polynomial": io::poly_doc(f),
                        "lorentzian": l.passed(),
                        "lorentzian_failure": l.failure.as_ref().map(|x| format!("{x:?}")),
                        "hessians_checked": l.hessians_checked,
                        "log_concave_unbroken": u.passed(),
                        "slice_witness": u.witness.as_ref().map(|(a, f)| json!({
                            "pair": [a.pair.0, a.pair.1],
                            "rest": a.rest,
                            "coefficients": a.coeffs.iter().map(rat).collect::<Vec<_>>(),
                            "failure": format!("{f:?}"),
                        })),
                    })
                })
                .collect();
            Ok((s.passed(), json!({ "format": io::FORMAT, "suite": "lorentzian", "results": results, "passed": s.passed() })))
        }
    }
}

fn fixtures_cmd(name: Option<&str>, out: Option<&Path>) -> Run {
    if let Some(dir) = out {
        fs::create_dir_all(dir).map_err(|e| Fail::Usage(format!("{}: {e}", dir.display())))?;
        let cat = fixtures::catalog()?;
        for f in &cat {
            let p = dir.join(format!("{}.json", f.name));
            fs::write(&p, &f.document).map_err(|e| Fail::Usage(format!("{}: {e}", p.display())))?;
        }
        return Ok((true, json!({ "format": io::FORMAT, "written": cat.len(), "directory": dir.display().to_string() })));
    }
    match name {
        Some(n) => Ok((true, doc(fixtures::get(n)?.document))),
        None => {
            let list: Vec<Value> = fixtures::catalog()?
                .iter()
                .map(|f| json!({ "name": f.name, "kind": f.kind.name(), "description": f.description }))
                .collect();
            Ok((true, json!({ "format": io::FORMAT, "fixtures": list })))
        }
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Upoly { file, multi } => upoly(file, *multi),
        Command::Interlace { file } => interlace_cmd(file),
        Command::Volume { file, check } => volume_cmd(file, *check),
        Command::Decompose { file } => {
            let p = load_polytope(file)?;
            Ok((true, doc(io::write_decomposition(&delta_decompose(&p)?))))
        }
        Command::LatticeCount { file } => lattice_cmd(file),
        Command::Schubert(cmd) => schubert(cmd, cli.seed),
        Command::FromGraph { file } => {
            let g = at(file, io::read_graph(&read(file)?))?;
            Ok((true, doc(io::write_dm(&adjacency_delta(&g)?))))
        }
        Command::FromMatrix { file } => {
            let m = at(file, io::read_matrix(&read(file)?))?;
            Ok((true, doc(io::write_dm(&delta_from_isotropic(&m)?))))
        }
        Command::Envelope { file, construction, matrix } => envelope_cmd(file, *construction, matrix.as_deref()),
        Command::Verify { which, n, all, input } => verify(which.as_deref(), *n, *all, input.as_deref(), cli.seed),
        Command::Logconc { file, suite, family, n } => logconc_cmd(file.as_deref(), *suite, *family, *n),
        Command::Fixtures { name, out } => fixtures_cmd(name.as_deref(), out.as_deref()),
    }
}

fn human(v: &Value) -> String {
    if let Some(suites) = v["suites"].as_array() {
        let mut lines: Vec<String> = suites
            .iter()
            .map(|s| {
                let mark = if s["passed"] == true { "PASS" } else { "FAIL" };
                format!("{mark} {} ({:.1}s): {}", s["suite"].as_str().unwrap_or("?"), s["seconds"].as_f64().unwrap_or(0.0), s["summary"].as_str().unwrap_or(""))
            })
            .collect();
        lines.push(format!("overall: {}", if v["passed"] == true { "pass" } else { "fail" }));
        return lines.join("\n");
    }
    if let Some(t) = v["text"].as_str() {
        return t.to_string();
    }
    serde_json::to_string_pretty(v).expect("serializable")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let print = |v: &Value| {
        let text = match cli.output {
            Output::Json => serde_json::to_string_pretty(v).expect("serializable"),
            Output::Human => human(v),
        };
        // a closed pipe is not an error worth reporting
        let _ = writeln!(std::io::stdout().lock(), "{text}");
    };
    match run(&cli) {
        Ok((ok, v)) => {
            print(&v);
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Fail::Violation(v)) => {
            print(&v);
            ExitCode::from(1)
        }
        Err(Fail::Usage(msg)) => {
            eprintln!("deltoid: {msg}");
            ExitCode::from(2)
        }
    }
}
