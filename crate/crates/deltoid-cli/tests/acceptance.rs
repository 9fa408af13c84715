//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use deltoid::suite::{run_suite, SuiteConfig};
use serde_json::Value;

/// (criterion, suite, wall-clock limit in seconds).
const CRITERIA: [(usize, &str, f64); 10] = [
    (1, "u-coherence", 10.0),
    (2, "matroid-specializations", 30.0),
    (3, "decomposition", 120.0),
    (4, "volume", 120.0),
    (5, "lattice-count", 300.0),
    (6, "circ-regression", 60.0),
    (7, "schubert-census", 60.0),
    (8, "schubert-decomposition", 300.0),
    (9, "localization", 600.0),
    (10, "logconc", 300.0),
];

const CLI_LIMIT_SECONDS: f64 = 900.0;

fn line(k: usize, ok: bool, text: &str) -> bool {
    println!("{} criterion {k}: {text}", if ok { "PASS" } else { "FAIL" });
    ok
}

fn cli_criterion() -> (bool, String) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_deltoid"))
        .args(["verify", "--all", "--n", "3", "--seed", "0"])
        .output()
        .expect("binary runs");
    let secs = start.elapsed().as_secs_f64();
    let code = out.status.code();
    let shown = code.map_or("none".to_string(), |c| c.to_string());
    let parsed: Option<Value> = serde_json::from_slice(&out.stdout).ok();
    let Some(v) = parsed else {
        return (false, format!("exit {shown}, stdout is not JSON"));
    };
    let suites = v["suites"].as_array().map_or(0, |s| s.len());
    let ok = code == Some(0) && v["format"] == 1 && v["passed"] == true && suites == 10 && secs < CLI_LIMIT_SECONDS;
    (ok, format!("`deltoid verify --all --n 3` exit {shown}, {suites} suites in the JSON summary, {secs:.1}s (limit {CLI_LIMIT_SECONDS}s)"))
}

fn main() -> ExitCode {
    let cfg = SuiteConfig { n: 3, seed: 0 };
    let mut all = true;
    for (k, name, limit) in CRITERIA {
        let ok = match run_suite(name, &cfg) {
            Ok(r) => {
                let fast = r.seconds < limit;
                line(k, r.passed && fast, &format!("{name} ({:.1}s, limit {limit}s): {}", r.seconds, r.summary))
            }
            Err(e) => line(k, false, &format!("{name}: error {e}")),
        };
        all &= ok;
    }
    let (ok, text) = cli_criterion();
    all &= line(11, ok, &text);
    if all {
        ExitCode::SUCCESS
    } else {
        println!("some acceptance criteria failed");
        ExitCode::FAILURE
    }
}
