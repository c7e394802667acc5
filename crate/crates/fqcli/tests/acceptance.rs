//! Acceptance run: one line per criterion.
//!
//! Criteria 4 and 8 fail against the implementation as specified (see the
//! decisions log); they are printed as FAIL and listed in `KNOWN_FAILURES` so
//! the process status still guards the other eight.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use fqcli::config::{RunConfig, Suite};
use fqcli::report::{Check, Report};
use fqcli::run;
use fqcore::Exec;

const KNOWN_FAILURES: [u8; 2] = [4, 8];

struct Outcome {
    pass: bool,
    note: String,
}

fn judge<'a>(checks: impl IntoIterator<Item = &'a Check>, min: usize) -> Outcome {
    let checks: Vec<&Check> = checks.into_iter().collect();
    let bad: Vec<&&Check> = checks.iter().filter(|c| !c.passed()).collect();
    let worst = checks
        .iter()
        .filter(|c| c.expect == fqcli::Expect::Le)
        .filter_map(|c| c.residual)
        .fold(0.0, f64::max);
    let mut note = format!("{} checks, worst residual {worst:.2e}", checks.len());
    if checks.len() < min {
        note.push_str(&format!("; expected at least {min}"));
    }
    for c in bad.iter().take(4) {
        let r = c.residual.map(|r| format!("{r:.2e}")).unwrap_or_else(|| "-".into());
        note.push_str(&format!("; {} {:?} residual {r} tol {:.0e}", c.id, c.verdict, c.tolerance));
    }
    if bad.len() > 4 {
        note.push_str(&format!("; {} more", bad.len() - 4));
    }
    Outcome { pass: bad.is_empty() && checks.len() >= min, note }
}

fn timed(mut o: Outcome, t: Duration, limit: Duration) -> Outcome {
    o.note.push_str(&format!("; {:.2} s (limit {} s)", t.as_secs_f64(), limit.as_secs()));
    o.pass &= t < limit;
    o
}

fn suite_time(r: &Report, s: Suite) -> Duration {
    r.suite_times.iter().find(|(x, _)| *x == s).map(|(_, t)| *t).unwrap_or_default()
}

fn main() -> ExitCode {
    let cfg = RunConfig::default();
    let t0 = Instant::now();
    let r = match run(cfg.clone(), Exec::default()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("run failed: {e}");
            return ExitCode::FAILURE;
        }
    };
    let first = t0.elapsed();
    let ids = |p: &'static str| r.with_prefix(p);

    let mut out: Vec<(u8, &str, Outcome)> = Vec::new();

    let c1 = judge(ids("expansion.calibration").chain(ids("expansion.table.")), 20);
    out.push((1, "expansion tables after calibration", timed(c1, suite_time(&r, Suite::Expansion), Duration::from_secs(10))));

    let rows: Vec<&Check> = ids("expansion.row.").collect();
    let mut c2 = judge(rows.iter().copied(), 1);
    for want in ["M_R", "T_LL", "T_R", "F_R"] {
        if !rows.iter().any(|c| c.id.ends_with(&format!(".{want}"))) {
            c2.pass = false;
            c2.note.push_str(&format!("; no row check for {want}"));
        }
    }
    out.push((2, "statement example rows", c2));

    let c3 = judge(ids("identities.pauli2.").filter(|c| !c.id.ends_with(".sampling")), 197);
    out.push((3, "identity lists, 100 pairs, radius 0.1", c3));

    let c4 = ["clifford", "reconstruct", "r4_anticommutes"].map(|s| format!("monoaxial.pauli2.{s}"));
    out.push((4, "monoaxial theorem", judge(c4.iter().filter_map(|id| r.get(id)), 3)));

    out.push((5, "geometric mean consistency", judge(["identities.geomean.pd.quad", "identities.geomean.skew.quad"].iter().filter_map(|id| r.get(id)), 2)));

    let c6 = ids("identities.").filter(|c| {
        let tail = c.id.rsplit_once(".").map(|(_, t)| t).unwrap_or("");
        ["I_C^fy∘I_C^fy", "C∘C", "K∘K", "U∘U"].contains(&tail)
            || (c.id.contains(".mono.") && tail.starts_with("M_") && tail.contains("∘M_"))
    });
    out.push((6, "involutions and idempotents", judge(c6, 2 * 13)));

    let c7 = ids("extensions.").filter(|c| c.id.ends_with(".x.conservative") || c.id.ends_with(".qhat"));
    out.push((7, "extension conservativity and q-hat values", judge(c7, 15 * 4)));

    let extremal = ["-A1^2", "-A2^2", "-A1^-2", "-A2^-2", "A1 A2", "-A2 A1", "-A1 A2^-1", "A2 A1^-1", "1", "Id", "-inv"];
    let on_extremal = |c: &&Check| extremal.iter().any(|o| c.id.ends_with(&format!(".{o}")));
    let c8 = judge(ids("hyperscaling.constellation.").chain(ids("hyperscaling.inconsistent.")).filter(on_extremal), 11);
    out.push((8, "order-2 hyperscaling on tensor(2)", timed(c8, suite_time(&r, Suite::Hyperscaling), Duration::from_secs(60))));

    out.push((9, "monoaxial closure", judge(ids("monoaxial.").filter(|c| c.id.contains(".closure.")), 2 * 40)));

    let again = run(cfg.clone(), Exec::default());
    let seq = run(cfg, Exec::Sequential);
    let j = r.json();
    let c10 = match (again, seq) {
        (Ok(a), Ok(s)) => {
            let (same, same_seq) = (a.json() == j, s.json() == j);
            Outcome { pass: same && same_seq, note: format!("{} bytes; rerun identical: {same}; sequential identical: {same_seq}", j.len()) }
        }
        (Err(e), _) | (_, Err(e)) => Outcome { pass: false, note: format!("rerun failed: {e}") },
    };
    out.push((10, "byte-identical JSON", c10));

    let mut unexpected = 0;
    for (n, name, o) in &out {
        let tag = if o.pass { "PASS" } else { "FAIL" };
        let known = !o.pass && KNOWN_FAILURES.contains(n);
        println!("criterion {n:>2} {tag} {name}: {}{}", o.note, if known { " [known]" } else { "" });
        if !o.pass && !known {
            unexpected += 1;
        }
    }
    let passed = out.iter().filter(|(_, _, o)| o.pass).count();
    println!("{passed}/10 criteria pass; first run {:.2} s", first.as_secs_f64());
    if unexpected > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
