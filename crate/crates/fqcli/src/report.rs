//! Check records, the report, and its two renderings.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::time::Duration;

use fqcore::error::Result as FqResult;
use serde::Serialize;
use serde_json::Value;

use crate::config::Suite;
use crate::CliError;

pub const SCHEMA: &str = "fqcli.report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

/// Which side of the tolerance counts as a pass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    /// `residual <= tolerance`
    Le,
    /// `residual > tolerance`; used where a condition must be violated.
    Gt,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub id: String,
    pub suite: Suite,
    /// Formula the check evaluates.
    pub anchor: String,
    pub residual: Option<f64>,
    pub tolerance: f64,
    pub expect: Expect,
    pub verdict: Verdict,
    pub normative: bool,
    pub detail: Option<String>,
}

impl Check {
    pub fn new(suite: Suite, id: impl Into<String>, anchor: impl Into<String>, tol: f64, expect: Expect, r: FqResult<f64>) -> Check {
        let (residual, verdict, detail) = match r {
            Ok(x) if !x.is_finite() => (None, Verdict::Error, Some("non-finite residual".to_string())),
            Ok(x) => {
                let ok = match expect {
                    Expect::Le => x <= tol,
                    Expect::Gt => x > tol,
                };
                (Some(x), if ok { Verdict::Pass } else { Verdict::Fail }, None)
            }
            Err(e) => (None, Verdict::Error, Some(e.to_string())),
        };
        Check { id: id.into(), suite, anchor: anchor.into(), residual, tolerance: tol, expect, verdict, normative: true, detail }
    }

    pub fn le(suite: Suite, id: impl Into<String>, anchor: impl Into<String>, tol: f64, r: FqResult<f64>) -> Check {
        Check::new(suite, id, anchor, tol, Expect::Le, r)
    }

    pub fn gt(suite: Suite, id: impl Into<String>, anchor: impl Into<String>, tol: f64, r: FqResult<f64>) -> Check {
        Check::new(suite, id, anchor, tol, Expect::Gt, r)
    }

    /// A record whose verdict is a count rather than a residual.
    pub fn tally(suite: Suite, id: impl Into<String>, anchor: impl Into<String>, tol: f64, pass: bool, detail: String) -> Check {
        Check {
            id: id.into(),
            suite,
            anchor: anchor.into(),
            residual: None,
            tolerance: tol,
            expect: Expect::Le,
            verdict: if pass { Verdict::Pass } else { Verdict::Fail },
            normative: true,
            detail: Some(detail),
        }
    }

    pub fn informational(mut self) -> Check {
        self.normative = false;
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Check {
        let d = d.into();
        self.detail = Some(match self.detail.take() {
            Some(e) => format!("{d}; {e}"),
            None => d,
        });
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub error: usize,
    pub normative: usize,
    pub normative_pass: usize,
}

#[derive(Debug, Clone)]
pub struct Report {
    pub config: Value,
    /// Sorted by id.
    pub checks: Vec<Check>,
    /// Kept out of the JSON so reruns stay byte-identical.
    pub wall_time: Duration,
    pub suite_times: Vec<(Suite, Duration)>,
}

impl Report {
    pub fn new(config: Value, mut checks: Vec<Check>, wall_time: Duration, suite_times: Vec<(Suite, Duration)>) -> Result<Report, CliError> {
        checks.sort_by(|a, b| a.id.cmp(&b.id));
        if let Some(w) = checks.windows(2).find(|w| w[0].id == w[1].id) {
            return Err(CliError::DuplicateCheck(w[0].id.clone()));
        }
        Ok(Report { config, checks, wall_time, suite_times })
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary { total: self.checks.len(), ..Summary::default() };
        for c in &self.checks {
            match c.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Error => s.error += 1,
            }
            if c.normative {
                s.normative += 1;
                s.normative_pass += c.passed() as usize;
            }
        }
        s
    }

    /// Informational checks never affect this.
    pub fn all_normative_pass(&self) -> bool {
        self.checks.iter().filter(|c| c.normative).all(Check::passed)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_normative_pass() {
            0
        } else {
            1
        }
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.binary_search_by(|c| c.id.as_str().cmp(id)).ok().map(|k| &self.checks[k])
    }

    pub fn with_prefix<'a>(&'a self, prefix: &'a str) -> impl Iterator<Item = &'a Check> + 'a {
        self.checks.iter().filter(move |c| c.id.starts_with(prefix))
    }

    pub fn to_value(&self) -> Value {
        serde_json::json!({
            "schema": SCHEMA,
            "config": self.config,
            "checks": self.checks,
            "summary": self.summary(),
        })
    }

    pub fn json(&self) -> String {
        let mut out = String::new();
        write_canonical(&self.to_value(), 0, &mut out);
        out.push('\n');
        out
    }

    pub fn markdown(&self) -> String {
        let s = self.summary();
        let mut out = String::new();
        let _ = writeln!(out, "# fqcli report\n");
        let _ = writeln!(out, "schema `{SCHEMA}`, {} checks: {} pass, {} fail, {} error; normative {}/{} pass.", s.total, s.pass, s.fail, s.error, s.normative_pass, s.normative);
        let _ = writeln!(out, "Wall time {:.2} s.", self.wall_time.as_secs_f64());
        let suites: BTreeSet<Suite> = self.checks.iter().map(|c| c.suite).collect();
        for suite in suites {
            let _ = writeln!(out, "\n## {}\n", suite.name());
            let _ = writeln!(out, "| id | anchor | residual | tolerance | verdict | normative | detail |");
            let _ = writeln!(out, "|---|---|---|---|---|---|---|");
            for c in self.checks.iter().filter(|c| c.suite == suite) {
                let res = c.residual.map(|r| format!("{r:.3e}")).unwrap_or_else(|| "-".into());
                let cmp = match c.expect {
                    Expect::Le => "≤",
                    Expect::Gt => ">",
                };
                let verdict = match c.verdict {
                    Verdict::Pass => "pass",
                    Verdict::Fail => "**FAIL**",
                    Verdict::Error => "**ERROR**",
                };
                let _ = writeln!(
                    out,
                    "| `{}` | {} | {} | {} {:.0e} | {} | {} | {} |",
                    c.id,
                    md_escape(&c.anchor),
                    res,
                    cmp,
                    c.tolerance,
                    verdict,
                    if c.normative { "yes" } else { "no" },
                    md_escape(c.detail.as_deref().unwrap_or("")),
                );
            }
        }
        out
    }
}

fn md_escape(s: &str) -> String {
    s.replace('|', "\\|")
}

/// Twelve significant digits in exponent form.
pub fn fmt_float(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.11e}")
    } else {
        "null".into()
    }
}

/// Sorted keys, two-space indent, fixed float format.
pub fn write_canonical(v: &Value, depth: usize, out: &mut String) {
    let pad = |d: usize| "  ".repeat(d);
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => match (n.as_u64(), n.as_i64(), n.as_f64()) {
            (Some(u), _, _) => out.push_str(&u.to_string()),
            (_, Some(i), _) => out.push_str(&i.to_string()),
            (_, _, Some(f)) => out.push_str(&fmt_float(f)),
            _ => out.push_str("null"),
        },
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(a) if a.is_empty() => out.push_str("[]"),
        Value::Array(a) => {
            out.push_str("[\n");
            for (k, x) in a.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                write_canonical(x, depth + 1, out);
                out.push_str(if k + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push(']');
        }
        Value::Object(m) if m.is_empty() => out.push_str("{}"),
        Value::Object(m) => {
            let mut keys: Vec<&String> = m.keys().collect();
            keys.sort();
            out.push_str("{\n");
            for (k, key) in keys.iter().enumerate() {
                out.push_str(&pad(depth + 1));
                out.push_str(&Value::String((*key).clone()).to_string());
                out.push_str(": ");
                write_canonical(&m[*key], depth + 1, out);
                out.push_str(if k + 1 < keys.len() { ",\n" } else { "\n" });
            }
            out.push_str(&pad(depth));
            out.push('}');
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use fqcore::error::FqError;

    fn chk(id: &str, r: FqResult<f64>) -> Check {
        Check::le(Suite::Identities, id, "x = x", 1e-8, r)
    }

    #[test]
    fn verdicts() {
        assert_eq!(chk("a", Ok(1e-9)).verdict, Verdict::Pass);
        assert_eq!(chk("a", Ok(1e-7)).verdict, Verdict::Fail);
        assert_eq!(chk("a", Ok(f64::NAN)).verdict, Verdict::Error);
        let e = chk("a", Err(FqError::NonFinite("probe")));
        assert_eq!(e.verdict, Verdict::Error);
        assert!(e.detail.is_some());
        assert_eq!(Check::gt(Suite::Hyperscaling, "b", "c", 1e-5, Ok(0.1)).verdict, Verdict::Pass);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let r = Report::new(Value::Null, vec![chk("a", Ok(0.0)), chk("a", Ok(0.0))], Duration::ZERO, vec![]);
        assert!(matches!(r, Err(CliError::DuplicateCheck(_))));
    }

    #[test]
    fn empty_report_is_valid_json() {
        let r = Report::new(serde_json::json!({}), vec![], Duration::ZERO, vec![]).unwrap();
        let v: Value = serde_json::from_str(&r.json()).unwrap();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["checks"].as_array().unwrap().len(), 0);
        assert!(r.all_normative_pass());
    }

    #[test]
    fn informational_does_not_gate() {
        let r = Report::new(Value::Null, vec![chk("a", Ok(1.0)).informational(), chk("b", Ok(0.0))], Duration::ZERO, vec![]).unwrap();
        assert_eq!(r.exit_code(), 0);
        let r = Report::new(Value::Null, vec![chk("a", Ok(1.0))], Duration::ZERO, vec![]).unwrap();
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn canonical_floats_and_keys() {
        let v = serde_json::json!({"b": 0.1, "a": [1, -2, 1e-300], "c": "q|r"});
        let mut s = String::new();
        write_canonical(&v, 0, &mut s);
        assert_eq!(s, "{\n  \"a\": [\n    1,\n    -2,\n    1.00000000000e-300\n  ],\n  \"b\": 1.00000000000e-1,\n  \"c\": \"q|r\"\n}");
        let back: Value = serde_json::from_str(&s).unwrap();
        assert_eq!(back["b"].as_f64(), Some(0.1));
    }
}
