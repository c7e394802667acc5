use fqcli::{run, RunConfig, Suite};
use fqcore::Exec;
use std::process::Command;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_fqcli"));
    c.env_remove("FQ_SEED");
    c
}

fn small(suites: &[Suite]) -> RunConfig {
    RunConfig { bases: vec!["pauli2".into()], suites: suites.to_vec(), samples: Some(5), ..Default::default() }.validate().unwrap()
}

#[test]
fn radius_out_of_range_exits_2() {
    let o = bin().args(["--radius", "0.6", "--suite", "expansion"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
}

#[test]
fn bad_config_file_exits_2() {
    let dir = std::env::temp_dir().join(format!("fqcli-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let p = dir.join("c.json");
    std::fs::write(&p, r#"{"radius": 0.1, "colour": "red"}"#).unwrap();
    let o = bin().arg("--config").arg(&p).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn expansion_run_passes_and_writes_json() {
    let out = std::env::temp_dir().join(format!("fqcli-exp-{}.json", std::process::id()));
    let o = bin().args(["--suite", "expansion", "--base", "pauli2", "--out"]).arg(&out).output().unwrap();
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["schema"], "fqcli.report/1");
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["id"] == "expansion.calibration"));
    assert!(checks.iter().all(|c| c["anchor"].as_str().is_some_and(|a| !a.is_empty())));
}

#[test]
fn env_seed_changes_the_echoed_config() {
    let o = bin().env("FQ_SEED", "7,8").args(["--suite", "expansion", "--seed", "3"]).output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["config"]["seeds"], serde_json::json!([7, 8]));
    let o = bin().env("FQ_SEED", "x").args(["--suite", "expansion"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_is_deterministic_across_runs_and_executors() {
    let cfg = small(&[Suite::Identities, Suite::Extensions]);
    let a = run(cfg.clone(), Exec::Parallel).unwrap().json();
    let b = run(cfg.clone(), Exec::Parallel).unwrap().json();
    let c = run(cfg, Exec::Sequential).unwrap().json();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn seeds_move_sampled_residuals() {
    let mut cfg = small(&[Suite::Identities]);
    let a = run(cfg.clone(), Exec::default()).unwrap();
    cfg.seeds = vec![43];
    let b = run(cfg, Exec::default()).unwrap();
    let id = a.with_prefix("identities.pauli2.").next().unwrap().id.clone();
    assert_ne!(a.get(&id).unwrap().residual, b.get(&id).unwrap().residual);
}

#[test]
fn markdown_has_one_table_per_suite() {
    let r = run(small(&[Suite::Expansion, Suite::Monoaxial]), Exec::default()).unwrap();
    let md = r.markdown();
    for s in ["expansion", "monoaxial"] {
        assert_eq!(md.matches(&format!("## {s}")).count(), 1, "{md}");
    }
    assert_eq!(md.matches("| id |").count(), 2);
}

#[test]
fn ids_are_unique_and_sorted() {
    let r = run(small(&[Suite::Identities, Suite::Monoaxial]), Exec::default()).unwrap();
    let ids: Vec<_> = r.checks.iter().map(|c| c.id.as_str()).collect();
    assert!(ids.windows(2).all(|w| w[0] < w[1]));
}
