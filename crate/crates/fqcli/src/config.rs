//! Run configuration.  Precedence, lowest first: defaults, `--config` file,
//! flags, `FQ_SEED`.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use fqcore::clifford::BaseKind;
use fqcore::error::FqError;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Identities,
    Expansion,
    Hyperscaling,
    Monoaxial,
    Extensions,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Identities, Suite::Expansion, Suite::Hyperscaling, Suite::Monoaxial, Suite::Extensions];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Expansion => "expansion",
            Suite::Hyperscaling => "hyperscaling",
            Suite::Monoaxial => "monoaxial",
            Suite::Extensions => "extensions",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Markdown,
}

pub const DEFAULT_SEED: u64 = 42;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    /// Base kinds by name, e.g. `pauli2`, `tensor(2)`.
    pub bases: Vec<String>,
    /// Perturbation radius for every base; unset means the per-base default.
    pub radius: Option<f64>,
    /// Random pairs per base and seed for the identity suite.
    pub samples: Option<usize>,
    pub seeds: Vec<u64>,
    pub tol_identity: f64,
    pub tol_row: f64,
    pub tol_decay: f64,
    pub step: f64,
    pub suites: Vec<Suite>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            bases: vec!["pauli2".into(), "tensor2".into()],
            radius: None,
            samples: None,
            seeds: vec![DEFAULT_SEED],
            tol_identity: 1e-8,
            tol_row: 1e-6,
            tol_decay: 1e-5,
            step: 1e-3,
            suites: Suite::ALL.to_vec(),
            out: None,
            format: Format::Json,
        }
    }
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Core(FqError::ConfigInvalid(msg.into()))
}

impl RunConfig {
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| invalid(format!("config file: {e}")))
    }

    pub fn base_kinds(&self) -> Result<Vec<BaseKind>, CliError> {
        self.bases.iter().map(|b| b.parse().map_err(CliError::Core)).collect()
    }

    pub fn radius_for(&self, kind: BaseKind) -> f64 {
        self.radius.unwrap_or(match kind {
            BaseKind::Pauli2 => 0.1,
            _ => 0.05,
        })
    }

    pub fn samples_for(&self, kind: BaseKind) -> usize {
        self.samples.unwrap_or(match kind {
            BaseKind::Pauli2 => 100,
            _ => 20,
        })
    }

    /// Checks the invariants and puts bases and suites in canonical order.
    pub fn validate(mut self) -> Result<Self, CliError> {
        if let Some(r) = self.radius {
            if !(r > 0.0 && r < 0.5) {
                return Err(invalid(format!("radius {r} outside (0, 0.5)")));
            }
        }
        for (name, t) in [("tol_identity", self.tol_identity), ("tol_row", self.tol_row), ("tol_decay", self.tol_decay), ("step", self.step)] {
            if !(t.is_finite() && t > 0.0) {
                return Err(invalid(format!("{name} must be positive, got {t}")));
            }
        }
        if self.samples == Some(0) {
            return Err(invalid("samples must be positive"));
        }
        if self.seeds.is_empty() {
            return Err(invalid("no seeds"));
        }
        if self.bases.is_empty() {
            return Err(invalid("no bases"));
        }
        let mut kinds = self.base_kinds()?;
        kinds.dedup();
        self.bases = kinds.iter().map(|k| k.to_string()).collect();
        self.suites.sort();
        self.suites.dedup();
        if self.suites.is_empty() {
            return Err(invalid("no suites selected"));
        }
        Ok(self)
    }

    /// The fields that influence results; `out` and `format` are left out so
    /// the same run written to two places is byte-identical.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::json!({
            "bases": self.bases,
            "radius": self.radius,
            "samples": self.samples,
            "seeds": self.seeds,
            "tol_identity": self.tol_identity,
            "tol_row": self.tol_row,
            "tol_decay": self.tol_decay,
            "step": self.step,
            "suites": self.suites,
        })
    }
}

/// Seed for sample `k` drawn under run seed `seed`.
pub fn sample_seed(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ k
}

#[derive(Debug, Clone, Parser)]
#[command(name = "fqcli", version, about = "Checks identities, expansion rows and hyperscaling claims numerically")]
pub struct Cli {
    /// Base kind (pauli2, quaternion4, tensor(k)); repeatable.
    #[arg(long = "base")]
    pub bases: Vec<String>,
    #[arg(long)]
    pub radius: Option<f64>,
    /// Repeatable; FQ_SEED wins over this.
    #[arg(long = "seed")]
    pub seeds: Vec<u64>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long = "suite", value_enum)]
    pub suites: Vec<Suite>,
    #[arg(long)]
    pub tol_identity: Option<f64>,
    #[arg(long)]
    pub tol_row: Option<f64>,
    #[arg(long)]
    pub tol_decay: Option<f64>,
    #[arg(long)]
    pub step: Option<f64>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// JSON file with any subset of the config fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Run without the thread pool.
    #[arg(long)]
    pub sequential: bool,
}

fn parse_env_seeds(s: &str) -> Result<Vec<u64>, CliError> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| invalid(format!("FQ_SEED: `{s}` is not a list of integers"))))
        .collect()
}

impl Cli {
    /// Merge into a validated config.  `env_seed` is the raw `FQ_SEED`.
    pub fn resolve(&self, env_seed: Option<&str>) -> Result<RunConfig, CliError> {
        let mut cfg = match &self.config {
            Some(p) => RunConfig::from_json(&std::fs::read_to_string(p)?)?,
            None => RunConfig::default(),
        };
        if !self.bases.is_empty() {
            cfg.bases = self.bases.clone();
        }
        if !self.seeds.is_empty() {
            cfg.seeds = self.seeds.clone();
        }
        if !self.suites.is_empty() {
            cfg.suites = self.suites.clone();
        }
        cfg.radius = self.radius.or(cfg.radius);
        cfg.samples = self.samples.or(cfg.samples);
        cfg.tol_identity = self.tol_identity.unwrap_or(cfg.tol_identity);
        cfg.tol_row = self.tol_row.unwrap_or(cfg.tol_row);
        cfg.tol_decay = self.tol_decay.unwrap_or(cfg.tol_decay);
        cfg.step = self.step.unwrap_or(cfg.step);
        if self.out.is_some() {
            cfg.out = self.out.clone();
        }
        cfg.format = self.format.unwrap_or(cfg.format);
        if let Some(s) = env_seed.filter(|s| !s.trim().is_empty()) {
            cfg.seeds = parse_env_seeds(s)?;
        }
        cfg.validate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &[&str]) -> Cli {
        Cli::parse_from(std::iter::once("fqcli").chain(args.iter().copied()))
    }

    #[test]
    fn defaults_validate() {
        let c = RunConfig::default().validate().unwrap();
        assert_eq!(c.bases, ["pauli2", "tensor2"]);
        assert_eq!(c.suites.len(), 5);
    }

    #[test]
    fn bad_radius() {
        let e = cli(&["--radius", "0.6"]).resolve(None).unwrap_err();
        assert!(matches!(e, CliError::Core(FqError::ConfigInvalid(_))));
        assert!(cli(&["--radius", "0"]).resolve(None).is_err());
    }

    #[test]
    fn env_seed_wins() {
        let c = cli(&["--seed", "1", "--seed", "2"]).resolve(Some("9")).unwrap();
        assert_eq!(c.seeds, [9]);
        assert!(cli(&[]).resolve(Some("x")).is_err());
    }

    #[test]
    fn flags_override_file_fields() {
        let c: RunConfig = RunConfig::from_json(r#"{"bases": ["tensor(2)"], "tol_row": 1e-4}"#).unwrap();
        assert_eq!(c.tol_row, 1e-4);
        assert_eq!(c.tol_identity, 1e-8);
        assert!(RunConfig::from_json(r#"{"nope": 1}"#).is_err());
        let c = cli(&["--suite", "monoaxial", "--suite", "identities", "--tol-row", "1e-3"]).resolve(None).unwrap();
        assert_eq!(c.suites, [Suite::Identities, Suite::Monoaxial]);
        assert_eq!(c.tol_row, 1e-3);
    }
}
