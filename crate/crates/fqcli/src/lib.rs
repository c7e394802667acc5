//! Verification harness over `fqcore`: configuration, suites, reports.

pub mod config;
pub mod report;
pub mod suites;

pub use config::{Cli, Format, RunConfig, Suite};
pub use report::{Check, Expect, Report, Verdict};
pub use suites::run;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] fqcore::FqError),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("duplicate check id `{0}`")]
    DuplicateCheck(String),
}

impl CliError {
    /// 2 for configuration problems, 3 for anything else that stops a run.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(fqcore::FqError::ConfigInvalid(_)) => 2,
            _ => 3,
        }
    }
}
