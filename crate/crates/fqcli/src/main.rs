use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use fqcli::{run, Cli, Format};
use fqcore::Exec;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let env_seed = std::env::var("FQ_SEED").ok();
    let result = cli.resolve(env_seed.as_deref()).and_then(|cfg| {
        let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
        let report = run(cfg.clone(), exec)?;
        let text = match cfg.format {
            Format::Json => report.json(),
            Format::Markdown => report.markdown(),
        };
        match &cfg.out {
            Some(p) => std::fs::write(p, text)?,
            None => std::io::stdout().write_all(text.as_bytes())?,
        }
        Ok(report)
    });
    match result {
        Ok(report) => {
            let s = report.summary();
            eprintln!(
                "{} checks, normative {}/{} pass, {} informational not passing, {:.2} s",
                s.total,
                s.normative_pass,
                s.normative,
                report.checks.iter().filter(|c| !c.normative && !c.passed()).count(),
                report.wall_time.as_secs_f64()
            );
            for (suite, t) in &report.suite_times {
                eprintln!("  {:<13} {:.2} s", suite.name(), t.as_secs_f64());
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("fqcli: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
