use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use gapset_cli::{run, Cli, RunConfig};

fn main() -> ExitCode {
    match try_main() {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn try_main() -> anyhow::Result<bool> {
    let cfg = RunConfig::from_cli(Cli::parse())?;
    let outcome = run(&cfg)?;
    match &cfg.out {
        Some(path) => std::fs::write(path, &outcome.output)
            .with_context(|| format!("writing {}", path.display()))?,
        None => std::io::stdout()
            .lock()
            .write_all(outcome.output.as_bytes())?,
    }
    if !outcome.passed() {
        let mut err = std::io::stderr().lock();
        for line in &outcome.problems {
            writeln!(err, "- {line}")?;
        }
        writeln!(err, "{} check(s) failed", outcome.problems.len())?;
    }
    Ok(outcome.passed())
}
