use std::io::Write as _;
use std::process::ExitCode;

use clap::Parser;

mod args;
mod commands;
mod report;

use args::{Cli, Command};
use report::{exit, InputDigest, Outcome, RunReport};

fn status_for(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<ringcode_core::Error>()) {
        Some(ringcode_core::Error::CapExceeded { .. }) => exit::CAP,
        _ => exit::USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut digest = InputDigest::new(&argv);

    let result = match &cli.command {
        Command::Map(a) => commands::map(a, &mut digest),
        Command::Verify(v) => commands::verify(v, &mut digest),
        Command::Code(c) => commands::code(c, &mut digest),
        Command::Fixtures(f) => commands::fixtures(f),
    };

    let (outcome, error) = match result {
        Ok(o) => (o, None),
        Err(e) => (Outcome { status: status_for(&e), ..Outcome::default() }, Some(format!("{e:#}"))),
    };
    let report = RunReport { command: &argv, digest: digest.hex(), outcome: &outcome, error };

    let mut stdout = std::io::stdout().lock();
    let written = if cli.json {
        writeln!(stdout, "{}", report.to_json())
    } else if report.error.is_none() {
        stdout.write_all(report.to_text().as_bytes())
    } else {
        Ok(())
    };
    if let Some(msg) = &report.error {
        eprintln!("error: {msg}");
    }
    if written.and_then(|()| stdout.flush()).is_err() {
        return ExitCode::from(exit::USAGE);
    }
    ExitCode::from(outcome.status)
}
