mod args;
mod commands;
mod failure;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use commands::Sink;
use failure::{Failure, Outcome, EXIT_USAGE};

fn run(cli: Cli) -> Result<Outcome, Failure> {
    if cli.jobs == Some(0) {
        return Err(Failure::usage("--jobs must be at least 1"));
    }
    let sink = Sink {
        output: cli.output.clone(),
        format: cli.format.unwrap_or(Format::Json),
    };
    match &cli.command {
        Command::Verify {
            family,
            partition,
            probes,
        } => commands::verify(&sink, family, partition, *probes),
        Command::Sweep(args) => commands::sweep_cmd(cli.output.clone(), cli.format, cli.jobs, args),
        Command::Felder { mu } => commands::felder(&sink, mu),
        Command::Duality { partition } => commands::duality(&sink, partition),
        Command::Karlin { family, n, ell } => commands::karlin(&sink, family, *n, *ell),
        Command::Moments {
            file,
            support,
            partition,
            probes,
        } => commands::moments(&sink, file, support.as_deref(), partition, *probes),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(outcome) => outcome.code(),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
