mod args;
mod commands;
mod output;
mod verify;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command, Format};
use commands::{CliError, Report};

fn run(cli: &Cli) -> Result<Report, CliError> {
    let force = cli.force;
    match &cli.command {
        Command::Weingarten(a) => commands::weingarten(a, force),
        Command::Factorize(a) => commands::factorize(a, force),
        Command::Series(a) => commands::series_cmd(a, force),
        Command::Diagrams(a) => commands::diagrams(a, force),
        Command::Render(a) => commands::render(a, force),
        Command::Correlator(a) => commands::correlator_cmd(a),
        Command::Moment(a) => commands::moment_cmd(a, force),
        Command::Mc(a) => commands::mc_cmd(a),
        Command::Verify(a) => verify::verify(a, force),
    }
}

fn main() -> ExitCode {
    // clap exits with code 2 on malformed arguments
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            match cli.format {
                Format::Json => {
                    println!("{}", serde_json::to_string_pretty(&report.value).expect("JSON values serialize"))
                }
                Format::Text => print!("{}", output::to_text(&report.value)),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                eprintln!("error: a check failed");
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
