use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;

use hclab::report::{input_error_report, render_human, render_machine, run_command, Command};
use hclab::scenario::parse_scenario;
use hclab::Error;

/// Exact cyclic homology of Hopf crossed products.
///
/// Exit status: 0 all checks passed, 1 a mathematical check failed,
/// 2 invalid input or unsupported request, 3 a dimension cap was hit.
#[derive(Parser, Debug)]
#[command(name = "hclab", version)]
struct Cli {
    #[arg(value_enum)]
    command: Command,
    scenario: PathBuf,
    /// Overrides max_degree, max_p and max_q of the scenario.
    #[arg(long)]
    max_degree: Option<usize>,
    /// Emit the report as JSON.
    #[arg(long)]
    machine: bool,
    /// Overrides the ceiling on any materialized dimension.
    #[arg(long)]
    cap: Option<usize>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let file = cli.scenario.display().to_string();
    let loaded = std::fs::read_to_string(&cli.scenario)
        .map_err(|e| Error::Input(format!("cannot read {file}: {e}")))
        .and_then(|text| parse_scenario(&text));
    let report = match loaded {
        Ok(mut s) => {
            if let Some(n) = cli.max_degree {
                s.compute.max_degree = n;
                s.compute.max_p = n;
                s.compute.max_q = n;
            }
            if let Some(cap) = cli.cap {
                s.compute.cap = cap;
            }
            run_command(cli.command, &s)
        }
        Err(e) => input_error_report(cli.command, &file, e),
    };
    let text = if cli.machine { render_machine(&report) } else { render_human(&report) };
    print!("{text}");
    ExitCode::from(report.exit_code() as u8)
}
