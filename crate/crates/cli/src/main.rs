use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use symres::oracle::DEFAULT_SEED;
use symres::Scalar;
use symres_cli::commands::{self, Range, SweepSpec};
use symres_cli::error::EXIT_OK;
use symres_cli::json::ErrorJson;
use symres_cli::{read_input, CliError, Options, Output};

/// Exact resultants of gradient systems of symmetric cubics.
#[derive(Parser)]
#[command(name = "symres", version)]
struct Cli {
    /// Cross-check with the Macaulay oracle (n <= 4).
    #[arg(long, global = true)]
    oracle: bool,
    /// Report the paper-normalized value as `primary`.
    #[arg(long, global = true)]
    paper_normalization: bool,
    /// First seed for the oracle's fallback substitutions.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Closed-form resultant report; exits 3 if it vanishes.
    Closed { input: Option<PathBuf> },
    /// Boxed formula vs derivation chain (and oracle with --oracle).
    Compare { input: Option<PathBuf> },
    /// Nonzero common root of the gradient system, if any.
    Witness { input: Option<PathBuf> },
    /// Configuratrix resultant for a metric and momenta (n <= 3).
    Configuratrix {
        metric: PathBuf,
        /// Momentum JSON; standard input if omitted.
        momentum: Option<PathBuf>,
    },
    /// Canonical values over an (A1, A2) grid as JSON lines.
    Sweep {
        #[arg(long)]
        n: usize,
        /// start:stop:step
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        #[arg(long, allow_hyphen_values = true)]
        a2: String,
        #[arg(long, allow_hyphen_values = true)]
        a3: String,
    },
}

fn run(cli: &Cli) -> Result<Output, CliError> {
    let opts = Options {
        oracle: cli.oracle,
        paper_normalization: cli.paper_normalization,
        seed: cli.seed,
    };
    match &cli.cmd {
        Cmd::Closed { input } => commands::closed(&read_input(input.as_deref())?, &opts),
        Cmd::Compare { input } => commands::compare(&read_input(input.as_deref())?, &opts),
        Cmd::Witness { input } => commands::witness(&read_input(input.as_deref())?, &opts),
        Cmd::Configuratrix { metric, momentum } => {
            let metric = read_input(Some(metric))?;
            let momentum = read_input(momentum.as_deref())?;
            commands::configuratrix(&metric, &momentum, &opts)
        }
        Cmd::Sweep { n, a1, a2, a3 } => {
            let spec = SweepSpec {
                n: *n,
                a1: Range::parse(a1)?,
                a2: Range::parse(a2)?,
                a3: a3
                    .parse::<Scalar>()
                    .map_err(|e| CliError::input(format!("a3: {e}")))?,
            };
            commands::sweep(&spec, &opts)
        }
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::input(format!("output: {e}"));
    match &cli.out {
        Some(path) => std::fs::write(path, &out.text).map_err(io),
        None => std::io::stdout().write_all(out.text.as_bytes()).map_err(io),
    }
}

fn fail(e: &CliError) -> ExitCode {
    let json = serde_json::to_string(&ErrorJson {
        error: e.message.clone(),
        code: e.code,
    })
    .expect("serializable");
    eprintln!("{json}");
    ExitCode::from(e.code)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::from(EXIT_OK);
        }
        Err(e) => return fail(&CliError::input(e.to_string().trim_end().to_string())),
    };
    match run(&cli).and_then(|out| emit(&cli, &out).map(|()| out.code)) {
        Ok(code) => ExitCode::from(code),
        Err(e) => fail(&e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_valid() {
        Cli::command().debug_assert();
    }
}
