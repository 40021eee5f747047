use std::path::PathBuf;
use std::process::ExitCode;

use chow_obstruct_cli::{
    error_json, exit, parse_job, render_json, render_text, run, CliError, Command,
};
use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Higher Futaki invariants of smooth toric Fano manifolds.
#[derive(Debug, Parser)]
#[command(name = "chow-obstruct", version)]
struct Args {
    #[arg(value_enum)]
    command: Command,
    /// Job document.
    #[arg(long)]
    input: PathBuf,
    /// Overrides the document's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the document's sample count.
    #[arg(long)]
    samples: Option<usize>,
    /// Replace λ by −λ.
    #[arg(long)]
    flip_sign: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

fn execute(args: &Args) -> Result<(String, u8), CliError> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
    let mut job = parse_job(&text)?;
    if let Some(seed) = args.seed {
        job.options.seed = seed;
    }
    if let Some(samples) = args.samples {
        job.options.samples = Some(samples);
    }
    job.options.flip_sign |= args.flip_sign;
    let outcome = run(job, args.command)?;
    let body = match args.format {
        Format::Json => render_json(&outcome.report),
        Format::Text => render_text(&outcome.report),
    };
    Ok((body, outcome.exit_code))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match execute(&args) {
        Ok((body, code)) => {
            print!("{body}");
            ExitCode::from(code)
        }
        Err(e) => {
            match args.format {
                Format::Json => print!("{}", error_json(&e)),
                Format::Text => eprintln!("{e}"),
            }
            debug_assert_ne!(e.exit_code(), exit::OK);
            ExitCode::from(e.exit_code())
        }
    }
}
