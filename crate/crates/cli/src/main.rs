use std::path::PathBuf;
use std::process::ExitCode;

use arf_cli::report::{render_error, EXIT_ERROR};
use arf_cli::{run, CliError, Command, Format, Verb};
use arf_core::tower::DEFAULT_MAX_LEVEL;
use clap::Parser;

/// Arf invariants of quadratic forms in characteristic 2.
#[derive(Debug, Parser)]
#[command(name = "arf", version)]
struct Args {
    verb: Verb,
    /// `gf2:<n>:<modulus>`, `f2t` or `f2t-tower:<m>`.
    #[arg(long)]
    field: Option<String>,
    /// JSON form file.
    #[arg(long)]
    form: Option<PathBuf>,
    /// Element expression; repeat for class-eq.
    #[arg(long = "expr", allow_hyphen_values = true)]
    exprs: Vec<String>,
    /// Tower level for diagram-check and parf.
    #[arg(long)]
    level: Option<u32>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Seed for the randomized checks of selftest.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, hide = true)]
    inject_corrupt_modulus: bool,
}

fn max_level() -> Result<u32, CliError> {
    match std::env::var("ARF_MAX_LEVEL") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::parse(format!("ARF_MAX_LEVEL must be a non-negative integer, found {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_LEVEL),
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    let verb = args.verb.name();
    let outcome = max_level().and_then(|max_level| {
        let cmd = Command {
            verb: args.verb,
            field: args.field,
            form: args.form,
            exprs: args.exprs,
            level: args.level,
            seed: args.seed,
            max_level,
            corrupt_modulus: args.inject_corrupt_modulus,
        };
        run(&cmd)
    });
    match outcome {
        Ok(report) => {
            print!("{}", report.render(args.format));
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            match args.format {
                Format::Json => print!("{}", render_error(verb, &e, args.format)),
                Format::Text => eprint!("{}", render_error(verb, &e, args.format)),
            }
            ExitCode::from(EXIT_ERROR as u8)
        }
    }
}
