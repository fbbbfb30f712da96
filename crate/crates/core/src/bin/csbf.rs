use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use csbf::cli::{
    cmd_approximate, cmd_inspect, cmd_verify, exit_code, read_input, tolerance_from_env,
    ApproximateOptions, CliError, NormArg, OutputDocument, RepArg, SpaceArg, Target,
};
use csbf::oracle::OracleConfig;

#[derive(Parser)]
#[command(
    name = "csbf",
    version,
    about = "Consistent approximations of belief functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closest consistent approximation on one component or globally.
    Approximate {
        path: PathBuf,
        #[arg(long, value_enum)]
        norm: NormArg,
        #[arg(long, value_enum)]
        space: SpaceArg,
        #[arg(long, value_enum)]
        rep: Option<RepArg>,
        #[arg(long)]
        focus: Option<String>,
        #[arg(long)]
        global: bool,
        /// Enumerate box vertices (L-infinity only).
        #[arg(long)]
        vertices: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Focal elements, core, belief and plausibility tables.
    Inspect { path: PathBuf },
    /// Compare every closed form against a brute-force oracle.
    Verify {
        path: PathBuf,
        #[arg(long, default_value_t = OracleConfig::default().grid_step)]
        grid_step: f64,
        #[arg(long, default_value_t = OracleConfig::default().random_restarts)]
        restarts: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn emit(doc: &OutputDocument, out: Option<&PathBuf>) -> Result<(), CliError> {
    for w in &doc.warnings {
        eprintln!("warning: {w}");
    }
    let text = doc.render();
    match out {
        Some(path) => std::fs::write(path, text).map_err(|e| CliError::Io(e.to_string())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<i32, CliError> {
    match cli.command {
        Command::Approximate {
            path,
            norm,
            space,
            rep,
            focus,
            global,
            vertices,
            out,
        } => {
            let target = match (focus, global) {
                (Some(label), false) => Target::Focus(label),
                (None, true) => Target::Global,
                _ => {
                    return Err(CliError::InvalidFlags(
                        "give exactly one of --focus or --global".into(),
                    ))
                }
            };
            let opts = ApproximateOptions {
                norm,
                space,
                rep,
                target,
                vertices,
                tolerance: tolerance_from_env()?,
            };
            let input = read_input(&path)?;
            emit(&cmd_approximate(&input, &opts)?, out.as_ref())?;
            Ok(exit_code::SUCCESS)
        }
        Command::Inspect { path } => {
            let input = read_input(&path)?;
            emit(&cmd_inspect(&input), None)?;
            Ok(exit_code::SUCCESS)
        }
        Command::Verify {
            path,
            grid_step,
            restarts,
            seed,
        } => {
            let cfg = OracleConfig {
                grid_step,
                random_restarts: restarts,
                seed,
                ..OracleConfig::default()
            };
            tolerance_from_env()?;
            let input = read_input(&path)?;
            let (doc, passed) = cmd_verify(&input, &cfg)?;
            emit(&doc, None)?;
            Ok(if passed {
                exit_code::SUCCESS
            } else {
                exit_code::VERIFY_FAILED
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
