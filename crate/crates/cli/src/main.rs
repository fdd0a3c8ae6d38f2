mod commands;
mod layout;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use nilorb_core::{Atlas, Error, Mode};

#[derive(Parser, Debug)]
#[command(name = "nilorb", version, about = "Polarizations and Springer degrees of nilpotent orbits")]
struct Cli {
    /// Atlas file replacing the bundled one.
    #[arg(long, global = true)]
    atlas: Option<PathBuf>,
    /// Seed for the randomized matrix oracle.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Relations used for exploration: flops (degree preserving) or hirai (all).
    #[arg(long, global = true, value_enum)]
    mode: Option<ModeArg>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Write the explored component as a DOT graph.
    #[arg(long, global = true, value_name = "FILE")]
    dot: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Flops,
    Hirai,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Flops => Mode::DegreePreserving,
            ModeArg::Hirai => Mode::Full,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Weighted diagram, dimension and resolvability of an orbit.
    OrbitInfo {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        /// Partition like [3,2,2], weights like (0,2,0,0), or an atlas label.
        orbit: String,
    },
    /// Extremal contractions that are symplectic resolutions.
    Resolutions {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        orbit: String,
    },
    /// Equivalence class of a marked diagram under the relations.
    PolarClass {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        marks: String,
    },
    /// Springer degree of a marked diagram.
    PolarDegree {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        marks: String,
    },
    /// Compares the ideal n of a flop orbit with u(Q) ∩ u(Q′).
    FlopVerify {
        family: String,
        n: usize,
        /// k for type A, I or II for E6.
        k: Option<String>,
    },
    /// Generic Jordan type of a nilradical in a matrix model.
    OracleRichardson {
        #[arg(value_name = "TYPE")]
        lie_type: String,
        /// A flag like [2,1,1,1] or marks like a3.
        spec: String,
    },
    /// Cross-checks every atlas record.
    AtlasValidate,
}

pub struct Options {
    pub atlas: Option<PathBuf>,
    pub seed: u64,
    pub mode: Option<Mode>,
    pub dot: Option<PathBuf>,
}

pub const EXIT_CHECK_FAILED: u8 = 2;
pub const EXIT_INPUT: u8 = 3;
pub const EXIT_UNKNOWN: u8 = 4;

pub struct Outcome {
    pub human: String,
    pub json: serde_json::Value,
    pub code: u8,
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnknownOrbit { .. } => EXIT_UNKNOWN,
            Error::InconsistentCycle(_) | Error::Degree(_) | Error::NonGeneric(_) => EXIT_CHECK_FAILED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

pub fn load_atlas(opts: &Options) -> Result<Atlas, Failure> {
    let atlas = Atlas::load_or_bundled(opts.atlas.as_deref())?;
    for w in atlas.warnings() {
        log::warn!("{w}");
    }
    Ok(atlas)
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    let opts = Options {
        atlas: cli.atlas,
        seed: cli.seed,
        mode: cli.mode.map(Mode::from),
        dot: cli.dot,
    };
    match cli.command {
        Command::OrbitInfo { lie_type, orbit } => commands::orbit_info(&opts, &lie_type, &orbit),
        Command::Resolutions { lie_type, orbit } => commands::resolutions(&opts, &lie_type, &orbit),
        Command::PolarClass { lie_type, marks } => commands::polar_class(&opts, &lie_type, &marks),
        Command::PolarDegree { lie_type, marks } => commands::polar_degree(&opts, &lie_type, &marks),
        Command::FlopVerify { family, n, k } => commands::flop_verify(&family, n, k.as_deref()),
        Command::OracleRichardson { lie_type, spec } => {
            commands::oracle_richardson(&opts, &lie_type, &spec)
        }
        Command::AtlasValidate => commands::atlas_validate(&opts),
    }
}

// a closed pipe (e.g. `| head`) is not an error worth a panic
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn"))
        .format_timestamp(None)
        .init();
    let cli = Cli::parse();
    let json = cli.json;
    match run(cli) {
        Ok(out) => {
            if json {
                emit(&serde_json::to_string_pretty(&out.json).expect("json values print"));
            } else {
                emit(out.human.trim_end());
            }
            ExitCode::from(out.code)
        }
        Err(f) => {
            if json {
                let v = serde_json::json!({ "error": f.message, "exit_code": f.code });
                emit(&serde_json::to_string_pretty(&v).expect("json values print"));
            }
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
