mod commands;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use ruukin::singularity::GridAxis;

/// Exit codes of the tool.
pub mod exit {
    pub const OK: u8 = 0;
    pub const USAGE: u8 = 1;
    pub const VERIFICATION: u8 = 2;
    pub const DEGENERATE: u8 = 3;
}

#[derive(Parser, Debug)]
#[command(
    name = "ruukin",
    version,
    about = "Algebraic kinematics of the 3-RUU parallel manipulator"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Dump,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Design file (JSON with keys a1, a3, r0, r1).
    #[arg(long, value_name = "PATH")]
    pub design: Option<PathBuf>,
    /// Write the result here instead of stdout.
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Scale-normalized tolerance.
    #[arg(long, value_name = "FLOAT", value_parser = positive_f64)]
    pub tol: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit g1..g8, the translational system and the workspace equations.
    Constraints {
        #[command(flatten)]
        common: Common,
        /// Directory for the workspace equation cache.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Inverse kinematics in the translational mode.
    Ik {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "y1,y2,y3", value_parser = triple, allow_hyphen_values = true)]
        pose: Triple,
    },
    /// Forward kinematics in the translational mode.
    Fk {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "t1,t2,t3", value_parser = triple, allow_hyphen_values = true)]
        inputs: Triple,
    },
    /// Singularity flags of a configuration.
    Classify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "y1,y2,y3", value_parser = triple, allow_hyphen_values = true)]
        pose: Triple,
        #[arg(long, value_name = "t1,t2,t3", value_parser = triple, allow_hyphen_values = true)]
        inputs: Triple,
    },
    /// Sample a singularity surface on a grid.
    Surface {
        #[command(flatten)]
        common: Common,
        #[arg(value_enum)]
        which: SurfaceKind,
        /// One axis for all three variables or three comma-separated axes.
        #[arg(long, value_name = "min:max:count[,...]", value_parser = grid, allow_hyphen_values = true)]
        grid: GridSpec,
        /// Limb of the input torus.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=3))]
        limb: u8,
        /// Directory for the output eliminant cache.
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Self-motion circle of a design.
    Selfmotion {
        #[command(flatten)]
        common: Common,
    },
    /// Sample the mode-transition curve and check workspace membership.
    Curve {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_name = "min:max:count", value_parser = grid, allow_hyphen_values = true,
              default_value = "-1:1:50")]
        grid: GridSpec,
        /// Turn the curve by k·120° about the z-axis.
        #[arg(long, default_value_t = 0, value_parser = clap::value_parser!(u8).range(0..=2))]
        turn: u8,
        #[arg(long, value_name = "DIR")]
        cache: Option<PathBuf>,
    },
    /// Run the identity suite.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Same as --format json.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SurfaceKind {
    InputTorus,
    OutputEliminant,
    JointInput,
    JointOutput,
}

pub type Triple = [f64; 3];

#[derive(Clone, Debug)]
pub struct GridSpec(pub Vec<GridAxis>);

fn positive_f64(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err("must be positive".into())
    }
}

fn triple(s: &str) -> Result<Triple, String> {
    let parts: Vec<f64> = s
        .split(',')
        .map(|x| x.trim().parse::<f64>().map_err(|e| format!("'{x}': {e}")))
        .collect::<Result<_, _>>()?;
    let t: Triple = parts
        .try_into()
        .map_err(|_| format!("expected three comma-separated numbers, got '{s}'"))?;
    if t.iter().all(|x| x.is_finite()) {
        Ok(t)
    } else {
        Err("values must be finite".into())
    }
}

fn grid(s: &str) -> Result<GridSpec, String> {
    let axes: Vec<GridAxis> = s.split(',').map(str::parse).collect::<Result<_, _>>()?;
    if let Some(a) = axes.iter().find(|a| a.count < 2) {
        return Err(format!("grid axes need at least 2 points, got {}", a.count));
    }
    Ok(GridSpec(axes))
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("RUUKIN_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("RUUKIN_THREADS must be a positive integer, got '{v}'"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() {
                exit::USAGE
            } else {
                exit::OK
            });
        }
    };
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(exit::USAGE);
    }
    let result = match cli.command {
        Command::Constraints { common, cache } => commands::constraints(&common, cache),
        Command::Ik { common, pose } => commands::ik(&common, pose),
        Command::Fk { common, inputs } => commands::fk(&common, inputs),
        Command::Classify {
            common,
            pose,
            inputs,
        } => commands::classify(&common, pose, inputs),
        Command::Surface {
            common,
            which,
            grid,
            limb,
            cache,
        } => commands::surface(&common, which, &grid, limb as usize, cache),
        Command::Selfmotion { common } => commands::selfmotion(&common),
        Command::Curve {
            common,
            grid,
            turn,
            cache,
        } => commands::curve(&common, &grid, turn as usize, cache),
        Command::Verify { common, json } => commands::verify(&common, json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
