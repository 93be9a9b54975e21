use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::exit::Failure;

#[derive(Parser, Debug)]
#[command(name = "vilenkin", version, about = "Step-function analysis on Vilenkin groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Fourier transform of a vsf1 file.
    Transform {
        input: PathBuf,
        /// Output file; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Transform a dual function back to the group.
        #[arg(long)]
        inverse: bool,
        /// Cross-check against direct summation.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Periodization, frame bounds and spectrum of a generator.
    Analyze {
        input: PathBuf,
        /// Shorthand for `--format csv`.
        #[arg(long)]
        csv: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Binary frame wavelet and its certificate.
    Wavelet {
        input: PathBuf,
        /// Low-pass filter as a dual vsf1 file on `0:r`; the minimal filter
        /// is used when absent.
        #[arg(long)]
        filter: Option<PathBuf>,
        #[arg(short = 'o', long, default_value = ".")]
        out_dir: PathBuf,
        #[command(flatten)]
        common: Common,
    },
    /// MRA scaling function from a Parseval FMRA generator.
    MraLift {
        input: PathBuf,
        #[arg(short = 'o', long, default_value = ".")]
        out_dir: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Working resolution for reported tables.
    #[arg(long, default_value_t = 4)]
    pub resolution: u32,
    /// Tolerance for oracle and residual checks.
    #[arg(long, default_value_t = vilenkin::tol::EXACT)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Transform,
    Analyze,
    Wavelet,
    MraLift,
}

/// Validated settings of one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: CommandKind,
    pub inputs: Vec<PathBuf>,
    pub output: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
    pub resolution: u32,
    pub tol: f64,
    pub format: Format,
    pub inverse: bool,
    pub oracle: bool,
}

impl RunConfig {
    pub fn from_cli(cli: Cli) -> Result<RunConfig, Failure> {
        let base = |command, inputs, common: Common| RunConfig {
            command,
            inputs,
            output: None,
            out_dir: None,
            resolution: common.resolution,
            tol: common.tol,
            format: common.format,
            inverse: false,
            oracle: false,
        };
        let config = match cli.command {
            Command::Transform { input, output, inverse, oracle, common } => RunConfig {
                output,
                inverse,
                oracle,
                ..base(CommandKind::Transform, vec![input], common)
            },
            Command::Analyze { input, csv, common } => {
                let mut c = base(CommandKind::Analyze, vec![input], common);
                if csv {
                    c.format = Format::Csv;
                }
                c
            }
            Command::Wavelet { input, filter, out_dir, common } => RunConfig {
                out_dir: Some(out_dir),
                ..base(CommandKind::Wavelet, std::iter::once(input).chain(filter).collect(), common)
            },
            Command::MraLift { input, out_dir, common } => {
                RunConfig { out_dir: Some(out_dir), ..base(CommandKind::MraLift, vec![input], common) }
            }
        };
        config.validate()?;
        Ok(config)
    }

    fn validate(&self) -> Result<(), Failure> {
        if self.resolution < 1 {
            return Err(Failure::usage("--resolution must be at least 1"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Failure::usage("--tol must be positive"));
        }
        Ok(())
    }
}
