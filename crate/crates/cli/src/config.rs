//! Command-line definitions and the translation from flags to library
//! parameters.
//!
//! Angles are accepted in multiples of π (`--dtheta 0.25` means π/4);
//! `--radians` switches both `--theta` and `--dtheta` to plain radians.
//! `--trunc` pins the truncation level N; otherwise the `ESL_DEFAULT_TRUNC`
//! environment variable applies, and failing that the built-in rule keyed
//! to the state amplitude.

use clap::{Args, Parser, Subcommand, ValueEnum};
use esl_core::families::ECParams;
use esl_core::fock::{adequate_dim, Tolerances};
use esl_core::quasiprob::GridSpec;
use num_complex::Complex64;

use crate::error::{CliError, Result};

pub const TRUNC_ENV: &str = "ESL_DEFAULT_TRUNC";

#[derive(Debug, Parser)]
#[command(
    name = "esl",
    about = "Empty states of bosonic mode families: statistics, phase-space grids, and limit builds",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Interpret --theta/--dtheta in radians instead of multiples of π.
    #[arg(long, global = true)]
    pub radians: bool,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output path; `-` writes to stdout.
    #[arg(long, global = true, default_value = "-")]
    pub out: String,

    /// Truncation level N (dimension N+1).
    #[arg(long, global = true)]
    pub trunc: Option<usize>,

    /// Normalization tolerance override.
    #[arg(long, global = true)]
    pub norm_tol: Option<f64>,

    /// Limit/necessary-condition tolerance override.
    #[arg(long, global = true)]
    pub limit_tol: Option<f64>,

    /// Grid cross-validation tolerance override.
    #[arg(long, global = true)]
    pub grid_tol: Option<f64>,

    /// Truncation-tail tolerance override.
    #[arg(long, global = true)]
    pub tail_tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Photon-number distribution P_n of the empty-coherent state.
    PhotonDist(EcArgs),
    /// Photon statistics (mean, fluctuation, Mandel Q, emptiness).
    Stats(EcArgs),
    /// Phase distribution over number-state phases.
    PhaseDist {
        #[command(flatten)]
        ec: EcArgs,
        /// Number of angle samples over [0, 2π).
        #[arg(long, default_value_t = 1024)]
        resolution: usize,
    },
    /// Quadrature variances and the squeezing verdict.
    Quadrature(QuadratureArgs),
    /// Husimi distribution of the empty-coherent state on a grid.
    Husimi(GridArgs),
    /// Wigner distribution of the empty-coherent state on a grid.
    Wigner(GridArgs),
    /// Numeric empty-state construction for a built-in family.
    BuildEmpty(BuildArgs),
    /// Empty state of a Fock level via the auxiliary-family double limit.
    EmptyFock(EmptyFockArgs),
    /// Run the full cross-validation suite.
    Validate,
    /// Emit the data behind a standard figure (1..=6).
    Figure {
        /// Figure number.
        id: usize,
    },
}

#[derive(Debug, Args)]
pub struct EcArgs {
    /// Coherent amplitude |α|.
    #[arg(long)]
    pub mag: f64,
    /// Phase θ of α.
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Source phase Δθ (the phase difference is δθ = Δθ − θ).
    #[arg(long = "delta-theta", visible_alias = "dtheta")]
    pub dtheta: f64,
}

#[derive(Debug, Args)]
pub struct QuadratureArgs {
    /// Coherent amplitude |α|.
    #[arg(long)]
    pub mag: f64,
    /// Phase θ of α. Required: the variances depend on Δθ and δθ separately.
    #[arg(long, required = true)]
    pub theta: f64,
    /// Source phase Δθ.
    #[arg(long = "delta-theta", visible_alias = "dtheta")]
    pub dtheta: f64,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Real part of β (shorthand for --beta-re).
    #[arg(long, conflicts_with = "beta_re")]
    pub beta: Option<f64>,
    /// Real part of β.
    #[arg(long)]
    pub beta_re: Option<f64>,
    /// Imaginary part of β.
    #[arg(long, default_value_t = 0.0)]
    pub beta_im: f64,
    /// Source phase Δθ (the phase difference is δθ = Δθ − arg β).
    #[arg(long = "delta-theta", visible_alias = "dtheta")]
    pub dtheta: f64,
    /// Evaluation window: re0,re1,im0,im1,nx,ny.
    #[arg(long, default_value = "-2,4,-3,3,201,201", allow_hyphen_values = true)]
    pub grid: String,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    /// Family to build from.
    #[arg(long, value_enum)]
    pub family: FamilyKind,
    /// Coherent amplitude |α| (coherent family).
    #[arg(long)]
    pub mag: Option<f64>,
    /// Phase θ of α (coherent family).
    #[arg(long, default_value_t = 0.0)]
    pub theta: f64,
    /// Fock level n (r-state family).
    #[arg(long)]
    pub n: Option<usize>,
    /// Fock level m (r-state family).
    #[arg(long)]
    pub m: Option<usize>,
    /// Base value of R (r-state family).
    #[arg(long = "R")]
    pub r: Option<f64>,
    /// Source phase Δθ of the vanishing perturbation.
    #[arg(long = "delta-theta", visible_alias = "dtheta")]
    pub dtheta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyKind {
    Coherent,
    RState,
}

#[derive(Debug, Args)]
pub struct EmptyFockArgs {
    /// Departure Fock level n of the auxiliary state.
    #[arg(long)]
    pub n: usize,
    /// Arrival Fock level m of the auxiliary state.
    #[arg(long)]
    pub m: usize,
    /// Source phase Δθ; the limit is e^{iΔθ}|m⟩.
    #[arg(long = "delta-theta", visible_alias = "dtheta")]
    pub dtheta: f64,
}

impl Cli {
    /// Converts a CLI angle to radians per the `--radians` flag.
    pub fn angle(&self, value: f64) -> f64 {
        if self.radians {
            value
        } else {
            value * std::f64::consts::PI
        }
    }

    pub fn tolerances(&self) -> Result<Tolerances> {
        let d = Tolerances::default();
        let t = Tolerances {
            norm_tol: self.norm_tol.unwrap_or(d.norm_tol),
            limit_tol: self.limit_tol.unwrap_or(d.limit_tol),
            grid_tol: self.grid_tol.unwrap_or(d.grid_tol),
            truncation_tail_tol: self.tail_tol.unwrap_or(d.truncation_tail_tol),
        };
        t.validate()?;
        Ok(t)
    }

    /// Resolves the truncation dimension: flag, then environment, then the
    /// built-in rule for `mag`.
    pub fn dim_for(&self, mag: f64) -> Result<usize> {
        if let Some(n) = self.trunc {
            return Ok(n + 1);
        }
        if let Ok(value) = std::env::var(TRUNC_ENV) {
            let n: usize = value.parse().map_err(|_| {
                CliError::Config(format!("{TRUNC_ENV} must be a nonnegative integer, got `{value}`"))
            })?;
            return Ok(n + 1);
        }
        Ok(adequate_dim(mag))
    }
}

impl EcArgs {
    pub fn params(&self, cli: &Cli) -> Result<ECParams> {
        Ok(ECParams::new(self.mag, cli.angle(self.theta), cli.angle(self.dtheta))?)
    }
}

impl QuadratureArgs {
    pub fn params(&self, cli: &Cli) -> Result<ECParams> {
        Ok(ECParams::new(self.mag, cli.angle(self.theta), cli.angle(self.dtheta))?)
    }
}

impl GridArgs {
    /// EC parameters with β given in Cartesian form; δθ = Δθ − arg β.
    pub fn params(&self, cli: &Cli) -> Result<ECParams> {
        let re = self.beta.or(self.beta_re).ok_or_else(|| {
            CliError::Config("either --beta or --beta-re is required".into())
        })?;
        let beta = Complex64::new(re, self.beta_im);
        Ok(ECParams::new(beta.norm(), beta.arg(), cli.angle(self.dtheta))?)
    }

    pub fn grid_spec(&self) -> Result<GridSpec> {
        parse_grid(&self.grid)
    }
}

pub fn parse_grid(text: &str) -> Result<GridSpec> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 6 {
        return Err(CliError::Config(format!(
            "--grid expects re0,re1,im0,im1,nx,ny (6 fields, got {})",
            parts.len()
        )));
    }
    let f = |i: usize| -> Result<f64> {
        parts[i]
            .parse()
            .map_err(|_| CliError::Config(format!("--grid field {} is not a number: `{}`", i + 1, parts[i])))
    };
    let n = |i: usize| -> Result<usize> {
        parts[i]
            .parse()
            .map_err(|_| CliError::Config(format!("--grid field {} is not an integer: `{}`", i + 1, parts[i])))
    };
    Ok(GridSpec::new(f(0)?, f(1)?, f(2)?, f(3)?, n(4)?, n(5)?)?)
}
