//! Command-line interface definition.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(
    name = "hamverify",
    about = "Numerical verification of symplectic self-adjointness criteria for 2x2 block operator matrices, with the plate-bending application",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Validate Hamiltonian structure and run the direct and range criteria.
    Validate(CriteriaArgs),
    /// Frobenius-Schur factorizations of a block operator matrix.
    Factorize(FactorizeArgs),
    /// Full criteria battery: direct, range, both domain-shape criteria, and
    /// the JH factorizations.
    Criteria(CriteriaArgs),
    /// Relative-bound estimation and perturbation-hypothesis reports.
    Bounds(BoundsArgs),
    /// Spectrum of the plate Hamiltonian against the closed-form reference.
    PlateSpectrum(PlateSpectrumArgs),
    /// Per-mode evolution solves for a plate problem config.
    PlateSolve(PlateSolveArgs),
    /// Manufactured-solution verification of the plate pipeline.
    PlateVerify(PlateVerifyArgs),
    /// Re-render existing JSON reports into plot-ready CSV tables.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Builtin {
    /// The plate Hamiltonian `[[A, A+1], [0, -A]]`.
    Plate,
    /// The mirrored Hamiltonian `[[A, A], [-A, -A]]` over the plate `A`.
    Mirror,
    /// Seeded random Hamiltonian with Hermitian `B`, `C`.
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Both,
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Built-in operator selector (mutually exclusive with file inputs).
    #[arg(long, value_enum)]
    pub builtin: Option<Builtin>,

    /// Truncation index for plate/mirror, block dimension for random.
    #[arg(long, default_value_t = 16)]
    pub modes: usize,

    /// Seed for the random builtin (recorded in reports).
    #[arg(long, default_value_t = 42)]
    pub seed: u64,

    /// Matrix Market file for block A.
    #[arg(long)]
    pub a: Option<PathBuf>,

    /// Matrix Market file for block B.
    #[arg(long)]
    pub b: Option<PathBuf>,

    /// Matrix Market file for block C.
    #[arg(long)]
    pub c: Option<PathBuf>,

    /// Matrix Market file for block D (optional; validated against -A*).
    #[arg(long)]
    pub d: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    /// Output directory (default: $HAMVERIFY_OUT or ./hamverify-out).
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Both)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CriteriaArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Comma-separated complex spectral parameters, e.g. "i,1+2i".
    /// Default: an automatically chosen resolvent point and its double.
    #[arg(long)]
    pub lambda: Option<String>,

    /// Relative tolerance for pass/fail decisions.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct FactorizeArgs {
    #[command(flatten)]
    pub input: InputArgs,

    #[arg(long)]
    pub lambda: Option<String>,

    /// Which Schur complement to expose: first, second, or both.
    #[arg(long, default_value = "both")]
    pub which: String,

    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub input: InputArgs,

    /// Truncation schedule, comma separated.
    #[arg(long, visible_alias = "N", default_value = "64,256,1024,4096")]
    pub n_schedule: String,

    /// Positive imaginary-shift schedule, comma separated.
    #[arg(long, default_value = "10,100,1000,10000")]
    pub lambda_schedule: String,

    /// Also run the divergence witness at these truncations.
    #[arg(long, default_value = "100,400")]
    pub witness_schedule: String,

    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PlateSpectrumArgs {
    /// Truncation index N.
    #[arg(long, default_value_t = 16)]
    pub modes: usize,

    /// Also export the dense Hamiltonian in Matrix Market format.
    #[arg(long)]
    pub export_h: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PlateSolveArgs {
    /// Plate problem config file.
    #[arg(long)]
    pub problem: PathBuf,

    /// Sample points per trajectory.
    #[arg(long, default_value_t = 33)]
    pub samples: usize,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct PlateVerifyArgs {
    /// Modes to verify, comma separated.
    #[arg(long, default_value = "1,2,3")]
    pub modes_list: String,

    /// Span of the x interval.
    #[arg(long, default_value_t = 1.0)]
    pub span: f64,

    /// Flexural rigidity D.
    #[arg(long, default_value_t = 1.0)]
    pub rigidity: f64,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct RenderArgs {
    /// Directory containing previously written JSON reports.
    #[arg(long)]
    pub reports: PathBuf,

    #[command(flatten)]
    pub output: OutputArgs,
}
