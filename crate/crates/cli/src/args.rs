use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::output::Format;

#[derive(Debug, Parser)]
#[command(
    name = "circumsphere",
    version,
    about = "Volumes and growth ratios of hyperspheres circumscribing unit hypercubes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Volume of an n-ball, given a radius or circumscribing the unit cube.
    Volume(VolumeArgs),
    /// Growth ratio V_{n+1}/V_n of the circumscribed family.
    Ratio(RatioArgs),
    /// Growth formula sampled over a real-valued dimension range.
    Figure(FigureArgs),
    /// Distance of the growth ratio from its limit over a set of dimensions.
    Converge(ConvergeArgs),
    /// Dimension of maximal ball volume at a fixed radius.
    Peak(PeakArgs),
    /// Hit-or-miss Monte Carlo estimate of an n-ball volume.
    Mc(McArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("size").required(true).args(["radius", "circumscribe"])))]
pub struct VolumeArgs {
    #[arg(long)]
    pub dim: u64,
    #[arg(long)]
    pub radius: Option<f64>,
    /// Use the radius √n/2 of the sphere through the unit cube's vertices.
    #[arg(long)]
    pub circumscribe: bool,
    /// Report only the natural log of the volume.
    #[arg(long)]
    pub log: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct RatioArgs {
    #[arg(long)]
    pub dim: u64,
    /// Evaluate the printed closed formula, which equals V_n/V_{n−1}.
    #[arg(long)]
    pub literal_eq3: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct FigureArgs {
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    pub min: f64,
    #[arg(long, default_value_t = 25.0, allow_negative_numbers = true)]
    pub max: f64,
    #[arg(long, default_value_t = 500)]
    pub points: usize,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct ConvergeArgs {
    /// Comma-separated dimensions, each at least 3.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dims: Vec<u64>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct PeakArgs {
    #[arg(long)]
    pub radius: f64,
    /// Largest dimension scanned.
    #[arg(long, default_value_t = 1000)]
    pub n_max: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
#[command(group(clap::ArgGroup::new("size").required(true).args(["radius", "circumscribe"])))]
pub struct McArgs {
    #[arg(long)]
    pub dim: u64,
    #[arg(long)]
    pub radius: Option<f64>,
    #[arg(long)]
    pub circumscribe: bool,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

impl Command {
    pub fn output(&self) -> &OutputArgs {
        match self {
            Command::Volume(a) => &a.output,
            Command::Ratio(a) => &a.output,
            Command::Figure(a) => &a.output,
            Command::Converge(a) => &a.output,
            Command::Peak(a) => &a.output,
            Command::Mc(a) => &a.output,
        }
    }
}
