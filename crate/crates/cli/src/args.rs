use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ktree-lab", version, about = "Random k-tree laboratory")]
pub struct Cli {
    /// Worker threads for multi-trial runs (default: all cores).
    #[arg(long, global = true, env = "KTREE_LAB_THREADS")]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one random k-tree (or partial k-tree) as an edge list.
    Generate(GenerateArgs),
    /// Emit the limiting degree distribution and, with --n, exact expected counts.
    Theory(TheoryArgs),
    /// Degree histogram, deviation from theory and tail-exponent fit.
    Analyze(AnalyzeArgs),
    /// Spread of X_d(n) over independent trials against the Azuma bound.
    Concentration(ConcentrationArgs),
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Edge list destination; `-` for stdout.
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
    /// Also write a width-k tree decomposition in PACE .td format.
    #[arg(long)]
    pub td: Option<PathBuf>,
    /// Keep round(b*k) of each vertex's k attachment edges.
    #[arg(long)]
    pub partial_b: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct TheoryArgs {
    #[arg(long)]
    pub k: usize,
    /// Largest degree in the table (default: smallest d with beta_d n < 1e-4,
    /// using n = 10^6 when --n is absent).
    #[arg(long = "dmax")]
    pub d_max: Option<usize>,
    /// Include exact expected counts E[X_d(n)].
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Required unless --input carries a `# ktree` header.
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Generated graphs to aggregate (ignored with --input).
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    /// Analyze an edge list instead of generating.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long = "dmin", default_value_t = 10)]
    pub d_min: usize,
    /// Largest degree in the deviation report.
    #[arg(long = "dcut", default_value_t = 50)]
    pub d_cut: usize,
    /// Output prefix: writes <prefix>.hist.csv, <prefix>.deviation.csv, <prefix>.summary.json.
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct ConcentrationArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    /// Degree to track (default: k).
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value = "-")]
    pub out: PathBuf,
}
