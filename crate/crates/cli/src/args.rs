use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "pathdom",
    version,
    about = "Random online domination of paths and related graphs"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,

    /// Write results here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    /// Print timing and extra diagnostics to standard error.
    #[arg(long, short, global = true, action = clap::ArgAction::Count)]
    pub verbose: u8,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the procedure for one revelation order.
    Simulate(SimulateArgs),
    /// Exact expected size of the dominating set.
    Expect(ExpectArgs),
    /// Count worst-case or best-case orders of the path.
    Extremal(ExtremalArgs),
    /// Tabulate D(n) and f(n) from the generating functions.
    Series(SeriesArgs),
    /// Sample the size distribution for random orders.
    Sample(SampleArgs),
    /// Cross-check every method against the others and the reference tables.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Path,
    Cycle,
    Star,
    Wheel,
    Multipartite,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long, value_enum, default_value_t = FamilyArg::Path)]
    pub family: FamilyArg,

    /// Vertices (path, cycle), leaves (star) or spokes (wheel).
    #[arg(long)]
    pub n: Option<usize>,

    /// Part sizes for the complete multipartite graph, e.g. `2,3`.
    #[arg(long, value_delimiter = ',')]
    pub parts: Vec<usize>,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    /// Revelation order, e.g. `1,3,5,2,4,6` or `135246`.
    #[arg(long)]
    pub order: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ExpectMethod {
    Recurrence,
    ClosedForm,
}

#[derive(Debug, Args)]
pub struct ExpectArgs {
    #[command(flatten)]
    pub graph: GraphArgs,

    /// Route for the path expectation.
    #[arg(long, value_enum, default_value_t = ExpectMethod::Recurrence)]
    pub method: ExpectMethod,

    /// Also report the uncorrected expression (path closed form, wheel).
    #[arg(long)]
    pub as_printed: bool,

    /// Always print `p/q`, even for integers.
    #[arg(long)]
    pub rational: bool,

    /// Report the Caro–Wei lower bound alongside.
    #[arg(long)]
    pub caro_wei: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundArg {
    Worst,
    Best,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    BruteForce,
    Recurrence,
    Egf,
    Formula,
    All,
}

#[derive(Debug, Args)]
pub struct BruteForceArgs {
    /// Largest n enumerated exhaustively.
    #[arg(long, default_value_t = pathdom_core::enumerate::DEFAULT_BRUTE_FORCE_CAP)]
    pub cap: usize,

    /// Enumerate even when n exceeds the cap.
    #[arg(long)]
    pub allow_large: bool,

    /// Worker threads (defaults to all cores).
    #[arg(long, env = "PATHDOM_WORKERS")]
    pub workers: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ExtremalArgs {
    #[arg(long)]
    pub n: usize,

    #[arg(long, value_enum, default_value_t = BoundArg::Worst)]
    pub bound: BoundArg,

    #[arg(long, value_enum, default_value_t = MethodArg::All)]
    pub method: MethodArg,

    /// Witness orders to keep from brute force (printed in text mode only when given).
    #[arg(long)]
    pub witnesses: Option<usize>,

    #[command(flatten)]
    pub brute: BruteForceArgs,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    /// Truncation order.
    #[arg(long, default_value_t = pathdom_core::series::DEFAULT_ORDER)]
    pub order: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    None,
    PerVertex,
    Centered,
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long, default_value_t = 2000)]
    pub n: usize,

    #[arg(long, default_value_t = 40000)]
    pub samples: u64,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, env = "PATHDOM_WORKERS")]
    pub workers: Option<usize>,

    /// Transformation applied to plot data.
    #[arg(long, value_enum, default_value_t = NormalizationArg::PerVertex)]
    pub normalization: NormalizationArg,

    /// Write two-column `x weight` plot data here.
    #[arg(long)]
    pub plot_data: Option<PathBuf>,

    /// Write the JSON summary here (defaults to `<output>.json` when `--output` is set).
    #[arg(long)]
    pub sidecar: Option<PathBuf>,

    /// Refuse runs with n * samples above this.
    #[arg(long, default_value_t = pathdom_core::montecarlo::DEFAULT_WORK_BUDGET)]
    pub work_budget: u64,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Brute force to n = 8, series order 32.
    #[arg(long, conflicts_with = "full")]
    pub quick: bool,

    /// Brute force to n = 10, series order 64.
    #[arg(long)]
    pub full: bool,

    /// Override the brute-force cap of the chosen depth.
    #[arg(long)]
    pub cap: Option<usize>,

    /// Override the series order of the chosen depth.
    #[arg(long)]
    pub order: Option<usize>,

    #[arg(long, env = "PATHDOM_WORKERS")]
    pub workers: Option<usize>,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_parts_list_and_global_flags() {
        let cli = Cli::try_parse_from([
            "pathdom",
            "expect",
            "--family",
            "multipartite",
            "--parts",
            "2,3",
            "--format",
            "json",
        ])
        .unwrap();
        assert_eq!(cli.format, Format::Json);
        let Command::Expect(a) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(a.graph.family, FamilyArg::Multipartite);
        assert_eq!(a.graph.parts, [2, 3]);
    }

    #[test]
    fn quick_and_full_conflict() {
        assert!(Cli::try_parse_from(["pathdom", "verify", "--quick", "--full"]).is_err());
    }

    #[test]
    fn extremal_defaults() {
        let cli = Cli::try_parse_from(["pathdom", "extremal", "--n", "5"]).unwrap();
        let Command::Extremal(a) = cli.command else {
            panic!("wrong subcommand")
        };
        assert_eq!(a.bound, BoundArg::Worst);
        assert_eq!(a.method, MethodArg::All);
        assert_eq!(a.brute.cap, pathdom_core::enumerate::DEFAULT_BRUTE_FORCE_CAP);
    }
}
