use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "rscount",
    version,
    about = "Characteristic numbers of complete intersections and Rarita-Schwinger bounds"
)]
pub struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Suppress the output document; only the exit code and diagnostics remain
    #[arg(long, short, global = true)]
    pub quiet: bool,

    /// Attach a provenance block (tool name, version, arguments) to JSON output
    #[arg(long, global = true)]
    pub meta: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Markdown,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Characteristic number and Rarita-Schwinger bound of one complete intersection
    Compute(ManifoldArgs),
    /// Parallel-spinor or Calabi-Yau tables
    Table(TableArgs),
    /// Run an exact verification suite
    Verify(VerifyArgs),
    /// Smallest even hypersurface degree whose characteristic number exceeds a threshold
    Search(SearchArgs),
    /// Bound for a complete intersection times a flat torus
    Product(ProductArgs),
}

#[derive(Debug, Args)]
pub struct ManifoldArgs {
    /// Complex dimension m
    #[arg(long = "complex-dim", short = 'm', value_parser = clap::value_parser!(u32).range(1..))]
    pub complex_dim: u32,

    /// Defining degrees a_1,...,a_r
    #[arg(
        long,
        short = 'd',
        required = true,
        num_args = 1..,
        value_delimiter = ',',
        value_parser = clap::value_parser!(u64).range(1..)
    )]
    pub degrees: Vec<u64>,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(value_enum)]
    pub name: TableName,

    /// Largest real dimension n (parallel-spinors)
    #[arg(long = "max-n")]
    pub max_n: Option<u64>,

    /// Largest even complex dimension m (calabi-yau)
    #[arg(long = "max-m")]
    pub max_m: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    ParallelSpinors,
    CalabiYau,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,

    /// Complex dimension (hypersurface-poly, symmetric-poly)
    #[arg(long, default_value_t = 4)]
    pub m: usize,

    /// Codimension (symmetric-poly)
    #[arg(long, default_value_t = 2)]
    pub r: usize,

    /// Largest even complex dimension (closed-form, torus-inequality)
    #[arg(long = "max-m", default_value_t = 30)]
    pub max_m: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    HypersurfacePoly,
    SymmetricPoly,
    ClosedForm,
    TorusInequality,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long = "complex-dim", short = 'm')]
    pub complex_dim: usize,

    /// Required lower bound C on the absolute characteristic number (exclusive)
    #[arg(long, short = 't')]
    pub threshold: String,
}

#[derive(Debug, Args)]
pub struct ProductArgs {
    #[command(flatten)]
    pub manifold: ManifoldArgs,

    /// Dimension k of the flat torus factor T^k
    #[arg(long = "torus-dim", short = 'k')]
    pub torus_dim: u64,
}
