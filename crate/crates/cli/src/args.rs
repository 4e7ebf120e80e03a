use clap::{Args, Parser, Subcommand, ValueEnum};
use ringcode_core::{Layout, WeightKind};

#[derive(Debug, Parser)]
#[command(name = "ringcode", version, about = "Linear codes over Z_(p^s) and their Gray maps")]
pub struct Cli {
    /// Emit a single JSON report instead of plain text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Apply a Gray map to a value, a vector or a generator matrix.
    Map(MapArgs),
    /// Exhaustive verifiers.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Operations on a linear code given by a generator matrix.
    Code(CodeArgs),
    /// Built-in fixtures.
    #[command(subcommand)]
    Fixtures(FixturesCommand),
}

/// Which element map to use. Exactly one flag is required.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct MapChoice {
    /// Modular Gray map eta^s: Z_(2^s) -> Z_(2^(s-1))^2.
    #[arg(long)]
    pub eta: bool,
    /// Permuted modular Gray map xi^s (tabulated for s = 2, 3, 4).
    #[arg(long)]
    pub xi: bool,
    /// Generalized Gray map Z_(p^s) -> Z_p^(p^(s-1)).
    #[arg(long)]
    pub carlet: bool,
    /// eta^2 . ... . eta^s, down to Z_2.
    #[arg(long)]
    pub compose: bool,
    /// eta^3 . ... . eta^s, down to Z_4.
    #[arg(long)]
    pub vega: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MapKind {
    Eta,
    Xi,
    Carlet,
    Compose,
    Vega,
}

impl MapChoice {
    pub fn kind(&self) -> MapKind {
        match (self.eta, self.xi, self.carlet, self.compose) {
            (true, ..) => MapKind::Eta,
            (_, true, ..) => MapKind::Xi,
            (_, _, true, _) => MapKind::Carlet,
            (.., true) => MapKind::Compose,
            _ => MapKind::Vega,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct MapTarget {
    #[command(flatten)]
    pub map: MapChoice,

    /// Exponent s of the domain ring Z_(p^s).
    #[arg(short = 's', long = "s")]
    pub s: u32,

    /// Prime p (only meaningful with --carlet).
    #[arg(long, default_value_t = 2)]
    pub p: u64,

    /// How coordinate images are laid out in a mapped vector.
    #[arg(long, default_value = "blockwise", value_parser = parse_layout)]
    pub layout: Layout,
}

#[derive(Debug, Args)]
pub struct MapArgs {
    #[command(flatten)]
    pub target: MapTarget,

    /// A single ring element.
    #[arg(long, group = "input")]
    pub value: Option<i128>,

    /// A whitespace- or comma-separated vector.
    #[arg(long, group = "input", allow_hyphen_values = true)]
    pub vector: Option<String>,

    /// A fixture name or a matrix file; every row is mapped.
    #[arg(long, group = "input")]
    pub matrix: Option<String>,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// All-pairs distance preservation over vectors of length n.
    Isometry(IsometryArgs),
    /// Compare eta^s . ... . eta^2 with the generalized map at p = 2.
    Composition {
        #[arg(short = 's', long = "s")]
        s: u32,
    },
    /// Whether eta^s maps onto the code spanned by (1,1) and (0,2^(s-2)).
    RmImage {
        #[arg(short = 's', long = "s")]
        s: u32,
    },
    /// Whether the eta^s images of a code's p-basis are 2-linearly independent.
    BasisIndependence {
        /// Fixture name or matrix file over Z_(2^s).
        matrix: String,
        #[arg(long, default_value = "blockwise", value_parser = parse_layout)]
        layout: Layout,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(Debug, Args)]
pub struct IsometryArgs {
    #[command(flatten)]
    pub target: MapTarget,

    /// Distance on the domain.
    #[arg(long, default_value = "homogeneous", value_parser = parse_weight)]
    pub weight: WeightKind,

    /// Distance on the codomain (defaults to --weight).
    #[arg(long, value_parser = parse_weight)]
    pub target_weight: Option<WeightKind>,

    /// Vector length.
    #[arg(long, default_value_t = 1)]
    pub n: usize,

    #[command(flatten)]
    pub cap: CapArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CodeOp {
    StandardForm,
    Dual,
    Enumerate,
    MinDistance,
    Cardinality,
    SelfOrthogonal,
    PBasis,
}

#[derive(Debug, Args)]
pub struct CodeArgs {
    pub op: CodeOp,

    /// Fixture name or matrix file.
    pub matrix: String,

    /// Weight for min-distance (all five when omitted) or enumerate (prints the distribution).
    #[arg(long, value_parser = parse_weight)]
    pub weight: Option<WeightKind>,

    #[command(flatten)]
    pub cap: CapArgs,
}

#[derive(Debug, Clone, Args)]
pub struct CapArgs {
    /// Enumeration cap; overrides RINGCODE_CAP.
    #[arg(long)]
    pub cap: Option<u64>,

    /// Ignore the enumeration cap.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Subcommand)]
pub enum FixturesCommand {
    /// List fixture names with kind, ring and provenance.
    List,
    /// Print one fixture in the file format.
    Show { name: String },
}

fn parse_weight(s: &str) -> Result<WeightKind, String> {
    s.parse()
}

fn parse_layout(s: &str) -> Result<Layout, String> {
    s.parse()
}
