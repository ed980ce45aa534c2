use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use semiclassical::correlator::{parse_elements, Block, Element};
use semiclassical::perm::CycleType;
use semiclassical::ribbon::Symmetry;
use semiclassical::weingarten::Ensemble;

#[derive(Debug, Parser)]
#[command(name = "semiclassical", version, about = "Weingarten coefficients, factorization counts and ribbon-diagram sums")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Run past the built-in size guards.
    #[arg(long, global = true)]
    pub force: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Class coefficient V(c) as an exact rational function of N.
    Weingarten(WeingartenArgs),
    /// Count or list monotone and palindromic factorizations.
    Factorize(FactorizeArgs),
    /// Signed factorization series next to the Laurent expansion of V(c).
    Series(SeriesArgs),
    /// Enumerate ribbon diagrams of a target.
    Diagrams(DiagramsArgs),
    /// Write Graphviz files for the diagrams of a target.
    Render(RenderArgs),
    /// Exact average of a product of matrix elements.
    Correlator(CorrelatorArgs),
    /// Exact transport moment.
    Moment(MomentArgs),
    /// Monte Carlo estimate of a correlator or moment.
    Mc(McArgs),
    /// Check factorization series, Laurent expansions, diagram sums and sampling against each other.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EnsembleArg {
    Cue,
    Coe,
}

impl From<EnsembleArg> for Ensemble {
    fn from(e: EnsembleArg) -> Self {
        match e {
            EnsembleArg::Cue => Ensemble::Cue,
            EnsembleArg::Coe => Ensemble::Coe,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryArg {
    #[value(alias = "unitary")]
    U,
    #[value(alias = "orthogonal")]
    O,
}

impl From<SymmetryArg> for Symmetry {
    fn from(s: SymmetryArg) -> Self {
        match s {
            SymmetryArg::U => Symmetry::Unitary,
            SymmetryArg::O => Symmetry::Orthogonal,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymmetryChoice {
    #[value(alias = "unitary")]
    U,
    #[value(alias = "orthogonal")]
    O,
    Both,
}

impl SymmetryChoice {
    pub fn symmetries(self) -> Vec<Symmetry> {
        match self {
            SymmetryChoice::U => vec![Symmetry::Unitary],
            SymmetryChoice::O => vec![Symmetry::Orthogonal],
            SymmetryChoice::Both => vec![Symmetry::Unitary, Symmetry::Orthogonal],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BlockArg {
    #[value(alias = "transmission")]
    T,
    #[value(alias = "reflection")]
    R,
}

impl From<BlockArg> for Block {
    fn from(b: BlockArg) -> Self {
        match b {
            BlockArg::T => Block::Transmission,
            BlockArg::R => Block::Reflection,
        }
    }
}

fn partition(text: &str) -> Result<CycleType, String> {
    CycleType::parse(text).map_err(|e| e.to_string())
}

/// A product of matrix elements as one flag value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factors(pub Vec<Element>);

fn elements(text: &str) -> Result<Factors, String> {
    parse_elements(text).map(Factors).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
pub struct WeingartenArgs {
    #[arg(long, value_enum)]
    pub ensemble: EnsembleArg,
    /// Cycle type such as `2,1`; for COE the halved type.
    #[arg(long, value_parser = partition)]
    pub partition: CycleType,
    /// Also expand in 1/N through N^-K.
    #[arg(long, value_name = "K", conflicts_with = "at")]
    pub laurent: Option<i64>,
    /// Also evaluate at this matrix size.
    #[arg(long, value_name = "N")]
    pub at: Option<u32>,
}

#[derive(Debug, Args)]
pub struct FactorizeArgs {
    #[arg(long = "type", value_enum)]
    pub kind: SymmetryArg,
    #[arg(long, value_parser = partition)]
    pub partition: CycleType,
    /// Number of (left) factors.
    #[arg(long)]
    pub v: usize,
    /// List the factorizations of the canonical target.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct SeriesArgs {
    #[arg(long = "type", value_enum)]
    pub kind: SymmetryArg,
    #[arg(long, value_parser = partition)]
    pub partition: CycleType,
    /// Highest power K of 1/N kept.
    #[arg(long)]
    pub order: i64,
}

#[derive(Debug, Args)]
pub struct TargetArgs {
    /// Target in cycle notation; barred labels are negative.
    #[arg(long)]
    pub target: String,
    /// Number of trajectory labels; defaults to the largest label present.
    #[arg(long)]
    pub t: Option<u32>,
    #[arg(long, value_enum)]
    pub symmetry: SymmetryArg,
    /// Keep diagrams with e - v up to this power of 1/N.
    #[arg(long)]
    pub max_order: i64,
}

#[derive(Debug, Args)]
pub struct DiagramsArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    /// Include every diagram in the report.
    #[arg(long)]
    pub list: bool,
    /// Also write one Graphviz file per diagram into this directory.
    #[arg(long, value_name = "DIR")]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[command(flatten)]
    pub target: TargetArgs,
    #[arg(long, value_name = "DIR")]
    pub dot: PathBuf,
}

#[derive(Debug, Args)]
pub struct CorrelatorArgs {
    #[arg(long, value_enum)]
    pub ensemble: EnsembleArg,
    #[arg(long)]
    pub n: u32,
    /// Unconjugated factors, `row,col;row,col`.
    #[arg(long, value_parser = elements)]
    pub z: Factors,
    /// Conjugated factors.
    #[arg(long, value_parser = elements)]
    pub zstar: Factors,
}

#[derive(Debug, Args)]
pub struct MomentArgs {
    #[arg(long, value_enum)]
    pub ensemble: EnsembleArg,
    #[arg(long)]
    pub n1: u32,
    #[arg(long)]
    pub n2: u32,
    /// Powers of the traces in the product, e.g. `2,1`.
    #[arg(long, value_delimiter = ',', required = true)]
    pub traces: Vec<usize>,
    #[arg(long, value_enum, default_value_t = BlockArg::T)]
    pub block: BlockArg,
    /// Also compute the literal channel sum.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, value_enum)]
    pub ensemble: EnsembleArg,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Matrix size, for a correlator.
    #[arg(long, requires = "z")]
    pub n: Option<u32>,
    #[arg(long, value_parser = elements, requires = "zstar", conflicts_with = "traces")]
    pub z: Option<Factors>,
    #[arg(long, value_parser = elements, requires = "z")]
    pub zstar: Option<Factors>,
    /// Trace powers, for a moment.
    #[arg(long, value_delimiter = ',', requires_all = ["n1", "n2"])]
    pub traces: Option<Vec<usize>>,
    #[arg(long)]
    pub n1: Option<u32>,
    #[arg(long)]
    pub n2: Option<u32>,
    #[arg(long, value_enum, default_value_t = BlockArg::T)]
    pub block: BlockArg,
    /// Also report the exact value and the deviation in standard errors.
    #[arg(long)]
    pub exact: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Largest number of trajectory labels.
    #[arg(long, default_value_t = 3)]
    pub max_t: usize,
    /// Orders kept beyond the leading one: series run through N^-(t+K).
    #[arg(long, value_name = "K", default_value_t = 4)]
    pub max_order: i64,
    #[arg(long, value_enum, default_value_t = SymmetryChoice::Both)]
    pub symmetry: SymmetryChoice,
    /// Also compare ribbon-diagram sums (t at most 3).
    #[arg(long)]
    pub with_diagrams: bool,
    /// Orders beyond the leading one for the diagram sums.
    #[arg(long, value_name = "K", default_value_t = 2)]
    pub diagram_order: i64,
    /// Also compare Monte Carlo estimates with exact correlators (t at most 3).
    #[arg(long)]
    pub with_mc: bool,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
}
