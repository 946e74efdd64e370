//! Command-line grammar.

use clap::{Args, Parser, Subcommand, ValueEnum};
use sov_core::macdonald::Weight;

#[derive(Debug, Parser)]
#[command(name = "sov", version, about = "Separation of variables for the three-particle trigonometric Ruijsenaars model")]
pub struct Cli {
    /// Print one structured document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// The Macdonald polynomial `P_λ` in the monomial basis.
    Macdonald(WeightArgs),
    /// The separated polynomial `S_λ(y)`.
    Seppoly(SeppolyArgs),
    /// The separating operator applied to a polynomial in t1, t2, t3.
    ApplyM(ApplyMArgs),
    /// The normalization constant `c_λ`.
    C(WeightArgs),
    /// Runs a verification suite.
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct WeightArgs {
    /// Comma-separated nondecreasing integers, e.g. `0,0,2`.
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: Weight,
}

#[derive(Debug, Args)]
pub struct SeppolyArgs {
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    pub weight: Weight,
    /// Number of particles; must equal the length of the weight.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct ApplyMArgs {
    /// Laurent polynomial in t1, t2, t3 with coefficients in q and l,
    /// symmetric under t1 <-> t2.
    #[arg(allow_hyphen_values = true)]
    pub expression: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Tables,
    Factorization,
    SeparatedEq,
    Commutativity,
    Classical,
    AppendixA,
    AppendixB,
    Numeric,
}

impl Suite {
    pub fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
    }
}

#[derive(Clone, Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Smallest admissible `λ1` of the sweep.
    #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
    pub min: i32,
    /// Largest admissible `λ3` of the sweep.
    #[arg(long, default_value_t = 3, allow_negative_numbers = true)]
    pub max: i32,
    #[arg(long, default_value_t = 0.5)]
    pub q: f64,
    /// Coupling with `ℓ = q^{-g}`; integer values select the difference form of `M^{-1}`.
    #[arg(long, default_value_t = 1.0)]
    pub g: f64,
    /// Nodes on the unit circle for the one-dimensional quadratures.
    #[arg(long, default_value_t = 512)]
    pub grid: usize,
    /// Seed for the random classical phase points.
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
}

impl Default for VerifyArgs {
    fn default() -> Self {
        VerifyArgs { suite: Suite::Tables, min: -2, max: 3, q: 0.5, g: 1.0, grid: 512, seed: 7 }
    }
}

pub fn parse_weight(s: &str) -> Result<Weight, String> {
    Weight::parse(s).map_err(|e| e.to_string())
}
