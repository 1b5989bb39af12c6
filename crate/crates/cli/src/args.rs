use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hypercover::algebra::{parse_rational, Rational};

#[derive(Parser, Debug)]
#[command(name = "hypercover", version, about = "Hyperelliptic curves with two maps to an elliptic curve")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Emit the curve family as JSON.
    Construct(ConstructArgs),
    /// Run the verification suite; exit 1 if a check fails.
    Verify(VerifyArgs),
    /// Emit L-polynomials of one curve at the given primes.
    Zeta(ZetaArgs),
    /// Check the isogeny decompositions; exit 1 if a check fails.
    Remarks(RemarksArgs),
    /// Emit the twist census as TSV.
    Twists(CensusArgs),
    /// Emit the growth table of the census as TSV.
    Growth(GrowthArgs),
}

pub fn rational(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

/// Exactly one of `--j` and `--A`.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct Param {
    /// j-invariant of the target curve, as "n" or "n/m".
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    pub j: Option<Rational>,
    /// The parameter A directly.
    #[arg(long = "A", value_parser = rational, allow_hyphen_values = true)]
    pub a: Option<Rational>,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[command(flatten)]
    pub param: Param,
    /// Write output here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub common: Common,
    /// B for the space curve; defaults to A.
    #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_enum, default_value = "2")]
    pub theorem: TheoremArg,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    /// 1: the space curve C; 2: the genus 5 family. Both by default.
    #[arg(long, value_enum)]
    pub theorem: Option<TheoremArg>,
    /// The first prime carries the numeric witnesses.
    #[arg(long, value_delimiter = ',', default_value = "101")]
    pub primes: Vec<u64>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    #[value(name = "E")]
    E,
    #[value(name = "D")]
    D,
    #[value(name = "H")]
    H,
    #[value(name = "H1")]
    H1,
    #[value(name = "H2")]
    H2,
    #[value(name = "Eprime")]
    Eprime,
    #[value(name = "C")]
    C,
}

impl CurveArg {
    pub fn name(self) -> &'static str {
        match self {
            CurveArg::E => "E",
            CurveArg::D => "D",
            CurveArg::H => "H",
            CurveArg::H1 => "H1",
            CurveArg::H2 => "H2",
            CurveArg::Eprime => "Eprime",
            CurveArg::C => "C",
        }
    }
}

#[derive(Args, Debug)]
pub struct ZetaArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_enum, default_value = "H")]
    pub curve: CurveArg,
    #[arg(long, value_delimiter = ',', default_value = "7,11,13")]
    pub primes: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct RemarksArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long = "B", value_parser = rational, allow_hyphen_values = true)]
    pub b: Option<Rational>,
    #[arg(long, value_delimiter = ',', default_value = "7,11,13")]
    pub primes: Vec<u64>,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[command(flatten)]
    pub common: Common,
    /// Bound on max(|n|, m) for t = n/m.
    #[arg(long, default_value_t = 25)]
    pub height: u64,
}

#[derive(Args, Debug)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub census: CensusArgs,
    #[arg(long, value_delimiter = ',', default_value = "10,100,1000,10000,100000,1000000")]
    pub grid: Vec<u64>,
}
