use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use rank2_cluster::affine::ParameterPoint;
use rank2_cluster::laurent::{GVector, DEFAULT_TERM_CAP};
use rank2_cluster::regions::DEFAULT_ORACLE_DEPTH;

#[derive(Debug, Parser)]
#[command(name = "rank2", version, about = "Dominance regions, supports and expansions in rank-2 cluster algebras A(b,c)")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalArgs {
    /// Exchange exponent b.
    #[arg(long, global = true)]
    pub b: Option<i64>,
    /// Exchange exponent c.
    #[arg(long, global = true)]
    pub c: Option<i64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Digits in decimal previews.
    #[arg(long, global = true, default_value_t = 12)]
    pub precision: usize,
    /// Largest number of terms any intermediate Laurent polynomial may have.
    #[arg(long, global = true, default_value_t = DEFAULT_TERM_CAP, value_parser = positive_usize)]
    pub term_cap: usize,
    /// Truncation depth of the dominance oracle.
    #[arg(long = "K", global = true, default_value_t = DEFAULT_ORACLE_DEPTH)]
    pub depth: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Svg,
    Text,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// The dominance region of a g-vector, its class and dominated lattice points.
    Dominance {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_gvector)]
        lambda: GVector,
    },
    /// The maximal support region of a g-vector.
    Support {
        #[arg(long, allow_hyphen_values = true, value_parser = parse_gvector)]
        lambda: GVector,
    },
    /// Laurent expansion of a cluster variable, cluster monomial or b = c = 2 basis element.
    Expand(ExpandArgs),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
}

#[derive(Debug, Clone, Args)]
#[group(skip)]
#[command(group = ArgGroup::new("element").required(true).multiple(false).args(["var", "monomial", "generic", "minor"]))]
pub struct ExpandArgs {
    /// Cluster variable x_m.
    #[arg(long, allow_hyphen_values = true)]
    pub var: Option<i64>,
    /// Cluster monomial x_k^a x_{k+1}^a' given as "k,a,a'".
    #[arg(long, allow_hyphen_values = true, value_parser = parse_monomial)]
    pub monomial: Option<(i64, u32, u32)>,
    /// Generic basis element of degree n (b = c = 2).
    #[arg(long)]
    pub generic: Option<u32>,
    /// Generalized minor of degree n (b = c = 2); needs --a with n nonzero entries.
    #[arg(long)]
    pub minor: Option<u32>,
    /// Parameter point "a1,a2,..." for --minor; rationals like 2/3 allowed.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_point)]
    pub a: Option<ParameterPoint>,
    /// Also expand in the pointed basis (b = c = 2).
    #[arg(long)]
    pub in_generic: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Chebyshev,
    Tropical,
    Dominance,
    Support,
    Affine,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Chebyshev => "chebyshev",
            Suite::Tropical => "tropical",
            Suite::Dominance => "dominance",
            Suite::Support => "support",
            Suite::Affine => "affine",
            Suite::All => "all",
        }
    }
}

fn parse_gvector(s: &str) -> Result<GVector, String> {
    s.parse().map_err(|e: rank2_cluster::Error| e.to_string())
}

fn parse_point(s: &str) -> Result<ParameterPoint, String> {
    s.parse().map_err(|e: rank2_cluster::Error| e.to_string())
}

fn parse_monomial(s: &str) -> Result<(i64, u32, u32), String> {
    let t = s.trim();
    let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
    let parts: Vec<&str> = t.split(',').map(str::trim).collect();
    let [k, a, a2] = parts.as_slice() else {
        return Err(format!("expected k,a,a' but got {s:?}"));
    };
    let bad = |what: &str| format!("invalid {what} in {s:?}");
    Ok((k.parse().map_err(|_| bad("k"))?, a.parse().map_err(|_| bad("a"))?, a2.parse().map_err(|_| bad("a'"))?))
}

fn positive_usize(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(n) => Ok(n),
        Err(e) => Err(e.to_string()),
    }
}
