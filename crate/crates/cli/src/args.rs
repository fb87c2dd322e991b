use std::ops::RangeInclusive;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use critgraph::constraints::TargetParams;

pub const CATALOG_ENV: &str = "CRITGRAPH_CATALOG";

#[derive(Debug, Parser)]
#[command(name = "critgraph", version, about = "Structural checks and degree-sequence tables for candidate R(3,10)-critical graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check every graph6 line of a file against a target profile.
    Analyze(AnalyzeArgs),
    /// Verify the (3,9,35) graph from the catalog directory.
    Verify(VerifyArgs),
    /// Degree-sequence classes for one (n, e, d6) cell or the derived lists.
    Degseq(DegseqArgs),
    /// Regenerate the degree-sequence tables of 41-vertex graphs.
    Tables(TablesArgs),
    /// Partition triples, or the neighborhood partition profiles of input graphs.
    Partition(PartitionArgs),
    /// Distance-layer sizes around vertices of input graphs.
    Layers(LayersArgs),
    /// Checksum audit of the bundled printed tables.
    Audit(FormatArg),
    /// Emit a fixture graph in graph6.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// graph6 file, one graph per line; `-` reads standard input.
    pub path: PathBuf,
    /// gamma41, omega40 or custom:S,T,N.
    #[arg(long, default_value = "gamma41", value_parser = parse_profile)]
    pub profile: TargetParams,
    #[command(flatten)]
    pub format: FormatArg,
    /// Also forbid degree-6 vertices in the residual of a degree-6 vertex.
    #[arg(long)]
    pub strict: bool,
    /// Check every minimum vertex cut rather than looking for one witness.
    #[arg(long)]
    pub exhaustive_cuts: bool,
    /// Largest number of candidate cuts to examine; implies --exhaustive-cuts.
    #[arg(long)]
    pub budget: Option<u64>,
    /// Clauses to leave out of the report, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub disable: Vec<String>,
    /// Append one JSON record per graph to this file.
    #[arg(long)]
    pub log: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Directory holding r39_35.g6.
    #[arg(long, env = CATALOG_ENV, default_value = "catalog")]
    pub catalog_dir: PathBuf,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct DegseqArgs {
    #[arg(long, default_value_t = 41)]
    pub n: usize,
    #[arg(long)]
    pub e: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub d6: usize,
    /// The combined sequences of diameter-2 graphs with a degree-6 vertex.
    #[arg(long, conflicts_with_all = ["e", "nv", "gammav"])]
    pub diam2: bool,
    /// With --diam2, forbid degree-6 vertices in the residual.
    #[arg(long, requires = "diam2")]
    pub strict: bool,
    /// Closed-neighborhood contributions for this many boundary edges (44..=48).
    #[arg(long, conflicts_with_all = ["e", "gammav"])]
    pub nv: Option<usize>,
    /// Residual contributions for this residual degree sum (302..=306).
    #[arg(long, conflicts_with = "e")]
    pub gammav: Option<usize>,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    /// Edge count or range `A..B`, within 172..184.
    #[arg(long, default_value = "172..184", value_parser = parse_range)]
    pub e: RangeInclusive<usize>,
    /// Degree-6 count or range `A..B`, within 0..6.
    #[arg(long, default_value = "0..6", value_parser = parse_range)]
    pub d6: RangeInclusive<usize>,
    /// Also list printed rows that fail a checksum.
    #[arg(long)]
    pub audit: bool,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct PartitionArgs {
    /// graph6 file; without it the admissible partition triples are listed.
    pub path: Option<PathBuf>,
    /// Only this vertex.
    #[arg(long)]
    pub vertex: Option<usize>,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct LayersArgs {
    /// graph6 file; `-` reads standard input.
    pub path: PathBuf,
    /// Only this vertex.
    #[arg(long)]
    pub vertex: Option<usize>,
    #[command(flatten)]
    pub format: FormatArg,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[command(subcommand)]
    pub kind: GenKind,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
    /// Circulant graph; offsets comma separated, each in 1..=n/2.
    Circulant {
        n: usize,
        #[arg(value_delimiter = ',', required = true)]
        offsets: Vec<usize>,
    },
    Petersen,
    /// Maximal triangle-free graph from random edge insertion.
    RandomTriangleFree {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn parse_profile(s: &str) -> Result<TargetParams, String> {
    s.parse().map_err(|e: critgraph::constraints::ProfileParseError| e.to_string())
}

/// `A` or `A..B` (inclusive).
pub fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("invalid number {t:?}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let x = num(s)?;
            (x, x)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_is_well_formed() {
        Cli::command().debug_assert();
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("172").unwrap(), 172..=172);
        assert_eq!(parse_range("172..184").unwrap(), 172..=184);
        assert_eq!(parse_range("0..=6").unwrap(), 0..=6);
        assert!(parse_range("5..3").is_err());
        assert!(parse_range("x").is_err());
    }
}
