use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use indicol_core::verify::KRange;

#[derive(Debug, Parser)]
#[command(name = "indicol", version, about = "Indicated coloring: analysis, strategy play and batch verification")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    pub format: Format,
    /// Node cap for the exact game solver.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Position cap for the optimal Ben adversary.
    #[arg(long, global = true)]
    pub play_budget: Option<u64>,
    /// Worker threads for corpus commands; 0 uses all cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
    /// Write the output to a file instead of stdout.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants, class memberships, decomposition and the winnable table.
    Analyze {
        /// Graph expression (`K[C5](2,1,1,1,1)`, `K1+C5`) or graph6 line.
        input: String,
        /// Solve the game for every palette size up to --kmax.
        #[arg(long)]
        exact: bool,
        /// Largest palette in the winnable table (default n).
        #[arg(long)]
        kmax: Option<usize>,
        /// Structural decomposition to compute (auto, p5k4kitebull, ...).
        #[arg(long)]
        decompose: Option<String>,
        /// Read the input as graph6 only.
        #[arg(long)]
        g6: bool,
    },
    /// Plays a class strategy against the optimal Ben on every graph of a corpus.
    VerifyClass {
        /// graph6 corpus, one graph per line; stdin if absent or `-`.
        corpus: Option<PathBuf>,
        #[arg(long)]
        class: String,
        /// Palette range such as `chi..chi+2`, `2..5` or `4`.
        #[arg(long, default_value = "chi..chi")]
        k: KRange,
    },
    /// Plays one match and prints the transcript.
    Play {
        input: String,
        #[arg(long)]
        k: usize,
        /// Ann's strategy by registry name, or `scripted` with --order.
        #[arg(long, default_value = "auto")]
        strategy: String,
        /// Ann's presentation order for `--strategy scripted` (e.g. `0,2`).
        #[arg(long, value_delimiter = ',')]
        order: Vec<usize>,
        #[arg(long, value_enum, default_value_t = BenKind::Optimal)]
        ben: BenKind,
        /// Ben's colors in order, for `--ben script` (e.g. `1,2,1`).
        #[arg(long, value_delimiter = ',')]
        script: Vec<u8>,
        #[arg(long)]
        g6: bool,
    },
    /// Runs a named cross-check over every graph of a corpus.
    EnumerateCheck {
        corpus: Option<PathBuf>,
        /// sandwich, chordal-equality, formula-kc5 or detector-oracle.
        #[arg(long)]
        invariant: String,
        /// Largest palette for winnable tables.
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Lists registered strategies, classes, invariants and decompositions.
    List,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenKind {
    Optimal,
    Script,
}
