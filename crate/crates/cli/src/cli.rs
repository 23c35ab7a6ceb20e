//! Command-line grammar.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "chroma", version, about = "Certified graph colouring on DIMACS instances")]
pub struct Cli {
    /// Output format for run reports.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    Greedy,
    Dsatur,
    Wigderson,
    Lawler,
    Palette,
    Dp,
    Fromdecision,
    Kms,
    Hybrid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Order {
    Given,
    LargestFirst,
    SmallestLast,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum DecideMethod {
    Ie,
    Exhaustive,
    Lawler,
    Dp,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NumberMethod {
    Dp,
    DpMaximal,
    Ie,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PolyMethod {
    Contraction,
    Addition,
    Whitney,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReduceTo {
    /// q-colouring of a graph to 3-colouring (needs --q).
    #[value(name = "3col")]
    ThreeCol,
    /// CNF satisfiability to (r+1)-colouring.
    Sat,
    /// q-colouring to (q+1)-colouring by adding an apex (needs --q).
    Apex,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Colour a graph with one of the colouring algorithms.
    Colour {
        #[arg(long, value_enum)]
        alg: Algorithm,
        /// Vertex order for the greedy algorithm.
        #[arg(long, value_enum, default_value_t = Order::Given)]
        order: Order,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of colours for the decision-based construction.
        #[arg(long)]
        q: Option<u32>,
        /// Degree threshold for the hybrid algorithm.
        #[arg(long)]
        d: Option<usize>,
        /// Round limit for palette restriction.
        #[arg(long, default_value_t = 10_000)]
        max_rounds: usize,
        file: PathBuf,
    },
    /// Decide whether a graph is q-colourable.
    Decide {
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = DecideMethod::Ie)]
        method: DecideMethod,
        file: PathBuf,
    },
    /// Compute the chromatic number exactly.
    ChromaticNumber {
        #[arg(long, value_enum, default_value_t = NumberMethod::Dp)]
        method: NumberMethod,
        file: PathBuf,
    },
    /// Compute the chromatic polynomial.
    Poly {
        #[arg(long, value_enum, default_value_t = PolyMethod::Contraction)]
        method: PolyMethod,
        file: PathBuf,
    },
    /// Edge-colour with at most max degree + 1 colours.
    EdgeColour { file: PathBuf },
    /// Compute the chromatic index exactly.
    ChromaticIndex { file: PathBuf },
    /// Draw a q-colouring with Glauber dynamics.
    Sample {
        #[arg(long)]
        q: u32,
        /// Defaults to the guaranteed mixing time.
        #[arg(long)]
        steps: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run even when q is not above 4 times the maximum degree.
        #[arg(long)]
        allow_unproven: bool,
        file: PathBuf,
    },
    /// Find a vector colouring, or estimate the vector chromatic number.
    Vector {
        #[arg(long)]
        q: Option<f64>,
        #[arg(long, default_value_t = 1e-3)]
        tol: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20_000)]
        max_iters: usize,
        file: PathBuf,
    },
    /// Apply a reduction, optionally solving the result and mapping the
    /// solution back.
    Reduce {
        #[arg(value_enum)]
        to: ReduceTo,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        solve: bool,
        /// Write the reduced graph here in DIMACS form.
        #[arg(long)]
        output: Option<PathBuf>,
        file: PathBuf,
    },
    /// Re-check a stored report against its instance.
    Verify { instance: PathBuf, report: PathBuf },
    /// Cross-check the exact algorithms and the 3-colouring heuristics.
    Xcheck {
        /// All graphs with up to this many vertices.
        #[arg(long)]
        exhaustive: Option<usize>,
        /// Number of random graphs.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 7)]
        max_n: usize,
        /// Number of planted 3-colourable graphs.
        #[arg(long)]
        planted: Option<usize>,
        #[arg(long, default_value_t = 12)]
        planted_n: usize,
        #[arg(long, default_value_t = 0.4)]
        planted_p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Extra instances for the exact suite.
        files: Vec<PathBuf>,
    },
    /// Write a generated instance in DIMACS form.
    Gen {
        /// crown, cycle, complete, random, planted3col, grotzsch, petersen,
        /// florentine or paw.
        kind: String,
        params: Vec<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}
