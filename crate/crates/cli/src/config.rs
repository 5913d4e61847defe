use std::path::PathBuf;

use clap::{Parser, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Nondominated extreme points of a point set or graph instance.
    Extremes,
    /// The full Pareto front.
    Front,
    /// Nondominated extreme points of a biobjective LP.
    LpExtremes,
    /// Write the knapsack reduction graph.
    GenerateGadget,
    /// Exhaustive enumeration, for checking.
    Brute,
    /// Delay counters and verdicts for a streaming algorithm.
    BenchDelay,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algorithm {
    DaPlain,
    DaLex,
    DaPolydelay,
    EpsSweep,
    BilpWalk,
    Prop1Merge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Ndjson,
    Table,
}

/// How to read the input file.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Problem {
    /// Graph files by their header, anything else as a point set.
    #[default]
    Auto,
    Points,
    /// Source-sink paths of a directed graph.
    Paths,
    /// Spanning trees of an undirected graph.
    Trees,
    /// Cuts of an undirected graph.
    Cuts,
    /// Unconstrained binary problem.
    Subset,
    Lp,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Target {
    #[default]
    Extremes,
    Front,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(name = "bipareto", version, about = "Exact biobjective Pareto enumeration")]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    #[arg(long, value_enum)]
    pub algorithm: Option<Algorithm>,
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t)]
    pub problem: Problem,
    /// What `brute` enumerates.
    #[arg(long, value_enum, default_value_t)]
    pub target: Target,
    /// Node cap for graph enumeration (paths, trees, cuts).
    #[arg(long)]
    pub cap_nodes: Option<usize>,
    /// Size cap for subset and LP enumeration, and knapsack items.
    #[arg(long)]
    pub cap_n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Fill `t_mono_ns`; output is then no longer reproducible.
    #[arg(long)]
    pub timestamps: bool,
    /// Random instances for `bench-delay` without `--input`.
    #[arg(long, default_value_t = 100)]
    pub runs: usize,
    /// Points per random `bench-delay` instance.
    #[arg(long, default_value_t = 50)]
    pub points: usize,
    /// Items of a random knapsack for `generate-gadget` without `--input`.
    #[arg(long, default_value_t = 6)]
    pub items: usize,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig::parse_from(["bipareto", command.to_possible_value().unwrap().get_name()])
    }

    /// The algorithm to use, after defaults and the command/algorithm check.
    pub fn resolved_algorithm(&self) -> Result<Option<Algorithm>, String> {
        use Algorithm::*;
        let (allowed, default): (&[Algorithm], Option<Algorithm>) = match self.command {
            Command::Extremes => (&[DaPlain, DaLex, DaPolydelay], Some(DaPolydelay)),
            Command::Front => (&[EpsSweep, Prop1Merge], Some(EpsSweep)),
            Command::LpExtremes => (&[BilpWalk], Some(BilpWalk)),
            Command::BenchDelay => (&[DaLex, DaPolydelay, EpsSweep], Some(DaPolydelay)),
            Command::GenerateGadget | Command::Brute => (&[], None),
        };
        match self.algorithm {
            None => Ok(default),
            Some(a) if allowed.contains(&a) => Ok(Some(a)),
            Some(a) => Err(format!(
                "algorithm {} is not valid for {}",
                name(a),
                self.command.to_possible_value().unwrap().get_name()
            )),
        }
    }
}

pub fn name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().unwrap().get_name().to_string()
}
