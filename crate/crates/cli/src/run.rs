use std::io::Write;

use bipareto_core::brute::{self, Caps, ExplicitSetOracle, Instance};
use bipareto_core::dichotomic::{da_lex, da_plain_counted, da_polydelay};
use bipareto_core::epsfront::eps_front_2d;
use bipareto_core::hull::hull_extremes_2d;
use bipareto_core::lp::{bilp_extreme_points, LpInstance};
use bipareto_core::problems::{
    kp_to_mosp, mincut::DEFAULT_NODE_CAP, mincut_eps_oracle, most_oracle, mosp_oracle,
    CostDigraph, CostGraph, Prop1Merge, UnconstrainedBi,
};
use bipareto_core::{dominance, CallCounts, Enumerator, Error, ScalarizationOracle};

use crate::bench;
use crate::config::{name, Algorithm, Command, Problem, RunConfig, Target};
use crate::error::CliError;
use crate::formats::{self, Graph};
use crate::gen;
use crate::output::Sink;

/// A parsed input file.
pub enum Loaded {
    Points(Vec<bipareto_core::Point>),
    Paths(CostDigraph),
    Trees(CostGraph),
    Cuts(CostGraph),
    Subset(UnconstrainedBi),
    Lp(LpInstance),
}

impl RunConfig {
    pub fn caps(&self) -> Caps {
        let mut caps = Caps::default();
        if let Some(n) = self.cap_nodes {
            caps.path_nodes = n;
            caps.tree_nodes = n;
            caps.cut_nodes = n;
        }
        if let Some(n) = self.cap_n {
            caps.subset_items = n;
            caps.lp_size = n;
        }
        caps
    }

    fn cut_cap(&self) -> usize {
        self.cap_nodes.unwrap_or(DEFAULT_NODE_CAP)
    }

    fn read_input(&self) -> Result<String, CliError> {
        let path = self
            .input
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("{} needs --input", name(self.command))))?;
        std::fs::read_to_string(path).map_err(|source| CliError::Input {
            path: path.display().to_string(),
            source,
        })
    }

    pub fn load(&self) -> Result<Loaded, CliError> {
        let text = self.read_input()?;
        let problem = match (self.problem, self.command, self.algorithm) {
            (Problem::Auto, Command::LpExtremes, _) => Problem::Lp,
            (Problem::Auto, _, Some(Algorithm::Prop1Merge)) => Problem::Subset,
            (Problem::Auto, _, _) => match formats::looks_like_graph(&text) {
                true => match formats::parse_graph(&text)? {
                    Graph::Directed(g) => return Ok(Loaded::Paths(g)),
                    Graph::Undirected(g) => return Ok(Loaded::Trees(g)),
                },
                false => Problem::Points,
            },
            (p, _, _) => p,
        };
        let wrong_kind = |want: &str| CliError::Usage(format!("--problem {} needs {want} graph", name(problem)));
        Ok(match problem {
            Problem::Points => Loaded::Points(formats::parse_points(&text)?),
            Problem::Paths => match formats::parse_graph(&text)? {
                Graph::Directed(g) => Loaded::Paths(g),
                Graph::Undirected(_) => return Err(wrong_kind("a directed")),
            },
            Problem::Trees | Problem::Cuts => match formats::parse_graph(&text)? {
                Graph::Undirected(g) if problem == Problem::Trees => Loaded::Trees(g),
                Graph::Undirected(g) => Loaded::Cuts(g),
                Graph::Directed(_) => return Err(wrong_kind("an undirected")),
            },
            Problem::Subset => Loaded::Subset(formats::parse_subset(&text)?),
            Problem::Lp => Loaded::Lp(formats::parse_lp(&text)?),
            Problem::Auto => unreachable!("resolved above"),
        })
    }
}

impl Loaded {
    /// The scalarization oracle for this instance.
    pub fn oracle(&self, cfg: &RunConfig) -> Result<Box<dyn ScalarizationOracle + '_>, CliError> {
        Ok(match self {
            Loaded::Points(p) => Box::new(ExplicitSetOracle::from_points(p.clone())?),
            Loaded::Paths(g) => Box::new(mosp_oracle(g)),
            Loaded::Trees(g) => Box::new(most_oracle(g)),
            Loaded::Cuts(g) => Box::new(mincut_eps_oracle(g, cfg.cut_cap())?),
            Loaded::Subset(s) => Box::new(
                brute::enumerate_image(Instance::Subsets(s), &cfg.caps())?.into_oracle()?,
            ),
            Loaded::Lp(_) => {
                return Err(CliError::Usage("LP input is handled by lp-extremes".into()))
            }
        })
    }
}

/// Streams every emission and returns the final counters.
pub fn stream<E: Enumerator, W: Write>(mut run: E, sink: &mut Sink<W>) -> Result<CallCounts, CliError> {
    for emission in run.by_ref() {
        let emission = emission?;
        sink.point(&emission.point, emission.calls)?;
    }
    Ok(run.calls())
}

fn finish<W: Write>(sink: &mut Sink<W>, calls: CallCounts) -> Result<(), CliError> {
    sink.summary(calls)?;
    if sink.count() == 0 {
        return Err(Error::Infeasible.into());
    }
    Ok(())
}

/// Runs one command, writing its output stream to `out`.
pub fn run<W: Write>(cfg: &RunConfig, out: W) -> Result<(), CliError> {
    let algorithm = cfg.resolved_algorithm().map_err(CliError::Usage)?;
    let mut sink = Sink::new(out, cfg.format, cfg.timestamps);
    match cfg.command {
        Command::Extremes | Command::Front => {
            let loaded = cfg.load()?;
            if let (Algorithm::Prop1Merge, Loaded::Subset(s)) = (algorithm.unwrap(), &loaded) {
                let front = Prop1Merge::new(s.clone()).last().expect("F0 always exists");
                for p in front.points() {
                    sink.point(p, CallCounts::default())?;
                }
                return finish(&mut sink, CallCounts::default());
            }
            let oracle = loaded.oracle(cfg)?;
            let calls = match algorithm.unwrap() {
                Algorithm::DaPlain => {
                    let (front, calls) = da_plain_counted(&*oracle)?;
                    for p in front.points() {
                        sink.point(p, calls)?;
                    }
                    calls
                }
                Algorithm::DaLex => stream(da_lex(&*oracle), &mut sink)?,
                Algorithm::DaPolydelay => stream(da_polydelay(&*oracle), &mut sink)?,
                Algorithm::EpsSweep => stream(eps_front_2d(&*oracle), &mut sink)?,
                Algorithm::Prop1Merge => {
                    return Err(CliError::Usage("prop1-merge needs a subset file".into()))
                }
                Algorithm::BilpWalk => unreachable!("rejected by the command check"),
            };
            finish(&mut sink, calls)
        }
        Command::LpExtremes => {
            let Loaded::Lp(lp) = cfg.load()? else {
                return Err(CliError::Usage("lp-extremes reads an LP file".into()));
            };
            let calls = stream(bilp_extreme_points(&lp)?, &mut sink)?;
            finish(&mut sink, calls)
        }
        Command::Brute => {
            let caps = cfg.caps();
            let loaded = cfg.load()?;
            let extremes = cfg.target == Target::Extremes;
            let instance = match &loaded {
                Loaded::Points(p) => {
                    let front = if extremes {
                        hull_extremes_2d(p.iter())?
                    } else {
                        bipareto_core::BiFront::from_sorted(dominance::pareto_filter(p)?)?
                    };
                    return brute_out(&mut sink, front);
                }
                Loaded::Lp(lp) if extremes => {
                    return brute_out(&mut sink, brute::brute_lp_vertices(lp, &caps)?)
                }
                Loaded::Lp(_) => {
                    return Err(CliError::Usage("the front of an LP is not a finite set".into()))
                }
                Loaded::Paths(g) => Instance::Paths(g),
                Loaded::Trees(g) => Instance::Trees(g),
                Loaded::Cuts(g) => Instance::Cuts(g),
                Loaded::Subset(s) => Instance::Subsets(s),
            };
            let front = if extremes {
                brute::brute_extremes(instance, &caps)?
            } else {
                brute::brute_front(instance, &caps)?
            };
            brute_out(&mut sink, front)
        }
        Command::GenerateGadget => {
            let (kp, header) = match &cfg.input {
                Some(_) => (formats::parse_kp(&cfg.read_input()?)?, String::new()),
                None => {
                    let kp = gen::kp(&mut gen::rng(cfg.seed), cfg.items);
                    let header = formats::write_kp(&kp)
                        .lines()
                        .map(|l| format!("# kp {l}\n"))
                        .collect();
                    (kp, header)
                }
            };
            if let Some(cap) = cfg.cap_n {
                if kp.n() > cap {
                    return Err(Error::Capacity { what: "knapsack items", size: kp.n(), cap }.into());
                }
            }
            let (g, m) = kp_to_mosp(&kp)?;
            sink.raw(&header)?;
            sink.raw(&formats::write_digraph(&g))?;
            sink.raw(&format!("M: {} {}\n", m[0], m[1]))?;
            Ok(())
        }
        Command::BenchDelay => bench::bench_delay(cfg, algorithm.unwrap(), &mut sink),
    }
}

fn brute_out<W: Write>(sink: &mut Sink<W>, front: bipareto_core::BiFront) -> Result<(), CliError> {
    for p in front.points() {
        sink.point(p, CallCounts::default())?;
    }
    finish(sink, CallCounts::default())
}
