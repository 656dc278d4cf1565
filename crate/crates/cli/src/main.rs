mod bench;
mod record;

use std::io::Read;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use dicut::oracle::{exact_global_ec, exact_global_vc, exact_rooted_ec, exact_rooted_vc};
use dicut::rational::{format_rational, parse_rational};
use dicut::{
    approx_global_ec, approx_global_vc, approx_rooted_ec, approx_rooted_vc, build_local_ec, build_local_vc,
    emit_edge_graph, emit_vertex_graph, parse_graph, sparsify_edge, sparsify_vertex, Constants, CutOutcome,
    DriverConfig, Error, LocalQuery, LocalQueryAnswer, ParsedGraph, SeedStream, SparsifyParams,
    VertexWeightedDigraph, WeightedDigraph,
};

use record::{join, Record};

const EXIT_OTHER: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_PARSE: u8 = 3;
const EXIT_NO_CUT: u8 = 4;
const EXIT_PANIC: u8 = 5;

/// Oracle comparisons are skipped above this many vertices.
const ORACLE_LIMIT: usize = 60;

/// Approximate minimum rooted and global cuts in directed graphs.
#[derive(Parser, Debug)]
#[command(name = "dicut", version)]
struct Cli {
    #[command(flatten)]
    shared: Shared,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args, Debug)]
struct Shared {
    /// Graph file; standard input when omitted or `-`.
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0.25)]
    eps: f64,
    #[arg(long, global = true, env = "DICUT_SEED", default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, default_value_t = 0.01)]
    fail_prob: f64,
    /// Constant overrides, e.g. `c_tau=1/32,c_delta=64,C=4`.
    #[arg(long, global = true, default_value = "")]
    constants: String,
    /// Compare against the exact oracle (graphs with at most 60 vertices).
    #[arg(long, global = true)]
    with_oracle: bool,
    /// Report wall-clock time; output is then no longer reproducible.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Approximate minimum edge cut from a root.
    EcRooted(RootArg),
    /// Approximate minimum global edge cut.
    EcGlobal,
    /// Approximate minimum vertex cut from a root.
    VcRooted(RootArg),
    /// Approximate minimum global vertex cut.
    VcGlobal,
    /// Exact reference value.
    Exact {
        variant: Variant,
        #[arg(long, default_value_t = 0)]
        root: usize,
    },
    /// Dump the sparsified graph followed by a `tau` line.
    Sparsify(LocalArgs),
    /// Answer one local `(root, t)` query.
    LocalQuery {
        #[command(flatten)]
        params: LocalArgs,
        #[arg(long)]
        t: usize,
    },
    /// Per-size operation counts on generated graphs.
    Bench(bench::BenchArgs),
}

#[derive(Args, Debug)]
struct RootArg {
    #[arg(long)]
    root: usize,
}

#[derive(Args, Debug)]
struct LocalArgs {
    #[arg(long, default_value_t = 0)]
    root: usize,
    /// Sink-size bound.
    #[arg(long)]
    k: usize,
    /// Connectivity guess, as a decimal or `p/q`.
    #[arg(long)]
    lambda: String,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    EcRooted,
    EcGlobal,
    VcRooted,
    VcGlobal,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::EcRooted => "ec-rooted",
            Variant::EcGlobal => "ec-global",
            Variant::VcRooted => "vc-rooted",
            Variant::VcGlobal => "vc-global",
        }
    }
}

/// What a run produced: the rendered text and whether it found no cut.
struct Output {
    text: String,
    no_cut: bool,
}

fn read_input(path: &Option<PathBuf>) -> anyhow::Result<String> {
    match path {
        Some(p) if p.to_str() != Some("-") => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn edge_graph(g: &ParsedGraph) -> anyhow::Result<&WeightedDigraph> {
    match g {
        ParsedGraph::Edge(g) => Ok(g),
        ParsedGraph::Vertex(_) => bail!(Usage("this command needs an edge-weighted graph".into())),
    }
}

fn vertex_graph(g: &ParsedGraph) -> anyhow::Result<&VertexWeightedDigraph> {
    match g {
        ParsedGraph::Vertex(g) => Ok(g),
        ParsedGraph::Edge(_) => bail!(Usage("this command needs a vertex-weighted graph".into())),
    }
}

#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn exact(variant: Variant, g: &ParsedGraph, root: usize) -> anyhow::Result<CutOutcome> {
    Ok(match variant {
        Variant::EcRooted => CutOutcome::Cut(exact_rooted_ec(edge_graph(g)?, root)?),
        Variant::EcGlobal => CutOutcome::Cut(exact_global_ec(edge_graph(g)?)?),
        Variant::VcRooted => exact_rooted_vc(vertex_graph(g)?, root)?,
        Variant::VcGlobal => exact_global_vc(vertex_graph(g)?)?,
    })
}

fn lambda_units(text: &str, denominator: u64) -> anyhow::Result<u64> {
    let l = parse_rational(text).ok_or_else(|| Usage(format!("bad --lambda `{text}`")))?;
    if *l.numer() == 0 {
        bail!(Usage("--lambda must be positive".into()));
    }
    Ok((l * denominator).ceil().to_integer())
}

fn header(rec: &mut Record, command: &str, g: &ParsedGraph, s: &Shared, constants: &Constants) {
    let kind = match g {
        ParsedGraph::Edge(_) => "edge",
        ParsedGraph::Vertex(_) => "vertex",
    };
    let (n, m) = match g {
        ParsedGraph::Edge(g) => (g.vertex_count(), g.edge_count()),
        ParsedGraph::Vertex(g) => (g.vertex_count(), g.edge_count()),
    };
    rec.push("command", command);
    rec.push("input_sha256", hex::encode(Sha256::digest(g.emit().as_bytes())));
    rec.push("graph", kind);
    rec.push("n", n);
    rec.push("m", m);
    rec.push("seed", s.seed);
    rec.push("eps", s.eps);
    rec.push("fail_prob", s.fail_prob);
    for (k, v) in constants.fields() {
        rec.push(format!("const.{k}"), v);
    }
}

fn oracle_check(rec: &mut Record, variant: Variant, g: &ParsedGraph, root: usize, found: &CutOutcome, eps: f64) -> anyhow::Result<()> {
    if g.vertex_count() > ORACLE_LIMIT {
        rec.push("oracle", "skipped");
        return Ok(());
    }
    let truth = exact(variant, g, root)?;
    let pass = match (&truth, found) {
        (CutOutcome::NoCut, CutOutcome::NoCut) => true,
        (CutOutcome::Cut(o), CutOutcome::Cut(c)) => {
            c.weight_units >= o.weight_units && c.weight_units as f64 <= (1.0 + eps) * o.weight_units as f64
        }
        _ => false,
    };
    match &truth {
        CutOutcome::Cut(o) => rec.push("oracle_weight", format_rational(&o.weight())),
        CutOutcome::NoCut => rec.push("oracle_weight", "nocut"),
    }
    rec.push("oracle", if pass { "pass" } else { "fail" });
    Ok(())
}

fn run(cli: Cli) -> anyhow::Result<Output> {
    let start = Instant::now();
    let s = &cli.shared;
    let constants = Constants::default().with_overrides(&s.constants).map_err(|e| Usage(e.to_string()))?;
    let cfg = DriverConfig { eps: s.eps, fail_prob: s.fail_prob, seed: s.seed, constants, ..Default::default() };
    cfg.validate().map_err(|e| Usage(e.to_string()))?;

    if let Cmd::Bench(args) = &cli.command {
        let text = bench::run(args, &cfg, s.timing)?;
        return Ok(Output { text, no_cut: false });
    }
    let g = parse_graph(&read_input(&s.input)?)?;
    let mut rec = Record::default();
    let mut no_cut = false;
    match &cli.command {
        Cmd::EcRooted(RootArg { root }) | Cmd::VcRooted(RootArg { root }) => {
            let variant = if matches!(cli.command, Cmd::EcRooted(_)) { Variant::EcRooted } else { Variant::VcRooted };
            header(&mut rec, variant.name(), &g, s, &constants);
            rec.push("root_arg", root);
            let (report, den) = match variant {
                Variant::EcRooted => {
                    let h = edge_graph(&g)?;
                    (approx_rooted_ec(h, *root, &cfg)?, h.denominator())
                }
                _ => {
                    let h = vertex_graph(&g)?;
                    (approx_rooted_vc(h, *root, &cfg)?, h.denominator())
                }
            };
            rec.report(&report, den);
            no_cut = report.best == CutOutcome::NoCut;
            if s.with_oracle {
                oracle_check(&mut rec, variant, &g, *root, &report.best, s.eps)?;
            }
        }
        Cmd::EcGlobal | Cmd::VcGlobal => {
            let variant = if matches!(cli.command, Cmd::EcGlobal) { Variant::EcGlobal } else { Variant::VcGlobal };
            header(&mut rec, variant.name(), &g, s, &constants);
            let (report, den) = match variant {
                Variant::EcGlobal => {
                    let h = edge_graph(&g)?;
                    (approx_global_ec(h, &cfg)?, h.denominator())
                }
                _ => {
                    let h = vertex_graph(&g)?;
                    (approx_global_vc(h, &cfg)?, h.denominator())
                }
            };
            rec.report(&report, den);
            no_cut = report.best == CutOutcome::NoCut;
            if s.with_oracle {
                oracle_check(&mut rec, variant, &g, 0, &report.best, s.eps)?;
            }
        }
        Cmd::Exact { variant, root } => {
            header(&mut rec, &format!("exact {}", variant.name()), &g, s, &constants);
            if matches!(variant, Variant::EcRooted | Variant::VcRooted) {
                rec.push("root_arg", root);
            }
            let out = exact(*variant, &g, *root)?;
            rec.outcome(&out);
            no_cut = out == CutOutcome::NoCut;
        }
        Cmd::Sparsify(a) => {
            let seed = SeedStream::new(s.seed);
            let text = match &g {
                ParsedGraph::Edge(h) => {
                    let p = SparsifyParams { eps: s.eps, lambda_units: lambda_units(&a.lambda, h.denominator())?, k: a.k, constants, seed };
                    let sp = sparsify_edge(h, a.root, &p)?;
                    format!("{}tau {}\n", emit_edge_graph(&sp.graph), format_rational(&sp.tau.value()))
                }
                ParsedGraph::Vertex(h) => {
                    let p = SparsifyParams { eps: s.eps, lambda_units: lambda_units(&a.lambda, h.denominator())?, k: a.k, constants, seed };
                    let sp = sparsify_vertex(h, a.root, &p)?;
                    format!("{}tau {}\n", emit_vertex_graph(&sp.graph), format_rational(&sp.tau.value()))
                }
            };
            return Ok(Output { text, no_cut: false });
        }
        Cmd::LocalQuery { params: a, t } => {
            header(&mut rec, "local-query", &g, s, &constants);
            rec.push("root_arg", a.root);
            rec.push("t", t);
            rec.push("k", a.k);
            let seed = SeedStream::new(s.seed);
            let (answer, stats, budget, limit, weight) = match &g {
                ParsedGraph::Edge(h) => {
                    let p = SparsifyParams { eps: s.eps, lambda_units: lambda_units(&a.lambda, h.denominator())?, k: a.k, constants, seed };
                    rec.push("lambda_units", p.lambda_units);
                    let st = build_local_ec(h, a.root, &p, &cfg.local)?;
                    let (ans, stats) = st.query(*t)?;
                    let w = match &ans {
                        LocalQueryAnswer::Found { sink_component, .. } => {
                            Some(dicut::CutResult::edge_cut(h, a.root, sink_component.clone()).weight())
                        }
                        LocalQueryAnswer::AboveThreshold => None,
                    };
                    (ans, stats, st.budget(), st.flow_limit(), w)
                }
                ParsedGraph::Vertex(h) => {
                    let p = SparsifyParams { eps: s.eps, lambda_units: lambda_units(&a.lambda, h.denominator())?, k: a.k, constants, seed };
                    rec.push("lambda_units", p.lambda_units);
                    let st = build_local_vc(h, a.root, &p, &cfg.local)?;
                    let (ans, stats) = st.query(*t)?;
                    let w = match &ans {
                        LocalQueryAnswer::Found { sink_component, .. } => {
                            dicut::CutResult::vertex_cut(h, a.root, sink_component.clone()).map(|c| c.weight())
                        }
                        LocalQueryAnswer::AboveThreshold => None,
                    };
                    (ans, stats, st.budget(), st.flow_limit(), w)
                }
            };
            rec.push("budget", budget);
            rec.push("flow_limit", limit);
            match answer {
                LocalQueryAnswer::Found { sink_component, sparse_weight } => {
                    rec.push("answer", "found");
                    rec.push("sink", join(&sink_component));
                    rec.push("sparse_weight", sparse_weight);
                    rec.push("weight", weight.map_or("undefined".to_string(), |w| format_rational(&w)));
                }
                LocalQueryAnswer::AboveThreshold => rec.push("answer", "above-threshold"),
            }
            rec.local(&stats);
        }
        Cmd::Bench(_) => unreachable!("handled above"),
    }
    if s.timing {
        rec.push("elapsed_ms", start.elapsed().as_millis());
    }
    Ok(Output { text: rec.render(), no_cut })
}

fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<Usage>().is_some() {
        return EXIT_USAGE;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::Parse { .. }) => EXIT_PARSE,
        Some(
            Error::VertexOutOfRange { .. }
            | Error::InvalidParameter(_)
            | Error::SameTerminals(_)
            | Error::IneligibleSink(_)
            | Error::TooSmall
            | Error::TooLarge { .. },
        ) => EXIT_USAGE,
        _ => EXIT_OTHER,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match catch_unwind(AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(out)) => {
            print!("{}", out.text);
            ExitCode::from(if out.no_cut { EXIT_NO_CUT } else { 0 })
        }
        Ok(Err(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
        Err(_) => ExitCode::from(EXIT_PANIC),
    }
}
