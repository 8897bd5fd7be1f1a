//! `wildcat`: invariants, motion plans, certificates and truncations for
//! graphs and wild spaces.
//!
//! Structured output goes to stdout as one JSON document; a short summary
//! goes to stderr. Exit status: 0 success, 2 input error, 3 unstable
//! expression, 4 infinite rank, 5 verification failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use wildcat::cohomology::zero_divisor_cuplength;
use wildcat::graph::text::{to_dot, write_graph};
use wildcat::graph::{tc_graph, GraphPoint, MultiGraph};
use wildcat::planner::{plan_graph, verify_plan, Fault, VerifyParams};
use wildcat::report::Report;
use wildcat::spacefile::SpaceFile;
use wildcat::syntax::read_one;
use wildcat::wild::syntax::parse_point;
use wildcat::wild::{profile, truncate, SpaceExpr, WildError};

#[derive(Parser)]
#[command(name = "wildcat", version, about = "LS-category, topological complexity and wildness rank")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report wildness rank, cat and TC of the main definition.
    Info { file: PathBuf },
    /// Run the motion plan of a graph on one query.
    Plan {
        file: PathBuf,
        /// Graph to plan on; defaults to `main`.
        #[arg(long)]
        graph: Option<String>,
        /// Start point, e.g. `vertex a` or `edge e 1/3`.
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Also write the graph with the path highlighted, in DOT format.
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Check a graph's motion plan by seeded sampling.
    Verify {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 1e-3)]
        delta: f64,
        #[arg(long, default_value_t = 5e-2)]
        eps: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, hide = true, value_enum)]
        inject_fault: Option<FaultArg>,
    },
    /// Report with cat and TC filtration certificates.
    Certify { file: PathBuf },
    /// Replace every sequence family by finitely many copies.
    Truncate {
        file: PathBuf,
        #[arg(long)]
        depth: usize,
        /// Write the graph here instead of stdout.
        #[arg(short = 'o', value_name = "OUT")]
        out: Option<PathBuf>,
        #[arg(long, value_name = "OUT")]
        dot: Option<PathBuf>,
    },
    /// Zero-divisor cup-length of a graph.
    Cuplength {
        file: PathBuf,
        #[arg(long)]
        graph: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FaultArg {
    SwapEndpoints,
}

enum Failure {
    Input(anyhow::Error),
    Unstable(String),
    Infinite(String),
    Verification,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

impl From<WildError> for Failure {
    fn from(e: WildError) -> Self {
        match e {
            WildError::Unstable(d) => Failure::Unstable(d),
            WildError::InfiniteRank => Failure::Infinite(e.to_string()),
            other => Failure::Input(other.into()),
        }
    }
}

fn load(path: &Path) -> anyhow::Result<SpaceFile> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    SpaceFile::parse(&text).map_err(|e| anyhow::anyhow!("{}:{e}", path.display()))
}

fn target_graph(file: &SpaceFile, name: Option<&str>) -> anyhow::Result<Arc<MultiGraph>> {
    let g = match name {
        Some(n) => file.graph(n).cloned().or_else(|| match file.definition(n) {
            Some(wildcat::spacefile::Definition::Expr(e)) => e.as_plain_graph().map(|r| r.graph.clone()),
            _ => None,
        }),
        None => file.main_graph().cloned(),
    };
    let g = g.ok_or_else(|| anyhow::anyhow!("`{}` is not a plain graph", name.unwrap_or(&file.main)))?;
    g.ensure_connected()?;
    Ok(g)
}

fn point(g: &MultiGraph, s: &str) -> anyhow::Result<GraphPoint> {
    let s = s.trim();
    let text = if s.starts_with('(') { s.to_owned() } else { format!("({s})") };
    let sx = read_one(&text).map_err(|e| anyhow::anyhow!("point `{s}`: {e}"))?;
    let p = parse_point(&sx).map_err(|e| anyhow::anyhow!("point `{s}`: {}", e.message))?;
    Ok(p.resolve(g)?)
}

fn emit(json: serde_json::Result<String>) -> anyhow::Result<()> {
    println!("{}", json?);
    Ok(())
}

fn summary(r: &Report) {
    eprintln!("wrk {}, cat {}, tc {}{}", r.wrk, r.cat, r.tc, if r.stable { "" } else { " (special case)" });
}

fn report_for(e: &SpaceExpr) -> Result<Report, Failure> {
    Ok(Report::from_profile(&profile(e)?))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Info { file } => {
            let r = report_for(&load(&file)?.main_expr())?;
            summary(&r);
            emit(serde_json::to_string_pretty(&r))?;
        }
        Command::Certify { file } => {
            let e = load(&file)?.main_expr();
            let r = report_for(&e)?.with_certificates(&e)?;
            summary(&r);
            emit(serde_json::to_string_pretty(&r))?;
        }
        Command::Plan { file, graph, from, to, dot } => {
            let f = load(&file)?;
            let g = target_graph(&f, graph.as_deref())?;
            let (x, y) = (point(&g, &from)?, point(&g, &to)?);
            let plan = plan_graph(&g).map_err(anyhow::Error::from)?;
            let (k, path) = plan.execute(&x, &y);
            let steps: Vec<_> = path
                .steps()
                .iter()
                .map(|s| json!({ "edge": g.edge_name(s.edge), "from": s.from.to_string(), "to": s.to.to_string() }))
                .collect();
            eprintln!("stratum {k} of {}, {} step(s)", plan.strata().len(), steps.len());
            emit(serde_json::to_string_pretty(&json!({
                "stratum": k,
                "strata": plan.strata().len(),
                "rule": plan.strata()[k].rule.name(),
                "from": x.display(&g).to_string(),
                "to": y.display(&g).to_string(),
                "length": path.length().to_string(),
                "steps": steps,
            })))?;
            if let Some(out) = dot {
                let used: Vec<_> = path.steps().iter().map(|s| s.edge).collect();
                std::fs::write(&out, to_dot(&g, &f.main, &used)).with_context(|| format!("cannot write {}", out.display()))?;
            }
        }
        Command::Verify { file, graph, samples, delta, eps, seed, inject_fault } => {
            let f = load(&file)?;
            let g = target_graph(&f, graph.as_deref())?;
            let mut plan = plan_graph(&g).map_err(anyhow::Error::from)?;
            if let Some(FaultArg::SwapEndpoints) = inject_fault {
                plan = plan.with_fault(Fault::SwapEndpoints);
            }
            let params = VerifyParams { samples, delta, eps, time_samples: VerifyParams::default().time_samples, seed };
            let v = verify_plan(&plan, &g, &params);
            let passed = v.passed;
            let r = report_for(&SpaceExpr::graph(graph.unwrap_or_else(|| f.main.clone()), g))?.with_verification(v);
            eprintln!("verification {}", if passed { "passed" } else { "FAILED" });
            emit(serde_json::to_string_pretty(&r))?;
            if !passed {
                return Err(Failure::Verification);
            }
        }
        Command::Truncate { file, depth, out, dot } => {
            let f = load(&file)?;
            let g = truncate(&f.main_expr(), depth)?;
            eprintln!("{} vertices, {} edges, betti1 {}", g.vertex_count(), g.edge_count(), g.betti1());
            let text = write_graph(&g);
            match out {
                Some(p) => std::fs::write(&p, text).with_context(|| format!("cannot write {}", p.display()))?,
                None => print!("{text}"),
            }
            if let Some(p) = dot {
                std::fs::write(&p, to_dot(&g, &f.main, &[])).with_context(|| format!("cannot write {}", p.display()))?;
            }
        }
        Command::Cuplength { file, graph } => {
            let f = load(&file)?;
            let g = target_graph(&f, graph.as_deref())?;
            let c = zero_divisor_cuplength(&g).map_err(anyhow::Error::from)?;
            eprintln!("zero-divisor cup-length {c}");
            emit(serde_json::to_string_pretty(&json!({ "betti1": g.betti1(), "cuplength": c, "tc": tc_graph(&g).map_err(anyhow::Error::from)? })))?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Unstable(d)) => {
            eprintln!("unstable: {d}");
            ExitCode::from(3)
        }
        Err(Failure::Infinite(d)) => {
            eprintln!("error: {d}");
            ExitCode::from(4)
        }
        Err(Failure::Verification) => ExitCode::from(5),
    }
}
