//! `mrank` — command-line frontend for the monophonic-convexity toolkit.
//!
//! Exit codes: 0 success, 1 domain errors (wrong graph class, caps, bad
//! input data), 2 usage errors. All output is deterministic for a fixed
//! argv + seed.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use mrank_core::convexity::{hull, interval_bruteforce, is_convex};
use mrank_core::decomposition::{atoms, classify_atom, is_independent_charac};
use mrank_core::gadgets::{gamma3_gadget, npc_gadget, split_to_bipartite, GadgetInstance};
use mrank_core::graph::{generate, load_graph, save_graph, GenKind};
use mrank_core::rank::{
    rank_auto, rank_bruteforce, rank_flower_exact, rank_gamma1, rank_gamma2, rank_line,
    rank_split, rank_tree, RankResult,
};
use mrank_core::selftest::{run_suite, SelftestConfig, SuiteResult, SUITES};
use mrank_core::{Graph, VertexSet};

#[derive(Parser)]
#[command(name = "mrank", version, about = "Monophonic convexity and rank toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit one JSON document instead of plain text
    #[arg(long, global = true)]
    json: bool,
    /// Print only the essential result
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Args)]
struct SetArg {
    /// Comma-separated vertex list, e.g. `-s 0,2,5`
    #[arg(short = 's', value_name = "V,V,...")]
    set: String,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the maximal-prime-subgraph (atom) decomposition
    Decompose { file: PathBuf },
    /// Monophonic convex hull of the given vertex set
    Hull {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// One-step monophonic interval of the given vertex set (exhaustive, capped)
    Interval {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Check whether the given vertex set is monophonically convex
    ConvexCheck {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Check whether the given vertex set is m-convexly independent
    CheckIndependent {
        file: PathBuf,
        #[command(flatten)]
        set: SetArg,
    },
    /// Monophonic rank of the graph
    Rank {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
    /// Construct reduction gadgets and random instances
    Gen {
        #[command(subcommand)]
        what: GenCmd,
    },
    /// Run the oracle-equivalence suites
    Selftest {
        /// Run a single suite by name instead of all of them
        #[arg(long)]
        suite: Option<String>,
        /// Exhaustive enumeration bound (full scale: 6)
        #[arg(long, alias = "n", default_value_t = 6)]
        max_n: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Auto,
    Brute,
    Flower,
    Tree,
    Gamma1,
    Gamma2,
    Line,
    Split,
}

#[derive(Subcommand)]
enum GenCmd {
    /// Split graph -> bipartite graph with the same rank as independence number
    SplitReduction { file: PathBuf },
    /// Starlike hardness gadget for a source graph
    NpcGadget {
        file: PathBuf,
        /// Twin-group size (2 is the reference construction)
        #[arg(long, default_value_t = 2)]
        k: usize,
    },
    /// Two-atom gadget whose rank is max(n, 2w(source))
    Gamma3 { file: PathBuf },
    /// Random instances from a named class
    Random {
        class: ClassArg,
        #[arg(long)]
        n: usize,
        /// Extra-edge probability (random class only)
        #[arg(long, default_value_t = 0.3)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Connected,
    Tree,
    Split,
    Cactus,
    Chordal,
}

enum AppError {
    /// Bad data or out-of-class input: exit 1.
    Domain(String),
    /// Bad invocation: exit 2.
    Usage(String),
}

impl From<mrank_core::Error> for AppError {
    fn from(e: mrank_core::Error) -> Self {
        AppError::Domain(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(AppError::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> Result<Graph, AppError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| AppError::Domain(format!("{}: {e}", path.display())))?;
    Ok(load_graph(&text)?)
}

fn parse_set(raw: &str, g: &Graph) -> Result<VertexSet, AppError> {
    let mut out = VertexSet::new();
    for part in raw.split(',') {
        let v: usize = part
            .trim()
            .parse()
            .map_err(|_| AppError::Usage(format!("bad vertex '{part}' in -s")))?;
        if v >= g.n() {
            return Err(AppError::Domain(format!(
                "vertex {v} out of range (graph has {} vertices)",
                g.n()
            )));
        }
        out.insert(v);
    }
    Ok(out)
}

fn vertex_line(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn json_vertices(s: &VertexSet) -> serde_json::Value {
    json!(s.iter().copied().collect::<Vec<usize>>())
}

fn run(cli: &Cli) -> Result<ExitCode, AppError> {
    match &cli.cmd {
        Cmd::Decompose { file } => {
            let g = read_graph(file)?;
            let d = atoms(&g)?;
            if cli.json {
                let mut items = Vec::new();
                for i in 0..d.atoms.len() {
                    let class = classify_atom(&g, &d, i)?;
                    items.push(json!({
                        "vertices": json_vertices(&d.atoms[i].vertices),
                        "border": json_vertices(&d.atoms[i].border),
                        "petal": class.is_petal,
                    }));
                }
                println!("{}", json!({ "atoms": items }));
            } else {
                for i in 0..d.atoms.len() {
                    let class = classify_atom(&g, &d, i)?;
                    println!(
                        "atom {i}: {} (border: {}){}",
                        vertex_line(&d.atoms[i].vertices),
                        if d.atoms[i].border.is_empty() {
                            "-".to_string()
                        } else {
                            vertex_line(&d.atoms[i].border)
                        },
                        if class.is_petal { " petal" } else { "" },
                    );
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Hull { file, set } => {
            let g = read_graph(file)?;
            let s = parse_set(&set.set, &g)?;
            let (h, _) = hull(&g, &s)?;
            if cli.json {
                println!("{}", json!({ "hull": json_vertices(&h) }));
            } else {
                println!("{}", vertex_line(&h));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Interval { file, set } => {
            let g = read_graph(file)?;
            let s = parse_set(&set.set, &g)?;
            let iv = interval_bruteforce(&g, &s)?;
            if cli.json {
                println!("{}", json!({ "interval": json_vertices(&iv) }));
            } else {
                println!("{}", vertex_line(&iv));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::ConvexCheck { file, set } => {
            let g = read_graph(file)?;
            let s = parse_set(&set.set, &g)?;
            let convex = is_convex(&g, &s)?;
            if cli.json {
                println!("{}", json!({ "convex": convex }));
            } else {
                println!("{convex}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::CheckIndependent { file, set } => {
            let g = read_graph(file)?;
            let s = parse_set(&set.set, &g)?;
            let independent = is_independent_charac(&g, &s)?;
            if cli.json {
                println!("{}", json!({ "independent": independent }));
            } else {
                println!("{independent}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Rank { file, method } => {
            let g = read_graph(file)?;
            let r = solve(&g, *method)?;
            print_rank(cli, &r);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Gen { what } => {
            run_gen(cli, what)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Selftest { suite, max_n, seed } => run_selftest(cli, suite.as_deref(), *max_n, *seed),
    }
}

fn solve(g: &Graph, method: MethodArg) -> Result<RankResult, AppError> {
    Ok(match method {
        MethodArg::Auto => rank_auto(g)?,
        MethodArg::Brute => rank_bruteforce(g)?,
        MethodArg::Flower => rank_flower_exact(g)?,
        MethodArg::Tree => rank_tree(g)?,
        MethodArg::Gamma1 => rank_gamma1(g)?,
        MethodArg::Gamma2 => rank_gamma2(g)?,
        MethodArg::Line => rank_line(g)?,
        MethodArg::Split => rank_split(g)?,
    })
}

fn print_rank(cli: &Cli, r: &RankResult) {
    if cli.json {
        let mut doc = json!({
            "rank": r.value,
            "method": r.method.as_str(),
            "witness": json_vertices(&r.witness),
        });
        if let Some(f) = &r.flower_used {
            doc["flower"] = json_vertices(f);
        }
        println!("{doc}");
    } else if cli.quiet {
        println!("{}", r.value);
    } else {
        println!("rank: {}", r.value);
        println!("method: {}", r.method.as_str());
        println!("witness: {}", vertex_line(&r.witness));
        if let Some(f) = &r.flower_used {
            println!("flower: {}", vertex_line(f));
        }
    }
}

fn print_gadget(cli: &Cli, inst: &GadgetInstance) {
    if cli.json {
        let legend: serde_json::Map<String, serde_json::Value> = inst
            .vertex_legend
            .iter()
            .map(|(v, label)| (v.to_string(), json!(label)))
            .collect();
        println!(
            "{}",
            json!({
                "n": inst.graph.n(),
                "edges": inst.graph.edges(),
                "threshold": inst.threshold,
                "provenance": inst.provenance,
                "legend": legend,
            })
        );
    } else {
        if !cli.quiet {
            println!("# {}", inst.provenance);
            if let Some(p) = inst.threshold {
                println!("# threshold p = {p}");
            }
        }
        print!("{}", save_graph(&inst.graph));
    }
}

fn run_gen(cli: &Cli, what: &GenCmd) -> Result<(), AppError> {
    match what {
        GenCmd::SplitReduction { file } => {
            let g = read_graph(file)?;
            print_gadget(cli, &split_to_bipartite(&g)?);
        }
        GenCmd::NpcGadget { file, k } => {
            let g = read_graph(file)?;
            print_gadget(cli, &npc_gadget(&g, *k)?);
        }
        GenCmd::Gamma3 { file } => {
            let g = read_graph(file)?;
            print_gadget(cli, &gamma3_gadget(&g)?);
        }
        GenCmd::Random { class, n, p, seed, count } => {
            let kind = match class {
                ClassArg::Connected => GenKind::Random { n: *n, p: *p, seed: *seed },
                ClassArg::Tree => GenKind::Tree { n: *n, seed: *seed },
                ClassArg::Split => GenKind::Split { n: *n, seed: *seed },
                ClassArg::Cactus => GenKind::Cactus { n: *n, seed: *seed },
                ClassArg::Chordal => GenKind::Chordal { n: *n, seed: *seed },
            };
            let graphs = generate(kind, *count)?;
            if cli.json {
                let items: Vec<serde_json::Value> = graphs
                    .iter()
                    .map(|g| json!({ "n": g.n(), "edges": g.edges() }))
                    .collect();
                println!("{}", json!({ "graphs": items }));
            } else {
                for (i, g) in graphs.iter().enumerate() {
                    if !cli.quiet {
                        println!("# instance {i}");
                    }
                    print!("{}", save_graph(g));
                }
            }
        }
    }
    Ok(())
}

fn run_selftest(
    cli: &Cli,
    suite: Option<&str>,
    max_n: usize,
    seed: u64,
) -> Result<ExitCode, AppError> {
    let cfg = SelftestConfig { max_n, seed };
    let names: Vec<&str> = match suite {
        Some(name) => {
            if !SUITES.contains(&name) {
                return Err(AppError::Usage(format!(
                    "unknown suite '{name}' (available: {})",
                    SUITES.join(", ")
                )));
            }
            vec![SUITES.iter().copied().find(|s| *s == name).unwrap()]
        }
        None => SUITES.to_vec(),
    };
    let mut results: Vec<SuiteResult> = Vec::new();
    for name in names {
        results.push(run_suite(name, &cfg)?);
    }
    let failed = results.iter().any(|r| !r.passed());
    if cli.json {
        let items: Vec<serde_json::Value> = results
            .iter()
            .map(|r| {
                json!({
                    "suite": r.name,
                    "checked": r.checked,
                    "failures": r.failures,
                })
            })
            .collect();
        println!("{}", json!({ "suites": items, "passed": !failed }));
    } else {
        for r in &results {
            if r.passed() {
                if !cli.quiet {
                    println!("suite {}: PASS ({} checks)", r.name, r.checked);
                }
            } else {
                println!("suite {}: FAIL ({} checks)", r.name, r.checked);
                for f in &r.failures {
                    println!("--- counterexample ---\n{f}");
                }
            }
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}
