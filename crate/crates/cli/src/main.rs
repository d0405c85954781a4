use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use orient4_core::bounds::diameter_bound;
use orient4_core::corpus::generate;
use orient4_core::io::{parse_graph, parse_orientation, print_graph, print_orientation};
use orient4_core::oracle::{min_oriented_diameter, OracleError};
use orient4_core::pipeline::{
    baseline_strong_orientation, orient_diameter4, stage_trace, verify, PipelineError,
};
use orient4_core::MultiGraph;

const EXIT_PARSE: u8 = 1;
const EXIT_PRECONDITION: u8 = 2;
const EXIT_CONSTRUCTION: u8 = 3;
const EXIT_UNVERIFIED: u8 = 4;

#[derive(Parser)]
#[command(name = "orient4", version, about = "Bounded-diameter strong orientations of diameter-4 graphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Orient a graph and verify the result.
    Orient {
        graph: PathBuf,
        /// Orientation file, stdout if absent.
        #[arg(short, long)]
        out: Option<PathBuf>,
        /// Where to write the JSON report.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Where to write the per-edge stage trace.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// On a construction failure, emit a DFS orientation instead.
        #[arg(long)]
        fallback_baseline: bool,
    },
    /// Check an orientation for strong connectivity and report its diameter.
    Verify { graph: PathBuf, orientation: PathBuf },
    /// Exact oriented diameter by exhaustive search.
    Oracle {
        graph: PathBuf,
        #[arg(long, default_value_t = 20)]
        max_edges: usize,
    },
    /// Generate in-scope graphs. ORIENT_SEED overrides --seed.
    Gen {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        gstar: u32,
        #[arg(long, default_value_t = 150)]
        max_n: usize,
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Orient every graph under a directory and summarize.
    Report { dir: PathBuf },
}

struct Failure(u8, String);

impl<E: std::fmt::Display> From<(u8, E)> for Failure {
    fn from((code, e): (u8, E)) -> Self {
        Failure(code, e.to_string())
    }
}

type CmdResult = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> CmdResult {
    fs::write(path, text).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<MultiGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn emit(path: Option<&Path>, text: &str) -> CmdResult {
    match path {
        Some(p) => write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_orient(
    graph: &Path,
    out: Option<&Path>,
    json: Option<&Path>,
    trace: Option<&Path>,
    fallback: bool,
) -> CmdResult {
    let g = load_graph(graph)?;
    let res = match orient_diameter4(&g) {
        Ok(res) => res,
        Err(e) if e.is_precondition() => return Err((EXIT_PRECONDITION, e).into()),
        Err(e) if !fallback => return Err((EXIT_CONSTRUCTION, e).into()),
        Err(e) => {
            eprintln!("{e}; falling back to the baseline orientation");
            let o = baseline_strong_orientation(&g).map_err(|e| Failure(EXIT_PRECONDITION, e.to_string()))?;
            let mut report = verify(&g, &o, None);
            report.marker = Some("no-bound".into());
            emit(out, &print_orientation(&o))?;
            if let Some(p) = json {
                write(p, &report.to_json())?;
            }
            if let Some(p) = trace {
                write(p, &stage_trace(&o))?;
            }
            return if report.strong { Ok(()) } else { Err(Failure(EXIT_UNVERIFIED, "not strong".into())) };
        }
    };
    emit(out, &print_orientation(&res.orientation))?;
    if let Some(p) = json {
        write(p, &res.report.to_json())?;
    }
    if let Some(p) = trace {
        write(p, &stage_trace(&res.orientation))?;
    }
    let r = &res.report;
    eprintln!(
        "g* = {}, directed diameter {}, bound {}",
        r.gstar.unwrap_or(0),
        r.directed_diameter.map_or("inf".into(), |d| d.to_string()),
        r.bound.unwrap_or(0)
    );
    if r.passed() {
        Ok(())
    } else {
        Err(Failure(EXIT_UNVERIFIED, format!("verification failed: {} cell violations", r.cell_violations.len())))
    }
}

fn cmd_verify(graph: &Path, orientation: &Path) -> CmdResult {
    let g = load_graph(graph)?;
    let text = read(orientation)?;
    let o = parse_orientation(&g, &text)
        .map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", orientation.display())))?;
    let report = verify(&g, &o, None);
    print!("{}", report.to_json());
    if report.strong {
        Ok(())
    } else {
        Err(Failure(EXIT_UNVERIFIED, "orientation is not strong".into()))
    }
}

fn cmd_oracle(graph: &Path, max_edges: usize) -> CmdResult {
    let g = load_graph(graph)?;
    match min_oriented_diameter(&g, max_edges) {
        Ok(r) => {
            println!("{}", r.min_diameter.map_or("inf".into(), |d| d.to_string()));
            Ok(())
        }
        Err(e @ (OracleError::TooLarge { .. } | OracleError::TooManyVertices { .. })) => {
            Err((EXIT_PRECONDITION, e).into())
        }
    }
}

fn cmd_gen(seed: u64, count: usize, gstar: u32, max_n: usize, out_dir: &Path) -> CmdResult {
    let seed = match std::env::var("ORIENT_SEED") {
        Ok(s) => s.trim().parse().map_err(|_| Failure(EXIT_PARSE, format!("ORIENT_SEED={s:?} is not an integer")))?,
        Err(_) => seed,
    };
    if gstar != 4 && gstar != 5 {
        return Err(Failure(EXIT_PRECONDITION, format!("--gstar must be 4 or 5, got {gstar}")));
    }
    fs::create_dir_all(out_dir).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", out_dir.display())))?;
    let graphs = generate(seed, gstar, count, max_n);
    for (i, g) in graphs.iter().enumerate() {
        let header = format!("# g*={gstar} seed={seed} max_n={max_n} index={i}\n");
        write(&out_dir.join(format!("g{gstar}_s{seed}_n{max_n}_{i:03}.txt")), &(header + &print_graph(g)))?;
    }
    println!("wrote {} graphs to {}", graphs.len(), out_dir.display());
    if graphs.len() < count {
        return Err(Failure(EXIT_CONSTRUCTION, format!("only {} of {count} graphs found", graphs.len())));
    }
    Ok(())
}

struct Outcome {
    gstar: u32,
    diameter: Option<u32>,
    passed: bool,
    violations: usize,
}

#[derive(Default)]
struct Tally {
    graphs: usize,
    passed: usize,
    max_diameter: u32,
    bound: u32,
    failures: Vec<String>,
}

fn graph_files(dir: &Path, out: &mut Vec<PathBuf>) -> std::io::Result<()> {
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_dir() {
            graph_files(&path, out)?;
        } else if path.extension().is_some_and(|x| x == "txt") {
            out.push(path);
        }
    }
    Ok(())
}

fn cmd_report(dir: &Path) -> CmdResult {
    let mut files = Vec::new();
    graph_files(dir, &mut files).map_err(|e| Failure(EXIT_PARSE, format!("{}: {e}", dir.display())))?;
    files.sort();
    let results: Vec<(PathBuf, Result<Outcome, String>)> = files
        .par_iter()
        .map(|path| {
            let outcome = load_graph(path).map_err(|f| f.1).and_then(|g| match orient_diameter4(&g) {
                Ok(res) => {
                    let r = res.report;
                    Ok(Outcome {
                        gstar: r.gstar.unwrap_or(0),
                        diameter: r.directed_diameter,
                        passed: r.passed(),
                        violations: r.cell_violations.len(),
                    })
                }
                Err(e @ PipelineError::Partition(_)) => Err(format!("precondition: {e}")),
                Err(e) => Err(e.to_string()),
            });
            (path.clone(), outcome)
        })
        .collect();
    let mut tally: BTreeMap<String, Tally> = BTreeMap::new();
    for (path, outcome) in &results {
        let name = path.strip_prefix(dir).unwrap_or(path).display().to_string();
        match outcome {
            Ok(o) => {
                let t = tally.entry(format!("g*={}", o.gstar)).or_default();
                t.graphs += 1;
                t.bound = diameter_bound(o.gstar);
                t.max_diameter = t.max_diameter.max(o.diameter.unwrap_or(u32::MAX));
                if o.passed {
                    t.passed += 1;
                } else {
                    t.failures.push(format!("{name}: diameter {:?}, {} cell violations", o.diameter, o.violations));
                }
            }
            Err(e) => {
                let t = tally.entry("error".into()).or_default();
                t.graphs += 1;
                t.failures.push(format!("{name}: {e}"));
            }
        }
    }
    println!("{:<8} {:>7} {:>7} {:>9} {:>6}", "class", "graphs", "passed", "max diam", "bound");
    for (class, t) in &tally {
        println!("{class:<8} {:>7} {:>7} {:>9} {:>6}", t.graphs, t.passed, t.max_diameter, t.bound);
    }
    let failures: Vec<&String> = tally.values().flat_map(|t| &t.failures).collect();
    for f in &failures {
        println!("FAIL {f}");
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure(EXIT_UNVERIFIED, format!("{} of {} graphs failed", failures.len(), results.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Orient { graph, out, json, trace, fallback_baseline } => {
            cmd_orient(graph, out.as_deref(), json.as_deref(), trace.as_deref(), *fallback_baseline)
        }
        Cmd::Verify { graph, orientation } => cmd_verify(graph, orientation),
        Cmd::Oracle { graph, max_edges } => cmd_oracle(graph, *max_edges),
        Cmd::Gen { seed, count, gstar, max_n, out_dir } => cmd_gen(*seed, *count, *gstar, *max_n, out_dir),
        Cmd::Report { dir } => cmd_report(dir),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
