//! Command-line front end: `bound`, `check`, and `atlas` subcommands.
//!
//! Exit codes: 0 success, 2 input parse error (including malformed command
//! lines and oversized graphs), 3 certificate rejected, 4 internal engine
//! assertion failure, 1 for I/O failures while writing output.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::bound::{ExtBound, Mode};
use crate::certificate::{check, Certificate};
use crate::engine::{compute_bound, rules_applied, BoundResult, EngineError};
use crate::graph::{DefiningGraph, GroupKind};
use crate::input::parse_input;
use crate::oracle::enumerate_graphs;

/// Default cap on input graph size; override with `ASDIMLAB_MAX_VERTICES`.
const DEFAULT_MAX_VERTICES: usize = 30;

#[derive(Parser)]
#[command(
    name = "asdimlab",
    about = "Certified asymptotic-dimension bounds for Artin, Coxeter, and graph-labeled groups",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a certified bound for a defining-graph file.
    Bound {
        file: PathBuf,
        /// conditional mode may invoke the clique-number conjecture
        #[arg(long, default_value = "unconditional", value_parser = Mode::from_str)]
        mode: Mode,
        /// write the proof certificate (JSON) to this path
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// emit one machine-readable JSON line instead of the summary
        #[arg(long)]
        json: bool,
        /// add graph statistics and the clique-vs-chromatic comparison
        #[arg(long)]
        report: bool,
    },
    /// Re-validate a certificate against a defining-graph file.
    Check {
        file: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
    },
    /// Run the engine over every small graph and write one JSON line each.
    Atlas {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, value_parser = GroupKind::from_str)]
        kind: GroupKind,
        /// fixed edge label (coefficient; relator coefficient for graphgroup)
        #[arg(long)]
        label: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

/// One result line of the stable JSON schema.
#[derive(Serialize)]
struct JsonResult {
    kind: String,
    vertices: usize,
    edges: usize,
    sim: usize,
    betti: usize,
    chromatic_upper: usize,
    lower: u32,
    upper: ExtBound,
    exact: bool,
    conditional: bool,
    rules: Vec<String>,
}

/// Renders the stable one-line JSON result for a graph, as emitted by
/// `bound --json` and `atlas`.
pub fn result_json(g: &DefiningGraph, result: &BoundResult) -> String {
    let line = JsonResult {
        kind: g.kind().to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        sim: result.stats.sim,
        betti: result.stats.betti,
        chromatic_upper: result.stats.chromatic_upper,
        lower: result.bound.lower,
        upper: result.bound.upper,
        exact: result.bound.exact,
        conditional: result.bound.conditional,
        rules: rules_applied(&result.certificate)
            .iter()
            .map(|r| r.name().to_owned())
            .collect(),
    };
    serde_json::to_string(&line).expect("result serialization")
}

fn max_vertices_guard() -> usize {
    std::env::var("ASDIMLAB_MAX_VERTICES")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_MAX_VERTICES)
}

fn load_graph(path: &Path) -> Result<DefiningGraph, i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("{}: {e}", path.display());
        2
    })?;
    let g = parse_input(&text).map_err(|e| {
        eprintln!("{}:{e}", path.display());
        2
    })?;
    let guard = max_vertices_guard();
    if g.vertex_count() > guard {
        eprintln!(
            "{}: graph has {} vertices; the limit is {guard} (set ASDIMLAB_MAX_VERTICES to raise it)",
            path.display(),
            g.vertex_count()
        );
        return Err(2);
    }
    Ok(g)
}

fn engine_exit(e: &EngineError) -> i32 {
    eprintln!("{e}");
    4
}

fn cmd_bound(file: &Path, mode: Mode, certificate: Option<&Path>, json: bool, report: bool) -> i32 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let result = match compute_bound(&g, mode) {
        Ok(r) => r,
        Err(e) => return engine_exit(&e),
    };
    if let Some(path) = certificate {
        if let Err(e) = fs::write(path, result.certificate.to_json()) {
            eprintln!("{}: {e}", path.display());
            return 1;
        }
        eprintln!("certificate written to {}", path.display());
    }
    if json {
        println!("{}", result_json(&g, &result));
        return 0;
    }
    let bound = &result.bound;
    println!("kind: {}", g.kind());
    println!("vertices: {}  edges: {}", g.vertex_count(), g.edge_count());
    println!("mode: {mode}");
    println!("lower: {}", bound.lower);
    match bound.upper {
        ExtBound::Finite(u) if bound.exact => println!("upper: {u} (exact)"),
        ExtBound::Finite(u) => println!("upper: {u}"),
        ExtBound::Unknown => println!("upper: unknown"),
    }
    if bound.conditional {
        println!("note: the upper bound relies on the clique-number conjecture (conditional mode)");
    }
    let rule_names: Vec<&str> = rules_applied(&result.certificate)
        .iter()
        .map(|r| r.name())
        .collect();
    println!("rules: {}", rule_names.join(", "));
    if report {
        let s = &result.stats;
        println!(
            "Sim: {}  betti: {}  components: {}",
            s.sim, s.betti, s.components
        );
        println!("chromatic upper bound: {}", s.chromatic_upper);
        println!(
            "report: Sim bound {} vs chromatic bound {}",
            s.sim, s.chromatic_upper
        );
    }
    0
}

fn cmd_check(file: &Path, certificate: &Path) -> i32 {
    let g = match load_graph(file) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let text = match fs::read_to_string(certificate) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("{}: {e}", certificate.display());
            return 3;
        }
    };
    let cert = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("certificate rejected: {e}");
            return 3;
        }
    };
    match check(&cert, &g) {
        Ok(()) => {
            println!("certificate accepted");
            0
        }
        Err(rejection) => {
            eprintln!("certificate rejected {rejection}");
            3
        }
    }
}

fn cmd_atlas(max_vertices: usize, kind: GroupKind, label: u32, out: &Path) -> i32 {
    if label < 2 {
        eprintln!("label must be >= 2, got {label}");
        return 2;
    }
    // fail fast on the largest requested size before sweeping smaller ones
    if let Err(e) = enumerate_graphs(max_vertices, kind, &[label]) {
        eprintln!("{e}");
        return 2;
    }
    let mut file = match fs::File::create(out) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("{}: {e}", out.display());
            return 1;
        }
    };
    for n in 1..=max_vertices {
        let graphs = match enumerate_graphs(n, kind, &[label]) {
            Ok(it) => it,
            Err(e) => {
                eprintln!("{e}");
                return 2;
            }
        };
        for g in graphs {
            let result = match compute_bound(&g, Mode::Unconditional) {
                Ok(r) => r,
                Err(e) => return engine_exit(&e),
            };
            if let Err(e) = writeln!(file, "{}", result_json(&g, &result)) {
                eprintln!("{}: {e}", out.display());
                return 1;
            }
        }
    }
    0
}

/// Entry point for the `asdimlab` binary; returns the process exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.command {
        Command::Bound {
            file,
            mode,
            certificate,
            json,
            report,
        } => cmd_bound(&file, mode, certificate.as_deref(), json, report),
        Command::Check { file, certificate } => cmd_check(&file, &certificate),
        Command::Atlas {
            max_vertices,
            kind,
            label,
            out,
        } => cmd_atlas(max_vertices, kind, label, &out),
    }
}
