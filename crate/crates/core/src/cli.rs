//! The `infeuler` command line.
//!
//! Exit codes: 0 success, 1 a `verify` property failed, 2 usage error,
//! 3 domain or validation error, 4 step budget exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::deciders::{Budget, Decider, StepBudgetOutcome};
use crate::error::{Error, Result};
use crate::oracle::{ball, families, load_presentation, GraphDescription};
use crate::path::FinitePath;
use crate::stream::{one_way_stream, two_way_stream, Side};
use crate::types::{EdgeId, VertexId};
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;
pub const EXIT_EXHAUSTED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "infeuler", version, about = "Infinite Eulerian paths on oracle-presented multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the built-in graph families with their declared metadata.
    Families,
    /// Answer vertex, edge and degree queries.
    Describe {
        #[arg(long)]
        graph: String,
        #[arg(long = "vertex")]
        vertices: Vec<u64>,
        #[arg(long = "edge")]
        edges: Vec<u64>,
    },
    /// Print the first edges of a computable infinite Eulerian path.
    Stream {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        #[arg(long)]
        start: Option<u64>,
        #[arg(long)]
        count: u64,
    },
    /// Decide whether a finite path extends to an infinite Eulerian path.
    Extendable {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// Tokens `v0 e0 v1 e1 ... vk`.
        #[arg(long)]
        path: String,
        #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
        base: i64,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Print the ball G(v,r,s).
    Ball {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        vertex: u64,
        #[arg(long)]
        radius: u64,
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        dot: bool,
    },
    /// Run the property harnesses.
    Verify,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    OneWay,
    TwoWay,
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Usage(_) => EXIT_USAGE,
        Error::Exhausted(_) => EXIT_EXHAUSTED,
        _ => EXIT_DOMAIN,
    }
}

/// A presentation file when `spec` names an existing file, a built-in
/// family otherwise.
pub fn resolve_graph(spec: &str) -> Result<GraphDescription> {
    if Path::new(spec).is_file() {
        return load_presentation(&std::fs::read_to_string(spec)?);
    }
    families::builtin(spec).ok_or_else(|| {
        Error::Domain(format!(
            "`{spec}` is neither a presentation file nor a built-in family ({})",
            families::BUILTIN_NAMES.join(", ")
        ))
    })
}

fn parse_path(text: &str, base: i64) -> Result<FinitePath> {
    let tokens = text
        .split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|_| Error::Usage(format!("path token `{t}` is not a natural number"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(FinitePath::from_tokens(base, &tokens)?)
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Families => {
            for name in families::BUILTIN_NAMES {
                let g = families::builtin(name).expect("listed family exists");
                writeln!(out, "{name} has_odd_vertex={} conditions={}", g.has_odd_vertex(), g.conditions())?;
            }
        }
        Command::Describe { graph, vertices, edges } => {
            let g = resolve_graph(&graph)?;
            let o = g.oracle();
            writeln!(out, "graph {} has_odd_vertex={} conditions={}", g.name(), g.has_odd_vertex(), g.conditions())?;
            for v in vertices {
                match o.degree(VertexId(v)) {
                    Some(d) if o.is_vertex(v) => writeln!(out, "vertex {v} degree {d}")?,
                    _ => writeln!(out, "vertex {v} absent")?,
                }
            }
            for e in edges {
                match o.incidence(EdgeId(e)) {
                    Some(inc) => {
                        let (a, b) = inc.endpoints();
                        writeln!(out, "edge {e} joins {a} {b}")?
                    }
                    None => writeln!(out, "edge {e} absent")?,
                }
            }
        }
        Command::Stream { graph, mode, start, count } => {
            let g = resolve_graph(&graph)?;
            let mut s = match mode {
                ModeArg::OneWay => one_way_stream(&g, start.map(VertexId))?,
                ModeArg::TwoWay if start.is_some() => {
                    return Err(Error::Usage("--start applies to one-way streams only".into()))
                }
                ModeArg::TwoWay => two_way_stream(&g)?,
            };
            for k in 0..count {
                let side = if mode == ModeArg::TwoWay && k % 2 == 1 { Side::Left } else { Side::Right };
                let step = s.next_edge(side)?;
                writeln!(out, "pos {} edge {} vertex {}", step.pos, step.edge, step.vertex)?;
            }
        }
        Command::Extendable { graph, mode, path, base, budget } => {
            let g = resolve_graph(&graph)?;
            let t = parse_path(&path, base)?;
            let decider = Decider::new(&g).budget(budget.map_or(Budget::Auto, Budget::Steps));
            let verdict = match mode {
                ModeArg::OneWay => decider.right_extensible(&t)?,
                ModeArg::TwoWay => decider.bi_extensible(&t)?,
            };
            match verdict.outcome {
                StepBudgetOutcome::Decided(b) => writeln!(out, "{b}")?,
                StepBudgetOutcome::Exhausted(_) => {
                    writeln!(out, "exhausted")?;
                    return Ok(EXIT_EXHAUSTED);
                }
            }
        }
        Command::Ball { graph, vertex, radius, bound, dot } => {
            let g = resolve_graph(&graph)?;
            let b = ball(g.oracle(), VertexId(vertex), radius, bound)?;
            if dot {
                write!(out, "{}", b.to_dot(&format!("ball_{vertex}_{radius}_{bound}")))?;
            } else {
                let vs: Vec<String> = b.vertices().map(|v| v.to_string()).collect();
                let es: Vec<String> = b.edge_ids().iter().map(|e| e.to_string()).collect();
                writeln!(out, "vertices {}", vs.join(" "))?;
                writeln!(out, "edges {}", es.join(" "))?;
            }
        }
        Command::Verify => {
            let mut all_passed = true;
            for report in verify::run_all() {
                writeln!(out, "{report}")?;
                all_passed &= report.passed();
            }
            return Ok(if all_passed { EXIT_OK } else { EXIT_VERIFY_FAILED });
        }
    }
    Ok(EXIT_OK)
}
