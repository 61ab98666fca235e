//! The `kauffman` command line: invariants of braid closures, torus-link
//! cross-checks, Bratteli diagrams and the verification suites.

use std::ffi::OsString;
use std::fmt::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::braid::{BraidError, BraidWord};
use crate::bratteli::{BratteliGraph, Variant};
use crate::closed_forms::{symmetry_check, torus2_invariant};
use crate::laurent::{Specialization, Specialize};
use crate::skein::SkeinEngine;
use crate::verify::{self, Bounds, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "kauffman", version, about = "Two-variable Kauffman invariants of braid closures")]
pub struct Cli {
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// F(r, s) of a braid closure, or its value at a specialization.
    Invariant(InvariantArgs),
    /// Closed form against the skein engine for the closure of sigma_1^m.
    Torus(TorusArgs),
    /// Generic or truncated Bratteli diagram.
    Bratteli(BratteliArgs),
    /// Run a verification suite.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Args)]
pub struct InvariantArgs {
    /// Braid word, e.g. "B3: 1 -2 1 -2".
    #[arg(long, allow_hyphen_values = true)]
    pub braid: String,
    /// osp:<n> or so:<n>.
    #[arg(long)]
    pub spec: Option<Specialization>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct TorusArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub m: i64,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct BratteliArgs {
    #[arg(long)]
    pub spec: Option<Specialization>,
    #[arg(long, default_value_t = 4)]
    pub depth: usize,
    #[arg(long, default_value_t = 8)]
    pub max_depth: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite to run; all suites when omitted.
    #[arg(value_enum)]
    pub suite: Option<Suite>,
    /// Power range `a..b` (inclusive) for oracle, parity and symmetry.
    #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
    pub m: Option<RangeInclusive<i64>>,
    #[arg(long)]
    pub max_size: Option<usize>,
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub max_f: Option<usize>,
    #[arg(long)]
    pub max_depth: Option<usize>,
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Braid(#[from] BraidError),
    #[error("dot output is only available for bratteli")]
    DotUnsupported,
    #[error("depth {depth} exceeds the cap {cap}")]
    DepthOverCap { depth: usize, cap: usize },
    #[error("bound {name} = {value} exceeds the cap {cap}")]
    BoundOverCap { name: &'static str, value: usize, cap: usize },
    #[error("cannot write {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

/// Rendered command output and whether every check in it passed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub ok: bool,
}

fn parse_range(text: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = text
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {text:?}"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: i64 = lo.trim().parse().map_err(|_| format!("bad lower bound in {text:?}"))?;
    let hi: i64 = hi.trim().parse().map_err(|_| format!("bad upper bound in {text:?}"))?;
    if lo > hi {
        return Err(format!("empty range {text:?}"));
    }
    Ok(lo..=hi)
}

fn render_json(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json values serialize");
    s.push('\n');
    s
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Invariant(a) => invariant(a),
        Command::Torus(a) => torus(a),
        Command::Bratteli(a) => bratteli(a),
        Command::Verify(a) => verify_cmd(a),
    }
}

fn invariant(a: &InvariantArgs) -> Result<Outcome, CliError> {
    if a.format == OutputFormat::Dot {
        return Err(CliError::DotUnsupported);
    }
    let b: BraidWord = a.braid.parse()?;
    let start = Instant::now();
    let mut engine = SkeinEngine::new();
    let f = engine.kauffman_f(&b);
    let value = a.spec.map(|spec| f.specialize(spec));
    eprintln!("elapsed: {:.3?}", start.elapsed());
    let output = match a.format {
        OutputFormat::Json => {
            let mut v = json!({
                "schema": 1,
                "braid": b.to_string(),
                "strands": b.strands(),
                "exponent_sum": b.exponent_sum(),
                "components": b.component_count(),
                "crossings": b.len(),
            });
            match (&value, a.spec) {
                (Some(phi), Some(spec)) => {
                    v["spec"] = Value::String(spec.to_string());
                    v["value"] = phi.to_json();
                }
                _ => v["value"] = f.to_json(),
            }
            render_json(&v)
        }
        _ => {
            let mut s = String::new();
            let _ = writeln!(s, "braid: {b}");
            let _ = writeln!(s, "strands: {}", b.strands());
            let _ = writeln!(s, "exponent sum: {}", b.exponent_sum());
            let _ = writeln!(s, "components: {}", b.component_count());
            let _ = writeln!(s, "crossings: {}", b.len());
            match (&value, a.spec) {
                (Some(phi), Some(spec)) => {
                    let _ = writeln!(s, "{spec}(q): {phi}");
                }
                _ => {
                    let _ = writeln!(s, "F(r,s): {f}");
                }
            }
            s
        }
    };
    Ok(Outcome { output, ok: true })
}

fn torus(a: &TorusArgs) -> Result<Outcome, CliError> {
    if a.format == OutputFormat::Dot {
        return Err(CliError::DotUnsupported);
    }
    let closed = torus2_invariant(a.m);
    let skein = SkeinEngine::new().kauffman_f(&BraidWord::torus2(a.m));
    let matches = closed == skein;
    let symmetric = symmetry_check(a.m);
    let output = match a.format {
        OutputFormat::Json => render_json(&json!({
            "schema": 1,
            "m": a.m,
            "closed_form": closed.to_json(),
            "skein": skein.to_json(),
            "match": matches,
            "symmetry": symmetric,
        })),
        _ => format!(
            "m: {}\nclosed form: {closed}\nskein: {skein}\nmatch: {matches}\nsymmetry: {symmetric}\n",
            a.m
        ),
    };
    Ok(Outcome { output, ok: matches && symmetric })
}

fn bratteli(a: &BratteliArgs) -> Result<Outcome, CliError> {
    if a.depth > a.max_depth {
        return Err(CliError::DepthOverCap { depth: a.depth, cap: a.max_depth });
    }
    let variant = a.spec.map_or(Variant::Generic, Variant::Truncated);
    let g = BratteliGraph::new(variant, a.depth);
    let output = match a.format {
        OutputFormat::Text => g.to_text(),
        OutputFormat::Json => render_json(&g.to_json()),
        OutputFormat::Dot => g.to_dot(),
    };
    Ok(Outcome { output, ok: true })
}

const SIZE_CAP: usize = 10;
const DEPTH_CAP: usize = 8;

fn verify_cmd(a: &VerifyArgs) -> Result<Outcome, CliError> {
    if a.format == OutputFormat::Dot {
        return Err(CliError::DotUnsupported);
    }
    for (name, value) in [("max-size", a.max_size), ("max-f", a.max_f), ("max-depth", a.max_depth)] {
        let cap = if name == "max-size" { SIZE_CAP } else { DEPTH_CAP };
        if let Some(v) = value.filter(|&v| v > cap) {
            return Err(CliError::BoundOverCap { name, value: v, cap });
        }
    }
    let bounds_for = |suite: Suite| {
        let mut b = Bounds::for_suite(suite);
        if let Some(m) = &a.m {
            b.m = m.clone();
        }
        b.max_size = a.max_size.unwrap_or(b.max_size);
        b.max_n = a.max_n.unwrap_or(b.max_n);
        b.max_f = a.max_f.unwrap_or(b.max_f);
        b.max_depth = a.max_depth.unwrap_or(b.max_depth);
        b
    };
    let report = match a.suite {
        Some(suite) => verify::run(suite, &bounds_for(suite)),
        None => verify::run_all(bounds_for),
    };
    let output = match a.format {
        OutputFormat::Json => render_json(&report.to_json()),
        _ => report.to_text(),
    };
    Ok(Outcome { output, ok: report.passed() })
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let outcome = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(source) = std::fs::write(path, &outcome.output) {
                eprintln!("error: {}", CliError::Io { path: path.clone(), source });
                return EXIT_USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    if outcome.ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
