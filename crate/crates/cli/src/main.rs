//! `devsurf`: developability analysis from the command line.

mod mesh;
mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};
use devsurf_core::analysis::AnalysisConfig;
use devsurf_core::implicit::analyze_implicit;
use devsurf_core::parametric::analyze_parametric;
use devsurf_core::parse::{parse_map, parse_poly, parse_ratfunc, ParseError};
use devsurf_core::Rat;

use report::{AnalysisReport, InputEcho, InputKind, VerifyReport, EXIT_INPUT, EXIT_OK};

#[derive(Parser, Debug)]
#[command(
    name = "devsurf",
    version,
    about = "Exact developability analysis of algebraic surfaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Analyze implicit surfaces F(x, y, z) = 0.
    Implicit(AnalyzeArgs),
    /// Analyze rational parametric surfaces (X, Y, Z)(s, t).
    Parametric(AnalyzeArgs),
    /// Check that a map lies on an implicit surface; exit 0 iff F(P) is identically zero.
    Verify {
        /// Implicit polynomial, inline or a file path.
        surface: String,
        /// Rational map, inline or a file path.
        map: String,
        #[arg(long)]
        pretty: bool,
    },
    /// Sample a rational map on a uniform (s, t) grid as a Wavefront mesh.
    Mesh {
        /// Rational map, inline or a file path.
        map: String,
        /// Range of s as `a:b`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Range of t as `a:b`.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// Samples per parameter.
        #[arg(long)]
        res: usize,
        /// Write the mesh here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    /// Inline expressions or files holding one.
    #[arg(required = true)]
    inputs: Vec<String>,
    /// Print a human-readable report instead of JSON.
    #[arg(long)]
    pretty: bool,
    /// Number of candidate section planes.
    #[arg(long)]
    plane_budget: Option<usize>,
    /// Abscissae tried per coordinate when searching for a rational point.
    #[arg(long)]
    point_search_budget: Option<usize>,
    /// Keep the directrix as found instead of lowering its degree.
    #[arg(long)]
    no_refine: bool,
    /// Omit per-stage timings, making the output reproducible.
    #[arg(long)]
    no_timings: bool,
    /// Worker threads when several inputs are given.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

impl AnalyzeArgs {
    fn config(&self) -> AnalysisConfig {
        let mut cfg = AnalysisConfig::default();
        if let Some(b) = self.plane_budget {
            cfg.plane_budget = b;
        }
        if let Some(b) = self.point_search_budget {
            cfg.curve.point_budget = b;
        }
        cfg.refine = !self.no_refine;
        cfg
    }
}

/// Reads `arg` as a file when one exists at that path, otherwise as inline text.
fn load(arg: &str) -> Result<(Option<String>, String), String> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{arg}: {e}"))?;
        Ok((Some(arg.to_string()), text.trim().to_string()))
    } else {
        Ok((None, arg.to_string()))
    }
}

fn io_failure(kind: InputKind, arg: &str, msg: String) -> AnalysisReport {
    let echo = InputEcho {
        kind,
        file: Some(arg.to_string()),
        text: String::new(),
    };
    let e = ParseError {
        line: 0,
        col: 0,
        kind: devsurf_core::parse::ParseErrorKind::Syntax(msg),
    };
    AnalysisReport::parse_failure(echo, &e)
}

fn analyze_one(kind: InputKind, arg: &str, cfg: &AnalysisConfig, timings: bool) -> AnalysisReport {
    let (file, text) = match load(arg) {
        Ok(v) => v,
        Err(msg) => return io_failure(kind, arg, msg),
    };
    let echo = InputEcho {
        kind,
        file,
        text: text.clone(),
    };
    match kind {
        InputKind::Implicit => match parse_poly(&text, &["x", "y", "z"]) {
            Err(e) => AnalysisReport::parse_failure(echo, &e),
            Ok(f) => AnalysisReport::from_analysis(echo, &analyze_implicit(&f, cfg), timings),
        },
        InputKind::Parametric => match parse_map(&text) {
            Err(e) => AnalysisReport::parse_failure(echo, &e),
            Ok(p) => match analyze_parametric(&p, cfg) {
                Ok(a) => AnalysisReport::from_analysis(echo, &a, timings),
                Err(e) => AnalysisReport::degenerate(echo, e.to_string()),
            },
        },
    }
}

fn run_analyze(kind: InputKind, args: &AnalyzeArgs) -> i32 {
    let cfg = args.config();
    let n = args.inputs.len();
    let slots: Vec<Mutex<Option<AnalysisReport>>> = (0..n).map(|_| Mutex::new(None)).collect();
    let next = AtomicUsize::new(0);
    let work = || loop {
        let i = next.fetch_add(1, Ordering::Relaxed);
        if i >= n {
            break;
        }
        let r = analyze_one(kind, &args.inputs[i], &cfg, !args.no_timings);
        *slots[i].lock().expect("report slot") = Some(r);
    };
    std::thread::scope(|scope| {
        for _ in 1..args.jobs.clamp(1, n) {
            scope.spawn(work);
        }
        work();
    });
    let reports: Vec<AnalysisReport> = slots
        .into_iter()
        .map(|m| m.into_inner().expect("report slot").expect("report"))
        .collect();
    for r in &reports {
        if let Some(e) = &r.error {
            let src = r.input.file.as_deref().unwrap_or("<inline>");
            eprintln!("error: {src}:{}:{}: {}", e.line, e.column, e.message);
        }
    }
    let out = if args.pretty {
        reports
            .iter()
            .map(AnalysisReport::human)
            .collect::<Vec<_>>()
            .join("\n")
    } else if n == 1 {
        serde_json::to_string(&reports[0]).expect("report serializes") + "\n"
    } else {
        serde_json::to_string(&reports).expect("report serializes") + "\n"
    };
    print!("{out}");
    reports.iter().map(|r| r.exit_code).max().unwrap_or(EXIT_OK)
}

fn run_verify(surface: &str, map: &str, pretty: bool) -> i32 {
    let mut r = VerifyReport {
        surface: String::new(),
        map: String::new(),
        verified: false,
        exit_code: EXIT_INPUT,
        certificate: None,
        error: None,
    };
    let parsed = load(surface).and_then(|(_, f)| {
        r.surface = f.clone();
        load(map).map(|(_, p)| {
            r.map = p.clone();
            (f, p)
        })
    });
    match parsed {
        Err(msg) => {
            r.error = Some(report::InputError {
                line: 0,
                column: 0,
                message: msg,
            })
        }
        Ok((f, p)) => match (parse_poly(&f, &["x", "y", "z"]), parse_map(&p)) {
            (Err(e), _) | (_, Err(e)) => r.error = Some(report::input_error(&e)),
            (Ok(f), Ok(p)) => {
                r.verified = p.lies_on(&f);
                r.exit_code = if r.verified {
                    EXIT_OK
                } else {
                    report::EXIT_VERIFY_FAILED
                };
                r.certificate = Some(if r.verified {
                    "F(P) reduces to the zero polynomial".into()
                } else {
                    "F(P) is not identically zero".into()
                });
            }
        },
    }
    if let Some(e) = &r.error {
        eprintln!("error: {}:{}: {}", e.line, e.column, e.message);
    }
    if pretty {
        print!("{}", r.human());
    } else {
        println!("{}", serde_json::to_string(&r).expect("report serializes"));
    }
    r.exit_code
}

fn parse_range(text: &str) -> Result<(Rat, Rat), String> {
    let (a, b) = text
        .split_once(':')
        .ok_or_else(|| format!("range `{text}` is not of the form a:b"))?;
    let num = |v: &str| {
        parse_ratfunc(v, &[])
            .map_err(|e| format!("range `{text}`: {e}"))?
            .as_poly()
            .and_then(|p| p.constant_value())
            .ok_or_else(|| format!("range `{text}`: `{v}` is not a number"))
    };
    Ok((num(a)?, num(b)?))
}

fn run_mesh(map: &str, s: &str, t: &str, res: usize, output: Option<&Path>) -> Result<i32, String> {
    let (_, text) = load(map)?;
    let p = parse_map(&text).map_err(|e| e.to_string())?;
    let (s, t) = (parse_range(s)?, parse_range(t)?);
    let m = mesh::sample(&p, &s, &t, res).map_err(|e| e.to_string())?;
    if m.poles > 0 {
        eprintln!("warning: skipped {} samples at poles of the map", m.poles);
    }
    eprintln!("{} vertices, {} faces", m.vertices, m.faces);
    match output {
        Some(path) => {
            std::fs::write(path, &m.text).map_err(|e| format!("{}: {e}", path.display()))?
        }
        None => std::io::stdout()
            .write_all(m.text.as_bytes())
            .map_err(|e| e.to_string())?,
    }
    Ok(EXIT_OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Implicit(a) => run_analyze(InputKind::Implicit, a),
        Command::Parametric(a) => run_analyze(InputKind::Parametric, a),
        Command::Verify {
            surface,
            map,
            pretty,
        } => run_verify(surface, map, *pretty),
        Command::Mesh {
            map,
            s,
            t,
            res,
            output,
        } => run_mesh(map, s, t, *res, output.as_deref()).unwrap_or_else(|e| {
            eprintln!("error: {e}");
            EXIT_INPUT
        }),
    };
    ExitCode::from(code as u8)
}
