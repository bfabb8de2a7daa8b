//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 when a solve target is infeasible and no
//! certificate was requested, 2 on unreadable or invalid input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::analysis::{analyze, render_text};
use crate::diagram::{BoardSource, CreasePattern, LampBoard, LinkDiagram};
use crate::error::{Error, Result};
use crate::foldability::check_flat_foldable_necessary;
use crate::game::GameInstance;
use crate::service::{self, fixture_board, ServiceConfig};
use crate::tangle::Tangle;
use crate::unlink::{
    circle_family, classical_unlink_number, circled_unlink_number, over_circles, proper_link_check, ChangeTable,
    CircledDiagram, CirclePlacement, Transit, TrivialityCertificate,
};

#[derive(Parser, Debug)]
#[command(name = "regsel", version, about = "Region Select and region crossing changes on link diagrams and crease patterns")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solvability, per-lamp changeability, strands and foldability.
    Analyze(Input),
    /// Regions that light every lamp, or a proof that none exist.
    Solve {
        #[command(flatten)]
        input: Input,
        /// Solve for toggling this one lamp instead of lighting all of them.
        #[arg(long)]
        site: Option<usize>,
        /// Print the infeasibility certificate and exit 0 when unsolvable.
        #[arg(long)]
        certificate: bool,
    },
    /// Trace the strands of a diagram or crease pattern.
    Tanglize(Input),
    /// Local flat-foldability conditions of a crease pattern.
    Foldcheck(Input),
    /// Classical and circled region unlinking numbers of a link diagram.
    Unlink {
        #[command(flatten)]
        input: Input,
        /// Largest number of moves tried.
        #[arg(long, default_value_t = 8)]
        budget: usize,
        /// Explicit circle as `dart:index` transits, e.g. `0:0,5:0,9:0,2:0`.
        #[arg(long)]
        circle: Option<String>,
        /// Region holding the circle when it crosses no edges.
        #[arg(long, default_value_t = 0)]
        circle_region: usize,
        /// Include the simplification moves that certify triviality.
        #[arg(long)]
        certificate: bool,
    },
    /// Serve the HTTP API and the static front end.
    Serve {
        #[arg(long, env = "REGSEL_PORT", default_value_t = service::DEFAULT_PORT)]
        port: u16,
        #[arg(long, env = "REGSEL_STATIC_DIR")]
        static_dir: Option<PathBuf>,
        /// Sessions idle this long are dropped.
        #[arg(long, default_value_t = 24)]
        idle_hours: u64,
        /// Sessions are restored from and saved to this file.
        #[arg(long)]
        snapshot: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct Input {
    /// A `.pd`, `.fold` or board `.json` file, or a bundled fixture name.
    pub path: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

/// What a command printed and how it should exit.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

/// Reads a board from a file, choosing the parser by extension; `.json`
/// holds either a board file or a FOLD object. Names of bundled fixtures
/// are accepted when no such file exists.
pub fn load_board(path: &str) -> Result<LampBoard> {
    let p = Path::new(path);
    if !p.exists() {
        if let Some(board) = fixture_board(path) {
            return Ok(board);
        }
    }
    let text = std::fs::read_to_string(p).map_err(|e| Error::Field { field: path.into(), message: e.to_string() })?;
    let ext = p.extension().and_then(|e| e.to_str()).unwrap_or("");
    match ext {
        "pd" | "txt" => Ok(LampBoard::new(BoardSource::Link(LinkDiagram::parse(&text)?))),
        "fold" => Ok(LampBoard::new(BoardSource::Pattern(CreasePattern::parse_fold(&text)?))),
        _ if text.contains("\"diagram\"") => LampBoard::parse(&text),
        _ if text.trim_start().starts_with('{') => {
            Ok(LampBoard::new(BoardSource::Pattern(CreasePattern::parse_fold(&text)?)))
        }
        _ => Ok(LampBoard::new(BoardSource::Link(LinkDiagram::parse(&text)?))),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

/// Runs everything except `serve`.
pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::Analyze(input) => {
            let report = analyze(&load_board(&input.path)?)?;
            Ok(Outcome::ok(match input.format {
                Format::Json => to_json(&report),
                Format::Text => render_text(&report),
            }))
        }
        Command::Solve { input, site, certificate } => solve(input, *site, *certificate),
        Command::Tanglize(input) => {
            let board = load_board(&input.path)?;
            let report = Tangle::from_source(board.source())?.report(board.lamps())?;
            Ok(Outcome::ok(match input.format {
                Format::Json => to_json(&report),
                Format::Text => {
                    let mut out = String::new();
                    for c in &report.components {
                        let kind = if c.closed { "closed" } else { "open" };
                        let _ = writeln!(out, "{} ({kind}): edges [{}]", c.name, list(&c.edges));
                    }
                    let _ = writeln!(out, "reducible crossings at vertices [{}]", list(&report.reducible));
                    let even: Vec<&str> = report.even_components.iter().map(|&k| report.components[k].name.as_str()).collect();
                    let _ = writeln!(out, "even components: {}", if even.is_empty() { "none".into() } else { even.join(" ") });
                    for l in &report.lamp_linking {
                        let _ = writeln!(out, "lamp-linking number of {}: {}", report.components[l.component].name, l.value);
                    }
                    out
                }
            }))
        }
        Command::Foldcheck(input) => {
            let board = load_board(&input.path)?;
            let BoardSource::Pattern(p) = board.source() else {
                return Err(Error::Field { field: input.path.clone(), message: "foldcheck needs a crease pattern".into() });
            };
            let report = check_flat_foldable_necessary(p);
            Ok(Outcome::ok(match input.format {
                Format::Json => to_json(&report),
                Format::Text => {
                    let mut out = String::new();
                    for v in &report.vertices {
                        let verdict = if v.pass { "ok" } else { "FAIL" };
                        let _ = writeln!(out, "vertex {} ({}, {}): degree {}, {verdict}", v.vertex, v.coords[0], v.coords[1], v.degree);
                    }
                    let _ = writeln!(out, "{}", if report.pass { "pass" } else { "fail" });
                    let _ = writeln!(out, "note: {}", report.note);
                    out
                }
            }))
        }
        Command::Unlink { input, budget, circle, circle_region, certificate } => {
            unlink(input, *budget, circle.as_deref(), *circle_region, *certificate)
        }
        Command::Serve { .. } => Err(Error::Field { field: "serve".into(), message: "run through `main`".into() }),
    }
}

fn solve(input: &Input, site: Option<usize>, want_certificate: bool) -> Result<Outcome> {
    let game = GameInstance::new(load_board(&input.path)?);
    let verdict = match site {
        Some(s) => game.changeable(s)?,
        None => game.solve_game()?,
    };
    let json = verdict.to_json();
    let solvable = verdict.is_solved();
    let stdout = match input.format {
        Format::Json if solvable || want_certificate => to_json(&json),
        Format::Json => to_json(&json!({ "solvable": false })),
        Format::Text => match (&json.regions, &json.certificate) {
            (Some(x), _) => format!("select regions [{}]\n", list(x)),
            (_, Some(c)) if want_certificate => {
                format!("unsolvable: lamp rows [{}] sum to zero but their target is odd\n", list(c))
            }
            _ => "unsolvable (pass --certificate for a proof)\n".into(),
        },
    };
    Ok(Outcome { stdout, code: if solvable || want_certificate { 0 } else { 1 } })
}

/// Parses `dart:index` transits separated by commas or spaces.
pub fn parse_circle(text: &str, region: usize) -> Result<CirclePlacement> {
    let transits = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            let bad = || Error::Field { field: "circle".into(), message: format!("expected dart:index, got `{t}`") };
            let (d, i) = t.split_once(':').ok_or_else(bad)?;
            Ok(Transit { dart: d.parse().map_err(|_| bad())?, index: i.parse().map_err(|_| bad())? })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CirclePlacement { transits, region })
}

#[derive(Serialize)]
struct RegionMove {
    region: usize,
    side: &'static str,
}

#[derive(Serialize)]
struct UnlinkReport {
    crossings: usize,
    proper: bool,
    budget: usize,
    u_upper: Option<usize>,
    u_exact: bool,
    u_witness: Vec<usize>,
    u_circled_upper: Option<usize>,
    u_circled_exact: bool,
    circle: Option<CirclePlacement>,
    circles_tried: usize,
    witness_moves: Vec<RegionMove>,
    /// Crossings of D changed by the witness moves.
    witness_crossings: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<TrivialityCertificate>,
}

fn unlink(input: &Input, budget: usize, circle: Option<&str>, circle_region: usize, want_certificate: bool) -> Result<Outcome> {
    let board = load_board(&input.path)?;
    let BoardSource::Link(diagram) = board.source() else {
        return Err(Error::Field { field: input.path.clone(), message: "unlink needs a link diagram".into() });
    };
    let table = ChangeTable::build(diagram.pd())?;
    let classical = classical_unlink_number(&table, budget);
    let (circled, result, tried) = match circle {
        Some(text) => {
            let circled = CircledDiagram::new(diagram, &parse_circle(text, circle_region)?)?;
            let result = circled_unlink_number(&table, &circled, budget);
            (Some(circled), Some(result), 1)
        }
        None => {
            let family = circle_family(diagram);
            match over_circles(&table, &family, budget) {
                Some(search) => {
                    let circled = CircledDiagram::new(diagram, &search.circle)?;
                    (Some(circled), Some(search.best), search.circles_tried)
                }
                None => (None, None, family.len()),
            }
        }
    };
    let found = result.as_ref().filter(|r| r.number.is_some());
    let report = UnlinkReport {
        crossings: diagram.crossing_count(),
        proper: proper_link_check(diagram.pd()).proper,
        budget,
        u_upper: classical.number,
        u_exact: classical.exact,
        u_witness: classical.crossings.clone(),
        u_circled_upper: found.and_then(|r| r.number),
        u_circled_exact: found.is_some_and(|r| r.exact),
        circle: circled.as_ref().map(|c| c.placement().clone()),
        circles_tried: tried,
        witness_moves: match (found, &circled) {
            (Some(r), Some(c)) => r
                .regions
                .iter()
                .map(|&region| RegionMove { region, side: if c.is_north_region(region) { "north" } else { "south" } })
                .collect(),
            _ => Vec::new(),
        },
        witness_crossings: found.map(|r| r.crossings.clone()).unwrap_or_default(),
        certificate: if want_certificate { found.and_then(|r| r.certificate.clone()) } else { None },
    };
    Ok(Outcome::ok(match input.format {
        Format::Json => to_json(&report),
        Format::Text => {
            let mut out = String::new();
            let bound = |n: Option<usize>, exact: bool| match n {
                Some(n) if exact => n.to_string(),
                Some(n) => format!("<= {n}"),
                None => format!("> {budget} or not certified"),
            };
            let _ = writeln!(out, "{} crossings, {} link", report.crossings, if report.proper { "proper" } else { "improper" });
            let _ = writeln!(out, "unlinking number: {} (change crossings [{}])", bound(report.u_upper, report.u_exact), list(&report.u_witness));
            let _ = writeln!(
                out,
                "circled region unlinking number: {} over {} circle(s)",
                bound(report.u_circled_upper, report.u_circled_exact),
                report.circles_tried
            );
            for m in &report.witness_moves {
                let _ = writeln!(out, "  select region {} ({})", m.region, m.side);
            }
            if let Some(c) = &report.certificate {
                let _ = writeln!(out, "certificate: {} simplification moves to {} crossing-free component(s)", c.moves.len(), c.components);
            }
            out
        }
    }))
}

/// Parses arguments, runs the command and returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Command::Serve { port, static_dir, idle_hours, snapshot } = cli.command {
        let config = ServiceConfig {
            port,
            static_dir,
            idle: Duration::from_secs(idle_hours * 3600),
            snapshot,
        };
        let runtime = tokio::runtime::Runtime::new().expect("tokio runtime");
        return match runtime.block_on(service::serve(config)) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                2
            }
        };
    }
    match run(&cli.command) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
