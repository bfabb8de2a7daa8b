//! One-shot analysis of a board: solvability, per-lamp changeability, and
//! the strand and foldability reports that apply to its diagram.

use std::fmt::Write as _;

use serde::Serialize;

use crate::diagram::{BoardSource, LampBoard};
use crate::error::Result;
use crate::foldability::{check_flat_foldable_necessary, FoldabilityReport};
use crate::game::{GameInstance, VerdictJson};
use crate::gf2::{self, BitVec};
use crate::tangle::{Tangle, TangleReport};

#[derive(Clone, Debug, Serialize)]
pub struct SiteReport {
    pub site: usize,
    /// Map vertex carrying the lamp; absent for matrix boards.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vertex: Option<usize>,
    pub on: bool,
    pub changeable: VerdictJson,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub kind: &'static str,
    pub sites: usize,
    pub regions: usize,
    pub rank: usize,
    pub kernel_dimension: usize,
    /// Can every lamp be lit from the given state.
    pub solve: VerdictJson,
    pub per_site: Vec<SiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangle: Option<TangleReport>,
    /// Why no strand report was produced, when it was not.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tangle_error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub foldability: Option<FoldabilityReport>,
}

pub fn analyze(board: &LampBoard) -> Result<AnalysisReport> {
    let game = GameInstance::new(board.clone());
    let matrix = game.matrix();
    let kernel = gf2::solve(matrix, &BitVec::zeros(matrix.rows()))?.kernel_basis.len();
    let per_site = (0..game.num_sites())
        .map(|s| {
            Ok(SiteReport {
                site: s,
                vertex: board.source().map().map(|_| board.lamp_sites()[s]),
                on: game.lamps().get(s),
                changeable: game.changeable(s)?.to_json(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let (tangle, tangle_error) = match board.source() {
        BoardSource::Matrix(_) => (None, None),
        source => match Tangle::from_source(source).and_then(|t| t.report(board.lamps())) {
            Ok(r) => (Some(r), None),
            Err(e) => (None, Some(e.to_string())),
        },
    };
    let (kind, foldability) = match board.source() {
        BoardSource::Link(_) => ("link", None),
        BoardSource::Pattern(p) => ("pattern", Some(check_flat_foldable_necessary(p))),
        BoardSource::Matrix(_) => ("matrix", None),
    };
    Ok(AnalysisReport {
        kind,
        sites: game.num_sites(),
        regions: game.num_regions(),
        rank: matrix.rank(),
        kernel_dimension: kernel,
        solve: game.solve_game()?.to_json(),
        per_site,
        tangle,
        tangle_error,
        foldability,
    })
}

fn list(v: &[usize]) -> String {
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
}

pub fn render_text(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} board: {} lamps, {} regions, rank {}, kernel dimension {}", r.kind, r.sites, r.regions, r.rank, r.kernel_dimension);
    match (&r.solve.regions, &r.solve.certificate) {
        (Some(x), _) => {
            let _ = writeln!(out, "solvable: select regions [{}]", list(x));
        }
        (_, Some(c)) => {
            let _ = writeln!(out, "unsolvable: lamp rows [{}] sum to zero but their target is odd", list(c));
        }
        _ => {}
    }
    for s in &r.per_site {
        let at = s.vertex.map(|v| format!(" (vertex {v})")).unwrap_or_default();
        let state = if s.on { "on" } else { "off" };
        match (&s.changeable.regions, &s.changeable.certificate) {
            (Some(x), _) => {
                let _ = writeln!(out, "lamp {}{at} {state}: changeable by [{}]", s.site, list(x));
            }
            (_, Some(c)) => {
                let _ = writeln!(out, "lamp {}{at} {state}: unchangeable, certificate [{}]", s.site, list(c));
            }
            _ => {}
        }
    }
    if let Some(t) = &r.tangle {
        let names: Vec<&str> = t.components.iter().map(|c| c.name.as_str()).collect();
        let _ = writeln!(out, "strands: {}", names.join(" "));
        let even: Vec<String> = t.even_components.iter().map(|&k| t.components[k].name.clone()).collect();
        let _ = writeln!(out, "even components: {}", if even.is_empty() { "none".into() } else { even.join(" ") });
        for l in &t.lamp_linking {
            let _ = writeln!(out, "lamp-linking number of {}: {}", t.components[l.component].name, l.value);
        }
        if !t.reducible.is_empty() {
            let _ = writeln!(out, "reducible crossings at vertices [{}]", list(&t.reducible));
        }
    }
    if let Some(e) = &r.tangle_error {
        let _ = writeln!(out, "strands: {e}");
    }
    if let Some(f) = &r.foldability {
        let _ = writeln!(out, "flat-foldability necessary conditions: {}", if f.pass { "pass" } else { "fail" });
        for v in f.vertices.iter().filter(|v| !v.pass) {
            let _ = writeln!(out, "  vertex {} at ({}, {}): degree {}, sums {:?}", v.vertex, v.coords[0], v.coords[1], v.degree, v.alternating_sums);
        }
        let _ = writeln!(out, "  note: {}", f.note);
    }
    out
}
