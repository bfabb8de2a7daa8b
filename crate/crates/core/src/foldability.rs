//! Necessary conditions for flat foldability at interior vertices: even
//! degree, and every other sector angle summing to 180°.

use serde::Serialize;

use crate::diagram::CreasePattern;

pub const ANGLE_TOLERANCE: f64 = 1e-6;

pub const NOTE: &str = "even degree and alternating angle sums of 180 degrees are necessary \
                        conditions only; passing them does not imply the pattern folds flat";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VertexReport {
    pub vertex: usize,
    pub coords: [f64; 2],
    pub degree: usize,
    pub even_degree: bool,
    pub sector_angles: Vec<f64>,
    /// Sums of the sectors at even and at odd positions; absent for odd degree.
    pub alternating_sums: Option<[f64; 2]>,
    pub alternating_ok: bool,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FoldabilityReport {
    pub pass: bool,
    pub vertices: Vec<VertexReport>,
    pub note: &'static str,
}

pub fn check_vertex(vertex: usize, coords: [f64; 2], angles: &[f64]) -> VertexReport {
    let degree = angles.len();
    let even_degree = degree % 2 == 0;
    let alternating_sums = even_degree.then(|| {
        let even: f64 = angles.iter().step_by(2).sum();
        let odd: f64 = angles.iter().skip(1).step_by(2).sum();
        assert!(
            (even + odd - 360.0).abs() <= ANGLE_TOLERANCE,
            "sector angles at vertex {vertex} sum to {}",
            even + odd
        );
        [even, odd]
    });
    let alternating_ok = alternating_sums
        .is_some_and(|sums| sums.iter().all(|s| (s - 180.0).abs() <= ANGLE_TOLERANCE));
    VertexReport {
        vertex,
        coords,
        degree,
        even_degree,
        sector_angles: angles.to_vec(),
        alternating_sums,
        alternating_ok,
        pass: even_degree && alternating_ok,
    }
}

pub fn check_flat_foldable_necessary(pattern: &CreasePattern) -> FoldabilityReport {
    let vertices: Vec<VertexReport> = pattern
        .interior_vertices()
        .map(|v| check_vertex(v, pattern.coords()[v], pattern.sector_angles(v).unwrap_or(&[])))
        .collect();
    FoldabilityReport { pass: vertices.iter().all(|v| v.pass), vertices, note: NOTE }
}
