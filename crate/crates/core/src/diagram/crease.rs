//! Crease patterns on the unit square.

use std::collections::HashMap;
use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::planar::{PlanarDiagram, SurfaceKind};
use crate::error::{Error, Result};

pub const TOLERANCE: f64 = 1e-9;

/// The subset of a FOLD file this crate reads.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct FoldFile {
    pub vertices_coords: Vec<[f64; 2]>,
    pub edges_vertices: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges_assignment: Option<Vec<String>>,
}

#[derive(Clone, Debug)]
pub struct CreasePattern {
    coords: Vec<[f64; 2]>,
    /// endpoints of every map edge; edge `e` has darts `2e` (at `.0`) and `2e + 1`
    edges: Vec<[usize; 2]>,
    map: PlanarDiagram,
    sector_angles: Vec<Option<Vec<f64>>>,
}

fn side_of(p: [f64; 2]) -> Option<u8> {
    // 0 bottom, 1 right, 2 top, 3 left; corners take the first matching side
    if p[1].abs() <= TOLERANCE {
        Some(0)
    } else if (p[0] - 1.0).abs() <= TOLERANCE {
        Some(1)
    } else if (p[1] - 1.0).abs() <= TOLERANCE {
        Some(2)
    } else if p[0].abs() <= TOLERANCE {
        Some(3)
    } else {
        None
    }
}

fn on_boundary(p: [f64; 2]) -> bool {
    side_of(p).is_some()
}

/// Position along the counterclockwise perimeter, in [0, 4).
fn perimeter_param(p: [f64; 2]) -> f64 {
    match side_of(p) {
        Some(0) if p[0] >= 1.0 - TOLERANCE => 1.0,
        Some(0) => p[0].max(0.0),
        Some(1) if p[1] >= 1.0 - TOLERANCE => 2.0,
        Some(1) => 1.0 + p[1],
        Some(2) if p[0] <= TOLERANCE => 3.0,
        Some(2) => 2.0 + (1.0 - p[0]),
        Some(3) => 3.0 + (1.0 - p[1]),
        _ => f64::NAN,
    }
}

fn same_side(a: [f64; 2], b: [f64; 2]) -> bool {
    let on = |p: [f64; 2], s: u8| match s {
        0 => p[1].abs() <= TOLERANCE,
        1 => (p[0] - 1.0).abs() <= TOLERANCE,
        2 => (p[1] - 1.0).abs() <= TOLERANCE,
        _ => p[0].abs() <= TOLERANCE,
    };
    (0..4).any(|s| on(a, s) && on(b, s))
}

fn cross(o: [f64; 2], a: [f64; 2], b: [f64; 2]) -> f64 {
    (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
}

fn on_segment_interior(p: [f64; 2], a: [f64; 2], b: [f64; 2]) -> bool {
    if cross(a, b, p).abs() > TOLERANCE {
        return false;
    }
    let len2 = (b[0] - a[0]).powi(2) + (b[1] - a[1]).powi(2);
    let t = ((p[0] - a[0]) * (b[0] - a[0]) + (p[1] - a[1]) * (b[1] - a[1])) / len2;
    t > TOLERANCE && t < 1.0 - TOLERANCE
}

fn segments_conflict(a: [f64; 2], b: [f64; 2], c: [f64; 2], d: [f64; 2]) -> bool {
    let d1 = cross(a, b, c);
    let d2 = cross(a, b, d);
    let d3 = cross(c, d, a);
    let d4 = cross(c, d, b);
    let proper = ((d1 > TOLERANCE && d2 < -TOLERANCE) || (d1 < -TOLERANCE && d2 > TOLERANCE))
        && ((d3 > TOLERANCE && d4 < -TOLERANCE) || (d3 < -TOLERANCE && d4 > TOLERANCE));
    proper
        || on_segment_interior(c, a, b)
        || on_segment_interior(d, a, b)
        || on_segment_interior(a, c, d)
        || on_segment_interior(b, c, d)
}

impl CreasePattern {
    pub fn parse_fold(text: &str) -> Result<Self> {
        let fold: FoldFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        Self::from_fold(&fold)
    }

    pub fn from_fold(fold: &FoldFile) -> Result<Self> {
        let mut coords = fold.vertices_coords.clone();
        for (i, p) in coords.iter_mut().enumerate() {
            if p.iter().any(|c| !c.is_finite() || *c < -TOLERANCE || *c > 1.0 + TOLERANCE) {
                return Err(Error::OutsideSheet { vertex: i });
            }
            for c in p.iter_mut() {
                *c = c.clamp(0.0, 1.0);
            }
        }
        for (i, a) in coords.iter().enumerate() {
            for (j, b) in coords.iter().enumerate().skip(i + 1) {
                if (a[0] - b[0]).abs() <= TOLERANCE && (a[1] - b[1]).abs() <= TOLERANCE {
                    return Err(Error::Field {
                        field: "vertices_coords".into(),
                        message: format!("vertices {i} and {j} coincide"),
                    });
                }
            }
        }
        let assignment = fold.edges_assignment.as_deref().unwrap_or(&[]);
        let mut creases = Vec::new();
        for (e, &[u, v]) in fold.edges_vertices.iter().enumerate() {
            if u >= coords.len() || v >= coords.len() || u == v {
                return Err(Error::Field {
                    field: "edges_vertices".into(),
                    message: format!("edge {e} has invalid endpoints [{u}, {v}]"),
                });
            }
            let marked = assignment.get(e).map(|s| s == "B").unwrap_or(false);
            let along_boundary = same_side(coords[u], coords[v]);
            if marked && !along_boundary {
                return Err(Error::Field {
                    field: "edges_assignment".into(),
                    message: format!("edge {e} is marked B but is not on the sheet boundary"),
                });
            }
            if !along_boundary {
                creases.push([u, v]);
            }
        }
        for (i, &[a, b]) in creases.iter().enumerate() {
            for (j, &[c, d]) in creases.iter().enumerate().skip(i + 1) {
                if (a == c && b == d) || (a == d && b == c) {
                    return Err(Error::Field {
                        field: "edges_vertices".into(),
                        message: format!("edges {i} and {j} are duplicates"),
                    });
                }
                if segments_conflict(coords[a], coords[b], coords[c], coords[d]) {
                    return Err(Error::UnsubdividedCrossing(i, j));
                }
            }
            for (k, p) in coords.iter().enumerate() {
                if k != a && k != b && on_segment_interior(*p, coords[a], coords[b]) {
                    return Err(Error::UnsubdividedCrossing(i, i));
                }
            }
        }

        // sheet corners, then the boundary cycle
        for corner in [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]] {
            let present = coords
                .iter()
                .any(|p| (p[0] - corner[0]).abs() <= TOLERANCE && (p[1] - corner[1]).abs() <= TOLERANCE);
            if !present {
                coords.push(corner);
            }
        }
        let mut ring: Vec<usize> = (0..coords.len()).filter(|&i| on_boundary(coords[i])).collect();
        ring.sort_by(|&a, &b| perimeter_param(coords[a]).total_cmp(&perimeter_param(coords[b])));

        let mut edges = creases.clone();
        let mut boundary = vec![false; edges.len()];
        for i in 0..ring.len() {
            edges.push([ring[i], ring[(i + 1) % ring.len()]]);
            boundary.push(true);
        }
        let outer_dart = 2 * creases.len();

        let mut incident: Vec<Vec<(f64, usize)>> = vec![Vec::new(); coords.len()];
        for (e, &[u, v]) in edges.iter().enumerate() {
            let angle = |from: usize, to: usize| {
                (coords[to][1] - coords[from][1]).atan2(coords[to][0] - coords[from][0])
            };
            incident[u].push((angle(u, v), 2 * e));
            incident[v].push((angle(v, u), 2 * e + 1));
        }
        for (v, list) in incident.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::Field {
                    field: "vertices_coords".into(),
                    message: format!("vertex {v} has no edges"),
                });
            }
        }
        let mut sector_angles = Vec::with_capacity(coords.len());
        let rotations: Vec<Vec<usize>> = incident
            .into_iter()
            .enumerate()
            .map(|(v, mut list)| {
                list.sort_by(|a, b| a.0.total_cmp(&b.0));
                if on_boundary(coords[v]) {
                    sector_angles.push(None);
                } else {
                    let n = list.len();
                    let sectors = (0..n)
                        .map(|i| {
                            let mut gap = list[(i + 1) % n].0 - list[i].0;
                            if gap <= 0.0 {
                                gap += 2.0 * PI;
                            }
                            gap.to_degrees()
                        })
                        .collect();
                    sector_angles.push(Some(sectors));
                }
                list.into_iter().map(|(_, d)| d).collect()
            })
            .collect();

        let map = PlanarDiagram::from_rotations(rotations, SurfaceKind::Disk, boundary, Some(outer_dart))?;
        Ok(CreasePattern { coords, edges, map, sector_angles })
    }

    pub fn to_fold(&self) -> FoldFile {
        let assignment = (0..self.edges.len())
            .map(|e| if self.map.is_boundary_edge(e) { "B" } else { "U" }.to_string())
            .collect();
        FoldFile {
            vertices_coords: self.coords.clone(),
            edges_vertices: self.edges.clone(),
            edges_assignment: Some(assignment),
        }
    }

    pub fn map(&self) -> &PlanarDiagram {
        &self.map
    }

    pub fn coords(&self) -> &[[f64; 2]] {
        &self.coords
    }

    pub fn edges(&self) -> &[[usize; 2]] {
        &self.edges
    }

    pub fn is_interior_vertex(&self, v: usize) -> bool {
        !on_boundary(self.coords[v])
    }

    /// Angles (degrees) between consecutive creases, counterclockwise; `None`
    /// on the sheet boundary.
    pub fn sector_angles(&self, v: usize) -> Option<&[f64]> {
        self.sector_angles[v].as_deref()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.coords.len()).filter(|&v| self.is_interior_vertex(v))
    }

    /// Vertex ids keyed by a coordinate lookup, for fixtures and tests.
    pub fn vertex_at(&self, p: [f64; 2]) -> Option<usize> {
        self.coords
            .iter()
            .position(|q| (q[0] - p[0]).abs() <= 1e-6 && (q[1] - p[1]).abs() <= 1e-6)
    }

    /// Region containing the point, by winding around each region polygon.
    pub fn region_at(&self, p: [f64; 2]) -> Option<usize> {
        self.map.regions().iter().position(|r| {
            let poly: Vec<[f64; 2]> =
                r.boundary_darts.iter().map(|&d| self.coords[self.map.vertex_of(d)]).collect();
            point_in_polygon(p, &poly)
        })
    }

    pub fn region_polygon(&self, r: usize) -> Vec<[f64; 2]> {
        self.map.regions()[r]
            .boundary_darts
            .iter()
            .map(|&d| self.coords[self.map.vertex_of(d)])
            .collect()
    }

    pub fn edge_lookup(&self) -> HashMap<(usize, usize), usize> {
        let mut map = HashMap::new();
        for (e, &[u, v]) in self.edges.iter().enumerate() {
            map.insert((u, v), e);
            map.insert((v, u), e);
        }
        map
    }
}

fn point_in_polygon(p: [f64; 2], poly: &[[f64; 2]]) -> bool {
    let mut inside = false;
    let n = poly.len();
    for i in 0..n {
        let a = poly[i];
        let b = poly[(i + 1) % n];
        if (a[1] > p[1]) != (b[1] > p[1]) {
            let x = a[0] + (p[1] - a[1]) / (b[1] - a[1]) * (b[0] - a[0]);
            if p[0] < x {
                inside = !inside;
            }
        }
    }
    inside
}
