//! Region outlines for drawing a board.
//!
//! Crease patterns already have coordinates. Link diagrams get a barycentric
//! embedding: the largest face is pinned to a circle and every other point
//! sits at the average of its neighbours. Each edge is drawn through two
//! interior points so curls and bigons stay visible.

use serde::Serialize;

use crate::diagram::{BoardSource, PlanarDiagram};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegionOutline {
    pub region: usize,
    pub polygon: Vec<[f64; 2]>,
    /// The unbounded face of a sphere diagram drawn in the plane.
    pub outer: bool,
}

/// Outlines per region in the unit square, or None for matrix boards.
pub fn region_outlines(source: &BoardSource) -> Option<Vec<RegionOutline>> {
    match source {
        BoardSource::Pattern(p) => Some(
            (0..p.map().num_regions())
                .map(|r| RegionOutline { region: r, polygon: p.region_polygon(r), outer: false })
                .collect(),
        ),
        BoardSource::Link(d) => Some(sphere_outlines(d.map())),
        BoardSource::Matrix(_) => None,
    }
}

const SWEEPS: usize = 2000;

/// Point ids: vertices first, then two per edge (near the even dart's tail,
/// then near its head).
fn sphere_outlines(map: &PlanarDiagram) -> Vec<RegionOutline> {
    let nv = map.num_vertices();
    let ne = map.num_edges();
    let inner = |d: usize, near_tail: bool| {
        let e = d / 2;
        let first = (d % 2 == 0) == near_tail;
        nv + 2 * e + usize::from(!first)
    };
    let n = nv + 2 * ne;
    let mut adjacency = vec![Vec::new(); n];
    for e in 0..ne {
        let (a, p, q, b) = (map.vertex_of(2 * e), nv + 2 * e, nv + 2 * e + 1, map.vertex_of(2 * e + 1));
        for (x, y) in [(a, p), (p, q), (q, b)] {
            adjacency[x].push(y);
            adjacency[y].push(x);
        }
    }
    let outline = |f: &[usize]| -> Vec<usize> {
        f.iter().flat_map(|&d| [map.vertex_of(d), inner(d, true), inner(d, false)]).collect()
    };
    let outer_face = (0..map.faces().len()).max_by_key(|&f| (map.faces()[f].len(), usize::MAX - f)).unwrap_or(0);
    let mut pos = vec![[0.5, 0.5]; n];
    let mut pinned = vec![false; n];
    let ring = outline(&map.faces()[outer_face]);
    let mut seen = std::collections::HashSet::new();
    let ring: Vec<usize> = ring.into_iter().filter(|p| seen.insert(*p)).collect();
    for (i, &p) in ring.iter().enumerate() {
        // clockwise around the pinned face keeps the other faces inside
        let t = -2.0 * std::f64::consts::PI * i as f64 / ring.len() as f64;
        pos[p] = [0.5 + 0.45 * t.cos(), 0.5 + 0.45 * t.sin()];
        pinned[p] = true;
    }
    for _ in 0..SWEEPS {
        for p in 0..n {
            if pinned[p] || adjacency[p].is_empty() {
                continue;
            }
            let k = adjacency[p].len() as f64;
            let sum = adjacency[p].iter().fold([0.0, 0.0], |s, &q| [s[0] + pos[q][0], s[1] + pos[q][1]]);
            pos[p] = [sum[0] / k, sum[1] / k];
        }
    }
    (0..map.faces().len())
        .map(|f| RegionOutline {
            region: map.region_of_face(f).expect("sphere faces are regions"),
            polygon: outline(&map.faces()[f]).into_iter().map(|p| pos[p]).collect(),
            outer: f == outer_face,
        })
        .collect()
}
