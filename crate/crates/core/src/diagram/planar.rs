//! Combinatorial planar maps.
//!
//! Edge `e` owns the two darts `2e` and `2e + 1`, so `opposite(d) = d ^ 1`.
//! Each vertex lists its darts in counterclockwise order. Faces are traced
//! with `next = rotation(opposite(d))`, which keeps the face on the right of
//! every dart; `face_of(d)` is the face on the right of `d`.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Dart = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SurfaceKind {
    Sphere,
    Disk,
}

/// A connected portion of the surface cut out by the diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Region {
    pub id: usize,
    pub boundary_darts: Vec<Dart>,
    /// vertex -> number of corners of this region at that vertex
    pub vertex_incidence: BTreeMap<usize, usize>,
}

impl Region {
    pub fn corners_at(&self, vertex: usize) -> usize {
        self.vertex_incidence.get(&vertex).copied().unwrap_or(0)
    }
}

#[derive(Clone, Debug)]
pub struct PlanarDiagram {
    rotation: Vec<Dart>,
    rotation_inv: Vec<Dart>,
    vertex_of: Vec<usize>,
    vertex_darts: Vec<Vec<Dart>>,
    surface: SurfaceKind,
    boundary_edge: Vec<bool>,
    face_of: Vec<usize>,
    faces: Vec<Vec<Dart>>,
    outer_face: Option<usize>,
    region_of_face: Vec<Option<usize>>,
    regions: Vec<Region>,
    boundary_walk: Vec<Dart>,
}

impl PlanarDiagram {
    /// Builds a map from counterclockwise dart lists per vertex.
    ///
    /// For a disk, `boundary_edge` flags the sheet boundary and `outer_dart`
    /// names a boundary dart whose right-hand face lies outside the sheet.
    pub fn from_rotations(
        vertex_darts: Vec<Vec<Dart>>,
        surface: SurfaceKind,
        boundary_edge: Vec<bool>,
        outer_dart: Option<Dart>,
    ) -> Result<Self> {
        let num_darts: usize = vertex_darts.iter().map(Vec::len).sum();
        if num_darts % 2 != 0 {
            return Err(Error::InvalidDiagram("odd number of darts".into()));
        }
        let mut vertex_of = vec![usize::MAX; num_darts];
        let mut rotation = vec![usize::MAX; num_darts];
        let mut rotation_inv = vec![usize::MAX; num_darts];
        for (v, darts) in vertex_darts.iter().enumerate() {
            for (i, &d) in darts.iter().enumerate() {
                if d >= num_darts || vertex_of[d] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("dart {d} misplaced")));
                }
                vertex_of[d] = v;
                let next = darts[(i + 1) % darts.len()];
                rotation[d] = next;
                rotation_inv[next] = d;
            }
        }
        let num_edges = num_darts / 2;
        let boundary_edge = if boundary_edge.is_empty() {
            vec![false; num_edges]
        } else {
            boundary_edge
        };
        if boundary_edge.len() != num_edges {
            return Err(Error::Dimension { expected: num_edges, actual: boundary_edge.len() });
        }

        let mut face_of = vec![usize::MAX; num_darts];
        let mut faces = Vec::new();
        for start in 0..num_darts {
            if face_of[start] != usize::MAX {
                continue;
            }
            let id = faces.len();
            let mut cycle = Vec::new();
            let mut d = start;
            loop {
                face_of[d] = id;
                cycle.push(d);
                d = rotation[d ^ 1];
                if d == start {
                    break;
                }
            }
            faces.push(cycle);
        }

        let outer_face = match surface {
            SurfaceKind::Sphere => None,
            SurfaceKind::Disk => {
                let d = outer_dart
                    .ok_or_else(|| Error::InvalidDiagram("disk diagram needs an outer dart".into()))?;
                Some(face_of[d])
            }
        };

        let mut diagram = PlanarDiagram {
            rotation,
            rotation_inv,
            vertex_of,
            vertex_darts,
            surface,
            boundary_edge,
            face_of,
            faces,
            outer_face,
            region_of_face: Vec::new(),
            regions: Vec::new(),
            boundary_walk: Vec::new(),
        };
        diagram.check_euler()?;
        diagram.build_regions();
        Ok(diagram)
    }

    fn check_euler(&self) -> Result<()> {
        let pieces = self.connected_pieces() as i64;
        let v = self.num_vertices() as i64;
        let e = self.num_edges() as i64;
        let f = self.faces.len() as i64;
        let euler = v - e + f;
        let expected = 2 * pieces;
        if euler != expected {
            return Err(Error::NonPlanar { euler, expected });
        }
        if self.surface == SurfaceKind::Disk && pieces != 1 {
            return Err(Error::InvalidDiagram("disk diagram must be connected".into()));
        }
        Ok(())
    }

    fn build_regions(&mut self) {
        self.region_of_face = vec![None; self.faces.len()];
        for (f, cycle) in self.faces.iter().enumerate() {
            if Some(f) == self.outer_face {
                continue;
            }
            let id = self.regions.len();
            let mut vertex_incidence = BTreeMap::new();
            for &d in cycle {
                // the corner of this face between opposite(d) and rotation(opposite(d))
                *vertex_incidence.entry(self.vertex_of[d ^ 1]).or_insert(0) += 1;
            }
            self.region_of_face[f] = Some(id);
            self.regions.push(Region { id, boundary_darts: cycle.clone(), vertex_incidence });
        }
        if let Some(outer) = self.outer_face {
            self.boundary_walk = self.faces[outer].clone();
        }
    }

    pub fn surface(&self) -> SurfaceKind {
        self.surface
    }

    pub fn num_darts(&self) -> usize {
        self.vertex_of.len()
    }

    pub fn num_edges(&self) -> usize {
        self.vertex_of.len() / 2
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_darts.len()
    }

    pub fn opposite(&self, d: Dart) -> Dart {
        d ^ 1
    }

    pub fn edge_of(&self, d: Dart) -> usize {
        d / 2
    }

    /// Next dart counterclockwise around the same vertex.
    pub fn rotate(&self, d: Dart) -> Dart {
        self.rotation[d]
    }

    pub fn rotate_cw(&self, d: Dart) -> Dart {
        self.rotation_inv[d]
    }

    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    pub fn darts_at(&self, v: usize) -> &[Dart] {
        &self.vertex_darts[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_darts[v].len()
    }

    /// Position of `d` in the counterclockwise list of its vertex.
    pub fn position(&self, d: Dart) -> usize {
        let v = self.vertex_of[d];
        self.vertex_darts[v].iter().position(|&x| x == d).expect("dart at its vertex")
    }

    pub fn is_boundary_edge(&self, e: usize) -> bool {
        self.boundary_edge[e]
    }

    pub fn is_boundary_vertex(&self, v: usize) -> bool {
        self.vertex_darts[v].iter().any(|&d| self.boundary_edge[d / 2])
    }

    /// Number of non-boundary edges at `v`, counting loops twice.
    pub fn interior_degree(&self, v: usize) -> usize {
        self.vertex_darts[v].iter().filter(|&&d| !self.boundary_edge[d / 2]).count()
    }

    pub fn faces(&self) -> &[Vec<Dart>] {
        &self.faces
    }

    pub fn face_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    pub fn outer_face(&self) -> Option<usize> {
        self.outer_face
    }

    /// Region to the right of `d`, `None` for the outside of the sheet.
    pub fn region_of_dart(&self, d: Dart) -> Option<usize> {
        self.region_of_face[self.face_of[d]]
    }

    pub fn region_of_face(&self, f: usize) -> Option<usize> {
        self.region_of_face[f]
    }

    pub fn regions(&self) -> &[Region] {
        &self.regions
    }

    pub fn num_regions(&self) -> usize {
        self.regions.len()
    }

    pub fn boundary_walk(&self) -> &[Dart] {
        &self.boundary_walk
    }

    /// Region in the corner counterclockwise after `d` at its vertex.
    pub fn corner_region(&self, d: Dart) -> Option<usize> {
        // corner between d and rotate(d) is the left side of d
        self.region_of_dart(d ^ 1)
    }

    pub fn connected_pieces(&self) -> usize {
        let n = self.num_vertices();
        let mut seen = vec![false; n];
        let mut pieces = 0;
        for s in 0..n {
            if seen[s] {
                continue;
            }
            pieces += 1;
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &d in &self.vertex_darts[v] {
                    let w = self.vertex_of[d ^ 1];
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
        }
        pieces
    }

    /// Regions adjacent across each non-boundary edge: `(edge, right, left)`.
    pub fn dual_graph(&self) -> Vec<(usize, usize, usize)> {
        (0..self.num_edges())
            .filter(|&e| !self.boundary_edge[e])
            .filter_map(|e| {
                let a = self.region_of_dart(2 * e)?;
                let b = self.region_of_dart(2 * e + 1)?;
                Some((e, a, b))
            })
            .collect()
    }

    /// Parity labels of regions with respect to crossing the given edges,
    /// starting from `reference` at parity 0.
    ///
    /// The labeling is consistent exactly when every closed dual walk meets
    /// `edges` an even number of times.
    pub fn crossing_parity(&self, edges: &[bool], reference: usize) -> Result<Vec<bool>> {
        let n = self.num_regions();
        let mut adjacency = vec![Vec::new(); n];
        for (e, a, b) in self.dual_graph() {
            adjacency[a].push((b, edges[e]));
            adjacency[b].push((a, edges[e]));
        }
        let mut label: Vec<Option<bool>> = vec![None; n];
        label[reference] = Some(false);
        let mut queue = VecDeque::from([reference]);
        while let Some(r) = queue.pop_front() {
            let here = label[r].unwrap();
            for &(s, flip) in &adjacency[r] {
                let want = here ^ flip;
                match label[s] {
                    None => {
                        label[s] = Some(want);
                        queue.push_back(s);
                    }
                    Some(have) if have != want => return Err(Error::NotTwoColorable),
                    Some(_) => {}
                }
            }
        }
        label
            .into_iter()
            .map(|l| l.ok_or_else(|| Error::InvalidDiagram("dual graph is disconnected".into())))
            .collect()
    }

    /// Proper two-coloring of the regions; `true` marks shaded.
    pub fn checkerboard(&self) -> Result<Vec<bool>> {
        if self.num_regions() == 0 {
            return Ok(Vec::new());
        }
        let all = vec![true; self.num_edges()];
        self.crossing_parity(&all, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle() -> PlanarDiagram {
        PlanarDiagram::from_rotations(vec![vec![0, 1]], SurfaceKind::Sphere, vec![], None).unwrap()
    }

    #[test]
    fn circle_has_two_regions() {
        let d = circle();
        assert_eq!(d.num_regions(), 2);
        let colors = d.checkerboard().unwrap();
        assert_ne!(colors[0], colors[1]);
        assert_eq!(d.dual_graph().len(), 1);
    }

    #[test]
    fn rejects_misplaced_dart() {
        let err = PlanarDiagram::from_rotations(vec![vec![0, 0]], SurfaceKind::Sphere, vec![], None);
        assert!(err.is_err());
    }

    #[test]
    fn rejects_nonplanar_rotation() {
        // a single vertex with two loops interleaved is a torus embedding
        let err = PlanarDiagram::from_rotations(
            vec![vec![0, 2, 1, 3]],
            SurfaceKind::Sphere,
            vec![],
            None,
        );
        assert!(matches!(err, Err(Error::NonPlanar { .. })));
    }

    #[test]
    fn corner_counts_sum_to_degree() {
        let d = PlanarDiagram::from_rotations(
            vec![vec![0, 1, 2, 3]],
            SurfaceKind::Sphere,
            vec![],
            None,
        )
        .unwrap();
        // figure-eight curve: one crossing, three regions
        assert_eq!(d.num_regions(), 3);
        let total: usize = d.regions().iter().map(|r| r.corners_at(0)).sum();
        assert_eq!(total, 4);
        assert!(d.regions().iter().any(|r| r.corners_at(0) == 2));
    }
}
