//! Simple closed curves drawn on a link diagram, transverse to its edges.
//!
//! A circle is recorded as the cyclic sequence of edge transits it makes.
//! Each transit names the dart it crosses (from the dart's right-hand face
//! to its left-hand face) and the transit's rank along the edge, counted
//! from the tail of the edge's even dart.

use std::collections::{BTreeMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::diagram::{incidence_matrix, Dart, LinkDiagram, PlanarDiagram, SurfaceKind};
use crate::error::{Error, Result};
use crate::gf2::Gf2Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Transit {
    pub dart: Dart,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct CirclePlacement {
    pub transits: Vec<Transit>,
    /// Region holding a circle that crosses nothing.
    #[serde(default)]
    pub region: usize,
}

impl CirclePlacement {
    pub fn empty(region: usize) -> Self {
        CirclePlacement { transits: Vec::new(), region }
    }

    pub fn is_empty(&self) -> bool {
        self.transits.is_empty()
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidCircle(msg.into())
}

/// The diagram together with a circle, cut into the regions of D ∪ C.
///
/// Crossings keep their vertex ids; transit points follow. North is the
/// side to the left of the circle's direction.
#[derive(Clone, Debug)]
pub struct CircledDiagram {
    placement: CirclePlacement,
    map: PlanarDiagram,
    crossings: Vec<usize>,
    north_region: Vec<bool>,
    matrix: Gf2Matrix,
}

impl CircledDiagram {
    pub fn new(diagram: &LinkDiagram, placement: &CirclePlacement) -> Result<Self> {
        let base = diagram.map();
        let crossings: Vec<usize> = (0..diagram.crossing_count()).collect();
        if placement.is_empty() {
            let n = base.num_regions();
            if placement.region >= n {
                return Err(Error::UnknownRegion(placement.region));
            }
            // the disk inside the circle is an extra region touching nothing
            let inner = incidence_matrix(base, &crossings);
            let mut matrix = Gf2Matrix::zeros(crossings.len(), n + 1);
            for r in 0..crossings.len() {
                for c in inner.row(r).ones() {
                    matrix.set(r, c, true);
                }
            }
            let mut north_region = vec![false; n + 1];
            north_region[n] = true;
            return Ok(CircledDiagram {
                placement: placement.clone(),
                map: base.clone(),
                crossings,
                north_region,
                matrix,
            });
        }
        let map = refine(base, &placement.transits)?;
        let circle_start = 2 * (map.num_edges() - placement.transits.len());
        let mut on_circle = vec![false; map.num_edges()];
        for e in circle_start / 2..map.num_edges() {
            on_circle[e] = true;
        }
        let left = map.region_of_dart(circle_start ^ 1).expect("sphere faces are regions");
        let parity = map.crossing_parity(&on_circle, left).map_err(|_| bad("circle does not separate"))?;
        let right = map.region_of_dart(circle_start).expect("sphere faces are regions");
        if parity[right] == parity[left] {
            return Err(bad("circle does not separate"));
        }
        let north_region = parity.iter().map(|&p| !p).collect();
        let matrix = incidence_matrix(&map, &crossings);
        Ok(CircledDiagram { placement: placement.clone(), map, crossings, north_region, matrix })
    }

    pub fn placement(&self) -> &CirclePlacement {
        &self.placement
    }

    /// The refined map; empty circles leave the diagram's own map.
    pub fn map(&self) -> &PlanarDiagram {
        &self.map
    }

    pub fn num_regions(&self) -> usize {
        self.north_region.len()
    }

    /// Crossings by regions of D ∪ C, corner counts mod 2.
    pub fn incidence_matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn is_north_region(&self, r: usize) -> bool {
        self.north_region[r]
    }

    pub fn is_north_crossing(&self, x: usize) -> bool {
        if self.placement.is_empty() {
            return false;
        }
        let d = self.map.darts_at(self.crossings[x])[0];
        self.north_region[self.map.corner_region(d).expect("sphere")]
    }

    /// Crossings, regions and incidence restricted to one side.
    pub fn side(&self, north: bool) -> SideBoard {
        let crossings: Vec<usize> =
            (0..self.crossings.len()).filter(|&x| self.is_north_crossing(x) == north).collect();
        let regions: Vec<usize> = (0..self.num_regions()).filter(|&r| self.north_region[r] == north).collect();
        let rows = crossings.iter().map(|&x| self.matrix.row(x).clone()).collect();
        let full = Gf2Matrix::from_rows(self.num_regions(), rows).expect("row lengths agree");
        SideBoard { matrix: full.select_columns(&regions), crossings, regions }
    }
}

#[derive(Clone, Debug)]
pub struct SideBoard {
    pub crossings: Vec<usize>,
    pub regions: Vec<usize>,
    pub matrix: Gf2Matrix,
}

/// Subdivides the crossed edges and threads the circle through the faces.
fn refine(base: &PlanarDiagram, transits: &[Transit]) -> Result<PlanarDiagram> {
    let e0 = base.num_edges();
    let v0 = base.num_vertices();
    let mut per_edge: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    let mut seen = HashSet::new();
    for (k, t) in transits.iter().enumerate() {
        if t.dart >= 2 * e0 {
            return Err(bad(format!("dart {} out of range", t.dart)));
        }
        if !seen.insert((t.dart / 2, t.index)) {
            return Err(bad(format!("edge {} crossed twice at rank {}", t.dart / 2, t.index)));
        }
        per_edge.entry(t.dart / 2).or_default().push(k);
    }
    // segment ids: segment 0 keeps the edge id
    let mut segments: Vec<Vec<usize>> = (0..e0).map(|e| vec![e]).collect();
    let mut next_edge = e0;
    for (&e, ks) in &per_edge {
        let mut ranks: Vec<usize> = ks.iter().map(|&k| transits[k].index).collect();
        ranks.sort_unstable();
        if ranks != (0..ks.len()).collect::<Vec<_>>() {
            return Err(bad(format!("ranks on edge {e} are not 0..{}", ks.len())));
        }
        for _ in 0..ks.len() {
            segments[e].push(next_edge);
            next_edge += 1;
        }
    }
    let n = transits.len();
    let circle_edge = |k: usize| next_edge + k % n;
    for k in 0..n {
        let here = transits[k].dart ^ 1;
        let next = transits[(k + 1) % n].dart;
        if base.face_of(here) != base.face_of(next) {
            return Err(bad(format!("transits {k} and {} do not share a face", (k + 1) % n)));
        }
    }
    let mut rotations: Vec<Vec<Dart>> = (0..v0)
        .map(|v| {
            base.darts_at(v)
                .iter()
                .map(|&d| {
                    let seg = &segments[d / 2];
                    if d % 2 == 0 {
                        2 * seg[0]
                    } else {
                        2 * seg[seg.len() - 1] + 1
                    }
                })
                .collect()
        })
        .collect();
    for (k, t) in transits.iter().enumerate() {
        let seg = &segments[t.dart / 2];
        let (toward_head, toward_tail) = (2 * seg[t.index + 1], 2 * seg[t.index] + 1);
        let (ahead, behind) = if t.dart % 2 == 0 { (toward_head, toward_tail) } else { (toward_tail, toward_head) };
        rotations.push(vec![ahead, 2 * circle_edge(k), behind, 2 * circle_edge(k + n - 1) + 1]);
    }
    PlanarDiagram::from_rotations(rotations, SurfaceKind::Sphere, vec![], None)
        .map_err(|e| bad(format!("circle is not simple: {e}")))
}

/// A point the neighborhood circle must enclose.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Site {
    Crossing { crossing: usize },
    /// A base point in the middle of an edge of the diagram's map.
    Basepoint { edge: usize },
}

/// A leg of a path between consecutive sites: it starts in `face` and crosses
/// `darts` from their right-hand to their left-hand faces.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Leg {
    pub face: usize,
    pub darts: Vec<Dart>,
}

impl Leg {
    fn end(&self, map: &PlanarDiagram) -> usize {
        self.darts.last().map_or(self.face, |&d| map.face_of(d ^ 1))
    }
}

fn site_faces(map: &PlanarDiagram, site: Site) -> Vec<usize> {
    match site {
        Site::Crossing { crossing } => map.darts_at(crossing).iter().map(|&d| map.face_of(d ^ 1)).collect(),
        Site::Basepoint { edge } => vec![map.face_of(2 * edge), map.face_of(2 * edge + 1)],
    }
}

/// Shortest dual path from any face in `from` to any face in `to`, never
/// crossing the `blocked` edges.
pub fn dual_path(map: &PlanarDiagram, from: &[usize], to: &[usize], blocked: &[usize], max_len: usize) -> Option<Leg> {
    let mut prev: Vec<Option<(usize, Dart)>> = vec![None; map.faces().len()];
    let mut seen = vec![false; map.faces().len()];
    let mut queue = VecDeque::new();
    for &f in from {
        if !seen[f] {
            seen[f] = true;
            queue.push_back((f, 0));
        }
    }
    while let Some((f, len)) = queue.pop_front() {
        if to.contains(&f) {
            let mut darts = Vec::new();
            let mut g = f;
            while let Some((p, d)) = prev[g] {
                darts.push(d);
                g = p;
            }
            darts.reverse();
            return Some(Leg { face: g, darts });
        }
        if len == max_len {
            continue;
        }
        for &d in &map.faces()[f] {
            let g = map.face_of(d ^ 1);
            if blocked.contains(&(d / 2)) || seen[g] {
                continue;
            }
            seen[g] = true;
            prev[g] = Some((f, d));
            queue.push_back((g, len + 1));
        }
    }
    None
}

const CAP: f64 = 1e-3;

/// Transit with a real position along the edge's even dart.
#[derive(Clone, Copy, Debug)]
struct Raw {
    dart: Dart,
    at: f64,
}

fn near_vertex(d: Dart) -> Raw {
    Raw { dart: d, at: if d % 2 == 0 { CAP } else { 1.0 - CAP } }
}

/// Crossings of outward darts while circling `v` counterclockwise from
/// corner `from`, for `count` darts.
fn circling(map: &PlanarDiagram, v: usize, from: usize, count: usize) -> Vec<Raw> {
    let darts = map.darts_at(v);
    (1..=count).map(|i| near_vertex(darts[(from + i) % darts.len()])).collect()
}

fn corner_with_face(map: &PlanarDiagram, v: usize, face: usize) -> Result<usize> {
    map.darts_at(v)
        .iter()
        .position(|&d| map.face_of(d ^ 1) == face)
        .ok_or_else(|| Error::InvalidPath(format!("face {face} does not touch crossing {v}")))
}

/// Which side of a base-point edge a face is on: false for the right of the
/// even dart.
fn basepoint_side(map: &PlanarDiagram, edge: usize, face: usize) -> Result<bool> {
    if map.face_of(2 * edge) == face {
        Ok(false)
    } else if map.face_of(2 * edge + 1) == face {
        Ok(true)
    } else {
        Err(Error::InvalidPath(format!("face {face} does not touch edge {edge}")))
    }
}

/// Boundary of a thin neighborhood of the path through `sites` along `legs`.
///
/// `wrap_forward[i]` picks which side of the path loops around stop `i` when
/// the path arrives and leaves through the same corner.
pub fn path_circle(diagram: &LinkDiagram, sites: &[Site], legs: &[Leg], wrap_forward: &[bool]) -> Result<CirclePlacement> {
    let map = diagram.map();
    if sites.is_empty() || legs.len() + 1 != sites.len() {
        return Err(Error::InvalidPath("need one leg between each pair of consecutive sites".into()));
    }
    for s in sites {
        match *s {
            Site::Crossing { crossing } if crossing >= diagram.crossing_count() => {
                return Err(Error::InvalidPath(format!("no crossing {crossing}")))
            }
            Site::Basepoint { edge } if edge >= map.num_edges() => {
                return Err(Error::InvalidPath(format!("no edge {edge}")))
            }
            _ => {}
        }
    }
    for leg in legs {
        let mut f = leg.face;
        for &d in &leg.darts {
            if d >= map.num_darts() || map.face_of(d) != f {
                return Err(Error::InvalidPath(format!("dart {d} is not on face {f}")));
            }
            f = map.face_of(d ^ 1);
        }
    }
    // evenly spaced positions for everything that sits in an edge's middle
    let mut middle: BTreeMap<usize, usize> = BTreeMap::new();
    let mut slot = |e: usize| {
        let c = middle.entry(e).or_insert(0);
        *c += 1;
        *c
    };
    let basepoint_slot: Vec<Option<usize>> = sites
        .iter()
        .map(|s| match *s {
            Site::Basepoint { edge } => Some(slot(edge)),
            _ => None,
        })
        .collect();
    let leg_slots: Vec<Vec<usize>> = legs.iter().map(|l| l.darts.iter().map(|&d| slot(d / 2)).collect()).collect();
    let place = |e: usize, s: usize| s as f64 / (middle[&e] + 1) as f64;
    let delta = |e: usize| 0.25 / (middle[&e] + 1) as f64;

    let ahead = |d: Dart, at: f64, dl: f64| if d % 2 == 0 { at + dl } else { at - dl };
    let mut forward: Vec<Vec<Raw>> = vec![Vec::new(); sites.len()];
    let mut backward: Vec<Vec<Raw>> = vec![Vec::new(); sites.len()];
    let mut leg_right: Vec<Vec<Raw>> = Vec::new();
    let mut leg_left: Vec<Vec<Raw>> = Vec::new();
    for (leg, slots) in legs.iter().zip(&leg_slots) {
        let mut right = Vec::new();
        let mut left = Vec::new();
        for (&d, &s) in leg.darts.iter().zip(slots) {
            let (at, dl) = (place(d / 2, s), delta(d / 2));
            right.push(Raw { dart: d, at: ahead(d, at, dl) });
            left.push(Raw { dart: d ^ 1, at: ahead(d, at, -dl) });
        }
        left.reverse();
        leg_right.push(right);
        leg_left.push(left);
    }
    let last = sites.len() - 1;
    for (i, site) in sites.iter().enumerate() {
        let arrive = (i > 0).then(|| legs[i - 1].end(map));
        let depart = (i < last).then(|| legs[i].face);
        let wrap = wrap_forward.get(i).copied().unwrap_or(true);
        match *site {
            Site::Crossing { crossing: v } => {
                let deg = map.degree(v);
                match (arrive, depart) {
                    (None, None) => forward[i] = circling(map, v, 0, deg),
                    (Some(a), None) => forward[i] = circling(map, v, corner_with_face(map, v, a)?, deg),
                    (None, Some(b)) => backward[i] = circling(map, v, corner_with_face(map, v, b)?, deg),
                    (Some(a), Some(b)) => {
                        let (a, b) = (corner_with_face(map, v, a)?, corner_with_face(map, v, b)?);
                        let steps = (b + deg - a) % deg;
                        if steps == 0 && wrap {
                            forward[i] = circling(map, v, a, deg);
                        } else if steps == 0 {
                            backward[i] = circling(map, v, b, deg);
                        } else {
                            forward[i] = circling(map, v, a, steps);
                            backward[i] = circling(map, v, b, deg - steps);
                        }
                    }
                }
            }
            Site::Basepoint { edge } => {
                let (at, dl) = (place(edge, basepoint_slot[i].unwrap()), delta(edge));
                let east = Raw { dart: 2 * edge, at: at + dl };
                let west = Raw { dart: 2 * edge + 1, at: at - dl };
                let around = |north: bool| if north { vec![west, east] } else { vec![east, west] };
                match (arrive, depart) {
                    (None, None) => forward[i] = around(false),
                    (Some(a), None) => forward[i] = around(basepoint_side(map, edge, a)?),
                    (None, Some(b)) => backward[i] = around(basepoint_side(map, edge, b)?),
                    (Some(a), Some(b)) => {
                        let (a, b) = (basepoint_side(map, edge, a)?, basepoint_side(map, edge, b)?);
                        if a != b {
                            forward[i] = vec![if a { west } else { east }];
                            backward[i] = vec![if a { east } else { west }];
                        } else if wrap {
                            forward[i] = around(a);
                        } else {
                            backward[i] = around(a);
                        }
                    }
                }
            }
        }
    }
    let mut raw: Vec<Raw> = Vec::new();
    for i in 0..sites.len() {
        if i > 0 {
            raw.extend(&leg_right[i - 1]);
        }
        raw.extend(&forward[i]);
    }
    for i in (0..sites.len()).rev() {
        if i < last {
            raw.extend(&leg_left[i]);
        }
        raw.extend(&backward[i]);
    }
    Ok(CirclePlacement { transits: rank(&raw), region: 0 })
}

fn rank(raw: &[Raw]) -> Vec<Transit> {
    let mut per_edge: BTreeMap<usize, Vec<f64>> = BTreeMap::new();
    for r in raw {
        per_edge.entry(r.dart / 2).or_default().push(r.at);
    }
    for v in per_edge.values_mut() {
        v.sort_by(f64::total_cmp);
    }
    raw.iter()
        .map(|r| {
            let list = &per_edge[&(r.dart / 2)];
            Transit { dart: r.dart, index: list.iter().position(|&x| x == r.at).expect("listed") }
        })
        .collect()
}

/// Longest dual leg considered between consecutive sites.
pub const MAX_LEG: usize = 6;

/// A circle bounding a thin neighborhood of a simple path through `sites`.
///
/// Site orders and turn choices are tried until the circle is simple.
pub fn neighborhood_circle(diagram: &LinkDiagram, sites: &[Site]) -> Result<CircledDiagram> {
    let map = diagram.map();
    let blocked: Vec<usize> = sites
        .iter()
        .filter_map(|s| match *s {
            Site::Basepoint { edge } => Some(edge),
            _ => None,
        })
        .collect();
    let mut orders = Vec::new();
    permutations(sites.len().min(6), &mut Vec::new(), &mut orders);
    let tail: Vec<usize> = (sites.len().min(6)..sites.len()).collect();
    for mut order in orders {
        order.extend(&tail);
        let stops: Vec<Site> = order.iter().map(|&i| sites[i]).collect();
        let mut legs = Vec::new();
        for w in stops.windows(2) {
            match dual_path(map, &site_faces(map, w[0]), &site_faces(map, w[1]), &blocked, MAX_LEG) {
                Some(leg) => legs.push(leg),
                None => break,
            }
        }
        if legs.len() + 1 != stops.len() {
            continue;
        }
        let n = stops.len();
        for mask in 0..(1u32 << n.min(8)) {
            let wraps: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 0).collect();
            let Ok(placement) = path_circle(diagram, &stops, &legs, &wraps) else { continue };
            if let Ok(circled) = CircledDiagram::new(diagram, &placement) {
                return Ok(circled);
            }
        }
    }
    Err(Error::InvalidPath(format!("no simple neighborhood circle through {sites:?}")))
}

pub(crate) fn permutations(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for i in 0..n {
        if !prefix.contains(&i) {
            prefix.push(i);
            permutations(n, prefix, out);
            prefix.pop();
        }
    }
}

/// Circles tried when minimizing over circle placements: the empty circle,
/// a small circle around each crossing, the neighborhood circle of every
/// shortest dual path (up to [`MAX_LEG`]) between corners of two crossings,
/// and for links a circle through one base point on each component.
pub fn circle_family(diagram: &LinkDiagram) -> Vec<CircledDiagram> {
    let map = diagram.map();
    let n = diagram.crossing_count();
    let mut out = Vec::new();
    let mut seen: HashSet<Vec<Transit>> = HashSet::new();
    let mut push = |c: CircledDiagram, out: &mut Vec<CircledDiagram>| {
        let mut key = c.placement().transits.clone();
        key.sort_unstable();
        if seen.insert(key) {
            out.push(c);
        }
    };
    push(CircledDiagram::new(diagram, &CirclePlacement::empty(0)).expect("empty circle"), &mut out);
    for x in 0..n {
        let p = path_circle(diagram, &[Site::Crossing { crossing: x }], &[], &[]).expect("small circle");
        push(CircledDiagram::new(diagram, &p).expect("small circle is simple"), &mut out);
    }
    for x in 0..n {
        for y in x + 1..n {
            let stops = [Site::Crossing { crossing: x }, Site::Crossing { crossing: y }];
            let mut legs = HashSet::new();
            for fx in site_faces(map, stops[0]) {
                for fy in site_faces(map, stops[1]) {
                    if let Some(leg) = dual_path(map, &[fx], &[fy], &[], MAX_LEG) {
                        legs.insert(leg);
                    }
                }
            }
            let mut legs: Vec<Leg> = legs.into_iter().collect();
            legs.sort_by(|a, b| (a.darts.len(), a.face, &a.darts).cmp(&(b.darts.len(), b.face, &b.darts)));
            for leg in legs {
                for wraps in [[true, true], [false, false]] {
                    let Ok(p) = path_circle(diagram, &stops, std::slice::from_ref(&leg), &wraps) else { continue };
                    if let Ok(c) = CircledDiagram::new(diagram, &p) {
                        push(c, &mut out);
                        break;
                    }
                }
            }
        }
    }
    if diagram.num_components() > 1 {
        if let Ok(c) = neighborhood_circle(diagram, &component_basepoints(diagram)) {
            push(c, &mut out);
        }
    }
    out
}

/// A base point on the lowest-numbered edge of each component.
pub fn component_basepoints(diagram: &LinkDiagram) -> Vec<Site> {
    (0..diagram.num_components())
        .filter_map(|k| (0..diagram.map().num_edges()).find(|&e| diagram.edge_component(e) == k))
        .map(|edge| Site::Basepoint { edge })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn small_circle(d: &LinkDiagram, x: usize) -> CircledDiagram {
        let p = path_circle(d, &[Site::Crossing { crossing: x }], &[], &[]).unwrap();
        CircledDiagram::new(d, &p).unwrap()
    }

    #[test]
    fn small_circle_isolates_one_crossing() {
        let d = fixtures::link("knot_3_1");
        let c = small_circle(&d, 1);
        // four corner regions inside, the diagram's five regions outside
        assert_eq!(c.num_regions(), d.map().num_regions() + 4);
        let north = c.side(true);
        assert_eq!(north.crossings, vec![1]);
        assert_eq!(north.regions.len(), 4);
        assert!(north.regions.iter().all(|&r| c.incidence_matrix().get(1, r)));
        let south = c.side(false);
        assert_eq!(south.crossings, vec![0, 2]);
        assert!(south.crossings.iter().all(|&x| north.regions.iter().all(|&r| !c.incidence_matrix().get(x, r))));
    }

    #[test]
    fn empty_circle_adds_a_blank_region() {
        let d = fixtures::link("link_hopf");
        let c = CircledDiagram::new(&d, &CirclePlacement::empty(0)).unwrap();
        assert_eq!(c.num_regions(), 5);
        assert!(c.incidence_matrix().column(4).is_zero());
        assert!(CircledDiagram::new(&d, &CirclePlacement::empty(9)).is_err());
    }

    #[test]
    fn rejects_broken_circles() {
        let d = fixtures::link("knot_3_1");
        let good = path_circle(&d, &[Site::Crossing { crossing: 0 }], &[], &[]).unwrap();
        let mut reversed = good.clone();
        reversed.transits[0].dart ^= 1;
        assert!(CircledDiagram::new(&d, &reversed).is_err());
        let mut dup = good.clone();
        dup.transits[1] = dup.transits[0];
        assert!(CircledDiagram::new(&d, &dup).is_err());
    }

    #[test]
    fn neighborhood_of_two_crossings() {
        let d = fixtures::link("link_4_2_1");
        let c = neighborhood_circle(&d, &[Site::Crossing { crossing: 0 }, Site::Crossing { crossing: 1 }]).unwrap();
        assert_eq!(c.side(true).crossings, vec![0, 1]);
    }

    #[test]
    fn basepoint_circles() {
        let d = fixtures::link("link_hopf");
        let c = neighborhood_circle(&d, &[Site::Basepoint { edge: 0 }]).unwrap();
        assert!(c.side(true).crossings.is_empty());
        let comps: Vec<usize> = (0..d.map().num_edges()).map(|e| d.edge_component(e)).collect();
        let other = comps.iter().position(|&k| k != comps[0]).unwrap();
        let c = neighborhood_circle(&d, &[Site::Basepoint { edge: 0 }, Site::Basepoint { edge: other }]).unwrap();
        assert_eq!(c.placement().transits.len() % 2, 0);
    }

    #[test]
    fn family_members_are_simple() {
        for name in ["knot_3_1", "link_4_2_1", "link_borromean"] {
            let d = fixtures::link(name);
            let fam = circle_family(&d);
            assert!(fam.len() > 1 + d.crossing_count(), "{name}");
        }
    }
}
