//! Reidemeister simplification of PD codes with a replayable certificate.
//!
//! Moves are found on faces of the planar map: monogons (R1), bigons whose
//! one strand passes over at both ends (R2), and triangles with a strand
//! over at both of its crossings (R3). A diagram that reaches zero
//! crossings is certified trivial; anything else is inconclusive.

use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use crate::diagram::{PdCode, PlanarDiagram};
use crate::error::{Error, Result};

pub const R3_DEPTH: usize = 6;
/// Cap on positions explored in one R3 search.
const R3_NODE_LIMIT: usize = 4000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum Move {
    /// Untwist the monogon `edge` at `crossing`.
    R1 { crossing: usize, edge: u32 },
    /// Pull apart the bigon bounded by `edges`.
    R2 { crossings: [usize; 2], edges: [u32; 2] },
    /// Slide a strand across the triangle bounded by `edges`.
    R3 { crossings: [usize; 3], edges: [u32; 3] },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Trivial,
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TrivialityCertificate {
    pub verdict: Verdict,
    /// Moves in order; crossing indices refer to the diagram at that step.
    pub moves: Vec<Move>,
    /// Crossings left when the search stopped.
    pub remaining_crossings: usize,
    /// Components of the final diagram.
    pub components: usize,
}

impl TrivialityCertificate {
    pub fn is_trivial(&self) -> bool {
        self.verdict == Verdict::Trivial
    }
}

/// Faces of a PD code's map, as edge labels and crossings per dart.
struct Faces {
    map: PlanarDiagram,
    labels: Vec<u32>,
}

impl Faces {
    fn new(pd: &PdCode) -> Result<Faces> {
        Ok(Faces { map: pd.to_map()?, labels: pd.labels() })
    }

    fn label(&self, d: usize) -> u32 {
        self.labels[d / 2]
    }

    fn of_length(&self, n: usize) -> impl Iterator<Item = &Vec<usize>> {
        self.map.faces().iter().filter(move |f| f.len() == n)
    }

    fn slot(&self, d: usize) -> (usize, usize) {
        (self.map.vertex_of(d), self.map.position(d))
    }
}

fn find_r1(faces: &Faces) -> Option<Move> {
    faces.of_length(1).next().map(|f| Move::R1 { crossing: faces.map.vertex_of(f[0]), edge: faces.label(f[0]) })
}

fn find_r2(faces: &Faces) -> Option<Move> {
    for f in faces.of_length(2) {
        let (x, px) = faces.slot(f[0]);
        let (y, py) = faces.slot(f[0] ^ 1);
        if x == y || faces.map.vertex_of(f[1]) != y {
            continue;
        }
        // the strand along f[0] must be over at both ends or under at both
        if px % 2 == py % 2 {
            return Some(Move::R2 { crossings: [x, y], edges: [faces.label(f[0]), faces.label(f[1])] });
        }
    }
    None
}

fn r3_candidates(faces: &Faces) -> Vec<Move> {
    let mut out = Vec::new();
    for f in faces.of_length(3) {
        let verts: Vec<usize> = f.iter().map(|&d| faces.map.vertex_of(d)).collect();
        if verts[0] == verts[1] || verts[1] == verts[2] || verts[0] == verts[2] {
            continue;
        }
        let edges: Vec<u32> = f.iter().map(|&d| faces.label(d)).collect();
        if edges[0] == edges[1] || edges[1] == edges[2] || edges[0] == edges[2] {
            continue;
        }
        let top = f.iter().any(|&d| faces.map.position(d) % 2 == 1 && faces.map.position(d ^ 1) % 2 == 1);
        if top {
            out.push(Move::R3 { crossings: [verts[0], verts[1], verts[2]], edges: [edges[0], edges[1], edges[2]] });
        }
    }
    out
}

/// Removes crossings, then joins dangling edge ends pairwise; joining an end
/// to itself closes off a crossing-free circle.
fn splice(pd: &PdCode, remove: &[usize], joins: &[(u32, u32)]) -> PdCode {
    let mut crossings: Vec<[u32; 4]> = pd
        .crossings
        .iter()
        .enumerate()
        .filter(|(i, _)| !remove.contains(i))
        .map(|(_, x)| *x)
        .collect();
    let mut loops = pd.loops;
    let mut pending: Vec<(u32, u32)> = joins.to_vec();
    while !pending.is_empty() {
        let (keep, drop) = pending.remove(0);
        if keep == drop {
            loops += 1;
            continue;
        }
        for x in crossings.iter_mut() {
            for l in x.iter_mut() {
                if *l == drop {
                    *l = keep;
                }
            }
        }
        for (a, b) in pending.iter_mut() {
            if *a == drop {
                *a = keep;
            }
            if *b == drop {
                *b = keep;
            }
        }
    }
    PdCode { crossings, loops }
}

fn slot_of(x: &[u32; 4], label: u32) -> Option<usize> {
    x.iter().position(|&l| l == label)
}

fn invalid(m: &Move, why: &str) -> Error {
    Error::InvalidDiagram(format!("{m:?} does not apply: {why}"))
}

/// Applies one move, checking that it is legal on `pd`.
pub fn apply_move(pd: &PdCode, m: &Move) -> Result<PdCode> {
    let faces = Faces::new(pd)?;
    let n = pd.crossings.len();
    match *m {
        Move::R1 { crossing, edge } => {
            if crossing >= n {
                return Err(invalid(m, "no such crossing"));
            }
            let ok = faces.of_length(1).any(|f| faces.map.vertex_of(f[0]) == crossing && faces.label(f[0]) == edge);
            if !ok {
                return Err(invalid(m, "no monogon"));
            }
            let x = pd.crossings[crossing];
            let i = (0..4).find(|&i| x[i] == edge && x[(i + 1) % 4] == edge).ok_or_else(|| invalid(m, "labels"))?;
            let (p, q) = (x[(i + 2) % 4], x[(i + 3) % 4]);
            Ok(splice(pd, &[crossing], &[(p, q)]))
        }
        Move::R2 { crossings: [x, y], edges: [e, f] } => {
            if x >= n || y >= n || x == y {
                return Err(invalid(m, "bad crossings"));
            }
            let ok = faces.of_length(2).any(|face| {
                let ls = [faces.label(face[0]), faces.label(face[1])];
                let vs = [faces.map.vertex_of(face[0]), faces.map.vertex_of(face[1])];
                (ls == [e, f] || ls == [f, e]) && (vs == [x, y] || vs == [y, x])
            });
            if !ok {
                return Err(invalid(m, "no bigon"));
            }
            let (cx, cy) = (pd.crossings[x], pd.crossings[y]);
            let (ix, iy) = (slot_of(&cx, e).unwrap(), slot_of(&cy, e).unwrap());
            if ix % 2 != iy % 2 {
                return Err(invalid(m, "strands form a clasp"));
            }
            let (kx, ky) = (slot_of(&cx, f).unwrap(), slot_of(&cy, f).unwrap());
            let joins = [(cx[(ix + 2) % 4], cy[(iy + 2) % 4]), (cx[(kx + 2) % 4], cy[(ky + 2) % 4])];
            Ok(splice(pd, &[x, y], &joins))
        }
        Move::R3 { crossings, edges } => {
            if crossings.iter().any(|&c| c >= n) {
                return Err(invalid(m, "no such crossing"));
            }
            if !r3_candidates(&faces).contains(m) {
                return Err(invalid(m, "no triangle with a top strand"));
            }
            let mut out = pd.clone();
            for &v in &crossings {
                let old = pd.crossings[v];
                let mut new = old;
                for p in 0..4 {
                    let side = old[p];
                    if !edges.contains(&side) {
                        continue;
                    }
                    // the other triangle crossing on this side
                    let w = crossings
                        .iter()
                        .copied()
                        .find(|&w| w != v && slot_of(&pd.crossings[w], side).is_some())
                        .ok_or_else(|| invalid(m, "side leaves the triangle"))?;
                    let pw = slot_of(&pd.crossings[w], side).unwrap();
                    new[p] = pd.crossings[w][(pw + 2) % 4];
                    new[(p + 2) % 4] = side;
                }
                out.crossings[v] = new;
            }
            Ok(out)
        }
    }
}

/// Replays a certificate and returns the final diagram.
pub fn replay(pd: &PdCode, moves: &[Move]) -> Result<PdCode> {
    moves.iter().try_fold(pd.clone(), |acc, m| apply_move(&acc, m))
}

fn reducing_move(pd: &PdCode) -> Result<Option<Move>> {
    let faces = Faces::new(pd)?;
    Ok(find_r1(&faces).or_else(|| find_r2(&faces)))
}

fn key(pd: &PdCode) -> Vec<[u32; 4]> {
    let mut k = pd.crossings.clone();
    k.sort_unstable();
    k
}

/// Breadth-first search over R3 slides for a position where R1 or R2 applies.
fn r3_search(pd: &PdCode, depth: usize) -> Result<Option<Vec<Move>>> {
    let mut seen = HashSet::from([key(pd)]);
    let mut queue = VecDeque::from([(pd.clone(), Vec::<Move>::new())]);
    while let Some((state, path)) = queue.pop_front() {
        if path.len() >= depth {
            continue;
        }
        for m in r3_candidates(&Faces::new(&state)?) {
            let next = apply_move(&state, &m)?;
            if !seen.insert(key(&next)) {
                continue;
            }
            let mut p = path.clone();
            p.push(m);
            if reducing_move(&next)?.is_some() {
                return Ok(Some(p));
            }
            if seen.len() > R3_NODE_LIMIT {
                return Ok(None);
            }
            queue.push_back((next, p));
        }
    }
    Ok(None)
}

pub fn simplify(pd: &PdCode) -> TrivialityCertificate {
    simplify_with(pd, R3_DEPTH, 10 * pd.crossings.len().max(1))
}

pub fn simplify_with(pd: &PdCode, r3_depth: usize, step_cap: usize) -> TrivialityCertificate {
    let mut state = pd.clone();
    let mut moves = Vec::new();
    let finish = |state: &PdCode, moves: Vec<Move>| TrivialityCertificate {
        verdict: if state.crossings.is_empty() { Verdict::Trivial } else { Verdict::Inconclusive },
        remaining_crossings: state.crossings.len(),
        components: state.num_components(),
        moves,
    };
    while !state.crossings.is_empty() && moves.len() < step_cap {
        match reducing_move(&state) {
            Ok(Some(m)) => {
                state = apply_move(&state, &m).expect("found move applies");
                moves.push(m);
            }
            Ok(None) => match r3_search(&state, r3_depth) {
                Ok(Some(path)) => {
                    for m in path {
                        state = apply_move(&state, &m).expect("found move applies");
                        moves.push(m);
                    }
                }
                _ => break,
            },
            Err(_) => break,
        }
    }
    finish(&state, moves)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn pd(text: &str) -> PdCode {
        PdCode::parse(text).unwrap()
    }

    fn certified(p: &PdCode) -> TrivialityCertificate {
        let cert = simplify(p);
        if cert.is_trivial() {
            assert!(replay(p, &cert.moves).unwrap().crossings.is_empty());
        }
        cert
    }

    #[test]
    fn curl_needs_one_r1() {
        let cert = certified(&pd("X(1,2,2,1)"));
        assert!(cert.is_trivial());
        assert_eq!(cert.moves.len(), 1);
        assert_eq!(cert.components, 1);
    }

    #[test]
    fn trefoil_is_inconclusive() {
        let cert = certified(fixtures::link("knot_3_1").pd());
        assert_eq!(cert.verdict, Verdict::Inconclusive);
        assert_eq!(cert.remaining_crossings, 3);
    }

    #[test]
    fn hopf_clasp_is_not_r2() {
        let hopf = fixtures::link("link_hopf").pd().clone();
        assert!(!certified(&hopf).is_trivial());
        let unlinked = hopf.with_changes(&[0]);
        let cert = certified(&unlinked);
        assert!(cert.is_trivial());
        assert_eq!(cert.components, 2);
    }

    #[test]
    fn unknotted_trefoil_diagram() {
        let t = fixtures::link("knot_3_1").pd().clone();
        for x in 0..3 {
            assert!(certified(&t.with_changes(&[x])).is_trivial(), "crossing {x}");
        }
    }

    #[test]
    fn r3_slide_keeps_the_link() {
        let p = fixtures::link("knot_3_1").pd().with_changes(&[0]);
        let moves = r3_candidates(&Faces::new(&p).unwrap());
        assert!(!moves.is_empty());
        for m in moves {
            let q = apply_move(&p, &m).unwrap();
            assert_eq!(q.crossings.len(), p.crossings.len());
            assert_eq!(q.linking_matrix(), p.linking_matrix());
            assert!(crate::diagram::LinkDiagram::new(q).is_ok());
        }
    }

    #[test]
    fn bad_replay_is_rejected() {
        let t = fixtures::link("knot_3_1").pd().clone();
        assert!(apply_move(&t, &Move::R1 { crossing: 0, edge: 1 }).is_err());
    }
}
