//! Dragging a crossing along a dual path.
//!
//! The crossing is pulled through one of its corners and across a sequence
//! of edges, both of its strands following it as a finger that passes over
//! every edge it meets. Each edge crossed adds four crossings; the link
//! type is unchanged. The moved crossing keeps its index.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use super::circle::{dual_path, path_circle, CircledDiagram, Leg, Site};
use crate::diagram::{LinkDiagram, PdCode};
use crate::error::{Error, Result};

/// Leave the crossing through corner `corner` (between slots `corner` and
/// `corner + 1`), then cross the edges labelled `edges` in order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpurPath {
    pub corner: usize,
    pub edges: Vec<u32>,
}

/// A diagram being spurred, remembering which original edge every new
/// label was cut from.
struct Spurring {
    pd: PdCode,
    origin: HashMap<u32, Option<u32>>,
    next_label: u32,
}

impl Spurring {
    fn new(pd: &PdCode) -> Self {
        let labels = pd.labels();
        Spurring {
            pd: pd.clone(),
            origin: labels.iter().map(|&l| (l, Some(l))).collect(),
            next_label: labels.last().map_or(1, |l| l + 1),
        }
    }

    fn fresh(&mut self, origin: Option<u32>) -> u32 {
        let l = self.next_label;
        self.next_label += 1;
        self.origin.insert(l, origin);
        l
    }

    fn spur(&mut self, c: usize, path: &SpurPath) -> Result<()> {
        if c >= self.pd.crossings.len() || path.corner >= 4 {
            return Err(Error::InvalidPath(format!("no corner {} at crossing {c}", path.corner)));
        }
        let arms = self.pd.crossings[c];
        let distinct: HashSet<u32> = arms.iter().copied().collect();
        if distinct.len() != 4 {
            return Err(Error::InvalidPath(format!("crossing {c} has a curl")));
        }
        let arm_origins: Vec<Option<u32>> = arms.iter().map(|l| self.origin[l]).collect();
        if path.edges.iter().any(|e| arm_origins.contains(&Some(*e))) {
            return Err(Error::InvalidPath(format!("path crosses an edge at crossing {c}")));
        }
        for &e in &path.edges {
            self.step(c, path.corner, e)?;
        }
        Ok(())
    }

    /// Moves crossing `c` across the edge cut from original edge `edge`
    /// that bounds the region at corner `k`.
    fn step(&mut self, c: usize, k: usize, edge: u32) -> Result<()> {
        let map = self.pd.to_map()?;
        let labels = self.pd.labels();
        let face = map.face_of(map.darts_at(c)[k] ^ 1);
        let h = labels
            .iter()
            .enumerate()
            .filter(|(_, l)| self.origin[*l] == Some(edge))
            .flat_map(|(e, _)| [2 * e, 2 * e + 1])
            .find(|&h| map.face_of(h) == face && map.vertex_of(h) != c && map.vertex_of(h ^ 1) != c)
            .ok_or_else(|| Error::InvalidPath(format!("edge {edge} does not bound the region at the crossing")))?;
        let g = labels[h / 2];
        let (tail, tail_slot) = (map.vertex_of(h), map.position(h));
        let (head, head_slot) = (map.vertex_of(h ^ 1), map.position(h ^ 1));
        let along = self
            .pd
            .components()
            .iter()
            .flat_map(|comp| comp.passes.iter())
            .any(|&(x, _, exit)| (x, exit) == (tail, tail_slot));

        let arms = self.pd.crossings[c];
        let origin = self.origin[&g];
        let segments: Vec<u32> =
            std::iter::once(g).chain((0..4).map(|_| self.fresh(origin))).collect();
        let inner: Vec<u32> = (0..4).map(|_| self.fresh(None)).collect();
        self.pd.crossings[head][head_slot] = segments[4];
        for j in 1..=4 {
            let i = (k + j) % 4;
            let (before, after) = (segments[j - 1], segments[j]);
            self.pd.crossings.push(if along {
                [before, arms[i], after, inner[i]]
            } else {
                [after, inner[i], before, arms[i]]
            });
        }
        self.pd.crossings[c] = [inner[0], inner[1], inner[2], inner[3]];
        Ok(())
    }
}

/// Drags crossing `c` along `path`.
pub fn spur_move(pd: &PdCode, c: usize, path: &SpurPath) -> Result<PdCode> {
    let mut s = Spurring::new(pd);
    s.spur(c, path)?;
    Ok(s.pd)
}

/// Several crossings dragged one after another; edge labels in every path
/// refer to the original diagram.
pub fn spur_all(pd: &PdCode, moves: &[(usize, SpurPath)]) -> Result<PdCode> {
    let mut s = Spurring::new(pd);
    for (c, path) in moves {
        s.spur(*c, path)?;
    }
    Ok(s.pd)
}

/// Crossings gathered into one region, with a circle there that encloses
/// only the moved crossings.
#[derive(Clone, Debug)]
pub struct Gathering {
    pub diagram: LinkDiagram,
    pub moves: Vec<(usize, SpurPath)>,
    pub circled: CircledDiagram,
    /// Region of D ∪ C whose crossing change toggles exactly the moved
    /// crossings.
    pub region: usize,
}

/// Drags every crossing in `crossings` into region `target` of the diagram
/// and draws a circle around them there.
pub fn gather(diagram: &LinkDiagram, crossings: &[usize], target: usize) -> Result<Gathering> {
    let map = diagram.map();
    let labels = diagram.pd().labels();
    let mut moves = Vec::new();
    for &c in crossings {
        let blocked: Vec<usize> = map.darts_at(c).iter().map(|d| d / 2).collect();
        let corners: Vec<usize> = map.darts_at(c).iter().map(|&d| map.face_of(d ^ 1)).collect();
        let leg = dual_path(map, &corners, &[target], &blocked, map.faces().len())
            .ok_or_else(|| Error::InvalidPath(format!("crossing {c} cannot reach region {target}")))?;
        let corner = corners.iter().position(|&f| f == leg.face).expect("leg starts at a corner");
        moves.push((c, SpurPath { corner, edges: leg.darts.iter().map(|d| labels[d / 2]).collect() }));
    }
    let spurred = LinkDiagram::new(spur_all(diagram.pd(), &moves)?)?;
    let m = spurred.map();
    let corner_face = |(c, path): &(usize, SpurPath)| m.face_of(m.darts_at(*c)[path.corner] ^ 1);
    let face = corner_face(&moves[0]);
    if moves.iter().any(|mv| corner_face(mv) != face) {
        return Err(Error::InvalidPath("moved crossings do not share a region".into()));
    }
    let sites: Vec<Site> = crossings.iter().map(|&c| Site::Crossing { crossing: c }).collect();
    let legs: Vec<Leg> = (1..sites.len()).map(|_| Leg { face, darts: Vec::new() }).collect();
    let mut orders = Vec::new();
    super::circle::permutations(sites.len().min(6), &mut Vec::new(), &mut orders);
    for order in orders {
        let order: Vec<Site> = order.iter().map(|&i| sites[i]).chain(sites.iter().skip(6).copied()).collect();
        for wrap in [true, false] {
            let wraps = vec![wrap; order.len()];
            let Ok(placement) = path_circle(&spurred, &order, &legs, &wraps) else { continue };
            let Ok(circled) = CircledDiagram::new(&spurred, &placement) else { continue };
            let expected: Vec<usize> = {
                let mut v = crossings.to_vec();
                v.sort_unstable();
                v
            };
            let region = (0..circled.num_regions())
                .find(|&r| circled.incidence_matrix().column(r).ones().collect::<Vec<_>>() == expected);
            if let Some(region) = region {
                return Ok(Gathering { diagram: spurred, moves, circled, region });
            }
        }
    }
    Err(Error::InvalidCircle("no circle isolates the moved crossings".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::unlink::simplify;

    fn one_step_path(d: &LinkDiagram, c: usize) -> SpurPath {
        let map = d.map();
        let labels = d.pd().labels();
        for corner in 0..4 {
            let face = map.face_of(map.darts_at(c)[corner] ^ 1);
            for &h in &map.faces()[face] {
                if map.vertex_of(h) != c && map.vertex_of(h ^ 1) != c {
                    return SpurPath { corner, edges: vec![labels[h / 2]] };
                }
            }
        }
        panic!("no edge away from crossing {c}");
    }

    #[test]
    fn one_transit_adds_four_crossings() {
        for name in ["knot_3_1", "knot_4_1", "link_4_2_1", "link_borromean"] {
            let d = fixtures::link(name);
            let path = one_step_path(&d, 0);
            let spurred = spur_move(d.pd(), 0, &path).unwrap();
            assert_eq!(spurred.crossings.len(), d.crossing_count() + 4, "{name}");
            let again = LinkDiagram::new(spurred.clone()).unwrap();
            assert_eq!(again.num_components(), d.num_components());
            assert_eq!(spurred.linking_matrix(), d.pd().linking_matrix(), "{name}");
        }
    }

    #[test]
    fn empty_path_changes_nothing() {
        let d = fixtures::link("knot_3_1");
        let same = spur_move(d.pd(), 1, &SpurPath { corner: 2, edges: vec![] }).unwrap();
        assert_eq!(&same, d.pd());
    }

    #[test]
    fn spur_commutes_with_the_crossing_change() {
        let d = fixtures::link("knot_3_1");
        let path = one_step_path(&d, 0);
        let spurred = spur_move(d.pd(), 0, &path).unwrap();
        assert!(simplify(&spurred.with_changes(&[0])).is_trivial());
        // changing the crossing rotates its slots, so recompute the path
        let changed = LinkDiagram::new(d.pd().with_changes(&[0])).unwrap();
        let path = one_step_path(&changed, 0);
        assert!(simplify(&spur_move(changed.pd(), 0, &path).unwrap()).is_trivial());
    }

    #[test]
    fn rejects_edges_at_the_crossing() {
        let d = fixtures::link("knot_3_1");
        let arm = d.pd().crossings[0][1];
        assert!(spur_move(d.pd(), 0, &SpurPath { corner: 0, edges: vec![arm] }).is_err());
    }
}
