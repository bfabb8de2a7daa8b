//! Unlinking numbers, circled region crossing changes and the supporting
//! triviality certifier.
//!
//! Triviality is certified by simplification to a crossing-free diagram.
//! Nontriviality is certified by a nonzero linking number or by a count of
//! Fox colorings that differs from the trivial link's. Answers are exact
//! when every smaller candidate was certified nontrivial, and upper bounds
//! otherwise; results say which.

pub mod circle;
pub mod simplify;
pub mod spur;

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{LinkDiagram, PdCode};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};

pub use circle::{circle_family, component_basepoints, neighborhood_circle, path_circle, CircledDiagram, CirclePlacement, Leg, Site, Transit};
pub use simplify::{replay, simplify, Move, TrivialityCertificate, Verdict};
pub use spur::{gather, spur_all, spur_move, Gathering, SpurPath};

/// Crossing counts above this are not tabulated.
pub const MAX_TABLE_CROSSINGS: usize = 16;

const COLORING_PRIMES: [u64; 5] = [3, 5, 7, 11, 13];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    LinkingNumber { components: [usize; 2], value: i32 },
    /// Colorings of a trivial link with `components` components span a
    /// space of dimension `components` over the prime field.
    Colorings { prime: u64, dimension: usize, components: usize },
}

/// A reason the diagram cannot represent a trivial link, if one is found.
pub fn obstruction(pd: &PdCode) -> Option<Obstruction> {
    let lk = pd.linking_matrix();
    for (i, row) in lk.iter().enumerate() {
        for (j, &v) in row.iter().enumerate().skip(i + 1) {
            if v != 0 {
                return Some(Obstruction::LinkingNumber { components: [i, j], value: v });
            }
        }
    }
    let components = pd.num_components();
    COLORING_PRIMES.iter().find_map(|&p| {
        let dimension = coloring_dimension(pd, p);
        (dimension != components).then_some(Obstruction::Colorings { prime: p, dimension, components })
    })
}

/// Dimension of the space of Fox p-colorings.
pub fn coloring_dimension(pd: &PdCode, p: u64) -> usize {
    let labels = pd.labels();
    let index = |l: u32| labels.binary_search(&l).expect("label");
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for x in &pd.crossings {
        let (a, b) = (find(&mut parent, index(x[1])), find(&mut parent, index(x[3])));
        parent[a] = b;
    }
    let mut arc_of = vec![usize::MAX; labels.len()];
    let mut arcs = 0;
    for l in 0..labels.len() {
        let r = find(&mut parent, l);
        if arc_of[r] == usize::MAX {
            arc_of[r] = arcs;
            arcs += 1;
        }
        arc_of[l] = arc_of[r];
    }
    let rows: Vec<Vec<u64>> = pd
        .crossings
        .iter()
        .map(|x| {
            let mut row = vec![0u64; arcs];
            row[arc_of[index(x[1])]] = (row[arc_of[index(x[1])]] + 2) % p;
            for l in [x[0], x[2]] {
                let a = arc_of[index(l)];
                row[a] = (row[a] + p - 1) % p;
            }
            row
        })
        .collect();
    arcs - rank_mod(rows, arcs, p) + pd.loops
}

fn rank_mod(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let pow = |mut b: u64, mut e: u64| {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = r * b % p;
            }
            b = b * b % p;
            e >>= 1;
        }
        r
    };
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][c] != 0) else { continue };
        rows.swap(rank, pivot);
        let inv = pow(rows[rank][c], p - 2);
        for v in rows[rank].iter_mut() {
            *v = *v * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][c] != 0 {
                let f = rows[r][c];
                for k in 0..cols {
                    rows[r][k] = (rows[r][k] + p * p - f * rows[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProperReport {
    pub linking_matrix: Vec<Vec<i32>>,
    /// Per component: total linking with the others is even.
    pub components: Vec<bool>,
    pub proper: bool,
}

/// A link is proper when every component links the rest an even number of
/// times in total.
pub fn proper_link_check(pd: &PdCode) -> ProperReport {
    let linking_matrix = pd.linking_matrix();
    let components: Vec<bool> = linking_matrix.iter().map(|row| row.iter().sum::<i32>() % 2 == 0).collect();
    ProperReport { proper: components.iter().all(|&c| c), components, linking_matrix }
}

/// The diagram cut by a circle into its two sides.
pub fn split_by_circle(diagram: &LinkDiagram, circle: &CirclePlacement) -> Result<CircledDiagram> {
    CircledDiagram::new(diagram, circle)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Trivial,
    Obstructed,
    Unknown,
}

/// Status of the diagram after every subset of crossing changes, indexed by
/// bit mask over the crossings.
#[derive(Clone, Debug)]
pub struct ChangeTable {
    pd: PdCode,
    status: Vec<Status>,
}

impl ChangeTable {
    pub fn build(pd: &PdCode) -> Result<Self> {
        let n = pd.crossings.len();
        if n > MAX_TABLE_CROSSINGS {
            return Err(Error::InvalidDiagram(format!(
                "{n} crossings exceed the search limit of {MAX_TABLE_CROSSINGS}"
            )));
        }
        let status = (0..1u64 << n)
            .into_par_iter()
            .map(|mask| {
                let changed = pd.with_changes(&bits(mask));
                if obstruction(&changed).is_some() {
                    Status::Obstructed
                } else if simplify(&changed).is_trivial() {
                    Status::Trivial
                } else {
                    Status::Unknown
                }
            })
            .collect();
        Ok(ChangeTable { pd: pd.clone(), status })
    }

    pub fn crossings(&self) -> usize {
        self.pd.crossings.len()
    }

    pub fn status(&self, mask: u64) -> Status {
        self.status[mask as usize]
    }

    /// The certificate for a trivial entry, recomputed on demand.
    pub fn certificate(&self, mask: u64) -> TrivialityCertificate {
        simplify(&self.pd.with_changes(&bits(mask)))
    }
}

pub fn bits(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

fn mask_of(v: &BitVec) -> u64 {
    v.ones().fold(0, |m, i| m | 1 << i)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnlinkingResult {
    /// Fewest moves found, or None within the budget.
    pub number: Option<usize>,
    /// True when every smaller candidate was certified nontrivial, so the
    /// number is exact rather than an upper bound.
    pub exact: bool,
    /// Crossings changed by the witness.
    pub crossings: Vec<usize>,
    /// Regions selected, for region moves.
    pub regions: Vec<usize>,
    pub certificate: Option<TrivialityCertificate>,
}

/// Fewest crossing changes that give a certified trivial link.
pub fn classical_unlink_number(table: &ChangeTable, budget: usize) -> UnlinkingResult {
    let n = table.crossings();
    let mut exact = true;
    for k in 0..=budget.min(n) {
        let mut masks: Vec<u64> = (0..1u64 << n).filter(|m| m.count_ones() as usize == k).collect();
        masks.sort_by_key(|&m| bits(m));
        if let Some(&m) = masks.iter().find(|&&m| table.status(m) == Status::Trivial) {
            return UnlinkingResult {
                number: Some(k),
                exact,
                crossings: bits(m),
                regions: Vec::new(),
                certificate: Some(table.certificate(m)),
            };
        }
        exact &= masks.iter().all(|&m| table.status(m) == Status::Obstructed);
    }
    UnlinkingResult { number: None, exact: false, crossings: Vec::new(), regions: Vec::new(), certificate: None }
}

/// Fewest regions of D ∪ C whose region crossing changes give a certified
/// trivial link.
pub fn circled_unlink_number(table: &ChangeTable, circled: &CircledDiagram, budget: usize) -> UnlinkingResult {
    region_search(table, circled.incidence_matrix(), budget)
}

/// Breadth-first search over reachable crossing-change sets.
fn region_search(table: &ChangeTable, matrix: &Gf2Matrix, budget: usize) -> UnlinkingResult {
    let n = table.crossings();
    let columns: Vec<u64> = (0..matrix.cols()).map(|c| mask_of(&matrix.column(c))).collect();
    let mut dist = vec![usize::MAX; 1 << n];
    let mut via: Vec<(u64, usize)> = vec![(0, usize::MAX); 1 << n];
    dist[0] = 0;
    let mut queue = VecDeque::from([0u64]);
    let mut best: Option<u64> = None;
    let mut exact = true;
    let mut level = 0;
    let mut level_clean = true;
    while let Some(m) = queue.pop_front() {
        let d = dist[m as usize];
        if d != level {
            if best.is_some() {
                break;
            }
            exact &= level_clean;
            level = d;
            level_clean = true;
        }
        match table.status(m) {
            Status::Trivial => {
                if best.map_or(true, |b| bits(m) < bits(b)) {
                    best = Some(m);
                }
                continue;
            }
            Status::Unknown => level_clean = false,
            Status::Obstructed => {}
        }
        if d == budget {
            continue;
        }
        for (c, &col) in columns.iter().enumerate() {
            let next = m ^ col;
            if dist[next as usize] == usize::MAX {
                dist[next as usize] = d + 1;
                via[next as usize] = (m, c);
                queue.push_back(next);
            }
        }
    }
    let Some(m) = best else {
        return UnlinkingResult { number: None, exact: false, crossings: Vec::new(), regions: Vec::new(), certificate: None };
    };
    let mut regions = Vec::new();
    let mut cur = m;
    while cur != 0 {
        let (prev, c) = via[cur as usize];
        regions.push(c);
        cur = prev;
    }
    regions.sort_unstable();
    UnlinkingResult {
        number: Some(regions.len()),
        exact,
        crossings: bits(m),
        regions,
        certificate: Some(table.certificate(m)),
    }
}

/// Region unlinking number of the diagram itself (no circle).
pub fn region_unlink_number(table: &ChangeTable, diagram: &LinkDiagram, budget: usize) -> UnlinkingResult {
    let sites: Vec<usize> = (0..diagram.crossing_count()).collect();
    region_search(table, &crate::diagram::incidence_matrix(diagram.map(), &sites), budget)
}

#[derive(Clone, Debug, Serialize)]
pub struct CircleSearch {
    pub best: UnlinkingResult,
    pub circle: CirclePlacement,
    pub circles_tried: usize,
}

/// Minimum of the circled number over the given circles, searched in
/// parallel. Ties go to the earliest circle.
pub fn over_circles(table: &ChangeTable, circles: &[CircledDiagram], budget: usize) -> Option<CircleSearch> {
    let results: Vec<UnlinkingResult> =
        circles.par_iter().map(|c| circled_unlink_number(table, c, budget)).collect();
    let (i, best) = results
        .into_iter()
        .enumerate()
        .filter(|(_, r)| r.number.is_some())
        .min_by_key(|(i, r)| (r.number, *i))?;
    Some(CircleSearch { best, circle: circles[i].placement().clone(), circles_tried: circles.len() })
}
