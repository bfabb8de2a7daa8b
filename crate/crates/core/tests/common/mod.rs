//! Oracles written straight from PD codes, sharing nothing with the engine
//! beyond the `PdCode` struct, plus a random knot projection generator.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use regsel::diagram::PdCode;

/// The other end of every slot.
fn partners(pd: &PdCode) -> HashMap<(usize, usize), (usize, usize)> {
    let mut seen: HashMap<u32, (usize, usize)> = HashMap::new();
    let mut out = HashMap::new();
    for (x, slots) in pd.crossings.iter().enumerate() {
        for (s, &l) in slots.iter().enumerate() {
            if let Some(other) = seen.remove(&l) {
                out.insert(other, (x, s));
                out.insert((x, s), other);
            } else {
                seen.insert(l, (x, s));
            }
        }
    }
    assert!(seen.is_empty(), "every label appears twice");
    out
}

/// Faces as cycles of corners; corner `(x, k)` sits between slots `k` and
/// `k + 1`. Leaving a corner along slot `k + 1` arrives at a slot `j` of the
/// next crossing, whose corner `j` is the same face.
pub fn faces(pd: &PdCode) -> Vec<Vec<(usize, usize)>> {
    let other = partners(pd);
    let mut done = HashSet::new();
    let mut faces = Vec::new();
    for x in 0..pd.crossings.len() {
        for k in 0..4 {
            if done.contains(&(x, k)) {
                continue;
            }
            let mut face = Vec::new();
            let mut at = (x, k);
            while done.insert(at) {
                face.push(at);
                at = other[&(at.0, (at.1 + 1) % 4)];
            }
            faces.push(face);
        }
    }
    faces
}

/// Crossings toggled by each face, as bit masks.
pub fn face_columns(pd: &PdCode) -> Vec<u64> {
    faces(pd).iter().map(|f| f.iter().fold(0u64, |m, &(x, _)| m ^ (1 << x))).collect()
}

/// Every crossing set reachable by some set of faces.
pub fn reachable(columns: &[u64]) -> HashSet<u64> {
    assert!(columns.len() <= 20);
    let mut out = HashSet::new();
    let mut acc = 0u64;
    out.insert(0);
    // Gray code walk: one column flips per step
    for i in 1u64..(1 << columns.len()) {
        acc ^= columns[i.trailing_zeros() as usize];
        out.insert(acc);
    }
    out
}

fn find(parent: &mut [usize], a: usize) -> usize {
    let mut a = a;
    while parent[a] != a {
        parent[a] = parent[parent[a]];
        a = parent[a];
    }
    a
}

/// Component of each crossing's two strands (under, over), numbered from 0.
pub fn strand_components(pd: &PdCode) -> (usize, Vec<(usize, usize)>) {
    let labels: Vec<u32> = {
        let mut v: Vec<u32> = pd.crossings.iter().flatten().copied().collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let idx = |l: u32| labels.binary_search(&l).unwrap();
    let mut parent: Vec<usize> = (0..labels.len()).collect();
    for x in &pd.crossings {
        for (a, b) in [(x[0], x[2]), (x[1], x[3])] {
            let (ra, rb) = (find(&mut parent, idx(a)), find(&mut parent, idx(b)));
            parent[ra] = rb;
        }
    }
    let mut names = HashMap::new();
    let mut comp = |l: u32, parent: &mut Vec<usize>| {
        let r = find(parent, idx(l));
        let n = names.len();
        *names.entry(r).or_insert(n)
    };
    let per: Vec<(usize, usize)> =
        pd.crossings.iter().map(|x| (comp(x[0], &mut parent), comp(x[1], &mut parent))).collect();
    (names.len() + pd.loops, per)
}

/// Whether each slot is where its strand enters the crossing. The under
/// strand enters at slot 0; every edge leaves one end and enters the other.
/// A component that only ever passes over gets an arbitrary direction.
fn entering(pd: &PdCode) -> Vec<[Option<bool>; 4]> {
    let other = partners(pd);
    let mut dir: Vec<[Option<bool>; 4]> = pd.crossings.iter().map(|_| [Some(true), None, Some(false), None]).collect();
    loop {
        let mut changed = false;
        for x in 0..pd.crossings.len() {
            for s in 0..4 {
                let Some(inn) = dir[x][s] else { continue };
                let (y, t) = other[&(x, s)];
                for (cx, cs, v) in [(y, t, !inn), (x, (s + 2) % 4, !inn)] {
                    match dir[cx][cs] {
                        None => {
                            dir[cx][cs] = Some(v);
                            changed = true;
                        }
                        Some(w) => assert_eq!(w, v, "inconsistent orientation"),
                    }
                }
            }
        }
        if !changed {
            let Some(x) = dir.iter().position(|d| d[1].is_none()) else { return dir };
            dir[x][1] = Some(true);
        }
    }
}

/// Pairwise linking numbers, from crossing signs read off orientations.
pub fn linking_numbers(pd: &PdCode) -> Vec<Vec<i32>> {
    let (n, per) = strand_components(pd);
    let dir = entering(pd);
    let mut twice = vec![vec![0i32; n]; n];
    for (x, &(a, b)) in per.iter().enumerate() {
        if a == b {
            continue;
        }
        let sign = if dir[x][3] == Some(true) { 1 } else { -1 };
        twice[a][b] += sign;
        twice[b][a] += sign;
    }
    twice.iter().map(|row| row.iter().map(|&t| t / 2).collect()).collect()
}

/// Linking numbers mod 2.
pub fn linking_parity(pd: &PdCode) -> Vec<Vec<u8>> {
    linking_numbers(pd).iter().map(|row| row.iter().map(|&l| l.rem_euclid(2) as u8).collect()).collect()
}

/// Closure of a braid word. Generator `(i, over)` crosses strands `i` and
/// `i + 1`; `over` says the strand from the left passes over.
pub fn braid_closure(strands: usize, word: &[(usize, bool)]) -> PdCode {
    let mut current: Vec<u32> = (1..=strands as u32).collect();
    let mut next = strands as u32 + 1;
    let mut crossings = Vec::new();
    for &(i, over) in word {
        let (p, q) = (current[i], current[i + 1]);
        let (r, s) = (next, next + 1);
        next += 2;
        // corners counterclockwise: p bottom left, q bottom right,
        // s top right, r top left; p runs to s and q to r
        crossings.push(if over { [q, s, r, p] } else { [p, q, s, r] });
        current[i] = r;
        current[i + 1] = s;
    }
    let close: HashMap<u32, u32> = current.iter().enumerate().map(|(k, &l)| (l, k as u32 + 1)).collect();
    for x in &mut crossings {
        for l in x.iter_mut() {
            if let Some(&to) = close.get(l) {
                *l = to;
            }
        }
    }
    PdCode::new(crossings)
}

fn is_single_cycle(strands: usize, word: &[(usize, bool)]) -> bool {
    let mut perm: Vec<usize> = (0..strands).collect();
    for &(i, _) in word {
        perm.swap(i, i + 1);
    }
    let (mut at, mut len) = (perm[0], 1);
    while at != 0 {
        at = perm[at];
        len += 1;
    }
    len == strands
}

/// Distinct one-component braid closures using every generator, with at
/// most `max_crossings` crossings.
pub fn random_knots(count: usize, max_crossings: usize, seed: u64) -> Vec<PdCode> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    while out.len() < count {
        let strands = rng.gen_range(2..=4);
        let len = rng.gen_range(strands..=max_crossings);
        let word: Vec<(usize, bool)> = (0..len).map(|_| (rng.gen_range(0..strands - 1), rng.gen_bool(0.5))).collect();
        let used: HashSet<usize> = word.iter().map(|g| g.0).collect();
        if used.len() != strands - 1 || !is_single_cycle(strands, &word) {
            continue;
        }
        let key: Vec<usize> = word.iter().map(|g| g.0).collect();
        if seen.insert((strands, key)) {
            out.push(braid_closure(strands, &word));
        }
    }
    out
}
