//! Planar diagram codes and link diagrams.
//!
//! A crossing `X(a,b,c,d)` lists its four edge labels counterclockwise,
//! starting from the incoming under-strand. The under-strand runs `a -> c`;
//! the over-strand joins `b` and `d`. A crossing is positive when the
//! over-strand runs `d -> b`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::planar::{PlanarDiagram, SurfaceKind};
use crate::error::{Error, Result};

pub type Crossing = [u32; 4];

/// Raw PD data plus any crossing-free circles.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct PdCode {
    pub crossings: Vec<Crossing>,
    /// Closed strands that meet no crossing.
    pub loops: usize,
}

/// One strand of the link, as the sequence of (crossing, position) slots it
/// enters, in orientation order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub labels: Vec<u32>,
    /// (crossing, entry position, exit position) along the orientation.
    pub passes: Vec<(usize, usize, usize)>,
}

impl PdCode {
    pub fn new(crossings: Vec<Crossing>) -> Self {
        let loops = usize::from(crossings.is_empty());
        PdCode { crossings, loops }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut crossings = Vec::new();
        let mut explicit_loops = None;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let mut line = raw;
            if let Some(hash) = line.find('#') {
                let comment = line[hash + 1..].trim();
                if let Some(rest) = comment.strip_prefix("loops:") {
                    let n = rest.trim().parse::<usize>().map_err(|e| Error::Parse {
                        line: line_no,
                        message: format!("bad loop count: {e}"),
                    })?;
                    explicit_loops = Some(n);
                }
                line = &line[..hash];
            }
            let mut rest = line.trim();
            while !rest.is_empty() {
                let body = rest
                    .strip_prefix("X(")
                    .or_else(|| rest.strip_prefix("X["))
                    .ok_or_else(|| Error::Parse {
                        line: line_no,
                        message: format!("expected X(a,b,c,d), found `{rest}`"),
                    })?;
                let close = body.find([')', ']']).ok_or_else(|| Error::Parse {
                    line: line_no,
                    message: "unterminated crossing".into(),
                })?;
                let labels: Vec<u32> = body[..close]
                    .split(',')
                    .map(|s| {
                        s.trim().parse::<u32>().map_err(|e| Error::Parse {
                            line: line_no,
                            message: format!("bad label `{}`: {e}", s.trim()),
                        })
                    })
                    .collect::<Result<_>>()?;
                if labels.len() != 4 {
                    return Err(Error::Parse {
                        line: line_no,
                        message: format!("crossing has {} labels", labels.len()),
                    });
                }
                crossings.push([labels[0], labels[1], labels[2], labels[3]]);
                rest = body[close + 1..].trim_start_matches([',', ' ', '\t', ';']).trim();
            }
        }
        let mut pd = PdCode::new(crossings);
        if let Some(n) = explicit_loops {
            pd.loops = n;
        }
        pd.check_labels()?;
        Ok(pd)
    }

    pub fn emit(&self) -> String {
        let mut out = String::new();
        if self.loops != usize::from(self.crossings.is_empty()) {
            out.push_str(&format!("# loops: {}\n", self.loops));
        }
        for x in &self.crossings {
            out.push_str(&format!("X({},{},{},{})\n", x[0], x[1], x[2], x[3]));
        }
        out
    }

    fn check_labels(&self) -> Result<()> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &l in x {
                *count.entry(l).or_default() += 1;
            }
        }
        for (label, count) in count {
            if count != 2 {
                return Err(Error::EdgeLabel { label, count });
            }
        }
        Ok(())
    }

    /// label -> the two (crossing, position) slots carrying it
    pub fn slots(&self) -> HashMap<u32, [(usize, usize); 2]> {
        let mut map: HashMap<u32, Vec<(usize, usize)>> = HashMap::new();
        for (i, x) in self.crossings.iter().enumerate() {
            for (p, &l) in x.iter().enumerate() {
                map.entry(l).or_default().push((i, p));
            }
        }
        map.into_iter().map(|(l, v)| (l, [v[0], v[1]])).collect()
    }

    fn other_slot(slots: &HashMap<u32, [(usize, usize); 2]>, label: u32, here: (usize, usize)) -> (usize, usize) {
        let s = slots[&label];
        if s[0] == here {
            s[1]
        } else {
            s[0]
        }
    }

    /// Oriented strands. Orientation comes from under-crossings; a strand
    /// that is never under is oriented along increasing labels.
    pub fn components(&self) -> Vec<Component> {
        let slots = self.slots();
        let n = self.crossings.len();
        let mut used = vec![[false; 4]; n];
        let mut comps = Vec::new();
        for i in 0..n {
            for p in 0..4 {
                if used[i][p] {
                    continue;
                }
                // walk entering at (i, p)
                let mut passes = Vec::new();
                let mut labels = Vec::new();
                let (mut x, mut q) = (i, p);
                loop {
                    let out = (q + 2) % 4;
                    used[x][q] = true;
                    used[x][out] = true;
                    passes.push((x, q, out));
                    let label = self.crossings[x][out];
                    labels.push(label);
                    let next = Self::other_slot(&slots, label, (x, out));
                    (x, q) = next;
                    if (x, q) == (i, p) {
                        break;
                    }
                }
                let forward = match passes.iter().find(|(_, e, _)| e % 2 == 0) {
                    Some(&(_, entry, _)) => entry == 0,
                    None => {
                        let ups = labels
                            .windows(2)
                            .filter(|w| w[1] == w[0] + 1)
                            .count();
                        let downs = labels
                            .windows(2)
                            .filter(|w| w[0] == w[1] + 1)
                            .count();
                        ups >= downs
                    }
                };
                if !forward {
                    passes.reverse();
                    for pass in &mut passes {
                        *pass = (pass.0, pass.2, pass.1);
                    }
                    labels = passes.iter().map(|&(x, _, out)| self.crossings[x][out]).collect();
                }
                comps.push(Component { labels, passes });
            }
        }
        comps
    }

    /// component index of each (crossing, position) slot
    pub fn slot_components(&self) -> Vec<[usize; 4]> {
        let mut owner = vec![[usize::MAX; 4]; self.crossings.len()];
        for (ci, comp) in self.components().iter().enumerate() {
            for &(x, a, b) in &comp.passes {
                owner[x][a] = ci;
                owner[x][b] = ci;
            }
        }
        owner
    }

    /// +1 / -1 per crossing.
    pub fn signs(&self) -> Vec<i32> {
        let mut over_entry = vec![usize::MAX; self.crossings.len()];
        for comp in self.components() {
            for &(x, entry, _) in &comp.passes {
                if entry % 2 == 1 {
                    over_entry[x] = entry;
                }
            }
        }
        over_entry.iter().map(|&e| if e == 3 { 1 } else { -1 }).collect()
    }

    /// Pairwise linking numbers (half the signed count of mixed crossings).
    pub fn linking_matrix(&self) -> Vec<Vec<i32>> {
        let comps = self.components();
        let owner = self.slot_components();
        let signs = self.signs();
        let k = comps.len() + self.loops;
        let mut twice = vec![vec![0i32; k]; k];
        for (x, o) in owner.iter().enumerate() {
            let (a, b) = (o[0], o[1]);
            if a != b {
                twice[a][b] += signs[x];
                twice[b][a] += signs[x];
            }
        }
        twice.iter().map(|row| row.iter().map(|v| v / 2).collect()).collect()
    }

    pub fn num_components(&self) -> usize {
        self.components().len() + self.loops
    }

    /// Swaps over and under at crossing `x`, keeping the rotation.
    pub fn change_crossing(&mut self, x: usize) {
        let sign = self.signs()[x];
        let c = self.crossings[x];
        self.crossings[x] = if sign > 0 {
            // over ran d -> b, so d becomes the incoming under-strand
            [c[3], c[0], c[1], c[2]]
        } else {
            [c[1], c[2], c[3], c[0]]
        };
    }

    pub fn with_changes(&self, set: &[usize]) -> PdCode {
        let mut pd = self.clone();
        // signs depend only on orientation, which crossing changes preserve
        let signs = self.signs();
        for &x in set {
            let c = pd.crossings[x];
            pd.crossings[x] = if signs[x] > 0 {
                [c[3], c[0], c[1], c[2]]
            } else {
                [c[1], c[2], c[3], c[0]]
            };
        }
        pd
    }

    /// Planar map of the crossings; crossing `i` is vertex `i`. Crossing-free
    /// loops are only representable when there are no crossings.
    pub fn to_map(&self) -> Result<PlanarDiagram> {
        if self.crossings.is_empty() {
            return match self.loops {
                1 => PlanarDiagram::from_rotations(vec![vec![0, 1]], SurfaceKind::Sphere, vec![], None),
                n => Err(Error::InvalidDiagram(format!(
                    "{n} crossing-free circles do not form a connected diagram"
                ))),
            };
        }
        let mut edge_index: HashMap<u32, usize> = HashMap::new();
        let mut seen: HashMap<u32, bool> = HashMap::new();
        let mut labels: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        for (e, &l) in labels.iter().enumerate() {
            edge_index.insert(l, e);
        }
        let rotations = self
            .crossings
            .iter()
            .map(|x| {
                x.iter()
                    .map(|l| {
                        let e = edge_index[l];
                        let first = seen.insert(*l, true).is_none();
                        if first {
                            2 * e
                        } else {
                            2 * e + 1
                        }
                    })
                    .collect()
            })
            .collect();
        PlanarDiagram::from_rotations(rotations, SurfaceKind::Sphere, vec![], None)
    }

    /// Edge labels sorted ascending; edge `e` of [`to_map`] carries `labels()[e]`.
    pub fn labels(&self) -> Vec<u32> {
        let mut labels: Vec<u32> = self.crossings.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        labels
    }

    /// Relabels edges as 1..=n in sorted order of the current labels.
    pub fn normalized(&self) -> PdCode {
        let labels = self.labels();
        let index: HashMap<u32, u32> =
            labels.iter().enumerate().map(|(i, &l)| (l, i as u32 + 1)).collect();
        PdCode {
            crossings: self.crossings.iter().map(|x| x.map(|l| index[&l])).collect(),
            loops: self.loops,
        }
    }
}

impl fmt::Display for PdCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}

/// A connected link diagram on the sphere with its planar map.
#[derive(Clone, Debug)]
pub struct LinkDiagram {
    pd: PdCode,
    map: PlanarDiagram,
    components: Vec<Component>,
    /// component index for each map edge
    edge_component: Vec<usize>,
}

impl LinkDiagram {
    pub fn new(pd: PdCode) -> Result<Self> {
        pd.check_labels()?;
        if !pd.crossings.is_empty() && pd.loops > 0 {
            return Err(Error::InvalidDiagram(
                "crossing-free circles make the diagram split".into(),
            ));
        }
        let map = pd.to_map()?;
        if map.connected_pieces() != 1 {
            return Err(Error::InvalidDiagram("split diagrams are not supported here".into()));
        }
        let components = pd.components();
        let labels = pd.labels();
        let mut edge_component = vec![0; map.num_edges()];
        for (ci, comp) in components.iter().enumerate() {
            for l in &comp.labels {
                let e = labels.binary_search(l).expect("label present");
                edge_component[e] = ci;
            }
        }
        Ok(LinkDiagram { pd, map, components, edge_component })
    }

    pub fn parse(text: &str) -> Result<Self> {
        LinkDiagram::new(PdCode::parse(text)?)
    }

    pub fn unknot() -> Self {
        LinkDiagram::new(PdCode::new(Vec::new())).expect("circle is valid")
    }

    pub fn pd(&self) -> &PdCode {
        &self.pd
    }

    pub fn map(&self) -> &PlanarDiagram {
        &self.map
    }

    pub fn crossing_count(&self) -> usize {
        self.pd.crossings.len()
    }

    pub fn num_components(&self) -> usize {
        self.components.len().max(self.pd.loops)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn edge_component(&self, e: usize) -> usize {
        self.edge_component[e]
    }

    /// Components through crossing `x` (under strand, over strand).
    pub fn crossing_components(&self, x: usize) -> (usize, usize) {
        let darts = self.map.darts_at(x);
        (self.edge_component[darts[0] / 2], self.edge_component[darts[1] / 2])
    }

    pub fn is_self_crossing(&self, x: usize) -> bool {
        let (a, b) = self.crossing_components(x);
        a == b
    }

    pub fn emit_pd(&self) -> String {
        self.pd.emit()
    }
}
