//! Strand decompositions of 4-regular diagrams: tanglize and generalized
//! tanglize, reducible crossings, lamp-linking numbers, even components and
//! the constructive changing sets.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::diagram::{incidence_matrix, lamp_sites, BoardSource, CreasePattern, Dart, LinkDiagram, PlanarDiagram, SurfaceKind};
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};
use crate::game::RegionSet;

/// How a strand continues through boundary vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rules {
    /// Strands end wherever they meet the sheet boundary.
    Tanglize,
    /// Strands may touch the boundary at vertices with two or three interior
    /// edges.
    Generalized,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Component {
    pub id: usize,
    pub closed: bool,
    /// Darts in travel order; dart `d` runs from `vertex_of(d)` to
    /// `vertex_of(d ^ 1)`.
    pub darts: Vec<Dart>,
}

impl Component {
    pub fn name(&self) -> String {
        format!("{}{}", if self.closed { "K" } else { "L" }, self.id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SiteKind {
    /// The two strands through a 4-valent vertex, equal for a self-crossing.
    Crossing { strands: [usize; 2] },
    /// A boundary vertex touched by `component`; with three interior edges
    /// another strand stops there.
    Contact { component: usize, interior_edges: usize, stopping: Option<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReducibleCrossing {
    pub vertex: usize,
    pub site: usize,
    /// The region meeting the crossing in two opposite corners.
    pub region: usize,
    /// Adjacent darts at the crossing that open into the inner lobe.
    inner_darts: [Dart; 2],
    /// Edges of the inner lobe.
    inner_edges: BTreeSet<usize>,
    piece: usize,
}

impl ReducibleCrossing {
    pub fn inner_edges(&self) -> &BTreeSet<usize> {
        &self.inner_edges
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducibleCrossingPoset {
    pub crossings: Vec<ReducibleCrossing>,
    /// `(a, b)` with `a ⪯ b`, as indices into `crossings`.
    pub relation: Vec<(usize, usize)>,
}

impl ReducibleCrossingPoset {
    pub fn index_of(&self, vertex: usize) -> Option<usize> {
        self.crossings.iter().position(|c| c.vertex == vertex)
    }

    pub fn precedes(&self, a_vertex: usize, b_vertex: usize) -> bool {
        match (self.index_of(a_vertex), self.index_of(b_vertex)) {
            (Some(a), Some(b)) => self.relation.contains(&(a, b)),
            _ => false,
        }
    }

    pub fn comparable(&self, a_vertex: usize, b_vertex: usize) -> bool {
        self.precedes(a_vertex, b_vertex) || self.precedes(b_vertex, a_vertex)
    }

    /// Crossings ordered so that every outer crossing comes before the ones
    /// nested inside it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.crossings.len()).collect();
        order.sort_by_key(|&i| (std::cmp::Reverse(self.crossings[i].inner_edges.len()), i));
        order
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LampLinkingReport {
    pub component: usize,
    /// Twice the lamp-linking number, always an integer.
    pub twice_value: i64,
    pub value: f64,
    /// `f(c)` per lamp site.
    pub contributions: Vec<i8>,
}

#[derive(Clone, Debug)]
pub struct Tangle {
    map: PlanarDiagram,
    rules: Rules,
    components: Vec<Component>,
    edge_component: Vec<Option<usize>>,
    sites: Vec<usize>,
    site_kinds: Vec<SiteKind>,
    matrix: Gf2Matrix,
}

/// Contact-tangles are tangles traced with the generalized rules.
pub type ContactTangle = Tangle;

/// Interior darts of a boundary vertex in counterclockwise order, from one
/// boundary edge to the other.
fn interior_run(map: &PlanarDiagram, v: usize) -> Vec<Dart> {
    let darts = map.darts_at(v);
    let n = darts.len();
    let is_b = |d: Dart| map.is_boundary_edge(d / 2);
    let start = (0..n)
        .find(|&i| is_b(darts[i]) && !is_b(darts[(i + 1) % n]))
        .map(|i| i + 1)
        .unwrap_or(0);
    (0..n).map(|k| darts[(start + k) % n]).take_while(|&d| !is_b(d)).collect()
}

fn continuation(map: &PlanarDiagram, rules: Rules, arriving: Dart) -> Result<Option<Dart>> {
    let v = map.vertex_of(arriving);
    if !map.is_boundary_vertex(v) {
        return match map.degree(v) {
            4 => Ok(Some(map.rotate(map.rotate(arriving)))),
            2 => Ok(Some(map.rotate(arriving))),
            degree => Err(Error::NotFourValent { vertex: v, degree }),
        };
    }
    let run = interior_run(map, v);
    match (run.len(), rules) {
        (1, _) => Ok(None),
        (2, Rules::Generalized) => Ok(Some(if run[0] == arriving { run[1] } else { run[0] })),
        (3, Rules::Generalized) => Ok(match run.iter().position(|&d| d == arriving) {
            Some(0) => Some(run[2]),
            Some(2) => Some(run[0]),
            _ => None,
        }),
        (k, Rules::Tanglize) => Err(Error::Hypothesis(format!(
            "boundary vertex {v} has {k} interior edges; use the generalized rules"
        ))),
        (k, Rules::Generalized) => Err(Error::Hypothesis(format!(
            "boundary vertex {v} has {k} interior edges; at most three are allowed"
        ))),
    }
}

fn reverse_path(path: &[Dart]) -> Vec<Dart> {
    path.iter().rev().map(|&d| d ^ 1).collect()
}

/// Deterministic form: each component runs its smallest edge forward, closed
/// ones start there, and components are sorted by smallest edge.
fn canonical(mut comps: Vec<(bool, Vec<Dart>)>) -> Vec<Component> {
    for (closed, path) in comps.iter_mut() {
        let (pos, &d) = path.iter().enumerate().min_by_key(|(_, &d)| d / 2).unwrap();
        if d % 2 == 1 {
            *path = reverse_path(path);
        }
        if *closed {
            let pos = path.iter().position(|&x| x / 2 == d / 2).unwrap_or(pos);
            path.rotate_left(pos);
        }
    }
    comps.sort_by_key(|(_, p)| p.iter().map(|d| d / 2).min());
    comps
        .into_iter()
        .enumerate()
        .map(|(id, (closed, darts))| Component { id, closed, darts })
        .collect()
}

fn trace(map: &PlanarDiagram, rules: Rules, first_edge: usize) -> Result<Vec<Component>> {
    let m = map.num_edges();
    let mut used: Vec<bool> = (0..m).map(|e| map.is_boundary_edge(e)).collect();
    let mut comps = Vec::new();
    for k in 0..m {
        let e = (first_edge + k) % m;
        if used[e] {
            continue;
        }
        used[e] = true;
        let start = 2 * e;
        let mut forward = vec![start];
        let mut closed = false;
        let mut cur = start;
        while let Some(next) = continuation(map, rules, cur ^ 1)? {
            if next == start {
                closed = true;
                break;
            }
            if used[next / 2] {
                return Err(Error::InvalidDiagram(format!("strand revisits edge {}", next / 2)));
            }
            used[next / 2] = true;
            forward.push(next);
            cur = next;
        }
        let mut path = Vec::new();
        if !closed {
            let mut back = Vec::new();
            let mut cur = start ^ 1;
            while let Some(next) = continuation(map, rules, cur ^ 1)? {
                if used[next / 2] {
                    return Err(Error::InvalidDiagram(format!("strand revisits edge {}", next / 2)));
                }
                used[next / 2] = true;
                back.push(next);
                cur = next;
            }
            path = reverse_path(&back);
        }
        path.extend(forward);
        comps.push((closed, path));
    }
    Ok(canonical(comps))
}

impl Tangle {
    /// Traces a crease pattern whose creases only end on the sheet boundary.
    pub fn tanglize(pattern: &CreasePattern) -> Result<Tangle> {
        Self::build(pattern.map().clone(), Rules::Tanglize, 0)
    }

    /// Traces a crease pattern that may touch the sheet boundary.
    pub fn generalized_tanglize(pattern: &CreasePattern) -> Result<ContactTangle> {
        Self::build(pattern.map().clone(), Rules::Generalized, 0)
    }

    /// A link diagram viewed as a tangle of closed components on the sphere.
    pub fn from_link(diagram: &LinkDiagram) -> Result<Tangle> {
        Self::build(diagram.map().clone(), Rules::Tanglize, 0)
    }

    pub fn from_source(source: &BoardSource) -> Result<Tangle> {
        match source {
            BoardSource::Link(d) => Self::from_link(d),
            BoardSource::Pattern(p) => Self::generalized_tanglize(p),
            BoardSource::Matrix(_) => Err(Error::Hypothesis("a bare matrix has no strands".into())),
        }
    }

    /// Same decomposition, traced starting from `first_edge`.
    pub fn trace_from(map: &PlanarDiagram, rules: Rules, first_edge: usize) -> Result<Tangle> {
        Self::build(map.clone(), rules, first_edge)
    }

    fn build(map: PlanarDiagram, rules: Rules, first_edge: usize) -> Result<Tangle> {
        let components = trace(&map, rules, first_edge)?;
        let mut edge_component = vec![None; map.num_edges()];
        for c in &components {
            for &d in &c.darts {
                edge_component[d / 2] = Some(c.id);
            }
        }
        let sites = lamp_sites(&map);
        let comp_of = |d: Dart| edge_component[d / 2].expect("interior edge has a strand");
        let site_kinds = sites
            .iter()
            .map(|&v| {
                if map.is_boundary_vertex(v) {
                    let run = interior_run(&map, v);
                    let (pass, stopping) = match run.len() {
                        3 => (comp_of(run[0]), Some(comp_of(run[1]))),
                        _ => (comp_of(run[0]), None),
                    };
                    SiteKind::Contact { component: pass, interior_edges: run.len(), stopping }
                } else {
                    let d = map.darts_at(v);
                    SiteKind::Crossing { strands: [comp_of(d[0]), comp_of(d[1])] }
                }
            })
            .collect();
        let matrix = incidence_matrix(&map, &sites);
        Ok(Tangle { map, rules, components, edge_component, sites, site_kinds, matrix })
    }

    pub fn map(&self) -> &PlanarDiagram {
        &self.map
    }

    pub fn rules(&self) -> Rules {
        self.rules
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn closed_components(&self) -> impl Iterator<Item = &Component> {
        self.components.iter().filter(|c| c.closed)
    }

    pub fn edge_component(&self, e: usize) -> Option<usize> {
        self.edge_component[e]
    }

    /// Lamp sites in board order.
    pub fn sites(&self) -> &[usize] {
        &self.sites
    }

    pub fn site_kind(&self, site: usize) -> &SiteKind {
        &self.site_kinds[site]
    }

    pub fn site_of_vertex(&self, v: usize) -> Option<usize> {
        self.sites.iter().position(|&s| s == v)
    }

    pub fn incidence_matrix(&self) -> &Gf2Matrix {
        &self.matrix
    }

    pub fn contacts(&self) -> impl Iterator<Item = (usize, &SiteKind)> {
        self.site_kinds.iter().enumerate().filter(|(_, k)| matches!(k, SiteKind::Contact { .. }))
    }

    /// Whether the lamp at `site` counts towards the lamp-linking number of `k`.
    pub fn involves(&self, k: usize, site: usize) -> bool {
        match self.site_kinds[site] {
            SiteKind::Crossing { strands: [a, b] } => a != b && (a == k || b == k),
            SiteKind::Contact { component, .. } => component == k,
        }
    }

    /// The region treated as outside: next to the sheet boundary on a disk,
    /// the region with the most corners on the sphere.
    pub fn outer_region(&self) -> usize {
        match self.map.surface() {
            SurfaceKind::Disk => self.map.region_of_dart(self.map.boundary_walk()[0] ^ 1).expect("sheet region"),
            SurfaceKind::Sphere => {
                let corners = |r: &crate::diagram::Region| r.vertex_incidence.values().sum::<usize>();
                let best = self.map.regions().iter().map(corners).max().unwrap_or(0);
                self.map.regions().iter().position(|r| corners(r) == best).unwrap_or(0)
            }
        }
    }

    /// Pieces of the diagram connected without using the sheet boundary.
    pub fn split_pieces(&self) -> Vec<usize> {
        let n = self.map.num_vertices();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for e in 0..self.map.num_edges() {
            if self.map.is_boundary_edge(e) {
                continue;
            }
            let a = find(&mut parent, self.map.vertex_of(2 * e));
            let b = find(&mut parent, self.map.vertex_of(2 * e + 1));
            parent[a] = b;
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    /// Edges reachable from `darts` without passing through `cut`.
    fn lobe(&self, cut: usize, darts: &[Dart]) -> BTreeSet<usize> {
        let mut edges = BTreeSet::new();
        let mut stack: Vec<Dart> = darts.to_vec();
        while let Some(d) = stack.pop() {
            if !edges.insert(d / 2) {
                continue;
            }
            for end in [d, d ^ 1] {
                let w = self.map.vertex_of(end);
                if w != cut {
                    stack.extend(self.map.darts_at(w).iter().copied());
                }
            }
        }
        edges
    }

    pub fn reducible_poset(&self) -> ReducibleCrossingPoset {
        let pieces = self.split_pieces();
        let outer = self.outer_region();
        let mut crossings = Vec::new();
        for (site, &v) in self.sites.iter().enumerate() {
            if !matches!(self.site_kinds[site], SiteKind::Crossing { .. }) {
                continue;
            }
            let d = self.map.darts_at(v);
            let corner = |j: usize| self.map.corner_region(d[j % 4]);
            let Some(j) = (0..2).find(|&j| corner(j).is_some() && corner(j) == corner(j + 2)) else {
                continue;
            };
            let region = corner(j).unwrap();
            let side_a = [d[(j + 1) % 4], d[(j + 2) % 4]];
            let side_b = [d[(j + 3) % 4], d[j]];
            let lobe_a = self.lobe(v, &side_a);
            let lobe_b = self.lobe(v, &side_b);
            let touches = |lobe: &BTreeSet<usize>| match self.map.surface() {
                SurfaceKind::Disk => lobe.iter().any(|&e| self.map.is_boundary_edge(e)),
                SurfaceKind::Sphere => {
                    region != outer
                        && self.map.regions()[outer].boundary_darts.iter().any(|&x| lobe.contains(&(x / 2)))
                }
            };
            let a_inside = match (touches(&lobe_a), touches(&lobe_b)) {
                (false, true) => true,
                (true, false) => false,
                _ => lobe_a.len() <= lobe_b.len(),
            };
            let (inner_darts, inner_edges) = if a_inside { (side_a, lobe_a) } else { (side_b, lobe_b) };
            crossings.push(ReducibleCrossing { vertex: v, site, region, inner_darts, inner_edges, piece: pieces[v] });
        }
        let mut relation = Vec::new();
        for (a, ca) in crossings.iter().enumerate() {
            for (b, cb) in crossings.iter().enumerate() {
                if a != b
                    && ca.piece == cb.piece
                    && cb.inner_edges.len() < ca.inner_edges.len()
                    && cb.inner_edges.is_subset(&ca.inner_edges)
                {
                    relation.push((a, b));
                }
            }
        }
        ReducibleCrossingPoset { crossings, relation }
    }

    fn check_closed(&self, k: usize) -> Result<&Component> {
        let c = self.components.get(k).ok_or_else(|| Error::Hypothesis(format!("no component {k}")))?;
        if !c.closed {
            return Err(Error::OpenComponent(k));
        }
        Ok(c)
    }

    pub fn lamp_linking(&self, k: usize, lamps: &BitVec) -> Result<LampLinkingReport> {
        self.check_closed(k)?;
        if lamps.len() != self.sites.len() {
            return Err(Error::Dimension { expected: self.sites.len(), actual: lamps.len() });
        }
        let contributions: Vec<i8> = (0..self.sites.len())
            .map(|s| match (self.involves(k, s), lamps.get(s)) {
                (false, _) => 0,
                (true, true) => 1,
                (true, false) => -1,
            })
            .collect();
        let twice_value: i64 = contributions.iter().map(|&f| i64::from(f)).sum();
        Ok(LampLinkingReport { component: k, twice_value, value: twice_value as f64 / 2.0, contributions })
    }

    /// Closed components met an even number of times, counted in corners, by
    /// every region's boundary at involved sites.
    pub fn even_components(&self) -> Vec<usize> {
        self.closed_components()
            .map(|c| c.id)
            .filter(|&k| {
                self.map.regions().iter().all(|r| {
                    let count: usize = (0..self.sites.len())
                        .filter(|&s| self.involves(k, s))
                        .map(|s| r.corners_at(self.sites[s]))
                        .sum();
                    count % 2 == 0
                })
            })
            .collect()
    }

    /// Lamps switched by playing every region of `set` once.
    pub fn effect(&self, set: &RegionSet) -> BitVec {
        self.matrix.mul_vec(set).expect("region set length")
    }

    /// Regions on the odd side of a curve made of `edges`, counted from `reference`.
    fn parity_set(&self, edges: &BTreeSet<usize>, reference: usize) -> Result<RegionSet> {
        let mut mask = vec![false; self.map.num_edges()];
        for &e in edges {
            mask[e] = true;
        }
        let parity = self.map.crossing_parity(&mask, reference)?;
        Ok(BitVec::from_bools(&parity))
    }

    fn walk(&self, start: Dart, stop_at: usize) -> Result<Vec<Dart>> {
        let mut path = vec![start];
        let mut cur = start;
        while self.map.vertex_of(cur ^ 1) != stop_at {
            match continuation(&self.map, self.rules, cur ^ 1)? {
                Some(next) if next != start => {
                    path.push(next);
                    cur = next;
                }
                _ => break,
            }
        }
        Ok(path)
    }

    /// The splice loop (or the turning arc) through crossing `v` whose
    /// shaded side switches the lamp at `v` and leaves every crossing it
    /// passes straight through unchanged.
    fn turning_curve(&self, site: usize) -> Result<BTreeSet<usize>> {
        let v = self.sites[site];
        let SiteKind::Crossing { strands: [a, b] } = self.site_kinds[site] else {
            return Err(Error::Hypothesis(format!("site {site} is a contact point")));
        };
        if a == b {
            let comp = &self.components[a];
            let arrivals: Vec<usize> =
                (0..comp.darts.len()).filter(|&i| self.map.vertex_of(comp.darts[i] ^ 1) == v).collect();
            let [i1, i2] = arrivals[..] else {
                return Err(Error::InvalidDiagram(format!("strand passes crossing {v} {} times", arrivals.len())));
            };
            let inner: Vec<Dart> = comp.darts[i1 + 1..=i2].to_vec();
            let loop_darts = if comp.closed {
                // keep the half without the smallest dart of the component
                let smallest = *comp.darts.iter().min().unwrap();
                if inner.contains(&smallest) {
                    comp.darts[i2 + 1..].iter().chain(&comp.darts[..=i1]).copied().collect()
                } else {
                    inner
                }
            } else {
                inner
            };
            return Ok(loop_darts.iter().map(|d| d / 2).collect());
        }
        if self.components[a].closed || self.components[b].closed {
            return Err(Error::Unchangeable(site));
        }
        let d = *self
            .map
            .darts_at(v)
            .iter()
            .filter(|&&d| self.edge_component[d / 2] == Some(a))
            .min()
            .unwrap();
        let e = self.map.rotate(d);
        let mut edges: BTreeSet<usize> = self.walk(d, usize::MAX)?.iter().map(|x| x / 2).collect();
        edges.extend(self.walk(e, usize::MAX)?.iter().map(|x| x / 2));
        Ok(edges)
    }

    /// The loop through the inner lobe of a reducible crossing, shaded inside.
    fn lobe_set(&self, rc: &ReducibleCrossing) -> Result<RegionSet> {
        let path = self.walk(rc.inner_darts[0], rc.vertex)?;
        let edges: BTreeSet<usize> = path.iter().map(|d| d / 2).collect();
        self.parity_set(&edges, rc.region)
    }

    /// A region set switching only the lamp at crossing `site`, built by
    /// splicing or cutting at the crossing, shading one side, and correcting
    /// reducible crossings from the outside in.
    pub fn constructive_changing_set(&self, site: usize) -> Result<RegionSet> {
        if site >= self.sites.len() {
            return Err(Error::UnknownSite(site));
        }
        let curve = self.turning_curve(site)?;
        let mut set = self.parity_set(&curve, self.outer_region())?;
        let target = BitVec::unit(self.sites.len(), site);
        let poset = self.reducible_poset();
        for i in poset.linear_extension() {
            let rc = &poset.crossings[i];
            if self.effect(&set).get(rc.site) != (rc.site == site) {
                set.xor_assign(&self.lobe_set(rc)?);
            }
        }
        let effect = self.effect(&set);
        if effect != target {
            let stray: Vec<usize> = effect.xor(&target).ones().collect();
            return Err(Error::Hypothesis(format!("construction also switches sites {stray:?}")));
        }
        Ok(set)
    }

    /// For a closed component touching the sheet boundary at exactly one
    /// two-edge contact: a set switching only that contact (`target = None`)
    /// or only the given self-crossing of the component.
    pub fn single_contact_changing_set(&self, k: usize, target: Option<usize>) -> Result<RegionSet> {
        let comp = self.check_closed(k)?;
        let contacts: Vec<usize> = self
            .contacts()
            .filter(|(_, kind)| matches!(kind, SiteKind::Contact { component, .. } if *component == k))
            .map(|(s, _)| s)
            .collect();
        let [contact] = contacts[..] else {
            return Err(Error::Hypothesis(format!("{} touches the boundary {} times", comp.name(), contacts.len())));
        };
        if !matches!(self.site_kinds[contact], SiteKind::Contact { interior_edges: 2, .. }) {
            return Err(Error::Hypothesis("the contact point has three interior edges".into()));
        }
        let edges: BTreeSet<usize> = comp.darts.iter().map(|d| d / 2).collect();
        let inside = self.parity_set(&edges, self.outer_region())?;
        let (set, goal) = match target {
            None => (inside, contact),
            Some(site) => {
                if !matches!(self.site_kinds.get(site), Some(SiteKind::Crossing { strands: [a, b] }) if *a == k && *b == k)
                {
                    return Err(Error::Hypothesis(format!("site {site} is not a self-crossing of {}", comp.name())));
                }
                let mut set = self.parity_set(&self.turning_curve(site)?, self.outer_region())?;
                if self.effect(&set).get(contact) {
                    set.xor_assign(&inside);
                }
                (set, site)
            }
        };
        let effect = self.effect(&set);
        if effect != BitVec::unit(self.sites.len(), goal) {
            let stray: Vec<usize> = effect.ones().filter(|&s| s != goal).collect();
            return Err(Error::Hypothesis(format!("construction also switches sites {stray:?}")));
        }
        Ok(set)
    }

    pub fn report(&self, lamps: &BitVec) -> Result<TangleReport> {
        let poset = self.reducible_poset();
        let lamp_linking = self
            .closed_components()
            .map(|c| self.lamp_linking(c.id, lamps))
            .collect::<Result<Vec<_>>>()?;
        Ok(TangleReport {
            rules: self.rules,
            components: self
                .components
                .iter()
                .map(|c| ComponentSummary {
                    name: c.name(),
                    closed: c.closed,
                    edges: c.darts.iter().map(|d| d / 2).collect(),
                })
                .collect(),
            sites: self.sites.iter().zip(&self.site_kinds).map(|(&v, k)| (v, k.clone())).collect(),
            reducible: poset.crossings.iter().map(|c| c.vertex).collect(),
            order: poset
                .relation
                .iter()
                .map(|&(a, b)| (poset.crossings[a].vertex, poset.crossings[b].vertex))
                .collect(),
            even_components: self.even_components(),
            lamp_linking,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ComponentSummary {
    pub name: String,
    pub closed: bool,
    pub edges: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TangleReport {
    pub rules: Rules,
    pub components: Vec<ComponentSummary>,
    /// `(vertex, kind)` per lamp site.
    pub sites: Vec<(usize, SiteKind)>,
    pub reducible: Vec<usize>,
    /// `(a, b)` vertex pairs with `a ⪯ b`.
    pub order: Vec<(usize, usize)>,
    pub even_components: Vec<usize>,
    pub lamp_linking: Vec<LampLinkingReport>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn counts(t: &Tangle) -> (usize, usize) {
        let closed = t.closed_components().count();
        (closed, t.components().len() - closed)
    }

    #[test]
    fn straight_crease_is_one_open_strand() {
        let t = Tangle::tanglize(&fixtures::pattern("single_crease")).unwrap();
        assert_eq!(counts(&t), (0, 1));
        assert!(t.sites().is_empty());
    }

    #[test]
    fn two_crossing_creases() {
        let t = Tangle::tanglize(&fixtures::pattern("x_pattern")).unwrap();
        assert_eq!(counts(&t), (0, 2));
        assert_eq!(t.site_kind(0), &SiteKind::Crossing { strands: [0, 1] });
    }

    #[test]
    fn degree_eight_vertex_is_rejected() {
        let err = Tangle::tanglize(&fixtures::pattern("preliminary_base")).unwrap_err();
        assert!(matches!(err, Error::NotFourValent { degree: 8, .. }));
    }

    #[test]
    fn contacts_need_generalized_rules() {
        let p = fixtures::pattern("contact_t1");
        assert!(matches!(Tangle::tanglize(&p), Err(Error::Hypothesis(_))));
        let t = Tangle::generalized_tanglize(&p).unwrap();
        assert_eq!(t.contacts().count(), 1);
    }

    #[test]
    fn generalized_rules_agree_without_contacts() {
        for name in ["diamond", "nested_curls", "figure_eight_loop", "x_pattern"] {
            let p = fixtures::pattern(name);
            let a = Tangle::tanglize(&p).unwrap();
            let b = Tangle::generalized_tanglize(&p).unwrap();
            assert_eq!(a.components(), b.components(), "{name}");
        }
    }

    #[test]
    fn closed_component_is_inside_the_lobe_test() {
        let t = Tangle::from_link(&LinkDiagram::parse("X(1,2,2,1)").unwrap()).unwrap();
        let poset = t.reducible_poset();
        assert_eq!(poset.crossings.len(), 1);
        assert!(poset.relation.is_empty());
    }

    #[test]
    fn lamp_linking_needs_closed_component() {
        let t = Tangle::tanglize(&fixtures::pattern("x_pattern")).unwrap();
        let lamps = BitVec::from_bools(&[true]);
        assert_eq!(t.lamp_linking(0, &lamps), Err(Error::OpenComponent(0)));
    }
}
