//! Lamp boards and the board file format.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::crease::{CreasePattern, FoldFile};
use super::pd::LinkDiagram;
use super::planar::PlanarDiagram;
use crate::error::{Error, Result};
use crate::gf2::{BitVec, Gf2Matrix};

#[derive(Clone, Debug)]
pub enum BoardSource {
    Link(LinkDiagram),
    Pattern(CreasePattern),
    /// A bare incidence system with lamp rows and region columns.
    Matrix(Gf2Matrix),
}

impl BoardSource {
    pub fn map(&self) -> Option<&PlanarDiagram> {
        match self {
            BoardSource::Link(d) => Some(d.map()),
            BoardSource::Pattern(p) => Some(p.map()),
            BoardSource::Matrix(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LampBoard {
    source: BoardSource,
    lamp_sites: Vec<usize>,
    lamps: BitVec,
}

/// Vertices that carry lamps: every interior vertex where creases or strands
/// cross (degree at least 3), plus sheet-boundary vertices with two or more
/// interior edges.
pub fn lamp_sites(map: &PlanarDiagram) -> Vec<usize> {
    (0..map.num_vertices())
        .filter(|&v| {
            if map.is_boundary_vertex(v) {
                map.interior_degree(v) >= 2
            } else {
                map.degree(v) >= 3
            }
        })
        .collect()
}

/// Rows are lamp sites, columns are regions; entries are corner counts mod 2.
pub fn incidence_matrix(map: &PlanarDiagram, sites: &[usize]) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(sites.len(), map.num_regions());
    for (row, &v) in sites.iter().enumerate() {
        for region in map.regions() {
            if region.corners_at(v) % 2 == 1 {
                m.set(row, region.id, true);
            }
        }
    }
    m
}

impl LampBoard {
    /// A board with every lamp ON.
    pub fn new(source: BoardSource) -> Self {
        let lamp_sites = match &source {
            BoardSource::Matrix(m) => (0..m.rows()).collect(),
            other => lamp_sites(other.map().unwrap()),
        };
        let lamps = BitVec::from_bools(&vec![true; lamp_sites.len()]);
        LampBoard { source, lamp_sites, lamps }
    }

    pub fn with_lamps(mut self, lamps: BitVec) -> Result<Self> {
        if lamps.len() != self.lamp_sites.len() {
            return Err(Error::Dimension { expected: self.lamp_sites.len(), actual: lamps.len() });
        }
        self.lamps = lamps;
        Ok(self)
    }

    pub fn source(&self) -> &BoardSource {
        &self.source
    }

    pub fn lamp_sites(&self) -> &[usize] {
        &self.lamp_sites
    }

    pub fn lamps(&self) -> &BitVec {
        &self.lamps
    }

    pub fn num_regions(&self) -> usize {
        match &self.source {
            BoardSource::Matrix(m) => m.cols(),
            other => other.map().unwrap().num_regions(),
        }
    }

    pub fn site_index(&self, vertex: usize) -> Option<usize> {
        self.lamp_sites.iter().position(|&v| v == vertex)
    }

    pub fn incidence_matrix(&self) -> Gf2Matrix {
        match &self.source {
            BoardSource::Matrix(m) => m.clone(),
            other => incidence_matrix(other.map().unwrap(), &self.lamp_sites),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: BoardFile = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        file.into_board()
    }

    pub fn to_file(&self) -> BoardFile {
        let diagram = match &self.source {
            BoardSource::Link(d) => Value::String(d.emit_pd()),
            BoardSource::Pattern(p) => serde_json::to_value(p.to_fold()).expect("fold serializes"),
            BoardSource::Matrix(m) => serde_json::json!({ "matrix": m }),
        };
        let lamps = (0..self.lamp_sites.len())
            .map(|i| (i.to_string(), u8::from(self.lamps.get(i))))
            .collect();
        BoardFile { diagram, lamps }
    }
}

/// `{ "diagram": <pd text | fold object | {"matrix": ...}>, "lamps": {"<site>": 0|1} }`
///
/// Sites missing from `lamps` start ON.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BoardFile {
    pub diagram: Value,
    #[serde(default)]
    pub lamps: BTreeMap<String, u8>,
}

impl BoardFile {
    pub fn into_board(self) -> Result<LampBoard> {
        let source = parse_diagram_payload(&self.diagram)?;
        let board = LampBoard::new(source);
        let mut lamps = board.lamps.clone();
        for (key, value) in &self.lamps {
            let site: usize = key.parse().map_err(|_| Error::Field {
                field: format!("lamps.{key}"),
                message: "site ids are integers".into(),
            })?;
            if site >= lamps.len() {
                return Err(Error::Field {
                    field: format!("lamps.{key}"),
                    message: format!("board has {} lamp sites", lamps.len()),
                });
            }
            match value {
                0 => lamps.set(site, false),
                1 => lamps.set(site, true),
                _ => {
                    return Err(Error::Field {
                        field: format!("lamps.{key}"),
                        message: "lamp state must be 0 or 1".into(),
                    })
                }
            }
        }
        board.with_lamps(lamps)
    }
}

pub fn parse_diagram_payload(value: &Value) -> Result<BoardSource> {
    match value {
        Value::String(pd) => Ok(BoardSource::Link(LinkDiagram::parse(pd)?)),
        Value::Object(obj) if obj.contains_key("matrix") => {
            let m: Gf2Matrix = serde_json::from_value(obj["matrix"].clone()).map_err(|e| Error::Field {
                field: "diagram.matrix".into(),
                message: e.to_string(),
            })?;
            Ok(BoardSource::Matrix(m))
        }
        Value::Object(_) => {
            let fold: FoldFile = serde_json::from_value(value.clone()).map_err(|e| Error::Field {
                field: "diagram".into(),
                message: e.to_string(),
            })?;
            Ok(BoardSource::Pattern(CreasePattern::from_fold(&fold)?))
        }
        _ => Err(Error::Field {
            field: "diagram".into(),
            message: "expected PD text, a FOLD object or a matrix".into(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn circle_board_has_no_lamps() {
        let board = LampBoard::new(BoardSource::Link(LinkDiagram::unknot()));
        let m = board.incidence_matrix();
        assert_eq!((m.rows(), m.cols()), (0, 2));
    }

    #[test]
    fn nugatory_crossing_gets_zero_entry() {
        // one-crossing unknot: a curl
        let d = LinkDiagram::parse("X(1,2,2,1)").unwrap();
        let board = LampBoard::new(BoardSource::Link(d));
        let m = board.incidence_matrix();
        assert_eq!(m.rows(), 1);
        let map = board.source().map().unwrap();
        let twice = map.regions().iter().find(|r| r.corners_at(0) == 2).unwrap();
        assert!(!m.get(0, twice.id));
        assert_eq!(m.row(0).weight(), 2);
    }

    #[test]
    fn board_file_sets_lamps() {
        let text = r#"{"diagram": "X(3,2,4,1) X(1,4,2,3)", "lamps": {"1": 0}}"#;
        let board = LampBoard::parse(text).unwrap();
        assert_eq!(board.lamps().to_bit_string(), "10");
        let bad = r#"{"diagram": "X(3,2,4,1) X(1,4,2,3)", "lamps": {"7": 0}}"#;
        assert!(matches!(LampBoard::parse(bad), Err(Error::Field { .. })));
    }
}
