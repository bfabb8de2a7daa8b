//! Bundled diagrams used by the examples, the tests and the CLI.
//!
//! Knot and link diagrams are standard minimal diagrams from the Rolfsen
//! tables. Crease patterns are hand-built; several reconstruct pictured
//! situations whose exact coordinates are not published, and are named
//! after what they exhibit.

use crate::diagram::{BoardSource, CreasePattern, LampBoard, LinkDiagram};
use crate::gf2::BitVec;

macro_rules! table {
    ($dir:literal; $($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../fixtures/", $dir, "/", $name, ".", $dir)))),*]
    };
}

const PD_FILES: &[(&str, &str)] = table!("pd";
    "knot_3_1", "knot_4_1", "knot_5_1", "knot_5_2", "knot_6_1", "knot_6_2", "knot_6_3",
    "knot_7_1", "knot_7_2", "knot_7_4", "knot_8_1", "knot_8_19", "knot_9_1", "knot_9_42",
    "link_hopf", "link_4_2_1", "link_5_2_1", "link_6_2_1", "link_6_2_2", "link_6_2_3",
    "link_7_2_1", "link_7_2_3", "link_borromean",
);

const FOLD_FILES: &[(&str, &str)] = table!("fold";
    "diagonals", "single_crease", "x_pattern", "preliminary_base", "degree_three",
    "kite_vertex", "diamond", "contact_t1", "contact_t2", "contact_t3", "nested_curls",
    "figure_eight_loop", "touching_eight",
);

pub const SEVEN_LAMP_SYSTEM: &str = include_str!("../fixtures/boards/seven_lamp_system.json");

pub fn pd_text(name: &str) -> Option<&'static str> {
    PD_FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

pub fn fold_text(name: &str) -> Option<&'static str> {
    FOLD_FILES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Panics on unknown names; fixtures are compiled in.
pub fn link(name: &str) -> LinkDiagram {
    LinkDiagram::parse(pd_text(name).unwrap_or_else(|| panic!("no PD fixture {name}")))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn pattern(name: &str) -> CreasePattern {
    CreasePattern::parse_fold(fold_text(name).unwrap_or_else(|| panic!("no fold fixture {name}")))
        .unwrap_or_else(|e| panic!("fixture {name}: {e}"))
}

pub fn pd_names() -> impl Iterator<Item = &'static str> {
    PD_FILES.iter().map(|(n, _)| *n)
}

pub fn fold_names() -> impl Iterator<Item = &'static str> {
    FOLD_FILES.iter().map(|(n, _)| *n)
}

pub fn knot_names() -> impl Iterator<Item = &'static str> {
    pd_names().filter(|n| n.starts_with("knot_"))
}

pub fn link_names() -> impl Iterator<Item = &'static str> {
    pd_names().filter(|n| n.starts_with("link_"))
}

/// The seven-lamp, twelve-region system with lamp 1 (0-based) OFF.
pub fn seven_lamp_board() -> LampBoard {
    LampBoard::parse(SEVEN_LAMP_SYSTEM).expect("bundled board parses")
}

/// Diamond pattern with every lamp ON except one where the closed diamond
/// crosses a straight crease; no sequence of region selections clears it.
pub fn unsolvable_diamond_board() -> LampBoard {
    let p = pattern("diamond");
    let corner = p.vertex_at([0.1, 0.5]).expect("diamond corner");
    let board = LampBoard::new(BoardSource::Pattern(p));
    let site = board.site_index(corner).expect("corner carries a lamp");
    let mut lamps = board.lamps().clone();
    lamps.set(site, false);
    board.with_lamps(lamps).expect("same length")
}

/// Diamond pattern with the lamps on its closed strand alternating OFF, ON,
/// OFF, ON around it; its lamp-linking number is zero.
pub fn lamp_linking_board() -> LampBoard {
    let p = pattern("diamond");
    let off: Vec<usize> = [[0.5, 0.1], [0.5, 0.9]]
        .iter()
        .map(|&at| p.vertex_at(at).expect("diamond corner"))
        .collect();
    let board = LampBoard::new(BoardSource::Pattern(p));
    let off: Vec<usize> = off.iter().map(|&v| board.site_index(v).expect("corner carries a lamp")).collect();
    board_with_off(board.source().clone(), &off)
}

/// All lamps ON except the given sites.
pub fn board_with_off(source: BoardSource, off: &[usize]) -> LampBoard {
    let board = LampBoard::new(source);
    let mut lamps = BitVec::from_bools(&vec![true; board.lamp_sites().len()]);
    for &s in off {
        lamps.set(s, false);
    }
    board.with_lamps(lamps).expect("same length")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_parses() {
        for name in pd_names() {
            let d = link(name);
            assert_eq!(d.map().num_regions(), d.crossing_count() + 2, "{name}");
        }
        for name in fold_names() {
            pattern(name);
        }
    }

    #[test]
    fn fixture_families() {
        assert_eq!(knot_names().count(), 14);
        let two: Vec<_> = link_names().filter(|n| link(n).num_components() == 2).collect();
        assert_eq!(two.len(), 8);
    }
}
