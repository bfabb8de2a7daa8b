//! Diagrams as combinatorial planar maps: link diagrams, crease patterns and
//! the lamp boards built on top of them.

pub mod board;
pub mod crease;
pub mod pd;
pub mod planar;

pub use board::{incidence_matrix, lamp_sites, BoardFile, BoardSource, LampBoard};
pub use crease::{CreasePattern, FoldFile};
pub use pd::{Component, Crossing, LinkDiagram, PdCode};
pub use planar::{Dart, PlanarDiagram, Region, SurfaceKind};
