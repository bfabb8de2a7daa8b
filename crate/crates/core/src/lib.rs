//! Region Select and region crossing changes on knot diagrams and origami
//! crease patterns.

pub mod analysis;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod fixtures;
pub mod foldability;
pub mod game;
pub mod gf2;
pub mod layout;
pub mod service;
pub mod tangle;
pub mod unlink;

pub use error::{Error, Result};
