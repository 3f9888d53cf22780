//! Text format, data files, and command implementations behind the
//! `closedpoly` binary.

pub mod commands;
pub mod data;
pub mod parse;
pub mod render;

pub use parse::{parse_poly, parse_poly_in, ParseError, ParsedInput};
pub use render::{render_poly, render_uni};
