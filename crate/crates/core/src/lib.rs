//! Rook placements on chained chessboards, chained permutations and chained
//! alternating sign matrices, with exact counting and the bijections
//! between their different descriptions.

pub mod asm;
pub mod board;
pub mod counting;
mod error;
pub mod io;
pub mod matrix;
pub mod placements;
pub mod views;

pub use board::{BoardSpec, Composition, Shape, Square};
pub use error::{Error, Result, Validation};
pub use matrix::Matrix;
