//! Monotone triangles, square ice and fully packed loops for circular
//! chained ASMs with an even number of boards.

mod fpl;
mod grid;
mod ice;
mod mt;

pub use fpl::{enumerate_fpl, from_fpl, to_fpl, validate_fpl, FplConfiguration};
pub use grid::{build_grid_graph, GridEdge, GridGraph, GridVertex};
pub use ice::{enumerate_ice, from_ice, to_ice, validate_ice, IceConfiguration, VertexKind};
pub use mt::{
    concatenated_pairs, enumerate_mt_chains, from_monotone_triangles, to_monotone_triangles,
    MonotoneTriangleChain,
};

use crate::board::BoardSpec;
use crate::error::{Error, Result};

pub(crate) fn require_even_circular(board: &BoardSpec) -> Result<()> {
    if !board.is_circular() || board.k() % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "only defined for circular boards with even k, got {board}"
        )));
    }
    Ok(())
}

pub fn validate_mt_chain(t: &MonotoneTriangleChain) -> crate::error::Validation {
    t.validate()
}
