use std::collections::BTreeMap;

use crate::asm::ChainedAsm;
use crate::board::BoardSpec;
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;

use super::grid::{build_grid_graph, GridEdge, GridGraph, GridVertex};

/// An orientation of every edge of the grid graph, stored as the head of
/// each edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IceConfiguration {
    board: BoardSpec,
    heads: BTreeMap<GridEdge, GridVertex>,
}

/// The six ways an interior vertex can have two edges in and two out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexKind {
    /// Right and up edges leave.
    I,
    /// Left and down edges leave.
    II,
    /// Left and up edges leave.
    III,
    /// Right and down edges leave.
    IV,
    /// Both horizontal edges enter, both vertical edges leave.
    V,
    /// Both horizontal edges leave, both vertical edges enter.
    VI,
}

impl IceConfiguration {
    /// Checks only that `heads` orients exactly the edges of the grid graph,
    /// each towards one of its endpoints.
    pub fn new(board: BoardSpec, heads: BTreeMap<GridEdge, GridVertex>) -> Result<Self> {
        let g = build_grid_graph(&board)?;
        if heads.len() != g.edges().len() {
            return Err(Error::Domain(format!(
                "{} edges oriented, the grid graph has {}",
                heads.len(),
                g.edges().len()
            )));
        }
        for (e, h) in &heads {
            if !g.contains_edge(e) {
                return Err(Error::Domain(format!("{e} is not an edge of the grid graph")));
            }
            let (a, b) = g.endpoints(e);
            if *h != a && *h != b {
                return Err(Error::Domain(format!("head {h} is not an endpoint of {e}")));
            }
        }
        Ok(Self { board, heads })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn heads(&self) -> &BTreeMap<GridEdge, GridVertex> {
        &self.heads
    }

    pub fn head(&self, e: &GridEdge) -> Option<GridVertex> {
        self.heads.get(e).copied()
    }

    pub fn graph(&self) -> GridGraph {
        build_grid_graph(&self.board).expect("board checked on construction")
    }

    /// Chained domain wall boundary conditions plus two edges in and two
    /// out at every interior vertex.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let g = self.graph();
        for e in g.edges().iter().filter(|e| e.is_boundary()) {
            let want = dwbc_head(e);
            if self.heads.get(e) != Some(&want) {
                v.push(format!("boundary edge {e} must point to {want}"));
            }
        }
        for &x in g.interior_vertices() {
            let ins = g.incident(x).iter().filter(|e| self.heads.get(e) == Some(&x)).count();
            if ins != 2 {
                v.push(format!("vertex {x} has {ins} incoming edges"));
            }
        }
        v
    }

    pub fn vertex_kind(&self, g: &GridGraph, x: GridVertex) -> Option<VertexKind> {
        let [l, r, u, d] = g.incident(x).map(|e| self.heads.get(&e) == Some(&x));
        use VertexKind::*;
        Some(match (l, r, u, d) {
            (true, false, true, false) => I,
            (false, true, false, true) => II,
            (false, true, true, false) => III,
            (true, false, false, true) => IV,
            (true, true, false, false) => V,
            (false, false, true, true) => VI,
            _ => return None,
        })
    }
}

fn dwbc_head(e: &GridEdge) -> GridVertex {
    match *e {
        GridEdge::Left { board, row } if board % 2 == 1 => GridVertex::new(board, row, 1),
        GridEdge::Left { board, row } => GridVertex::new(board, row, 0),
        GridEdge::Top { board, col } if board % 2 == 1 => GridVertex::new(board, 0, col),
        GridEdge::Top { board, col } => GridVertex::new(board, 1, col),
        _ => unreachable!("not a boundary edge"),
    }
}

pub fn validate_ice(c: &IceConfiguration) -> Validation {
    c.validate()
}

pub fn to_ice(a: &ChainedAsm) -> Result<IceConfiguration> {
    let g = build_grid_graph(a.board())?;
    let (n, k) = (a.board().n(), a.board().k());
    let m = a.matrices();
    let mat = |l: usize| &m[l - 1];
    let prefix = |l: usize, i: usize, j: usize| -> i32 { mat(l).row(i - 1)[..j].iter().map(|&x| x as i32).sum() };
    let row_sum = |l: usize, i: usize| mat(l).row_sum(i - 1);
    // sum of the bottom `t` entries of column `j`
    let col_bottom = |l: usize, j: usize, t: usize| -> i32 { (n - t..n).map(|r| mat(l).get(r, j - 1) as i32).sum() };
    let prev = |l: usize| (l + k - 2) % k + 1;
    let mut heads = BTreeMap::new();
    for e in g.edges() {
        let (first, second) = g.endpoints(e);
        let odd = |l: usize| l % 2 == 1;
        // when the governing sum is 1, odd boards point at the first
        // endpoint and even boards at the second; a sum of 0 reverses this
        let head = match *e {
            GridEdge::Horizontal { board, row, col } => {
                let s = prefix(board, row, col) == 1;
                if s == odd(board) { first } else { second }
            }
            GridEdge::Vertical { board, row, col } => {
                let s = row_sum(prev(board), col) + col_bottom(board, col, n - row) == 1;
                if s == odd(board) { first } else { second }
            }
            GridEdge::Chaining { board, row } => {
                let s = row_sum(board, row) == 1;
                if s == odd(board) { first } else { second }
            }
            GridEdge::Left { .. } | GridEdge::Top { .. } => dwbc_head(e),
        };
        heads.insert(*e, head);
    }
    Ok(IceConfiguration {
        board: *a.board(),
        heads,
    })
}

/// Reads each interior vertex's configuration back as a matrix entry: the
/// configuration with both horizontal edges entering gives 1 on odd boards
/// and -1 on even ones, the one with both vertical edges entering the
/// reverse, and the other four give 0.
pub fn from_ice(c: &IceConfiguration) -> Result<ChainedAsm> {
    c.validate().into_result()?;
    let g = c.graph();
    let (n, k) = (c.board.n(), c.board.k());
    let mut matrices = vec![Matrix::zeros(n); k];
    for &x in g.interior_vertices() {
        let kind = c
            .vertex_kind(&g, x)
            .ok_or_else(|| Error::Invalid(vec![format!("vertex {x} is not two-in two-out")]))?;
        let sign = if x.board % 2 == 1 { 1 } else { -1 };
        let entry = match kind {
            VertexKind::V => sign,
            VertexKind::VI => -sign,
            _ => 0,
        };
        matrices[x.board - 1].set(x.row - 1, x.col - 1, entry);
    }
    let a = ChainedAsm::new(c.board, matrices)?;
    if to_ice(&a)? != *c {
        return Err(Error::Invariant("ice configuration does not come from its own matrix".into()));
    }
    Ok(a)
}

/// Every orientation satisfying the boundary conditions and the ice rule,
/// by backtracking over the non-boundary edges.
pub fn enumerate_ice(board: &BoardSpec) -> Result<Vec<IceConfiguration>> {
    let g = build_grid_graph(board)?;
    let index: BTreeMap<GridVertex, usize> = g.vertices().iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let mut ins = vec![0u8; g.vertices().len()];
    let mut outs = vec![0u8; g.vertices().len()];
    let mut fixed = BTreeMap::new();
    let mut free = Vec::new();
    for e in g.edges() {
        if e.is_boundary() {
            let h = dwbc_head(e);
            let (a, b) = g.endpoints(e);
            let t = if h == a { b } else { a };
            ins[index[&h]] += 1;
            outs[index[&t]] += 1;
            fixed.insert(*e, h);
        } else {
            let (a, b) = g.endpoints(e);
            free.push((*e, index[&a], index[&b], a, b));
        }
    }
    // finish each vertex's edges as early as possible so the ice rule prunes
    free.sort_by_key(|f| (f.1.max(f.2), f.1.min(f.2)));
    let interior: Vec<bool> = g.vertices().iter().map(GridVertex::is_interior).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(free.len());
    #[allow(clippy::too_many_arguments)]
    fn go(
        p: usize,
        free: &[(GridEdge, usize, usize, GridVertex, GridVertex)],
        interior: &[bool],
        ins: &mut [u8],
        outs: &mut [u8],
        chosen: &mut Vec<GridVertex>,
        fixed: &BTreeMap<GridEdge, GridVertex>,
        board: &BoardSpec,
        out: &mut Vec<IceConfiguration>,
    ) {
        if p == free.len() {
            let mut heads = fixed.clone();
            for (f, h) in free.iter().zip(chosen.iter()) {
                heads.insert(f.0, *h);
            }
            out.push(IceConfiguration { board: *board, heads });
            return;
        }
        let (_, a, b, va, vb) = free[p];
        for (h, t, vh) in [(a, b, va), (b, a, vb)] {
            if (interior[h] && ins[h] == 2) || (interior[t] && outs[t] == 2) {
                continue;
            }
            ins[h] += 1;
            outs[t] += 1;
            chosen.push(vh);
            go(p + 1, free, interior, ins, outs, chosen, fixed, board, out);
            chosen.pop();
            ins[h] -= 1;
            outs[t] -= 1;
        }
    }
    go(0, &free, &interior, &mut ins, &mut outs, &mut chosen, &fixed, board, &mut out);
    Ok(out)
}
