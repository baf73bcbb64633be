use std::fmt;
use std::str::FromStr;

use crate::board::BoardSpec;
use crate::error::{Error, Result};

use super::require_even_circular;

/// `v^(board)_{row,col}`. Interior vertices have `row, col >= 1`; boundary
/// vertices have exactly one of them equal to 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridVertex {
    pub board: usize,
    pub row: usize,
    pub col: usize,
}

impl GridVertex {
    pub fn new(board: usize, row: usize, col: usize) -> Self {
        Self { board, row, col }
    }

    pub fn is_interior(&self) -> bool {
        self.row > 0 && self.col > 0
    }

    /// Parity of `row + col + board`.
    pub fn is_odd(&self) -> bool {
        (self.row + self.col + self.board) % 2 == 1
    }
}

impl fmt::Display for GridVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.board, self.row, self.col)
    }
}

impl FromStr for GridVertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p = numbers(s, 3)?;
        Ok(Self::new(p[0], p[1], p[2]))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GridEdge {
    /// `v_{row,col}` to `v_{row,col+1}`.
    Horizontal { board: usize, row: usize, col: usize },
    /// `v_{row,col}` to `v_{row+1,col}`.
    Vertical { board: usize, row: usize, col: usize },
    /// `v^(board)_{row,n}` to `v^(board+1)_{n,row}`, cyclically.
    Chaining { board: usize, row: usize },
    /// `v_{row,0}` to `v_{row,1}`.
    Left { board: usize, row: usize },
    /// `v_{0,col}` to `v_{1,col}`.
    Top { board: usize, col: usize },
}

impl GridEdge {
    /// `(first, second)` in the order the variant documentation lists them.
    pub fn endpoints(&self, n: usize, k: usize) -> (GridVertex, GridVertex) {
        use GridEdge::*;
        let v = GridVertex::new;
        match *self {
            Horizontal { board, row, col } => (v(board, row, col), v(board, row, col + 1)),
            Vertical { board, row, col } => (v(board, row, col), v(board, row + 1, col)),
            Chaining { board, row } => (v(board, row, n), v(board % k + 1, n, row)),
            Left { board, row } => (v(board, row, 0), v(board, row, 1)),
            Top { board, col } => (v(board, 0, col), v(board, 1, col)),
        }
    }

    pub fn is_boundary(&self) -> bool {
        matches!(self, GridEdge::Left { .. } | GridEdge::Top { .. })
    }
}

impl fmt::Display for GridEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GridEdge::*;
        match *self {
            Horizontal { board, row, col } => write!(f, "h:{board}:{row}:{col}"),
            Vertical { board, row, col } => write!(f, "v:{board}:{row}:{col}"),
            Chaining { board, row } => write!(f, "c:{board}:{row}"),
            Left { board, row } => write!(f, "l:{board}:{row}"),
            Top { board, col } => write!(f, "t:{board}:{col}"),
        }
    }
}

impl FromStr for GridEdge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (kind, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::parse(format!("bad edge id \"{s}\"")))?;
        Ok(match kind {
            "h" | "v" => {
                let p = numbers(rest, 3)?;
                let (board, row, col) = (p[0], p[1], p[2]);
                if kind == "h" {
                    GridEdge::Horizontal { board, row, col }
                } else {
                    GridEdge::Vertical { board, row, col }
                }
            }
            "c" | "l" | "t" => {
                let p = numbers(rest, 2)?;
                match kind {
                    "c" => GridEdge::Chaining { board: p[0], row: p[1] },
                    "l" => GridEdge::Left { board: p[0], row: p[1] },
                    _ => GridEdge::Top { board: p[0], col: p[1] },
                }
            }
            _ => return Err(Error::parse(format!("unknown edge kind \"{kind}\" in \"{s}\""))),
        })
    }
}

fn numbers(s: &str, count: usize) -> Result<Vec<usize>> {
    let p: Vec<usize> = s
        .split(':')
        .map(str::parse)
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::parse(format!("bad identifier \"{s}\"")))?;
    if p.len() != count {
        return Err(Error::parse(format!("expected {count} numbers in \"{s}\"")));
    }
    Ok(p)
}

/// The chained grid graph for a circular board with even `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridGraph {
    board: BoardSpec,
    vertices: Vec<GridVertex>,
    edges: Vec<GridEdge>,
}

impl GridGraph {
    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn vertices(&self) -> &[GridVertex] {
        &self.vertices
    }

    /// Sorted; boundary edges are included.
    pub fn edges(&self) -> &[GridEdge] {
        &self.edges
    }

    pub fn endpoints(&self, e: &GridEdge) -> (GridVertex, GridVertex) {
        e.endpoints(self.board.n(), self.board.k())
    }

    pub fn contains_edge(&self, e: &GridEdge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = &GridVertex> {
        self.vertices.iter().filter(|v| v.is_interior())
    }

    /// The four edges at an interior vertex, as `[left, right, up, down]`.
    pub fn incident(&self, v: GridVertex) -> [GridEdge; 4] {
        let (n, k) = (self.board.n(), self.board.k());
        let (board, row, col) = (v.board, v.row, v.col);
        let left = if col == 1 {
            GridEdge::Left { board, row }
        } else {
            GridEdge::Horizontal { board, row, col: col - 1 }
        };
        let right = if col == n {
            GridEdge::Chaining { board, row }
        } else {
            GridEdge::Horizontal { board, row, col }
        };
        let up = if row == 1 {
            GridEdge::Top { board, col }
        } else {
            GridEdge::Vertical { board, row: row - 1, col }
        };
        let down = if row == n {
            GridEdge::Chaining {
                board: (board + k - 2) % k + 1,
                row: col,
            }
        } else {
            GridEdge::Vertical { board, row, col }
        };
        [left, right, up, down]
    }
}

pub fn build_grid_graph(board: &BoardSpec) -> Result<GridGraph> {
    require_even_circular(board)?;
    let (n, k) = (board.n(), board.k());
    let mut vertices = Vec::with_capacity(k * (n * n + 2 * n));
    let mut edges = Vec::with_capacity(k * (2 * n * (n - 1) + 3 * n));
    for board in 1..=k {
        for i in 0..=n {
            for j in 0..=n {
                if i > 0 || j > 0 {
                    vertices.push(GridVertex::new(board, i, j));
                }
            }
        }
        for i in 1..=n {
            edges.push(GridEdge::Chaining { board, row: i });
            edges.push(GridEdge::Left { board, row: i });
            edges.push(GridEdge::Top { board, col: i });
            for j in 1..n {
                edges.push(GridEdge::Horizontal { board, row: i, col: j });
                edges.push(GridEdge::Vertical { board, row: j, col: i });
            }
        }
    }
    edges.sort_unstable();
    Ok(GridGraph {
        board: *board,
        vertices,
        edges,
    })
}
