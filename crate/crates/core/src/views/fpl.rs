use std::collections::{BTreeMap, BTreeSet};

use crate::board::BoardSpec;
use crate::error::{Error, Result, Validation};

use super::grid::{build_grid_graph, GridEdge, GridGraph, GridVertex};
use super::ice::IceConfiguration;

/// A set of edges of the grid graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FplConfiguration {
    board: BoardSpec,
    edges: BTreeSet<GridEdge>,
}

impl FplConfiguration {
    /// Checks only that every edge belongs to the grid graph.
    pub fn new(board: BoardSpec, edges: BTreeSet<GridEdge>) -> Result<Self> {
        let g = build_grid_graph(&board)?;
        if let Some(e) = edges.iter().find(|e| !g.contains_edge(e)) {
            return Err(Error::Domain(format!("{e} is not an edge of the grid graph")));
        }
        Ok(Self { board, edges })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn edges(&self) -> &BTreeSet<GridEdge> {
        &self.edges
    }

    pub fn graph(&self) -> GridGraph {
        build_grid_graph(&self.board).expect("board checked on construction")
    }

    /// The left boundary edge of row `i` is present exactly when `i` is
    /// odd, the top boundary edge of column `j` exactly when `j` is even,
    /// and every interior vertex meets two chosen edges.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let g = self.graph();
        for e in g.edges() {
            let want = match *e {
                GridEdge::Left { row, .. } => row % 2 == 1,
                GridEdge::Top { col, .. } => col % 2 == 0,
                _ => continue,
            };
            if self.edges.contains(e) != want {
                let verb = if want { "missing" } else { "unexpected" };
                v.push(format!("boundary edge {e} is {verb}"));
            }
        }
        for &x in g.interior_vertices() {
            let deg = g.incident(x).iter().filter(|e| self.edges.contains(e)).count();
            if deg != 2 {
                v.push(format!("vertex {x} meets {deg} edges"));
            }
        }
        v
    }
}

pub fn validate_fpl(f: &FplConfiguration) -> Validation {
    f.validate()
}

/// Keeps the edges directed from an even vertex to an odd one.
pub fn to_fpl(c: &IceConfiguration) -> Result<FplConfiguration> {
    c.validate().into_result()?;
    let edges = c
        .heads()
        .iter()
        .filter(|(_, h)| h.is_odd())
        .map(|(e, _)| *e)
        .collect();
    Ok(FplConfiguration {
        board: *c.board(),
        edges,
    })
}

/// Orients kept edges towards their odd endpoint and the rest towards their
/// even endpoint.
pub fn from_fpl(f: &FplConfiguration) -> Result<IceConfiguration> {
    f.validate().into_result()?;
    let g = f.graph();
    let heads: BTreeMap<GridEdge, GridVertex> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = g.endpoints(e);
            let (odd, even) = if a.is_odd() { (a, b) } else { (b, a) };
            (*e, if f.edges.contains(e) { odd } else { even })
        })
        .collect();
    let c = IceConfiguration::new(f.board, heads)?;
    c.validate()
        .into_result()
        .map_err(|e| Error::Invariant(format!("loop configuration gave an invalid orientation: {e}")))?;
    Ok(c)
}

/// Every edge set with the required boundary and degree two at each
/// interior vertex, by backtracking over the non-boundary edges.
pub fn enumerate_fpl(board: &BoardSpec) -> Result<Vec<FplConfiguration>> {
    let g = build_grid_graph(board)?;
    let index: BTreeMap<GridVertex, usize> = g.vertices().iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let nv = g.vertices().len();
    let mut deg = vec![0u8; nv];
    let mut left = vec![0u8; nv];
    let mut fixed = BTreeSet::new();
    let mut free = Vec::new();
    for e in g.edges() {
        let (a, b) = g.endpoints(e);
        let (a, b) = (index[&a], index[&b]);
        let keep = match *e {
            GridEdge::Left { row, .. } => Some(row % 2 == 1),
            GridEdge::Top { col, .. } => Some(col % 2 == 0),
            _ => None,
        };
        match keep {
            Some(true) => {
                deg[a] += 1;
                deg[b] += 1;
                fixed.insert(*e);
            }
            Some(false) => {}
            None => {
                left[a] += 1;
                left[b] += 1;
                free.push((*e, a, b));
            }
        }
    }
    free.sort_by_key(|f| (f.1.max(f.2), f.1.min(f.2)));
    let interior: Vec<bool> = g.vertices().iter().map(GridVertex::is_interior).collect();
    let mut st = FplSearch {
        free,
        interior,
        deg,
        left,
        chosen: Vec::new(),
        fixed,
        board: *board,
        out: Vec::new(),
    };
    st.run(0);
    Ok(st.out)
}

struct FplSearch {
    free: Vec<(GridEdge, usize, usize)>,
    interior: Vec<bool>,
    deg: Vec<u8>,
    // undecided edges at each vertex
    left: Vec<u8>,
    chosen: Vec<GridEdge>,
    fixed: BTreeSet<GridEdge>,
    board: BoardSpec,
    out: Vec<FplConfiguration>,
}

impl FplSearch {
    fn feasible(&self, v: usize) -> bool {
        !self.interior[v] || (self.deg[v] <= 2 && self.deg[v] + self.left[v] >= 2)
    }

    fn run(&mut self, p: usize) {
        if p == self.free.len() {
            let mut edges = self.fixed.clone();
            edges.extend(self.chosen.iter().copied());
            self.out.push(FplConfiguration {
                board: self.board,
                edges,
            });
            return;
        }
        let (e, a, b) = self.free[p];
        self.left[a] -= 1;
        self.left[b] -= 1;
        for take in [false, true] {
            if take {
                self.deg[a] += 1;
                self.deg[b] += 1;
                self.chosen.push(e);
            }
            if self.feasible(a) && self.feasible(b) {
                self.run(p + 1);
            }
            if take {
                self.chosen.pop();
                self.deg[a] -= 1;
                self.deg[b] -= 1;
            }
        }
        self.left[a] += 1;
        self.left[b] += 1;
    }
}
