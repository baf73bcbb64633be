use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::board::BoardSpec;
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;

use super::ChainedPermutation;

/// Vertex `index` (1-based) of row `row`. Rows run `0..=k` on linear
/// boards and `0..k` on circular ones, where row `k` is row 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainVertex {
    pub row: usize,
    pub index: usize,
}

/// The edge of the `chain`-th complete bipartite layer joining vertex `i`
/// of row `chain` to vertex `j` of row `chain - 1`. It stands for entry
/// `(i, j)` of board `chain`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainEdge {
    pub chain: usize,
    pub i: usize,
    pub j: usize,
}

impl ChainEdge {
    pub fn new(chain: usize, i: usize, j: usize) -> Self {
        Self { chain, i, j }
    }

    /// `(upper, lower)` endpoints, after identifying row `k` with row 0 on
    /// circular boards.
    pub fn endpoints(&self, board: &BoardSpec) -> (ChainVertex, ChainVertex) {
        let upper = if board.is_circular() && self.chain == board.k() { 0 } else { self.chain };
        (
            ChainVertex {
                row: upper,
                index: self.i,
            },
            ChainVertex {
                row: self.chain - 1,
                index: self.j,
            },
        )
    }

    pub fn is_loop(&self, board: &BoardSpec) -> bool {
        let (a, b) = self.endpoints(board);
        a == b
    }
}

impl fmt::Display for ChainEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.chain, self.i, self.j)
    }
}

impl FromStr for ChainEdge {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let p: Vec<usize> = s
            .split(':')
            .map(str::parse)
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::parse(format!("bad edge id \"{s}\"")))?;
        match p[..] {
            [chain, i, j] => Ok(Self { chain, i, j }),
            _ => Err(Error::parse(format!("edge id \"{s}\" needs three numbers"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainGraph {
    board: BoardSpec,
    vertices: Vec<ChainVertex>,
    edges: Vec<ChainEdge>,
}

impl ChainGraph {
    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn vertices(&self) -> &[ChainVertex] {
        &self.vertices
    }

    /// All `k n^2` edges, sorted. Parallel edges (circular `k = 2`) and
    /// loops (circular `k = 1`) are kept.
    pub fn edges(&self) -> &[ChainEdge] {
        &self.edges
    }
}

pub fn build_chain_graph(board: &BoardSpec) -> ChainGraph {
    let (n, k) = (board.n(), board.k());
    let rows = if board.is_circular() { k } else { k + 1 };
    let vertices = (0..rows)
        .flat_map(|row| (1..=n).map(move |index| ChainVertex { row, index }))
        .collect();
    let mut edges = Vec::with_capacity(k * n * n);
    for chain in 1..=k {
        for i in 1..=n {
            for j in 1..=n {
                edges.push(ChainEdge { chain, i, j });
            }
        }
    }
    ChainGraph {
        board: *board,
        vertices,
        edges,
    }
}

/// A set of edges of the chain graph with no shared endpoints, no loops,
/// and as many edges as the maximum number of rooks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainMatching {
    board: BoardSpec,
    edges: BTreeSet<ChainEdge>,
}

impl ChainMatching {
    pub fn new(board: BoardSpec, edges: impl IntoIterator<Item = ChainEdge>) -> Result<Self> {
        let m = Self::new_unchecked(board, edges)?;
        m.validate().into_result()?;
        Ok(m)
    }

    /// Only checks that every edge exists in the graph.
    pub fn new_unchecked(board: BoardSpec, edges: impl IntoIterator<Item = ChainEdge>) -> Result<Self> {
        let (n, k) = (board.n(), board.k());
        let edges: BTreeSet<ChainEdge> = edges.into_iter().collect();
        if let Some(e) = edges
            .iter()
            .find(|e| !(1..=k).contains(&e.chain) || !(1..=n).contains(&e.i) || !(1..=n).contains(&e.j))
        {
            return Err(Error::Domain(format!("edge {e} is not in the chain graph of {board}")));
        }
        Ok(Self { board, edges })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn graph(&self) -> ChainGraph {
        build_chain_graph(&self.board)
    }

    pub fn edges(&self) -> &BTreeSet<ChainEdge> {
        &self.edges
    }

    /// Number of vertices the matching leaves uncovered.
    pub fn unmatched(&self) -> usize {
        let rows = if self.board.is_circular() { self.board.k() } else { self.board.k() + 1 };
        rows * self.board.n() - 2 * self.edges.len()
    }

    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let mut covered = BTreeSet::new();
        for e in &self.edges {
            if e.is_loop(&self.board) {
                v.push(format!("edge {e} is a loop"));
                continue;
            }
            let (a, b) = e.endpoints(&self.board);
            for x in [a, b] {
                if !covered.insert(x) {
                    v.push(format!("vertex {} of row {} is covered twice", x.index, x.row));
                }
            }
        }
        let max = self.board.max_rooks();
        if self.edges.len() != max {
            v.push(format!("matching has {} edges, expected {max}", self.edges.len()));
        }
        v
    }

    pub fn from_permutation(cp: &ChainedPermutation) -> Self {
        let n = cp.board().n();
        let mut edges = BTreeSet::new();
        for (l, m) in cp.matrices().iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j) == 1 {
                        edges.insert(ChainEdge::new(l + 1, i + 1, j + 1));
                    }
                }
            }
        }
        Self {
            board: *cp.board(),
            edges,
        }
    }

    pub fn to_permutation(&self) -> Result<ChainedPermutation> {
        self.validate().into_result()?;
        let mut matrices = vec![Matrix::zeros(self.board.n()); self.board.k()];
        for e in &self.edges {
            matrices[e.chain - 1].set(e.i - 1, e.j - 1, 1);
        }
        ChainedPermutation::new(self.board, matrices)
    }
}

/// Every matching of `graph` with `max_rooks` edges, found by a plain
/// vertex-by-vertex search on the multigraph. It knows nothing about
/// boards or rooks beyond the edge list.
pub fn enumerate_matchings(graph: &ChainGraph) -> Vec<ChainMatching> {
    let board = graph.board;
    let index: std::collections::BTreeMap<ChainVertex, usize> =
        graph.vertices.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let nv = graph.vertices.len();
    let mut incident: Vec<Vec<(usize, ChainEdge)>> = vec![Vec::new(); nv];
    for &e in &graph.edges {
        let (a, b) = e.endpoints(&board);
        if a == b {
            continue;
        }
        let (a, b) = (index[&a], index[&b]);
        incident[a.min(b)].push((a.max(b), e));
    }
    let target = board.max_rooks();
    let mut st = MatchSearch {
        incident,
        used: vec![false; nv],
        chosen: Vec::new(),
        skips_left: nv - 2 * target,
        out: Vec::new(),
        board,
    };
    st.run(0);
    st.out
}

struct MatchSearch {
    incident: Vec<Vec<(usize, ChainEdge)>>,
    used: Vec<bool>,
    chosen: Vec<ChainEdge>,
    skips_left: usize,
    out: Vec<ChainMatching>,
    board: BoardSpec,
}

impl MatchSearch {
    fn run(&mut self, v: usize) {
        if v == self.used.len() {
            self.out.push(ChainMatching {
                board: self.board,
                edges: self.chosen.iter().copied().collect(),
            });
            return;
        }
        if self.used[v] {
            return self.run(v + 1);
        }
        for idx in 0..self.incident[v].len() {
            let (w, e) = self.incident[v][idx];
            if self.used[w] {
                continue;
            }
            self.used[w] = true;
            self.chosen.push(e);
            self.run(v + 1);
            self.chosen.pop();
            self.used[w] = false;
        }
        if self.skips_left > 0 {
            self.skips_left -= 1;
            self.run(v + 1);
            self.skips_left += 1;
        }
    }
}
