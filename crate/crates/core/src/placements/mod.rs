//! Non-attacking rook placements and their brute-force enumeration, plus the
//! equivalent descriptions of maximum placements: 0/1 matrix tuples,
//! one-line notation and matchings on the chain graph.

mod matching;
mod oneline;
pub(crate) mod perm;

pub use matching::{build_chain_graph, enumerate_matchings, ChainEdge, ChainGraph, ChainMatching, ChainVertex};
pub use oneline::OneLine;
pub use perm::ChainedPermutation;

use std::ops::ControlFlow;

use crate::board::{attacks, BoardSpec, Composition, Square};
use crate::counting::BigCount;
use crate::error::{Error, Result, Validation};

/// A set of occupied squares, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RookPlacement {
    board: BoardSpec,
    squares: Vec<Square>,
}

impl RookPlacement {
    /// Sorts and deduplicates `squares`; only checks that they are on the
    /// board, not that they are non-attacking.
    pub fn new(board: BoardSpec, mut squares: Vec<Square>) -> Result<Self> {
        for &s in &squares {
            board.check_square(s)?;
        }
        squares.sort_unstable();
        squares.dedup();
        Ok(Self { board, squares })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn squares(&self) -> &[Square] {
        &self.squares
    }

    pub fn len(&self) -> usize {
        self.squares.len()
    }

    pub fn is_empty(&self) -> bool {
        self.squares.is_empty()
    }

    pub fn composition(&self) -> Composition {
        let mut parts = vec![0; self.board.k()];
        for s in &self.squares {
            parts[s.board - 1] += 1;
        }
        Composition(parts)
    }

    pub fn is_valid(&self) -> bool {
        validate_placement(self)
    }

    /// One diagnostic per attacking pair.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        for (i, &s) in self.squares.iter().enumerate() {
            if attacks(&self.board, s, s).unwrap_or(true) {
                v.push(format!("rook at {s} attacks itself"));
            }
            for &t in &self.squares[i + 1..] {
                if attacks(&self.board, s, t).unwrap_or(true) {
                    v.push(format!("rooks at {s} and {t} attack each other"));
                }
            }
        }
        v
    }
}

/// True iff no two rooks attack each other and no rook attacks itself.
pub fn validate_placement(p: &RookPlacement) -> bool {
    let b = &p.board;
    let sq = &p.squares;
    for (i, &s) in sq.iter().enumerate() {
        if attacks(b, s, s).unwrap_or(true) {
            return false;
        }
        for &t in &sq[i + 1..] {
            if attacks(b, s, t).unwrap_or(true) {
                return false;
            }
        }
    }
    true
}

pub fn placement_to_matrices(p: &RookPlacement) -> Result<ChainedPermutation> {
    ChainedPermutation::from_placement(p)
}

pub fn matrices_to_placement(cp: &ChainedPermutation) -> RookPlacement {
    cp.to_placement()
}

pub fn to_one_line(cp: &ChainedPermutation) -> OneLine {
    OneLine::from_permutation(cp)
}

pub fn from_one_line(o: &OneLine) -> Result<ChainedPermutation> {
    o.to_permutation()
}

pub fn validate_one_line(o: &OneLine) -> crate::error::Validation {
    o.validate()
}

pub fn to_matching(cp: &ChainedPermutation) -> ChainMatching {
    ChainMatching::from_permutation(cp)
}

pub fn from_matching(m: &ChainMatching) -> Result<ChainedPermutation> {
    m.to_permutation()
}

/// Depth-first search over rows in (board, row) order. Each row either
/// takes a rook in one of its free columns (ascending) or stays empty,
/// which yields placements in lexicographic order of their square lists.
struct Search<'a, F> {
    board: BoardSpec,
    target: usize,
    // bit c-1 set: row / column c of that board is occupied
    rows: Vec<u32>,
    cols: Vec<u32>,
    chosen: Vec<Square>,
    visit: &'a mut F,
}

impl<F: FnMut(&[Square]) -> ControlFlow<()>> Search<'_, F> {
    fn run(&mut self, slot: usize) -> ControlFlow<()> {
        let (n, k) = (self.board.n(), self.board.k());
        let need = self.target - self.chosen.len();
        if need == 0 {
            return (self.visit)(&self.chosen);
        }
        if need > n * k - slot {
            return ControlFlow::Continue(());
        }
        let b = slot / n;
        let r = slot % n;
        let prev_rows = self.board.prev(b + 1).map(|p| self.rows[p - 1]).unwrap_or(0);
        let next_cols = self.board.next(b + 1).map(|q| self.cols[q - 1]).unwrap_or(0);
        let row_blocked = self.rows[b] & (1 << r) != 0 || next_cols & (1 << r) != 0;
        if !row_blocked {
            let self_chained = self.board.next(b + 1) == Some(b + 1);
            for c in 0..n {
                if self.cols[b] & (1 << c) != 0 || prev_rows & (1 << c) != 0 {
                    continue;
                }
                if self_chained && c == r {
                    continue;
                }
                self.rows[b] |= 1 << r;
                self.cols[b] |= 1 << c;
                self.chosen.push(Square::new(b + 1, r + 1, c + 1));
                let flow = self.run(slot + 1);
                self.chosen.pop();
                self.rows[b] &= !(1 << r);
                self.cols[b] &= !(1 << c);
                flow?;
            }
        }
        self.run(slot + 1)
    }
}

fn check_count(board: &BoardSpec, m: usize) -> Result<()> {
    if m > board.n() * board.k() {
        return Err(Error::Domain(format!(
            "cannot place {m} rooks on {board}: only {} rows",
            board.n() * board.k()
        )));
    }
    if board.n() > 32 {
        return Err(Error::Domain(format!("brute force supports n <= 32, got {}", board.n())));
    }
    Ok(())
}

/// Calls `visit` with every non-attacking placement of `m` rooks, in
/// lexicographic order of the sorted square lists. Return
/// `ControlFlow::Break` from `visit` to stop early.
pub fn visit_placements<F>(board: &BoardSpec, m: usize, mut visit: F) -> Result<()>
where
    F: FnMut(&[Square]) -> ControlFlow<()>,
{
    check_count(board, m)?;
    let mut search = Search {
        board: *board,
        target: m,
        rows: vec![0; board.k()],
        cols: vec![0; board.k()],
        chosen: Vec::with_capacity(m),
        visit: &mut visit,
    };
    let _ = search.run(0);
    Ok(())
}

pub fn enumerate_placements(board: &BoardSpec, m: usize) -> Result<Vec<RookPlacement>> {
    let mut out = Vec::new();
    visit_placements(board, m, |sq| {
        out.push(RookPlacement {
            board: *board,
            squares: sq.to_vec(),
        });
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

pub fn count_placements_brute(board: &BoardSpec, m: usize) -> Result<BigCount> {
    let mut count: u64 = 0;
    visit_placements(board, m, |_| {
        count += 1;
        ControlFlow::Continue(())
    })?;
    Ok(BigCount::from(count))
}

pub fn enumerate_maximum_placements(board: &BoardSpec) -> Vec<RookPlacement> {
    enumerate_placements(board, board.max_rooks()).expect("max_rooks is always in range")
}
