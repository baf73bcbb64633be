use crate::board::{BoardSpec, Square};
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;

use super::RookPlacement;

/// A maximum rook placement written as `k` 0/1 matrices, one per board.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChainedPermutation {
    board: BoardSpec,
    matrices: Vec<Matrix>,
}

impl ChainedPermutation {
    /// Checks shape and the chaining conditions; see [`ChainedPermutation::validate`].
    pub fn new(board: BoardSpec, matrices: Vec<Matrix>) -> Result<Self> {
        let cp = Self::new_unchecked(board, matrices)?;
        cp.validate().into_result()?;
        Ok(cp)
    }

    /// Only checks that there are `k` matrices of side `n`.
    pub fn new_unchecked(board: BoardSpec, matrices: Vec<Matrix>) -> Result<Self> {
        check_dims(&board, &matrices)?;
        Ok(Self { board, matrices })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    /// Entries in {0,1}; for every `i` and board `l`, row `i` of the
    /// previous board plus column `i` of board `l` holds at most one 1; each
    /// row and column holds at most one 1; and the total equals the
    /// maximum number of rooks.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let (n, k) = (self.board.n(), self.board.k());
        for (l, m) in self.matrices.iter().enumerate() {
            if let Some(pos) = m.entries().iter().position(|&x| x != 0 && x != 1) {
                v.push(format!(
                    "board {}: entry ({}, {}) is {}, expected 0 or 1",
                    l + 1,
                    pos / n + 1,
                    pos % n + 1,
                    m.entries()[pos]
                ));
            }
            for i in 0..n {
                if m.row_sum(i) > 1 {
                    v.push(format!("board {}: row {} holds more than one 1", l + 1, i + 1));
                }
                if m.col_sum(i) > 1 {
                    v.push(format!("board {}: column {} holds more than one 1", l + 1, i + 1));
                }
            }
        }
        if !v.is_valid() {
            return v;
        }
        for l in 1..=k {
            let Some(p) = self.board.prev(l) else { continue };
            let (prev, cur) = (&self.matrices[p - 1], &self.matrices[l - 1]);
            for i in 0..n {
                if prev.row_sum(i) + cur.col_sum(i) > 1 {
                    v.push(format!(
                        "row {} of board {p} and column {} of board {l} are both occupied",
                        i + 1,
                        i + 1
                    ));
                }
            }
        }
        let total: i32 = self.matrices.iter().map(Matrix::total).sum();
        if total as usize != self.board.max_rooks() {
            v.push(format!(
                "total of entries is {total}, expected the maximum {}",
                self.board.max_rooks()
            ));
        }
        v
    }

    /// Matrix form of a maximum placement.
    pub fn from_placement(p: &RookPlacement) -> Result<Self> {
        let board = *p.board();
        let max = board.max_rooks();
        if p.len() != max {
            return Err(Error::Constraint(format!(
                "placement has {} rooks, {} short of the maximum {max}",
                p.len(),
                max as isize - p.len() as isize
            )));
        }
        if !p.is_valid() {
            return Err(Error::Invalid(vec!["placement has attacking rooks".into()]));
        }
        let mut matrices = vec![Matrix::zeros(board.n()); board.k()];
        for s in p.squares() {
            matrices[s.board - 1].set(s.row - 1, s.col - 1, 1);
        }
        Self::new(board, matrices)
    }

    pub fn to_placement(&self) -> RookPlacement {
        let n = self.board.n();
        let mut squares = Vec::with_capacity(self.board.max_rooks());
        for (l, m) in self.matrices.iter().enumerate() {
            for i in 0..n {
                for j in 0..n {
                    if m.get(i, j) == 1 {
                        squares.push(Square::new(l + 1, i + 1, j + 1));
                    }
                }
            }
        }
        RookPlacement::new(self.board, squares).expect("matrix entries lie on the board")
    }
}

pub(crate) fn check_dims(board: &BoardSpec, matrices: &[Matrix]) -> Result<()> {
    if matrices.len() != board.k() {
        return Err(Error::Domain(format!(
            "expected {} matrices, got {}",
            board.k(),
            matrices.len()
        )));
    }
    if let Some(bad) = matrices.iter().position(|m| m.size() != board.n()) {
        return Err(Error::Domain(format!(
            "matrix {} has side {}, expected {}",
            bad + 1,
            matrices[bad].size(),
            board.n()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::{canonical_placement, Composition};
    use crate::placements::enumerate_placements;

    #[test]
    fn non_maximum_placement_names_deficit() {
        let b = BoardSpec::circular(5, 3).unwrap();
        let p = canonical_placement(&b, &Composition(vec![1, 4, 1])).unwrap();
        match ChainedPermutation::from_placement(&p) {
            Err(Error::Constraint(msg)) => assert!(msg.contains("1 short"), "{msg}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn round_trip_small() {
        let b = BoardSpec::circular(2, 2).unwrap();
        let all = enumerate_placements(&b, 2).unwrap();
        assert_eq!(all.len(), 8);
        for p in all {
            let cp = ChainedPermutation::from_placement(&p).unwrap();
            assert_eq!(cp.to_placement(), p);
        }
    }

    #[test]
    fn rejects_chained_conflict() {
        let b = BoardSpec::circular(2, 2).unwrap();
        let id = Matrix::from_rows(&[vec![1, 0], vec![0, 1]]).unwrap();
        let cp = ChainedPermutation::new(b, vec![id.clone(), id]);
        assert!(matches!(cp, Err(Error::Invalid(_))));
    }
}
