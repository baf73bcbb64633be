//! Chained alternating sign matrices.

mod enumerate;
mod special;

pub use enumerate::{
    count_chained_asm, enumerate_chained_asm, visit_chained_asm, Limits, SearchOutcome,
};
pub use special::{
    concat_circular_k4, fold_qt, join_linear_odd, split_circular_k4, split_linear_odd, unfold_qt,
};

use crate::board::{BoardSpec, Composition};
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;
use crate::placements::ChainedPermutation;

/// A `k`-tuple of `n x n` matrices with entries in {-1, 0, 1}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChainedAsm {
    board: BoardSpec,
    matrices: Vec<Matrix>,
}

impl ChainedAsm {
    pub fn new(board: BoardSpec, matrices: Vec<Matrix>) -> Result<Self> {
        let a = Self::new_unchecked(board, matrices)?;
        a.validate().into_result()?;
        Ok(a)
    }

    /// Only checks the number and size of the matrices.
    pub fn new_unchecked(board: BoardSpec, matrices: Vec<Matrix>) -> Result<Self> {
        crate::placements::perm::check_dims(&board, &matrices)?;
        Ok(Self { board, matrices })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn matrices(&self) -> &[Matrix] {
        &self.matrices
    }

    pub fn into_matrices(self) -> Vec<Matrix> {
        self.matrices
    }

    /// Checks, in order:
    /// 1. every left-to-right row prefix sum lies in {0, 1};
    /// 2. for every `i` and `m`, the full sum of row `i` of the previous
    ///    board plus the sum of the bottom `m` entries of column `i` lies in
    ///    {0, 1} (the previous board of board 1 is zero on linear boards and
    ///    board `k` on circular ones);
    /// 3. the total equals the maximum number of rooks.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let n = self.board.n();
        for (l, a) in self.matrices.iter().enumerate() {
            if let Some(p) = a.entries().iter().position(|x| !(-1..=1).contains(x)) {
                v.push(format!(
                    "board {}: entry ({}, {}) is {}, expected -1, 0 or 1",
                    l + 1,
                    p / n + 1,
                    p % n + 1,
                    a.entries()[p]
                ));
            }
        }
        if !v.is_valid() {
            return v;
        }
        for (l, a) in self.matrices.iter().enumerate() {
            for i in 0..n {
                let mut s = 0;
                for j in 0..n {
                    s += a.get(i, j) as i32;
                    if s != 0 && s != 1 {
                        v.push(format!(
                            "condition 1: board {} row {} has prefix sum {s} after column {}",
                            l + 1,
                            i + 1,
                            j + 1
                        ));
                        break;
                    }
                }
            }
        }
        for l in 1..=self.board.k() {
            let a = &self.matrices[l - 1];
            let prev = self.board.prev(l).map(|p| &self.matrices[p - 1]);
            for i in 0..n {
                let r = prev.map_or(0, |p| p.row_sum(i));
                let mut s = r;
                for m in 1..=n {
                    s += a.get(n - m, i) as i32;
                    if s != 0 && s != 1 {
                        v.push(format!(
                            "condition 2: row {} of the previous board plus the bottom {m} entries of column {} of board {l} sum to {s}",
                            i + 1,
                            i + 1
                        ));
                        break;
                    }
                }
            }
        }
        let total: i32 = self.matrices.iter().map(Matrix::total).sum();
        if total != self.board.max_rooks() as i32 {
            v.push(format!(
                "condition 3: total is {total}, expected the maximum {}",
                self.board.max_rooks()
            ));
        }
        v
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_valid()
    }

    pub fn has_negative(&self) -> bool {
        self.matrices.iter().any(|m| m.entries().contains(&-1))
    }

    pub fn from_permutation(cp: &ChainedPermutation) -> Self {
        Self {
            board: *cp.board(),
            matrices: cp.matrices().to_vec(),
        }
    }

    /// Defined when there are no -1 entries.
    pub fn to_permutation(&self) -> Result<ChainedPermutation> {
        if self.has_negative() {
            return Err(Error::Constraint("matrix has a -1 entry".into()));
        }
        ChainedPermutation::new(self.board, self.matrices.clone())
    }
}

/// Per-matrix totals.
pub fn asm_sum_composition(a: &ChainedAsm) -> Composition {
    Composition(a.matrices.iter().map(|m| m.total().max(0) as usize).collect())
}

pub fn validate_chained_asm(a: &ChainedAsm) -> Validation {
    a.validate()
}

/// An ordinary alternating sign matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlainAsm(Matrix);

impl PlainAsm {
    pub fn new(m: Matrix) -> Result<Self> {
        let a = PlainAsm(m);
        a.validate().into_result()?;
        Ok(a)
    }

    pub fn new_unchecked(m: Matrix) -> Self {
        PlainAsm(m)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub fn size(&self) -> usize {
        self.0.size()
    }

    /// Every row and column has partial sums in {0, 1} and total 1, which
    /// is the same as summing to 1 with alternating nonzero signs.
    pub fn validate(&self) -> Validation {
        validate_plain(&self.0)
    }

    pub fn is_quarter_turn_symmetric(&self) -> bool {
        self.0.rotate_cw() == self.0
    }
}

fn validate_plain(m: &Matrix) -> Validation {
    let mut v = Validation::ok();
    let n = m.size();
    let mut line = |what: &str, idx: usize, vals: &mut dyn Iterator<Item = i8>| {
        let mut s = 0i32;
        for x in vals {
            if !(-1..=1).contains(&x) {
                v.push(format!("{what} {}: entry {x} out of range", idx + 1));
                return;
            }
            s += x as i32;
            if s != 0 && s != 1 {
                v.push(format!("{what} {}: signs do not alternate starting with 1", idx + 1));
                return;
            }
        }
        if s != 1 {
            v.push(format!("{what} {}: sums to {s}", idx + 1));
        }
    };
    for i in 0..n {
        line("row", i, &mut m.row(i).iter().copied());
        line("column", i, &mut (0..n).map(|r| m.get(r, i)));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i8]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn plain_asm_checks() {
        assert!(PlainAsm::new(mat(&[&[0, 1, 0], &[1, -1, 1], &[0, 1, 0]])).is_ok());
        assert!(PlainAsm::new(mat(&[&[1, 0], &[0, 1]])).is_ok());
        assert!(PlainAsm::new(mat(&[&[0, 1, 0], &[1, 0, 0], &[0, 1, 0]])).is_err());
        assert!(PlainAsm::new(mat(&[&[1, -1, 1], &[0, 1, 0], &[0, 1, 0]])).is_err());
    }

    #[test]
    fn negative_in_first_column_is_rejected() {
        let b = BoardSpec::linear(2, 1).unwrap();
        let a = ChainedAsm::new_unchecked(b, vec![mat(&[&[-1, 1], &[1, 1]])]).unwrap();
        let v = a.validate();
        assert!(v.diagnostics[0].starts_with("condition 1"), "{v:?}");
    }

    #[test]
    fn permutations_are_chained_asms() {
        let b = BoardSpec::circular(2, 2).unwrap();
        for p in crate::placements::enumerate_maximum_placements(&b) {
            let cp = ChainedPermutation::from_placement(&p).unwrap();
            let a = ChainedAsm::from_permutation(&cp);
            assert!(a.is_valid());
            assert_eq!(asm_sum_composition(&a), p.composition());
            assert_eq!(a.to_permutation().unwrap(), cp);
        }
    }
}
