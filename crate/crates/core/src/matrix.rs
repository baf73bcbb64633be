use std::fmt;

use crate::error::{Error, Result};

/// Dense square matrix of small signed entries, row-major, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    n: usize,
    data: Vec<i8>,
}

impl Matrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Domain(format!(
                "row {} has {} entries, expected {n}",
                bad + 1,
                rows[bad].len()
            )));
        }
        Ok(Self {
            n,
            data: rows.concat(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i8) {
        self.data[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i8>> {
        self.data.chunks(self.n.max(1)).map(<[i8]>::to_vec).collect()
    }

    pub fn entries(&self) -> &[i8] {
        &self.data
    }

    pub fn row_sum(&self, i: usize) -> i32 {
        self.row(i).iter().map(|&x| x as i32).sum()
    }

    pub fn col_sum(&self, j: usize) -> i32 {
        (0..self.n).map(|i| self.get(i, j) as i32).sum()
    }

    pub fn total(&self) -> i32 {
        self.data.iter().map(|&x| x as i32).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// Quarter turn clockwise: entry `(i, j)` moves to `(j, n-1-i)`.
    pub fn rotate_cw(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, n - 1 - i, self.get(i, j));
            }
        }
        out
    }

    /// Quarter turn counterclockwise, the inverse of [`Matrix::rotate_cw`].
    pub fn rotate_ccw(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.set(n - 1 - j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn rotate_half(&self) -> Self {
        let mut out = self.clone();
        out.data.reverse();
        out
    }

    /// Copy of the `size x size` block whose top-left corner is `(top, left)`.
    pub fn block(&self, top: usize, left: usize, size: usize) -> Self {
        let mut out = Self::zeros(size);
        for i in 0..size {
            for j in 0..size {
                out.set(i, j, self.get(top + i, left + j));
            }
        }
        out
    }

    pub fn put_block(&mut self, top: usize, left: usize, block: &Matrix) {
        for i in 0..block.n {
            for j in 0..block.n {
                self.set(top + i, left + j, block.get(i, j));
            }
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i8]]) -> Matrix {
        Matrix::from_rows(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn quarter_turn_clockwise_sends_first_column_to_first_row_reversed() {
        let a = m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 9]]);
        assert_eq!(a.rotate_cw(), m(&[&[7, 4, 1], &[8, 5, 2], &[9, 6, 3]]));
        assert_eq!(a.rotate_cw().rotate_ccw(), a);
        assert_eq!(a.rotate_cw().rotate_cw(), a.rotate_half());
        assert_eq!(a.rotate_ccw(), a.rotate_half().rotate_cw());
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(&[vec![1, 0], vec![0]]).is_err());
    }
}
