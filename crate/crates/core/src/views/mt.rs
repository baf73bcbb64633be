use crate::asm::ChainedAsm;
use crate::board::BoardSpec;
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;

use super::require_even_circular;

/// One triangle per consecutive pair of boards; row `m` (0-based) of a
/// triangle holds `m + 1` increasing values in `1..=2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonotoneTriangleChain {
    board: BoardSpec,
    triangles: Vec<Vec<Vec<usize>>>,
}

impl MonotoneTriangleChain {
    /// Checks only the number of triangles and rows.
    pub fn new(board: BoardSpec, triangles: Vec<Vec<Vec<usize>>>) -> Result<Self> {
        require_even_circular(&board)?;
        if triangles.len() != board.k() / 2 {
            return Err(Error::Domain(format!(
                "expected {} triangles, got {}",
                board.k() / 2,
                triangles.len()
            )));
        }
        if let Some(t) = triangles.iter().position(|t| t.len() != board.n()) {
            return Err(Error::Domain(format!(
                "triangle {} has {} rows, expected {}",
                t + 1,
                triangles[t].len(),
                board.n()
            )));
        }
        Ok(Self { board, triangles })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn triangles(&self) -> &[Vec<Vec<usize>>] {
        &self.triangles
    }

    /// Each triangle must be a strict Gelfand-Tsetlin pattern with entries
    /// in `1..=2n`, and no `i <= n` may lie in the bottom row of triangle
    /// `l` while `2n - i + 1` lies in the bottom row of triangle `l - 1`
    /// (cyclically).
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let n = self.board.n();
        for (l, t) in self.triangles.iter().enumerate() {
            for (m, row) in t.iter().enumerate() {
                if row.len() != m + 1 {
                    v.push(format!("triangle {} row {} has {} entries", l + 1, m + 1, row.len()));
                    continue;
                }
                if row.iter().any(|&x| x == 0 || x > 2 * n) {
                    v.push(format!("triangle {} row {} has an entry outside 1..={}", l + 1, m + 1, 2 * n));
                }
                if row.windows(2).any(|w| w[0] >= w[1]) {
                    v.push(format!("triangle {} row {} is not strictly increasing", l + 1, m + 1));
                }
                if m > 0 && t[m - 1].len() == m {
                    let up = &t[m - 1];
                    if (0..m).any(|j| !(row[j] <= up[j] && up[j] <= row[j + 1])) {
                        v.push(format!(
                            "triangle {} rows {} and {} do not interlace",
                            l + 1,
                            m,
                            m + 1
                        ));
                    }
                }
            }
        }
        if !v.is_valid() {
            return v;
        }
        let h = self.triangles.len();
        for l in 0..h {
            let bottom = &self.triangles[l][n - 1];
            let prev_bottom = &self.triangles[(l + h - 1) % h][n - 1];
            for &i in bottom.iter().filter(|&&i| i <= n) {
                if prev_bottom.contains(&(2 * n - i + 1)) {
                    v.push(format!(
                        "bottom row of triangle {} has {i} while the previous triangle's has {}",
                        l + 1,
                        2 * n - i + 1
                    ));
                }
            }
        }
        v
    }
}

/// Board `2l - 1` next to board `2l` turned clockwise, as an `n x 2n` array
/// of rows.
pub fn concatenated_pairs(a: &ChainedAsm) -> Result<Vec<Vec<Vec<i8>>>> {
    require_even_circular(a.board())?;
    let n = a.board().n();
    Ok(a.matrices()
        .chunks(2)
        .map(|pair| {
            let right = pair[1].rotate_cw();
            (0..n).map(|i| [pair[0].row(i), right.row(i)].concat()).collect()
        })
        .collect())
}

pub fn to_monotone_triangles(a: &ChainedAsm) -> Result<MonotoneTriangleChain> {
    let n = a.board().n();
    let triangles = concatenated_pairs(a)?
        .into_iter()
        .map(|b| {
            let mut partial = vec![0i32; 2 * n];
            b.iter()
                .map(|row| {
                    for (p, &x) in partial.iter_mut().zip(row) {
                        *p += x as i32;
                    }
                    (0..2 * n).filter(|&j| partial[j] == 1).map(|j| j + 1).collect()
                })
                .collect()
        })
        .collect();
    Ok(MonotoneTriangleChain {
        board: *a.board(),
        triangles,
    })
}

pub fn from_monotone_triangles(t: &MonotoneTriangleChain) -> Result<ChainedAsm> {
    t.validate().into_result()?;
    let n = t.board.n();
    let mut matrices = Vec::with_capacity(t.board.k());
    for tri in &t.triangles {
        let mut prev = vec![0i8; 2 * n];
        let mut left = Matrix::zeros(n);
        let mut right = Matrix::zeros(n);
        for (m, row) in tri.iter().enumerate() {
            let mut ind = vec![0i8; 2 * n];
            for &x in row {
                ind[x - 1] = 1;
            }
            for j in 0..2 * n {
                let d = ind[j] - prev[j];
                if j < n {
                    left.set(m, j, d);
                } else {
                    right.set(m, j - n, d);
                }
            }
            prev = ind;
        }
        matrices.push(left);
        matrices.push(right.rotate_ccw());
    }
    ChainedAsm::new(t.board, matrices)
}

/// Every chain of strict Gelfand-Tsetlin patterns meeting the bottom-row
/// condition, built without reference to matrices.
pub fn enumerate_mt_chains(board: &BoardSpec) -> Result<Vec<MonotoneTriangleChain>> {
    require_even_circular(board)?;
    let n = board.n();
    let mut patterns = Vec::new();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(n);
    gt_patterns(n, 2 * n, &mut rows, &mut patterns);
    let h = board.k() / 2;
    let mut out = Vec::new();
    let mut idx = vec![0usize; h];
    loop {
        let chain = MonotoneTriangleChain {
            board: *board,
            triangles: idx.iter().map(|&i| patterns[i].clone()).collect(),
        };
        if chain.validate().is_valid() {
            out.push(chain);
        }
        let mut p = h;
        loop {
            if p == 0 {
                return Ok(out);
            }
            p -= 1;
            idx[p] += 1;
            if idx[p] < patterns.len() {
                break;
            }
            idx[p] = 0;
        }
    }
}

fn gt_patterns(n: usize, max: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
    if rows.len() == n {
        out.push(rows.clone());
        return;
    }
    let len = rows.len() + 1;
    let above = rows.last().cloned().unwrap_or_default();
    let mut row = Vec::with_capacity(len);
    extend_row(len, max, &above, &mut row, &mut |r| {
        rows.push(r.to_vec());
        gt_patterns(n, max, rows, out);
        rows.pop();
    });
}

/// Strictly increasing rows `r` of length `len` with
/// `r[j] <= above[j] <= r[j+1]`.
fn extend_row(len: usize, max: usize, above: &[usize], row: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    let j = row.len();
    if j == len {
        f(row);
        return;
    }
    let lo = match (row.last(), j.checked_sub(1).and_then(|p| above.get(p))) {
        (Some(&r), Some(&a)) => (r + 1).max(a),
        (Some(&r), None) => r + 1,
        (None, _) => 1,
    };
    let hi = above.get(j).copied().unwrap_or(max);
    for x in lo..=hi {
        row.push(x);
        extend_row(len, max, above, row, f);
        row.pop();
    }
}
