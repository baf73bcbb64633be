use std::ops::ControlFlow;
use std::time::Instant;

use crate::board::BoardSpec;
use crate::counting::BigCount;
use crate::error::Result;
use crate::matrix::Matrix;

use super::ChainedAsm;

/// Optional stopping conditions for the search.
#[derive(Debug, Clone, Copy, Default)]
pub struct Limits {
    pub deadline: Option<Instant>,
    pub max_nodes: Option<u64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOutcome {
    /// Number of cell assignments tried.
    pub nodes: u64,
    pub found: u64,
    /// False if a limit stopped the search or `visit` returned `Break`.
    pub complete: bool,
}

const NEG: i32 = i32::MIN / 4;

/// Cell-by-cell search in board order, row-major within a board.
///
/// A column's top-down partial sums `T_0 = 0, T_1, .., T_{n-1}` must all lie
/// in `{D-1, D}` where `D` is the column total plus the matching row total
/// of the previous board, and `D` itself must be 0 or 1. `f0` / `f1` record
/// whether the partial sums seen so far fit the window for `D = 0` / `D = 1`.
/// At each row end a chain of per-board upper bounds is maximised to prune
/// assignments that can no longer reach the maximum total.
struct Engine<'a, F> {
    n: usize,
    k: usize,
    circular: bool,
    target: i32,
    cells: Vec<i8>,
    row_sum: Vec<i8>,
    col_t: Vec<i8>,
    f0: Vec<bool>,
    f1: Vec<bool>,
    total: i32,
    nodes: u64,
    found: u64,
    limits: Limits,
    stopped: bool,
    visit: &'a mut F,
}

impl<F: FnMut(&[i8]) -> ControlFlow<()>> Engine<'_, F> {
    /// Row total of the board chained before `b`, if already known.
    fn known_r(&self, b: usize, j: usize) -> Option<i32> {
        match (b, self.circular) {
            (0, false) => Some(0),
            (0, true) => None,
            _ => Some(self.row_sum[(b - 1) * self.n + j] as i32),
        }
    }

    fn window_ok(&self, idx: usize, r: i32, c: i32) -> bool {
        match r + c {
            0 => self.f0[idx],
            1 => self.f1[idx],
            _ => false,
        }
    }

    fn go(&mut self, c: usize, pref: i8) -> ControlFlow<()> {
        let (n, k) = (self.n, self.k);
        let nn = n * n;
        if c == k * nn {
            if self.total == self.target {
                self.found += 1;
                return (self.visit)(&self.cells);
            }
            return ControlFlow::Continue(());
        }
        self.nodes += 1;
        if self.nodes & 0xfff == 0 && self.over_limit() {
            self.stopped = true;
            return ControlFlow::Break(());
        }
        let b = c / nn;
        let r = (c % nn) / n;
        let j = c % n;
        let idx = b * n + j;
        let choices: [i8; 2] = if pref == 0 { [0, 1] } else { [-1, 0] };
        for v in choices {
            let (t_old, f0_old, f1_old) = (self.col_t[idx], self.f0[idx], self.f1[idx]);
            let t = t_old + v;
            if r + 1 < n {
                let f0 = f0_old && (t == -1 || t == 0);
                let f1 = f1_old && (t == 0 || t == 1);
                if !f0 && !f1 {
                    continue;
                }
                self.f0[idx] = f0;
                self.f1[idx] = f1;
            } else {
                let ok = match self.known_r(b, j) {
                    Some(rr) => self.window_ok(idx, rr, t as i32),
                    None => self.window_ok(idx, 0, t as i32) || self.window_ok(idx, 1, t as i32),
                };
                if !ok {
                    continue;
                }
            }
            self.col_t[idx] = t;
            self.cells[c] = v;
            self.total += v as i32;
            let p = pref + v;
            let flow = if j + 1 == n {
                self.row_sum[b * n + r] = p;
                if self.row_end_ok(b, r) {
                    self.go(c + 1, 0)
                } else {
                    ControlFlow::Continue(())
                }
            } else {
                self.go(c + 1, p)
            };
            self.total -= v as i32;
            self.cells[c] = 0;
            self.col_t[idx] = t_old;
            self.f0[idx] = f0_old;
            self.f1[idx] = f1_old;
            flow?;
        }
        ControlFlow::Continue(())
    }

    fn over_limit(&self) -> bool {
        self.limits.max_nodes.is_some_and(|m| self.nodes >= m)
            || self.limits.deadline.is_some_and(|d| Instant::now() >= d)
    }

    fn row_end_ok(&self, b: usize, r: usize) -> bool {
        let (n, k) = (self.n, self.k);
        // On circular boards the pairing of board k's rows with board 1's
        // columns can only be checked once both are complete.
        if self.circular && b == k - 1 {
            let rows: &[usize] = if k == 1 {
                if r + 1 < n {
                    &[]
                } else {
                    &ALL_ROWS[..n]
                }
            } else {
                std::slice::from_ref(&r)
            };
            for &i in rows {
                let rr = self.row_sum[b * n + i] as i32;
                if !self.window_ok(i, rr, self.col_t[i] as i32) {
                    return false;
                }
            }
        }
        self.upper_bound(b, r) >= self.target
    }

    fn rows_done(&self, l: usize, b: usize, r: usize) -> usize {
        use std::cmp::Ordering::*;
        match l.cmp(&b) {
            Less => self.n,
            Equal => r + 1,
            Greater => 0,
        }
    }

    fn row_ub(&self, l: usize, i: usize, done: usize) -> i32 {
        if i < done {
            self.row_sum[l * self.n + i] as i32
        } else {
            1
        }
    }

    fn col_ub(&self, l: usize, j: usize, done: usize, prev_done: usize) -> i32 {
        let n = self.n;
        let idx = l * n + j;
        if done == n {
            return self.col_t[idx] as i32;
        }
        let r = match self.board_prev(l) {
            Some(p) if j < prev_done => self.row_sum[p * n + j] as i32,
            _ => 0,
        };
        if done == 0 {
            return 1 - r;
        }
        let d_max = if self.f1[idx] { 1 } else { 0 };
        (self.col_t[idx] as i32 + (n - done) as i32).min(d_max - r)
    }

    fn board_prev(&self, l: usize) -> Option<usize> {
        match (l, self.circular) {
            (0, false) => None,
            (0, true) => Some(self.k - 1),
            _ => Some(l - 1),
        }
    }

    /// Largest total still reachable, as the optimum of a chain of integer
    /// variables `s_l` (board totals) with per-board bounds and a cap on
    /// every chained pair `s_p + s_l`.
    fn upper_bound(&self, b: usize, r: usize) -> i32 {
        let (n, k) = (self.n, self.k);
        let mut lo = vec![0i32; k];
        let mut hi = vec![0i32; k];
        let mut cap = vec![i32::MAX; k];
        for l in 0..k {
            let done = self.rows_done(l, b, r);
            let prev_done = self.board_prev(l).map_or(0, |p| self.rows_done(p, b, r));
            let rows: i32 = (0..n).map(|i| self.row_ub(l, i, done)).sum();
            let cols: i32 = (0..n).map(|j| self.col_ub(l, j, done, prev_done)).sum();
            let fixed: i32 = (0..done).map(|i| self.row_sum[l * n + i] as i32).sum();
            hi[l] = rows.min(cols).min(n as i32);
            lo[l] = fixed;
            if done == n {
                lo[l] = hi[l];
            }
            if hi[l] < lo[l] {
                return NEG;
            }
            if let Some(p) = self.board_prev(l) {
                cap[l] = (0..n)
                    .map(|i| (self.row_ub(p, i, prev_done) + self.col_ub(l, i, done, prev_done)).min(1))
                    .sum();
            }
        }
        let chain = |first: Option<i32>| -> Vec<i32> {
            let mut f = vec![NEG; n + 1];
            for s in lo[0]..=hi[0] {
                if first.is_none_or(|x| x == s) {
                    f[s as usize] = s;
                }
            }
            for l in 1..k {
                let mut g = vec![NEG; n + 1];
                for s in lo[l]..=hi[l] {
                    let best = (0..=n as i32)
                        .filter(|&t| t + s <= cap[l])
                        .map(|t| f[t as usize])
                        .max()
                        .unwrap_or(NEG);
                    if best > NEG {
                        g[s as usize] = best + s;
                    }
                }
                f = g;
            }
            f
        };
        if !self.circular {
            return chain(None).into_iter().max().unwrap_or(NEG);
        }
        let mut best = NEG;
        for s0 in lo[0]..=hi[0] {
            let f = chain(Some(s0));
            for (t, &val) in f.iter().enumerate() {
                let t = t as i32;
                let wrap_ok = if k == 1 { 2 * s0 <= cap[0] } else { t + s0 <= cap[0] };
                if val > NEG && wrap_ok {
                    best = best.max(val);
                }
            }
        }
        best
    }
}

const ALL_ROWS: [usize; 64] = {
    let mut a = [0; 64];
    let mut i = 0;
    while i < 64 {
        a[i] = i;
        i += 1;
    }
    a
};

/// Runs the search, handing each chained ASM to `visit` as its entries
/// flattened in board, row, column order. Results arrive in lexicographic
/// order of that flattening with -1 < 0 < 1.
pub fn visit_chained_asm<F>(board: &BoardSpec, limits: Limits, mut visit: F) -> Result<SearchOutcome>
where
    F: FnMut(&[i8]) -> ControlFlow<()>,
{
    let (n, k) = (board.n(), board.k());
    if n > 64 {
        return Err(crate::error::Error::Domain(format!("search supports n <= 64, got {n}")));
    }
    let mut e = Engine {
        n,
        k,
        circular: board.is_circular(),
        target: board.max_rooks() as i32,
        cells: vec![0; k * n * n],
        row_sum: vec![0; k * n],
        col_t: vec![0; k * n],
        f0: vec![true; k * n],
        f1: vec![true; k * n],
        total: 0,
        nodes: 0,
        found: 0,
        limits,
        stopped: false,
        visit: &mut visit,
    };
    let flow = e.go(0, 0);
    Ok(SearchOutcome {
        nodes: e.nodes,
        found: e.found,
        complete: flow.is_continue() && !e.stopped,
    })
}

pub fn count_chained_asm(board: &BoardSpec) -> BigCount {
    let outcome = visit_chained_asm(board, Limits::default(), |_| ControlFlow::Continue(()))
        .expect("board size checked by BoardSpec");
    BigCount::from(outcome.found)
}

pub fn enumerate_chained_asm(board: &BoardSpec) -> Vec<ChainedAsm> {
    let mut out = Vec::new();
    visit_chained_asm(board, Limits::default(), |cells| {
        out.push(ChainedAsm::from_flat(board, cells));
        ControlFlow::Continue(())
    })
    .expect("board size checked by BoardSpec");
    out
}

impl ChainedAsm {
    /// Builds from entries flattened in board, row, column order, without
    /// validating.
    pub fn from_flat(board: &BoardSpec, cells: &[i8]) -> Self {
        let n = board.n();
        let matrices = cells
            .chunks(n * n)
            .map(|chunk| {
                let rows: Vec<Vec<i8>> = chunk.chunks(n).map(<[i8]>::to_vec).collect();
                Matrix::from_rows(&rows).expect("square chunk")
            })
            .collect();
        ChainedAsm {
            board: *board,
            matrices,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Shape;

    fn count(shape: Shape, n: usize, k: usize) -> u64 {
        let b = BoardSpec::new(shape, n, k).unwrap();
        count_chained_asm(&b).try_into().unwrap()
    }

    #[test]
    fn small_table_cells() {
        assert_eq!(count(Shape::Linear, 3, 1), 7);
        assert_eq!(count(Shape::Linear, 2, 2), 17);
        assert_eq!(count(Shape::Circular, 2, 3), 14);
        assert_eq!(count(Shape::Circular, 2, 2), 10);
        assert_eq!(count(Shape::Circular, 3, 1), 20);
        assert_eq!(count(Shape::Circular, 1, 1), 1);
    }

    #[test]
    fn every_result_validates_and_order_is_strict() {
        for shape in [Shape::Linear, Shape::Circular] {
            for (n, k) in [(2, 1), (2, 2), (2, 3), (3, 2), (1, 4)] {
                let b = BoardSpec::new(shape, n, k).unwrap();
                let all = enumerate_chained_asm(&b);
                for a in &all {
                    assert!(a.is_valid(), "{b}: {:?}", a.validate());
                }
                for w in all.windows(2) {
                    assert!(w[0].matrices() < w[1].matrices());
                }
            }
        }
    }

    #[test]
    fn node_limit_stops_search() {
        let b = BoardSpec::circular(3, 3).unwrap();
        let limits = Limits {
            max_nodes: Some(5000),
            ..Limits::default()
        };
        let out = visit_chained_asm(&b, limits, |_| ControlFlow::Continue(())).unwrap();
        assert!(!out.complete);
        assert!(out.nodes <= 8192);
    }
}
