//! Board geometry: the chained boards themselves, squares, the attack
//! relation, and per-board rook-count compositions.
//!
//! Boards, rows and columns are numbered from 1 everywhere in the public
//! model, so coordinates can be compared with hand-drawn figures directly.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::placements::RookPlacement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape {
    /// Open chain: board `i-1` attacks board `i` for `2 <= i <= k`.
    Linear,
    /// Closed chain: additionally board `k` attacks board 1.
    Circular,
}

impl Shape {
    pub fn as_str(self) -> &'static str {
        match self {
            Shape::Linear => "linear",
            Shape::Circular => "circular",
        }
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" => Ok(Shape::Linear),
            "circular" => Ok(Shape::Circular),
            other => Err(Error::Domain(format!("unknown shape {other:?}"))),
        }
    }
}

/// `k` chained `n x n` boards in a linear or circular configuration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BoardSpec {
    shape: Shape,
    n: usize,
    k: usize,
}

impl BoardSpec {
    pub fn new(shape: Shape, n: usize, k: usize) -> Result<Self> {
        if n == 0 || k == 0 {
            return Err(Error::Domain(format!(
                "board needs n >= 1 and k >= 1, got n={n}, k={k}"
            )));
        }
        Ok(Self { shape, n, k })
    }

    pub fn linear(n: usize, k: usize) -> Result<Self> {
        Self::new(Shape::Linear, n, k)
    }

    pub fn circular(n: usize, k: usize) -> Result<Self> {
        Self::new(Shape::Circular, n, k)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_circular(&self) -> bool {
        self.shape == Shape::Circular
    }

    pub fn cell_count(&self) -> usize {
        self.n * self.n * self.k
    }

    /// The board whose rows attack the columns of `board`, if any.
    /// On a circular board with `k = 1` this is the board itself.
    pub fn prev(&self, board: usize) -> Option<usize> {
        if board > 1 {
            Some(board - 1)
        } else if self.is_circular() {
            Some(self.k)
        } else {
            None
        }
    }

    /// The board whose columns are attacked by the rows of `board`.
    pub fn next(&self, board: usize) -> Option<usize> {
        if board < self.k {
            Some(board + 1)
        } else if self.is_circular() {
            Some(1)
        } else {
            None
        }
    }

    /// Largest number of pairwise non-attacking rooks: `n * ceil(k/2)` on a
    /// linear board, `floor(n*k/2)` on a circular one.
    pub fn max_rooks(&self) -> usize {
        match self.shape {
            Shape::Linear => self.n * self.k.div_ceil(2),
            Shape::Circular => self.n * self.k / 2,
        }
    }

    pub fn check_square(&self, s: Square) -> Result<()> {
        let ok = (1..=self.k).contains(&s.board)
            && (1..=self.n).contains(&s.row)
            && (1..=self.n).contains(&s.col);
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("square {s} is off the board {self}")))
        }
    }

    /// Every square in (board, row, col) lexicographic order.
    pub fn squares(&self) -> impl Iterator<Item = Square> + '_ {
        (1..=self.k).flat_map(move |board| {
            (1..=self.n)
                .flat_map(move |row| (1..=self.n).map(move |col| Square { board, row, col }))
        })
    }
}

impl fmt::Display for BoardSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(n={}, k={})", self.shape, self.n, self.k)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub board: usize,
    pub row: usize,
    pub col: usize,
}

impl Square {
    pub fn new(board: usize, row: usize, col: usize) -> Self {
        Self { board, row, col }
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.board, self.row, self.col)
    }
}

/// Whether rooks on `s` and `t` attack each other.
///
/// Two rooks attack when they share a row or column of one board, or when
/// one sits in row `j` of a board and the other in column `j` of the next
/// board in the chain. Called with `s == t` this reports the self-attack of
/// a diagonal square on a circular board with `k = 1`, where a board is
/// chained to itself.
pub fn attacks(board: &BoardSpec, s: Square, t: Square) -> Result<bool> {
    board.check_square(s)?;
    board.check_square(t)?;
    if s == t {
        return Ok(board.next(s.board) == Some(s.board) && s.row == s.col);
    }
    if s.board == t.board && (s.row == t.row || s.col == t.col) {
        return Ok(true);
    }
    let chained = |a: Square, b: Square| board.next(a.board) == Some(b.board) && a.row == b.col;
    Ok(chained(s, t) || chained(t, s))
}

/// Per-board rook counts `(a_1, ..., a_k)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    /// `a_{i-1} + a_i <= n` for every i, with `a_0 = 0` (linear) or
    /// `a_0 = a_k` (circular); also checks the length and each part.
    pub fn is_admissible(&self, board: &BoardSpec) -> bool {
        let a = &self.0;
        if a.len() != board.k() || a.iter().any(|&x| x > board.n()) {
            return false;
        }
        (0..a.len()).all(|i| {
            let prev = match i {
                0 if board.is_circular() => a[a.len() - 1],
                0 => 0,
                _ => a[i - 1],
            };
            prev + a[i] <= board.n()
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All admissible compositions of `m` for `board`, in lexicographic order.
pub fn admissible_compositions(board: &BoardSpec, m: usize) -> Result<Vec<Composition>> {
    if m > board.n() * board.k() {
        return Err(Error::Domain(format!(
            "m={m} exceeds the {} squares' worth of rows on {board}",
            board.n() * board.k()
        )));
    }
    let mut out = Vec::new();
    let mut parts = Vec::with_capacity(board.k());
    extend_compositions(board, m, &mut parts, &mut out);
    Ok(out)
}

fn extend_compositions(
    board: &BoardSpec,
    remaining: usize,
    parts: &mut Vec<usize>,
    out: &mut Vec<Composition>,
) {
    let (n, k) = (board.n(), board.k());
    let i = parts.len();
    if i == k {
        if remaining == 0 && (!board.is_circular() || parts[k - 1] + parts[0] <= n) {
            out.push(Composition(parts.clone()));
        }
        return;
    }
    let prev = parts.last().copied().unwrap_or(0);
    let hi = (n - prev).min(remaining);
    let boards_after = k - i - 1;
    for a in 0..=hi {
        // the later boards can hold at most n each
        if remaining - a > n * boards_after {
            continue;
        }
        if i == k - 1 && board.is_circular() && a + parts.first().copied().unwrap_or(a) > n {
            continue;
        }
        parts.push(a);
        extend_compositions(board, remaining - a, parts, out);
        parts.pop();
    }
}

/// The compositions of maximum placements, from their closed
/// characterization (sorted lexicographically, no duplicates).
pub fn maximum_compositions(board: &BoardSpec) -> Vec<Composition> {
    let (n, k) = (board.n(), board.k());
    let mut out: Vec<Composition> = match (board.shape(), k % 2 == 0) {
        (Shape::Linear, true) => {
            let mut all = Vec::new();
            let mut js = Vec::with_capacity(k / 2);
            weakly_increasing(n, k / 2, 0, &mut js, &mut |js| {
                all.push(Composition(js.iter().flat_map(|&j| [n - j, j]).collect()));
            });
            all
        }
        (Shape::Linear, false) => {
            vec![Composition((0..k).map(|i| if i % 2 == 0 { n } else { 0 }).collect())]
        }
        (Shape::Circular, true) => (0..=n)
            .map(|j| Composition((0..k).map(|i| if i % 2 == 0 { n - j } else { j }).collect()))
            .collect(),
        (Shape::Circular, false) if n % 2 == 0 => vec![Composition(vec![n / 2; k])],
        (Shape::Circular, false) => {
            let (lo, hi) = ((n - 1) / 2, n.div_ceil(2));
            let base: Vec<usize> = (0..k).map(|i| if i % 2 == 0 { lo } else { hi }).collect();
            (0..k)
                .map(|s| Composition((0..k).map(|i| base[(i + s) % k]).collect()))
                .collect()
        }
    };
    out.sort();
    out.dedup();
    out
}

fn weakly_increasing(
    n: usize,
    len: usize,
    lo: usize,
    js: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if js.len() == len {
        f(js);
        return;
    }
    for j in lo..=n {
        js.push(j);
        weakly_increasing(n, len, j, js, f);
        js.pop();
    }
}

/// The explicit non-attacking placement with composition `c` built by
/// filling rows top-down and sliding each board's columns past the rows
/// used on the board before it.
pub fn canonical_placement(board: &BoardSpec, c: &Composition) -> Result<RookPlacement> {
    if !c.is_admissible(board) {
        return Err(Error::Domain(format!(
            "composition {c} is not admissible on {board}"
        )));
    }
    let k = board.k();
    let a = c.parts();
    let mut squares = Vec::with_capacity(c.total());
    for b in 1..=k {
        let col_offset = if b == 1 { 0 } else { a[b - 2] };
        // on a circular board the last board must keep clear of the rows
        // matching the columns already used on board 1
        let row_offset = if board.is_circular() && b == k { a[0] } else { 0 };
        for l in 1..=a[b - 1] {
            squares.push(Square::new(b, row_offset + l, col_offset + l));
        }
    }
    let p = RookPlacement::new(*board, squares)?;
    if !p.is_valid() {
        return Err(Error::Invariant(format!(
            "canonical placement for {c} on {board} is attacking"
        )));
    }
    Ok(p)
}
