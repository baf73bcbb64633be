use std::fmt;
use std::str::FromStr;

use crate::board::{BoardSpec, Shape};
use crate::error::{Error, Result, Validation};
use crate::matrix::Matrix;

use super::ChainedPermutation;

/// One-line notation: `blocks[l][i]` is the column of the 1 in row `i+1` of
/// board `l+1`, or 0 for an empty row.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OneLine {
    board: BoardSpec,
    blocks: Vec<Vec<usize>>,
}

impl OneLine {
    /// Checks only that there are `k` blocks of length `n`.
    pub fn new(board: BoardSpec, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.len() != board.k() {
            return Err(Error::Domain(format!(
                "expected {} blocks, got {}",
                board.k(),
                blocks.len()
            )));
        }
        if let Some(b) = blocks.iter().position(|b| b.len() != board.n()) {
            return Err(Error::Domain(format!(
                "block {} has {} entries, expected {}",
                b + 1,
                blocks[b].len(),
                board.n()
            )));
        }
        Ok(Self { board, blocks })
    }

    pub fn board(&self) -> &BoardSpec {
        &self.board
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Parses with a known board; the shape implied by a trailing dash must
    /// agree with it.
    pub fn parse_for(board: &BoardSpec, s: &str) -> Result<Self> {
        let o: OneLine = s.parse()?;
        if o.board != *board {
            return Err(Error::Domain(format!("\"{s}\" describes {}, expected {board}", o.board)));
        }
        Ok(o)
    }

    /// The four conditions characterising one-line notations of chained
    /// permutations: entries in `0..=n`; nonzero entries distinct within a
    /// block; as many nonzero entries as the maximum number of rooks; and
    /// when `p[l-1][i] != 0`, the value `i` does not occur in block `l`.
    pub fn validate(&self) -> Validation {
        let mut v = Validation::ok();
        let n = self.board.n();
        for (l, block) in self.blocks.iter().enumerate() {
            let mut seen = vec![false; n + 1];
            for (i, &p) in block.iter().enumerate() {
                if p > n {
                    v.push(format!("range: block {} position {} is {p} > {n}", l + 1, i + 1));
                } else if p != 0 {
                    if seen[p] {
                        v.push(format!("repeat: block {} repeats {p}", l + 1));
                    }
                    seen[p] = true;
                }
            }
        }
        if !v.is_valid() {
            return v;
        }
        let nonzero = self.blocks.iter().flatten().filter(|&&p| p != 0).count();
        let max = self.board.max_rooks();
        if nonzero != max {
            v.push(format!("count: {nonzero} nonzero entries, expected {max}"));
        }
        for l in 1..=self.board.k() {
            let Some(p) = self.board.prev(l) else { continue };
            let prev = &self.blocks[p - 1];
            for (j, &c) in self.blocks[l - 1].iter().enumerate() {
                if c != 0 && prev[c - 1] != 0 {
                    v.push(format!(
                        "chaining: block {p} position {c} is nonzero and block {l} position {} is {c}",
                        j + 1
                    ));
                }
            }
        }
        v
    }

    pub fn from_permutation(cp: &ChainedPermutation) -> Self {
        let n = cp.board().n();
        let blocks = cp
            .matrices()
            .iter()
            .map(|m| {
                (0..n)
                    .map(|i| m.row(i).iter().position(|&x| x == 1).map_or(0, |j| j + 1))
                    .collect()
            })
            .collect();
        Self {
            board: *cp.board(),
            blocks,
        }
    }

    pub fn to_permutation(&self) -> Result<ChainedPermutation> {
        self.validate().into_result()?;
        let n = self.board.n();
        let matrices = self
            .blocks
            .iter()
            .map(|block| {
                let mut m = Matrix::zeros(n);
                for (i, &p) in block.iter().enumerate() {
                    if p != 0 {
                        m.set(i, p - 1, 1);
                    }
                }
                m
            })
            .collect();
        ChainedPermutation::new(self.board, matrices)
    }
}

impl fmt::Display for OneLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wide = self.board.n() >= 10;
        for (l, block) in self.blocks.iter().enumerate() {
            if l > 0 {
                f.write_str("-")?;
            }
            for (i, p) in block.iter().enumerate() {
                if wide && i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
        }
        if self.board.is_circular() {
            f.write_str("-")?;
        }
        Ok(())
    }
}

/// Infers the shape from a trailing dash, `k` from the number of blocks and
/// `n` from the block length. Blocks containing a comma are read as
/// comma-separated numbers, otherwise one digit per entry.
impl FromStr for OneLine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, shape) = match s.strip_suffix('-') {
            Some(b) => (b, Shape::Circular),
            None => (s, Shape::Linear),
        };
        if body.is_empty() {
            return Err(Error::parse("empty one-line notation"));
        }
        let mut blocks = Vec::new();
        let mut offset = 0;
        for raw in body.split('-') {
            let block = parse_block(raw, offset)?;
            offset += raw.len() + 1;
            blocks.push(block);
        }
        let n = blocks[0].len();
        if let Some(b) = blocks.iter().position(|b| b.len() != n) {
            return Err(Error::parse(format!(
                "block {} has {} entries but block 1 has {n}",
                b + 1,
                blocks[b].len()
            )));
        }
        let board = BoardSpec::new(shape, n, blocks.len())?;
        Self::new(board, blocks)
    }
}

fn parse_block(raw: &str, offset: usize) -> Result<Vec<usize>> {
    let bad = |pos: usize, what: &str| Error::Parse {
        line: 1,
        column: offset + pos + 1,
        message: what.to_string(),
    };
    if raw.is_empty() {
        return Err(bad(0, "empty block"));
    }
    if raw.contains(',') {
        let mut out = Vec::new();
        let mut pos = 0;
        for tok in raw.split(',') {
            out.push(tok.parse().map_err(|_| bad(pos, &format!("bad entry \"{tok}\"")))?);
            pos += tok.len() + 1;
        }
        return Ok(out);
    }
    raw.chars()
        .enumerate()
        .map(|(pos, c)| {
            c.to_digit(10)
                .map(|d| d as usize)
                .ok_or_else(|| bad(pos, &format!("unexpected character '{c}'")))
        })
        .collect()
}
