//! Bijections between special families of chained ASMs and ordinary ASMs.

use crate::board::BoardSpec;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

use super::{ChainedAsm, PlainAsm};

/// On a linear board with odd `k`, the even-indexed matrices vanish and the
/// odd-indexed ones are ordinary ASMs.
pub fn split_linear_odd(a: &ChainedAsm) -> Result<Vec<PlainAsm>> {
    let b = a.board();
    if b.is_circular() || b.k().is_multiple_of(2) {
        return Err(Error::Unsupported(format!("split needs a linear board with odd k, got {b}")));
    }
    let mut out = Vec::with_capacity(b.k().div_ceil(2));
    for (l, m) in a.matrices().iter().enumerate() {
        if l % 2 == 1 {
            if !m.is_zero() {
                return Err(Error::Invariant(format!("board {} is not zero", l + 1)));
            }
        } else {
            out.push(PlainAsm::new(m.clone()).map_err(|e| {
                Error::Invariant(format!("board {} is not an alternating sign matrix: {e}", l + 1))
            })?);
        }
    }
    Ok(out)
}

/// Inverse of [`split_linear_odd`]: interleaves zero matrices.
pub fn join_linear_odd(parts: &[PlainAsm]) -> Result<ChainedAsm> {
    let Some(first) = parts.first() else {
        return Err(Error::Domain("need at least one matrix".into()));
    };
    let n = first.size();
    let board = BoardSpec::linear(n, 2 * parts.len() - 1)?;
    let mut matrices = Vec::with_capacity(board.k());
    for (h, p) in parts.iter().enumerate() {
        if h > 0 {
            matrices.push(Matrix::zeros(n));
        }
        matrices.push(p.matrix().clone());
    }
    ChainedAsm::new(board, matrices)
}

fn assemble(a1: &Matrix, a2: &Matrix, a3: &Matrix, a4: &Matrix) -> Matrix {
    let n = a1.size();
    let mut m = Matrix::zeros(2 * n);
    m.put_block(0, 0, a1);
    m.put_block(0, n, &a2.rotate_cw());
    m.put_block(n, n, &a3.rotate_half());
    m.put_block(n, 0, &a4.rotate_ccw());
    m
}

fn quadrants(m: &Matrix) -> [Matrix; 4] {
    let n = m.size() / 2;
    [
        m.block(0, 0, n),
        m.block(0, n, n).rotate_ccw(),
        m.block(n, n, n).rotate_half(),
        m.block(n, 0, n).rotate_cw(),
    ]
}

/// Lays out a circular 4-chain as one `2n x 2n` ASM: board 1 top-left,
/// board 2 turned clockwise top-right, board 3 turned half bottom-right and
/// board 4 turned counterclockwise bottom-left.
pub fn concat_circular_k4(a: &ChainedAsm) -> Result<PlainAsm> {
    let b = a.board();
    if !b.is_circular() || b.k() != 4 {
        return Err(Error::Unsupported(format!("needs a circular board with k = 4, got {b}")));
    }
    let [a1, a2, a3, a4] = a.matrices() else { unreachable!() };
    PlainAsm::new(assemble(a1, a2, a3, a4))
        .map_err(|e| Error::Invariant(format!("assembled matrix is not an ASM: {e}")))
}

/// Inverse of [`concat_circular_k4`].
pub fn split_circular_k4(m: &PlainAsm) -> Result<ChainedAsm> {
    let size = m.size();
    if size == 0 || size % 2 == 1 {
        return Err(Error::Domain(format!("need an even size, got {size}")));
    }
    let board = BoardSpec::circular(size / 2, 4)?;
    ChainedAsm::new(board, quadrants(m.matrix()).to_vec())
}

/// Four rotated copies of a self-chained circular ASM of even side `n`
/// form a quarter-turn symmetric ASM of side `2n`.
pub fn fold_qt(a: &ChainedAsm) -> Result<PlainAsm> {
    let b = a.board();
    if !b.is_circular() || b.k() != 1 || b.n() % 2 == 1 {
        return Err(Error::Unsupported(format!(
            "needs a circular board with k = 1 and even n, got {b}"
        )));
    }
    let x = &a.matrices()[0];
    let m = PlainAsm::new(assemble(x, x, x, x))
        .map_err(|e| Error::Invariant(format!("assembled matrix is not an ASM: {e}")))?;
    if !m.is_quarter_turn_symmetric() {
        return Err(Error::Invariant("assembled matrix is not quarter-turn symmetric".into()));
    }
    Ok(m)
}

/// Inverse of [`fold_qt`]: the top-left quadrant of a quarter-turn
/// symmetric ASM whose side is a multiple of 4.
pub fn unfold_qt(m: &PlainAsm) -> Result<ChainedAsm> {
    let size = m.size();
    if size == 0 || !size.is_multiple_of(4) {
        return Err(Error::Domain(format!("need a size divisible by 4, got {size}")));
    }
    if !m.is_quarter_turn_symmetric() {
        return Err(Error::Constraint("matrix is not quarter-turn symmetric".into()));
    }
    let board = BoardSpec::circular(size / 2, 1)?;
    ChainedAsm::new(board, vec![m.matrix().block(0, 0, size / 2)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asm::enumerate_chained_asm;

    #[test]
    fn small_round_trips() {
        for a in enumerate_chained_asm(&BoardSpec::linear(2, 3).unwrap()) {
            let parts = split_linear_odd(&a).unwrap();
            assert_eq!(parts.len(), 2);
            assert_eq!(join_linear_odd(&parts).unwrap(), a);
        }
        for a in enumerate_chained_asm(&BoardSpec::circular(1, 4).unwrap()) {
            let m = concat_circular_k4(&a).unwrap();
            assert_eq!(split_circular_k4(&m).unwrap(), a);
        }
        for a in enumerate_chained_asm(&BoardSpec::circular(2, 1).unwrap()) {
            let m = fold_qt(&a).unwrap();
            assert!(m.is_quarter_turn_symmetric());
            assert_eq!(unfold_qt(&m).unwrap(), a);
        }
    }

    #[test]
    fn wrong_domains() {
        let a = &enumerate_chained_asm(&BoardSpec::circular(2, 2).unwrap())[0];
        assert!(matches!(split_linear_odd(a), Err(Error::Unsupported(_))));
        assert!(matches!(concat_circular_k4(a), Err(Error::Unsupported(_))));
        assert!(matches!(fold_qt(a), Err(Error::Unsupported(_))));
    }
}
