//! Oracles shared by the integration tests. Nothing here goes through the
//! library's own search code.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

pub fn golden(name: &str) -> String {
    std::fs::read_to_string(golden_path(name)).unwrap_or_else(|e| panic!("{name}: {e}"))
}

/// Every ordinary `n x n` ASM, built row by row from the running column
/// sums.
pub fn plain_asms(n: usize) -> Vec<Vec<Vec<i8>>> {
    fn rows(n: usize, col: &[i8], j: usize, run: i8, row: &mut Vec<i8>, out: &mut Vec<Vec<i8>>) {
        if j == n {
            if run == 1 {
                out.push(row.clone());
            }
            return;
        }
        for v in [-1i8, 0, 1] {
            let r = run + v;
            let c = col[j] + v;
            if (0..=1).contains(&r) && (0..=1).contains(&c) {
                row.push(v);
                rows(n, col, j + 1, r, row, out);
                row.pop();
            }
        }
    }
    fn go(n: usize, col: &mut Vec<i8>, acc: &mut Vec<Vec<i8>>, out: &mut Vec<Vec<Vec<i8>>>) {
        if acc.len() == n {
            if col.iter().all(|&c| c == 1) {
                out.push(acc.clone());
            }
            return;
        }
        let mut cands = Vec::new();
        rows(n, col, 0, 0, &mut Vec::new(), &mut cands);
        for r in cands {
            for (c, v) in col.iter_mut().zip(&r) {
                *c += v;
            }
            acc.push(r);
            go(n, col, acc, out);
            let r = acc.pop().unwrap();
            for (c, v) in col.iter_mut().zip(&r) {
                *c -= v;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![0; n], &mut Vec::new(), &mut out);
    out
}

/// Number of non-attacking `m`-subsets of the squares, found by checking
/// every subset against a direct reading of the attack rule.
pub fn naive_rook_count(circular: bool, n: usize, k: usize, m: usize) -> u64 {
    let squares: Vec<(usize, usize, usize)> = (1..=k)
        .flat_map(|b| (1..=n).flat_map(move |r| (1..=n).map(move |c| (b, r, c))))
        .collect();
    let next = |b: usize| -> Option<usize> {
        if b < k {
            Some(b + 1)
        } else if circular {
            Some(1)
        } else {
            None
        }
    };
    let hits = |s: (usize, usize, usize), t: (usize, usize, usize)| {
        (s.0 == t.0 && (s.1 == t.1 || s.2 == t.2))
            || (next(s.0) == Some(t.0) && s.1 == t.2)
            || (next(t.0) == Some(s.0) && t.1 == s.2)
    };
    assert!(squares.len() <= 24, "too many squares for the naive oracle");
    let mut count = 0;
    for mask in 0u32..(1 << squares.len()) {
        if mask.count_ones() as usize != m {
            continue;
        }
        let chosen: Vec<_> = (0..squares.len()).filter(|i| mask >> i & 1 == 1).map(|i| squares[i]).collect();
        let ok = chosen.iter().enumerate().all(|(a, &s)| {
            !(next(s.0) == Some(s.0) && s.1 == s.2) && chosen[a + 1..].iter().all(|&t| !hits(s, t))
        });
        if ok {
            count += 1;
        }
    }
    count
}

pub fn as_set<T: Ord>(items: impl IntoIterator<Item = T>) -> BTreeSet<T> {
    items.into_iter().collect()
}
