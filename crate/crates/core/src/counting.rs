//! Exact counts from product and sum formulas. Everything is computed in
//! arbitrary precision; there is no floating point in this module.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::board::{admissible_compositions, BoardSpec};
use crate::error::{Error, Result};

pub type BigCount = BigUint;

/// `(n)_m = n (n-1) ... (n-m+1)`; zero once a factor reaches zero.
pub fn falling_factorial(n: u64, m: u64) -> BigCount {
    if m > n {
        return BigCount::zero();
    }
    (n - m + 1..=n).fold(BigCount::one(), |acc, x| acc * x)
}

pub fn factorial(n: u64) -> BigCount {
    falling_factorial(n, n)
}

pub fn binomial(n: u64, r: u64) -> BigCount {
    if r > n {
        return BigCount::zero();
    }
    let r = r.min(n - r);
    falling_factorial(n, r) / factorial(r)
}

/// Number of ways to place `m` non-attacking rooks on `board`: a sum over
/// admissible compositions of `prod_i C(n - a_{i-1}, a_i) (n)_{a_i}`.
pub fn count_placements_formula(board: &BoardSpec, m: usize) -> Result<BigCount> {
    let n = board.n() as u64;
    let mut total = BigCount::zero();
    for c in admissible_compositions(board, m)? {
        let a = c.parts();
        let k = a.len();
        let mut term = BigCount::one();
        for i in 0..k {
            let prev = match i {
                0 if board.is_circular() => a[k - 1],
                0 => 0,
                _ => a[i - 1],
            } as u64;
            let ai = a[i] as u64;
            term *= binomial(n - prev, ai) * falling_factorial(n, ai);
        }
        total += term;
    }
    Ok(total)
}

fn check_dims(n: usize, k: usize) -> Result<()> {
    if n == 0 || k == 0 {
        return Err(Error::Domain(format!("need n, k >= 1, got n={n}, k={k}")));
    }
    Ok(())
}

/// Maximum placements on the linear board, in closed form.
pub fn count_max_linear(n: usize, k: usize) -> Result<BigCount> {
    check_dims(n, k)?;
    let nf = factorial(n as u64);
    if k % 2 == 1 {
        return Ok(nf.pow((k as u32).div_ceil(2)));
    }
    let half = k / 2;
    let mut sum = BigCount::zero();
    for_each_chain(n, half, &mut |js| {
        let mut term = BigCount::one();
        let mut prev = 0u64;
        for &j in js {
            let j = j as u64;
            term *= binomial(n as u64 - prev, n as u64 - j) * binomial(n as u64, j);
            prev = j;
        }
        sum += term;
    });
    Ok(nf.pow(half as u32) * sum)
}

/// The even-k linear count rewritten with multinomial coefficients
/// `(n; n - j_h, j_h - j_{h-1}, ..., j_2 - j_1, j_1)`.
pub fn count_max_linear_multinomial(n: usize, k: usize) -> Result<BigCount> {
    check_dims(n, k)?;
    if k % 2 == 1 {
        return Err(Error::Domain(format!("multinomial form needs even k, got {k}")));
    }
    let half = k / 2;
    let nf = factorial(n as u64);
    let mut sum = BigCount::zero();
    for_each_chain(n, half, &mut |js| {
        let mut denom = factorial((n - js[half - 1]) as u64);
        let mut prev = 0;
        for &j in js {
            denom *= factorial((j - prev) as u64);
            prev = j;
        }
        let mut term = &nf / denom;
        for &j in js {
            term *= binomial(n as u64, j as u64);
        }
        sum += term;
    });
    Ok(nf.pow(half as u32) * sum)
}

/// Visits every weakly increasing `0 <= j_1 <= ... <= j_len <= n`.
fn for_each_chain(n: usize, len: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(n: usize, len: usize, lo: usize, js: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if js.len() == len {
            f(js);
            return;
        }
        for j in lo..=n {
            js.push(j);
            go(n, len, j, js, f);
            js.pop();
        }
    }
    go(n, len, 0, &mut Vec::with_capacity(len), f);
}

/// Maximum placements on the circular board, in closed form.
pub fn count_max_circular(n: usize, k: usize) -> Result<BigCount> {
    check_dims(n, k)?;
    let (n64, k32) = (n as u64, k as u32);
    if k.is_multiple_of(2) {
        let half = k32 / 2;
        return Ok(factorial(n64).pow(half) * binomial_power_sum(n64, half));
    }
    if n.is_multiple_of(2) {
        return Ok(falling_factorial(n64, n64 / 2).pow(k32));
    }
    let up = n64.div_ceil(2);
    let down = n64 / 2;
    Ok(BigCount::from(k as u64 * up)
        * falling_factorial(n64, up).pow(k32 / 2)
        * falling_factorial(n64, down).pow(k32.div_ceil(2)))
}

/// `sum_{j=0}^{n} C(n, j)^p`.
pub fn binomial_power_sum(n: u64, p: u32) -> BigCount {
    (0..=n).map(|j| binomial(n, j).pow(p)).sum()
}

/// Number of `n x n` alternating sign matrices,
/// `prod_{i=0}^{n-1} (3i+1)! / (n+i)!`.
pub fn classical_asm_count(n: usize) -> BigCount {
    let n = n as u64;
    let mut num = BigCount::one();
    let mut den = BigCount::one();
    for i in 0..n {
        num *= factorial(3 * i + 1);
        den *= factorial(n + i);
    }
    num / den
}

/// Number of quarter-turn symmetric ASMs of size `4m`, which is also the
/// number of self-chained circular ASMs of side `2m`. The product is
/// accumulated as one exact rational and must come out integral.
pub fn qtasm_count(m: usize) -> Result<BigCount> {
    if m == 0 {
        return Err(Error::Domain("qtasm_count needs m >= 1".into()));
    }
    let big = |x: usize| BigInt::from(x);
    let mut acc = BigRational::from_integer(BigInt::from(classical_asm_count(m)).pow(3));
    for i in 1..=m {
        acc *= BigRational::new(big(3 * i - 1), big(3 * i - 2));
        for j in i..=m {
            acc *= BigRational::new(big(m + i + j - 1), big(2 * i + j - 1));
        }
    }
    if !acc.is_integer() {
        return Err(Error::Invariant(format!(
            "quarter-turn product for m={m} is not an integer: {acc}"
        )));
    }
    acc.to_integer()
        .to_biguint()
        .ok_or_else(|| Error::Invariant(format!("negative quarter-turn count for m={m}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::board::Shape;

    fn big(x: u64) -> BigCount {
        BigCount::from(x)
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(5, 2), big(20));
        assert_eq!(falling_factorial(7, 0), big(1));
        assert_eq!(falling_factorial(0, 0), big(1));
        assert_eq!(falling_factorial(3, 4), big(0));
    }

    #[test]
    fn binomial_small() {
        assert_eq!(binomial(5, 2), big(10));
        assert_eq!(binomial(4, 0), big(1));
        assert_eq!(binomial(2, 3), big(0));
    }

    #[test]
    fn placement_formula_examples() {
        let c22 = BoardSpec::circular(2, 2).unwrap();
        let l22 = BoardSpec::linear(2, 2).unwrap();
        assert_eq!(count_placements_formula(&c22, 2).unwrap(), big(8));
        assert_eq!(count_placements_formula(&l22, 2).unwrap(), big(12));
        assert_eq!(count_placements_formula(&c22, 1).unwrap(), big(8));
        assert_eq!(count_placements_formula(&c22, 3).unwrap(), big(0));
        assert_eq!(count_placements_formula(&c22, 0).unwrap(), big(1));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(count_max_linear(5, 3).unwrap(), big(14400));
        assert_eq!(count_max_linear(1, 2).unwrap(), big(2));
        assert_eq!(count_max_linear(2, 2).unwrap(), big(12));
        assert_eq!(count_max_circular(2, 2).unwrap(), big(8));
        assert_eq!(count_max_circular(3, 3).unwrap(), big(324));
        assert_eq!(count_max_circular(1, 3).unwrap(), big(3));
        assert!(count_max_circular(0, 3).is_err());
    }

    #[test]
    fn closed_forms_agree_with_composition_sum() {
        for n in 1..=6 {
            for k in 1..=8 {
                let l = BoardSpec::new(Shape::Linear, n, k).unwrap();
                let c = BoardSpec::new(Shape::Circular, n, k).unwrap();
                assert_eq!(
                    count_max_linear(n, k).unwrap(),
                    count_placements_formula(&l, l.max_rooks()).unwrap(),
                    "{l}"
                );
                assert_eq!(
                    count_max_circular(n, k).unwrap(),
                    count_placements_formula(&c, c.max_rooks()).unwrap(),
                    "{c}"
                );
            }
        }
    }

    #[test]
    fn classical_asm_sequence() {
        let got: Vec<BigCount> = (1..=6).map(classical_asm_count).collect();
        let want: Vec<BigCount> = [1u64, 2, 7, 42, 429, 7436].into_iter().map(big).collect();
        assert_eq!(got, want);
        assert_eq!(classical_asm_count(0), big(1));
    }

    #[test]
    fn qtasm_values() {
        assert_eq!(qtasm_count(1).unwrap(), big(2));
        assert_eq!(qtasm_count(2).unwrap(), big(40));
        assert_eq!(qtasm_count(3).unwrap(), big(6860));
        assert!(qtasm_count(0).is_err());
    }
}
