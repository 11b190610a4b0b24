//! Arbitrary-precision integer and rational scalars.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for converting small machine integers.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// A rational from a machine integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(int(v))
}

/// Binomial coefficient C(n, k).
///
/// Returns 0 for `k < 0` or `k > n`: every summation in this crate relies on
/// terms vanishing silently outside the triangle.
///
/// # Panics
/// Negative `n` is a domain error.
pub fn binomial(n: i64, k: i64) -> Int {
    assert!(n >= 0, "binomial: negative n = {n}");
    if k < 0 || k > n {
        return Int::zero();
    }
    num_integer::binomial(int(n), int(k))
}

/// The n-th Catalan number, `binomial(2n, n) / (n + 1)`.
///
/// # Panics
/// Negative `n` is a domain error. The division is always exact; this is
/// asserted at runtime.
pub fn catalan(n: i64) -> Int {
    assert!(n >= 0, "catalan: negative n = {n}");
    let (q, r) = num_integer::div_rem(binomial(2 * n, n), int(n + 1));
    assert!(r.is_zero(), "catalan: inexact division at n = {n}");
    q
}

/// Rising factorial `(x)_k = x (x+1) ... (x+k-1)`, with `(x)_0 = 1`.
pub fn rising_factorial(x: &Rat, k: u32) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..k {
        acc *= &term;
        term += Rat::one();
    }
    acc
}

/// Integer rising factorial, used by the identity runners where all the
/// denominators of the printed formulas are products of this shape.
pub(crate) fn rising_int(a: i64, k: u32) -> Int {
    let mut acc = Int::one();
    for i in 0..k as i64 {
        acc *= int(a + i);
    }
    acc
}

/// Exact division, asserting divisibility.
pub(crate) fn exact_div(a: Int, b: &Int) -> Int {
    assert!(!b.is_zero(), "exact_div: division by zero");
    let (q, r) = num_integer::div_rem(a, b.clone());
    assert!(r.is_zero(), "exact_div: inexact division");
    q
}

/// Pascal's triangle rows 0..=n_max as a lookup table. The identity runners
/// evaluate hundreds of thousands of binomials; additive row filling keeps
/// that cheap and the values shareable by reference.
pub(crate) struct BinomTable {
    rows: Vec<Vec<Int>>,
    zero: Int,
}

impl BinomTable {
    pub fn new(n_max: i64) -> Self {
        let n_max = n_max.max(0) as usize;
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                if k == 0 || k == n {
                    row.push(Int::one());
                } else {
                    row.push(&rows[n - 1][k - 1] + &rows[n - 1][k]);
                }
            }
            rows.push(row);
        }
        BinomTable {
            rows,
            zero: Int::zero(),
        }
    }

    pub fn at(&self, n: i64, k: i64) -> &Int {
        assert!(n >= 0 && (n as usize) < self.rows.len(), "BinomTable: n = {n} out of range");
        if k < 0 || k > n {
            &self.zero
        } else {
            &self.rows[n as usize][k as usize]
        }
    }
}
