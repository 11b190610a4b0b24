//! Scalar weight polynomials and correction terms used by the summation
//! identities.  Each function is pure; the piecewise ones (`catalan_imbalance`,
//! `catalan_correction`, `motzkin_correction`) follow three-branch definitions
//! whose middle branch is an empty sum.

use crate::exact::{Int, Rat};
use crate::triangles::{catalan_ext, MotzkinTable};

fn big(v: i128) -> Int {
    Int::from(v)
}

/// Quadratic weight attached to the first hypergeometric determinant sum.
pub fn det_weight_a(n: i64, k: i64, m: i64, l: i64) -> Int {
    let (n, k, m, l) = (n as i128, k as i128, m as i128, l as i128);
    big((2 * m - l) * (2 * m - l + 1) * (n - k + 1) * (n + k + 2)
        - (2 * n + 1) * (2 * n + 2) * (m - l - k) * (m + k + 2))
}

/// Companion weight for the shifted determinant sum.
pub fn det_weight_b(n: i64, k: i64, m: i64, l: i64) -> Int {
    let (n, k, m, l) = (n as i128, k as i128, m as i128, l as i128);
    big((2 * m - l + 1) * (2 * m - l + 2) * (n - k + 1) * (n + k + 3)
        - (2 * n + 2) * (2 * n + 3) * (m - l - k) * (m + k + 3))
}

/// Diagonal (m = n) reduction of `det_weight_a`, after the common factor
/// (l+1)(n+k+2) is pulled out.
pub fn det_weight_a_diag(n: i64, k: i64, l: i64) -> Int {
    let (n, k, l) = (n as i128, k as i128, l as i128);
    big(2 * k * (2 * n + 1) + l * (n - k + 1))
}

/// Diagonal reduction of `det_weight_b`, common factor (l+1)(n+k+3) removed.
pub fn det_weight_b_diag(n: i64, k: i64, l: i64) -> Int {
    let (n, k, l) = (n as i128, k as i128, l as i128);
    big((2 * k + 1) * (2 * n + 2) + l * (n - k + 1))
}

/// Linear-in-k weight for the ballot-triangle permanent sum.
pub fn per_weight_ballot(n: i64, m: i64, k: i64) -> Int {
    let (n, m, k) = (n as i128, m as i128, k as i128);
    big(4 * m * n + 5 * (m + n) + 2 * (m + n + 1) * k + 4)
}

/// Quadratic-in-k weight for the companion permanent sum.
pub fn per_weight_shapiro(n: i64, k: i64, m: i64) -> Int {
    let (n, k, m) = (n as i128, k as i128, m as i128);
    big(2 * m * n + 3 * m + 3 * n - 6 * k - 2 * k * k)
}

/// Signed Catalan convolution measuring how far the alternating determinant
/// sum sits from zero.  Zero when `p = 0`; the negative branch mirrors the
/// positive one with the roles of the two indices exchanged.
pub fn catalan_imbalance(n: i64, m: i64, p: i64) -> Int {
    let mut acc = Int::from(0);
    if p >= 1 {
        for i in 0..p {
            acc += catalan_ext(n + i) * catalan_ext(m - i);
        }
    } else {
        for i in 1..=(-p) {
            acc -= catalan_ext(n - i) * catalan_ext(m + i);
        }
    }
    acc
}

/// Correction term for the lifted-permanent identities on the ballot triangle.
pub fn catalan_correction(n: i64, m: i64, p: i64) -> Int {
    let mut acc = Int::from(0);
    if p >= 1 {
        for i in 0..p {
            acc += catalan_ext(n + i) * catalan_ext(m + p - i - 1);
        }
    } else {
        let q = -p;
        for i in 1..=q {
            acc -= catalan_ext(n - i) * catalan_ext(m - q + i - 1);
        }
    }
    acc
}

/// Weighted analogue of `catalan_correction`: products of column-0 entries of
/// the supplied weighted triangle.  Rows below zero contribute nothing.
pub fn motzkin_correction(table: &MotzkinTable, n: i64, m: i64, r: i64) -> Rat {
    let mut acc = Rat::from_integer(Int::from(0));
    if r >= 1 {
        for i in 0..r {
            acc += table.entry(n + i, 0) * table.entry(m + r - i - 1, 0);
        }
    } else {
        let q = -r;
        for i in 1..=q {
            acc -= table.entry(n - i, 0) * table.entry(m - q + i - 1, 0);
        }
    }
    acc
}
