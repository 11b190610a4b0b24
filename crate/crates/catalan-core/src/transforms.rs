//! Determinant, permanent and product transforms of the ballot triangle,
//! plus the uniform table handle the renderer and CLI work with.

use num_traits::Zero;

use crate::exact::{Int, Rat};
use crate::triangles::{ballot, Triangle};

/// 2x2 determinant `ad - bc`.
pub fn det2(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Rat {
    a * d - b * c
}

/// 2x2 permanent `ad + bc`.
pub fn per2(a: &Rat, b: &Rat, c: &Rat, d: &Rat) -> Rat {
    a * d + b * c
}

/// Integer versions, used by the transforms and identity runners where
/// everything in sight is integral.
pub fn det2_int(a: &Int, b: &Int, c: &Int, d: &Int) -> Int {
    a * d - b * c
}

pub fn per2_int(a: &Int, b: &Int, c: &Int, d: &Int) -> Int {
    a * d + b * c
}

/// Determinant transform on even-offset ballot columns:
/// `det(ballot(n+k, 2k), ballot(n+k, 2k+1); ballot(n+k+1, 2k), ballot(n+k+1, 2k+1))`.
/// Row sums give the squares of the Catalan numbers.
pub fn x_entry(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 {
        return Int::zero();
    }
    det2_int(
        &ballot(n + k, 2 * k),
        &ballot(n + k, 2 * k + 1),
        &ballot(n + k + 1, 2 * k),
        &ballot(n + k + 1, 2 * k + 1),
    )
}

/// Determinant transform on odd-offset ballot columns:
/// `det(ballot(n+k+1, 2k+1), ballot(n+k+1, 2k+2); ballot(n+k+2, 2k+1), ballot(n+k+2, 2k+2))`.
/// Row sums give products of consecutive Catalan numbers.
pub fn y_entry(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 {
        return Int::zero();
    }
    det2_int(
        &ballot(n + k + 1, 2 * k + 1),
        &ballot(n + k + 1, 2 * k + 2),
        &ballot(n + k + 2, 2 * k + 1),
        &ballot(n + k + 2, 2 * k + 2),
    )
}

/// Product transform. The defining products are stated for row/column pairs
/// of each parity; with `nd = ceil(row/2)` and `kd = floor(col/2)`:
///
/// * even row, even col:  `ballot(nd+kd, 2kd) * ballot(nd+kd+1, 2kd+1)`
/// * even row, odd col:   `ballot(nd+kd+1, 2kd+1) * ballot(nd+kd+1, 2kd+2)`
/// * odd row, even col:   `ballot(nd+kd, 2kd) * ballot(nd+kd, 2kd+1)`
/// * odd row, odd col:    `ballot(nd+kd, 2kd+1) * ballot(nd+kd+1, 2kd+2)`
///
/// Zero outside the triangular support `0 <= col <= row`.
pub fn z_entry(row: i64, col: i64) -> Int {
    if row < 0 || col < 0 || col > row {
        return Int::zero();
    }
    let nd = (row + 1) / 2;
    let kd = col / 2;
    match (row % 2 == 0, col % 2 == 0) {
        (true, true) => ballot(nd + kd, 2 * kd) * ballot(nd + kd + 1, 2 * kd + 1),
        (true, false) => ballot(nd + kd + 1, 2 * kd + 1) * ballot(nd + kd + 1, 2 * kd + 2),
        (false, true) => ballot(nd + kd, 2 * kd) * ballot(nd + kd, 2 * kd + 1),
        (false, false) => ballot(nd + kd, 2 * kd + 1) * ballot(nd + kd + 1, 2 * kd + 2),
    }
}

/// Permanent transform, rows keyed by parity:
///
/// * row `2n`:   `per(ballot(n+k, 2k), ballot(n+k, 2k+1); ballot(n+k+1, 2k), ballot(n+k+1, 2k+1))`
/// * row `2n+1`: `per(ballot(n+k, 2k), ballot(n+k, 2k+1); ballot(n+k+2, 2k), ballot(n+k+2, 2k+1))`
///
/// The support of row `r` is `k <= r/2`; outside it the ballot factors
/// vanish and the entry is 0. Row sums give the shifted Catalan numbers.
pub fn w_entry(row: i64, k: i64) -> Int {
    if row < 0 || k < 0 {
        return Int::zero();
    }
    let n = row / 2;
    let (c, d) = if row % 2 == 0 {
        (ballot(n + k + 1, 2 * k), ballot(n + k + 1, 2 * k + 1))
    } else {
        (ballot(n + k + 2, 2 * k), ballot(n + k + 2, 2 * k + 1))
    };
    per2_int(&ballot(n + k, 2 * k), &ballot(n + k, 2 * k + 1), &c, &d)
}

/// The four derived triangles, named by their public table letters.
/// X and Y are the determinant transforms, Z the product transform,
/// W the permanent transform.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DerivedKind {
    X,
    Y,
    Z,
    W,
}

impl DerivedKind {
    pub fn entry(self, n: i64, k: i64) -> Int {
        match self {
            DerivedKind::X => x_entry(n, k),
            DerivedKind::Y => y_entry(n, k),
            DerivedKind::Z => z_entry(n, k),
            DerivedKind::W => w_entry(n, k),
        }
    }

    /// Largest column of row `n` that the printed table shows (blank cells
    /// outside, zeros inside).
    pub fn support_max(self, n: i64) -> i64 {
        match self {
            DerivedKind::W => n / 2,
            _ => n,
        }
    }
}

/// Any of the eight tables, under one handle.
pub enum AnyTable {
    Base(Triangle),
    Derived(DerivedKind),
}

/// Which summary columns a rendered table carries.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SumColumns {
    None,
    Row,
    RowAndAlternating,
}

impl AnyTable {
    pub fn entry(&self, n: i64, k: i64) -> Rat {
        match self {
            AnyTable::Base(t) => t.entry(n, k),
            AnyTable::Derived(d) => Rat::from_integer(d.entry(n, k)),
        }
    }

    pub fn support_max(&self, n: i64) -> i64 {
        match self {
            AnyTable::Base(_) => n,
            AnyTable::Derived(d) => d.support_max(n),
        }
    }

    pub fn in_support(&self, n: i64, k: i64) -> bool {
        n >= 0 && k >= 0 && k <= self.support_max(n)
    }

    /// The public one-letter table name.
    pub fn letter(&self) -> &'static str {
        match self {
            AnyTable::Base(Triangle::Ballot) => "C",
            AnyTable::Base(Triangle::Shapiro) => "B",
            AnyTable::Base(Triangle::Admissible) => "A",
            AnyTable::Base(Triangle::Motzkin(_)) => "M",
            AnyTable::Derived(DerivedKind::X) => "X",
            AnyTable::Derived(DerivedKind::Y) => "Y",
            AnyTable::Derived(DerivedKind::Z) => "Z",
            AnyTable::Derived(DerivedKind::W) => "W",
        }
    }

    /// Summary columns shown for this table, matching how each is usually
    /// printed: X, Y and W carry row sums, Z also carries alternating sums.
    pub fn sum_columns(&self) -> SumColumns {
        match self {
            AnyTable::Base(_) => SumColumns::None,
            AnyTable::Derived(DerivedKind::Z) => SumColumns::RowAndAlternating,
            AnyTable::Derived(_) => SumColumns::Row,
        }
    }
}

/// Plain or alternating row sum over the row's support.
pub fn row_sum(t: &AnyTable, n: i64, alternating: bool) -> Rat {
    assert!(n >= 0, "row_sum: negative row {n}");
    let mut acc = Rat::zero();
    for k in 0..=t.support_max(n) {
        let v = t.entry(n, k);
        if alternating && k % 2 == 1 {
            acc -= v;
        } else {
            acc += v;
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{catalan, int, rat};

    // Determinant transform X, rows 0..=5.
    const X_ROWS: [&[i64]; 6] = [
        &[1],
        &[0, 1],
        &[0, 3, 1],
        &[0, 14, 10, 1],
        &[0, 84, 90, 21, 1],
        &[0, 594, 825, 308, 36, 1],
    ];

    // Determinant transform Y, rows 0..=5.
    const Y_ROWS: [&[i64]; 6] = [
        &[1],
        &[1, 1],
        &[3, 6, 1],
        &[14, 40, 15, 1],
        &[84, 300, 175, 28, 1],
        &[594, 2475, 1925, 504, 45, 1],
    ];

    // Product transform Z, rows 0..=6.
    const Z_ROWS: [&[i64]; 7] = [
        &[1],
        &[1, 1],
        &[2, 2, 1],
        &[4, 6, 3, 1],
        &[10, 15, 12, 4, 1],
        &[25, 45, 36, 20, 5, 1],
        &[70, 126, 126, 70, 30, 6, 1],
    ];

    // Permanent transform W, rows 0..=8 (support only).
    const W_ROWS: [&[i64]; 9] = [
        &[1],
        &[2],
        &[4, 1],
        &[10, 4],
        &[20, 21, 1],
        &[56, 70, 6],
        &[140, 238, 50, 1],
        &[420, 792, 210, 8],
        &[1176, 2604, 990, 91, 1],
    ];

    #[test]
    fn det2_and_per2_examples() {
        assert_eq!(det2(&rat(1), &rat(0), &rat(0), &rat(1)), rat(1));
        assert_eq!(det2(&rat(3), &rat(1), &rat(9), &rat(4)), rat(3));
        assert_eq!(det2(&rat(7), &rat(2), &rat(7), &rat(2)), rat(0));
        assert_eq!(per2(&rat(1), &rat(0), &rat(0), &rat(1)), rat(1));
        assert_eq!(per2(&rat(9), &rat(4), &rat(28), &rat(14)), rat(238));
        assert_eq!(per2(&rat(9), &rat(4), &rat(90), &rat(48)), rat(792));
    }

    #[test]
    fn x_reference_rows() {
        for (n, row) in X_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(x_entry(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(x_entry(3, 1), int(14));
        assert_eq!(x_entry(4, 2), int(90));
        assert_eq!(x_entry(2, 0), int(0));
    }

    #[test]
    fn y_reference_rows() {
        for (n, row) in Y_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(y_entry(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(y_entry(3, 1), int(40));
        assert_eq!(y_entry(2, 1), int(6));
        assert_eq!(y_entry(5, 0), int(594));
    }

    #[test]
    fn z_reference_rows() {
        for (n, row) in Z_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(z_entry(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(z_entry(4, 2), int(12));
        assert_eq!(z_entry(5, 1), int(45));
        assert_eq!(z_entry(6, 3), int(70));
        assert_eq!(z_entry(3, 4), int(0));
    }

    #[test]
    fn w_reference_rows() {
        for (n, row) in W_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(w_entry(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(w_entry(6, 1), int(238));
        assert_eq!(w_entry(8, 3), int(91));
        assert_eq!(w_entry(3, 0), int(10));
    }

    #[test]
    fn w_vanishes_outside_support() {
        for row in 0..=20 {
            let support = DerivedKind::W.support_max(row);
            for k in support + 1..=row + 2 {
                assert!(w_entry(row, k).is_zero(), "row={row} k={k}");
            }
        }
    }

    #[test]
    fn x_row_sums_are_catalan_squares() {
        for n in 0..=25 {
            let s: Int = (0..=n).map(|k| x_entry(n, k)).sum();
            assert_eq!(s, catalan(n) * catalan(n), "row {n}");
        }
    }

    #[test]
    fn y_row_sums_are_consecutive_catalan_products() {
        for n in 0..=25 {
            let s: Int = (0..=n).map(|k| y_entry(n, k)).sum();
            assert_eq!(s, catalan(n) * catalan(n + 1), "row {n}");
        }
    }

    #[test]
    fn z_row_sums_and_alternating_sums() {
        let t = AnyTable::Derived(DerivedKind::Z);
        for n in 0..=25 {
            assert_eq!(row_sum(&t, n, false), Rat::from_integer(catalan(n + 1)), "row {n}");
            let alt = row_sum(&t, n, true);
            if n % 2 == 0 {
                let c = catalan(n / 2);
                assert_eq!(alt, Rat::from_integer(&c * &c), "row {n}");
            } else {
                assert!(alt.is_zero(), "row {n}");
            }
        }
    }

    #[test]
    fn w_row_sums_are_shifted_catalan() {
        let t = AnyTable::Derived(DerivedKind::W);
        for n in 0..=25 {
            assert_eq!(row_sum(&t, n, false), Rat::from_integer(catalan(n + 1)), "row {n}");
        }
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(row_sum(&AnyTable::Derived(DerivedKind::X), 4, false), rat(196));
        assert_eq!(row_sum(&AnyTable::Derived(DerivedKind::Z), 6, true), rat(25));
        assert_eq!(row_sum(&AnyTable::Derived(DerivedKind::W), 7, false), rat(1430));
        assert_eq!(row_sum(&AnyTable::Base(Triangle::Shapiro), 6, true), rat(132));
    }
}
