//! The four base triangles: ballot numbers, Shapiro's Catalan triangle, the
//! admissible triangle, and the two-parameter weighted Motzkin triangle.
//!
//! All entry functions are total: indices outside `0 <= k <= n` yield 0.
//! Every sum in the identity catalogue relies on that zero-extension.

use std::cell::RefCell;

use num_traits::{One, Zero};

use crate::exact::{binomial, catalan, exact_div, int, Int, Rat};

/// Ballot number: the number of up/down lattice paths of length `2n - k` from
/// the origin to level `k` that never go below the axis.
///
/// Two equivalent closed forms exist,
/// `(k+1)/(2n-k+1) * binomial(2n-k+1, n-k)` and
/// `(k+1)/(n+1) * binomial(2n-k, n)`; this computes the second. Their
/// agreement is checked in the test suite.
pub fn ballot(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 || k > n {
        return Int::zero();
    }
    exact_div(int(k + 1) * binomial(2 * n - k, n), &int(n + 1))
}

/// Entry of Shapiro's Catalan triangle: `(k+1)/(n+1) * binomial(2n+2, n-k)`.
/// Column 0 holds the Catalan numbers shifted by one.
pub fn shapiro(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 || k > n {
        return Int::zero();
    }
    exact_div(int(k + 1) * binomial(2 * n + 2, n - k), &int(n + 1))
}

/// Entry of the admissible triangle: `(2k+1)/(2n+1) * binomial(2n+1, n-k)`.
pub fn admissible(n: i64, k: i64) -> Int {
    if n < 0 || k < 0 || k > n {
        return Int::zero();
    }
    exact_div(int(2 * k + 1) * binomial(2 * n + 1, n - k), &int(2 * n + 1))
}

/// Total weight of partial Motzkin paths of length `n` ending at level `k`,
/// where a flat step weighs `x` on the axis and `y` above it.
///
/// Computed by the transfer recurrence, not enumeration: row 0 is `[1]`,
/// then `M(n+1, 0) = x M(n, 0) + M(n, 1)` and
/// `M(n+1, k) = M(n, k-1) + y M(n, k) + M(n, k+1)` for `k >= 1`.
/// Returns 0 for `k < 0` or `k > n`.
///
/// # Panics
/// Negative `n` is a domain error.
pub fn motzkin_weight(n: i64, k: i64, x: &Rat, y: &Rat) -> Rat {
    assert!(n >= 0, "motzkin_weight: negative n = {n}");
    MotzkinTable::new(x.clone(), y.clone()).entry(n, k)
}

/// Closed form for the Motzkin triangle at `x = y = 0`:
/// `(k+1)/(n+1) * binomial(n+1, (n-k)/2)` when `n - k` is even, else 0.
///
/// # Panics
/// Negative `n` is a domain error.
pub fn motzkin_zero_closed_form(n: i64, k: i64) -> Int {
    assert!(n >= 0, "motzkin_zero_closed_form: negative n = {n}");
    if k < 0 || k > n || (n - k) % 2 != 0 {
        return Int::zero();
    }
    exact_div(int(k + 1) * binomial(n + 1, (n - k) / 2), &int(n + 1))
}

/// A lazily grown cache of weighted Motzkin triangle rows at a fixed `(x, y)`.
///
/// Rows are immutable once computed; `entry` is total with the usual
/// zero-extension (including negative `n`, which several correction-term sums
/// hit on purpose).
pub struct MotzkinTable {
    x: Rat,
    y: Rat,
    rows: RefCell<Vec<Vec<Rat>>>,
}

impl MotzkinTable {
    pub fn new(x: Rat, y: Rat) -> Self {
        MotzkinTable {
            x,
            y,
            rows: RefCell::new(vec![vec![Rat::one()]]),
        }
    }

    pub fn x(&self) -> &Rat {
        &self.x
    }

    pub fn y(&self) -> &Rat {
        &self.y
    }

    pub fn entry(&self, n: i64, k: i64) -> Rat {
        if n < 0 || k < 0 || k > n {
            return Rat::zero();
        }
        let n = n as usize;
        let k = k as usize;
        {
            let mut rows = self.rows.borrow_mut();
            while rows.len() <= n {
                let prev = rows.last().unwrap();
                let t = prev.len() - 1;
                let mut next = Vec::with_capacity(t + 2);
                let get = |j: usize| {
                    if j <= t {
                        prev[j].clone()
                    } else {
                        Rat::zero()
                    }
                };
                next.push(&self.x * &prev[0] + get(1));
                for j in 1..=t + 1 {
                    next.push(get(j - 1) + &self.y * get(j) + get(j + 1));
                }
                rows.push(next);
            }
        }
        self.rows.borrow()[n][k].clone()
    }
}

/// One of the four base triangles, as a uniform handle for rendering and
/// row-sum queries. The Motzkin variant carries its row cache.
pub enum Triangle {
    Ballot,
    Shapiro,
    Admissible,
    Motzkin(MotzkinTable),
}

impl Triangle {
    pub fn motzkin(x: Rat, y: Rat) -> Triangle {
        Triangle::Motzkin(MotzkinTable::new(x, y))
    }

    /// Entry as an exact rational (integral for the first three kinds).
    pub fn entry(&self, n: i64, k: i64) -> Rat {
        match self {
            Triangle::Ballot => Rat::from_integer(ballot(n, k)),
            Triangle::Shapiro => Rat::from_integer(shapiro(n, k)),
            Triangle::Admissible => Rat::from_integer(admissible(n, k)),
            Triangle::Motzkin(t) => {
                if n < 0 {
                    Rat::zero()
                } else {
                    t.entry(n, k)
                }
            }
        }
    }
}

/// Catalan number extended by zero to negative indices; the piecewise
/// correction terms of the permanental identities index below zero.
pub(crate) fn catalan_ext(n: i64) -> Int {
    if n < 0 {
        Int::zero()
    } else {
        catalan(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binomial, rat};
    use proptest::prelude::*;

    fn ballot_first_form(n: i64, k: i64) -> Int {
        if k < 0 || k > n {
            return Int::zero();
        }
        exact_div(int(k + 1) * binomial(2 * n - k + 1, n - k), &int(2 * n - k + 1))
    }

    #[test]
    fn both_ballot_closed_forms_agree() {
        for n in 0..=60 {
            for k in 0..=n {
                assert_eq!(ballot(n, k), ballot_first_form(n, k), "n={n} k={k}");
            }
        }
    }

    // Shapiro's triangle, rows 0..=6.
    const SHAPIRO_ROWS: [&[i64]; 7] = [
        &[1],
        &[2, 1],
        &[5, 4, 1],
        &[14, 14, 6, 1],
        &[42, 48, 27, 8, 1],
        &[132, 165, 110, 44, 10, 1],
        &[429, 572, 429, 208, 65, 12, 1],
    ];

    // Admissible triangle, rows 0..=6.
    const ADMISSIBLE_ROWS: [&[i64]; 7] = [
        &[1],
        &[1, 1],
        &[2, 3, 1],
        &[5, 9, 5, 1],
        &[14, 28, 20, 7, 1],
        &[42, 90, 75, 35, 9, 1],
        &[132, 297, 275, 154, 54, 11, 1],
    ];

    // Ballot triangle, rows 0..=7.
    const BALLOT_ROWS: [&[i64]; 8] = [
        &[1],
        &[1, 1],
        &[2, 2, 1],
        &[5, 5, 3, 1],
        &[14, 14, 9, 4, 1],
        &[42, 42, 28, 14, 5, 1],
        &[132, 132, 90, 48, 20, 6, 1],
        &[429, 429, 297, 165, 75, 27, 7, 1],
    ];

    #[test]
    fn shapiro_reference_rows() {
        for (n, row) in SHAPIRO_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(shapiro(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(shapiro(5, 2), int(110));
        assert_eq!(shapiro(4, 1), int(48));
        assert_eq!(shapiro(6, 6), int(1));
    }

    #[test]
    fn admissible_reference_rows() {
        for (n, row) in ADMISSIBLE_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(admissible(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(admissible(6, 2), int(275));
        assert_eq!(admissible(3, 1), int(9));
        assert_eq!(admissible(2, 5), int(0));
    }

    #[test]
    fn ballot_reference_rows() {
        for (n, row) in BALLOT_ROWS.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                assert_eq!(ballot(n as i64, k as i64), int(v), "n={n} k={k}");
            }
        }
        assert_eq!(ballot(5, 2), int(28));
        assert_eq!(ballot(6, 3), int(48));
        assert_eq!(ballot(0, 0), int(1));
    }

    #[test]
    fn index_relations_between_triangles() {
        for n in 0..=40 {
            for k in 0..=n {
                assert_eq!(admissible(n, k), ballot(n + k, 2 * k));
                assert_eq!(shapiro(n, k), ballot(n + k + 1, 2 * k + 1));
                // Shapiro entries split into two ballot entries.
                assert_eq!(shapiro(n, k), ballot(n + k, 2 * k) + ballot(n + k + 1, 2 * k + 2));
            }
        }
    }

    #[test]
    fn ballot_columns_hold_catalan_numbers() {
        for n in 0..=40 {
            assert_eq!(ballot(n, 0), catalan(n));
            assert_eq!(ballot(n + 1, 1), catalan(n + 1));
        }
    }

    /// The row sums are the Catalan numbers shifted by one. The unshifted
    /// variant (row n summing to the n-th Catalan number) looks plausible but
    /// is wrong from row 1 on; both facts are pinned here.
    #[test]
    fn ballot_row_sums_are_shifted_catalan() {
        for n in 0..=40 {
            let s: Int = (0..=n).map(|k| ballot(n, k)).sum();
            assert_eq!(s, catalan(n + 1), "row {n}");
            if n >= 1 {
                assert_ne!(s, catalan(n), "row {n} must not sum to the unshifted value");
            }
        }
    }

    #[test]
    fn motzkin_weight_reference_values() {
        assert_eq!(motzkin_weight(2, 0, &rat(2), &rat(2)), rat(5));
        assert_eq!(motzkin_weight(3, 1, &rat(1), &rat(2)), rat(9));
        assert_eq!(motzkin_weight(8, 2, &rat(0), &rat(0)), rat(28)); // ballot(5, 2)
        assert_eq!(motzkin_weight(0, 0, &rat(7), &rat(9)), rat(1));
        assert_eq!(motzkin_weight(3, 5, &rat(1), &rat(1)), rat(0));
    }

    #[test]
    #[should_panic(expected = "negative n")]
    fn motzkin_weight_rejects_negative_n() {
        motzkin_weight(-1, 0, &rat(1), &rat(1));
    }

    #[test]
    fn motzkin_specializes_to_admissible_and_shapiro() {
        let a = MotzkinTable::new(rat(1), rat(2));
        let b = MotzkinTable::new(rat(2), rat(2));
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(a.entry(n, k), Rat::from_integer(admissible(n, k)));
                assert_eq!(b.entry(n, k), Rat::from_integer(shapiro(n, k)));
            }
        }
    }

    #[test]
    fn motzkin_zero_specializes_to_ballot() {
        let m = MotzkinTable::new(rat(0), rat(0));
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(m.entry(2 * n - k, k), Rat::from_integer(ballot(n, k)));
            }
        }
    }

    #[test]
    fn motzkin_zero_closed_form_matches_recurrence() {
        let m = MotzkinTable::new(rat(0), rat(0));
        for n in 0..=20 {
            for k in 0..=n {
                assert_eq!(
                    Rat::from_integer(motzkin_zero_closed_form(n, k)),
                    m.entry(n, k),
                    "n={n} k={k}"
                );
                if (n - k) % 2 == 1 {
                    assert!(motzkin_zero_closed_form(n, k).is_zero());
                }
            }
        }
        assert_eq!(motzkin_zero_closed_form(4, 0), int(2));
        assert_eq!(motzkin_zero_closed_form(3, 0), int(0));
        assert_eq!(motzkin_zero_closed_form(5, 1), int(5));
    }

    /// Fully rational weights exercise the non-integer path of the table.
    #[test]
    fn motzkin_rational_weights() {
        let m = MotzkinTable::new(Rat::new(int(1), int(2)), Rat::new(int(1), int(3)));
        let expect = |p: i64, q: i64| Rat::new(int(p), int(q));
        let rows: [&[Rat]; 5] = [
            &[expect(1, 1)],
            &[expect(1, 2), expect(1, 1)],
            &[expect(5, 4), expect(5, 6), expect(1, 1)],
            &[expect(35, 24), expect(91, 36), expect(7, 6), expect(1, 1)],
            &[
                expect(469, 144),
                expect(749, 216),
                expect(47, 12),
                expect(3, 2),
                expect(1, 1),
            ],
        ];
        for (n, row) in rows.iter().enumerate() {
            for (k, v) in row.iter().enumerate() {
                assert_eq!(m.entry(n as i64, k as i64), *v, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn triangle_handle_zero_extension() {
        let t = Triangle::motzkin(rat(2), rat(2));
        assert_eq!(t.entry(-1, 0), rat(0));
        assert_eq!(t.entry(3, -1), rat(0));
        assert_eq!(t.entry(3, 4), rat(0));
        assert_eq!(Triangle::Ballot.entry(-2, 0), rat(0));
        assert_eq!(Triangle::Shapiro.entry(4, 1), rat(48));
    }

    proptest! {
        #[test]
        fn ballot_forms_agree_randomized(n in 0i64..200, k in 0i64..200) {
            prop_assert_eq!(ballot(n, k), ballot_first_form(n, k));
        }
    }

    #[test]
    fn weights_match_exhaustive_path_census() {
        // Walk every up/flat/down prefix of length <= 18 once, classing each
        // path by (length, end level, flats on the axis, flats above), then
        // evaluate the class counts at 9 rational points.  This checks the
        // weighted recurrence against literal path counting without ever
        // materializing the paths.
        const TOP: usize = 18;
        const DIM: usize = TOP + 1;
        fn idx(n: usize, k: usize, a: usize, b: usize) -> usize {
            ((n * DIM + k) * DIM + a) * DIM + b
        }
        fn walk(cnt: &mut [u64], depth: usize, level: usize, a: usize, b: usize) {
            cnt[idx(depth, level, a, b)] += 1;
            if depth == TOP {
                return;
            }
            walk(cnt, depth + 1, level + 1, a, b);
            if level == 0 {
                walk(cnt, depth + 1, 0, a + 1, b);
            } else {
                walk(cnt, depth + 1, level, a, b + 1);
                walk(cnt, depth + 1, level - 1, a, b);
            }
        }
        let mut cnt = vec![0u64; DIM * DIM * DIM * DIM];
        walk(&mut cnt, 0, 0, 0, 0);

        let half = rat(1) / rat(2);
        let third = rat(1) / rat(3);
        let points = [
            (rat(0), rat(0)),
            (rat(1), rat(1)),
            (rat(2), rat(2)),
            (rat(1), rat(2)),
            (rat(-1), rat(3)),
            (half.clone(), third),
            (-half, rat(2)),
            (rat(3), rat(-2)),
            (rat(5), rat(7)),
        ];
        for (x, y) in &points {
            let mut xp = vec![rat(1)];
            let mut yp = vec![rat(1)];
            for i in 1..DIM {
                xp.push(&xp[i - 1] * x);
                yp.push(&yp[i - 1] * y);
            }
            for n in 0..=TOP {
                for k in 0..=n {
                    let mut total = rat(0);
                    for a in 0..=n {
                        for b in 0..=n {
                            let c = cnt[idx(n, k, a, b)];
                            if c != 0 {
                                total += &xp[a] * &yp[b] * Rat::from_integer(Int::from(c));
                            }
                        }
                    }
                    assert_eq!(
                        total,
                        motzkin_weight(n as i64, k as i64, x, y),
                        "n={n} k={k} x={x} y={y}"
                    );
                }
            }
        }
    }
}
