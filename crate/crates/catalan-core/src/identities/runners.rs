//! One runner per registered identity.  Every runner walks its parameter box
//! in a fixed order, counts each full parameter assignment as one case, and
//! stops at the first failing cell.
//!
//! Sums follow the printed upper limits of the closed-form statements; where
//! those limits are `min` expressions the zero-extension of the triangles
//! makes any longer range sum to the same value (asserted by unit tests, not
//! re-checked here).  Fractional closed forms are compared after clearing
//! denominators so every comparison is between integers.

use crate::bijections::count_dyck_by_pivot;
use crate::exact::{catalan, int, rat, rising_int, BinomTable, Int, Rat};
use crate::triangles::{admissible, motzkin_zero_closed_form, shapiro, MotzkinTable};
use super::{Counterexample, Outcome, VerifyOptions};
use std::fmt::Display;

fn pass(domain: String, cases: u64) -> Outcome {
    Outcome { domain, cases, counterexample: None }
}

fn fail<L: Display, R: Display>(
    domain: String,
    cases: u64,
    params: &[(&str, String)],
    lhs: L,
    rhs: R,
) -> Outcome {
    let params = params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    Outcome {
        domain,
        cases,
        counterexample: Some(Counterexample { params, lhs: lhs.to_string(), rhs: rhs.to_string() }),
    }
}

fn s(v: i64) -> String {
    v.to_string()
}

/// Ballot triangle rows built by the corner recurrence
/// `C(n,k) = C(n-1,k-1) + C(n,k+1)`, `C(n,n) = 1`, `C(n,0) = C(n,1)`.
/// Runners read entries through this cache instead of the closed form; the
/// `relations` runner is what ties the two together.
pub(super) struct Tri {
    rows: Vec<Vec<Int>>,
    zero: Int,
}

impl Tri {
    pub(super) fn new(max_row: i64) -> Tri {
        let max = max_row.max(0) as usize;
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(max + 1);
        rows.push(vec![Int::from(1)]);
        for n in 1..=max {
            let mut row = vec![Int::from(0); n + 1];
            row[n] = Int::from(1);
            for k in (1..n).rev() {
                row[k] = &rows[n - 1][k - 1] + &row[k + 1];
            }
            row[0] = row[1].clone();
            rows.push(row);
        }
        Tri { rows, zero: Int::from(0) }
    }

    /// Ballot entry, zero outside `0 <= k <= n`.
    pub(super) fn c(&self, n: i64, k: i64) -> &Int {
        if n < 0 || k < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }

    /// Companion triangle entry through its embedding in the ballot triangle.
    pub(super) fn b(&self, n: i64, k: i64) -> &Int {
        if n < 0 || k < 0 || k > n {
            return &self.zero;
        }
        self.c(n + k + 1, 2 * k + 1)
    }

    /// Catalan number as the k = 0 ballot column, zero for negative n.
    pub(super) fn cat(&self, n: i64) -> &Int {
        self.c(n, 0)
    }
}

/// Integer-valued weighted triangle for a fixed integer point (x, y);
/// all rows are materialized up front.
pub(super) struct IntMotzkin {
    rows: Vec<Vec<Int>>,
    zero: Int,
}

impl IntMotzkin {
    pub(super) fn new(x: i64, y: i64, max_row: i64) -> IntMotzkin {
        let max = max_row.max(0) as usize;
        let mut rows: Vec<Vec<Int>> = Vec::with_capacity(max + 1);
        rows.push(vec![Int::from(1)]);
        for n in 1..=max {
            let prev = &rows[n - 1];
            let top = n - 1;
            let mut row = Vec::with_capacity(n + 1);
            for k in 0..=n {
                let mut v = Int::from(0);
                if k == 0 {
                    v += &prev[0] * x;
                    if top >= 1 {
                        v += &prev[1];
                    }
                } else {
                    v += &prev[k - 1];
                    if k <= top {
                        v += &prev[k] * y;
                    }
                    if k < top {
                        v += &prev[k + 1];
                    }
                }
                row.push(v);
            }
            rows.push(row);
        }
        IntMotzkin { rows, zero: Int::from(0) }
    }

    pub(super) fn at(&self, n: i64, k: i64) -> &Int {
        if n < 0 || k < 0 || k > n {
            return &self.zero;
        }
        &self.rows[n as usize][k as usize]
    }
}

fn l_cap(opts: &VerifyOptions, m: i64) -> i64 {
    match opts.l_max {
        Some(cap) => cap.min(m),
        None => m,
    }
}

fn l_desc(opts: &VerifyOptions) -> String {
    match opts.l_max {
        Some(cap) => format!("min(m, {cap})"),
        None => "m".to_string(),
    }
}

// ---------------------------------------------------------------------------
// row sums, convolution, alternating sum
// ---------------------------------------------------------------------------

pub(super) fn run_row_sum_b(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}", opts.n_max);
    let tri = Tri::new(2 * opts.n_max.max(0) + 2);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        let mut lhs = Int::from(0);
        for k in 0..=n {
            lhs += tri.b(n, k);
        }
        let rhs = tri.cat(n) * (2 * n + 1);
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_shapiro_convolution(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}, 0 <= m <= {}", opts.n_max, opts.m_max);
    let top = opts.n_max.max(opts.m_max).max(0);
    let tri = Tri::new((2 * top + 2).max(opts.n_max + opts.m_max + 1));
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            let mut lhs = Int::from(0);
            for k in 0..=n.min(m) {
                lhs += tri.b(n, k) * tri.b(m, k);
            }
            let rhs = tri.cat(m + n + 1);
            cases += 1;
            if &lhs != rhs {
                return fail(domain, cases, &[("n", s(n)), ("m", s(m))], lhs, rhs);
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_eplett(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}", opts.n_max);
    let tri = Tri::new(2 * opts.n_max.max(0) + 2);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        let mut lhs = Int::from(0);
        for k in 0..=n {
            if k % 2 == 0 {
                lhs += tri.b(n, k);
            } else {
                lhs -= tri.b(n, k);
            }
        }
        let rhs = tri.cat(n);
        cases += 1;
        if &lhs != rhs {
            return fail(domain, cases, &[("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

// ---------------------------------------------------------------------------
// lifted determinant sum over the weighted triangle
// ---------------------------------------------------------------------------

// LHS cells factor through S(a, b, d) = sum_k M(a,k) * M(b,k+d): the
// determinant splits into S(n, m+r+1, l+1) - S(n+r+1, m, l+1), both ranges
// covered by the printed min bound.  S is tabulated once per grid point.
pub(super) fn run_thm_1_1(opts: &VerifyOptions) -> Outcome {
    let g = opts.grid_radius.max(0);
    let domain = format!(
        "0 <= n <= {}, 0 <= m <= {}, 0 <= l <= {}, 0 <= r <= {}, x,y in [-{g},{g}]^2",
        opts.n_max,
        opts.m_max,
        l_desc(opts),
        opts.r_max,
    );
    if opts.n_max < 0 || opts.m_max < 0 || opts.r_max < 0 {
        return pass(domain, 0);
    }
    let a_top = opts.n_max.max(opts.m_max) + opts.r_max + 1;
    let d_top = match opts.l_max {
        Some(cap) => cap.min(opts.m_max) + 1,
        None => opts.m_max + 1,
    };
    if d_top < 1 {
        return pass(domain, 0);
    }
    let (au, du) = (a_top as usize, d_top as usize);
    let mut cases = 0;
    for x in -g..=g {
        for y in -g..=g {
            let mx = IntMotzkin::new(x, y, a_top);
            let my = IntMotzkin::new(y, y, a_top);
            // s_tab[a][b][d-1] = S(a, b, d)
            let mut s_tab: Vec<Vec<Vec<Int>>> = Vec::with_capacity(au + 1);
            for a in 0..=au {
                let mut by_b = Vec::with_capacity(au + 1);
                for b in 0..=au {
                    let mut by_d = Vec::with_capacity(du);
                    for d in 1..=du {
                        let mut acc = Int::from(0);
                        let hi = (a as i64).min(b as i64 - d as i64);
                        for k in 0..=hi {
                            acc += mx.at(a as i64, k) * mx.at(b as i64, k + d as i64);
                        }
                        by_d.push(acc);
                    }
                    by_b.push(by_d);
                }
                s_tab.push(by_b);
            }
            for n in 0..=opts.n_max {
                for m in 0..=opts.m_max {
                    for l in 0..=l_cap(opts, m) {
                        // S is stored with d = l + 1 at slot l
                        let du_idx = l as usize;
                        for r in 0..=opts.r_max {
                            let lhs = &s_tab[n as usize][(m + r + 1) as usize][du_idx]
                                - &s_tab[(n + r + 1) as usize][m as usize][du_idx];
                            let mut rhs = Int::from(0);
                            for i in 0..=r {
                                rhs += mx.at(n + i, 0) * my.at(m + r - i, l);
                            }
                            cases += 1;
                            if lhs != rhs {
                                return fail(
                                    domain,
                                    cases,
                                    &[
                                        ("n", s(n)),
                                        ("m", s(m)),
                                        ("l", s(l)),
                                        ("r", s(r)),
                                        ("x", s(x)),
                                        ("y", s(y)),
                                    ],
                                    lhs,
                                    rhs,
                                );
                            }
                        }
                    }
                }
            }
        }
    }
    pass(domain, cases)
}

// ---------------------------------------------------------------------------
// determinant sums on the ballot triangle
// ---------------------------------------------------------------------------

pub(super) fn run_thm_2_1_det_a(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= {}, 0 <= m <= {}, 0 <= l <= {}",
        opts.n_max,
        opts.m_max,
        l_desc(opts)
    );
    let tri = Tri::new(opts.n_max + opts.m_max + 4);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            for l in 0..=l_cap(opts, m) {
                let top = (n + 1).min(m - l);
                let mut lhs = Int::from(0);
                for k in 0..=top {
                    lhs += tri.c(n + k, 2 * k) * tri.c(m + k + 1, 2 * k + l + 1)
                        - tri.c(m + k, 2 * k + l + 1) * tri.c(n + k + 1, 2 * k);
                }
                let rhs = tri.cat(n) * tri.c(m, l);
                cases += 1;
                if lhs != rhs {
                    return fail(domain, cases, &[("n", s(n)), ("m", s(m)), ("l", s(l))], lhs, rhs);
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_2_1_det_b(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= {}, 0 <= m <= {}, 0 <= l <= {}",
        opts.n_max,
        opts.m_max,
        l_desc(opts)
    );
    let tri = Tri::new(opts.n_max + opts.m_max + 6);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            for l in 0..=l_cap(opts, m) {
                let top = (n + 1).min(m - l);
                let mut lhs = Int::from(0);
                for k in 0..=top {
                    lhs += tri.c(n + k + 1, 2 * k + 1) * tri.c(m + k + 2, 2 * k + l + 2)
                        - tri.c(m + k + 1, 2 * k + l + 2) * tri.c(n + k + 2, 2 * k + 1);
                }
                let rhs = tri.cat(n + 1) * tri.c(m, l);
                cases += 1;
                if lhs != rhs {
                    return fail(domain, cases, &[("n", s(n)), ("m", s(m)), ("l", s(l))], lhs, rhs);
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_2_1_sum_a(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= {}, 0 <= m <= {}, 0 <= l <= {}, excluding (m,l)=(0,0)",
        opts.n_max,
        opts.m_max,
        l_desc(opts)
    );
    let tri = Tri::new(opts.n_max + opts.m_max + 4);
    let binom = BinomTable::new(2 * opts.n_max.max(opts.m_max).max(0) + 4);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            for l in 0..=l_cap(opts, m) {
                if (m, l) == (0, 0) {
                    // the closed form divides by a Pochhammer that vanishes here
                    continue;
                }
                let lhs = tri.cat(n) * tri.c(m, l) * rising_int(2 * n + 1, 3)
                    * rising_int(2 * m - l, 3);
                let top = (n + 1).min(m - l);
                let mut rhs = Int::from(0);
                for k in 0..=top {
                    let w = (opts.scalars.det_weight_a)(n, k, m, l);
                    rhs += w
                        * ((2 * k + 1) * (2 * k + l + 2))
                        * binom.at(2 * n + 3, n - k + 1)
                        * binom.at(2 * m - l + 2, m - k - l);
                }
                cases += 1;
                if lhs != rhs {
                    return fail(domain, cases, &[("n", s(n)), ("m", s(m)), ("l", s(l))], lhs, rhs);
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_2_1_sum_b(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= {}, 0 <= m <= {}, 0 <= l <= {}",
        opts.n_max,
        opts.m_max,
        l_desc(opts)
    );
    let tri = Tri::new(opts.n_max + opts.m_max + 4);
    let binom = BinomTable::new(2 * opts.n_max.max(opts.m_max).max(0) + 5);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            for l in 0..=l_cap(opts, m) {
                let lhs = tri.cat(n + 1) * tri.c(m, l) * rising_int(2 * n + 2, 3)
                    * rising_int(2 * m - l + 1, 3);
                let top = (n + 1).min(m - l);
                let mut rhs = Int::from(0);
                for k in 0..=top {
                    let w = (opts.scalars.det_weight_b)(n, k, m, l);
                    rhs += w
                        * ((2 * k + 2) * (2 * k + l + 3))
                        * binom.at(2 * n + 4, n - k + 1)
                        * binom.at(2 * m - l + 3, m - k - l);
                }
                cases += 1;
                if lhs != rhs {
                    return fail(domain, cases, &[("n", s(n)), ("m", s(m)), ("l", s(l))], lhs, rhs);
                }
            }
        }
    }
    pass(domain, cases)
}

// ---------------------------------------------------------------------------
// single-parameter corollaries of the determinant sums
// ---------------------------------------------------------------------------

pub(super) fn run_cor_2_2(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}, parts a,b,c", opts.n_max);
    let binom = BinomTable::new(2 * opts.n_max.max(0) + 5);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        let lhs_a = catalan(n + 1) * catalan(n + 1) * rising_int(2 * n + 1, 5);
        let mut rhs_a = Int::from(0);
        for k in 0..=n {
            rhs_a += int((2 * k + 1) * (2 * k + 3) * (8 * n * k + 10 * k + 2 * n + 4))
                * binom.at(2 * n + 2, n - k)
                * binom.at(2 * n + 5, n - k + 2);
        }
        cases += 1;
        if lhs_a != rhs_a {
            return fail(domain, cases, &[("part", "a".into()), ("n", s(n))], lhs_a, rhs_a);
        }

        let lhs_b = catalan(n) * catalan(n + 1)
            * int((2 * n + 1) * (2 * n + 2) * (2 * n + 3) * (2 * n + 3));
        let mut rhs_b = Int::from(0);
        for k in 0..=n {
            rhs_b += int((2 * k + 1) * (2 * k + 2) * (2 * k + 3))
                * binom.at(2 * n + 3, n - k)
                * binom.at(2 * n + 3, n - k + 1);
        }
        cases += 1;
        if lhs_b != rhs_b {
            return fail(domain, cases, &[("part", "b".into()), ("n", s(n))], lhs_b, rhs_b);
        }

        let lhs_c = catalan(n) * catalan(n + 2) * rising_int(2 * n + 1, 5);
        let mut rhs_c = Int::from(0);
        for k in 0..=n {
            rhs_c += int((2 * k + 1) * (2 * k + 3) * (8 * n * k + 10 * k + 14 * n + 16))
                * binom.at(2 * n + 2, n - k)
                * binom.at(2 * n + 5, n - k + 1);
        }
        cases += 1;
        if lhs_c != rhs_c {
            return fail(domain, cases, &[("part", "c".into()), ("n", s(n))], lhs_c, rhs_c);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_2_3(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}, parts a,b,c", opts.n_max);
    let binom = BinomTable::new(2 * opts.n_max.max(0) + 6);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        let lhs_a = catalan(n + 1) * catalan(n + 2) * rising_int(2 * n + 2, 5);
        let mut rhs_a = Int::from(0);
        for k in 0..=n {
            rhs_a += int((2 * k + 2) * (2 * k + 4) * (8 * n * k + 6 * n + 14 * k + 12))
                * binom.at(2 * n + 3, n - k)
                * binom.at(2 * n + 6, n - k + 2);
        }
        cases += 1;
        if lhs_a != rhs_a {
            return fail(domain, cases, &[("part", "a".into()), ("n", s(n))], lhs_a, rhs_a);
        }

        let lhs_b = catalan(n + 1) * catalan(n + 1)
            * int((2 * n + 2) * (2 * n + 3) * (2 * n + 4) * (2 * n + 4));
        let mut rhs_b = Int::from(0);
        for k in 0..=n {
            rhs_b += int((2 * k + 2) * (2 * k + 3) * (2 * k + 4))
                * binom.at(2 * n + 4, n - k)
                * binom.at(2 * n + 4, n - k + 1);
        }
        cases += 1;
        if lhs_b != rhs_b {
            return fail(domain, cases, &[("part", "b".into()), ("n", s(n))], lhs_b, rhs_b);
        }

        let lhs_c = catalan(n + 1) * catalan(n + 2) * rising_int(2 * n + 2, 5);
        let mut rhs_c = Int::from(0);
        for k in 0..=n {
            rhs_c += int((2 * k + 2) * (2 * k + 4) * (8 * n * k + 14 * k + 18 * n + 30))
                * binom.at(2 * n + 3, n - k)
                * binom.at(2 * n + 6, n - k + 1);
        }
        cases += 1;
        if lhs_c != rhs_c {
            return fail(domain, cases, &[("part", "c".into()), ("n", s(n))], lhs_c, rhs_c);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_2_4_a(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "1 <= n <= {}, 0 <= l <= min(n, {})",
        opts.n_max,
        opts.l_max.map_or("n".to_string(), |v| v.to_string())
    );
    let binom = BinomTable::new(2 * opts.n_max.max(0) + 3);
    let mut cases = 0;
    // n = 0 forces l = 0 where the divided Pochhammer vanishes, so the
    // closed form starts at n = 1.
    for n in 1..=opts.n_max {
        for l in 0..=l_cap(opts, n) {
            let lhs = binom.at(2 * n - l + 1, n - l) * catalan(n) * rising_int(2 * n + 1, 2)
                * rising_int(2 * n - l, 3);
            let mut sum = Int::from(0);
            for k in 0..=(n - l) {
                let w = (opts.scalars.det_weight_a_diag)(n, k, l);
                sum += w
                    * ((2 * k + 1) * (2 * k + l + 2))
                    * binom.at(2 * n + 2, n - k + 1)
                    * binom.at(2 * n - l + 2, n - k - l);
            }
            let rhs = sum * (2 * n - l + 1);
            cases += 1;
            if lhs != rhs {
                return fail(domain, cases, &[("n", s(n)), ("l", s(l))], lhs, rhs);
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_2_4_b(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= {}, 0 <= l <= min(n, {})",
        opts.n_max,
        opts.l_max.map_or("n".to_string(), |v| v.to_string())
    );
    let binom = BinomTable::new(2 * opts.n_max.max(0) + 3);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for l in 0..=l_cap(opts, n) {
            let lhs = binom.at(2 * n - l + 1, n - l) * catalan(n + 1) * rising_int(2 * n + 2, 2)
                * rising_int(2 * n - l + 1, 3);
            let mut sum = Int::from(0);
            for k in 0..=(n - l) {
                let w = (opts.scalars.det_weight_b_diag)(n, k, l);
                sum += w
                    * ((2 * k + 2) * (2 * k + l + 3))
                    * binom.at(2 * n + 3, n - k + 1)
                    * binom.at(2 * n - l + 3, n - k - l);
            }
            let rhs = sum * (2 * n - l + 1);
            cases += 1;
            if lhs != rhs {
                return fail(domain, cases, &[("n", s(n)), ("l", s(l))], lhs, rhs);
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_2_5_a(opts: &VerifyOptions) -> Outcome {
    let domain = format!("1 <= n <= {}", opts.n_max);
    let binom = BinomTable::new(2 * opts.n_max.max(0) + 1);
    let mut cases = 0;
    for n in 1..=opts.n_max {
        let lhs = binom.at(2 * n, n) * catalan(n - 1)
            * int((2 * n - 1) * (2 * n - 1) * (2 * n) * (2 * n + 1));
        let mut rhs = Int::from(0);
        for k in 0..=n {
            rhs += int((2 * k + 1) * (2 * k + 1) * (4 * n * k - n - k))
                * binom.at(2 * n, n - k)
                * binom.at(2 * n + 1, n - k);
        }
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_2_5_b(opts: &VerifyOptions) -> Outcome {
    let domain = format!("1 <= n <= {}", opts.n_max);
    let binom = BinomTable::new(2 * opts.n_max.max(0) + 2);
    let mut cases = 0;
    for n in 1..=opts.n_max {
        let lhs = binom.at(2 * n, n) * catalan(n)
            * int(n * (n + 1) * (2 * n + 1) * (2 * n + 1));
        let mut rhs = Int::from(0);
        for k in 0..=n {
            rhs += int((k + 1) * (k + 1) * (4 * n * k + n + k))
                * binom.at(2 * n + 1, n - k)
                * binom.at(2 * n + 2, n - k);
        }
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

// ---------------------------------------------------------------------------
// mixed-parity convolution and its dyck-path readings
// ---------------------------------------------------------------------------

pub(super) fn run_thm_3_1_sum(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}, 0 <= m <= {}", opts.n_max, opts.m_max);
    let tri = Tri::new(opts.n_max + opts.m_max + 2);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            let mut lhs = Int::from(0);
            for k in 0..=n.min(m) {
                lhs += tri.c(m + k + 1, 2 * k + 1)
                    * (tri.c(n + k, 2 * k) + tri.c(n + k + 1, 2 * k + 2));
            }
            let rhs = tri.cat(m + n + 1);
            cases += 1;
            if &lhs != rhs {
                return fail(domain, cases, &[("n", s(n)), ("m", s(m))], lhs, rhs);
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_3_1_alt(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= {}, 0 <= m <= {}, p = m - n + 1",
        opts.n_max, opts.m_max
    );
    let tri = Tri::new(opts.n_max + opts.m_max + 2);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for m in 0..=opts.m_max {
            let mut lhs = Int::from(0);
            for k in 0..=n.min(m) {
                lhs += tri.c(m + k + 1, 2 * k + 1)
                    * (tri.c(n + k, 2 * k) - tri.c(n + k + 1, 2 * k + 2));
            }
            let rhs = (opts.scalars.catalan_imbalance)(n, m, m - n + 1);
            cases += 1;
            if lhs != rhs {
                return fail(domain, cases, &[("n", s(n)), ("m", s(m))], lhs, rhs);
            }
        }
    }
    pass(domain, cases)
}

// The three dyck-path corollaries are backed by explicit enumeration, so
// their boxes are capped independently of the requested ranges.

pub(super) fn run_cor_3_2_a(opts: &VerifyOptions) -> Outcome {
    let top = opts.n_max.min(4);
    let domain = format!("1 <= n <= {top} (enumeration-backed)");
    let mut cases = 0;
    for n in 1..=top {
        // paths of length 4n, pivot after step 2n: the two pivot classes
        // have equal counts
        let (u, d) = count_dyck_by_pivot(n, n - 1);
        cases += 1;
        if u != d {
            return fail(domain, cases, &[("n", s(n))], u, d);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_3_2_b(opts: &VerifyOptions) -> Outcome {
    let top = opts.n_max.min(4);
    let domain = format!("0 <= n <= {top} (enumeration-backed)");
    let mut cases = 0;
    for n in 0..=top {
        let (u, d) = count_dyck_by_pivot(n, n);
        let lhs = int(u as i64) - int(d as i64);
        let rhs = catalan(n) * catalan(n);
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_3_2_c(opts: &VerifyOptions) -> Outcome {
    let top = opts.n_max.min(3);
    let domain = format!("0 <= n <= {top} (enumeration-backed)");
    let mut cases = 0;
    for n in 0..=top {
        let (u, d) = count_dyck_by_pivot(n, n + 1);
        let lhs = int(u as i64) - int(d as i64);
        let rhs = catalan(n) * catalan(n + 1) * 2;
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

// ---------------------------------------------------------------------------
// permanent sums
// ---------------------------------------------------------------------------

pub(super) fn run_thm_4_1(opts: &VerifyOptions) -> Outcome {
    let g = opts.grid_radius.max(0);
    let domain = format!(
        "0 <= n <= m <= {}, {} <= r <= {}, y in [-{g},{g}]",
        opts.m_max, opts.r_min, opts.r_max
    );
    let mut cases = 0;
    for yv in -g..=g {
        let t = MotzkinTable::new(rat(yv), rat(yv));
        for n in 0..=opts.n_max.min(opts.m_max) {
            for m in n..=opts.m_max {
                for r in opts.r_min..=opts.r_max {
                    let mut lhs = Rat::from_integer(Int::from(0));
                    for k in 0..=m {
                        lhs += t.entry(n, k) * t.entry(m + r, k + 1)
                            + t.entry(n + r, k + 1) * t.entry(m, k);
                    }
                    let rhs =
                        t.entry(m + n + r, 1) + (opts.scalars.motzkin_correction)(&t, n, m, r);
                    cases += 1;
                    if lhs != rhs {
                        return fail(
                            domain,
                            cases,
                            &[("n", s(n)), ("m", s(m)), ("r", s(r)), ("y", s(yv))],
                            lhs,
                            rhs,
                        );
                    }
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_4_2_a(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= m <= {}, {} <= p <= {}",
        opts.m_max, opts.p_min, opts.p_max
    );
    let tri = Tri::new(2 * opts.m_max.max(0) + opts.p_max.max(0) + 2);
    let mut cases = 0;
    for n in 0..=opts.n_max.min(opts.m_max) {
        for m in n..=opts.m_max {
            for p in opts.p_min..=opts.p_max {
                let mut lhs = Int::from(0);
                for k in 0..=m {
                    lhs += tri.c(n + k, 2 * k) * tri.c(m + p + k, 2 * k + 1)
                        + tri.c(n + p + k, 2 * k + 1) * tri.c(m + k, 2 * k);
                }
                let rhs = tri.c(m + n + p, 1) + (opts.scalars.catalan_correction)(n, m, p);
                cases += 1;
                if lhs != rhs {
                    return fail(
                        domain,
                        cases,
                        &[("n", s(n)), ("m", s(m)), ("p", s(p))],
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_4_2_b(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "1 <= n <= m <= {}, {} <= p <= {}",
        opts.m_max, opts.p_min, opts.p_max
    );
    let tri = Tri::new(2 * opts.m_max.max(0) + opts.p_max.max(0) + 4);
    let mut cases = 0;
    // the shifted matrix needs n >= 1: at n = 0 its top-left entry leaves
    // the triangle and the correction no longer accounts for it
    for n in 1..=opts.n_max.min(opts.m_max) {
        for m in n..=opts.m_max {
            for p in opts.p_min..=opts.p_max {
                let mut lhs = Int::from(0);
                for k in 0..=m {
                    lhs += tri.c(n + k, 2 * k + 1) * tri.c(m + p + k + 1, 2 * k + 2)
                        + tri.c(n + p + k + 1, 2 * k + 2) * tri.c(m + k, 2 * k + 1);
                }
                let rhs = tri.c(m + n + p, 1) + (opts.scalars.catalan_correction)(n, m, p);
                cases += 1;
                if lhs != rhs {
                    return fail(
                        domain,
                        cases,
                        &[("n", s(n)), ("m", s(m)), ("p", s(p))],
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_4_3(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "general: 1 <= n <= m <= {}; special: 1 <= n <= {}",
        opts.m_max, opts.n_max
    );
    let binom = BinomTable::new(2 * opts.n_max.max(opts.m_max).max(0) + 1);
    let mut cases = 0;
    for n in 1..=opts.n_max.min(opts.m_max) {
        for m in n..=opts.m_max {
            let scale = int(2 * n) * int((2 * n + 1) * (2 * m) * (2 * m + 1));
            let lhs = catalan(n + m) * &scale;
            let mut rhs = Int::from(0);
            for k in 0..=n {
                rhs += int((2 * k + 1) * (2 * k + 2)) * int(4 * m * n - 2 * (m + n) * k)
                    * binom.at(2 * n + 1, n - k)
                    * binom.at(2 * m + 1, m - k);
            }
            cases += 1;
            if lhs != rhs {
                return fail(
                    domain,
                    cases,
                    &[("part", "a".into()), ("n", s(n)), ("m", s(m))],
                    lhs,
                    rhs,
                );
            }

            let lhs = catalan(n + m) * &scale;
            let mut rhs = Int::from(0);
            for k in 0..n {
                rhs += int((2 * k + 2) * (2 * k + 3)) * int(4 * m * n + 4 * m + 4 * n + 2 * (m + n) * k)
                    * binom.at(2 * n + 1, n - k - 1)
                    * binom.at(2 * m + 1, m - k - 1);
            }
            cases += 1;
            if lhs != rhs {
                return fail(
                    domain,
                    cases,
                    &[("part", "b".into()), ("n", s(n)), ("m", s(m))],
                    lhs,
                    rhs,
                );
            }
        }
    }
    for n in 1..=opts.n_max {
        let lhs = catalan(2 * n) * int(n * (2 * n + 1));
        let mut rhs = Int::from(0);
        for k in 0..n {
            rhs += int((2 * k + 1) * (2 * k + 2))
                * binom.at(2 * n, n - k - 1)
                * binom.at(2 * n + 1, n - k);
        }
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("part", "c".into()), ("n", s(n))], lhs, rhs);
        }

        let lhs = catalan(2 * n) * int(n * (2 * n + 1));
        let mut rhs = Int::from(0);
        for k in 0..n {
            rhs += int((2 * k + 2) * (2 * k + 3))
                * binom.at(2 * n, n - k - 1)
                * binom.at(2 * n + 1, n - k - 1);
        }
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("part", "d".into()), ("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_4_4(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "general: 0 <= n <= m <= {}; special: 0 <= n <= {}",
        opts.m_max, opts.n_max
    );
    let binom = BinomTable::new(2 * opts.n_max.max(opts.m_max).max(0) + 2);
    let mut cases = 0;
    for n in 0..=opts.n_max.min(opts.m_max) {
        for m in n..=opts.m_max {
            let lhs = (catalan(n + m + 1) + catalan(n) * catalan(m))
                * int((2 * n + 1) * (2 * n + 2))
                * int((2 * m + 1) * (2 * m + 2));
            let mut rhs = Int::from(0);
            for k in 0..=n {
                let w = (opts.scalars.per_weight_ballot)(n, m, k);
                rhs += w
                    * ((2 * k + 1) * (2 * k + 2))
                    * binom.at(2 * n + 2, n - k)
                    * binom.at(2 * m + 2, m - k);
            }
            cases += 1;
            if lhs != rhs {
                return fail(
                    domain,
                    cases,
                    &[("part", "general".into()), ("n", s(n)), ("m", s(m))],
                    lhs,
                    rhs,
                );
            }
        }
    }
    for n in 0..=opts.n_max {
        let lhs = (catalan(2 * n + 1) + catalan(n) * catalan(n)) * int((n + 1) * (2 * n + 1));
        let mut rhs = Int::from(0);
        for k in 0..=n {
            rhs += int((2 * k + 1) * (2 * k + 2))
                * binom.at(2 * n + 1, n - k)
                * binom.at(2 * n + 2, n - k);
        }
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("part", "special".into()), ("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_thm_4_4(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "0 <= n <= m <= {}, {} <= p <= {} with n + p >= 0",
        opts.m_max, opts.p_min, opts.p_max
    );
    let tri = Tri::new(2 * opts.m_max.max(0) + opts.p_max.max(0) + 5);
    let mut cases = 0;
    for n in 0..=opts.n_max.min(opts.m_max) {
        for m in n..=opts.m_max {
            for p in opts.p_min..=opts.p_max {
                if n + p < 0 {
                    // lifting by p drags a whole row of the companion
                    // triangle below row zero; the correction term assumes
                    // that cannot happen
                    continue;
                }
                let mut lhs = Int::from(0);
                for k in 0..=m {
                    lhs += tri.b(n, k) * tri.b(m + p, k + 1) + tri.b(n + p, k + 1) * tri.b(m, k);
                }
                let rhs =
                    tri.b(m + n + p, 1) + (opts.scalars.catalan_correction)(n + 1, m + 1, p);
                cases += 1;
                if lhs != rhs {
                    return fail(
                        domain,
                        cases,
                        &[("n", s(n)), ("m", s(m)), ("p", s(p))],
                        lhs,
                        rhs,
                    );
                }
            }
        }
    }
    pass(domain, cases)
}

pub(super) fn run_cor_4_5(opts: &VerifyOptions) -> Outcome {
    let domain = format!(
        "general: 0 <= n <= m <= {}; special: 0 <= n <= {}",
        opts.m_max, opts.n_max
    );
    let top = opts.n_max.max(opts.m_max).max(0);
    let binom = BinomTable::new((4 * top + 2).max(2 * top + 3));
    let mut cases = 0;
    for n in 0..=opts.n_max.min(opts.m_max) {
        for m in n..=opts.m_max {
            let lhs = binom.at(2 * n + 2 * m + 2, n + m - 1)
                * 2
                * rising_int(2 * n + 2, 2)
                * rising_int(2 * m + 2, 2);
            let mut sum = Int::from(0);
            for k in 0..=n {
                let w = (opts.scalars.per_weight_shapiro)(n, k, m);
                sum += w
                    * ((2 * k + 2) * (2 * k + 4))
                    * binom.at(2 * n + 3, n - k)
                    * binom.at(2 * m + 3, m - k);
            }
            let rhs = sum * (n + m + 1);
            cases += 1;
            if lhs != rhs {
                return fail(
                    domain,
                    cases,
                    &[("part", "general".into()), ("n", s(n)), ("m", s(m))],
                    lhs,
                    rhs,
                );
            }
        }
    }
    for n in 0..=opts.n_max {
        let lhs = binom.at(4 * n + 2, 2 * n - 1) * ((n + 1) * (n + 1));
        let mut sum = Int::from(0);
        for k in 0..n {
            sum += int((k + 1) * (k + 2))
                * binom.at(2 * n + 2, n - k - 1)
                * binom.at(2 * n + 2, n - k);
        }
        let rhs = sum * (2 * n + 1);
        cases += 1;
        if lhs != rhs {
            return fail(domain, cases, &[("part", "special".into()), ("n", s(n))], lhs, rhs);
        }
    }
    pass(domain, cases)
}

// ---------------------------------------------------------------------------
// index relations and specializations between the four families
// ---------------------------------------------------------------------------

pub(super) fn run_relations(opts: &VerifyOptions) -> Outcome {
    let domain = format!("0 <= n <= {}, 0 <= k <= n", opts.n_max);
    let tri = Tri::new(2 * opts.n_max.max(0) + 3);
    let mut cases = 0;
    for n in 0..=opts.n_max {
        for k in 0..=n {
            cases += 1;
            let lhs = admissible(n, k);
            let rhs = tri.c(n + k, 2 * k);
            if &lhs != rhs {
                return fail(domain, cases, &[("check", "a-embeds".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
            cases += 1;
            let lhs = shapiro(n, k);
            let rhs = tri.c(n + k + 1, 2 * k + 1);
            if &lhs != rhs {
                return fail(domain, cases, &[("check", "b-embeds".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
            cases += 1;
            let lhs = shapiro(n, k);
            let rhs = tri.c(n + k, 2 * k) + tri.c(n + k + 1, 2 * k + 2);
            if lhs != rhs {
                return fail(domain, cases, &[("check", "b-splits".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
        }
        cases += 1;
        let lhs = tri.c(n, 0).clone();
        let rhs = catalan(n);
        if lhs != rhs {
            return fail(domain, cases, &[("check", "column-0".into()), ("n", s(n))], lhs, rhs);
        }
        cases += 1;
        let lhs = tri.c(n + 1, 1).clone();
        let rhs = catalan(n + 1);
        if lhs != rhs {
            return fail(domain, cases, &[("check", "column-1".into()), ("n", s(n))], lhs, rhs);
        }
        cases += 1;
        let mut row_sum = Int::from(0);
        for k in 0..=n {
            row_sum += tri.c(n, k);
        }
        let rhs = catalan(n + 1);
        if row_sum != rhs {
            return fail(domain, cases, &[("check", "row-sum".into()), ("n", s(n))], row_sum, rhs);
        }
    }
    pass(domain, cases)
}

pub(super) fn run_specializations(opts: &VerifyOptions) -> Outcome {
    let top = opts.n_max.min(30);
    let domain = format!("0 <= n <= {top}, 0 <= k <= n");
    let m_adm = MotzkinTable::new(rat(1), rat(2));
    let m_shp = MotzkinTable::new(rat(2), rat(2));
    let m_flat = MotzkinTable::new(rat(0), rat(0));
    let tri = Tri::new(2 * top.max(0) + 1);
    let mut cases = 0;
    for n in 0..=top {
        for k in 0..=n {
            cases += 1;
            let lhs = m_adm.entry(n, k);
            let rhs = Rat::from_integer(admissible(n, k));
            if lhs != rhs {
                return fail(domain, cases, &[("check", "x1-y2".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
            cases += 1;
            let lhs = m_shp.entry(n, k);
            let rhs = Rat::from_integer(shapiro(n, k));
            if lhs != rhs {
                return fail(domain, cases, &[("check", "x2-y2".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
            cases += 1;
            let lhs = m_flat.entry(2 * n - k, k);
            let rhs = Rat::from_integer(tri.c(n, k).clone());
            if lhs != rhs {
                return fail(domain, cases, &[("check", "x0-y0".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
            cases += 1;
            let lhs = m_flat.entry(n, k);
            let rhs = Rat::from_integer(motzkin_zero_closed_form(n, k));
            if lhs != rhs {
                return fail(domain, cases, &[("check", "x0-y0-closed".into()), ("n", s(n)), ("k", s(k))], lhs, rhs);
            }
        }
    }
    pass(domain, cases)
}

