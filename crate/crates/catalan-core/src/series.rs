//! Truncated formal power series over exact rationals, used to verify the
//! Riordan-array descriptions of the three base triangles.

use num_traits::{One, Zero};

use crate::exact::Rat;
use crate::triangles::{admissible, ballot, shapiro};

/// A power series truncated at an explicit order; `coeffs[i]` is the
/// coefficient of `t^i` and `coeffs.len() == order + 1`.
///
/// Arithmetic results carry the minimum of the operand orders, so every
/// stored coefficient is exact. Asking for a coefficient beyond the order is
/// a bug, not a zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    pub fn new(coeffs: Vec<Rat>) -> PowerSeries {
        assert!(!coeffs.is_empty(), "a series carries at least the constant term");
        PowerSeries { coeffs }
    }

    pub fn constant_one(order: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = Rat::one();
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// # Panics
    /// `i` beyond the truncation order is an error, not zero.
    pub fn coeff(&self, i: usize) -> &Rat {
        assert!(
            i <= self.order(),
            "coefficient {i} requested beyond truncation order {}",
            self.order()
        );
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn multiply(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rat::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                coeffs[i + j] += self.coeff(i) * other.coeff(j);
            }
        }
        PowerSeries { coeffs }
    }

    /// `self^k` by repeated multiplication; `k = 0` is the constant 1.
    pub fn power(&self, k: usize) -> PowerSeries {
        let mut acc = PowerSeries::constant_one(self.order());
        for _ in 0..k {
            acc = acc.multiply(self);
        }
        acc
    }

    /// Multiplication by `t^k`; the order grows by `k` since all the old
    /// coefficients remain exactly known.
    pub fn shift(&self, k: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| self.coeff(i) + other.coeff(i)).collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let order = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=order).map(|i| self.coeff(i) - other.coeff(i)).collect(),
        }
    }
}

/// The Catalan number generating function, built from its functional
/// equation `C = 1 + t C^2` via the convolution recurrence
/// `c_{n+1} = sum_i c_i c_{n-i}` (no radicals involved).
pub fn catalan_series(order: usize) -> PowerSeries {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = Rat::one();
    for n in 1..=order {
        let mut acc = Rat::zero();
        for i in 0..n {
            acc += &coeffs[i] * &coeffs[n - 1 - i];
        }
        coeffs[n] = acc;
    }
    PowerSeries { coeffs }
}

/// The three triangles with a Riordan-array description, named by their
/// public table letters: A (admissible), B (Shapiro), C (ballot).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RiordanFamily {
    Admissible,
    Shapiro,
    Ballot,
}

impl RiordanFamily {
    /// The pair `(d, h)` with column k generated by `d * h^k`:
    /// admissible `(C, tC^2)`, Shapiro `(C^2, tC^2)`, ballot `(C, tC)`.
    fn pair(self, order: usize) -> (PowerSeries, PowerSeries) {
        let c = catalan_series(order);
        match self {
            RiordanFamily::Admissible => (c.clone(), c.power(2).shift(1)),
            RiordanFamily::Shapiro => (c.power(2), c.power(2).shift(1)),
            RiordanFamily::Ballot => (c.clone(), c.shift(1)),
        }
    }

    fn entry(self, n: i64, k: i64) -> Rat {
        Rat::from_integer(match self {
            RiordanFamily::Admissible => admissible(n, k),
            RiordanFamily::Shapiro => shapiro(n, k),
            RiordanFamily::Ballot => ballot(n, k),
        })
    }
}

/// Checks that the coefficient of `t^n` in `d * h^k` equals the triangle
/// entry `(n, k)` for all `k <= n <= order`.
pub fn riordan_column_check(which: RiordanFamily, k: usize, order: usize) -> bool {
    assert!(k <= order, "riordan_column_check: need k <= order");
    let (d, h) = which.pair(order);
    let column = d.multiply(&h.power(k));
    (k..=order).all(|n| *column.coeff(n) == which.entry(n as i64, k as i64))
}
