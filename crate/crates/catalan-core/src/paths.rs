//! Explicit lattice paths and exhaustive enumeration.
//!
//! This module is the brute-force oracle for the triangle recurrences and the
//! substrate for the constructive bijections: paths are concrete value
//! objects, enumeration is deterministic (lexicographic with U < H < D), and
//! nothing here knows about closed forms.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::exact::Rat;

/// A single step: up `(1,1)`, flat `(1,0)`, down `(1,-1)`.
///
/// The declaration order defines the lexicographic enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    Up,
    Flat,
    Down,
}

impl Step {
    pub fn rise(self) -> i64 {
        match self {
            Step::Up => 1,
            Step::Flat => 0,
            Step::Down => -1,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Step::Up => 'u',
            Step::Flat => 'h',
            Step::Down => 'd',
        }
    }

    pub fn from_char(c: char) -> Option<Step> {
        match c {
            'u' => Some(Step::Up),
            'h' => Some(Step::Flat),
            'd' => Some(Step::Down),
            _ => None,
        }
    }
}

/// An ordered sequence of steps. Validity (never dipping below the axis) is a
/// predicate, not an invariant: reversal of a path ending above the axis is
/// deliberately representable even though it is not valid on its own.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct LatticePath(pub Vec<Step>);

impl LatticePath {
    pub fn empty() -> LatticePath {
        LatticePath(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Level after the final step (0 for the empty path).
    pub fn end_level(&self) -> i64 {
        self.0.iter().map(|s| s.rise()).sum()
    }

    /// True when no prefix dips below the axis.
    pub fn is_valid(&self) -> bool {
        let mut level = 0i64;
        for s in &self.0 {
            level += s.rise();
            if level < 0 {
                return false;
            }
        }
        true
    }

    /// Levels after each step.
    pub fn levels(&self) -> Vec<i64> {
        let mut level = 0i64;
        self.0
            .iter()
            .map(|s| {
                level += s.rise();
                level
            })
            .collect()
    }

    pub fn concat(&self, other: &LatticePath) -> LatticePath {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        LatticePath(v)
    }

    /// Number of flat steps, split into (on the axis, above the axis).
    /// The weight of a path is `x^axis * y^above`.
    pub fn flat_counts(&self) -> (u32, u32) {
        let mut level = 0i64;
        let (mut axis, mut above) = (0, 0);
        for s in &self.0 {
            if let Step::Flat = s {
                if level == 0 {
                    axis += 1;
                } else {
                    above += 1;
                }
            }
            level += s.rise();
        }
        (axis, above)
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.to_char())?;
        }
        Ok(())
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct BadStepChar(pub char);

impl fmt::Display for BadStepChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid step character {:?}, expected u, h or d", self.0)
    }
}

impl std::error::Error for BadStepChar {}

impl FromStr for LatticePath {
    type Err = BadStepChar;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| Step::from_char(c).ok_or(BadStepChar(c)))
            .collect::<Result<Vec<_>, _>>()
            .map(LatticePath)
    }
}

/// Level reached after step `i` (0-based).
///
/// # Panics
/// `i` past the end of the path is an index error.
pub fn step_level(p: &LatticePath, i: usize) -> i64 {
    assert!(i < p.len(), "step_level: index {i} out of range for path of length {}", p.len());
    p.0[..=i].iter().map(|s| s.rise()).sum()
}

/// All valid paths of length `n` ending at level `k`, in lexicographic order
/// (U < H < D). Empty when `k > n`.
///
/// # Panics
/// Negative `n` or `k` is a domain error.
pub fn enumerate_motzkin(n: i64, k: i64) -> Vec<LatticePath> {
    assert!(n >= 0 && k >= 0, "enumerate_motzkin: negative index n={n} k={k}");
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n as usize);
    extend_all(&mut cur, 0, n, k, true, &mut out);
    out
}

/// All U/D-only paths of length `2n - k` from the axis to level `k`, never
/// below the axis; there are `ballot(n, k)` of them.
///
/// # Panics
/// Indices outside `0 <= k <= n` are a domain error.
pub fn enumerate_partial_dyck(n: i64, k: i64) -> Vec<LatticePath> {
    assert!(0 <= k && k <= n, "enumerate_partial_dyck: need 0 <= k <= n, got n={n} k={k}");
    let mut out = Vec::new();
    let len = 2 * n - k;
    let mut cur = Vec::with_capacity(len as usize);
    extend_all(&mut cur, 0, len, k, false, &mut out);
    out
}

fn extend_all(
    cur: &mut Vec<Step>,
    level: i64,
    remaining: i64,
    target: i64,
    flats: bool,
    out: &mut Vec<LatticePath>,
) {
    if remaining == 0 {
        if level == target {
            out.push(LatticePath(cur.clone()));
        }
        return;
    }
    for step in [Step::Up, Step::Flat, Step::Down] {
        if step == Step::Flat && !flats {
            continue;
        }
        let next = level + step.rise();
        if next < 0 || (next - target).abs() > remaining - 1 {
            continue;
        }
        if !flats && (remaining - 1 - (next - target).abs()) % 2 != 0 {
            continue;
        }
        cur.push(step);
        extend_all(cur, next, remaining - 1, target, flats, out);
        cur.pop();
    }
}

/// Product of step weights: up and down steps weigh 1, a flat step weighs `x`
/// on the axis and `y` above it.
pub fn path_weight(p: &LatticePath, x: &Rat, y: &Rat) -> Rat {
    let mut level = 0i64;
    let mut w = Rat::one();
    for s in &p.0 {
        if let Step::Flat = s {
            w *= if level == 0 { x } else { y };
        }
        level += s.rise();
    }
    w
}

/// Paths to `(n, k)` counted by their flat statistics: entry `[a][b]` is the
/// number of valid length-`n` paths ending at level `k` with `a` flat steps
/// on the axis and `b` above it. One census serves every `(x, y)` via
/// [`weight_from_flat_counts`], which keeps the oracle affordable at sizes
/// where per-path rational arithmetic would not be.
///
/// # Panics
/// Negative `n` or `k` is a domain error.
pub fn motzkin_flat_count_matrix(n: i64, k: i64) -> Vec<Vec<u64>> {
    assert!(n >= 0 && k >= 0, "motzkin_flat_count_matrix: negative index n={n} k={k}");
    let dim = n as usize + 1;
    let mut cnt = vec![vec![0u64; dim]; dim];
    count_by_flats(0, n, k, 0, 0, &mut cnt);
    cnt
}

fn count_by_flats(
    level: i64,
    remaining: i64,
    target: i64,
    axis: usize,
    above: usize,
    cnt: &mut [Vec<u64>],
) {
    if remaining == 0 {
        if level == target {
            cnt[axis][above] += 1;
        }
        return;
    }
    for step in [Step::Up, Step::Flat, Step::Down] {
        let next = level + step.rise();
        if next < 0 || (next - target).abs() > remaining - 1 {
            continue;
        }
        let (a, b) = match (step, level == 0) {
            (Step::Flat, true) => (axis + 1, above),
            (Step::Flat, false) => (axis, above + 1),
            _ => (axis, above),
        };
        count_by_flats(next, remaining - 1, target, a, b, cnt);
    }
}

/// Evaluates a flat-count matrix as the polynomial `sum cnt[a][b] x^a y^b`,
/// i.e. the total weight of the counted paths.
pub fn weight_from_flat_counts(cnt: &[Vec<u64>], x: &Rat, y: &Rat) -> Rat {
    // Horner in both variables; the matrix is small so no sparsity games.
    let mut total = Rat::zero();
    for row in cnt.iter().rev() {
        let mut inner = Rat::zero();
        for &c in row.iter().rev() {
            inner = inner * y + Rat::from_integer(crate::exact::Int::from(c));
        }
        total = total * x + inner;
    }
    total
}

/// Reversal: step order flipped and U and D swapped, so the picture is
/// rotated half a turn. An involution that preserves length and flat count.
pub fn reverse_path(p: &LatticePath) -> LatticePath {
    LatticePath(
        p.0
            .iter()
            .rev()
            .map(|s| match s {
                Step::Up => Step::Down,
                Step::Down => Step::Up,
                Step::Flat => Step::Flat,
            })
            .collect(),
    )
}

/// Indices (ascending) of the R-visible up steps: an up step is R-visible
/// when the rest of the path never goes below the level that step ends on.
///
/// A path ending at level `k` has exactly `k` of them, the last up steps
/// attaining levels `1..=k`; in particular a path ending at level 1 has a
/// unique R-visible up step, which is what the inverse bijection keys on.
pub fn r_visible_up_steps(p: &LatticePath) -> Vec<usize> {
    let levels = p.levels();
    let mut out = Vec::new();
    let mut min_after = i64::MAX;
    for i in (0..p.len()).rev() {
        if p.0[i] == Step::Up && levels[i] <= min_after {
            out.push(i);
        }
        min_after = min_after.min(levels[i]);
    }
    out.reverse();
    out
}
