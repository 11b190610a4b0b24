//! Executable forms of the two constructive arguments behind the path
//! identities: the pivot decomposition of Dyck paths (which explains the
//! product-transform row sums) and the pairing `phi` between lifted path
//! pairs and single paths ending at level 1 (which explains the permanent
//! identities).
//!
//! Everything here is driven by explicit enumeration and checked by
//! round-trips; no counting formulas are consulted.

use thiserror::Error;

use crate::exact::Rat;
use num_traits::Zero;
use crate::paths::{
    enumerate_motzkin, enumerate_partial_dyck, path_weight, r_visible_up_steps, reverse_path,
    LatticePath, Step,
};

#[derive(Error, Debug, PartialEq, Eq)]
pub enum BijectionError {
    #[error("expected a Dyck path: up/down steps only, ending on the axis, never below it")]
    NotDyck,
    #[error("path length {got} does not match the required {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("pair is not a member of the declared side: {0}")]
    NotAMember(String),
    #[error("target path must be valid and end at level 1")]
    BadTarget,
}

/// A Dyck path of length `2n + 2m + 2` cut at its pivot, the step with
/// 0-based index `2n`. The pivot always ends at an odd level `2k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DyckSplit {
    pub pivot_index: usize,
    pub pivot: Step,
    /// Pivot end level is `2k + 1`.
    pub k: i64,
    /// The part strictly before the pivot.
    pub first: LatticePath,
    /// The part strictly after the pivot, reversed. For an up pivot the pair
    /// (first, second_reversed) consists of partial Dyck paths ending at
    /// levels `2k` and `2k + 1`; for a down pivot at `2k + 2` and `2k + 1`.
    pub second_reversed: LatticePath,
}

/// Splits a Dyck path of length `2n + 2m + 2` at the step with 0-based
/// index `2n`.
pub fn dyck_split(p: &LatticePath, n: i64) -> Result<DyckSplit, BijectionError> {
    assert!(n >= 0, "dyck_split: negative n = {n}");
    if !p.is_valid() || p.end_level() != 0 || p.steps().contains(&Step::Flat) {
        return Err(BijectionError::NotDyck);
    }
    let pivot_index = 2 * n as usize;
    if !p.len().is_multiple_of(2) || p.len() < pivot_index + 2 {
        return Err(BijectionError::LengthMismatch {
            expected: pivot_index + 2,
            got: p.len(),
        });
    }
    let pivot = p.steps()[pivot_index];
    let level = crate::paths::step_level(p, pivot_index);
    debug_assert!(level % 2 == 1, "pivot level must be odd");
    let first = p.slice(0, pivot_index);
    let second = p.slice(pivot_index + 1, p.len());
    Ok(DyckSplit {
        pivot_index,
        pivot,
        k: (level - 1) / 2,
        first,
        second_reversed: reverse_path(&second),
    })
}

/// Counts Dyck paths of length `2n + 2m + 2` by the direction of their
/// pivot step: `(up count, down count)`.
pub fn count_dyck_by_pivot(n: i64, m: i64) -> (u64, u64) {
    assert!(n >= 0 && m >= 0, "count_dyck_by_pivot: negative size");
    let (mut up, mut down) = (0, 0);
    for p in enumerate_partial_dyck(n + m + 1, 0) {
        match dyck_split(&p, n).expect("enumerated Dyck path must split").pivot {
            Step::Up => up += 1,
            Step::Down => down += 1,
            Step::Flat => unreachable!(),
        }
    }
    (up, down)
}

/// A pair of partial Motzkin paths with end levels one apart, tagged by
/// which component is the lifted one. For sizes `(n, m, r)`:
///
/// * `LiftedFirst`: `p` has length `n + r` ending at level `k + 1`,
///   `q` has length `m` ending at level `k`.
/// * `LiftedSecond`: `p` has length `n` ending at level `k`, `q` has length
///   `m + r` ending at level `k + 1`, and the last R-visible up step of `q`
///   is preceded by at least `r` steps (pairs violating that form the
///   excluded family measured by [`excluded_family_weight`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PhiInput {
    LiftedFirst { p: LatticePath, q: LatticePath },
    LiftedSecond { p: LatticePath, q: LatticePath },
}

fn check_member(input: &PhiInput, n: i64, m: i64, r: i64) -> Result<(), BijectionError> {
    let bad = |msg: String| Err(BijectionError::NotAMember(msg));
    match input {
        PhiInput::LiftedFirst { p, q } => {
            if p.len() as i64 != n + r || q.len() as i64 != m {
                return bad(format!(
                    "lengths ({}, {}) do not match (n + r, m) = ({}, {})",
                    p.len(),
                    q.len(),
                    n + r,
                    m
                ));
            }
            if !p.is_valid() || !q.is_valid() {
                return bad("both components must stay on or above the axis".into());
            }
            if p.end_level() != q.end_level() + 1 {
                return bad(format!(
                    "first component must end one level above the second, got {} and {}",
                    p.end_level(),
                    q.end_level()
                ));
            }
        }
        PhiInput::LiftedSecond { p, q } => {
            if p.len() as i64 != n || q.len() as i64 != m + r {
                return bad(format!(
                    "lengths ({}, {}) do not match (n, m + r) = ({}, {})",
                    p.len(),
                    q.len(),
                    n,
                    m + r
                ));
            }
            if !p.is_valid() || !q.is_valid() {
                return bad("both components must stay on or above the axis".into());
            }
            if q.end_level() != p.end_level() + 1 {
                return bad(format!(
                    "second component must end one level above the first, got {} and {}",
                    q.end_level(),
                    p.end_level()
                ));
            }
            let vis = r_visible_up_steps(q);
            let last = *vis.last().expect("a path ending above the axis has an R-visible up step");
            if (last as i64) < r {
                return bad(format!(
                    "last R-visible up step of the second component has only {last} steps before \
                     it, so the pair belongs to the excluded family (needs at least {r})"
                ));
            }
        }
    }
    Ok(())
}

/// Maps a valid pair to a single path of length `n + m + r` ending at
/// level 1, preserving the flat-step count (hence the weight).
///
/// * `LiftedFirst` pairs map to `p` followed by `reverse(q)`.
/// * `LiftedSecond` pairs split `q` at its last R-visible up step `u` as
///   `q1 u q2` and map to `p`, then `reverse(q1)`, then `u`, then `q2`.
///
/// Only `r >= 0` is supported; the identity this realizes also holds for
/// negative `r`, but by a different argument, and is verified numerically in
/// the identities module instead.
pub fn phi_forward(input: &PhiInput, n: i64, m: i64, r: i64) -> Result<LatticePath, BijectionError> {
    assert!(n >= 0 && m >= 0 && r >= 0, "phi_forward: sizes must be nonnegative");
    check_member(input, n, m, r)?;
    let target = match input {
        PhiInput::LiftedFirst { p, q } => p.concat(&reverse_path(q)),
        PhiInput::LiftedSecond { p, q } => {
            let u = *r_visible_up_steps(q).last().unwrap();
            let q1 = q.slice(0, u);
            let q2 = q.slice(u + 1, q.len());
            let mut t = p.concat(&reverse_path(&q1));
            t.0.push(Step::Up);
            t.0.extend_from_slice(q2.steps());
            t
        }
    };
    debug_assert!(target.is_valid() && target.end_level() == 1);
    debug_assert_eq!(target.len() as i64, n + m + r);
    Ok(target)
}

/// Inverse of [`phi_forward`]: partitions a path of length `n + m + r`
/// ending at level 1 by the position of its unique R-visible up step.
///
/// If that step lies among the first `n + r` steps, the target splits there
/// into `p` and a tail whose reverse is `q` (a `LiftedFirst` pair).
/// Otherwise the first `n` steps form `p`, and the stretch from position
/// `n` up to the R-visible up step, reversed, followed by that up step and
/// the remaining tail, reassembles `q` (a `LiftedSecond` pair).
pub fn phi_backward(target: &LatticePath, n: i64, m: i64, r: i64) -> Result<PhiInput, BijectionError> {
    assert!(n >= 0 && m >= 0 && r >= 0, "phi_backward: sizes must be nonnegative");
    if target.len() as i64 != n + m + r {
        return Err(BijectionError::LengthMismatch {
            expected: (n + m + r) as usize,
            got: target.len(),
        });
    }
    if !target.is_valid() || target.end_level() != 1 {
        return Err(BijectionError::BadTarget);
    }
    let vis = r_visible_up_steps(target);
    debug_assert_eq!(vis.len(), 1, "a valid path to level 1 has a unique R-visible up step");
    let u = vis[0];
    let cut = (n + r) as usize;
    if u < cut {
        let p = target.slice(0, cut);
        let q = reverse_path(&target.slice(cut, target.len()));
        debug_assert!(p.end_level() >= 1);
        Ok(PhiInput::LiftedFirst { p, q })
    } else {
        let p = target.slice(0, n as usize);
        let middle = target.slice(n as usize, u);
        let tail = target.slice(u + 1, target.len());
        let mut q = reverse_path(&middle);
        q.0.push(Step::Up);
        q.0.extend_from_slice(tail.steps());
        Ok(PhiInput::LiftedSecond { p, q })
    }
}

/// Total weight, at flat weights `(y, y)`, of the excluded pairs with end
/// levels `(k, k+1)`: `p` of length `n` ending at `k` paired with `q` of
/// length `m + r` ending at `k + 1` whose last R-visible up step has fewer
/// than `r` steps before it. Empty (weight 0) unless `0 <= k <= r - 1`.
///
/// Summed over `k`, this reproduces the correction term of the permanental
/// identity for the Motzkin triangle.
pub fn excluded_family_weight(n: i64, m: i64, r: i64, k: i64, y: &Rat) -> Rat {
    assert!(n >= 0 && m >= 0, "excluded_family_weight: negative size");
    if r <= 0 || k < 0 || k > r - 1 || k > n || k + 1 > m + r {
        return Rat::zero();
    }
    let mut total = Rat::zero();
    let qs: Vec<LatticePath> = enumerate_motzkin(m + r, k + 1)
        .into_iter()
        .filter(|q| (*r_visible_up_steps(q).last().unwrap() as i64) < r)
        .collect();
    for p in enumerate_motzkin(n, k) {
        let wp = path_weight(&p, y, y);
        for q in &qs {
            total += &wp * path_weight(q, y, y);
        }
    }
    total
}

impl LatticePath {
    /// The steps in `start..end` as a new path.
    pub fn slice(&self, start: usize, end: usize) -> LatticePath {
        LatticePath(self.0[start..end].to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{catalan, int, rat, Int};
    use crate::identities::scalars::{catalan_imbalance, motzkin_correction};
    use crate::triangles::{ballot, MotzkinTable};

    fn path(s: &str) -> LatticePath {
        s.parse().unwrap()
    }

    #[test]
    fn dyck_split_smallest_cases() {
        let s = dyck_split(&path("ud"), 0).unwrap();
        assert_eq!(s.pivot_index, 0);
        assert_eq!(s.pivot, Step::Up);
        assert_eq!(s.k, 0);
        assert!(s.first.is_empty());
        assert_eq!(s.second_reversed, path("u"));

        // length 4, pivot at 0-based index 2
        let s = dyck_split(&path("uudd"), 1).unwrap();
        assert_eq!(s.pivot, Step::Down);
        let s = dyck_split(&path("udud"), 1).unwrap();
        assert_eq!(s.pivot, Step::Up);
    }

    #[test]
    fn dyck_split_errors() {
        assert_eq!(dyck_split(&path("uhd"), 0), Err(BijectionError::NotDyck));
        assert_eq!(dyck_split(&path("uu"), 0), Err(BijectionError::NotDyck));
        assert_eq!(
            dyck_split(&path("ud"), 1),
            Err(BijectionError::LengthMismatch { expected: 4, got: 2 })
        );
    }

    #[test]
    fn dyck_split_reconstructs_and_classifies() {
        for n in 0..=3i64 {
            for m in 0..=3i64 {
                let mut per_class = std::collections::BTreeMap::new();
                for p in enumerate_partial_dyck(n + m + 1, 0) {
                    let s = dyck_split(&p, n).unwrap();
                    // reassembly
                    let mut rebuilt = s.first.clone();
                    rebuilt.0.push(s.pivot);
                    rebuilt.0.extend_from_slice(reverse_path(&s.second_reversed).steps());
                    assert_eq!(rebuilt, p);
                    // membership of the two parts
                    let k = s.k;
                    assert!(s.first.is_valid() && s.second_reversed.is_valid());
                    assert_eq!(s.second_reversed.end_level(), 2 * k + 1);
                    assert_eq!(s.second_reversed.len() as i64, 2 * (m + k + 1) - (2 * k + 1));
                    match s.pivot {
                        Step::Up => {
                            assert_eq!(s.first.end_level(), 2 * k);
                            assert_eq!(s.first.len() as i64, 2 * (n + k) - 2 * k);
                        }
                        Step::Down => {
                            assert_eq!(s.first.end_level(), 2 * k + 2);
                            assert_eq!(s.first.len() as i64, 2 * (n + k + 1) - (2 * k + 2));
                        }
                        Step::Flat => unreachable!(),
                    }
                    *per_class.entry((s.pivot, k)).or_insert(0i64) += 1;
                }
                // class sizes are products of ballot numbers
                for ((pivot, k), count) in per_class {
                    let expected = match pivot {
                        Step::Up => ballot(n + k, 2 * k) * ballot(m + k + 1, 2 * k + 1),
                        Step::Down => ballot(n + k + 1, 2 * k + 2) * ballot(m + k + 1, 2 * k + 1),
                        Step::Flat => unreachable!(),
                    };
                    assert_eq!(int(count), expected, "n={n} m={m} pivot={pivot:?} k={k}");
                }
            }
        }
    }

    #[test]
    fn pivot_counts_match_catalan_and_imbalance() {
        assert_eq!(count_dyck_by_pivot(2, 1), (7, 7));
        let (u, d) = count_dyck_by_pivot(1, 1);
        assert_eq!(u - d, 1);
        let (u, d) = count_dyck_by_pivot(1, 2);
        assert_eq!(u as i64 - d as i64, 4);
        for n in 0..=4i64 {
            for m in 0..=4i64 {
                let (u, d) = count_dyck_by_pivot(n, m);
                assert_eq!(Int::from(u + d), catalan(n + m + 1), "n={n} m={m}");
                assert_eq!(
                    int(u as i64 - d as i64),
                    catalan_imbalance(n, m, m - n + 1),
                    "n={n} m={m}"
                );
            }
        }
    }

    #[test]
    fn phi_forward_examples() {
        let b = PhiInput::LiftedFirst { p: path("u"), q: path("") };
        assert_eq!(phi_forward(&b, 0, 0, 1).unwrap(), path("u"));
        assert_eq!(phi_backward(&path("u"), 0, 0, 1).unwrap(), b);

        // lifted-second pairs for sizes (1, 1, 1)
        let a1 = PhiInput::LiftedSecond { p: path("h"), q: path("hu") };
        assert_eq!(phi_forward(&a1, 1, 1, 1).unwrap(), path("hhu"));
        let a2 = PhiInput::LiftedSecond { p: path("u"), q: path("uu") };
        assert_eq!(phi_forward(&a2, 1, 1, 1).unwrap(), path("udu"));
    }

    #[test]
    fn phi_rejects_non_members() {
        // wrong lengths
        let e = phi_forward(&PhiInput::LiftedFirst { p: path("u"), q: path("") }, 1, 1, 1);
        assert!(matches!(e, Err(BijectionError::NotAMember(_))));
        // lifted-second pair whose R-visible up step comes too early
        let e = phi_forward(&PhiInput::LiftedSecond { p: path(""), q: path("uh") }, 0, 1, 1);
        assert!(matches!(e, Err(BijectionError::NotAMember(_))));
        // level mismatch
        let e = phi_forward(&PhiInput::LiftedFirst { p: path("ud"), q: path("h") }, 1, 1, 1);
        assert!(matches!(e, Err(BijectionError::NotAMember(_))));
        // bad target
        let e = phi_backward(&path("uu"), 1, 1, 0);
        assert_eq!(e, Err(BijectionError::BadTarget));
    }

    /// Exhaustive two-way round-trip on a small box; the acceptance suite
    /// runs the full published box.
    #[test]
    fn phi_round_trip_small() {
        for n in 0..=2i64 {
            for m in n..=2i64 {
                for r in 0..=2i64 {
                    check_phi_bijection(n, m, r);
                }
            }
        }
    }

    pub(crate) fn check_phi_bijection(n: i64, m: i64, r: i64) {
        use std::collections::BTreeMap;
        let mut seen: BTreeMap<LatticePath, PhiInput> = BTreeMap::new();
        let mut push = |input: PhiInput| {
            let t = phi_forward(&input, n, m, r).unwrap();
            // weight preservation: flat counts survive
            let (p, q) = match &input {
                PhiInput::LiftedFirst { p, q } | PhiInput::LiftedSecond { p, q } => (p, q),
            };
            let flats = |l: &LatticePath| {
                let (a, b) = l.flat_counts();
                a + b
            };
            assert_eq!(flats(p) + flats(q), flats(&t), "weight not preserved");
            assert!(seen.insert(t.clone(), input).is_none(), "phi not injective at {t}");
        };
        for k in 0.. {
            if k + 1 > n + r || k > m {
                break;
            }
            for p in enumerate_motzkin(n + r, k + 1) {
                for q in enumerate_motzkin(m, k) {
                    push(PhiInput::LiftedFirst { p: p.clone(), q });
                }
            }
        }
        for k in 0.. {
            if k > n || k + 1 > m + r {
                break;
            }
            for p in enumerate_motzkin(n, k) {
                for q in enumerate_motzkin(m + r, k + 1) {
                    if (*r_visible_up_steps(&q).last().unwrap() as i64) >= r {
                        push(PhiInput::LiftedSecond { p: p.clone(), q });
                    }
                }
            }
        }
        let targets = enumerate_motzkin(n + m + r, 1);
        assert_eq!(seen.len(), targets.len(), "phi not onto at n={n} m={m} r={r}");
        for t in &targets {
            let input = seen.get(t).unwrap_or_else(|| panic!("{t} not reached"));
            assert_eq!(&phi_backward(t, n, m, r).unwrap(), input, "round trip at {t}");
        }
    }

    #[test]
    fn excluded_family_weight_examples() {
        // no excluded pairs without lifting budget
        assert_eq!(excluded_family_weight(2, 2, 0, 0, &rat(1)), rat(0));
        // (n, m, r) = (1, 1, 1): single k = 0, weight 1 at y = 1
        let total: Rat = (0..1).map(|k| excluded_family_weight(1, 1, 1, k, &rat(1))).sum();
        assert_eq!(total, rat(1));
        // (n, m, r) = (2, 2, 2) at y = 2
        let total: Rat = (0..2).map(|k| excluded_family_weight(2, 2, 2, k, &rat(2))).sum();
        assert_eq!(total, rat(140));
    }

    #[test]
    fn excluded_family_weight_matches_correction_term() {
        for y in [rat(1), rat(2), Rat::new(int(1), int(2))] {
            let table = MotzkinTable::new(y.clone(), y.clone());
            for n in 0..=2i64 {
                for m in n..=2i64 {
                    for r in 0..=3i64 {
                        let total: Rat =
                            (0..r.max(0)).map(|k| excluded_family_weight(n, m, r, k, &y)).sum();
                        assert_eq!(
                            total,
                            motzkin_correction(&table, n, m, r),
                            "n={n} m={m} r={r} y={y}"
                        );
                    }
                }
            }
        }
    }
}
