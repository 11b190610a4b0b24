//! Identity registry and verification engine.
//!
//! Every identity the library knows about is registered here under a stable
//! string id.  `verify` runs one of them over a parameter box and reports
//! either a clean pass with a case count or the first counterexample found.
//! All arithmetic is exact; a "case" is one full parameter assignment,
//! including the grid point for identities quantified over (x, y).

pub mod scalars;

mod runners;

use crate::exact::Rat;
use crate::triangles::MotzkinTable;
use serde::Serialize;
use std::collections::BTreeMap;

/// The scalar weights and correction terms the runners consume.  Kept as
/// plain function pointers so tests can swap a deliberately wrong scalar in
/// and confirm the affected identity actually fails (a guard against
/// verification code that accidentally compares a value with itself).
#[derive(Clone, Copy)]
pub struct ScalarSet {
    pub det_weight_a: fn(i64, i64, i64, i64) -> crate::Int,
    pub det_weight_b: fn(i64, i64, i64, i64) -> crate::Int,
    pub det_weight_a_diag: fn(i64, i64, i64) -> crate::Int,
    pub det_weight_b_diag: fn(i64, i64, i64) -> crate::Int,
    pub per_weight_ballot: fn(i64, i64, i64) -> crate::Int,
    pub per_weight_shapiro: fn(i64, i64, i64) -> crate::Int,
    pub catalan_imbalance: fn(i64, i64, i64) -> crate::Int,
    pub catalan_correction: fn(i64, i64, i64) -> crate::Int,
    pub motzkin_correction: fn(&MotzkinTable, i64, i64, i64) -> Rat,
}

impl Default for ScalarSet {
    fn default() -> Self {
        ScalarSet {
            det_weight_a: scalars::det_weight_a,
            det_weight_b: scalars::det_weight_b,
            det_weight_a_diag: scalars::det_weight_a_diag,
            det_weight_b_diag: scalars::det_weight_b_diag,
            per_weight_ballot: scalars::per_weight_ballot,
            per_weight_shapiro: scalars::per_weight_shapiro,
            catalan_imbalance: scalars::catalan_imbalance,
            catalan_correction: scalars::catalan_correction,
            motzkin_correction: scalars::motzkin_correction,
        }
    }
}

/// Parameter box for a verification run.  The defaults are the desk-scale
/// ranges every identity is expected to pass in under a minute total.
#[derive(Clone)]
pub struct VerifyOptions {
    pub n_max: i64,
    pub m_max: i64,
    /// Cap on l; `None` lets l run to its natural bound (m or n).
    pub l_max: Option<i64>,
    pub p_min: i64,
    pub p_max: i64,
    pub r_min: i64,
    pub r_max: i64,
    /// Integer evaluation grid [-radius, radius] for identities in (x, y)
    /// or y alone.
    pub grid_radius: i64,
    pub scalars: ScalarSet,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 25,
            m_max: 25,
            l_max: None,
            p_min: -5,
            p_max: 5,
            r_min: -5,
            r_max: 5,
            grid_radius: 3,
            scalars: ScalarSet::default(),
        }
    }
}

/// First failing parameter assignment of a run, with both sides rendered
/// exactly.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
}

/// Result of running one identity over one box.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub domain: String,
    pub pass: bool,
    pub cases: u64,
    pub counterexample: Option<Counterexample>,
}

pub(crate) struct Outcome {
    pub(crate) domain: String,
    pub(crate) cases: u64,
    pub(crate) counterexample: Option<Counterexample>,
}

/// A registered identity: stable id, one-line statement, and its runner.
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub summary: &'static str,
    runner: fn(&VerifyOptions) -> Outcome,
}

static REGISTRY: &[IdentityDescriptor] = &[
    IdentityDescriptor {
        id: "row_sum_B",
        summary: "row sums of the companion triangle: sum_k B(n,k) = (2n+1) C(n)",
        runner: runners::run_row_sum_b,
    },
    IdentityDescriptor {
        id: "shapiro_convolution",
        summary: "column convolution: sum_k B(n,k) B(m,k) = C(n+m+1)",
        runner: runners::run_shapiro_convolution,
    },
    IdentityDescriptor {
        id: "eplett",
        summary: "alternating row sums: sum_k (-1)^k B(n,k) = C(n)",
        runner: runners::run_eplett,
    },
    IdentityDescriptor {
        id: "thm_1_1",
        summary: "lifted determinant sum over the weighted triangle M(x,y) \
                  equals a convolution of first columns against M(y,y)",
        runner: runners::run_thm_1_1,
    },
    IdentityDescriptor {
        id: "thm_2_1_det_a",
        summary: "determinant sum over ballot entries equals C(n) C(m,l)",
        runner: runners::run_thm_2_1_det_a,
    },
    IdentityDescriptor {
        id: "thm_2_1_det_b",
        summary: "odd-shifted determinant sum equals C(n+1) C(m,l)",
        runner: runners::run_thm_2_1_det_b,
    },
    IdentityDescriptor {
        id: "thm_2_1_sum_a",
        summary: "hypergeometric form of the determinant sum, weight det_weight_a",
        runner: runners::run_thm_2_1_sum_a,
    },
    IdentityDescriptor {
        id: "thm_2_1_sum_b",
        summary: "hypergeometric form of the shifted determinant sum, weight det_weight_b",
        runner: runners::run_thm_2_1_sum_b,
    },
    IdentityDescriptor {
        id: "cor_2_2",
        summary: "three single-parameter products C(n+1)^2, C(n)C(n+1), C(n)C(n+2) as binomial sums",
        runner: runners::run_cor_2_2,
    },
    IdentityDescriptor {
        id: "cor_2_3",
        summary: "three shifted single-parameter products as binomial sums",
        runner: runners::run_cor_2_3,
    },
    IdentityDescriptor {
        id: "cor_2_4_a",
        summary: "diagonal m = n case with weight det_weight_a_diag",
        runner: runners::run_cor_2_4_a,
    },
    IdentityDescriptor {
        id: "cor_2_4_b",
        summary: "diagonal m = n case with weight det_weight_b_diag",
        runner: runners::run_cor_2_4_b,
    },
    IdentityDescriptor {
        id: "cor_2_5_a",
        summary: "the l = -1 extension: binom(2n,n) C(n-1) as a binomial sum",
        runner: runners::run_cor_2_5_a,
    },
    IdentityDescriptor {
        id: "cor_2_5_b",
        summary: "the l = -1 extension: binom(2n,n) C(n) as a binomial sum",
        runner: runners::run_cor_2_5_b,
    },
    IdentityDescriptor {
        id: "thm_3_1_sum",
        summary: "mixed-parity convolution sums to C(n+m+1)",
        runner: runners::run_thm_3_1_sum,
    },
    IdentityDescriptor {
        id: "thm_3_1_alt",
        summary: "mixed-parity alternating convolution equals the signed Catalan imbalance",
        runner: runners::run_thm_3_1_alt,
    },
    IdentityDescriptor {
        id: "cor_3_2_a",
        summary: "dyck paths of length 4n split evenly at the middle-step pivot",
        runner: runners::run_cor_3_2_a,
    },
    IdentityDescriptor {
        id: "cor_3_2_b",
        summary: "pivot-class difference for length 4n+2 equals C(n)^2",
        runner: runners::run_cor_3_2_b,
    },
    IdentityDescriptor {
        id: "cor_3_2_c",
        summary: "pivot-class difference for length 4n+4 equals 2 C(n) C(n+1)",
        runner: runners::run_cor_3_2_c,
    },
    IdentityDescriptor {
        id: "thm_4_1",
        summary: "permanent sum over M(y,y) equals M(m+n+r,1) plus the weighted correction",
        runner: runners::run_thm_4_1,
    },
    IdentityDescriptor {
        id: "thm_4_2_a",
        summary: "permanent sum over ballot entries equals C(m+n+p,1) plus the correction",
        runner: runners::run_thm_4_2_a,
    },
    IdentityDescriptor {
        id: "thm_4_2_b",
        summary: "odd-shifted permanent sum, same right side, needs n >= 1",
        runner: runners::run_thm_4_2_b,
    },
    IdentityDescriptor {
        id: "cor_4_3",
        summary: "C(n+m) as two weighted binomial sums, plus the two m = n specials",
        runner: runners::run_cor_4_3,
    },
    IdentityDescriptor {
        id: "cor_4_4",
        summary: "C(n+m+1) + C(n)C(m) as a binomial sum with weight per_weight_ballot",
        runner: runners::run_cor_4_4,
    },
    IdentityDescriptor {
        id: "thm_4_4",
        summary: "permanent sum over the companion triangle, correction shifted by one",
        runner: runners::run_thm_4_4,
    },
    IdentityDescriptor {
        id: "cor_4_5",
        summary: "central-binomial identity with weight per_weight_shapiro",
        runner: runners::run_cor_4_5,
    },
    IdentityDescriptor {
        id: "relations",
        summary: "index embeddings between the triangles, Catalan columns, row sums",
        runner: runners::run_relations,
    },
    IdentityDescriptor {
        id: "specializations",
        summary: "the triangles as (x,y) specializations of the weighted family",
        runner: runners::run_specializations,
    },
];

/// All registered identities in their fixed reporting order.
pub fn registry() -> &'static [IdentityDescriptor] {
    REGISTRY
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown identity id: {0}")]
pub struct UnknownIdentity(pub String);

/// Run one identity over the given box.  Stops at the first failing case.
pub fn verify(id: &str, opts: &VerifyOptions) -> Result<VerificationReport, UnknownIdentity> {
    let desc = REGISTRY
        .iter()
        .find(|d| d.id == id)
        .ok_or_else(|| UnknownIdentity(id.to_string()))?;
    Ok(run_one(desc, opts))
}

/// Run every registered identity; reports come back in registry order.
pub fn verify_all(opts: &VerifyOptions) -> Vec<VerificationReport> {
    REGISTRY.iter().map(|d| run_one(d, opts)).collect()
}

fn run_one(desc: &IdentityDescriptor, opts: &VerifyOptions) -> VerificationReport {
    let out = (desc.runner)(opts);
    VerificationReport {
        id: desc.id.to_string(),
        domain: out.domain,
        pass: out.counterexample.is_none(),
        cases: out.cases,
        counterexample: out.counterexample,
    }
}

/// Decide whether two polynomial expressions in (x, y) agree, by evaluating
/// both on a (degree_bound+1) x (degree_bound+1) integer grid.  Sound because
/// a nonzero polynomial of degree <= degree_bound in each variable cannot
/// vanish on that many distinct points per variable.
pub fn polynomial_identity_check<L, R>(lhs: L, rhs: R, degree_bound: usize) -> bool
where
    L: Fn(&Rat, &Rat) -> Rat,
    R: Fn(&Rat, &Rat) -> Rat,
{
    for a in 0..=degree_bound {
        let x = crate::exact::rat(a as i64);
        for b in 0..=degree_bound {
            let y = crate::exact::rat(b as i64);
            if lhs(&x, &y) != rhs(&x, &y) {
                return false;
            }
        }
    }
    true
}

/// One-variable version of `polynomial_identity_check`.
pub fn polynomial_identity_check_in_y<L, R>(lhs: L, rhs: R, degree_bound: usize) -> bool
where
    L: Fn(&Rat) -> Rat,
    R: Fn(&Rat) -> Rat,
{
    for b in 0..=degree_bound {
        let y = crate::exact::rat(b as i64);
        if lhs(&y) != rhs(&y) {
            return false;
        }
    }
    true
}
