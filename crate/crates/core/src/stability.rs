//! Stability dimension of the inclusion of based holomorphic maps into the
//! double loop space, with the dimension bookkeeping behind it and an
//! independent replay of the spectral-sequence comparison argument.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::cox::{cox_report, degree_of_u64, DegreeVector};
use crate::error::{Error, Result};
use crate::fan::{ensure_valid, is_smooth, r_min, Fan};
use crate::par::{self, Execution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum EquivalenceKind {
    Homotopy,
    Homology,
}

impl fmt::Display for EquivalenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EquivalenceKind::Homotopy => "homotopy",
            EquivalenceKind::Homology => "homology",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    pub r_min: i64,
    pub d_min: i64,
    /// `(2 r_min − 3) d_min − 2`
    pub stability_dim: i64,
    pub kind: EquivalenceKind,
    /// `2 (r_min − 2)`
    pub connectivity: i64,
    /// `(2 r_min − 2) d_min − 1`
    pub vanishing_line: i64,
    /// Same quantity from [`stable_range_replay`].
    pub oracle_dim: i64,
}

impl StabilityReport {
    /// Closed-form report for the given `r_min ≥ 2`, `d_min ≥ 1`.
    pub fn from_invariants(r_min: i64, d_min: i64) -> StabilityReport {
        StabilityReport {
            r_min,
            d_min,
            stability_dim: stability_dim(r_min, d_min),
            kind: if r_min >= 3 {
                EquivalenceKind::Homotopy
            } else {
                EquivalenceKind::Homology
            },
            connectivity: 2 * (r_min - 2),
            vanishing_line: (2 * r_min - 2) * d_min - 1,
            oracle_dim: stable_range_replay(r_min, d_min),
        }
    }

    pub fn sentence(&self) -> String {
        format!(
            "inclusion is a {} equivalence through dimension {}",
            self.kind, self.stability_dim
        )
    }
}

pub fn stability_dim(r_min: i64, d_min: i64) -> i64 {
    (2 * r_min - 3) * d_min - 2
}

/// Checks the standing hypotheses on `f`: a valid smooth fan meeting both
/// Cox conditions, with at least one primitive collection. Returns `r_min`.
pub fn standing_hypotheses(f: &Fan) -> Result<usize> {
    ensure_valid(f)?;
    if !is_smooth(f) {
        return Err(Error::NotSmooth);
    }
    let cox = cox_report(f);
    if !cox.condition_span {
        return Err(Error::Condition1Failed);
    }
    if !cox.condition_positive_degree {
        return Err(Error::Condition2Failed);
    }
    r_min(f)
}

pub fn stability_report(f: &Fan, d: &DegreeVector) -> Result<StabilityReport> {
    let rm = standing_hypotheses(f)?;
    degree_of_u64(f, d.entries())?;
    Ok(StabilityReport::from_invariants(rm as i64, d.d_min() as i64))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiscriminantDims {
    /// `dim L(Σ) = 2 (r − r_min)`
    pub dim_l: i64,
    /// `dim C_{k;Σ} = 2 (1 + r − r_min) k`
    pub dim_c_k: i64,
    /// `l_{D,k} = 2 N(D) − 2 r k + k − 1`
    pub bundle_rank_l: i64,
    pub n_d: i64,
    pub k: i64,
    pub r: i64,
    pub r_min: i64,
}

impl DiscriminantDims {
    /// Dimension of the `k`-th stratum, `l_{D,k} + dim C_{k;Σ}`.
    pub fn stratum_dim(&self) -> i64 {
        self.bundle_rank_l + self.dim_c_k
    }

    /// `l_{D,k} + dim C_{k;Σ} = 2 N(D) + 3k − 2 r_min k − 1`
    pub fn stratum_identity_holds(&self) -> bool {
        self.stratum_dim() == 2 * self.n_d + 3 * self.k - 2 * self.r_min * self.k - 1
    }
}

pub fn discriminant_dims(f: &Fan, d: &DegreeVector, k: i64) -> Result<DiscriminantDims> {
    let d_min = d.d_min();
    if k < 1 || k > d_min as i64 {
        return Err(Error::KOutOfRange { k, d_min });
    }
    degree_of_u64(f, d.entries())?;
    let rm = r_min(f)? as i64;
    let r = f.num_rays() as i64;
    let n_d = d.total() as i64;
    Ok(DiscriminantDims {
        dim_l: 2 * (r - rm),
        dim_c_k: 2 * (1 + r - rm) * k,
        bundle_rank_l: 2 * n_d - 2 * r * k + k - 1,
        n_d,
        k,
        r,
        r_min: rm,
    })
}

/// Region data produced by replaying the comparison argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReplayTrace {
    pub r_min: i64,
    pub d_min: i64,
    /// `a(t) = min{s − k : (k, s) ∈ A_t}` for every nonempty `A_t`.
    pub a_by_t: BTreeMap<i64, i64>,
    /// `min{s − k}` over the seed region `S₁` (column `k = d_min + 1`).
    pub seed_min: i64,
    /// Largest `N` such that every grid cell with `s − k ≤ N` lies outside
    /// the unknown region `S₁ ∪ ⋃ A_t`.
    pub stable_through: i64,
}

impl ReplayTrace {
    pub fn min_a(&self) -> Option<i64> {
        self.a_by_t.values().copied().min()
    }
}

/// Every strictly increasing sequence `1 ≤ l₁ < … < l_t` with `Σ l_j ≤ cap`,
/// reported as the set of reachable `(t, Σ l_j)` pairs.
///
/// Since `Σ l_j ≥ t(t+1)/2`, `t` never exceeds `√(2·cap)`.
fn increasing_sums(cap: i64) -> BTreeMap<i64, Vec<i64>> {
    fn walk(next_min: i64, t: i64, sum: i64, cap: i64, out: &mut BTreeMap<i64, Vec<i64>>) {
        for l in next_min..=cap - sum {
            let (t2, s2) = (t + 1, sum + l);
            let sums = out.entry(t2).or_default();
            if !sums.contains(&s2) {
                sums.push(s2);
            }
            walk(l + 1, t2, s2, cap, out);
        }
    }
    let mut out = BTreeMap::new();
    walk(1, 0, 0, cap, &mut out);
    for v in out.values_mut() {
        v.sort_unstable();
    }
    out
}

/// Replays the region propagation on the grid
/// `k ∈ [0, d_min + 1]`, `s ∈ [0, (2 r_min − 2) d_min + d_min + 4]`.
///
/// `A_t` holds `(u, v)` admitting `1 ≤ l₁ < … < l_t` with
/// `u + Σ l_j = d_min + 1` and `v + Σ (l_j − 1) ≥ (2 r_min − 2) d_min`; the
/// seed is `S₁ = {(d_min + 1, s) : s ≥ (2 r_min − 2) d_min}`. Membership is
/// tested cell by cell.
pub fn replay_trace(r_min: i64, d_min: i64) -> ReplayTrace {
    assert!(r_min >= 2 && d_min >= 1, "replay needs r_min ≥ 2 and d_min ≥ 1");
    let vanish = (2 * r_min - 2) * d_min;
    let s_max = vanish + d_min + 4;
    let sums = increasing_sums(d_min + 1);

    let in_a = |t: i64, k: i64, s: i64| {
        sums.get(&t).is_some_and(|v| {
            v.iter().any(|&total| k + total == d_min + 1 && s + total - t >= vanish)
        })
    };
    let in_seed = |k: i64, s: i64| k == d_min + 1 && s >= vanish;

    let mut a_by_t = BTreeMap::new();
    let mut seed_min = i64::MAX;
    let mut unknown_min = i64::MAX;
    for k in 0..=d_min + 1 {
        for s in 0..=s_max {
            if in_seed(k, s) {
                seed_min = seed_min.min(s - k);
                unknown_min = unknown_min.min(s - k);
            }
            for &t in sums.keys() {
                if in_a(t, k, s) {
                    let e = a_by_t.entry(t).or_insert(i64::MAX);
                    *e = (*e).min(s - k);
                    unknown_min = unknown_min.min(s - k);
                }
            }
        }
    }
    ReplayTrace {
        r_min,
        d_min,
        a_by_t,
        seed_min,
        stable_through: unknown_min - 1,
    }
}

/// Stable range recovered from the replay; equals
/// `(2 r_min − 3) d_min − 2`.
pub fn stable_range_replay(r_min: i64, d_min: i64) -> i64 {
    replay_trace(r_min, d_min).stable_through
}

/// Replays every cell of `r_mins × d_mins`, returning `(r_min, d_min, oracle)`.
pub fn replay_grid(
    r_mins: std::ops::RangeInclusive<i64>,
    d_mins: std::ops::RangeInclusive<i64>,
    exec: Execution,
) -> Vec<(i64, i64, i64)> {
    let cells: Vec<(i64, i64)> = r_mins
        .flat_map(|r| d_mins.clone().map(move |d| (r, d)))
        .collect();
    par::map(exec, &cells, |&(r, d)| (r, d, stable_range_replay(r, d)))
}
