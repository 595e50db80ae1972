//! Cox homogeneous coordinates: the group `G_Σ`, the two standing
//! conditions on a fan, and degree vectors.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::lattice::{positive_kernel_vector, smith_normal_form};

/// Positive integer vector `D` with `Σ d_k n_k = 0` for its fan.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeVector(Vec<u64>);

impl DegreeVector {
    /// Caller guarantees positivity; kernel membership is not checked.
    pub(crate) fn from_entries_unchecked(entries: Vec<u64>) -> Self {
        debug_assert!(entries.iter().all(|&d| d >= 1));
        DegreeVector(entries)
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Smallest entry.
    pub fn d_min(&self) -> u64 {
        self.0.iter().copied().min().unwrap_or(0)
    }

    /// `N(D) = Σ d_k`
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Entry-wise sum; the result is again a positive kernel vector.
    pub fn add(&self, other: &DegreeVector) -> DegreeVector {
        DegreeVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Character data of `G_Σ` together with the standing conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoxGroupReport {
    /// `r − n`
    pub free_rank: i64,
    /// Elementary divisors of `N` greater than one.
    pub finite_part: Vec<String>,
    /// Generators span `Z^n`.
    pub condition_span: bool,
    /// Some positive degree vector exists.
    pub condition_positive_degree: bool,
    pub witness_degree: Option<DegreeVector>,
    /// Rank of `π₂(X_Σ)`; only meaningful when `condition_span` holds.
    pub pi2_rank: Option<i64>,
}

pub fn cox_report(f: &Fan) -> CoxGroupReport {
    let n = f.generator_matrix();
    let snf = smith_normal_form(&n);
    let finite_part: Vec<BigInt> = snf
        .elementary_divisors()
        .into_iter()
        .filter(|d| !d.is_one())
        .collect();
    let condition_span = snf.rank() == f.dim() && finite_part.is_empty();
    let witness_degree = positive_kernel_vector(&n);
    let free_rank = f.num_rays() as i64 - f.dim() as i64;
    CoxGroupReport {
        free_rank,
        finite_part: finite_part.iter().map(ToString::to_string).collect(),
        condition_span,
        condition_positive_degree: witness_degree.is_some(),
        witness_degree,
        pi2_rank: condition_span.then_some(free_rank),
    }
}

/// Validates `entries` as a degree vector for `f`.
pub fn degree_of(f: &Fan, entries: &[i64]) -> Result<DegreeVector> {
    let r = f.num_rays();
    if entries.len() != r {
        return Err(Error::DegreeMismatch {
            expected: r,
            found: entries.len(),
        });
    }
    if entries.iter().any(|&d| d < 1) {
        return Err(Error::NonPositive);
    }
    let v: Vec<BigInt> = entries.iter().map(|&d| BigInt::from(d)).collect();
    let image = f.generator_matrix().mul_vec(&v)?;
    if !image.iter().all(Zero::is_zero) {
        return Err(Error::NotInKernel);
    }
    Ok(DegreeVector(entries.iter().map(|&d| d as u64).collect()))
}

/// [`degree_of`] for unsigned entries.
pub fn degree_of_u64(f: &Fan, entries: &[u64]) -> Result<DegreeVector> {
    let signed: Vec<i64> = entries
        .iter()
        .map(|&d| i64::try_from(d).map_err(|_| Error::Overflow))
        .collect::<Result<_>>()?;
    degree_of(f, &signed)
}
