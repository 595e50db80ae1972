//! Exact integer and rational linear algebra: Smith and Hermite normal
//! forms, integer kernels, lattice-span tests and positive kernel vectors.

mod hermite;
mod lp;
mod matrix;
pub mod rational;
mod smith;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use hermite::hermite_normal_form;
pub use matrix::IntegerMatrix;
pub use rational::RationalVector;
pub use smith::{smith_normal_form, SmithDecomposition};

use crate::cone::LatticeVector;
use crate::cox::DegreeVector;
use crate::error::{Error, Result};
use lp::LpOutcome;
use rational::Solution;

/// True iff the integer span of `generators` is all of `Z^n`: rank `n` and
/// every elementary divisor equal to one. An empty list spans nothing.
pub fn spans_lattice(generators: &[LatticeVector]) -> Result<bool> {
    let Some(first) = generators.first() else {
        return Ok(false);
    };
    let n = first.dim();
    let m = crate::cone::generator_matrix(generators, n)?;
    let snf = smith_normal_form(&m);
    Ok(snf.rank() == n && snf.elementary_divisors().iter().all(One::is_one))
}

/// Basis of the saturated integer kernel `{v ∈ Z^r : N v = 0}`.
///
/// The basis is read off the Smith transform `V` and then brought to row
/// Hermite form so that the output is canonical.
pub fn kernel_basis(n: &IntegerMatrix) -> Vec<Vec<BigInt>> {
    let snf = smith_normal_form(n);
    let rank = snf.rank();
    let cols: Vec<Vec<BigInt>> = (rank..n.cols()).map(|j| snf.v.column(j)).collect();
    if cols.is_empty() {
        return cols;
    }
    let k = IntegerMatrix::from_columns(&cols, n.cols())
        .expect("kernel columns have length r")
        .transpose();
    let (h, _) = hermite_normal_form(&k);
    (0..h.rows())
        .map(|i| h.row(i).to_vec())
        .filter(|row| row.iter().any(|x| !x.is_zero()))
        .collect()
}

fn to_rational_rows(n: &IntegerMatrix) -> Vec<Vec<BigRational>> {
    (0..n.rows())
        .map(|i| n.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

fn to_degree_vector(v: Vec<BigInt>) -> Result<DegreeVector> {
    v.iter()
        .map(|x| {
            if !x.is_positive() {
                Err(Error::NonPositive)
            } else {
                x.to_u64().ok_or(Error::Overflow)
            }
        })
        .collect::<Result<Vec<u64>>>()
        .map(DegreeVector::from_entries_unchecked)
}

/// Some `D` with `N·D = 0` and every `d_k ≥ 1`, or `None` if none exists.
///
/// Solves `min Σ x  s.t.  N x = 0, x ≥ 1` exactly (shifted to `y = x − 1 ≥ 0`),
/// then clears denominators and divides out the content. The optimum vertex
/// is deterministic under Bland's rule.
pub fn positive_kernel_vector(n: &IntegerMatrix) -> Option<DegreeVector> {
    let r = n.cols();
    if r == 0 {
        return None;
    }
    let a = to_rational_rows(n);
    // N (y + 1) = 0  ⇔  N y = −N·1
    let b: Vec<BigRational> = a.iter().map(|row| -row.iter().sum::<BigRational>()).collect();
    let cost = vec![BigRational::one(); r];
    let y = match lp::minimize(&a, &b, &cost) {
        LpOutcome::Optimal(y) => y,
        LpOutcome::Infeasible => return None,
        LpOutcome::Unbounded => unreachable!("objective is bounded below on y ≥ 0"),
    };
    let x: Vec<BigRational> = y.into_iter().map(|v| v + BigRational::one()).collect();
    let lcm = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints: Vec<BigInt> = x.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    let ints: Vec<BigInt> = ints.into_iter().map(|v| v / &g).collect();
    debug_assert!(n.mul_vec(&ints).unwrap().iter().all(Zero::is_zero));
    to_degree_vector(ints).ok()
}

/// The unique kernel vector extending `partial` (0-based index → value).
pub fn complete_degrees(n: &IntegerMatrix, partial: &BTreeMap<usize, u64>) -> Result<DegreeVector> {
    let r = n.cols();
    let mut a = to_rational_rows(n);
    let mut b = vec![BigRational::zero(); a.len()];
    for (&i, &d) in partial {
        if i >= r {
            return Err(Error::IndexOutOfRange { index: i, len: r });
        }
        let mut row = vec![BigRational::zero(); r];
        row[i] = BigRational::one();
        a.push(row);
        b.push(BigRational::from_integer(d.into()));
    }
    match rational::solve(&a, &b, r) {
        Solution::Inconsistent => Err(Error::Inconsistent),
        Solution::Underdetermined { free } => Err(Error::Underdetermined { free }),
        Solution::Unique(x) => {
            if x.iter().any(|v| !v.is_integer()) {
                return Err(Error::NonIntegral);
            }
            to_degree_vector(x.into_iter().map(|v| v.to_integer()).collect())
        }
    }
}
