use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Vector of exact rationals. `BigRational` keeps every entry reduced.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RationalVector(pub Vec<BigRational>);

impl RationalVector {
    pub fn from_integers(v: &[BigInt]) -> Self {
        RationalVector(v.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RationalVector(v.iter().map(|&x| BigRational::from_integer(x.into())).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &RationalVector) -> BigRational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    /// Scales by the lcm of denominators and divides by the gcd of the
    /// resulting numerators, giving the primitive integer vector on the same ray.
    /// Zero maps to zero.
    pub fn primitive_integer_direction(&self) -> Vec<BigInt> {
        use num_integer::Integer;
        let lcm = self
            .0
            .iter()
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|x| x.numer() * (&lcm / x.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        if g.is_zero() {
            return ints;
        }
        ints.into_iter().map(|x| x / &g).collect()
    }
}

impl fmt::Debug for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.0.iter().map(|x| x.to_string()))
            .finish()
    }
}

#[cfg(test)]
pub(crate) fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

/// Reduced row echelon form over Q; returns the reduced rows and pivot
/// columns.
pub(crate) fn rref(mut rows: Vec<Vec<BigRational>>, cols: usize) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..rows[i].len() {
                    let d = &f * &rows[r][j];
                    rows[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    (rows, pivots)
}

pub(crate) fn rank(rows: Vec<Vec<BigRational>>, cols: usize) -> usize {
    rref(rows, cols).1.len()
}

/// Outcome of solving `A x = b` over Q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Solution {
    Unique(Vec<BigRational>),
    Inconsistent,
    Underdetermined { free: usize },
}

pub(crate) fn solve(a: &[Vec<BigRational>], b: &[BigRational], cols: usize) -> Solution {
    let aug: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (red, pivots) = rref(aug, cols + 1);
    if pivots.last() == Some(&cols) {
        return Solution::Inconsistent;
    }
    if pivots.len() < cols {
        return Solution::Underdetermined {
            free: cols - pivots.len(),
        };
    }
    Solution::Unique(red.iter().take(cols).map(|row| row[cols].clone()).collect())
}

/// Basis of `{x : A x = 0}` over Q, one vector per free column.
pub(crate) fn nullspace(a: &[Vec<BigRational>], cols: usize) -> Vec<Vec<BigRational>> {
    let (red, pivots) = rref(a.to_vec(), cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}
