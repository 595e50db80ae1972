//! Simplicial rational polyhedral cones.
//!
//! Only simplicial cones are representable: smooth cones are simplicial, and
//! independent generators make every cone strongly convex without a separate
//! check.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lattice::rational::{self, RationalVector, Solution};
use crate::lattice::{smith_normal_form, IntegerMatrix};

/// Integer vector in `Z^n`. Ray generators are additionally primitive.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVector(Vec<BigInt>);

impl LatticeVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        LatticeVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        LatticeVector(coords.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    pub fn to_rational(&self) -> RationalVector {
        RationalVector::from_integers(&self.0)
    }

    /// Coordinates as machine integers, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn neg(&self) -> Self {
        LatticeVector(self.0.iter().map(|x| -x).collect())
    }
}

impl fmt::Debug for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl AsRef<[BigInt]> for LatticeVector {
    fn as_ref(&self) -> &[BigInt] {
        &self.0
    }
}

/// The primitive generator of the ray through `v`.
pub fn primitivize(v: &[BigInt]) -> Result<LatticeVector> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(LatticeVector(v.iter().map(|x| x / &g).collect()))
}

/// `n × s` matrix whose columns are the given vectors.
pub fn generator_matrix(generators: &[LatticeVector], n: usize) -> Result<IntegerMatrix> {
    IntegerMatrix::from_columns(generators, n)
}

/// Cone spanned by linearly independent primitive generators, kept sorted so
/// that equal cones compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialCone {
    dim: usize,
    generators: Vec<LatticeVector>,
}

/// Exact half-space description: `x` lies in the cone iff
/// `e·x = 0` for every equality and `h·x ≥ 0` for every inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeInequalities {
    pub equalities: Vec<Vec<BigInt>>,
    pub inequalities: Vec<Vec<BigInt>>,
}

impl SimplicialCone {
    pub fn new(dim: usize, generators: Vec<LatticeVector>) -> Result<Self> {
        for g in &generators {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.dim(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroVector);
            }
            if !g.is_primitive() {
                return Err(Error::NotPrimitive(g.to_i64().unwrap_or_default()));
            }
        }
        if !independent(&generators, dim) {
            return Err(Error::IndependenceViolation);
        }
        let mut generators = generators;
        generators.sort();
        Ok(SimplicialCone { dim, generators })
    }

    pub fn zero(dim: usize) -> Self {
        SimplicialCone {
            dim,
            generators: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    fn rational_columns(&self) -> Vec<Vec<BigRational>> {
        // rows of the n × s generator matrix
        (0..self.dim)
            .map(|i| {
                self.generators
                    .iter()
                    .map(|g| BigRational::from_integer(g.0[i].clone()))
                    .collect()
            })
            .collect()
    }

    pub fn facet_description(&self) -> ConeInequalities {
        let s = self.generators.len();
        let gt: Vec<Vec<BigRational>> = self
            .generators
            .iter()
            .map(|g| g.to_rational().0)
            .collect();
        let equalities = rational::nullspace(&gt, self.dim)
            .into_iter()
            .map(|w| RationalVector(w).primitive_integer_direction())
            .collect();

        // Rows of the left inverse (GᵀG)⁻¹Gᵀ give the coefficients λ = L x.
        let mut gram = vec![vec![BigRational::zero(); 2 * s]; s];
        for i in 0..s {
            for j in 0..s {
                gram[i][j] = RationalVector(gt[i].clone()).dot(&RationalVector(gt[j].clone()));
            }
            gram[i][s + i] = BigRational::one();
        }
        let (red, _) = rational::rref(gram, 2 * s);
        let inequalities = (0..s)
            .map(|i| {
                let row: Vec<BigRational> = (0..self.dim)
                    .map(|c| (0..s).map(|k| &red[i][s + k] * &gt[k][c]).sum())
                    .collect();
                RationalVector(row).primitive_integer_direction()
            })
            .collect();
        ConeInequalities {
            equalities,
            inequalities,
        }
    }
}

fn independent(generators: &[LatticeVector], dim: usize) -> bool {
    let rows: Vec<Vec<BigRational>> = generators.iter().map(|g| g.to_rational().0).collect();
    rational::rank(rows, dim) == generators.len()
}

/// True iff the generators extend to a basis of `Z^n`.
pub fn is_smooth_cone(c: &SimplicialCone) -> bool {
    if c.generators.is_empty() {
        return true;
    }
    let m = generator_matrix(&c.generators, c.dim).expect("dimensions checked at construction");
    let snf = smith_normal_form(&m);
    snf.rank() == c.generators.len() && snf.elementary_divisors().iter().all(One::is_one)
}

/// True iff `p` is a nonnegative combination of the generators of `c`.
pub fn cone_contains(c: &SimplicialCone, p: &RationalVector) -> Result<bool> {
    if p.len() != c.dim {
        return Err(Error::DimensionMismatch {
            expected: c.dim,
            found: p.len(),
        });
    }
    if c.generators.is_empty() {
        return Ok(p.is_zero());
    }
    match rational::solve(&c.rational_columns(), &p.0, c.generators.len()) {
        Solution::Unique(lambda) => Ok(lambda.iter().all(|x| !x.is_negative())),
        Solution::Inconsistent => Ok(false),
        Solution::Underdetermined { .. } => unreachable!("generators are independent"),
    }
}

/// Extreme rays of `a ∩ b` as primitive integer vectors, sorted.
///
/// Double description: start from the V- and H-representation of `a`, which
/// is pointed, and cut by the constraints of `b` one at a time (equalities as
/// two opposite inequalities). New rays come only from combinatorially
/// adjacent pairs, so the ray set stays minimal at every step.
pub fn intersection_extreme_rays(a: &SimplicialCone, b: &SimplicialCone) -> Result<Vec<LatticeVector>> {
    if a.dim != b.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: b.dim,
        });
    }
    let mut constraints = split_equalities(a.facet_description());
    let mut rays: Vec<Vec<BigInt>> = a.generators.iter().map(|g| g.0.clone()).collect();

    for h in split_equalities(b.facet_description()) {
        let zeros: Vec<BTreeSet<usize>> = rays.iter().map(|r| zero_set(&constraints, r)).collect();
        let values: Vec<BigInt> = rays.iter().map(|r| dot(&h, r)).collect();
        let mut next: Vec<Vec<BigInt>> = rays
            .iter()
            .zip(&values)
            .filter(|(_, v)| !v.is_negative())
            .map(|(r, _)| r.clone())
            .collect();
        for (i, vp) in values.iter().enumerate().filter(|(_, v)| v.is_positive()) {
            for (j, vn) in values.iter().enumerate().filter(|(_, v)| v.is_negative()) {
                let common: BTreeSet<usize> = zeros[i].intersection(&zeros[j]).copied().collect();
                let adjacent = (0..rays.len())
                    .filter(|&k| k != i && k != j)
                    .all(|k| !common.is_subset(&zeros[k]));
                if adjacent {
                    let w: Vec<BigInt> = rays[j]
                        .iter()
                        .zip(&rays[i])
                        .map(|(n, p)| vp * n - vn * p)
                        .collect();
                    next.push(primitive(w));
                }
            }
        }
        next.sort();
        next.dedup();
        constraints.push(h);
        rays = next;
    }
    let mut out: Vec<LatticeVector> = rays.into_iter().map(LatticeVector).collect();
    out.sort();
    Ok(out)
}

/// True iff `a ∩ b = shared` as point sets.
pub fn intersection_is_common_face(
    a: &SimplicialCone,
    b: &SimplicialCone,
    shared: &SimplicialCone,
) -> Result<bool> {
    if shared.dim != a.dim {
        return Err(Error::DimensionMismatch {
            expected: a.dim,
            found: shared.dim,
        });
    }
    for g in &shared.generators {
        let p = g.to_rational();
        if !cone_contains(a, &p)? || !cone_contains(b, &p)? {
            return Ok(false);
        }
    }
    for ray in intersection_extreme_rays(a, b)? {
        if !cone_contains(shared, &ray.to_rational())? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn split_equalities(desc: ConeInequalities) -> Vec<Vec<BigInt>> {
    let mut out = desc.inequalities;
    for e in desc.equalities {
        out.push(e.iter().map(|x| -x).collect());
        out.push(e);
    }
    out
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn zero_set(constraints: &[Vec<BigInt>], r: &[BigInt]) -> BTreeSet<usize> {
    constraints
        .iter()
        .enumerate()
        .filter(|(_, h)| dot(h, r).is_zero())
        .map(|(i, _)| i)
        .collect()
}

fn primitive(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cone(gens: &[&[i64]]) -> SimplicialCone {
        let dim = gens.first().map_or(2, |g| g.len());
        SimplicialCone::new(dim, gens.iter().map(|g| LatticeVector::from_i64(g)).collect()).unwrap()
    }

    fn rv(num_den: &[(i64, i64)]) -> RationalVector {
        RationalVector(
            num_den
                .iter()
                .map(|&(n, d)| BigRational::new(n.into(), d.into()))
                .collect(),
        )
    }

    #[test]
    fn primitivize_examples() {
        let b = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(primitivize(&b(&[2, 4])).unwrap(), LatticeVector::from_i64(&[1, 2]));
        assert_eq!(primitivize(&b(&[1, 0])).unwrap(), LatticeVector::from_i64(&[1, 0]));
        assert_eq!(
            primitivize(&b(&[-3, 6, -9])).unwrap(),
            LatticeVector::from_i64(&[-1, 2, -3])
        );
        assert_eq!(primitivize(&b(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn construction_errors() {
        let v = |x: &[i64]| LatticeVector::from_i64(x);
        assert_eq!(
            SimplicialCone::new(2, vec![v(&[1, 0]), v(&[0, 1]), v(&[1, 1])]),
            Err(Error::IndependenceViolation)
        );
        assert_eq!(
            SimplicialCone::new(2, vec![v(&[2, 0])]),
            Err(Error::NotPrimitive(vec![2, 0]))
        );
        assert!(matches!(
            SimplicialCone::new(2, vec![v(&[1, 0, 0])]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn smoothness_examples() {
        assert!(is_smooth_cone(&cone(&[&[1, 0], &[0, 1]])));
        assert!(!is_smooth_cone(&cone(&[&[1, 0], &[1, 2]])));
        for k in 1..5 {
            assert!(is_smooth_cone(&cone(&[&[0, 1], &[-1, k]])));
        }
        assert!(is_smooth_cone(&SimplicialCone::zero(3)));
        // A lower-dimensional non-smooth cone: (1,1,0),(1,-1,0) has index 2.
        assert!(!is_smooth_cone(&cone(&[&[1, 1, 0], &[1, -1, 0]])));
    }

    #[test]
    fn containment_examples() {
        let quad = cone(&[&[1, 0], &[0, 1]]);
        assert!(cone_contains(&quad, &rv(&[(1, 2), (3, 1)])).unwrap());
        assert!(!cone_contains(&quad, &rv(&[(-1, 1), (0, 1)])).unwrap());
        assert!(cone_contains(&cone(&[&[1, 0], &[1, 2]]), &rv(&[(1, 1), (1, 1)])).unwrap());
        let ray = cone(&[&[1, 1, 0]]);
        assert!(cone_contains(&ray, &rv(&[(2, 1), (2, 1), (0, 1)])).unwrap());
        assert!(!cone_contains(&ray, &rv(&[(2, 1), (2, 1), (1, 1)])).unwrap());
        assert!(cone_contains(&quad, &rv(&[(1, 1)])).is_err());
    }

    #[test]
    fn facet_description_of_lower_dimensional_cone() {
        let c = cone(&[&[1, 0, 0], &[1, 1, 0]]);
        let d = c.facet_description();
        assert_eq!(d.equalities.len(), 1);
        assert_eq!(d.inequalities.len(), 2);
        for g in c.generators() {
            assert!(d.equalities.iter().all(|e| dot(e, g.coords()).is_zero()));
            assert!(d.inequalities.iter().all(|h| !dot(h, g.coords()).is_negative()));
        }
    }

    #[test]
    fn common_face_examples() {
        for k in 1..4 {
            let a = cone(&[&[1, 0], &[0, 1]]);
            let b = cone(&[&[0, 1], &[-1, k]]);
            assert!(intersection_is_common_face(&a, &b, &cone(&[&[0, 1]])).unwrap());
        }
        let a = cone(&[&[1, 0], &[0, 1]]);
        let b = cone(&[&[1, 1], &[1, -1]]);
        assert!(!intersection_is_common_face(&a, &b, &SimplicialCone::zero(2)).unwrap());
        assert!(intersection_is_common_face(&a, &a, &a).unwrap());
    }

    #[test]
    fn extreme_rays_of_overlapping_cones() {
        let a = cone(&[&[1, 0], &[0, 1]]);
        let b = cone(&[&[1, 1], &[1, -1]]);
        assert_eq!(
            intersection_extreme_rays(&a, &b).unwrap(),
            vec![LatticeVector::from_i64(&[1, 0]), LatticeVector::from_i64(&[1, 1])]
        );
        let opposite = cone(&[&[-1, 0], &[0, -1]]);
        assert!(intersection_extreme_rays(&a, &opposite).unwrap().is_empty());
    }

    #[test]
    fn three_dimensional_overlap() {
        let a = cone(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let b = cone(&[&[1, 1, 1], &[1, -1, 0], &[0, 0, -1]]);
        let rays = intersection_extreme_rays(&a, &b).unwrap();
        assert!(!rays.is_empty());
        for r in &rays {
            assert!(cone_contains(&a, &r.to_rational()).unwrap());
            assert!(cone_contains(&b, &r.to_rational()).unwrap());
        }
        assert!(!intersection_is_common_face(&a, &b, &SimplicialCone::zero(3)).unwrap());
    }
}
