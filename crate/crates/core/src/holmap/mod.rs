//! Exact models of based holomorphic maps `S² → X_Σ` of degree `D`.
//!
//! A map is a tuple of monic polynomials `(f₁, …, f_r)` with `deg f_k = d_k`
//! such that, for every primitive collection `σ`, the `f_i` with `i ∈ σ`
//! share no root. Monicity encodes the base point `∞ ↦ [1, …, 1]`.
//! Coefficients live in `Q(i)`: a common root over `C` exists iff the gcd
//! computed over any subfield containing the coefficients is non-constant.

mod gaussian;
mod poly;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;
use num_traits::Signed;
use serde::Serialize;

pub use gaussian::GaussianRational;
pub use poly::Poly;

use crate::cox::{degree_of_u64, DegreeVector};
use crate::error::{Error, Result};
use crate::fan::{primitive_collections, Face, Fan};
use crate::par::{self, Execution};

/// Tuple of monic polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyTuple {
    polys: Vec<Poly>,
}

impl PolyTuple {
    /// Rejects any polynomial that is not monic.
    pub fn new(polys: Vec<Poly>) -> Result<PolyTuple> {
        for (index, p) in polys.iter().enumerate() {
            if !p.is_monic() {
                return Err(Error::NotMonic {
                    index,
                    degree: p.degree().unwrap_or(0),
                });
            }
        }
        Ok(PolyTuple { polys })
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.polys.iter().map(|p| p.degree().unwrap_or(0) as u64).collect()
    }
}

/// Tuple of finite multisets of points of `C`, one per ray.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Configuration {
    coords: Vec<BTreeMap<GaussianRational, u32>>,
}

impl Configuration {
    /// Repeated points within one coordinate have their multiplicities added.
    /// Zero multiplicities are rejected.
    pub fn new(coords: Vec<Vec<(GaussianRational, u32)>>) -> Result<Configuration> {
        let mut out = Vec::with_capacity(coords.len());
        for pts in coords {
            let mut m = BTreeMap::new();
            for (p, k) in pts {
                if k == 0 {
                    return Err(Error::NonPositive);
                }
                *m.entry(p).or_insert(0) += k;
            }
            out.push(m);
        }
        Ok(Configuration { coords: out })
    }

    /// One simple point per listed value.
    pub fn from_points(coords: Vec<Vec<GaussianRational>>) -> Result<Configuration> {
        Configuration::new(
            coords
                .into_iter()
                .map(|pts| pts.into_iter().map(|p| (p, 1)).collect())
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BTreeMap<GaussianRational, u32>] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    /// Multiplicity sums per coordinate.
    pub fn sizes(&self) -> Vec<u64> {
        self.coords
            .iter()
            .map(|m| m.values().map(|&k| k as u64).sum())
            .collect()
    }

    /// True iff no coordinate has a point.
    pub fn is_void(&self) -> bool {
        self.coords.iter().all(BTreeMap::is_empty)
    }
}

/// Why a tuple fails membership: the first primitive collection (in sorted
/// order) whose polynomials share a root, and their monic gcd.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub collection: Face,
    pub common_factor: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub member: bool,
    pub witness: Option<Witness>,
}

/// Monic gcd of the polynomials indexed by `sigma`, folded in ascending
/// index order and stopped early once it is constant.
pub fn collection_gcd(t: &PolyTuple, sigma: Face) -> Poly {
    let mut g = Poly::zero();
    for i in sigma.indices() {
        g = g.gcd(&t.polys[i]);
        if g.degree() == Some(0) {
            break;
        }
    }
    g
}

fn validated_degrees(t: &PolyTuple, f: &Fan) -> Result<DegreeVector> {
    degree_of_u64(f, &t.degrees())
}

/// Membership decision with a witness on failure.
pub fn membership(t: &PolyTuple, f: &Fan) -> Result<MembershipVerdict> {
    validated_degrees(t, f)?;
    Ok(membership_against(t, &primitive_collections(f)))
}

fn membership_against(t: &PolyTuple, collections: &[Face]) -> MembershipVerdict {
    for &sigma in collections {
        let g = collection_gcd(t, sigma);
        if g.degree() != Some(0) {
            return MembershipVerdict {
                member: false,
                witness: Some(Witness {
                    collection: sigma,
                    common_factor: g,
                }),
            };
        }
    }
    MembershipVerdict {
        member: true,
        witness: None,
    }
}

/// True iff for every primitive collection `σ` the polynomials `{f_i : i ∈ σ}`
/// have constant gcd. Supersets of primitive collections need no check:
/// a root common to a superset is common to the collection inside it.
pub fn is_member(t: &PolyTuple, f: &Fan) -> Result<bool> {
    membership(t, f).map(|v| v.member)
}

/// [`is_member`] over a batch, sharing the primitive-collection computation.
pub fn is_member_batch(tuples: &[PolyTuple], f: &Fan, exec: Execution) -> Vec<Result<bool>> {
    let collections = primitive_collections(f);
    par::map(exec, tuples, |t| {
        validated_degrees(t, f)?;
        Ok(membership_against(t, &collections).member)
    })
}

/// True iff for every primitive collection the point sets `ξ_i`, `i ∈ σ`,
/// have empty common intersection.
pub fn config_is_member(c: &Configuration, f: &Fan) -> Result<bool> {
    let r = f.num_rays();
    if c.len() != r {
        return Err(Error::SizeMismatch {
            expected: r,
            found: c.len(),
        });
    }
    degree_of_u64(f, &c.sizes())?;
    Ok(primitive_collections(f).iter().all(|sigma| {
        let mut idx = sigma.indices();
        let first = idx.next().expect("primitive collections are nonempty");
        let mut common: BTreeSet<&GaussianRational> = c.coords[first].keys().collect();
        for i in idx {
            common.retain(|p| c.coords[i].contains_key(*p));
            if common.is_empty() {
                break;
            }
        }
        common.is_empty()
    }))
}

/// `f_i = Π_{α ∈ ξ_i} (z − α)^{mult}`
pub fn config_to_polytuple(c: &Configuration) -> PolyTuple {
    PolyTuple {
        polys: c
            .coords
            .iter()
            .map(|m| Poly::from_roots(m.iter().map(|(p, &k)| (p, k))))
            .collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvaluationResult {
    pub point: Vec<GaussianRational>,
    pub in_u_k: bool,
    /// Primitive collections whose coordinates all vanish at the point.
    pub violated_collections: Vec<Face>,
}

/// `[f₁(α), …, f_r(α)]` classified against every primitive collection.
pub fn evaluate(t: &PolyTuple, f: &Fan, alpha: &GaussianRational) -> EvaluationResult {
    let point: Vec<GaussianRational> = t.polys.iter().map(|p| p.eval(alpha)).collect();
    let violated_collections: Vec<Face> = primitive_collections(f)
        .into_iter()
        .filter(|s| s.indices().all(|i| point.get(i).is_some_and(GaussianRational::is_zero)))
        .collect();
    EvaluationResult {
        in_u_k: violated_collections.is_empty(),
        point,
        violated_collections,
    }
}

/// Stabilized tuple with its degree and re-checked membership verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Stabilized {
    pub tuple: PolyTuple,
    pub degrees: DegreeVector,
    pub member: bool,
}

/// Default stabilization points `x_j = N(D) + j/(r+1)`, `j = 1..=r`: real,
/// distinct, with `N(D) ≤ x_j < N(D) + 1 ≤ N(D + a)`.
pub fn default_stabilization_points(d: &DegreeVector) -> Vec<GaussianRational> {
    let r = d.len() as i64;
    (1..=r)
        .map(|j| {
            GaussianRational::real(
                BigRational::from_integer((d.total() as i64).into())
                    + BigRational::new(j.into(), (r + 1).into()),
            )
        })
        .collect()
}

fn check_increment(f: &Fan, a: &[u64]) -> Result<DegreeVector> {
    degree_of_u64(f, a).map_err(|_| Error::NonKernelIncrement)
}

fn check_points(points: &[GaussianRational], r: usize) -> Result<()> {
    let distinct: BTreeSet<&GaussianRational> = points.iter().collect();
    if points.len() != r || distinct.len() != r {
        return Err(Error::DuplicatePoints { expected: r });
    }
    Ok(())
}

/// `f_i ↦ f_i · (z − x_i)^{a_i}`, raising the degree from `D` to `D + a`.
///
/// Membership of the result is re-verified rather than assumed: it is
/// guaranteed only when the input roots stay left of `Re = N(D)`.
pub fn stabilize(
    t: &PolyTuple,
    f: &Fan,
    a: &[u64],
    points: Option<&[GaussianRational]>,
) -> Result<Stabilized> {
    let d = validated_degrees(t, f)?;
    let inc = check_increment(f, a)?;
    let pts = match points {
        Some(p) => p.to_vec(),
        None => default_stabilization_points(&d),
    };
    check_points(&pts, f.num_rays())?;
    let polys = t
        .polys
        .iter()
        .zip(&pts)
        .zip(a)
        .map(|((p, x), &k)| p * &Poly::linear(x).pow(k as u32))
        .collect();
    let tuple = PolyTuple { polys };
    let member = is_member(&tuple, f)?;
    Ok(Stabilized {
        tuple,
        degrees: d.add(&inc),
        member,
    })
}

/// Configuration form of [`stabilize`]: `ξ_i ↦ ξ_i + a_i·x_i`.
pub fn stabilize_config(
    c: &Configuration,
    f: &Fan,
    a: &[u64],
    points: Option<&[GaussianRational]>,
) -> Result<Configuration> {
    if c.len() != f.num_rays() {
        return Err(Error::SizeMismatch {
            expected: f.num_rays(),
            found: c.len(),
        });
    }
    let d = degree_of_u64(f, &c.sizes())?;
    check_increment(f, a)?;
    let pts = match points {
        Some(p) => p.to_vec(),
        None => default_stabilization_points(&d),
    };
    check_points(&pts, f.num_rays())?;
    let mut out = c.clone();
    for ((m, x), &k) in out.coords.iter_mut().zip(pts).zip(a) {
        *m.entry(x).or_insert(0) += k as u32;
    }
    Ok(out)
}

/// Points of `c` strictly inside the closed disk `|x − w| ≤ ε₀`, recentered
/// to `(x − w)/ε₀`. Points on the boundary circle are dropped: they are
/// identified with the empty configuration.
pub fn scanning_snapshot(c: &Configuration, w: &GaussianRational, eps: &BigRational) -> Result<Configuration> {
    if !eps.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let eps_sqr = eps * eps;
    let scale = GaussianRational::real(eps.recip());
    let coords = c
        .coords
        .iter()
        .map(|m| {
            m.iter()
                .filter_map(|(x, &k)| {
                    let dx = x - w;
                    (dx.norm_sqr() < eps_sqr).then(|| (&dx * &scale, k))
                })
                .collect()
        })
        .collect();
    Ok(Configuration { coords })
}

/// JSON-friendly view of a witness for reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSummary {
    /// 1-based ray indices.
    pub collection: Vec<usize>,
    pub common_factor_degree: usize,
}

impl From<&Witness> for WitnessSummary {
    fn from(w: &Witness) -> Self {
        WitnessSummary {
            collection: w.collection.to_one_based(),
            common_factor_degree: w.common_factor.degree().unwrap_or(0),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cp_fan, hirzebruch_fan};

    fn g(a: i64) -> GaussianRational {
        GaussianRational::from_integer(a)
    }

    fn lin(a: i64) -> Poly {
        Poly::linear(&g(a))
    }

    fn tuple(polys: Vec<Poly>) -> PolyTuple {
        PolyTuple::new(polys).unwrap()
    }

    #[test]
    fn hirzebruch_distinct_roots_member() {
        for k in 1..4u32 {
            // degrees (1,1,1,k+1)
            let f4 = (4..=(4 + k as i64)).fold(Poly::one(), |acc, a| &acc * &lin(-a));
            let t = tuple(vec![lin(-1), lin(-2), lin(-3), f4]);
            assert!(is_member(&t, &hirzebruch_fan(k as i64)).unwrap());
        }
    }

    #[test]
    fn shared_root_on_collection_fails() {
        let f = hirzebruch_fan(1);
        let t = tuple(vec![lin(0), lin(1), lin(0), &lin(2) * &lin(3)]);
        let v = membership(&t, &f).unwrap();
        assert!(!v.member);
        let w = v.witness.unwrap();
        assert_eq!(w.collection, Face::from_indices([0, 2]));
        assert_eq!(w.common_factor, lin(0));
        let ev = evaluate(&t, &f, &g(0));
        assert!(!ev.in_u_k);
        assert_eq!(ev.violated_collections, vec![Face::from_indices([0, 2])]);
    }

    #[test]
    fn cp1_examples() {
        let f = cp_fan(1);
        let i = GaussianRational::i();
        let t = tuple(vec![Poly::linear(&i), Poly::linear(&-&i)]);
        assert!(is_member(&t, &f).unwrap());
        // (z² + 1, z − i) has degrees (2, 1): not a degree of CP¹.
        let bad = tuple(vec![Poly::new(vec![g(1), g(0), g(1)]), Poly::linear(&i)]);
        assert_eq!(is_member(&bad, &f), Err(Error::NotInKernel));
        // At degrees (2, 2): (z² + 1, (z − i)(z − 5)) shares the root i.
        let t = tuple(vec![Poly::new(vec![g(1), g(0), g(1)]), &Poly::linear(&i) * &lin(5)]);
        let v = membership(&t, &f).unwrap();
        assert!(!v.member);
        assert_eq!(v.witness.unwrap().common_factor, Poly::linear(&i));
    }

    #[test]
    fn degree_length_mismatch() {
        let t = tuple(vec![lin(1)]);
        assert!(matches!(is_member(&t, &cp_fan(1)), Err(Error::DegreeMismatch { .. })));
        assert!(matches!(PolyTuple::new(vec![lin(1).scale(&g(2))]), Err(Error::NotMonic { .. })));
    }

    #[test]
    fn configuration_membership() {
        let f = hirzebruch_fan(2);
        let c = Configuration::from_points(vec![vec![g(1)], vec![g(2)], vec![g(3)], vec![g(4), g(5), g(6)]]).unwrap();
        assert!(config_is_member(&c, &f).unwrap());
        let c = Configuration::from_points(vec![vec![g(0)], vec![g(2)], vec![g(0)], vec![g(4), g(5), g(6)]]).unwrap();
        assert!(!config_is_member(&c, &f).unwrap());
        let short = Configuration::from_points(vec![vec![g(0)]]).unwrap();
        assert!(matches!(config_is_member(&short, &f), Err(Error::SizeMismatch { .. })));
        assert_eq!(Configuration::new(vec![vec![(g(0), 0)]]), Err(Error::NonPositive));
    }

    #[test]
    fn config_expansion() {
        let c = Configuration::new(vec![vec![(g(0), 2)]]).unwrap();
        assert_eq!(config_to_polytuple(&c).polys()[0].coeffs(), &[g(0), g(0), g(1)]);
        let c = Configuration::from_points(vec![vec![GaussianRational::i(), g(2)]]).unwrap();
        assert_eq!(
            config_to_polytuple(&c).polys()[0].coeffs(),
            &[GaussianRational::from_parts(0, 1, 2, 1), GaussianRational::from_parts(-2, 1, -1, 1), g(1)]
        );
    }

    #[test]
    fn evaluate_far_point() {
        let f = cp_fan(2);
        let t = tuple(vec![lin(1), lin(2), lin(3)]);
        let ev = evaluate(&t, &f, &g(100));
        assert!(ev.in_u_k);
        assert!(ev.point.iter().all(|x| !x.is_zero()));
    }

    #[test]
    fn stabilize_cp1() {
        let f = cp_fan(1);
        let i = GaussianRational::i();
        let t = tuple(vec![Poly::linear(&i), Poly::linear(&-&i)]);
        let s = stabilize(&t, &f, &[1, 1], None).unwrap();
        assert_eq!(s.degrees.entries(), &[2, 2]);
        assert_eq!(s.tuple.degrees(), vec![2, 2]);
        assert!(s.member);
    }

    #[test]
    fn stabilize_errors_and_collision() {
        let f = cp_fan(1);
        let t = tuple(vec![lin(0), lin(1)]);
        assert_eq!(stabilize(&t, &f, &[1, 2], None), Err(Error::NonKernelIncrement));
        assert_eq!(stabilize(&t, &f, &[0, 0], None), Err(Error::NonKernelIncrement));
        assert_eq!(
            stabilize(&t, &f, &[1, 1], Some(&[g(5), g(5)])),
            Err(Error::DuplicatePoints { expected: 2 })
        );
        // Point x₁ lands on the root of f₂ and x₂ on the root of f₁: the
        // collection {1, 2} now shares roots.
        let s = stabilize(&t, &f, &[1, 1], Some(&[g(1), g(0)])).unwrap();
        assert!(!s.member);
    }

    #[test]
    fn stabilize_composes() {
        let f = cp_fan(2);
        let t = tuple(vec![lin(-1), lin(-2), lin(-3)]);
        let once = stabilize(&t, &f, &[1, 1, 1], None).unwrap();
        let twice = stabilize(&once.tuple, &f, &[2, 2, 2], None).unwrap();
        let direct = stabilize(&t, &f, &[3, 3, 3], None).unwrap();
        assert_eq!(twice.degrees, direct.degrees);
        assert_eq!(twice.degrees.entries(), &[4, 4, 4]);
        assert!(twice.member && direct.member);
    }

    #[test]
    fn stabilize_config_matches_polynomial_route() {
        let f = cp_fan(2);
        let c = Configuration::from_points(vec![vec![g(-1)], vec![g(-2)], vec![g(-3)]]).unwrap();
        let sc = stabilize_config(&c, &f, &[1, 1, 1], None).unwrap();
        let sp = stabilize(&config_to_polytuple(&c), &f, &[1, 1, 1], None).unwrap();
        assert_eq!(config_to_polytuple(&sc), sp.tuple);
    }

    #[test]
    fn snapshot_examples() {
        let c = Configuration::from_points(vec![vec![g(0)], vec![g(3)]]).unwrap();
        let eps = BigRational::new(1.into(), 2.into());
        assert!(scanning_snapshot(&c, &g(100), &eps).unwrap().is_void());
        let s = scanning_snapshot(&c, &g(0), &eps).unwrap();
        assert_eq!(s, Configuration::from_points(vec![vec![g(0)], vec![]]).unwrap());
        // |3 − 2| = 1 = ε₀: boundary point is dropped.
        let one = BigRational::from_integer(1.into());
        assert!(scanning_snapshot(&c, &g(2), &one).unwrap().is_void());
        assert_eq!(scanning_snapshot(&c, &g(0), &BigRational::from_integer(0.into())), Err(Error::NonPositiveRadius));
        // Recentering divides by ε₀.
        let c = Configuration::from_points(vec![vec![GaussianRational::from_ratio(1, 4)]]).unwrap();
        let s = scanning_snapshot(&c, &g(0), &eps).unwrap();
        assert_eq!(s, Configuration::from_points(vec![vec![GaussianRational::from_ratio(1, 2)]]).unwrap());
    }
}
