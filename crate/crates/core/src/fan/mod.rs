//! Fans stored as a pair (generator table, underlying simplicial complex).
//!
//! Ray indices are 0-based internally. Cone-level objects are derived on
//! demand from faces of the complex.

mod face;
mod iso;
mod subfans;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

pub use face::{Face, MAX_RAYS};
pub use iso::{classify_fans, fan_isomorphism, FanClasses};
pub use subfans::enumerate_subfans;

use crate::cone::{self, generator_matrix, is_smooth_cone, LatticeVector, SimplicialCone};
use crate::error::{Error, Result};
use crate::lattice::IntegerMatrix;

/// Above this many rays the non-face family is only available as a predicate.
pub const MAX_MATERIALIZED_RAYS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fan {
    dim: usize,
    generators: Vec<LatticeVector>,
    complex: BTreeSet<Face>,
}

impl Fan {
    /// Fan whose complex is the downward closure of `maximal_cones`
    /// (0-based index lists) together with every singleton and `∅`.
    pub fn new(dim: usize, generators: Vec<LatticeVector>, maximal_cones: &[Vec<usize>]) -> Result<Fan> {
        let r = generators.len();
        if r > MAX_RAYS {
            return Err(Error::TooManyRays { r, cap: MAX_RAYS });
        }
        let mut complex = BTreeSet::from([Face::EMPTY]);
        complex.extend((0..r).map(Face::singleton));
        for cone in maximal_cones {
            if let Some(&bad) = cone.iter().find(|&&i| i >= r) {
                return Err(Error::IndexOutOfRange { index: bad, len: r });
            }
            let top = Face::from_indices(cone.iter().copied());
            insert_closure(&mut complex, top);
        }
        Ok(Fan {
            dim,
            generators,
            complex,
        })
    }

    /// Fan with an explicitly given complex, taken as-is. Use
    /// [`validate_fan`] before relying on any fan axiom.
    pub fn from_complex(dim: usize, generators: Vec<LatticeVector>, complex: BTreeSet<Face>) -> Result<Fan> {
        let r = generators.len();
        if r > MAX_RAYS {
            return Err(Error::TooManyRays { r, cap: MAX_RAYS });
        }
        for f in &complex {
            if let Some(i) = f.indices().find(|&i| i >= r) {
                return Err(Error::IndexOutOfRange { index: i, len: r });
            }
        }
        Ok(Fan {
            dim,
            generators,
            complex,
        })
    }

    pub fn from_i64(dim: usize, generators: &[&[i64]], maximal_cones: &[&[usize]]) -> Result<Fan> {
        Fan::new(
            dim,
            generators.iter().map(|g| LatticeVector::from_i64(g)).collect(),
            &maximal_cones.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
        )
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of rays `r`.
    pub fn num_rays(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[LatticeVector] {
        &self.generators
    }

    pub fn complex(&self) -> &BTreeSet<Face> {
        &self.complex
    }

    pub fn contains_face(&self, f: Face) -> bool {
        self.complex.contains(&f)
    }

    /// Faces not strictly contained in another face.
    pub fn maximal_faces(&self) -> Vec<Face> {
        self.complex
            .iter()
            .filter(|f| !self.complex.iter().any(|g| g != *f && f.is_subset(*g)))
            .copied()
            .collect()
    }

    /// `N`: the `n × r` matrix with the generators as columns.
    pub fn generator_matrix(&self) -> IntegerMatrix {
        generator_matrix(&self.generators, self.dim).expect("generator dimensions validated")
    }

    pub fn cone(&self, f: Face) -> Result<SimplicialCone> {
        SimplicialCone::new(self.dim, f.indices().map(|i| self.generators[i].clone()).collect())
    }

    /// Same generators, different complex.
    pub(crate) fn with_complex(&self, complex: BTreeSet<Face>) -> Fan {
        Fan {
            dim: self.dim,
            generators: self.generators.clone(),
            complex,
        }
    }
}

fn insert_closure(complex: &mut BTreeSet<Face>, top: Face) {
    let mut stack = vec![top];
    while let Some(f) = stack.pop() {
        if complex.insert(f) {
            stack.extend(f.indices().map(|i| f.without(i)));
        }
    }
}

/// The fan axiom a violation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Axiom {
    NonTrivial,
    GeneratorDimension,
    PrimitiveGenerator,
    DistinctGenerators,
    EmptyFace,
    RayCoverage,
    DownwardClosure,
    Simpliciality,
    Intersection,
}

/// A violated axiom with the (0-based) ray indices witnessing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub axiom: Axiom,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    fn push(&mut self, axiom: Axiom, witness: impl IntoIterator<Item = usize>) {
        self.violations.push(Violation {
            axiom,
            witness: witness.into_iter().collect(),
        });
    }
}

/// Checks every fan invariant and lists each failure with a witness.
pub fn validate_fan(f: &Fan) -> ValidationReport {
    let mut report = ValidationReport::default();
    let r = f.num_rays();

    if f.complex.iter().all(|c| c.is_empty()) {
        report.push(Axiom::NonTrivial, []);
    }
    if !f.complex.contains(&Face::EMPTY) {
        report.push(Axiom::EmptyFace, []);
    }
    let mut dims_ok = true;
    for (i, g) in f.generators.iter().enumerate() {
        if g.dim() != f.dim {
            report.push(Axiom::GeneratorDimension, [i]);
            dims_ok = false;
        } else if !g.is_primitive() {
            report.push(Axiom::PrimitiveGenerator, [i]);
        }
    }
    for i in 0..r {
        for j in i + 1..r {
            if f.generators[i] == f.generators[j] {
                report.push(Axiom::DistinctGenerators, [i, j]);
            }
        }
    }
    for i in 0..r {
        if !f.complex.contains(&Face::singleton(i)) {
            report.push(Axiom::RayCoverage, [i]);
        }
    }
    for face in &f.complex {
        if let Some(i) = face.indices().find(|&i| !f.complex.contains(&face.without(i))) {
            report.push(Axiom::DownwardClosure, face.without(i).indices());
        }
    }
    if !dims_ok || !report.violations.iter().all(|v| v.axiom != Axiom::PrimitiveGenerator) {
        return report;
    }

    let mut cones = BTreeMap::new();
    for face in f.maximal_faces() {
        match f.cone(face) {
            Ok(c) => {
                cones.insert(face, c);
            }
            Err(_) => report.push(Axiom::Simpliciality, face.indices()),
        }
    }
    let faces: Vec<Face> = cones.keys().copied().collect();
    for (a, fa) in faces.iter().enumerate() {
        for fb in &faces[a + 1..] {
            let shared = fa.intersection(*fb);
            let Ok(sc) = f.cone(shared) else { continue };
            if !cone::intersection_is_common_face(&cones[fa], &cones[fb], &sc).unwrap_or(false) {
                report.push(Axiom::Intersection, fa.union(*fb).indices());
            }
        }
    }
    report
}

/// Errors unless the fan passes validation.
pub fn ensure_valid(f: &Fan) -> Result<()> {
    let report = validate_fan(f);
    match report.violations.first() {
        None => Ok(()),
        Some(v) => Err(Error::InvalidFan(format!("{:?} at rays {:?}", v.axiom, v.witness))),
    }
}

/// Predicate form of the non-face family `I(K)`.
pub fn is_nonface(f: &Fan, s: Face) -> bool {
    !f.complex.contains(&s)
}

/// The non-face family `I(K) = {σ ⊂ [r] : σ ∉ K}`, materialized for
/// `r ≤ MAX_MATERIALIZED_RAYS`.
pub fn nonface_family(f: &Fan) -> Result<Vec<Face>> {
    let r = f.num_rays();
    if r > MAX_MATERIALIZED_RAYS {
        return Err(Error::TooManyRays {
            r,
            cap: MAX_MATERIALIZED_RAYS,
        });
    }
    let mut out: Vec<Face> = (0..1u64 << r)
        .map(Face::from_bits)
        .filter(|s| is_nonface(f, *s))
        .collect();
    out.sort();
    Ok(out)
}

/// Minimal non-faces of the complex (the primitive collections), sorted.
pub fn primitive_collections(f: &Fan) -> Vec<Face> {
    let r = f.num_rays();
    let mut out = BTreeSet::new();
    for &tau in &f.complex {
        for i in (0..r).filter(|&i| !tau.contains(i)) {
            let sigma = tau.with(i);
            if !f.complex.contains(&sigma) && sigma.indices().all(|j| f.complex.contains(&sigma.without(j))) {
                out.insert(sigma);
            }
        }
    }
    out.into_iter().collect()
}

/// Smallest cardinality of a primitive collection.
pub fn r_min(f: &Fan) -> Result<usize> {
    primitive_collections(f)
        .iter()
        .map(|s| s.len())
        .min()
        .ok_or(Error::NoPrimitiveCollection)
}

pub fn is_smooth(f: &Fan) -> bool {
    f.maximal_faces()
        .into_iter()
        .all(|face| f.cone(face).map(|c| is_smooth_cone(&c)).unwrap_or(false))
}

/// True iff the support of the fan is all of `R^n`.
///
/// Dimension 1 and 2 are decided exactly. From dimension 3 on the test is
/// the pseudomanifold criterion: pure of dimension `n`, every `(n−1)`-face of
/// a maximal cone lies in exactly two maximal cones, and the adjacency graph
/// of maximal cones is connected.
pub fn is_complete(f: &Fan) -> bool {
    match f.dim {
        0 => true,
        1 => {
            let has = |s: i64| f.generators.iter().any(|g| g.coords()[0] == BigInt::from(s));
            has(1) && has(-1)
        }
        2 => is_complete_planar(f),
        _ => is_complete_pseudomanifold(f),
    }
}

fn cross(a: &LatticeVector, b: &LatticeVector) -> BigInt {
    let (a, b) = (a.coords(), b.coords());
    &a[0] * &b[1] - &a[1] * &b[0]
}

fn angular_cmp(a: &LatticeVector, b: &LatticeVector) -> Ordering {
    let half = |v: &LatticeVector| {
        let (x, y) = (&v.coords()[0], &v.coords()[1]);
        if y.is_positive() || (y.is_zero() && x.is_positive()) {
            0
        } else {
            1
        }
    };
    half(a).cmp(&half(b)).then_with(|| {
        let c = cross(a, b);
        if c.is_positive() {
            Ordering::Less
        } else if c.is_negative() {
            Ordering::Greater
        } else {
            Ordering::Equal
        }
    })
}

fn is_complete_planar(f: &Fan) -> bool {
    let r = f.num_rays();
    if r < 3 {
        return false;
    }
    let mut order: Vec<usize> = (0..r).collect();
    order.sort_by(|&i, &j| angular_cmp(&f.generators[i], &f.generators[j]));
    (0..r).all(|k| {
        let (i, j) = (order[k], order[(k + 1) % r]);
        f.complex.contains(&Face::from_indices([i, j]))
            && cross(&f.generators[i], &f.generators[j]).is_positive()
    })
}

fn is_complete_pseudomanifold(f: &Fan) -> bool {
    let n = f.dim;
    let maximal = f.maximal_faces();
    if maximal.is_empty() || maximal.iter().any(|m| m.len() != n) {
        return false;
    }
    let mut ridges: BTreeMap<Face, Vec<usize>> = BTreeMap::new();
    for (k, m) in maximal.iter().enumerate() {
        for i in m.indices() {
            ridges.entry(m.without(i)).or_default().push(k);
        }
    }
    if ridges.values().any(|owners| owners.len() != 2) {
        return false;
    }
    let mut seen = vec![false; maximal.len()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(k) = stack.pop() {
        for owners in ridges.values().filter(|o| o.contains(&k)) {
            for &o in owners {
                if !seen[o] {
                    seen[o] = true;
                    stack.push(o);
                }
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// All fans with no cones beyond the rays: `K = {∅} ∪ singletons`.
pub fn rays_only(dim: usize, generators: Vec<LatticeVector>) -> Result<Fan> {
    Fan::new(dim, generators, &[])
}
