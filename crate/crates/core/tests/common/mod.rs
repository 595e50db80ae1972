//! Oracles and generators shared by the integration tests. Nothing here calls
//! into the library's own algorithms for the quantity being checked.

#![allow(dead_code, clippy::needless_range_loop)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use torickit::catalog::{entries, CatalogEntry};
use torickit::document::FanDocument;
use torickit::fan::{Face, Fan};
use torickit::holmap::{GaussianRational as GR, PolyTuple};

pub fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fan_path(name: &str) -> PathBuf {
    fixture_dir().join("fans").join(format!("{name}.json"))
}

pub fn catalog() -> Vec<CatalogEntry> {
    entries().expect("bundled catalog parses")
}

pub fn catalog_fan(name: &str) -> Fan {
    catalog()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap_or_else(|| panic!("no fixture {name}"))
        .fan
}

/// Writes `doc` to a fresh file under the target directory.
pub fn temp_file(tag: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(format!("{tag}-{}.json", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

pub fn fan_doc_file(tag: &str, f: &Fan) -> PathBuf {
    let doc = FanDocument::from_fan(f, Some(tag.to_string())).unwrap();
    temp_file(tag, &serde_json::to_string(&doc).unwrap())
}

// ---------------------------------------------------------------- integers

pub fn gens_i64(f: &Fan) -> Vec<Vec<i64>> {
    f.generators().iter().map(|g| g.to_i64().unwrap()).collect()
}

/// `N·x` for the `n × r` matrix whose columns are `cols`.
pub fn apply_cols(cols: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    let n = cols.first().map_or(0, Vec::len);
    let mut out = vec![0i64; n];
    for (c, &xi) in cols.iter().zip(x) {
        for (o, &ci) in out.iter_mut().zip(c) {
            *o += ci * xi;
        }
    }
    out
}

/// Row-major `rows × cols` times `x`.
pub fn apply_rows(rows: &[Vec<i64>], x: &[i64]) -> Vec<i64> {
    rows.iter().map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum()).collect()
}

/// Calls `visit` on every vector of `[lo, hi]^len`; stops early when it
/// returns `true`, and reports whether it did.
pub fn any_in_box(len: usize, lo: i64, hi: i64, mut visit: impl FnMut(&[i64]) -> bool) -> bool {
    let mut v = vec![lo; len];
    if len == 0 {
        return visit(&v);
    }
    loop {
        if visit(&v) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == len {
                return false;
            }
            if v[i] < hi {
                v[i] += 1;
                break;
            }
            v[i] = lo;
            i += 1;
        }
    }
}

/// All degree vectors in `[1, cap]^r` annihilated by the generators.
pub fn degrees_up_to(f: &Fan, cap: i64) -> Vec<Vec<i64>> {
    let cols = gens_i64(f);
    let mut out = Vec::new();
    any_in_box(f.num_rays(), 1, cap, |d| {
        if apply_cols(&cols, d).iter().all(|&x| x == 0) {
            out.push(d.to_vec());
        }
        false
    });
    out
}

/// Exact rational solve of `Σ c_j b_j = v`; `None` if `v` is outside the span.
pub fn rational_coordinates(basis: &[Vec<BigRational>], v: &[BigRational]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = v.len();
    // Augmented n × (k+1).
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| basis.iter().map(|b| b[i].clone()).chain([v[i].clone()]).collect())
        .collect();
    let mut row = 0;
    let mut pivots = Vec::new();
    for col in 0..k {
        let Some(p) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..=k {
                    let t = &m[row][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut c = vec![BigRational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        c[col] = m[i][k].clone();
    }
    Some(c)
}

// ---------------------------------------------------------------- fans

/// Minimal non-faces by exhaustive subset search.
pub fn brute_primitive_collections(f: &Fan) -> Vec<BTreeSet<usize>> {
    let r = f.num_rays();
    let faces: BTreeSet<u64> = f.complex().iter().map(|s| s.bits()).collect();
    let mut out = Vec::new();
    for mask in 1u64..(1 << r) {
        if faces.contains(&mask) {
            continue;
        }
        let minimal = (0..r)
            .filter(|i| mask >> i & 1 == 1)
            .all(|i| faces.contains(&(mask & !(1 << i))));
        if minimal {
            out.push((0..r).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

/// Whether some `U ∈ GL(2, Z)` with entries in `[-b, b]` maps `a` onto `c`
/// (generators and cones). Enough when both fans contain `e₁, e₂` among
/// their rays and all generator coordinates are bounded by `b`: the columns
/// of `U` are then images of rays.
pub fn gl2_equivalent(a: &Fan, c: &Fan, b: i64) -> bool {
    let ga = gens_i64(a);
    let gc = gens_i64(c);
    if ga.len() != gc.len() || a.complex().len() != c.complex().len() {
        return false;
    }
    let cones_c: BTreeSet<BTreeSet<Vec<i64>>> = c
        .complex()
        .iter()
        .map(|s| s.indices().map(|i| gc[i].clone()).collect())
        .collect();
    let mut found = false;
    any_in_box(4, -b, b, |u| {
        let det = u[0] * u[3] - u[1] * u[2];
        if det.abs() != 1 {
            return false;
        }
        let img = |v: &[i64]| vec![u[0] * v[0] + u[1] * v[1], u[2] * v[0] + u[3] * v[1]];
        let ok = a.complex().iter().all(|s| {
            let cone: BTreeSet<Vec<i64>> = s.indices().map(|i| img(&ga[i])).collect();
            cones_c.contains(&cone)
        });
        found = ok;
        ok
    });
    found
}

pub fn face(ix: &[usize]) -> Face {
    Face::from_indices(ix.iter().copied())
}

// ---------------------------------------------------------------- Q(i)

pub fn gr(a: i64, b: i64, c: i64, d: i64) -> GR {
    GR::from_parts(a, b, c, d)
}

pub fn random_gr(rng: &mut ChaCha8Rng, bound: i64) -> GR {
    let part = |rng: &mut ChaCha8Rng| (rng.gen_range(-bound..=bound), rng.gen_range(1..=bound));
    let (a, b) = part(rng);
    let (c, d) = part(rng);
    gr(a, b, c, d)
}

/// Determinant by Gaussian elimination over `Q(i)`.
pub fn det(mut m: Vec<Vec<GR>>) -> GR {
    let n = m.len();
    let mut acc = GR::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&i| !m[i][col].is_zero()) else {
            return GR::zero();
        };
        if p != col {
            m.swap(p, col);
            acc = -acc;
        }
        let piv = m[col][col].clone();
        acc = &acc * &piv;
        let inv = piv.inv().unwrap();
        for i in col + 1..n {
            if m[i][col].is_zero() {
                continue;
            }
            let f = &m[i][col] * &inv;
            for j in col..n {
                let t = &m[col][j] * &f;
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    acc
}

/// Sylvester resultant of `f` (monic, degree `p`) and `g` taken with formal
/// degree `q = g.len() − 1`; coefficients ascending. Since `f` is monic this
/// vanishes iff `f` and `g` share a root (or `g ≡ 0`).
pub fn resultant(f: &[GR], g: &[GR]) -> GR {
    let p = f.len() - 1;
    let q = g.len() - 1;
    let n = p + q;
    if n == 0 {
        return GR::one();
    }
    let mut m = vec![vec![GR::zero(); n]; n];
    for i in 0..q {
        for (j, c) in f.iter().rev().enumerate() {
            m[i][i + j] = c.clone();
        }
    }
    for i in 0..p {
        for (j, c) in g.iter().rev().enumerate() {
            m[q + i][i + j] = c.clone();
        }
    }
    det(m)
}

/// Whether the monic polynomials `fs` (ascending coefficients) share a root,
/// decided with resultants only: `f₁` and `g_u = Σ_{j≥2} u^{j−2} f_j` share a
/// root for all `u` iff all `f_j` do, and `u ↦ Res(f₁, g_u)` has degree at
/// most `deg f₁ · (s − 2)`.
pub fn common_root_by_resultant(fs: &[Vec<GR>]) -> bool {
    let (f1, rest) = fs.split_first().expect("nonempty");
    let q = rest.iter().map(|g| g.len() - 1).max().unwrap_or(0);
    let samples = (f1.len() - 1) * rest.len().saturating_sub(1) + 1;
    (0..samples).all(|u| {
        let u = GR::from_integer(u as i64);
        let mut g = vec![GR::zero(); q + 1];
        let mut w = GR::one();
        for fj in rest {
            for (gi, c) in g.iter_mut().zip(fj) {
                *gi = &*gi + &(&w * c);
            }
            w = &w * &u;
        }
        resultant(f1, &g).is_zero()
    })
}

pub fn tuple_coeffs(t: &PolyTuple) -> Vec<Vec<GR>> {
    t.polys().iter().map(|p| p.coeffs().to_vec()).collect()
}

/// Membership decided by resultants over brute-force primitive collections.
pub fn oracle_member(t: &PolyTuple, f: &Fan) -> bool {
    let coeffs = tuple_coeffs(t);
    brute_primitive_collections(f).iter().all(|sigma| {
        let fs: Vec<Vec<GR>> = sigma.iter().map(|&i| coeffs[i].clone()).collect();
        !common_root_by_resultant(&fs)
    })
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

// ---------------------------------------------------------------- feasibility

/// Rational nullspace basis by reduced row echelon form.
pub fn rational_nullspace(rows: &[Vec<i64>]) -> Vec<Vec<BigRational>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| rational(x, 1)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..cols {
                    let t = &m[row][j] * &f;
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![BigRational::zero(); cols];
            v[free] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][free].clone();
            }
            v
        })
        .collect()
}

/// Whether `{x : N x = 0, x ≥ 1}` is nonempty, by Fourier–Motzkin
/// elimination over the kernel parametrization `x = K t`.
pub fn positive_kernel_exists(rows: &[Vec<i64>]) -> bool {
    let k = rational_nullspace(rows);
    let cols = rows.first().map_or(0, Vec::len);
    // Constraints a·t ≥ b, one per coordinate of x.
    let mut cons: Vec<(Vec<BigRational>, BigRational)> = (0..cols)
        .map(|i| (k.iter().map(|v| v[i].clone()).collect(), BigRational::one()))
        .collect();
    for var in 0..k.len() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in cons {
            if c.0[var].is_positive() {
                pos.push(c);
            } else if c.0[var].is_negative() {
                neg.push(c);
            } else {
                rest.push(c);
            }
        }
        for (pa, pb) in &pos {
            for (na, nb) in &neg {
                // pa·t ≥ pb scaled by −na[var] > 0, plus na·t ≥ nb scaled by pa[var] > 0.
                let (s, u) = (-na[var].clone(), pa[var].clone());
                let a: Vec<BigRational> = pa.iter().zip(na).map(|(x, y)| x * &s + y * &u).collect();
                rest.push((a, pb * &s + nb * &u));
            }
        }
        cons = rest;
    }
    cons.iter().all(|(_, b)| !b.is_positive())
}
