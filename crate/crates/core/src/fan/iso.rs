use serde::Serialize;

use super::{Face, Fan};
use crate::lattice::{hermite_normal_form, IntegerMatrix};
use crate::par::{self, Execution};

/// A unimodular `U` with `U · (rays of a)` equal to the rays of `b` under some
/// permutation that carries the complex of `a` onto the complex of `b`.
///
/// Ray permutations are built one index at a time and pruned as soon as a
/// fully assigned face of `a` fails to land in `b`. For each surviving
/// permutation, `U` exists iff the permuted generator matrices share a row
/// Hermite form `H`; then `U = U_b⁻¹ · U_a` where `U_a A = H = U_b B`.
pub fn fan_isomorphism(a: &Fan, b: &Fan) -> Option<IntegerMatrix> {
    if a.dim != b.dim || a.num_rays() != b.num_rays() || a.complex.len() != b.complex.len() {
        return None;
    }
    let r = a.num_rays();
    let ma = a.generator_matrix();
    let (ha, ua) = hermite_normal_form(&ma);
    let mb = b.generator_matrix();

    // Faces of `a` grouped by their largest index, for incremental pruning.
    let mut by_max: Vec<Vec<Face>> = vec![Vec::new(); r];
    for f in &a.complex {
        if let Some(m) = f.max_index() {
            by_max[m].push(*f);
        }
    }
    let degree = |fan: &Fan, i: usize| fan.complex.iter().filter(|f| f.contains(i)).count();
    let deg_a: Vec<usize> = (0..r).map(|i| degree(a, i)).collect();
    let deg_b: Vec<usize> = (0..r).map(|i| degree(b, i)).collect();

    let mut perm = vec![usize::MAX; r];
    let mut used = vec![false; r];
    search(0, &mut perm, &mut used, &mut |perm| {
        let permuted = mb.select_columns(perm);
        let (hb, ub) = hermite_normal_form(&permuted);
        if hb != ha {
            return None;
        }
        let u = &ub.unimodular_inverse()? * &ua;
        debug_assert_eq!(&u * &ma, permuted);
        Some(u)
    }, &|i, j, perm| {
        deg_a[i] == deg_b[j]
            && by_max[i].iter().all(|f| {
                let mut p = perm.to_vec();
                p[i] = j;
                b.complex.contains(&f.map(&p))
            })
    })
}

fn search<F, P>(i: usize, perm: &mut Vec<usize>, used: &mut Vec<bool>, finish: &mut F, allowed: &P) -> Option<IntegerMatrix>
where
    F: FnMut(&[usize]) -> Option<IntegerMatrix>,
    P: Fn(usize, usize, &[usize]) -> bool,
{
    let r = perm.len();
    if i == r {
        return finish(perm);
    }
    for j in 0..r {
        if used[j] || !allowed(i, j, perm) {
            continue;
        }
        perm[i] = j;
        used[j] = true;
        if let Some(u) = search(i + 1, perm, used, finish, allowed) {
            return Some(u);
        }
        used[j] = false;
        perm[i] = usize::MAX;
    }
    None
}

/// Partition of a list of fans into `GL(n, Z)`-equivalence classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanClasses {
    /// Each class lists input positions in increasing order; classes are
    /// ordered by their first member.
    pub classes: Vec<Vec<usize>>,
}

impl FanClasses {
    pub fn count(&self) -> usize {
        self.classes.len()
    }

    /// Classes holding more than one fan.
    pub fn collisions(&self) -> Vec<&[usize]> {
        self.classes.iter().filter(|c| c.len() > 1).map(Vec::as_slice).collect()
    }
}

/// Classifies fans by pairwise isomorphism search. Pair tests run through
/// [`par::map`].
pub fn classify_fans(fans: &[Fan], exec: Execution) -> FanClasses {
    let n = fans.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let iso = par::map(exec, &pairs, |&(i, j)| fan_isomorphism(&fans[i], &fans[j]).is_some());

    let mut parent: Vec<usize> = (0..n).collect();
    fn root(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (&(i, j), &same) in pairs.iter().zip(&iso) {
        if same {
            let (ri, rj) = (root(&mut parent, i), root(&mut parent, j));
            if ri != rj {
                parent[ri.max(rj)] = ri.min(rj);
            }
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut index_of = vec![usize::MAX; n];
    for x in 0..n {
        let rx = root(&mut parent, x);
        if index_of[rx] == usize::MAX {
            index_of[rx] = classes.len();
            classes.push(Vec::new());
        }
        classes[index_of[rx]].push(x);
    }
    FanClasses { classes }
}
