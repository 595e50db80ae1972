use std::collections::BTreeSet;

use super::{Face, Fan};

/// Every fan with the same rays whose complex is a proper downward-closed
/// subfamily of `f`'s complex containing all singletons.
///
/// Sub-families of a valid fan inherit the intersection axiom, so the result
/// needs no re-validation. Faces of size ≥ 2 are decided in increasing size;
/// a face may be kept only if all of its codimension-one faces were kept.
pub fn enumerate_subfans(f: &Fan) -> Vec<Fan> {
    let base: BTreeSet<Face> = f.complex.iter().filter(|s| s.len() <= 1).copied().collect();
    let higher: Vec<Face> = f.complex.iter().filter(|s| s.len() >= 2).copied().collect();
    let mut out = Vec::new();
    let mut chosen = base.clone();
    extend(&higher, 0, &mut chosen, &mut out);
    out.into_iter()
        .filter(|c| c.len() < f.complex.len())
        .map(|c| f.with_complex(c))
        .collect()
}

fn extend(faces: &[Face], k: usize, chosen: &mut BTreeSet<Face>, out: &mut Vec<BTreeSet<Face>>) {
    if k == faces.len() {
        out.push(chosen.clone());
        return;
    }
    let face = faces[k];
    // Exclude first so the full complex comes last.
    extend(faces, k + 1, chosen, out);
    if face.indices().all(|i| chosen.contains(&face.without(i))) {
        chosen.insert(face);
        extend(faces, k + 1, chosen, out);
        chosen.remove(&face);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{cp_fan, hirzebruch_fan};
    use crate::fan::{validate_fan, Face};

    #[test]
    fn hirzebruch_has_fifteen_subfans() {
        for k in 1..5 {
            let subs = enumerate_subfans(&hirzebruch_fan(k));
            assert_eq!(subs.len(), 15);
            let distinct: BTreeSet<_> = subs.iter().map(|s| s.complex().clone()).collect();
            assert_eq!(distinct.len(), 15);
            for s in &subs {
                assert!(validate_fan(s).is_valid());
                for i in 0..4 {
                    assert!(s.contains_face(Face::singleton(i)));
                }
            }
        }
    }

    #[test]
    fn rays_only_and_cp1_have_none() {
        let f = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[]).unwrap();
        assert!(enumerate_subfans(&f).is_empty());
        assert!(enumerate_subfans(&cp_fan(1)).is_empty());
    }

    #[test]
    fn cp2_count_matches_brute_force() {
        // Downward-closed families over the three edges and the empty
        // triangle set: any subset of edges is closed, and no 2-cones means
        // no triangle. cp_fan(2) has three 2-cones and no 3-faces: 2^3 - 1.
        assert_eq!(enumerate_subfans(&cp_fan(2)).len(), 7);
        // cp_fan(3): 6 edges and 4 triangles, brute force over all 2^10
        // subsets checking closure.
        let f = cp_fan(3);
        let higher: Vec<Face> = f.complex().iter().filter(|s| s.len() >= 2).copied().collect();
        let mut count = 0;
        for mask in 0u32..(1 << higher.len()) {
            let kept: BTreeSet<Face> = (0..higher.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| higher[i])
                .collect();
            let closed = kept.iter().all(|s| {
                s.indices()
                    .all(|i| s.without(i).len() < 2 || kept.contains(&s.without(i)))
            });
            if closed && kept.len() < higher.len() {
                count += 1;
            }
        }
        assert_eq!(enumerate_subfans(&f).len(), count);
    }
}
