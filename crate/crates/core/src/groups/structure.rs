//! Structural predicates: stem, perfect, direct-factor searches.

use super::{FiniteGroup, Subgroup};

/// An internal direct decomposition G = A × H with A abelian.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DirectDecomposition {
    pub abelian: Subgroup,
    pub other: Subgroup,
}

/// Z(G) ⊆ G'.
pub fn is_stem(g: &FiniteGroup) -> bool {
    g.center().is_subset_of(g.derived_subgroup())
}

/// G = G'.
pub fn is_perfect(g: &FiniteGroup) -> bool {
    g.derived_subgroup().order() == g.order()
}

fn is_abelian_subgroup(g: &FiniteGroup, s: &Subgroup) -> bool {
    s.elements()
        .iter()
        .all(|&a| s.elements().iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
}

/// The abelian direct factor of largest order (None if G has no nontrivial
/// abelian direct factor). Exhaustive over pairs of normal subgroups; the
/// complement of a maximal abelian factor is purely non-abelian.
pub fn abelian_direct_factor(g: &FiniteGroup) -> Option<DirectDecomposition> {
    if g.order() == 1 {
        return None;
    }
    if g.is_abelian() {
        return Some(DirectDecomposition {
            abelian: g.whole(),
            other: g.trivial_subgroup(),
        });
    }
    let normals = g.normal_subgroups();
    let mut best: Option<DirectDecomposition> = None;
    for a in normals.iter().rev() {
        if a.is_trivial() || !is_abelian_subgroup(g, a) {
            continue;
        }
        if best.as_ref().is_some_and(|b| b.abelian.order() >= a.order()) {
            break;
        }
        for m in &normals {
            if a.order() * m.order() == g.order() && a.intersection(m).is_trivial() {
                best = Some(DirectDecomposition {
                    abelian: a.clone(),
                    other: m.clone(),
                });
                break;
            }
        }
    }
    best
}

/// True iff G has no nontrivial abelian direct factor; otherwise returns a
/// witness decomposition.
pub fn is_purely_nonabelian(g: &FiniteGroup) -> (bool, Option<DirectDecomposition>) {
    match abelian_direct_factor(g) {
        None => (true, None),
        Some(d) => (false, Some(d)),
    }
}

/// A complement of `d` inside the abelian subgroup `z` (both subgroups of
/// `g`), if `d` is a direct factor of `z`.
pub fn complement_in_abelian(g: &FiniteGroup, z: &Subgroup, d: &Subgroup) -> Option<Subgroup> {
    let (zg, emb) = g.subgroup_as_group(z, "Z");
    for c in zg.normal_subgroups() {
        let mapped: Vec<usize> = c.elements().iter().map(|&x| emb[x]).collect();
        if mapped.len() * d.order() != z.order() {
            continue;
        }
        if mapped.iter().filter(|&&x| d.contains(x)).count() == 1 {
            let mut member = vec![false; g.order()];
            for x in mapped {
                member[x] = true;
            }
            return Some(Subgroup::from_members(member));
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::super::library::*;
    use super::*;

    #[test]
    fn stem_and_perfect() {
        assert!(is_stem(&quaternion(8)));
        assert!(is_stem(&dihedral(8)));
        assert!(!is_stem(&cyclic(3)));
        assert!(!is_stem(&smallgroup_32_2()));
        assert!(is_perfect(&alternating(5)));
        assert!(!is_perfect(&symmetric(3)));
    }

    #[test]
    fn purely_nonabelian_examples() {
        assert!(is_purely_nonabelian(&quaternion(8)).0);
        assert!(is_purely_nonabelian(&symmetric(3)).0);
        let (pna, w) = is_purely_nonabelian(&dihedral(12));
        assert!(!pna);
        assert_eq!(w.unwrap().abelian.order(), 2);
        assert!(!is_purely_nonabelian(&cyclic(4)).0);
        let d = abelian_direct_factor(&direct_product(&cyclic(2), &quaternion(8))).unwrap();
        assert_eq!(d.abelian.order(), 2);
        assert_eq!(d.other.order(), 8);
    }

    #[test]
    fn complements_in_abelian_groups() {
        let g = direct_product(&cyclic(2), &cyclic(4));
        let whole = g.whole();
        // <(1,2)> of order 2 inside Z2×Z4: element (1,2) has index 1*4+2 = 6
        let d = g.generate(&[6]);
        assert!(complement_in_abelian(&g, &whole, &d).is_some());
        // <(0,2)> = 2·Z4 is not a direct factor
        let d2 = g.generate(&[2]);
        assert!(complement_in_abelian(&g, &whole, &d2).is_none());
    }
}
