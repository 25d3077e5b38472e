//! Generator-image backtracking for homomorphism search.

use super::{FiniteGroup, GroupHom};

/// Check the partial assignment gens[..k] ↦ images[..k] on the subgroup
/// those generators span. Returns false on inconsistency (or, when
/// `injective`, on a collision).
fn partial_ok(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    injective: bool,
    f: &mut [usize],
    used: &mut [bool],
) -> bool {
    f.iter_mut().for_each(|x| *x = usize::MAX);
    used.iter_mut().for_each(|x| *x = false);
    f[0] = 0;
    used[0] = true;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(f[x], t);
            if f[y] == usize::MAX {
                if injective {
                    if used[fy] {
                        return false;
                    }
                    used[fy] = true;
                }
                f[y] = fy;
                queue.push(y);
            } else if f[y] != fy {
                return false;
            }
        }
    }
    true
}

/// Enumerate homomorphisms G → H sending `gens[i]` into `candidates[i]`,
/// depth first in candidate order. `visit` returns false to stop early.
pub(crate) fn search_homs(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    injective: bool,
    visit: &mut dyn FnMut(GroupHom) -> bool,
) {
    let mut images = Vec::with_capacity(gens.len());
    let mut f = vec![usize::MAX; g.order()];
    let mut used = vec![false; h.order()];
    fn rec(
        depth: usize,
        g: &FiniteGroup,
        h: &FiniteGroup,
        gens: &[usize],
        candidates: &[Vec<usize>],
        injective: bool,
        images: &mut Vec<usize>,
        f: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut dyn FnMut(GroupHom) -> bool,
    ) -> bool {
        if depth == gens.len() {
            if !partial_ok(g, h, gens, images, injective, f, used) {
                return true;
            }
            return visit(GroupHom::new(f.clone()));
        }
        for &c in &candidates[depth] {
            images.push(c);
            let ok = partial_ok(g, h, &gens[..=depth], images, injective, f, used);
            let cont = if ok {
                rec(depth + 1, g, h, gens, candidates, injective, images, f, used, visit)
            } else {
                true
            };
            images.pop();
            if !cont {
                return false;
            }
        }
        true
    }
    rec(
        0, g, h, gens, candidates, injective, &mut images, &mut f, &mut used, visit,
    );
}

fn sorted_profile(g: &FiniteGroup) -> Vec<(usize, usize)> {
    let mut v: Vec<(usize, usize)> = g
        .elements()
        .map(|x| (g.element_order(x), g.classes().list[g.class_of(x)].len()))
        .collect();
    v.sort_unstable();
    v
}

/// An isomorphism G → H, if one exists.
pub fn find_isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Option<GroupHom> {
    if g.order() != h.order() || sorted_profile(g) != sorted_profile(h) {
        return None;
    }
    if g.order() == 1 {
        return Some(GroupHom::identity(1));
    }
    let gens = g.greedy_generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let key = (g.element_order(s), g.classes().list[g.class_of(s)].len());
            h.elements()
                .filter(|&t| (h.element_order(t), h.classes().list[h.class_of(t)].len()) == key)
                .collect()
        })
        .collect();
    let mut found = None;
    search_homs(g, h, &gens, &candidates, true, &mut |f| {
        found = Some(f);
        false
    });
    found
}

/// Whether G ≅ H. By the classification of doubles up to isomorphism this
/// also decides whether D(G) ≅ D(H).
pub fn are_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> bool {
    find_isomorphism(g, h).is_some()
}
