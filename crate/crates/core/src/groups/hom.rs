use serde::{Deserialize, Serialize};

use super::FiniteGroup;

/// A group homomorphism stored as its full image array (domain element
/// index → codomain element index). Domain and codomain are supplied by
/// the caller when checking properties.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupHom {
    pub images: Vec<usize>,
}

impl GroupHom {
    pub fn new(images: Vec<usize>) -> Self {
        GroupHom { images }
    }

    pub fn identity(n: usize) -> Self {
        GroupHom {
            images: (0..n).collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        GroupHom {
            images: vec![0; n],
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// self ∘ other (apply `other` first).
    pub fn after(&self, other: &GroupHom) -> GroupHom {
        GroupHom {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    pub fn is_hom(&self, g: &FiniteGroup, h: &FiniteGroup) -> bool {
        self.images.len() == g.order()
            && self.images.iter().all(|&x| x < h.order())
            && self.images[0] == 0
            && g.elements().all(|a| {
                g.generators()
                    .iter()
                    .all(|&s| self.images[g.mul(a, s)] == h.mul(self.images[a], self.images[s]))
            })
    }

    pub fn is_bijective(&self) -> bool {
        let mut seen = vec![false; self.images.len()];
        for &x in &self.images {
            if x >= seen.len() || seen[x] {
                return false;
            }
            seen[x] = true;
        }
        true
    }

    /// Inverse of a bijection.
    pub fn inverse(&self) -> GroupHom {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        GroupHom { images: inv }
    }

    /// Image subgroup membership.
    pub fn image_members(&self, h_order: usize) -> Vec<bool> {
        let mut m = vec![false; h_order];
        for &x in &self.images {
            m[x] = true;
        }
        m
    }

    /// An endomorphism f is normal when x ↦ f(x⁻¹)x centralizes Im(f)
    /// pointwise, i.e. f commutes with every inner automorphism.
    pub fn is_normal_endomorphism(&self, g: &FiniteGroup) -> bool {
        let img = self.image_members(g.order());
        let image: Vec<usize> = (0..g.order()).filter(|&y| img[y]).collect();
        g.elements().all(|x| {
            let d = g.mul(self.images[g.inv(x)], x);
            image.iter().all(|&y| g.mul(d, y) == g.mul(y, d))
        })
    }

    /// Whether f(g) g⁻¹ lies in `sub` for all g (central-type displacement).
    pub fn displacement_in(&self, g: &FiniteGroup, sub: &super::Subgroup) -> bool {
        g.elements()
            .all(|x| sub.contains(g.mul(self.images[x], g.inv(x))))
    }
}

/// Extend generator images to a homomorphism G → H, if consistent.
/// Returns None when the assignment does not define a homomorphism or the
/// given elements do not generate G.
pub fn extend_from_generators(
    g: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    h: &FiniteGroup,
) -> Option<GroupHom> {
    let n = g.order();
    let mut f = vec![usize::MAX; n];
    f[0] = 0;
    let mut queue = vec![0usize];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        i += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(f[x], t);
            if f[y] == usize::MAX {
                f[y] = fy;
                queue.push(y);
            } else if f[y] != fy {
                return None;
            }
        }
    }
    if queue.len() != n {
        return None;
    }
    Some(GroupHom { images: f })
}
