//! Automorphisms of a finite group: Aut(G), Inn(G), the central
//! automorphisms Aut_c(G), the subgroup Aut_c'(G) and the split central
//! automorphism group SpAut_c(G).

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, GroupHom, Subgroup};

/// Default cap on the number of automorphisms enumerated.
pub const DEFAULT_MAX_AUT: usize = 200_000;

/// A group of automorphisms of G stored as full image arrays, sorted
/// lexicographically (so the identity comes first).
#[derive(Clone, Debug)]
pub struct AutGroup {
    elements: Vec<GroupHom>,
    index: HashMap<GroupHom, usize>,
    generators: Vec<usize>,
}

impl AutGroup {
    fn from_sorted(mut elements: Vec<GroupHom>) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        let mut a = AutGroup {
            elements,
            index,
            generators: Vec::new(),
        };
        a.generators = a.greedy_generators();
        a
    }

    /// Build from a list of automorphisms, validating that each is an
    /// automorphism of `g` and that the list is closed under composition.
    pub fn from_elements(g: &FiniteGroup, elements: Vec<GroupHom>) -> Result<Self> {
        for f in &elements {
            if !f.is_hom(g, g) || !f.is_bijective() {
                return Err(Error::invariant("listed map is not an automorphism"));
            }
        }
        let a = Self::from_sorted(elements);
        if a.elements.first().is_none_or(|f| !f.is_identity()) {
            return Err(Error::invariant("automorphism list lacks the identity"));
        }
        for f in &a.elements {
            for &s in &a.generators {
                if !a.index.contains_key(&a.elements[s].after(f)) {
                    return Err(Error::invariant("automorphism list is not closed"));
                }
            }
        }
        Ok(a)
    }

    fn greedy_generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span: HashSet<usize> = HashSet::from([0]);
        for i in 0..self.elements.len() {
            if span.len() == self.elements.len() {
                break;
            }
            if !span.contains(&i) {
                gens.push(i);
                span = self.closure_indices(&gens);
            }
        }
        gens
    }

    fn closure_indices(&self, gens: &[usize]) -> HashSet<usize> {
        let mut seen: HashSet<usize> = HashSet::from([0]);
        let mut queue = vec![0usize];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &s in gens {
                let y = self.index[&self.elements[s].after(&self.elements[x])];
                if seen.insert(y) {
                    queue.push(y);
                }
            }
        }
        seen
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupHom] {
        &self.elements
    }

    pub fn get(&self, i: usize) -> &GroupHom {
        &self.elements[i]
    }

    pub fn index_of(&self, f: &GroupHom) -> Option<usize> {
        self.index.get(f).copied()
    }

    pub fn contains(&self, f: &GroupHom) -> bool {
        self.index.contains_key(f)
    }

    /// Indices of a generating set.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn generator_homs(&self) -> Vec<GroupHom> {
        self.generators
            .iter()
            .map(|&i| self.elements[i].clone())
            .collect()
    }

    /// Size of the subgroup generated by `generators()` (computed by closure).
    pub fn closure_order(&self) -> usize {
        self.closure_indices(&self.generators).len()
    }

    /// The sub-collection satisfying `pred`, as a group (caller guarantees
    /// that the filter defines a subgroup).
    pub fn filter(&self, pred: impl Fn(&GroupHom) -> bool) -> AutGroup {
        Self::from_sorted(self.elements.iter().filter(|f| pred(f)).cloned().collect())
    }

    /// Whether `sub` is normal in `self` (conjugation check over all pairs).
    pub fn normalizes(&self, sub: &AutGroup) -> bool {
        self.elements.iter().all(|a| {
            let ai = a.inverse();
            sub.elements
                .iter()
                .all(|b| sub.contains(&a.after(b).after(&ai)))
        })
    }
}

/// All automorphisms of G by generator-image backtracking, pruned by element
/// order and conjugacy-class size. The result is cross-checked against the
/// closure of its generators.
pub fn automorphism_group(g: &FiniteGroup, max_elements: usize) -> Result<AutGroup> {
    if g.order() == 1 {
        return Ok(AutGroup::from_sorted(vec![GroupHom::identity(1)]));
    }
    let gens = g.greedy_generators();
    let key = |x: usize| (g.element_order(x), g.classes().list[g.class_of(x)].len());
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| g.elements().filter(|&t| key(t) == key(s)).collect())
        .collect();
    let mut found = Vec::new();
    let mut overflow = false;
    crate::groups::search_homs_pub(g, g, &gens, &candidates, true, &mut |f| {
        if found.len() >= max_elements {
            overflow = true;
            return false;
        }
        found.push(f);
        true
    });
    if overflow {
        return Err(Error::size(format!(
            "Aut({}) has more than {max_elements} elements",
            g.name()
        )));
    }
    let a = AutGroup::from_sorted(found);
    if a.closure_order() != a.order() {
        return Err(Error::invariant("automorphism closure disagrees with search"));
    }
    Ok(a)
}

/// All endomorphisms of G (generator-image search without injectivity).
pub fn endomorphisms(g: &FiniteGroup, max_elements: usize) -> Result<Vec<GroupHom>> {
    if g.order() == 1 {
        return Ok(vec![GroupHom::identity(1)]);
    }
    let gens = g.greedy_generators();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            g.elements()
                .filter(|&t| g.element_order(s) % g.element_order(t) == 0)
                .collect()
        })
        .collect();
    let mut found = Vec::new();
    let mut overflow = false;
    crate::groups::search_homs_pub(g, g, &gens, &candidates, false, &mut |f| {
        if found.len() >= max_elements {
            overflow = true;
            return false;
        }
        found.push(f);
        true
    });
    if overflow {
        return Err(Error::size("too many endomorphisms"));
    }
    found.sort();
    Ok(found)
}

/// x ↦ h x h⁻¹.
pub fn inner(g: &FiniteGroup, h: usize) -> GroupHom {
    GroupHom::new(g.elements().map(|x| g.conj(h, x)).collect())
}

/// Inn(G) as a subgroup of Aut(G).
pub fn inner_automorphisms(g: &FiniteGroup, aut: &AutGroup) -> AutGroup {
    let inn: HashSet<GroupHom> = g.elements().map(|h| inner(g, h)).collect();
    aut.filter(|f| inn.contains(f))
}

/// Aut_c(G) = {φ : φ(g)g⁻¹ ∈ Z(G) for all g}.
pub fn central_automorphisms(g: &FiniteGroup, aut: &AutGroup) -> AutGroup {
    let z = g.center().clone();
    aut.filter(|f| f.displacement_in(g, &z))
}

/// The centralizer of Inn(G) in Aut(G) (independent route to Aut_c(G)).
pub fn centralizer_of_inner(g: &FiniteGroup, aut: &AutGroup) -> AutGroup {
    let inn: Vec<GroupHom> = g.elements().map(|h| inner(g, h)).collect();
    aut.filter(|f| inn.iter().all(|c| f.after(c) == c.after(f)))
}

/// Z(G) ∩ G'.
pub fn center_derived(g: &FiniteGroup) -> Subgroup {
    g.center().intersection(g.derived_subgroup())
}

/// Aut_c'(G) = {φ : φ(g⁻¹)g ∈ Z(G)∩G' for all g}.
pub fn autcprime(g: &FiniteGroup, aut: &AutGroup) -> AutGroup {
    let zd = center_derived(g);
    aut.filter(|f| g.elements().all(|x| zd.contains(g.mul(f.apply(g.inv(x)), x))))
}

/// The displacement z_φ(g) = φ(g)g⁻¹.
pub fn displacement(g: &FiniteGroup, f: &GroupHom) -> Vec<usize> {
    g.elements().map(|x| g.mul(f.apply(x), g.inv(x))).collect()
}

/// A split central automorphism: a pair (w, v) with w⁻¹∘v central.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpAutcElement {
    pub w: GroupHom,
    pub v: GroupHom,
}

impl SpAutcElement {
    pub fn identity(n: usize) -> Self {
        SpAutcElement {
            w: GroupHom::identity(n),
            v: GroupHom::identity(n),
        }
    }

    /// Componentwise composition self ∘ other.
    pub fn after(&self, other: &Self) -> Self {
        SpAutcElement {
            w: self.w.after(&other.w),
            v: self.v.after(&other.v),
        }
    }

    pub fn is_valid(&self, g: &FiniteGroup) -> bool {
        self.w.is_bijective()
            && self.v.is_bijective()
            && self.w.inverse().after(&self.v).displacement_in(g, g.center())
    }
}

/// SpAut_c(G), enumerated as (v∘c⁻¹, v) for c ∈ Aut_c(G), v ∈ Aut(G), in
/// order of (c-index, v-index).
pub fn spautc(aut: &AutGroup, autc: &AutGroup) -> Vec<SpAutcElement> {
    let mut out = Vec::with_capacity(aut.order() * autc.order());
    for c in autc.elements() {
        let ci = c.inverse();
        for v in aut.elements() {
            out.push(SpAutcElement {
                w: v.after(&ci),
                v: v.clone(),
            });
        }
    }
    out
}

/// Verify the semidirect structure Aut_c ⋊ Aut of SpAut_c(G):
/// H = {(w, id)} is normal, K = {(v, v)}, H ∩ K = 1, |H||K| = |SpAut_c|.
pub fn verify_spautc_structure(g: &FiniteGroup, sp: &[SpAutcElement]) -> bool {
    let all: HashSet<&SpAutcElement> = sp.iter().collect();
    if all.len() != sp.len() || !sp.iter().all(|x| x.is_valid(g)) {
        return false;
    }
    let id = GroupHom::identity(g.order());
    let h: Vec<&SpAutcElement> = sp.iter().filter(|x| x.v == id).collect();
    let k: Vec<&SpAutcElement> = sp.iter().filter(|x| x.w == x.v).collect();
    let meet = h.iter().filter(|x| x.w == id).count();
    let inv = |x: &SpAutcElement| SpAutcElement {
        w: x.w.inverse(),
        v: x.v.inverse(),
    };
    let normal = sp.iter().all(|a| {
        h.iter().all(|x| {
            let c = a.after(x).after(&inv(a));
            c.v == id && all.contains(&c)
        })
    });
    meet == 1 && h.len() * k.len() == sp.len() && normal
}

/// For f an endomorphism and m ≥ 1, f^m.
pub fn power(f: &GroupHom, m: usize) -> GroupHom {
    let mut r = GroupHom::identity(f.images.len());
    let mut b = f.clone();
    let mut k = m;
    while k > 0 {
        if k & 1 == 1 {
            r = b.after(&r);
        }
        b = b.after(&b);
        k >>= 1;
    }
    r
}

/// Fitting-style decomposition: G = Im(fⁿ) × Ker(fⁿ) for n = |G|.
pub fn fitting_splits(g: &FiniteGroup, f: &GroupHom) -> bool {
    let fn_ = power(f, g.order());
    let img = Subgroup::from_members(fn_.image_members(g.order()));
    let ker = Subgroup::from_members(g.elements().map(|x| fn_.apply(x) == 0).collect());
    img.intersection(&ker).is_trivial()
        && img.order() * ker.order() == g.order()
        && g.is_normal(&img)
        && g.is_normal(&ker)
}
