//! The p-component of a morphism: a Hopf map 𝕜^G → 𝕜G.
//!
//! Every such map factors as restriction to an abelian subgroup S followed
//! by the Fourier isomorphism 𝕜^S ≅ 𝕜Ŝ and a group homomorphism π: Ŝ → G:
//!
//!   p(e_a) = (1/|S|) Σ_{μ∈Ŝ} ζ^{-μ(a)} π(μ)      (a ∈ S; p(e_a) = 0 otherwise).
//!
//! The effective domain A = (ker π)^⊥ ⊆ S and the image B = π(Ŝ) recover the
//! description by an isomorphism Â ≅ B. π is stored by the images of the
//! dual basis μ_j (μ_j(s_i) = δ_ij/d_i for the Smith generators s_i of S).

use std::borrow::Cow;
use std::collections::BTreeMap;

use crate::cyclotomic::CycScalar;
use crate::error::{Error, Result};
use crate::groups::{AbHom, AbelianStructure, FiniteGroup, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PMap {
    /// S = Z(G); `pi[j]` is the image of the j-th dual basis character.
    Central { pi: Vec<usize> },
    /// S an arbitrary abelian subgroup, given by its sorted member list.
    General { domain: Vec<usize>, pi: Vec<usize> },
}

impl PMap {
    /// p = η∘ε (π ≡ 1 on Ẑ(G)).
    pub fn trivial(g: &FiniteGroup) -> Self {
        PMap::Central {
            pi: vec![0; g.center_structure().rank()],
        }
    }

    /// The Λ(G) element attached to π ∈ Hom(Ẑ(G), Z(G)), given in coordinates.
    pub fn from_center_hom(g: &FiniteGroup, h: &AbHom) -> Self {
        let z = g.center_structure();
        PMap::Central {
            pi: h.images.iter().map(|c| z.lookup(c)).collect(),
        }
    }

    /// A p-map on an arbitrary abelian subgroup S; `pi[j]` is the image of
    /// the j-th dual basis character of S. Normalized to the central form
    /// when S ⊆ Z(G).
    pub fn general(g: &FiniteGroup, domain: &Subgroup, pi: Vec<usize>) -> Result<Self> {
        let st = AbelianStructure::of_subgroup(g, domain)?;
        if pi.len() != st.rank() {
            return Err(Error::pre(format!(
                "p-map needs {} character images, got {}",
                st.rank(),
                pi.len()
            )));
        }
        let p = PMap::General {
            domain: domain.elements().to_vec(),
            pi,
        };
        p.validate(g).map_err(Error::pre)?;
        Ok(p.normalize(g))
    }

    pub fn is_trivial(&self) -> bool {
        match self {
            PMap::Central { pi } | PMap::General { pi, .. } => pi.iter().all(|&x| x == 0),
        }
    }

    pub fn pi(&self) -> &[usize] {
        match self {
            PMap::Central { pi } | PMap::General { pi, .. } => pi,
        }
    }

    /// The Smith structure of the domain S.
    pub fn domain_structure<'a>(&self, g: &'a FiniteGroup) -> Cow<'a, AbelianStructure> {
        match self {
            PMap::Central { .. } => Cow::Borrowed(g.center_structure()),
            PMap::General { domain, .. } => {
                let mut member = vec![false; g.order()];
                for &x in domain {
                    member[x] = true;
                }
                Cow::Owned(
                    AbelianStructure::of_subgroup(g, &Subgroup::from_members(member))
                        .expect("p-map domain is abelian"),
                )
            }
        }
    }

    /// π(μ) for μ given by dual coordinates.
    pub fn image_of(&self, g: &FiniteGroup, mu: &[u32]) -> usize {
        let mut x = 0;
        for (&b, &c) in self.pi().iter().zip(mu) {
            x = g.mul(x, g.pow(b, c as i64));
        }
        x
    }

    /// For central p: π as a coordinate hom Ẑ(G) → Z(G).
    pub fn center_hom(&self, g: &FiniteGroup) -> Option<AbHom> {
        let PMap::Central { pi } = self else {
            return None;
        };
        let z = g.center_structure();
        pi.iter()
            .map(|&b| z.coords(b).map(<[u32]>::to_vec))
            .collect::<Option<Vec<_>>>()
            .map(|images| AbHom { images })
    }

    /// Type invariants: π is a homomorphism on Ŝ (images of order dividing
    /// the dual generators' orders, pairwise commuting).
    pub fn validate(&self, g: &FiniteGroup) -> std::result::Result<(), String> {
        if let PMap::General { domain, .. } = self {
            if domain.first() != Some(&0) || domain.iter().any(|&x| x >= g.order()) {
                return Err("p-map domain is not a subgroup".into());
            }
            let mut member = vec![false; g.order()];
            for &x in domain {
                member[x] = true;
            }
            let s = Subgroup::from_members(member);
            if !s.is_closed(g) {
                return Err("p-map domain is not a subgroup".into());
            }
            if AbelianStructure::of_subgroup(g, &s).is_err() {
                return Err("p-map domain is not abelian".into());
            }
        }
        let st = self.domain_structure(g);
        let pi = self.pi();
        if pi.len() != st.rank() {
            return Err("p-map has the wrong number of character images".into());
        }
        for (&b, &d) in pi.iter().zip(st.factors()) {
            if b >= g.order() || g.pow(b, d as i64) != 0 {
                return Err("p-map image order does not divide the character order".into());
            }
        }
        for &a in pi {
            for &b in pi {
                if g.mul(a, b) != g.mul(b, a) {
                    return Err("p-map images do not commute".into());
                }
            }
        }
        Ok(())
    }

    /// Rewrite a general p-map whose domain lies in Z(G) in central form
    /// (precomposing π with restriction Ẑ(G) → Ŝ).
    pub fn normalize(self, g: &FiniteGroup) -> Self {
        let PMap::General { domain, pi } = &self else {
            return self;
        };
        let zc = g.center();
        if !domain.iter().all(|&x| zc.contains(x)) {
            return self;
        }
        let st = self.domain_structure(g);
        let z = g.center_structure();
        let e = g.exponent() as u64;
        let new_pi = (0..z.rank())
            .map(|j| {
                let mut mu_j = vec![0u32; z.rank()];
                mu_j[j] = 1;
                let nu = st
                    .character_coords(e, |i| {
                        let s_i = st.generators()[i];
                        z.pairing(&mu_j, z.coords(s_i).unwrap(), e) as u64
                    })
                    .expect("restriction of a character");
                let mut x = 0;
                for (&b, &c) in pi.iter().zip(&nu) {
                    x = g.mul(x, g.pow(b, c as i64));
                }
                x
            })
            .collect();
        PMap::Central { pi: new_pi }
    }

    /// λ(a, ·) for every a ∈ G: p(e_a) = Σ_b λ(a,b) b, sparse in b.
    pub fn lambda_table(&self, g: &FiniteGroup) -> Vec<Vec<(usize, CycScalar)>> {
        let n = g.order();
        let e = g.exponent() as u32;
        let st = self.domain_structure(g);
        let size = st.size();
        let members: Vec<usize> = (0..size).map(|i| st.element_at(i)).collect();
        let member_coords: Vec<Vec<u32>> = (0..size).map(|i| st.coords_of_index(i)).collect();
        let mut acc: Vec<BTreeMap<usize, CycScalar>> = vec![BTreeMap::new(); n];
        for idx in 0..size {
            let mu = st.coords_of_index(idx);
            let b = self.image_of(g, &mu);
            for (a, ac) in members.iter().zip(&member_coords) {
                let ph = st.pairing(&mu, ac, e as u64) as i64;
                let entry = acc[*a].entry(b).or_insert_with(|| CycScalar::zero(e));
                *entry += &CycScalar::root(e, -ph);
            }
        }
        acc.into_iter()
            .map(|m| {
                m.into_iter()
                    .map(|(b, c)| (b, c.scale_ratio(1, size as i64)))
                    .filter(|(_, c)| !c.is_zero())
                    .collect()
            })
            .collect()
    }

    /// A = {a : p(e_a) ≠ 0}.
    pub fn support(&self, g: &FiniteGroup) -> Vec<usize> {
        let st = self.domain_structure(g);
        let e = g.exponent() as u64;
        let kernel: Vec<Vec<u32>> = (0..st.size())
            .map(|i| st.coords_of_index(i))
            .filter(|mu| self.image_of(g, mu) == 0)
            .collect();
        let mut out: Vec<usize> = (0..st.size())
            .filter(|&i| {
                let a = st.coords_of_index(i);
                kernel.iter().all(|mu| st.pairing(mu, &a, e) == 0)
            })
            .map(|i| st.element_at(i))
            .collect();
        out.sort_unstable();
        out
    }

    /// B = π(Ŝ).
    pub fn image(&self, g: &FiniteGroup) -> Vec<usize> {
        let st = self.domain_structure(g);
        let mut out: Vec<usize> = (0..st.size())
            .map(|i| self.image_of(g, &st.coords_of_index(i)))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// A and B both central.
    pub fn is_central(&self, g: &FiniteGroup) -> bool {
        let z = g.center();
        matches!(self, PMap::Central { .. }) && self.pi().iter().all(|&b| z.contains(b))
            || (self.support(g).iter().all(|&a| z.contains(a))
                && self.image(g).iter().all(|&b| z.contains(b)))
    }

    /// Pointwise product π₁·π₂ (convolution of p-maps; the Λ(G) operation).
    pub fn pointwise(&self, other: &Self, g: &FiniteGroup) -> Result<Self> {
        match (self, other) {
            (PMap::Central { pi: a }, PMap::Central { pi: b }) => Ok(PMap::Central {
                pi: a.iter().zip(b).map(|(&x, &y)| g.mul(x, y)).collect(),
            }),
            _ => Err(Error::pre("pointwise product needs central p-maps")),
        }
    }

    /// The dual map π*: Ẑ → Z defined by ν(π*(μ)) = μ(π(ν)), for central p
    /// with central image.
    pub fn dual(&self, g: &FiniteGroup) -> Result<Self> {
        let Some(h) = self.center_hom(g) else {
            return Err(Error::pre("dual of a non-central p-map"));
        };
        let z = g.center_structure();
        let f = z.factors();
        let k = f.len();
        // π*(μ_j) has i-th coordinate d_i · μ_j(π(μ_i)) = d_i · c_ij / d_j,
        // where c_ij is the j-th coordinate of π(μ_i).
        let images: Vec<Vec<u32>> = (0..k)
            .map(|j| {
                (0..k)
                    .map(|i| {
                        let c = h.images[i][j] as u64;
                        ((f[i] * c / f[j]) % f[i]) as u32
                    })
                    .collect()
            })
            .collect();
        let dual = AbHom { images };
        debug_assert!(dual.is_valid(f, f));
        Ok(PMap::from_center_hom(g, &dual))
    }
}
