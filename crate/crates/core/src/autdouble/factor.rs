//! Unique factorization q = Λ(p)∘B(ω)∘S(w, v) for purely non-abelian G.
//!
//! Composing the three factors in closed form gives
//!
//!   u*_q = w⁻¹,   ω_q(h, y) = ω(v(h), y),   π_q(μ) = π(μ∘w⁻¹),
//!   v_q(h) = π(ω_q(h, ·)|_Z) · v(h),
//!
//! which is inverted below.

use crate::autgrp::SpAutcElement;
use crate::double::{MorphQuadruple, PMap};
use crate::error::{Error, Result};
use crate::groups::{AbHom, Bicharacter, FiniteGroup, GroupHom};

/// The (λ, ω, (w, v)) parts of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactoredElement {
    /// π ∈ Hom(Ẑ(G), Z(G)) in center coordinates.
    pub lambda: AbHom,
    pub r: Bicharacter,
    pub s: SpAutcElement,
}

impl FactoredElement {
    pub fn identity(g: &FiniteGroup) -> Self {
        let zf = g.center_structure().factors();
        FactoredElement {
            lambda: AbHom::zero(zf, zf),
            r: Bicharacter::zero(g),
            s: SpAutcElement::identity(g.order()),
        }
    }

    /// Λ(π)∘B(ω)∘S(w, v).
    pub fn recompose(&self, g: &FiniteGroup) -> Result<MorphQuadruple> {
        let lam = MorphQuadruple::from_pmap(g, &PMap::from_center_hom(g, &self.lambda));
        let b = MorphQuadruple::from_bicharacter(g, &self.r);
        let s = MorphQuadruple::from_spautc(g, &self.s.w, &self.s.v);
        lam.compose(&b.compose(&s, g)?, g)
    }
}

/// Factor an automorphism of D(G). Fails with an invariant error when u* or
/// the recovered v is not bijective, or when (w, v) is not split central.
pub fn canonical_factorization(g: &FiniteGroup, q: &MorphQuadruple) -> Result<FactoredElement> {
    let Some(pq) = q.p.center_hom(g) else {
        return Err(Error::invariant("p-map is not supported in the center"));
    };
    if !q.ustar.is_bijective() {
        return Err(Error::invariant("u* is not bijective"));
    }
    let n = g.order();
    let e = g.exponent() as u64;
    let z = g.center_structure();
    let w = q.ustar.inverse();
    let pq = PMap::from_center_hom(g, &pq);
    if z.generators().iter().any(|&x| !z.contains(w.apply(x))) {
        return Err(Error::invariant("u* does not preserve the center"));
    }
    // π(μ_j) = π_q(μ_j∘w)
    let images: Vec<Vec<u32>> = (0..z.rank())
        .map(|j| {
            let mut mu = vec![0u32; z.rank()];
            mu[j] = 1;
            let nu = z.character_coords(e, |i| {
                z.pairing(&mu, z.coords(w.apply(z.generators()[i])).unwrap(), e) as u64
            })?;
            Ok(z.coords(pq.image_of(g, &nu)).unwrap().to_vec())
        })
        .collect::<Result<_>>()?;
    let lambda = AbHom { images };
    let pl = PMap::from_center_hom(g, &lambda);
    // v(h) = π(ω_q(h, ·)|_Z)⁻¹ · v_q(h)
    let om = q.r.table(g);
    let v_images: Vec<usize> = (0..n)
        .map(|h| {
            let nu = z.character_coords(e, |i| om[h * n + z.generators()[i]] as u64)?;
            Ok(g.mul(g.inv(pl.image_of(g, &nu)), q.v.apply(h)))
        })
        .collect::<Result<_>>()?;
    let v = GroupHom::new(v_images);
    if !v.is_bijective() || !v.is_hom(g, g) {
        return Err(Error::invariant("recovered v is not an automorphism"));
    }
    // ω(x, y) = ω_q(v⁻¹(x), y)
    let vinv = v.inverse();
    let r = Bicharacter::from_fn(g, |x, y| om[vinv.apply(x) * n + y] as u64)?;
    let s = SpAutcElement { w, v };
    if !s.is_valid(g) {
        return Err(Error::invariant("(w, v) is not a split central pair"));
    }
    Ok(FactoredElement { lambda, r, s })
}
