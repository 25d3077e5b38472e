//! G = C × H with C abelian: embedding Aut(D(C)) × Aut(D(H)) into
//! Aut(D(G)), and the coprime/incomplete split.

use num_integer::Integer;

use super::{build_aut, closure, family_generators, AutDG, Classification, Strategy};
use crate::double::{MorphQuadruple, PMap};
use crate::error::{Error, Result};
use crate::groups::{Bicharacter, DirectDecomposition, FiniteGroup, GroupHom};

/// A factor of an internal direct product, as a standalone group with its
/// embedding.
pub struct Factor<'a> {
    pub group: &'a FiniteGroup,
    pub embedding: &'a [usize],
}

/// The automorphism qc × qh of D(C × H) = D(C) ⊗ D(H).
pub fn embed_product(
    g: &FiniteGroup,
    c: Factor<'_>,
    qc: &MorphQuadruple,
    h: Factor<'_>,
    qh: &MorphQuadruple,
) -> Result<MorphQuadruple> {
    let n = g.order();
    let (cg, hg) = (c.group, h.group);
    if cg.order() * hg.order() != n {
        return Err(Error::pre("factors do not multiply to the group"));
    }
    // split x = c·h
    let mut split = vec![(usize::MAX, usize::MAX); n];
    for (ci, &cx) in c.embedding.iter().enumerate() {
        for (hi, &hx) in h.embedding.iter().enumerate() {
            split[g.mul(cx, hx)] = (ci, hi);
        }
    }
    if split.iter().any(|s| s.0 == usize::MAX) {
        return Err(Error::pre("not a direct decomposition"));
    }
    let join = |a: usize, b: usize| g.mul(c.embedding[a], h.embedding[b]);
    let map = |fc: &GroupHom, fh: &GroupHom| {
        GroupHom::new(
            (0..n)
                .map(|x| {
                    let (a, b) = split[x];
                    join(fc.apply(a), fh.apply(b))
                })
                .collect(),
        )
    };
    let e = g.exponent() as u64;
    let (ec, eh) = (cg.exponent() as u64, hg.exponent() as u64);
    let r = Bicharacter::from_fn(g, |x, y| {
        let ((a, b), (a2, b2)) = (split[x], split[y]);
        qc.r.phase(cg, a, a2) as u64 * (e / ec) + qh.r.phase(hg, b, b2) as u64 * (e / eh)
    })?;
    // π(μ) = π_C(μ|_C) · π_H(μ|_{Z(H)})
    let z = g.center_structure();
    let (zc, zh) = (cg.center_structure(), hg.center_structure());
    let pi = (0..z.rank())
        .map(|j| {
            let mut mu = vec![0u32; z.rank()];
            mu[j] = 1;
            // centers of direct factors are central in G
            let phase = |x: usize| z.pairing(&mu, z.coords(x).unwrap(), e) as u64;
            let nc = zc.character_coords(ec, |i| phase(c.embedding[zc.generators()[i]]) * ec / e)?;
            let nh = zh.character_coords(eh, |i| phase(h.embedding[zh.generators()[i]]) * eh / e)?;
            Ok(join(qc.p.image_of(cg, &nc), qh.p.image_of(hg, &nh)))
        })
        .collect::<Result<Vec<_>>>()?;
    let q = MorphQuadruple {
        p: PMap::Central { pi },
        ustar: map(&qc.ustar, &qh.ustar),
        r,
        v: map(&qc.v, &qh.v),
    };
    q.validate_types(g).map_err(|s| Error::invariant(format!("product quadruple: {s}")))?;
    Ok(q)
}

/// gcd(|C|², |Z(H)|·|H/H'|) = 1: the case where Aut(D(C×H)) splits as
/// Aut(D(C)) × Aut(D(H)).
fn factors_coprime(c: &FiniteGroup, h: &FiniteGroup) -> bool {
    let c_order = c.order() as u64;
    let zh = h.center().order() as u64;
    let abh = h.abelianization().size() as u64;
    (c_order * c_order).gcd(&(zh * abh)) == 1
}

pub(super) fn is_coprime(g: &FiniteGroup, dec: &DirectDecomposition) -> bool {
    let (cg, _) = g.subgroup_as_group(&dec.abelian, "C");
    let (hg, _) = g.subgroup_as_group(&dec.other, "H");
    factors_coprime(&cg, &hg)
}

pub(super) fn build(mut a: AutDG, dec: &DirectDecomposition) -> Result<AutDG> {
    let g = a.group.clone();
    let (cg, cemb) = g.subgroup_as_group(&dec.abelian, "C");
    let (hg, hemb) = g.subgroup_as_group(&dec.other, "H");
    let ac = build_aut(&cg, &a.options)?;
    let ah = build_aut(&hg, &a.options)?;
    let idc = MorphQuadruple::identity(&cg);
    let idh = MorphQuadruple::identity(&hg);
    let fc = || Factor { group: &cg, embedding: &cemb };
    let fh = || Factor { group: &hg, embedding: &hemb };
    let mut embedded = Vec::new();
    for q in ac.generators() {
        embedded.push(embed_product(&g, fc(), q, fh(), &idh)?);
    }
    for q in ah.generators() {
        embedded.push(embed_product(&g, fc(), &idc, fh(), q)?);
    }
    let coprime = factors_coprime(&cg, &hg);
    let product_order = ac.order() * ah.order();
    if coprime && ac.is_exact() && ah.is_exact() {
        a.classification = Classification::MixedCoprime;
        a.strategy = Strategy::DirectProduct;
        a.order = product_order;
        a.exact = true;
        a.generators = embedded;
    } else {
        a.classification = Classification::MixedIncomplete;
        a.strategy = Strategy::GeneratedClosure;
        a.exact = false;
        let c = a.components;
        let families = c.end_z * c.bch * c.autc * c.aut;
        a.order = families.max(product_order);
        let mut gens = family_generators(&g, &a.aut, &a.autc);
        gens.extend(embedded);
        a.generators = gens;
    }
    if a.order <= a.options.closure_cap {
        if let Some(els) = closure(&g, &a.generators, a.options.closure_cap)? {
            a.closure_order = Some(els.len() as u128);
            if a.exact && els.len() as u128 != a.order {
                return Err(Error::invariant("closure of product generators has the wrong size"));
            }
            a.order = a.order.max(els.len() as u128);
            a.elements = Some(els);
        }
    }
    Ok(a)
}
