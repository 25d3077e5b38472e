//! The kernel N of the restriction Aut(D(G)) → Aut(Γ), the subgroup
//! Λ_c(G), and the normality/complement predicates.

use std::collections::{HashMap, HashSet};

use serde_json::{json, Value};

use super::{closure, elementary_homs, inverse, json_u128, multiply, AutDG, Classification};
use crate::autgrp::{autcprime, center_derived, AutGroup};
use crate::double::{MorphQuadruple, PMap};
use crate::error::{Error, Result};
use crate::groups::{
    complement_in_abelian, enumerate_homs, hom_count, is_perfect, is_purely_nonabelian, is_stem,
    AbelianStructure, Bicharacter, FiniteGroup, GroupHom, Subgroup,
};

/// Largest |Λ_c(G)| for which complements of N are searched exhaustively.
pub const COMPLEMENT_SEARCH_CAP: usize = 256;

/// Where the restriction filter ran.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FilterScope {
    /// Every element of Aut(D(G)).
    Whole,
    /// Λ_c(G), which contains N since N fixes 1 × G.
    LambdaC,
}

#[derive(Clone, Debug)]
pub struct KernelN {
    /// |N| from the restriction filter.
    pub order_filter: u128,
    /// |Aut_c'(G)| · |Hom(Z(G)∩G', Z(G))|.
    pub order_structural: u128,
    pub scope: FilterScope,
    /// Sorted filter result.
    pub elements: Vec<MorphQuadruple>,
    /// Sorted elements (π, φ, 0, id), φ ∈ Aut_c'(G), π trivial on the
    /// characters of Z(G) that extend to G.
    pub structural_elements: Vec<MorphQuadruple>,
    pub autcprime: u128,
    pub hom_count: u128,
    pub center_derived_order: usize,
}

impl KernelN {
    pub fn is_trivial(&self) -> bool {
        self.order_filter == 1
    }

    /// Both computations give the same subgroup.
    pub fn agrees(&self) -> bool {
        self.order_filter == self.order_structural && self.elements == self.structural_elements
    }

    pub fn to_json(&self) -> Value {
        json!({
            "order": json_u128(self.order_filter),
            "order_structural": json_u128(self.order_structural),
            "filter_scope": match self.scope {
                FilterScope::Whole => "whole",
                FilterScope::LambdaC => "lambda_c",
            },
            "structure": format!(
                "Aut_c'(G) ⋉ Hom(Z(G)∩G', Z(G)) with |Aut_c'(G)| = {}, |Hom| = {}",
                self.autcprime, self.hom_count
            ),
            "center_derived_order": self.center_derived_order,
        })
    }
}

/// Λ_c(G): the quadruples (p, u*, 0, id) with u* ∈ Aut_c(G) and p ∈ Λ(G),
/// ordered by (u*-index, p-index).
pub fn lambda_c_subgroup(g: &FiniteGroup, autc: &AutGroup) -> Vec<MorphQuadruple> {
    let zf = g.center_structure().factors();
    let ps: Vec<PMap> = enumerate_homs(zf, zf)
        .iter()
        .map(|h| PMap::from_center_hom(g, h))
        .collect();
    let mut out = Vec::with_capacity(ps.len() * autc.order());
    for c in autc.elements() {
        for p in &ps {
            out.push(MorphQuadruple {
                p: p.clone(),
                ustar: c.clone(),
                ..MorphQuadruple::identity(g)
            });
        }
    }
    out
}

fn fixes_gamma(g: &FiniteGroup, q: &MorphQuadruple) -> bool {
    q.restrict_to_grouplikes(g)
        .iter()
        .enumerate()
        .all(|(i, &x)| i == x)
}

/// N computed by the restriction filter and structurally, with both
/// results recorded.
pub fn kernel_n(a: &AutDG) -> Result<KernelN> {
    let g = a.group();
    let n = g.order();
    let mut elements = Vec::new();
    let scope = if a.is_enumerable() && a.order() <= a.options().closure_cap {
        a.for_each_element(|_, q| {
            if fixes_gamma(g, q) {
                elements.push(q.clone());
            }
            Ok(())
        })?;
        FilterScope::Whole
    } else {
        let zf = g.center_structure().factors();
        let ps: Vec<PMap> = enumerate_homs(zf, zf)
            .iter()
            .map(|h| PMap::from_center_hom(g, h))
            .collect();
        let chars = g.abelianization().size();
        for c in a.autc().elements() {
            // (p, c, 0, id) sends (χ, 1) to (χ∘c, p(χ)); the character part
            // must already be fixed.
            let base = MorphQuadruple {
                ustar: c.clone(),
                ..MorphQuadruple::identity(g)
            };
            let res = base.restrict_to_grouplikes(g);
            if (0..chars).any(|chi| res[chi * n] / n != chi) {
                continue;
            }
            for p in &ps {
                let q = MorphQuadruple {
                    p: p.clone(),
                    ..base.clone()
                };
                if fixes_gamma(g, &q) {
                    elements.push(q);
                }
            }
        }
        FilterScope::LambdaC
    };
    elements.sort();
    let acp = autcprime(g, a.aut());
    let d = center_derived(g);
    let ds = AbelianStructure::of_subgroup(g, &d)?;
    let z = g.center_structure();
    let hom = hom_count(ds.factors(), z.factors());
    let e = g.exponent() as u64;
    // characters of Z(G) trivial on Z(G)∩G', i.e. restrictions of linear
    // characters of G
    let perp: Vec<Vec<u32>> = (0..z.size())
        .map(|i| z.coords_of_index(i))
        .filter(|mu| {
            d.elements()
                .iter()
                .all(|&x| z.pairing(mu, z.coords(x).unwrap(), e) == 0)
        })
        .collect();
    let mut structural = Vec::new();
    for h in enumerate_homs(z.factors(), z.factors()) {
        let p = PMap::from_center_hom(g, &h);
        if perp.iter().any(|mu| p.image_of(g, mu) != 0) {
            continue;
        }
        for c in acp.elements() {
            structural.push(MorphQuadruple {
                p: p.clone(),
                ustar: c.clone(),
                ..MorphQuadruple::identity(g)
            });
        }
    }
    structural.sort();
    Ok(KernelN {
        order_filter: elements.len() as u128,
        order_structural: acp.order() as u128 * hom,
        scope,
        elements,
        structural_elements: structural,
        autcprime: acp.order() as u128,
        hom_count: hom,
        center_derived_order: d.order(),
    })
}

/// A predicate computed from group theory and, where feasible, directly
/// inside Aut(D(G)).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredicateValue {
    pub structural: bool,
    pub direct: Option<bool>,
}

impl PredicateValue {
    pub fn agrees(&self) -> bool {
        self.direct.is_none_or(|d| d == self.structural)
    }

    fn to_json(self) -> Value {
        json!({"structural": self.structural, "direct": self.direct})
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Predicates {
    /// Λ(G) ⊴ Aut(D(G)) (structurally: G is a stem group).
    pub lambda_normal: PredicateValue,
    /// Λ_c(G) ⊴ Aut(D(G)) (structurally: G is a stem group).
    pub lambdac_normal: PredicateValue,
    /// N has a complement (structurally: Z(G)∩G' is a direct factor of Z(G)).
    pub n_has_complement: PredicateValue,
    pub stem: bool,
    pub purely_nonabelian: bool,
    pub perfect: bool,
    pub centerless: bool,
}

impl Predicates {
    pub fn all_agree(&self) -> bool {
        self.lambda_normal.agrees() && self.lambdac_normal.agrees() && self.n_has_complement.agrees()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "lambda_normal": self.lambda_normal.to_json(),
            "lambdac_normal": self.lambdac_normal.to_json(),
            "N_has_complement": self.n_has_complement.to_json(),
            "stem": self.stem,
            "purely_nonabelian": self.purely_nonabelian,
            "perfect": self.perfect,
            "centerless": self.centerless,
        })
    }
}

fn is_lambda(q: &MorphQuadruple) -> bool {
    matches!(q.p, PMap::Central { .. }) && q.ustar.is_identity() && q.r.is_zero() && q.v.is_identity()
}

fn is_lambda_c(q: &MorphQuadruple) -> bool {
    matches!(q.p, PMap::Central { .. }) && q.r.is_zero() && q.v.is_identity()
}

/// Conjugate every subgroup generator by every group generator. A witness
/// outside the subgroup decides "not normal"; otherwise the answer is
/// "normal" when the generators are known to generate Aut(D(G)).
fn normal_by_generators(
    a: &AutDG,
    sub_gens: &[MorphQuadruple],
    member: impl Fn(&MorphQuadruple) -> bool,
) -> Result<Option<bool>> {
    let g = a.group();
    for q in a.generators() {
        let qi = inverse(g, q)?;
        for l in sub_gens {
            let c = multiply(g, &multiply(g, q, l)?, &qi)?;
            if !member(&c) {
                return Ok(Some(false));
            }
        }
    }
    Ok(a.is_exact().then_some(true))
}

fn lambda_generators(g: &FiniteGroup) -> Vec<MorphQuadruple> {
    let zf = g.center_structure().factors();
    elementary_homs(zf, zf)
        .iter()
        .map(|h| MorphQuadruple::from_pmap(g, &PMap::from_center_hom(g, h)))
        .collect()
}

pub fn predicates(a: &AutDG, kernel: &KernelN) -> Result<Predicates> {
    let g = a.group();
    let stem = is_stem(g);
    let lam_gens = lambda_generators(g);
    let mut lc_gens = lam_gens.clone();
    for c in a.autc().generator_homs() {
        lc_gens.push(MorphQuadruple {
            ustar: c,
            ..MorphQuadruple::identity(g)
        });
    }
    let d = center_derived(g);
    let complement = complement_in_abelian(g, g.center(), &d);
    let purely = is_purely_nonabelian(g).0;
    let n_direct = if kernel.is_trivial() {
        Some(true)
    } else if !purely || a.classification() != Classification::PurelyNonabelian {
        None
    } else if let Some(c) = &complement {
        Some(constructive_complement(a, kernel, c)?)
    } else {
        search_complement_in_lambda_c(a, kernel)?
    };
    Ok(Predicates {
        lambda_normal: PredicateValue {
            structural: stem,
            direct: normal_by_generators(a, &lam_gens, is_lambda)?,
        },
        lambdac_normal: PredicateValue {
            structural: stem,
            direct: normal_by_generators(a, &lc_gens, is_lambda_c)?,
        },
        n_has_complement: PredicateValue {
            structural: complement.is_some(),
            direct: n_direct,
        },
        stem,
        purely_nonabelian: purely,
        perfect: is_perfect(g),
        centerless: g.center().is_trivial(),
    })
}

/// Greedy generators of a finite set of automorphisms, verifying that the
/// set is closed: None if some product leaves the set.
fn subgroup_generators(
    g: &FiniteGroup,
    set: &HashSet<MorphQuadruple>,
    ordered: &[MorphQuadruple],
) -> Result<Option<Vec<MorphQuadruple>>> {
    let mut gens: Vec<MorphQuadruple> = Vec::new();
    let mut span: HashSet<MorphQuadruple> = HashSet::from([MorphQuadruple::identity(g)]);
    for x in ordered {
        if span.contains(x) {
            continue;
        }
        gens.push(x.clone());
        let Some(els) = closure(g, &gens, set.len() as u128)? else {
            return Ok(None);
        };
        if els.iter().any(|y| !set.contains(y)) {
            return Ok(None);
        }
        span = els.into_iter().collect();
    }
    Ok((span.len() == set.len()).then_some(gens))
}

/// The complement of N built from a splitting Z(G) = (Z(G)∩G') × C:
/// in Λ_c(G), the pairs (π, φ) with π trivial on the characters vanishing
/// on C and with displacement φ(x)x⁻¹ ∈ C; in Aut(D(G)) additionally the
/// maps (1, (σ⁻¹)*, ω, σ).
fn constructive_complement(a: &AutDG, kernel: &KernelN, c: &Subgroup) -> Result<bool> {
    let g = a.group();
    let n = g.order();
    let z = g.center_structure();
    let e = g.exponent() as u64;
    let c_perp: Vec<Vec<u32>> = (0..z.size())
        .map(|i| z.coords_of_index(i))
        .filter(|mu| {
            c.elements()
                .iter()
                .all(|&x| z.pairing(mu, z.coords(x).unwrap(), e) == 0)
        })
        .collect();
    let ps: Vec<PMap> = enumerate_homs(z.factors(), z.factors())
        .iter()
        .map(|h| PMap::from_center_hom(g, h))
        .filter(|p| c_perp.iter().all(|mu| p.image_of(g, mu) == 0))
        .collect();
    let phis: Vec<&GroupHom> = a
        .autc()
        .elements()
        .iter()
        .filter(|f| (0..n).all(|x| c.contains(g.mul(f.apply(x), g.inv(x)))))
        .collect();
    let mut kc = Vec::with_capacity(ps.len() * phis.len());
    for f in &phis {
        for p in &ps {
            kc.push(MorphQuadruple {
                p: p.clone(),
                ustar: (*f).clone(),
                ..MorphQuadruple::identity(g)
            });
        }
    }
    let kc_set: HashSet<MorphQuadruple> = kc.iter().cloned().collect();
    let nset: HashSet<&MorphQuadruple> = kernel.elements.iter().collect();
    let lc_order = a.autc().order() as u128 * a.components().end_z;
    if kc.iter().filter(|q| nset.contains(q)).count() != 1
        || kc_set.len() as u128 * kernel.order_filter != lc_order
    {
        return Ok(false);
    }
    let Some(mut gens) = subgroup_generators(g, &kc_set, &kc)? else {
        return Ok(false);
    };
    if a.is_exact() && a.order() <= a.options().closure_cap {
        for s in a.aut().generator_homs() {
            gens.push(MorphQuadruple::from_automorphism(g, &s));
        }
        let af = g.abelianization().factors();
        for h in elementary_homs(af, af) {
            gens.push(MorphQuadruple::from_bicharacter(g, &Bicharacter { matrix: h.images }));
        }
        let Some(k) = closure(g, &gens, a.order())? else {
            return Ok(false);
        };
        let meet = k.iter().filter(|q| nset.contains(q)).count();
        return Ok(meet == 1 && k.len() as u128 * kernel.order_filter == a.order());
    }
    Ok(true)
}

/// Exhaustive search for a complement of N inside Λ_c(G). Any complement
/// K of N in Aut(D(G)) yields the complement K ∩ Λ_c(G) in Λ_c(G), so
/// failure here rules out a complement in Aut(D(G)). Success does not
/// lift on its own and is reported as undecided.
fn search_complement_in_lambda_c(a: &AutDG, kernel: &KernelN) -> Result<Option<bool>> {
    let g = a.group();
    let lc = lambda_c_subgroup(g, a.autc());
    let m = lc.len();
    if m > COMPLEMENT_SEARCH_CAP {
        return Ok(None);
    }
    let index: HashMap<&MorphQuadruple, usize> = lc.iter().enumerate().map(|(i, q)| (q, i)).collect();
    let id = index[&MorphQuadruple::identity(g)];
    let mut table = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            let p = multiply(g, &lc[i], &lc[j])?;
            table[i * m + j] = *index
                .get(&p)
                .ok_or_else(|| Error::invariant("Λ_c(G) is not closed"))?;
        }
    }
    let in_n: Vec<bool> = lc.iter().map(|q| kernel.elements.binary_search(q).is_ok()).collect();
    let target = m / kernel.elements.len();
    let close = |start: &[bool], x: usize| -> Vec<bool> {
        let mut mem = start.to_vec();
        let mut list: Vec<usize> = (0..m).filter(|&i| mem[i]).collect();
        let mut k = 0;
        while k < list.len() {
            let y = list[k];
            k += 1;
            for s in [x].into_iter().chain(list.clone()) {
                let z = table[s * m + y];
                if !mem[z] {
                    mem[z] = true;
                    list.push(z);
                }
            }
        }
        mem
    };
    let mut start = vec![false; m];
    start[id] = true;
    let mut seen: HashSet<Vec<bool>> = HashSet::new();
    let mut stack = vec![start];
    while let Some(h) = stack.pop() {
        let size = h.iter().filter(|&&b| b).count();
        if size == target {
            return Ok(None);
        }
        for x in 0..m {
            if h[x] || in_n[x] {
                continue;
            }
            let h2 = close(&h, x);
            let size2 = h2.iter().filter(|&&b| b).count();
            let meets = (0..m).any(|i| h2[i] && in_n[i] && i != id);
            if meets || target % size2 != 0 || !seen.insert(h2.clone()) {
                continue;
            }
            stack.push(h2);
        }
    }
    Ok(Some(false))
}
