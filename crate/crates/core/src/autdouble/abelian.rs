//! Abelian G: Aut(D(G)) ≅ Aut(Ĝ×G).

use std::collections::BTreeMap;

use super::{closure, elementary_homs, AutDG, Classification, Strategy};
use crate::double::{MorphQuadruple, PMap};
use crate::error::{Error, Result};
use crate::groups::{enumerate_homs, AbHom, AbelianStructure, Bicharacter, FiniteGroup, GroupHom};

/// Largest number of hom-matrices the brute-force oracle will examine.
pub const BRUTE_FORCE_CAP: u128 = 1 << 22;

/// |Aut(A)| for a finite abelian group with invariant factors `factors`, by
/// the Hillar–Rhea formula on each Sylow subgroup.
pub fn aut_order_of_abelian(factors: &[u64]) -> u128 {
    let mut by_prime: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for &d in factors {
        let mut m = d;
        let mut p = 2;
        while m > 1 {
            if m % p == 0 {
                let mut k = 0;
                while m % p == 0 {
                    m /= p;
                    k += 1;
                }
                by_prime.entry(p).or_default().push(k);
            }
            p += 1;
        }
    }
    let mut total: u128 = 1;
    for (p, mut es) in by_prime {
        es.sort_unstable();
        let n = es.len();
        let p = p as u128;
        let pow = |k: u32| p.pow(k);
        // d_k = max{l : e_l = e_k}, c_k = min{l : e_l = e_k} (1-based)
        let d: Vec<usize> = (0..n)
            .map(|k| (0..n).rev().find(|&l| es[l] == es[k]).unwrap() + 1)
            .collect();
        let c: Vec<usize> = (0..n)
            .map(|k| (0..n).find(|&l| es[l] == es[k]).unwrap() + 1)
            .collect();
        let mut a: u128 = 1;
        for k in 0..n {
            a *= pow(d[k] as u32) - pow(k as u32);
        }
        for j in 0..n {
            a *= pow(es[j]).pow((n - d[j]) as u32);
        }
        for i in 0..n {
            a *= pow(es[i] - 1).pow((n - c[i] + 1) as u32);
        }
        total *= a;
    }
    total
}

/// |Aut(Ĝ×G)| = |Aut(G×G)| for abelian G.
pub fn abelian_aut_order(g: &FiniteGroup) -> Result<u128> {
    if !g.is_abelian() {
        return Err(Error::pre("group is not abelian"));
    }
    let f = g.abelianization().factors();
    let doubled: Vec<u64> = f.iter().chain(f).copied().collect();
    Ok(aut_order_of_abelian(&doubled))
}

pub(super) fn build(mut a: AutDG) -> Result<AutDG> {
    let g = a.group.clone();
    a.classification = Classification::Abelian;
    a.strategy = Strategy::AbelianMatrices;
    a.order = abelian_aut_order(&g)?;
    let mut gens = Vec::new();
    let zf = g.center_structure().factors();
    for h in elementary_homs(zf, zf) {
        gens.push(MorphQuadruple::from_pmap(&g, &PMap::from_center_hom(&g, &h)));
    }
    let af = g.abelianization().factors();
    for h in elementary_homs(af, af) {
        gens.push(MorphQuadruple::from_bicharacter(&g, &Bicharacter { matrix: h.images }));
    }
    for s in a.aut.generator_homs() {
        gens.push(MorphQuadruple {
            ustar: s.clone(),
            ..MorphQuadruple::identity(&g)
        });
        gens.push(MorphQuadruple {
            v: s,
            ..MorphQuadruple::identity(&g)
        });
    }
    a.generators = gens;
    if a.order <= a.options.closure_cap {
        let els = closure(&g, &a.generators, a.options.closure_cap)?
            .ok_or_else(|| Error::invariant("closure exceeds |Aut(Ĝ×G)|"))?;
        a.closure_order = Some(els.len() as u128);
        a.elements = Some(els);
    }
    Ok(a)
}

fn to_group_hom(ab: &AbelianStructure, h: &AbHom, n: usize) -> GroupHom {
    GroupHom::new(
        (0..n)
            .map(|x| ab.lookup(&h.apply(ab.coords(x).unwrap(), ab.factors())))
            .collect(),
    )
}

/// Exhaustive oracle for abelian G: every quadruple (p, u*, ω, v) of
/// homomorphisms, kept when the induced map on Γ = Ĝ×G is a bijection
/// (for abelian G the group-likes span D(G), so this is bijectivity).
pub fn brute_force_aut_abelian(g: &FiniteGroup) -> Result<AutDG> {
    if !g.is_abelian() || g.order() > 8 {
        return Err(Error::pre("brute force needs an abelian group of order at most 8"));
    }
    let n = g.order();
    let ab = g.abelianization();
    let af = ab.factors();
    let zf = g.center_structure().factors();
    let ends: Vec<GroupHom> = enumerate_homs(af, af)
        .iter()
        .map(|h| to_group_hom(ab, h, n))
        .collect();
    let ps: Vec<PMap> = enumerate_homs(zf, zf)
        .iter()
        .map(|h| PMap::from_center_hom(g, h))
        .collect();
    let bchs = Bicharacter::all(g);
    let total = (ends.len() as u128).pow(3) * ps.len() as u128;
    if total > BRUTE_FORCE_CAP {
        return Err(Error::size(format!("{total} hom-matrices exceed the brute-force cap")));
    }
    let gamma = ab.size() * n;
    let mut found = Vec::new();
    let mut hit = vec![0u32; gamma];
    let mut stamp = 0u32;
    for p in &ps {
        for u in &ends {
            for r in &bchs {
                for v in &ends {
                    let q = MorphQuadruple {
                        p: p.clone(),
                        ustar: u.clone(),
                        r: r.clone(),
                        v: v.clone(),
                    };
                    stamp += 1;
                    let res = q.restrict_to_grouplikes(g);
                    let mut bij = true;
                    for &x in &res {
                        if hit[x] == stamp {
                            bij = false;
                            break;
                        }
                        hit[x] = stamp;
                    }
                    if bij {
                        found.push(q);
                    }
                }
            }
        }
    }
    found.sort();
    let base = super::build_aut(g, &super::BuildOptions {
        closure_cap: 0,
        ..Default::default()
    })?;
    Ok(AutDG {
        strategy: Strategy::BruteForce,
        order: found.len() as u128,
        exact: true,
        closure_order: None,
        generators: base.generators.clone(),
        elements: Some(found),
        ..base
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hillar_rhea_small_cases() {
        assert_eq!(aut_order_of_abelian(&[]), 1);
        assert_eq!(aut_order_of_abelian(&[2]), 1);
        assert_eq!(aut_order_of_abelian(&[2, 2]), 6);
        assert_eq!(aut_order_of_abelian(&[3, 3]), 48);
        // GL(3, 2)
        assert_eq!(aut_order_of_abelian(&[2, 2, 2]), 168);
        // |Aut(Z2 × Z4)| = 8
        assert_eq!(aut_order_of_abelian(&[2, 4]), 8);
        // |GL(2, Z/4)| = 96
        assert_eq!(aut_order_of_abelian(&[4, 4]), 96);
        // Z6 ≅ Z2 × Z3: Aut ≅ Z2
        assert_eq!(aut_order_of_abelian(&[6]), 2);
        // |GL(4, 2)| = 20160
        assert_eq!(aut_order_of_abelian(&[2, 2, 2, 2]), 20160);
    }
}
