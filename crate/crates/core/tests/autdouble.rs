use std::collections::HashSet;

use doubleaut::autdouble::*;
use doubleaut::autgrp::{automorphism_group, central_automorphisms, DEFAULT_MAX_AUT};
use doubleaut::double::MorphQuadruple;
use doubleaut::groups::library::*;
use doubleaut::groups::FiniteGroup;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn build(g: &FiniteGroup) -> AutDG {
    build_aut_default(g).unwrap()
}

#[test]
fn paper_orders() {
    let cases: [(FiniteGroup, u128); 4] = [
        (symmetric(3), 12),
        (alternating(4), 72),
        (dihedral(8), 1024),
        (quaternion(8), 3072),
    ];
    for (g, order) in cases {
        let a = build(&g);
        assert_eq!(a.classification(), Classification::PurelyNonabelian, "{}", g.name());
        assert_eq!(a.order(), order, "{}", g.name());
        assert_eq!(a.closure_order(), Some(order), "{}", g.name());
    }
}

#[test]
fn order_formula_components() {
    let d8 = build(&dihedral(8)).components();
    assert_eq!((d8.end_z, d8.bch, d8.autc, d8.aut), (2, 16, 4, 8));
    let q8 = build(&quaternion(8)).components();
    assert_eq!((q8.end_z, q8.bch, q8.autc, q8.aut), (2, 16, 4, 24));
}

#[test]
fn a5_goes_through_the_perfect_path() {
    let g = alternating(5);
    let a = build(&g);
    let c = a.components();
    assert_eq!((c.end_z, c.bch, c.autc, c.aut), (1, 1, 1, 120));
    assert_eq!(a.order(), 120);
    assert!(bch_subgroup(&g).len() == 1);
}

#[test]
fn family_sizes() {
    assert_eq!(lambda_subgroup(&quaternion(8)).len(), 2);
    assert_eq!(lambda_subgroup(&symmetric(3)).len(), 1);
    assert_eq!(lambda_subgroup(&smallgroup_32_2()).len(), 512);
    assert_eq!(bch_subgroup(&dihedral(8)).len(), 16);
    let q = quaternion(8);
    let aut = automorphism_group(&q, DEFAULT_MAX_AUT).unwrap();
    let autc = central_automorphisms(&q, &aut);
    assert_eq!(spautc_subgroup(&q, &aut, &autc).len(), 96);
}

#[test]
fn families_intersect_trivially_and_embed_injectively() {
    for g in [quaternion(8), dihedral(8), symmetric(3), dihedral(12)] {
        let aut = automorphism_group(&g, DEFAULT_MAX_AUT).unwrap();
        let autc = central_automorphisms(&g, &aut);
        let l: HashSet<MorphQuadruple> = lambda_subgroup(&g).into_iter().collect();
        let b: HashSet<MorphQuadruple> = bch_subgroup(&g).into_iter().collect();
        let s: HashSet<MorphQuadruple> = spautc_subgroup(&g, &aut, &autc).into_iter().collect();
        assert_eq!(l.len(), lambda_subgroup(&g).len());
        assert_eq!(b.len(), bch_subgroup(&g).len());
        assert_eq!(s.len() as u128, (aut.order() * autc.order()) as u128);
        assert_eq!(l.intersection(&b).count(), 1);
        assert_eq!(l.intersection(&s).count(), 1);
        assert_eq!(b.intersection(&s).count(), 1);
    }
}

#[test]
fn lambda_elements_commute() {
    let g = smallgroup_32_2();
    let l = lambda_subgroup(&g);
    for x in l.iter().step_by(37) {
        for y in l.iter().step_by(53) {
            assert_eq!(multiply(&g, x, y).unwrap(), multiply(&g, y, x).unwrap());
        }
    }
}

#[test]
fn factored_enumeration_matches_closure() {
    let g = quaternion(8);
    let a = build(&g);
    let mut listed = Vec::new();
    a.for_each_element(|i, q| {
        assert_eq!(a.index_of_factored(&a.factorize(q).unwrap()), Some(i));
        listed.push(q.clone());
        Ok(())
    })
    .unwrap();
    listed.sort();
    let closed = closure(&g, a.generators(), 10_000).unwrap().unwrap();
    assert_eq!(listed, closed);
}

#[test]
fn factorization_round_trip_q8() {
    let g = quaternion(8);
    let a = build(&g);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let q = a.random_element(&mut rng).unwrap();
        let f = a.factorize(&q).unwrap();
        assert_eq!(f.recompose(&g).unwrap(), q);
    }
    // identity and a pure Λ generator
    let id = MorphQuadruple::identity(&g);
    assert_eq!(a.factorize(&id).unwrap(), FactoredElement::identity(&g));
    let lam = lambda_subgroup(&g).pop().unwrap();
    let f = a.factorize(&lam).unwrap();
    assert!(f.r.matrix.iter().flatten().all(|&x| x == 0));
    assert!(f.s.w.is_identity() && f.s.v.is_identity());
}

#[test]
fn centerless_groups_are_bch_by_aut() {
    for g in [symmetric(3), alternating(4), dihedral(10)] {
        let a = build(&g);
        let c = a.components();
        assert_eq!((c.end_z, c.autc), (1, 1));
        assert_eq!(a.order(), c.bch * c.aut);
    }
}

#[test]
fn abelian_orders_match_brute_force() {
    let cases: [(FiniteGroup, u128); 5] = [
        (cyclic(1), 1),
        (cyclic(2), 6),
        (cyclic(3), 48),
        (cyclic(4), 96),
        (direct_product(&cyclic(2), &cyclic(2)), 20160),
    ];
    for (g, order) in cases {
        let bf = brute_force_aut_abelian(&g).unwrap();
        assert_eq!(bf.order(), order, "{}", g.name());
        assert_eq!(abelian_aut_order(&g).unwrap(), order);
        let opts = BuildOptions {
            closure_cap: 100_000,
            ..Default::default()
        };
        let a = build_aut(&g, &opts).unwrap();
        assert_eq!(a.order(), order);
        assert_eq!(a.elements().unwrap(), bf.elements().unwrap(), "{}", g.name());
        // an element with v ≡ 1 exists once G is nontrivial
        if g.order() > 1 {
            assert!(bf
                .elements()
                .unwrap()
                .iter()
                .any(|q| (0..g.order()).all(|x| q.v.apply(x) == 0)));
        }
    }
}

#[test]
fn brute_force_rejects_large_or_nonabelian() {
    assert!(brute_force_aut_abelian(&symmetric(3)).is_err());
    assert!(brute_force_aut_abelian(&cyclic(9)).is_err());
}

#[test]
fn brute_force_bijectivity_agrees_with_linear_maps() {
    let g = cyclic(2);
    let bf = brute_force_aut_abelian(&g).unwrap();
    for q in bf.elements().unwrap() {
        assert!(q.is_bijective(&g).unwrap());
        assert!(verify_element(&g, q).is_ok());
    }
}

#[test]
fn coprime_product() {
    let g = direct_product(&cyclic(3), &symmetric(3));
    let a = build(&g);
    assert_eq!(a.classification(), Classification::MixedCoprime);
    assert_eq!(a.order(), 48 * 12);
    assert_eq!(a.closure_order(), Some(48 * 12));
    let g = direct_product(&cyclic(3), &quaternion(8));
    let a = build(&g);
    assert_eq!(a.classification(), Classification::MixedCoprime);
    assert_eq!(a.order(), 48 * 3072);
}

#[test]
fn non_coprime_product_is_a_flagged_lower_bound() {
    let g = dihedral(12);
    let a = build(&g);
    assert_eq!(a.classification(), Classification::MixedIncomplete);
    assert!(!a.is_exact());
    let c = a.components();
    assert!(a.order() >= c.product());
    assert!(a.order() >= 6 * 12);
    for q in a.generators() {
        assert!(verify_element(&g, q).is_ok());
    }
}

#[test]
fn kernel_examples() {
    let a = build(&quaternion(8));
    let k = kernel_n(&a).unwrap();
    assert_eq!(k.scope, FilterScope::Whole);
    assert_eq!(k.order_filter, 8);
    assert!(k.agrees());
    for g in [symmetric(3), cyclic(4), alternating(4)] {
        let k = kernel_n(&build(&g)).unwrap();
        assert_eq!(k.order_filter, 1, "{}", g.name());
        assert!(k.agrees());
    }
    // stem dihedral group: N = Λ_c
    let g = dihedral(8);
    let a = build(&g);
    let k = kernel_n(&a).unwrap();
    let mut lc = lambda_c_subgroup(&g, a.autc());
    lc.sort();
    assert_eq!(k.elements, lc);
    assert_eq!(lc.len(), 8);
}

#[test]
fn lambda_c_fixes_one_times_g() {
    for g in [dihedral(8), quaternion(8), symmetric(3)] {
        let a = build(&g);
        let lc = lambda_c_subgroup(&g, a.autc());
        assert_eq!(lc.len() as u128, a.components().autc * a.components().end_z);
        let n = g.order();
        for q in &lc {
            assert!(a.contains(q).unwrap());
            let res = q.restrict_to_grouplikes(&g);
            assert!((0..n).all(|x| res[x] == x));
        }
    }
}

#[test]
fn predicate_examples() {
    let a = build(&quaternion(8));
    let k = kernel_n(&a).unwrap();
    let p = predicates(&a, &k).unwrap();
    assert!(p.stem && p.purely_nonabelian);
    assert_eq!(p.lambda_normal.direct, Some(true));
    assert_eq!(p.lambdac_normal.direct, Some(true));
    assert_eq!(p.n_has_complement.direct, Some(true));
    assert!(p.all_agree());

    let g = smallgroup_32_2();
    let a = build(&g);
    let k = kernel_n(&a).unwrap();
    assert!(k.order_filter > 1 && k.agrees());
    let p = predicates(&a, &k).unwrap();
    assert!(!p.stem);
    assert_eq!(p.lambda_normal.direct, Some(false));
    assert_eq!(p.lambdac_normal.direct, Some(false));
    assert!(p.n_has_complement.structural);
    assert_eq!(p.n_has_complement.direct, Some(true));

    let a = build(&alternating(5));
    let k = kernel_n(&a).unwrap();
    let p = predicates(&a, &k).unwrap();
    assert!(p.perfect && p.centerless && p.all_agree());
}

#[test]
fn report_json_shape() {
    let a = build(&quaternion(8));
    let k = kernel_n(&a).unwrap();
    let p = predicates(&a, &k).unwrap();
    let r = a.report(Some(&k), Some(&p));
    assert_eq!(r["order"], 3072);
    assert_eq!(r["classification"], "purely-nonabelian");
    assert_eq!(r["order_formula_components"]["aut"], 24);
    assert_eq!(r["kernel_N"]["order"], 8);
    assert_eq!(r["predicates"]["stem"], true);
    let g = quaternion(8);
    for q in r["generators"].as_array().unwrap() {
        let back = MorphQuadruple::from_json(&g, q).unwrap();
        assert!(a.contains(&back).unwrap());
    }
}
