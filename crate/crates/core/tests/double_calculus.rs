use doubleaut::autgrp::{automorphism_group, central_automorphisms, inner, spautc};
use doubleaut::double::{
    check_hopf_morphism, Double, LinearMap, MorphQuadruple, OracleMode, PMap, Relation,
};
use doubleaut::groups::library::*;
use doubleaut::groups::{enumerate_homs, Bicharacter, FiniteGroup, GroupHom};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Generators of the three standard families: Λ, BCh and SpAut_c.
fn family_elements(g: &FiniteGroup) -> Vec<MorphQuadruple> {
    let mut out = Vec::new();
    let z = g.center_structure();
    for h in enumerate_homs(z.factors(), z.factors()) {
        out.push(MorphQuadruple::from_pmap(g, &PMap::from_center_hom(g, &h)));
    }
    for r in Bicharacter::all(g) {
        out.push(MorphQuadruple::from_bicharacter(g, &r));
    }
    let aut = automorphism_group(g, 10_000).unwrap();
    let autc = central_automorphisms(g, &aut);
    for s in spautc(&aut, &autc) {
        out.push(MorphQuadruple::from_spautc(g, &s.w, &s.v));
    }
    out
}

fn random_product(g: &FiniteGroup, fam: &[MorphQuadruple], rng: &mut ChaCha8Rng, len: usize) -> MorphQuadruple {
    let mut q = MorphQuadruple::identity(g);
    for _ in 0..len {
        q = fam.choose(rng).unwrap().compose(&q, g).unwrap();
    }
    q
}

fn test_groups() -> Vec<FiniteGroup> {
    vec![
        cyclic(4),
        direct_product(&cyclic(2), &cyclic(2)),
        symmetric(3),
        dihedral(8),
        quaternion(8),
        dihedral(12),
    ]
}

#[test]
fn closed_form_composition_matches_linear_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in test_groups() {
        let fam = family_elements(&g);
        for _ in 0..12 {
            let q1 = random_product(&g, &fam, &mut rng, 3);
            let q2 = random_product(&g, &fam, &mut rng, 3);
            let q = q2.compose(&q1, &g).unwrap();
            let lhs = q.to_map(&g).unwrap();
            let rhs = q2.to_map(&g).unwrap().compose(&q1.to_map(&g).unwrap());
            assert_eq!(lhs.first_difference(&rhs), None, "{}", g.name());
            assert!(q.check_compatibility(&g).holds(), "{}", g.name());
        }
    }
}

#[test]
fn composition_identity_and_bicharacter_sums() {
    let g = dihedral(8);
    let id = MorphQuadruple::identity(&g);
    let all = Bicharacter::all(&g);
    for r1 in &all {
        let q1 = MorphQuadruple::from_bicharacter(&g, r1);
        assert_eq!(q1.compose(&id, &g).unwrap(), q1);
        assert_eq!(id.compose(&q1, &g).unwrap(), q1);
        for r2 in &all {
            let q2 = MorphQuadruple::from_bicharacter(&g, r2);
            let sum = MorphQuadruple::from_bicharacter(&g, &r1.add(r2, &g));
            assert_eq!(q2.compose(&q1, &g).unwrap(), sum);
        }
    }
}

#[test]
fn conjugating_a_bicharacter_by_spautc() {
    // S⁻¹ ∘ B(ω) ∘ S = B(ω') with ω'(h, y) = ω(v(h), w(y))
    let g = dihedral(8);
    let aut = automorphism_group(&g, 1000).unwrap();
    let autc = central_automorphisms(&g, &aut);
    let sp = spautc(&aut, &autc);
    let all = Bicharacter::all(&g);
    for s in sp.iter().step_by(5) {
        let fwd = MorphQuadruple::from_spautc(&g, &s.w, &s.v);
        let back = MorphQuadruple::from_spautc(&g, &s.w.inverse(), &s.v.inverse());
        for r in &all {
            let b = MorphQuadruple::from_bicharacter(&g, r);
            let conj = back.compose(&b, &g).unwrap().compose(&fwd, &g).unwrap();
            let want = Bicharacter::from_fn(&g, |h, y| {
                r.phase(&g, s.v.apply(h), s.w.apply(y)) as u64
            })
            .unwrap();
            assert_eq!(conj, MorphQuadruple::from_bicharacter(&g, &want));
        }
    }
}

#[test]
fn flip_is_an_involutive_anti_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for g in test_groups() {
        let fam = family_elements(&g);
        for _ in 0..10 {
            let q1 = random_product(&g, &fam, &mut rng, 3);
            let q2 = random_product(&g, &fam, &mut rng, 3);
            let f1 = q1.flip(&g).unwrap();
            assert_eq!(f1.flip(&g).unwrap(), q1);
            assert!(f1.check_compatibility(&g).holds());
            let lhs = q2.compose(&q1, &g).unwrap().flip(&g).unwrap();
            let rhs = f1.compose(&q2.flip(&g).unwrap(), &g).unwrap();
            assert_eq!(lhs, rhs, "{}", g.name());
        }
    }
}

#[test]
fn flip_of_a_bicharacter_is_its_transpose() {
    let g = direct_product(&cyclic(4), &cyclic(2));
    for r in Bicharacter::all(&g).iter().step_by(7) {
        let q = MorphQuadruple::from_bicharacter(&g, r);
        assert_eq!(
            q.flip(&g).unwrap(),
            MorphQuadruple::from_bicharacter(&g, &r.transpose(&g))
        );
    }
    let id = MorphQuadruple::identity(&g);
    assert_eq!(id.flip(&g).unwrap(), id);
}

#[test]
fn flip_dualizes_the_lambda_table() {
    // the flipped p has λ*(x, a) = λ(a, x)
    let g = direct_product(&cyclic(4), &cyclic(2));
    let z = g.center_structure();
    for h in enumerate_homs(z.factors(), z.factors()).iter().step_by(5) {
        let p = PMap::from_center_hom(&g, h);
        let lam = p.lambda_table(&g);
        let dual = p.dual(&g).unwrap().lambda_table(&g);
        for a in g.elements() {
            for (x, c) in &lam[a] {
                assert!(dual[*x].iter().any(|(b, d)| *b == a && d == c));
            }
        }
        let total: usize = lam.iter().map(Vec::len).sum();
        assert_eq!(total, dual.iter().map(Vec::len).sum::<usize>());
    }
}

#[test]
fn extraction_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for g in test_groups() {
        let fam = family_elements(&g);
        for _ in 0..8 {
            let q = random_product(&g, &fam, &mut rng, 4);
            let m = q.to_map(&g).unwrap();
            assert_eq!(MorphQuadruple::extract(&m, &g).unwrap(), q, "{}", g.name());
        }
    }
}

#[test]
fn oracle_modes_agree_and_accept_automorphisms() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in test_groups() {
        let fam = family_elements(&g);
        for _ in 0..4 {
            let q = random_product(&g, &fam, &mut rng, 3);
            let m = q.to_map(&g).unwrap();
            assert_eq!(check_hopf_morphism(&m, &g, OracleMode::Exhaustive), Ok(()));
            assert_eq!(check_hopf_morphism(&m, &g, OracleMode::Generators), Ok(()));
            assert!(q.is_bijective(&g).unwrap());
            assert!(q.preserves_integral(&g).unwrap());
            assert!(q.is_flippable(&g));
        }
    }
}

#[test]
fn quadruple_map_examples() {
    let g = symmetric(3);
    let d = Double::new(&g);
    let aut = automorphism_group(&g, 100).unwrap();
    for s in aut.elements() {
        let m = MorphQuadruple::from_automorphism(&g, s).to_map(&g).unwrap();
        let want = LinearMap::from_fn(&d, |x, h| d.basis_element(s.apply(x), s.apply(h)));
        assert_eq!(m, want);
    }
    let g = cyclic(3);
    let d = Double::new(&g);
    for r in Bicharacter::all(&g) {
        let m = MorphQuadruple::from_bicharacter(&g, &r).to_map(&g).unwrap();
        let want = LinearMap::from_fn(&d, |x, h| {
            d.basis_element(x, h)
                .scale(&doubleaut::CycScalar::root(3, r.phase(&g, h, x) as i64))
        });
        assert_eq!(m, want);
    }
}

#[test]
fn q8_noncentral_image_fails_v_p_conjugation() {
    // A = ⟨i⟩, B = ⟨j⟩, u* trivial, ω = 0, v = id
    let g = quaternion(8);
    let order4: Vec<usize> = g.elements().filter(|&x| g.element_order(x) == 4).collect();
    let i = order4[0];
    let j = *order4
        .iter()
        .find(|&&y| g.mul(i, y) != g.mul(y, i))
        .unwrap();
    let p = PMap::general(&g, &g.generate(&[i]), vec![j]).unwrap();
    let q = MorphQuadruple {
        p,
        ustar: GroupHom::trivial(8),
        ..MorphQuadruple::identity(&g)
    };
    let c = q.check_compatibility(&g);
    assert_eq!(c.failed_relation(), Some(Relation::VPConjugation));
    let m = q.to_map(&g).unwrap();
    assert!(check_hopf_morphism(&m, &g, OracleMode::Exhaustive).is_err());
    assert!(check_hopf_morphism(&m, &g, OracleMode::Generators).is_err());
}

#[test]
fn s3_inner_ustar_fails_v_u_equivariance() {
    let g = symmetric(3);
    let x = g.elements().find(|&x| g.element_order(x) == 2).unwrap();
    let q = MorphQuadruple {
        ustar: inner(&g, x),
        ..MorphQuadruple::identity(&g)
    };
    assert_eq!(
        q.check_compatibility(&g).failed_relation(),
        Some(Relation::VUEquivariance)
    );
    let m = q.to_map(&g).unwrap();
    assert!(check_hopf_morphism(&m, &g, OracleMode::Exhaustive).is_err());
    assert!(check_hopf_morphism(&m, &g, OracleMode::Generators).is_err());
}

#[test]
fn degenerate_endomorphism_is_hopf_but_not_bijective() {
    // (0, 0, p, 0) on an abelian group: e_g # h ↦ 1 # p(e_g)
    let g = cyclic(3);
    let z = g.center_structure();
    let p = PMap::from_center_hom(&g, &doubleaut::groups::AbHom::identity(z.factors()));
    let q = MorphQuadruple {
        p,
        ustar: GroupHom::trivial(3),
        r: Bicharacter::zero(&g),
        v: GroupHom::trivial(3),
    };
    assert!(q.check_compatibility(&g).holds());
    let m = q.to_map(&g).unwrap();
    assert_eq!(check_hopf_morphism(&m, &g, OracleMode::Exhaustive), Ok(()));
    assert!(!m.is_bijective());
    assert!(!q.preserves_integral(&g).unwrap());
}

#[test]
fn collapse_map_is_rejected() {
    let g = symmetric(3);
    let d = Double::new(&g);
    let collapse = LinearMap::from_fn(&d, |x, _| d.basis_element(x, 0));
    let err = check_hopf_morphism(&collapse, &g, OracleMode::Exhaustive).unwrap_err();
    assert!(err.contains("ψ(xy)"), "{err}");
}

#[test]
fn grouplike_restriction_examples() {
    let g = direct_product(&cyclic(2), &symmetric(3));
    let n = g.order();
    let ab = g.abelianization();
    for r in Bicharacter::all(&g) {
        let res = MorphQuadruple::from_bicharacter(&g, &r).restrict_to_grouplikes(&g);
        for ci in 0..ab.size() {
            let chi = ab.coords_of_index(ci);
            for x in 0..n {
                let want = doubleaut::groups::add_coords(ab.factors(), &chi, &r.row(&g, x));
                assert_eq!(res[ci * n + x], ab.index_of_coords(&want) * n + x);
            }
        }
    }
    let z = g.center_structure();
    for h in enumerate_homs(z.factors(), z.factors()) {
        let p = PMap::from_center_hom(&g, &h);
        let res = MorphQuadruple::from_pmap(&g, &p).restrict_to_grouplikes(&g);
        let e = g.exponent() as u64;
        for ci in 0..ab.size() {
            let chi = ab.coords_of_index(ci);
            let nu = z
                .character_coords(e, |j| {
                    ab.pairing(&chi, ab.coords(z.generators()[j]).unwrap(), e) as u64
                })
                .unwrap();
            let pc = p.image_of(&g, &nu);
            for x in 0..n {
                assert_eq!(res[ci * n + x], ci * n + g.mul(pc, x));
            }
        }
    }
}

#[test]
fn json_round_trip_of_random_elements() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for g in test_groups() {
        let fam = family_elements(&g);
        let q = random_product(&g, &fam, &mut rng, 5);
        let j = q.to_json(&g);
        assert_eq!(MorphQuadruple::from_json(&g, &j).unwrap(), q);
    }
}
