//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
//! criterion fails. Every comparison is exact; the only tolerances are the
//! wall-clock budgets and sample counts pinned below.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use doubleaut::autdouble::*;
use doubleaut::autgrp::automorphism_group;
use doubleaut::autgrp::DEFAULT_MAX_AUT;
use doubleaut::double::MorphQuadruple;
use doubleaut::groups::library::*;
use doubleaut::groups::{are_isomorphic, FiniteGroup, Subgroup};
use doubleaut::modaction::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Exact integer comparisons: no slack on any order or count.
const ORDER_TOLERANCE: u128 = 0;
/// Per-group budget for the order reproductions.
const ORDER_BUDGET: Duration = Duration::from_secs(60);
/// Budget for the perfect-group path on A5.
const A5_BUDGET: Duration = Duration::from_secs(600);
const RANDOM_PRODUCTS: usize = 200;
const CLOSURE_LIMIT: u128 = 10_000;
const ACTION_TRIPLES: usize = 500;
const FLIP_PAIRS: usize = 1000;
const FACTOR_TRIPLES: usize = 1000;
const SEED: u64 = 20_240_601;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            detail: String::new(),
        }
    }

    fn check(&mut self, cond: bool, what: impl FnOnce() -> String) {
        if !cond {
            if self.ok {
                self.detail = what();
            }
            self.ok = false;
        }
    }
}

fn exact(got: u128, want: u128) -> bool {
    got.abs_diff(want) <= ORDER_TOLERANCE
}

/// Aut(D(G)) as a Cayley-table group, from its sorted element list.
fn as_table_group(g: &FiniteGroup, els: &[MorphQuadruple], name: &str) -> FiniteGroup {
    let rows: Vec<Vec<usize>> = els
        .iter()
        .map(|a| {
            els.iter()
                .map(|b| els.binary_search(&multiply(g, a, b).unwrap()).unwrap())
                .collect()
        })
        .collect();
    FiniteGroup::from_table(name, &rows, els.len()).unwrap()
}

fn all_elements(a: &AutDG) -> Vec<MorphQuadruple> {
    closure(a.group(), a.generators(), CLOSURE_LIMIT).unwrap().unwrap()
}

fn subgroup_of(els: &[MorphQuadruple], members: &[MorphQuadruple]) -> Subgroup {
    let mut m = vec![false; els.len()];
    for q in members {
        m[els.binary_search(q).unwrap()] = true;
    }
    Subgroup::from_members(m)
}

fn criterion_1() -> Outcome {
    let mut out = Outcome::new();
    let timed = |g: &FiniteGroup| {
        let t = Instant::now();
        let a = build_aut_default(g).unwrap();
        (a, t.elapsed())
    };

    // S3: order 12, Z2 × Hol(Z3), and Hol(Z3) = Z3 ⋊ Aut(Z3) ≅ S3
    let s3 = symmetric(3);
    let (a, t) = timed(&s3);
    out.check(exact(a.order(), 12) && t < ORDER_BUDGET, || format!("S3: {} in {t:?}", a.order()));
    let tab = as_table_group(&s3, &all_elements(&a), "Aut(D(S3))");
    out.check(are_isomorphic(&tab, &direct_product(&cyclic(2), &symmetric(3))), || {
        "Aut(D(S3)) is not Z2 × Hol(Z3)".into()
    });

    // A4: order 72 = |S4|·3, BCh ≅ Z3 normal with quotient S4 and the
    // embedded Aut(A4) ≅ S4 a complement. The action on BCh is trivial:
    // a bicharacter on A4/A4' ≅ Z3 picks up the sign of σ twice.
    let a4 = alternating(4);
    let (a, t) = timed(&a4);
    out.check(exact(a.order(), 72) && t < ORDER_BUDGET, || format!("A4: {} in {t:?}", a.order()));
    let els = &all_elements(&a);
    let tab = as_table_group(&a4, els, "Aut(D(A4))");
    let bch = subgroup_of(els, &bch_subgroup(&a4));
    out.check(bch.order() == 3 && tab.is_normal(&bch), || "BCh(A4) is not a normal Z3".into());
    let (quot, _) = tab.quotient(&bch, "Aut(D(A4))/Z3").unwrap();
    out.check(are_isomorphic(&quot, &symmetric(4)), || "quotient by Z3 is not S4".into());
    let aut = automorphism_group(&a4, DEFAULT_MAX_AUT).unwrap();
    let embedded: Vec<MorphQuadruple> = aut
        .elements()
        .iter()
        .map(|s| MorphQuadruple::from_automorphism(&a4, s))
        .collect();
    let k = subgroup_of(els, &embedded);
    let (kg, _) = tab.subgroup_as_group(&k, "K");
    out.check(
        tab.generate(&k.elements().to_vec()).order() == 24
            && are_isomorphic(&kg, &symmetric(4))
            && k.elements().iter().filter(|x| bch.contains(**x)).count() == 1,
        || "embedded Aut(A4) is not an S4 complement".into(),
    );
    // the action of the complement on BCh, computed on linear maps
    // independently of the closed-form product: σ∘β∘σ⁻¹ for each generator
    let beta = bch_subgroup(&a4)
        .into_iter()
        .find(|q| !q.is_identity())
        .unwrap();
    let beta_map = beta.to_map(&a4).unwrap();
    for s in aut.generator_homs() {
        let sigma = MorphQuadruple::from_automorphism(&a4, &s);
        let sigma_inv = inverse(&a4, &sigma).unwrap();
        let conj = sigma
            .to_map(&a4)
            .unwrap()
            .compose(&beta_map.compose(&sigma_inv.to_map(&a4).unwrap()));
        let via_product = multiply(&a4, &multiply(&a4, &sigma, &beta).unwrap(), &sigma_inv).unwrap();
        out.check(conj.first_difference(&via_product.to_map(&a4).unwrap()).is_none(), || {
            "conjugation on linear maps disagrees with the product".into()
        });
        out.check(conj.first_difference(&beta_map).is_none(), || {
            "an automorphism acts nontrivially on BCh(A4)".into()
        });
    }
    out.check(are_isomorphic(&tab, &direct_product(&symmetric(4), &cyclic(3))), || {
        "Aut(D(A4)) is not S4 × Z3".into()
    });

    // D8 and Q8 with their formula components
    for (g, order, comps) in [
        (dihedral(8), 1024, (2, 16, 4, 8)),
        (quaternion(8), 3072, (2, 16, 4, 24)),
    ] {
        let (a, t) = timed(&g);
        let c = a.components();
        out.check(
            exact(a.order(), order) && (c.end_z, c.bch, c.autc, c.aut) == comps && t < ORDER_BUDGET,
            || format!("{}: {} {:?} in {t:?}", g.name(), a.order(), (c.end_z, c.bch, c.autc, c.aut)),
        );
        out.check(a.closure_order() == Some(order), || format!("{}: closure", g.name()));
    }

    // A5 through the perfect path
    let a5 = alternating(5);
    let (a, t) = timed(&a5);
    let c = a.components();
    out.check(
        exact(a.order(), 120) && (c.end_z, c.bch, c.autc) == (1, 1, 1) && t < A5_BUDGET,
        || format!("A5: {} in {t:?}", a.order()),
    );
    out.check(
        automorphism_group(&symmetric(5), DEFAULT_MAX_AUT).unwrap().order() == 120,
        || "|Aut(S5)| ≠ 120".into(),
    );
    out
}

fn criterion_2() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut checked = 0usize;
    for g in corpus() {
        let a = build_aut_default(&g).unwrap();
        for q in a.generators() {
            let r = verify_element(&g, q);
            out.check(r.is_ok(), || format!("{} generator: {r:?}", g.name()));
            checked += 1;
        }
        for _ in 0..RANDOM_PRODUCTS {
            let q1 = a.random_element(&mut rng).unwrap();
            let q2 = a.random_element(&mut rng).unwrap();
            let q = multiply(&g, &q1, &q2).unwrap();
            let r = verify_element(&g, &q);
            out.check(r.is_ok(), || format!("{} product: {r:?}", g.name()));
            checked += 1;
        }
        if a.order() <= CLOSURE_LIMIT {
            out.check(a.closure_order() == Some(a.order()), || {
                format!("{}: closure {:?} vs order {}", g.name(), a.closure_order(), a.order())
            });
        }
    }
    if out.ok {
        out.detail = format!("{checked} elements verified");
    }
    out
}

fn criterion_3() -> Outcome {
    let mut out = Outcome::new();
    // |GL(2,2)|, |GL(2,3)|, |GL(2,Z/4)|, |GL(4,2)|
    for (g, want) in [
        (cyclic(2), 6),
        (cyclic(3), 48),
        (cyclic(4), 96),
        (direct_product(&cyclic(2), &cyclic(2)), 20160),
    ] {
        let bf = brute_force_aut_abelian(&g).unwrap();
        let formula = abelian_aut_order(&g).unwrap();
        out.check(exact(bf.order(), want) && exact(formula, want), || {
            format!("{}: brute force {} formula {formula}", g.name(), bf.order())
        });
    }
    out
}

fn criterion_4() -> Outcome {
    let mut out = Outcome::new();
    for g in corpus() {
        let a = build_aut_default(&g).unwrap();
        let k = kernel_n(&a).unwrap();
        let expected = k.autcprime * k.hom_count;
        out.check(k.order_filter == expected && k.agrees(), || {
            format!("{}: filter {} structure {}", g.name(), k.order_filter, expected)
        });
        out.check((k.order_filter == 1) == (k.center_derived_order == 1), || {
            format!("{}: N trivial iff Z∩G' trivial", g.name())
        });
    }
    out
}

fn criterion_5() -> Outcome {
    let mut out = Outcome::new();
    let mut direct_checked = 0;
    for g in corpus() {
        let a = build_aut_default(&g).unwrap();
        let k = kernel_n(&a).unwrap();
        let p = predicates(&a, &k).unwrap();
        out.check(p.all_agree(), || format!("{}: a predicate disagrees", g.name()));
        if a.order() <= CLOSURE_LIMIT {
            out.check(
                p.lambda_normal.direct.is_some() && p.n_has_complement.direct.is_some(),
                || format!("{}: no direct search", g.name()),
            );
            direct_checked += 1;
        }
        if g.name() == smallgroup_32_2().name() {
            out.check(
                !p.stem && p.n_has_complement.structural && p.n_has_complement.direct == Some(true),
                || "SmallGroup(32,2) should be non-stem with complemented N".into(),
            );
        }
    }
    if out.ok {
        out.detail = format!("{direct_checked} groups searched directly");
    }
    out
}

fn criterion_6() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    for g in [symmetric(3), quaternion(8), dihedral(8)] {
        let space = all_labels(&g).unwrap();
        let a = build_aut_default(&g).unwrap();
        for q in a.generators() {
            for l in space.labels() {
                let r = pullback_character_oracle(&space, q, l);
                out.check(r.is_ok(), || format!("{} {l:?}: {r:?}", g.name()));
            }
        }
        let labels = space.labels();
        for _ in 0..ACTION_TRIPLES {
            let q1 = a.random_element(&mut rng).unwrap();
            let q2 = a.random_element(&mut rng).unwrap();
            let l = &labels[rng.gen_range(0..labels.len())];
            let lhs = act(&space, &q2, &act(&space, &q1, l).unwrap()).unwrap();
            let rhs = act(&space, &multiply(&g, &q2, &q1).unwrap(), l).unwrap();
            out.check(lhs == rhs && lhs.dim == l.dim, || format!("{}: not an action at {l:?}", g.name()));
        }
        if g.name() == "S3" {
            let o = orbits(&space, &a).unwrap();
            let tau: Vec<usize> = (0..space.len())
                .filter(|&i| g.centralizer(labels[i].s).order() == 2)
                .collect();
            out.check(
                tau.len() == 2 && o.orbit_of(tau[0]) == o.orbit_of(tau[1]),
                || "(τ,+) and (τ,−) are not fused".into(),
            );
        }
    }
    out
}

fn criterion_7() -> Outcome {
    let mut out = Outcome::new();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    for g in [quaternion(8), dihedral(8)] {
        let a = build_aut_default(&g).unwrap();
        for _ in 0..FLIP_PAIRS {
            let q1 = a.random_element(&mut rng).unwrap();
            let q2 = a.random_element(&mut rng).unwrap();
            let f1 = q1.flip(&g).unwrap();
            let lhs = multiply(&g, &q1, &q2).unwrap().flip(&g).unwrap();
            let rhs = multiply(&g, &q2.flip(&g).unwrap(), &f1).unwrap();
            out.check(f1.flip(&g).unwrap() == q1 && lhs == rhs, || format!("{}: flip", g.name()));
        }
    }
    for g in [quaternion(8), dihedral(8), smallgroup_32_2()] {
        let a = build_aut_default(&g).unwrap();
        for _ in 0..FACTOR_TRIPLES {
            let f = a.factored_element(rng.gen_range(0..a.order())).unwrap();
            let q = f.recompose(&g).unwrap();
            out.check(a.factorize(&q).unwrap() == f, || format!("{}: factorization", g.name()));
        }
    }
    let mut tables = 0;
    for g in corpus() {
        let space = all_labels(&g).unwrap();
        for ci in 0..g.class_reps().len() {
            let r = space.centralizer(ci).table.verify();
            out.check(r.is_ok(), || format!("{} centralizer {ci}: {r:?}", g.name()));
            tables += 1;
        }
    }
    if out.ok {
        out.detail = format!("{tables} centralizer tables orthogonal");
    }
    out
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("order reproduction", criterion_1),
        ("oracle equivalence", criterion_2),
        ("abelian brute force", criterion_3),
        ("kernel of the restriction", criterion_4),
        ("predicates", criterion_5),
        ("module action", criterion_6),
        ("property suites", criterion_7),
    ];
    let mut failed = HashMap::new();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let o = f();
        let status = if o.ok { "PASS" } else { "FAIL" };
        println!(
            "[{status}] criterion {}: {name} ({:.1}s){}{}",
            i + 1,
            t.elapsed().as_secs_f64(),
            if o.detail.is_empty() { "" } else { ": " },
            o.detail
        );
        if !o.ok {
            failed.insert(i + 1, o.detail);
        }
    }
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
