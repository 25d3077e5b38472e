//! An independent check that a linear map on D(G) is a Hopf-algebra
//! morphism, working only from the structure constants of D(G).
//!
//! Two modes are offered. `Exhaustive` checks multiplicativity on every
//! pair of basis elements and the coalgebra and antipode identities on every
//! basis element. `Generators` establishes the same statement more cheaply:
//!
//! * ψ is an algebra map iff ψ(1) = 1, the P_g = ψ(e_g # 1) are orthogonal
//!   idempotents, h ↦ Q_h = ψ(ε # h) is a group homomorphism (checked on
//!   s·h for generators s), Q_s P_g = P_{sgs⁻¹} Q_s for generators s, and
//!   ψ(e_g # h) = P_g Q_h. These are the defining relations of the smash
//!   product 𝕜^G # 𝕜G.
//! * Given that, Δ∘ψ and (ψ⊗ψ)∘Δ are algebra maps, as are ε∘ψ and ε, and
//!   S∘ψ, ψ∘S are anti-algebra maps; each pair agrees everywhere iff it
//!   agrees on a set of algebra generators. The generators used are ε # s
//!   for group generators s, the linear characters of G (as elements of
//!   𝕜^G # 1) on Smith generators of Ĝ, and, when G is non-abelian, one
//!   function taking pairwise distinct values on each coset of G'. Together
//!   these separate the points of G, so they generate 𝕜^G.

use super::element::{basis, Double, DoubleElement, Tensor};
use super::linmap::LinearMap;
use crate::cyclotomic::CycScalar;
use crate::groups::FiniteGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    Exhaustive,
    Generators,
    /// Exhaustive for |G| ≤ 6, generator-based otherwise.
    Auto,
}

/// Verdict with the first failing identity.
pub fn check_hopf_morphism(
    map: &LinearMap,
    g: &FiniteGroup,
    mode: OracleMode,
) -> std::result::Result<(), String> {
    if map.group_order() != g.order() {
        return Err("map over a different group".into());
    }
    let d = Double::new(g);
    let unit = d.unit();
    if map.apply(&unit) != unit {
        return Err("ψ(1) ≠ 1".into());
    }
    match mode {
        OracleMode::Exhaustive => exhaustive(map, &d),
        OracleMode::Generators => generators(map, &d),
        OracleMode::Auto if g.order() <= 6 => exhaustive(map, &d),
        OracleMode::Auto => generators(map, &d),
    }
}

pub fn is_hopf_morphism(map: &LinearMap, g: &FiniteGroup) -> bool {
    check_hopf_morphism(map, g, OracleMode::Auto).is_ok()
}

fn images(map: &LinearMap, n: usize) -> Vec<DoubleElement> {
    (0..(n * n) as u32)
        .map(|b| DoubleElement::from_terms(n, map.column(b).iter().cloned()))
        .collect()
}

fn exhaustive(map: &LinearMap, d: &Double) -> std::result::Result<(), String> {
    let g = d.group();
    let n = g.order();
    let img = images(map, n);
    let bas = |b: usize| d.basis_element(b / n, b % n);
    for b1 in 0..n * n {
        let x = bas(b1);
        for b2 in 0..n * n {
            let xy = d.multiply_unchecked(&x, &bas(b2));
            if map.apply(&xy) != d.multiply_unchecked(&img[b1], &img[b2]) {
                return Err(format!("ψ(xy) ≠ ψ(x)ψ(y) at basis pair ({b1}, {b2})"));
            }
        }
    }
    for b in 0..n * n {
        coalgebra_at(map, d, &img, &bas(b)).map_err(|s| format!("{s} at basis element {b}"))?;
    }
    Ok(())
}

/// Δψ(x) = (ψ⊗ψ)Δ(x), εψ(x) = ε(x) and ψS(x) = Sψ(x).
fn coalgebra_at(
    map: &LinearMap,
    d: &Double,
    img: &[DoubleElement],
    x: &DoubleElement,
) -> std::result::Result<(), String> {
    let px = map.apply(x);
    let lhs = d.comultiply(&px).expect("same group");
    let rhs = d.tensor_map(&d.comultiply(x).expect("same group"), |b| img[b as usize].clone());
    if lhs != rhs {
        return Err("Δψ ≠ (ψ⊗ψ)Δ".into());
    }
    if d.counit(&px).unwrap() != d.counit(x).unwrap() {
        return Err("εψ ≠ ε".into());
    }
    if map.apply(&d.antipode(x).unwrap()) != d.antipode(&px).unwrap() {
        return Err("ψS ≠ Sψ".into());
    }
    Ok(())
}

/// Cheap form of the coalgebra check for a group-like x.
fn grouplike_at(map: &LinearMap, d: &Double, x: &DoubleElement) -> std::result::Result<(), String> {
    let px = map.apply(x);
    let mut sq = Tensor::default();
    sq.add_outer(&px, &px, &d.one_scalar());
    if d.comultiply(&px).unwrap() != sq {
        return Err("image of a group-like is not group-like".into());
    }
    if !d.counit(&px).unwrap().is_one() {
        return Err("εψ ≠ ε".into());
    }
    if map.apply(&d.antipode(x).unwrap()) != d.antipode(&px).unwrap() {
        return Err("ψS ≠ Sψ".into());
    }
    Ok(())
}

fn generators(map: &LinearMap, d: &Double) -> std::result::Result<(), String> {
    let g = d.group();
    let n = g.order();
    let e = d.conductor();
    let img = images(map, n);
    let p: Vec<DoubleElement> = (0..n).map(|x| img[basis(n, x, 0) as usize].clone()).collect();
    let q: Vec<DoubleElement> = (0..n).map(|h| map.apply(&d.group_element(h))).collect();
    // Σ p[a] = ψ(1) = 1 is checked by the caller, and in characteristic 0
    // idempotents summing to 1 are orthogonal (trace equals rank).
    for a in 0..n {
        if d.multiply_unchecked(&p[a], &p[a]) != p[a] {
            return Err(format!("ψ(e_g#1) is not idempotent at g={a}"));
        }
    }
    // h ↦ ψ(ε # h) is a homomorphism
    if q[0] != d.unit() {
        return Err("ψ(ε#1) ≠ 1".into());
    }
    for &s in g.generators() {
        for h in 0..n {
            if q[g.mul(s, h)] != d.multiply_unchecked(&q[s], &q[h]) {
                return Err(format!("ψ(ε#sh) ≠ ψ(ε#s)ψ(ε#h) at s={s}, h={h}"));
            }
        }
        for x in 0..n {
            if d.multiply_unchecked(&q[s], &p[x]) != d.multiply_unchecked(&p[g.conj(s, x)], &q[s]) {
                return Err(format!("conjugation relation fails at s={s}, g={x}"));
            }
        }
    }
    for x in 0..n {
        for h in 0..n {
            if img[basis(n, x, h) as usize] != d.multiply_unchecked(&p[x], &q[h]) {
                return Err(format!("ψ(e_g#h) ≠ ψ(e_g#1)ψ(ε#h) at g={x}, h={h}"));
            }
        }
    }
    // coalgebra and antipode on algebra generators
    for &s in g.generators() {
        grouplike_at(map, d, &d.group_element(s)).map_err(|m| format!("{m} at ε#{s}"))?;
    }
    let ab = g.abelianization();
    let ee = g.exponent() as u64;
    for j in 0..ab.rank() {
        let mut chi = vec![0u32; ab.rank()];
        chi[j] = 1;
        let x = DoubleElement::from_terms(
            n,
            (0..n).map(|y| {
                let ph = ab.pairing(&chi, ab.coords(y).unwrap(), ee);
                (basis(n, y, 0), CycScalar::root(e, ph as i64))
            }),
        );
        grouplike_at(map, d, &x).map_err(|m| format!("{m} at linear character {j}"))?;
    }
    if !g.is_abelian() {
        // values 1, 2, … off a transversal of G', 0 on it
        let mut seen = vec![false; ab.size()];
        let mut next = 0i64;
        let f = DoubleElement::from_terms(
            n,
            (0..n).filter_map(|y| {
                let c = ab.index_of(y).unwrap();
                if !seen[c] {
                    seen[c] = true;
                    return None;
                }
                next += 1;
                Some((basis(n, y, 0), CycScalar::from_int(e, next)))
            }),
        );
        coalgebra_at(map, d, &img, &f).map_err(|m| format!("{m} at separating function"))?;
    }
    Ok(())
}
