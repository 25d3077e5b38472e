//! Elements of D(G) and its structure maps.
//!
//! The basis element e_g # h is stored under the flat index g·n + h.

use std::collections::BTreeMap;

use crate::cyclotomic::CycScalar;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// Flat basis index of e_g # h.
#[inline]
pub fn basis(n: usize, g: usize, h: usize) -> u32 {
    (g * n + h) as u32
}

/// The pair (g, h) of a flat basis index.
#[inline]
pub fn unbasis(n: usize, b: u32) -> (usize, usize) {
    (b as usize / n, b as usize % n)
}

/// A sparse vector over the basis e_g # h of D(G). Zero coefficients are
/// never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DoubleElement {
    n: usize,
    terms: BTreeMap<u32, CycScalar>,
}

impl DoubleElement {
    pub fn zero(n: usize) -> Self {
        DoubleElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element e_g # h with coefficient c.
    pub fn monomial(n: usize, g: usize, h: usize, c: CycScalar) -> Self {
        let mut x = Self::zero(n);
        x.add_term(basis(n, g, h), &c);
        x
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (u32, CycScalar)>) -> Self {
        let mut x = Self::zero(n);
        for (b, c) in terms {
            x.add_term(b, &c);
        }
        x
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms (flat basis index, coefficient) in increasing index order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &CycScalar)> {
        self.terms.iter().map(|(&b, c)| (b, c))
    }

    pub fn coeff(&self, g: usize, h: usize) -> Option<&CycScalar> {
        self.terms.get(&basis(self.n, g, h))
    }

    pub fn add_term(&mut self, b: u32, c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b, &c.neg_ref());
        }
        out
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        Self::from_terms(self.n, self.terms().map(|(b, x)| (b, x * c)))
    }
}

/// An element of D(G) ⊗ D(G), keyed by pairs of flat basis indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tensor {
    terms: BTreeMap<(u32, u32), CycScalar>,
}

impl Tensor {
    pub fn add_term(&mut self, key: (u32, u32), c: &CycScalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Accumulate c · (x ⊗ y).
    pub fn add_outer(&mut self, x: &DoubleElement, y: &DoubleElement, c: &CycScalar) {
        for (bx, cx) in x.terms() {
            let cxc = cx * c;
            for (by, cy) in y.terms() {
                self.add_term((bx, by), &(&cxc * cy));
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &CycScalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

/// The Hopf algebra D(G) = 𝕜^G # 𝕜G over Q(ζ_e), e = exp(G).
///
/// Multiplication: (e_g # x)(e_h # y) = δ_{g, x h x⁻¹} e_g # xy.
/// Comultiplication: Δ(e_g # h) = Σ_{ab=g} (e_b # h) ⊗ (e_a # h).
/// Counit ε(e_g # h) = δ_{g,1}; antipode S(e_g # h) = e_{h⁻¹g⁻¹h} # h⁻¹.
#[derive(Clone, Copy, Debug)]
pub struct Double<'a> {
    g: &'a FiniteGroup,
    e: u32,
}

impl<'a> Double<'a> {
    pub fn new(g: &'a FiniteGroup) -> Self {
        Double {
            g,
            e: g.exponent() as u32,
        }
    }

    pub fn group(&self) -> &'a FiniteGroup {
        self.g
    }

    /// The conductor of the scalar field.
    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn dim(&self) -> usize {
        self.g.order() * self.g.order()
    }

    fn check(&self, x: &DoubleElement) -> Result<()> {
        if x.n != self.g.order() {
            return Err(Error::pre(format!(
                "element of a double of order-{} group used with order-{} group",
                x.n,
                self.g.order()
            )));
        }
        Ok(())
    }

    pub fn one_scalar(&self) -> CycScalar {
        CycScalar::one(self.e)
    }

    pub fn basis_element(&self, g: usize, h: usize) -> DoubleElement {
        DoubleElement::monomial(self.g.order(), g, h, self.one_scalar())
    }

    /// The unit ε # 1 = Σ_g e_g # 1.
    pub fn unit(&self) -> DoubleElement {
        let n = self.g.order();
        DoubleElement::from_terms(n, (0..n).map(|g| (basis(n, g, 0), self.one_scalar())))
    }

    /// ε # h = Σ_g e_g # h.
    pub fn group_element(&self, h: usize) -> DoubleElement {
        let n = self.g.order();
        DoubleElement::from_terms(n, (0..n).map(|g| (basis(n, g, h), self.one_scalar())))
    }

    /// The two-sided integral e_1 # Σ_h h.
    pub fn integral(&self) -> DoubleElement {
        let n = self.g.order();
        DoubleElement::from_terms(n, (0..n).map(|h| (basis(n, 0, h), self.one_scalar())))
    }

    pub fn multiply(&self, x: &DoubleElement, y: &DoubleElement) -> Result<DoubleElement> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply_unchecked(x, y))
    }

    pub(crate) fn multiply_unchecked(&self, x: &DoubleElement, y: &DoubleElement) -> DoubleElement {
        let n = self.g.order();
        let g = self.g;
        let mut by_first: Vec<Vec<(usize, &CycScalar)>> = vec![Vec::new(); n];
        for (b, c) in y.terms() {
            let (h, yy) = unbasis(n, b);
            by_first[h].push((yy, c));
        }
        let mut out = DoubleElement::zero(n);
        for (b, c) in x.terms() {
            let (a, xx) = unbasis(n, b);
            // need a = xx·h·xx⁻¹, i.e. h = xx⁻¹·a·xx
            let h = g.conj(g.inv(xx), a);
            for &(yy, d) in &by_first[h] {
                out.add_term(basis(n, a, g.mul(xx, yy)), &(c * d));
            }
        }
        out
    }

    pub fn comultiply(&self, x: &DoubleElement) -> Result<Tensor> {
        self.check(x)?;
        let n = self.g.order();
        let mut t = Tensor::default();
        for (bidx, c) in x.terms() {
            let (gg, h) = unbasis(n, bidx);
            for a in 0..n {
                let b = self.g.mul(self.g.inv(a), gg);
                t.add_term((basis(n, b, h), basis(n, a, h)), c);
            }
        }
        Ok(t)
    }

    pub fn counit(&self, x: &DoubleElement) -> Result<CycScalar> {
        self.check(x)?;
        let n = self.g.order();
        let mut acc = CycScalar::zero(self.e);
        for (b, c) in x.terms() {
            if unbasis(n, b).0 == 0 {
                acc += c;
            }
        }
        Ok(acc)
    }

    pub fn antipode(&self, x: &DoubleElement) -> Result<DoubleElement> {
        self.check(x)?;
        let n = self.g.order();
        let g = self.g;
        Ok(DoubleElement::from_terms(
            n,
            x.terms().map(|(b, c)| {
                let (a, h) = unbasis(n, b);
                let hi = g.inv(h);
                (basis(n, g.conj(hi, g.inv(a)), hi), c.clone())
            }),
        ))
    }

    /// (f ⊗ f')(t) for a linear map given on basis elements.
    pub fn tensor_map(&self, t: &Tensor, f: impl Fn(u32) -> DoubleElement) -> Tensor {
        let n = self.g.order();
        let mut cache: BTreeMap<u32, DoubleElement> = BTreeMap::new();
        let mut out = Tensor::default();
        for (&(b1, b2), c) in t.terms() {
            for b in [b1, b2] {
                cache.entry(b).or_insert_with(|| f(b));
            }
            let (x, y) = (&cache[&b1], &cache[&b2]);
            debug_assert_eq!(x.n, n);
            out.add_outer(x, y, c);
        }
        out
    }

    /// Multiply the two tensor legs: m(t).
    pub fn multiply_legs(&self, t: &Tensor) -> DoubleElement {
        let n = self.g.order();
        let mut out = DoubleElement::zero(n);
        for (&(b1, b2), c) in t.terms() {
            let x = DoubleElement::from_terms(n, [(b1, c.clone())]);
            let y = DoubleElement::from_terms(n, [(b2, self.one_scalar())]);
            let p = self.multiply_unchecked(&x, &y);
            for (b, d) in p.terms() {
                out.add_term(b, d);
            }
        }
        out
    }

    /// Exhaustive check of the Hopf-algebra axioms on basis elements:
    /// associativity, unit, coassociativity, counit, multiplicativity of Δ
    /// and ε, the antipode identities S∗id = id∗S = ηε, and the two-sided
    /// integral property of e_1 # Σ_h h. Cost is O(n⁶); meant for small groups.
    pub fn verify_axioms(&self) -> std::result::Result<(), String> {
        let n = self.g.order();
        let bas: Vec<DoubleElement> = (0..n * n)
            .map(|b| {
                let (g, h) = unbasis(n, b as u32);
                self.basis_element(g, h)
            })
            .collect();
        let one = self.unit();
        let lam = self.integral();
        let products: Vec<Vec<DoubleElement>> = bas
            .iter()
            .map(|x| bas.iter().map(|y| self.multiply_unchecked(x, y)).collect())
            .collect();
        let deltas: Vec<Tensor> = bas.iter().map(|x| self.comultiply(x).unwrap()).collect();
        for (i, x) in bas.iter().enumerate() {
            if self.multiply_unchecked(&one, x) != *x || self.multiply_unchecked(x, &one) != *x {
                return Err(format!("unit fails at basis {i}"));
            }
            for (j, y) in bas.iter().enumerate() {
                let xy = &products[i][j];
                for (k, z) in bas.iter().enumerate() {
                    let l = self.multiply_unchecked(xy, z);
                    let r = self.multiply_unchecked(x, &products[j][k]);
                    if l != r {
                        return Err(format!("associativity fails at ({i},{j},{k})"));
                    }
                }
                // Δ(xy) = Δ(x)Δ(y)
                let lhs = self.comultiply(xy).unwrap();
                let mut rhs = Tensor::default();
                for (&(a1, a2), c) in deltas[i].terms() {
                    for (&(b1, b2), d) in deltas[j].terms() {
                        let p1 = &products[a1 as usize][b1 as usize];
                        let p2 = &products[a2 as usize][b2 as usize];
                        rhs.add_outer(p1, p2, &(c * d));
                    }
                }
                if lhs != rhs {
                    return Err(format!("comultiplication not multiplicative at ({i},{j})"));
                }
                let exy = self.counit(xy).unwrap();
                let exey = &self.counit(x).unwrap() * &self.counit(y).unwrap();
                if exy != exey {
                    return Err(format!("counit not multiplicative at ({i},{j})"));
                }
            }
            // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ, compared as maps to triples
            let mut left: BTreeMap<(u32, u32, u32), CycScalar> = BTreeMap::new();
            let mut right: BTreeMap<(u32, u32, u32), CycScalar> = BTreeMap::new();
            for (&(a1, a2), c) in deltas[i].terms() {
                for (&(b1, b2), d) in deltas[a1 as usize].terms() {
                    acc3(&mut left, (b1, b2, a2), &(c * d));
                }
                for (&(b1, b2), d) in deltas[a2 as usize].terms() {
                    acc3(&mut right, (a1, b1, b2), &(c * d));
                }
            }
            if left != right {
                return Err(format!("coassociativity fails at basis {i}"));
            }
            // counit: (ε⊗id)Δ = id = (id⊗ε)Δ
            let mut l = DoubleElement::zero(n);
            let mut r = DoubleElement::zero(n);
            for (&(a1, a2), c) in deltas[i].terms() {
                l.add_term(a2, &(c * &self.counit(&bas[a1 as usize]).unwrap()));
                r.add_term(a1, &(c * &self.counit(&bas[a2 as usize]).unwrap()));
            }
            if l != *x || r != *x {
                return Err(format!("counit axiom fails at basis {i}"));
            }
            // antipode: m(S⊗id)Δ = ηε = m(id⊗S)Δ
            let eps = one.scale(&self.counit(x).unwrap());
            let mut sl = DoubleElement::zero(n);
            let mut sr = DoubleElement::zero(n);
            for (&(a1, a2), c) in deltas[i].terms() {
                let s1 = self.antipode(&bas[a1 as usize]).unwrap();
                let s2 = self.antipode(&bas[a2 as usize]).unwrap();
                sl = sl.add(&self.multiply_unchecked(&s1, &bas[a2 as usize]).scale(c));
                sr = sr.add(&self.multiply_unchecked(&bas[a1 as usize], &s2).scale(c));
            }
            if sl != eps || sr != eps {
                return Err(format!("antipode axiom fails at basis {i}"));
            }
            // integral: xΛ = ε(x)Λ = Λx
            let el = lam.scale(&self.counit(x).unwrap());
            if self.multiply_unchecked(x, &lam) != el || self.multiply_unchecked(&lam, x) != el {
                return Err(format!("integral property fails at basis {i}"));
            }
        }
        Ok(())
    }

}

fn acc3(m: &mut BTreeMap<(u32, u32, u32), CycScalar>, k: (u32, u32, u32), c: &CycScalar) {
    let e = m.entry(k).or_insert_with(|| CycScalar::zero(c.conductor()));
    *e += c;
    if e.is_zero() {
        m.remove(&k);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library::*;

    #[test]
    fn basic_rules() {
        let g = symmetric(3);
        let d = Double::new(&g);
        let x = d.basis_element(3, 0);
        assert_eq!(d.multiply(&x, &x).unwrap(), x);
        // (e_g # x)(e_h # y) = 0 unless g = x h x⁻¹
        for gg in 0..6 {
            for xx in 0..6 {
                for h in 0..6 {
                    let p = d
                        .multiply(&d.basis_element(gg, xx), &d.basis_element(h, 1))
                        .unwrap();
                    assert_eq!(p.is_zero(), gg != g.conj(xx, h));
                }
            }
        }
        assert!(d.counit(&d.unit()).unwrap().is_one());
        let y = d.basis_element(2, 4);
        assert_eq!(d.multiply(&d.unit(), &y).unwrap(), y);
        assert!(d.multiply(&x, &DoubleElement::zero(5)).is_err());
    }

    #[test]
    fn hopf_axioms_small_groups() {
        for g in groups_up_to_16().into_iter().filter(|g| g.order() <= 12) {
            let d = Double::new(&g);
            assert_eq!(d.verify_axioms(), Ok(()), "{}", g.name());
        }
    }
}
