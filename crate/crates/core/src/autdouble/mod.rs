//! Aut(D(G)): generators, order, element enumeration, canonical
//! factorization, the restriction kernel N and the normality/complement
//! predicates.
//!
//! Three construction paths are used:
//!
//! * purely non-abelian G: every automorphism factors uniquely as
//!   Λ(p)∘B(ω)∘S(w, v) with p ∈ End(Z(G)), ω ∈ BCh(G) and (w, v) ∈
//!   SpAut_c(G), so elements are indexed by triples;
//! * abelian G: D(G) ≅ 𝕜[Ĝ×G] and Aut(D(G)) ≅ Aut(Ĝ×G), the invertible
//!   2×2 matrices of homomorphisms;
//! * G = C × H with C abelian and H purely non-abelian: the direct product
//!   of the two answers when the orders |C|² and |Z(H)|·|H/H'| are coprime,
//!   otherwise the subgroup generated by all known families (a lower bound).

mod abelian;
mod factor;
mod kernel;
mod product;

use std::collections::{HashMap, HashSet};

use num_integer::Integer;
use rand::Rng;
use serde_json::{json, Value};

use crate::autgrp::{automorphism_group, central_automorphisms, AutGroup, SpAutcElement, DEFAULT_MAX_AUT};
use crate::double::{LinearMap, MorphQuadruple, PMap};
use crate::error::{Error, Result};
use crate::groups::{abelian_direct_factor, enumerate_homs, hom_count, AbHom, Bicharacter, FiniteGroup};

pub use abelian::{abelian_aut_order, brute_force_aut_abelian, BRUTE_FORCE_CAP};
pub use factor::{canonical_factorization, FactoredElement};
pub use kernel::{
    kernel_n, lambda_c_subgroup, predicates, FilterScope, KernelN, PredicateValue, Predicates,
};
pub use product::{embed_product, Factor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Classification {
    Abelian,
    PurelyNonabelian,
    MixedCoprime,
    MixedIncomplete,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Abelian => "abelian",
            Classification::PurelyNonabelian => "purely-nonabelian",
            Classification::MixedCoprime => "mixed-coprime",
            Classification::MixedIncomplete => "mixed-incomplete",
        }
    }
}

/// How elements are enumerated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Lazy expansion of (λ, ω, (w, v)) triples.
    Factored,
    /// Invertible hom-matrices, materialized by closure when small.
    AbelianMatrices,
    /// Explicit list from exhaustive search over hom-matrices.
    BruteForce,
    /// Closure of embedded factor generators.
    DirectProduct,
    /// Closure of the generator families (lower bound only).
    GeneratedClosure,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Factored => "factored",
            Strategy::AbelianMatrices => "abelian-matrices",
            Strategy::BruteForce => "brute-force",
            Strategy::DirectProduct => "direct-product",
            Strategy::GeneratedClosure => "generated-closure",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Largest group order that may be enumerated element by element.
    pub max_enum: u128,
    /// Largest order for which the closure of the generators is computed
    /// explicitly as an independent cross-check.
    pub closure_cap: u128,
    /// Cap on |Aut(G)|.
    pub max_aut: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_enum: 1_000_000,
            closure_cap: 10_000,
            max_aut: DEFAULT_MAX_AUT,
        }
    }
}

/// The four factors of the order formula, each computed independently.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderComponents {
    /// |End(Z(G))|
    pub end_z: u128,
    /// |BCh(G)| = |Hom(G/G', Ĝ)|
    pub bch: u128,
    /// |Aut_c(G)|
    pub autc: u128,
    /// |Aut(G)|
    pub aut: u128,
}

impl OrderComponents {
    pub fn product(&self) -> u128 {
        self.end_z * self.bch * self.autc * self.aut
    }

    pub fn to_json(&self) -> Value {
        json!({
            "end_z": json_u128(self.end_z),
            "bch": json_u128(self.bch),
            "autc": json_u128(self.autc),
            "aut": json_u128(self.aut),
        })
    }
}

/// Large counts are emitted as JSON numbers when they fit in 64 bits.
pub fn json_u128(x: u128) -> Value {
    u64::try_from(x).map_or_else(|_| Value::String(x.to_string()), Value::from)
}

/// Index data for the factored form: End(Z(G)) and BCh(G) in enumeration
/// order; SpAut_c(G) is indexed as (c-index, v-index) over Aut_c × Aut.
#[derive(Clone, Debug)]
pub struct Families {
    pub lambda: Vec<AbHom>,
    pub bch: Vec<Bicharacter>,
    lambda_index: HashMap<AbHom, usize>,
    bch_index: HashMap<Bicharacter, usize>,
}

impl Families {
    fn new(g: &FiniteGroup) -> Self {
        let zf = g.center_structure().factors();
        let lambda = enumerate_homs(zf, zf);
        let bch = Bicharacter::all(g);
        Families {
            lambda_index: lambda.iter().cloned().enumerate().map(|(i, h)| (h, i)).collect(),
            bch_index: bch.iter().cloned().enumerate().map(|(i, b)| (b, i)).collect(),
            lambda,
            bch,
        }
    }
}

/// Aut(D(G)) for a fixed group G. Immutable once built.
#[derive(Clone, Debug)]
pub struct AutDG {
    group: FiniteGroup,
    classification: Classification,
    strategy: Strategy,
    order: u128,
    exact: bool,
    components: OrderComponents,
    generators: Vec<MorphQuadruple>,
    elements: Option<Vec<MorphQuadruple>>,
    families: Option<Families>,
    closure_order: Option<u128>,
    aut: AutGroup,
    autc: AutGroup,
    options: BuildOptions,
}

impl AutDG {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn classification(&self) -> Classification {
        self.classification
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    /// The order; a lower bound when `is_exact()` is false.
    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn components(&self) -> OrderComponents {
        self.components
    }

    pub fn generators(&self) -> &[MorphQuadruple] {
        &self.generators
    }

    /// Sorted explicit element list, when materialized.
    pub fn elements(&self) -> Option<&[MorphQuadruple]> {
        self.elements.as_deref()
    }

    /// Size of the explicitly computed closure of the generators.
    pub fn closure_order(&self) -> Option<u128> {
        self.closure_order
    }

    pub fn families(&self) -> Option<&Families> {
        self.families.as_ref()
    }

    pub fn aut(&self) -> &AutGroup {
        &self.aut
    }

    pub fn autc(&self) -> &AutGroup {
        &self.autc
    }

    pub fn options(&self) -> BuildOptions {
        self.options
    }

    /// Elements can be listed one by one (exact order within `max_enum`).
    pub fn is_enumerable(&self) -> bool {
        self.exact
            && self.order <= self.options.max_enum
            && (self.elements.is_some() || self.families.is_some())
    }

    /// The idx-th element in the deterministic order: lexicographic on
    /// (λ-index, ω-index, SpAut_c-index) for the factored form, sorted order
    /// for a materialized list.
    pub fn element(&self, idx: u128) -> Result<Option<MorphQuadruple>> {
        if let Some(els) = &self.elements {
            return Ok(usize::try_from(idx).ok().and_then(|i| els.get(i)).cloned());
        }
        if self.families.is_some() {
            if idx >= self.order {
                return Ok(None);
            }
            return self.factored_element(idx)?.recompose(&self.group).map(Some);
        }
        Err(Error::size("elements of this automorphism group are not enumerable"))
    }

    /// The factored triple at a given index.
    pub fn factored_element(&self, idx: u128) -> Result<FactoredElement> {
        let fam = self
            .families
            .as_ref()
            .ok_or_else(|| Error::pre("no factored form for this group"))?;
        let ns = (self.autc.order() * self.aut.order()) as u128;
        let nb = fam.bch.len() as u128;
        let si = (idx % ns) as usize;
        let ri = ((idx / ns) % nb) as usize;
        let li = (idx / ns / nb) as usize;
        let (ci, vi) = (si / self.aut.order(), si % self.aut.order());
        let v = self.aut.get(vi).clone();
        let w = v.after(&self.autc.get(ci).inverse());
        Ok(FactoredElement {
            lambda: fam.lambda[li].clone(),
            r: fam.bch[ri].clone(),
            s: SpAutcElement { w, v },
        })
    }

    /// Inverse of `factored_element`.
    pub fn index_of_factored(&self, f: &FactoredElement) -> Option<u128> {
        let fam = self.families.as_ref()?;
        let li = *fam.lambda_index.get(&f.lambda)? as u128;
        let ri = *fam.bch_index.get(&f.r)? as u128;
        let vi = self.aut.index_of(&f.s.v)?;
        let c = f.s.w.inverse().after(&f.s.v);
        let ci = self.autc.index_of(&c)?;
        let ns = (self.autc.order() * self.aut.order()) as u128;
        let si = (ci * self.aut.order() + vi) as u128;
        Some((li * fam.bch.len() as u128 + ri) * ns + si)
    }

    /// Canonical factorization, available for purely non-abelian G.
    pub fn factorize(&self, q: &MorphQuadruple) -> Result<FactoredElement> {
        if self.classification != Classification::PurelyNonabelian {
            return Err(Error::pre("canonical factorization needs a purely non-abelian group"));
        }
        canonical_factorization(&self.group, q)
    }

    /// Visit every element in the deterministic order.
    pub fn for_each_element(
        &self,
        mut f: impl FnMut(u128, &MorphQuadruple) -> Result<()>,
    ) -> Result<()> {
        if !self.is_enumerable() {
            return Err(Error::size(format!(
                "refusing to enumerate {} elements (cap {})",
                self.order, self.options.max_enum
            )));
        }
        if let Some(els) = &self.elements {
            for (i, q) in els.iter().enumerate() {
                f(i as u128, q)?;
            }
            return Ok(());
        }
        for idx in 0..self.order {
            let q = self.factored_element(idx)?.recompose(&self.group)?;
            f(idx, &q)?;
        }
        Ok(())
    }

    /// Membership in Aut(D(G)) (or in the generated subgroup for the
    /// mixed-incomplete case).
    pub fn contains(&self, q: &MorphQuadruple) -> Result<bool> {
        let g = &self.group;
        if let Some(els) = &self.elements {
            return Ok(els.binary_search(q).is_ok());
        }
        if self.families.is_some() {
            return match canonical_factorization(g, q) {
                Ok(f) => Ok(f.s.is_valid(g) && f.recompose(g)? == *q),
                Err(Error::Invariant(_)) => Ok(false),
                Err(e) => Err(e),
            };
        }
        if q.validate_types(g).is_err() || !q.check_compatibility(g).holds() {
            return Ok(false);
        }
        q.is_bijective(g)
    }

    /// A random element: uniform for enumerable forms, otherwise a random
    /// word of length 24 in the generators.
    pub fn random_element(&self, rng: &mut impl Rng) -> Result<MorphQuadruple> {
        if let Some(els) = &self.elements {
            return Ok(els[rng.gen_range(0..els.len())].clone());
        }
        if self.families.is_some() {
            return self
                .factored_element(rng.gen_range(0..self.order))?
                .recompose(&self.group);
        }
        let mut q = MorphQuadruple::identity(&self.group);
        if self.generators.is_empty() {
            return Ok(q);
        }
        for _ in 0..24 {
            let s = &self.generators[rng.gen_range(0..self.generators.len())];
            q = multiply(&self.group, s, &q)?;
        }
        Ok(q)
    }

    /// Report JSON: classification, order, components, generators and the
    /// optional kernel and predicate sections.
    pub fn report(&self, kernel: Option<&KernelN>, preds: Option<&Predicates>) -> Value {
        let g = &self.group;
        json!({
            "group": {"name": g.name(), "order": g.order()},
            "classification": self.classification.as_str(),
            "strategy": self.strategy.as_str(),
            "order": json_u128(self.order),
            "order_is_exact": self.exact,
            "closure_order": self.closure_order.map(json_u128),
            "order_formula_components": self.components.to_json(),
            "predicates": preds.map(Predicates::to_json),
            "kernel_N": kernel.map(KernelN::to_json),
            "generators": self.generators.iter().map(|q| q.to_json(g)).collect::<Vec<_>>(),
        })
    }
}

/// Build Aut(D(G)).
/// The classification `build_aut` will report, without building anything.
pub fn classify(g: &FiniteGroup) -> Classification {
    if g.is_abelian() {
        return Classification::Abelian;
    }
    match abelian_direct_factor(g) {
        None => Classification::PurelyNonabelian,
        Some(dec) if product::is_coprime(g, &dec) => Classification::MixedCoprime,
        Some(_) => Classification::MixedIncomplete,
    }
}

pub fn build_aut(g: &FiniteGroup, opts: &BuildOptions) -> Result<AutDG> {
    let aut = automorphism_group(g, opts.max_aut)?;
    let autc = central_automorphisms(g, &aut);
    let components = order_components(g, &aut, &autc);
    let base = AutDG {
        group: g.clone(),
        classification: Classification::Abelian,
        strategy: Strategy::AbelianMatrices,
        order: 0,
        exact: true,
        components,
        generators: Vec::new(),
        elements: None,
        families: None,
        closure_order: None,
        aut,
        autc,
        options: *opts,
    };
    if g.is_abelian() {
        return abelian::build(base);
    }
    match abelian_direct_factor(g) {
        None => build_purely_nonabelian(base),
        Some(dec) => product::build(base, &dec),
    }
}

pub fn build_aut_default(g: &FiniteGroup) -> Result<AutDG> {
    build_aut(g, &BuildOptions::default())
}

fn order_components(g: &FiniteGroup, aut: &AutGroup, autc: &AutGroup) -> OrderComponents {
    let zf = g.center_structure().factors();
    let af = g.abelianization().factors();
    OrderComponents {
        end_z: hom_count(zf, zf),
        bch: hom_count(af, af),
        autc: autc.order() as u128,
        aut: aut.order() as u128,
    }
}

fn build_purely_nonabelian(mut a: AutDG) -> Result<AutDG> {
    let g = a.group.clone();
    a.classification = Classification::PurelyNonabelian;
    a.strategy = Strategy::Factored;
    a.order = a.components.product();
    a.generators = family_generators(&g, &a.aut, &a.autc);
    a.families = Some(Families::new(&g));
    if a.order <= a.options.closure_cap {
        let els = closure(&g, &a.generators, a.options.closure_cap)?
            .ok_or_else(|| Error::invariant("closure exceeds the order formula"))?;
        a.closure_order = Some(els.len() as u128);
    }
    Ok(a)
}

/// Generators of the three families Λ(G), BCh(G), SpAut_c(G): elementary
/// homomorphisms of End(Z(G)) and BCh(G), (c, id) for generators c of
/// Aut_c(G) and (σ, σ) for generators σ of Aut(G).
pub(crate) fn family_generators(g: &FiniteGroup, aut: &AutGroup, autc: &AutGroup) -> Vec<MorphQuadruple> {
    let mut gens = Vec::new();
    let zf = g.center_structure().factors();
    for h in elementary_homs(zf, zf) {
        gens.push(MorphQuadruple::from_pmap(g, &PMap::from_center_hom(g, &h)));
    }
    let af = g.abelianization().factors();
    for h in elementary_homs(af, af) {
        gens.push(MorphQuadruple::from_bicharacter(g, &Bicharacter { matrix: h.images }));
    }
    let id = crate::groups::GroupHom::identity(g.order());
    for c in autc.generator_homs() {
        gens.push(MorphQuadruple::from_spautc(g, &c, &id));
    }
    for s in aut.generator_homs() {
        gens.push(MorphQuadruple::from_automorphism(g, &s));
    }
    gens
}

/// Additive generators of Hom(A, B) for coordinate groups: one nonzero
/// slot at a time, holding the smallest admissible value.
pub(crate) fn elementary_homs(dom: &[u64], cod: &[u64]) -> Vec<AbHom> {
    let mut out = Vec::new();
    for (i, &d) in dom.iter().enumerate() {
        for (j, &c) in cod.iter().enumerate() {
            let gcd = d.gcd(&c);
            if gcd > 1 {
                let mut h = AbHom::zero(dom, cod);
                h.images[i][j] = (c / gcd) as u32;
                out.push(h);
            }
        }
    }
    out
}

/// Composition a∘b, falling back to composing the induced linear maps when
/// the closed form does not apply.
pub fn multiply(g: &FiniteGroup, a: &MorphQuadruple, b: &MorphQuadruple) -> Result<MorphQuadruple> {
    match a.compose(b, g) {
        Err(Error::Precondition(_)) => {
            let m: LinearMap = a.to_map(g)?.compose(&b.to_map(g)?);
            MorphQuadruple::extract(&m, g)
        }
        other => other,
    }
}

/// Inverse of an automorphism, as its last nontrivial power.
pub fn inverse(g: &FiniteGroup, q: &MorphQuadruple) -> Result<MorphQuadruple> {
    let mut prev = MorphQuadruple::identity(g);
    let mut cur = q.clone();
    for _ in 0..1_000_000 {
        if cur.is_identity() {
            return Ok(prev);
        }
        prev = cur.clone();
        cur = multiply(g, q, &cur)?;
    }
    Err(Error::invariant("element of unbounded order"))
}

/// Closure of a generating set under composition (left multiplication by
/// generators from the identity), sorted; None when it exceeds `cap`.
pub fn closure(g: &FiniteGroup, gens: &[MorphQuadruple], cap: u128) -> Result<Option<Vec<MorphQuadruple>>> {
    let id = MorphQuadruple::identity(g);
    let mut seen: HashSet<MorphQuadruple> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        i += 1;
        for s in gens {
            let y = multiply(g, s, &x)?;
            if !seen.contains(&y) {
                if seen.len() as u128 >= cap {
                    return Ok(None);
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    queue.sort();
    Ok(Some(queue))
}

/// Λ(G): one quadruple (p, id, 0, id) per element of End(Z(G)).
pub fn lambda_subgroup(g: &FiniteGroup) -> Vec<MorphQuadruple> {
    let zf = g.center_structure().factors();
    enumerate_homs(zf, zf)
        .iter()
        .map(|h| MorphQuadruple::from_pmap(g, &PMap::from_center_hom(g, h)))
        .collect()
}

/// BCh(G) embedded as the maps e_g # h ↦ ω(h, g) e_g # h.
pub fn bch_subgroup(g: &FiniteGroup) -> Vec<MorphQuadruple> {
    Bicharacter::all(g)
        .iter()
        .map(|r| MorphQuadruple::from_bicharacter(g, r))
        .collect()
}

/// SpAut_c(G) embedded as e_g # h ↦ e_{w(g)} # v(h).
pub fn spautc_subgroup(g: &FiniteGroup, aut: &AutGroup, autc: &AutGroup) -> Vec<MorphQuadruple> {
    crate::autgrp::spautc(aut, autc)
        .iter()
        .map(|s| MorphQuadruple::from_spautc(g, &s.w, &s.v))
        .collect()
}

/// Every generator passes the compatibility check and is bijective, and the
/// induced map passes the Hopf oracle.
pub fn verify_element(g: &FiniteGroup, q: &MorphQuadruple) -> std::result::Result<(), String> {
    if let Some((rel, w)) = q.check_compatibility(g).failure {
        return Err(format!("{rel} fails at {w}"));
    }
    let m = q.to_map(g).map_err(|e| e.to_string())?;
    crate::double::check_hopf_morphism(&m, g, crate::double::OracleMode::Auto)?;
    if !m.is_bijective() {
        return Err("induced map is not bijective".into());
    }
    Ok(())
}
