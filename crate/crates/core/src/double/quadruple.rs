//! Structured Hopf endomorphisms of D(G): quadruples (p, u, r, v) with u
//! dual to a group homomorphism u* and r given by a bicharacter ω.
//!
//! The induced map is
//!
//!   ψ(e_g # h) = Σ_{y,z} λ(g·u*(y)⁻¹, z) ζ^{ω(h,y)} e_y # z·v(h).

use std::fmt;

use serde_json::{json, Value};

use super::element::{basis, Double, DoubleElement};
use super::linmap::LinearMap;
use super::pmap::PMap;
use crate::cyclotomic::{format_ratio, parse_ratio, CycScalar};
use crate::error::{Error, Result};
use crate::groups::{add_coords, AbelianStructure, Bicharacter, FiniteGroup, GroupHom, Subgroup};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MorphQuadruple {
    pub p: PMap,
    /// u* : G → G, so that u(χ) = χ∘u*.
    pub ustar: GroupHom,
    pub r: Bicharacter,
    pub v: GroupHom,
}

/// The compatibility relations between the four components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Component types: p a Hopf map, u* and v homomorphisms, ω a bicharacter.
    TypeInvariants,
    /// u(a₁)⊗p(a₂) = u(a₂)⊗p(a₁).
    PUCocommutation,
    /// v(h)p(b)v(h)⁻¹ = p(h⇀b).
    VPConjugation,
    /// v(h)⇀u(b) = u(h⇀b).
    VUEquivariance,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::TypeInvariants => "type invariants",
            Relation::PUCocommutation => "p-u cocommutation",
            Relation::VPConjugation => "v-p conjugation",
            Relation::VUEquivariance => "v-u equivariance",
        })
    }
}

/// Outcome of a compatibility check: `failure` names the first relation
/// that does not hold, with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Compatibility {
    pub failure: Option<(Relation, String)>,
}

impl Compatibility {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    pub fn failed_relation(&self) -> Option<Relation> {
        self.failure.as_ref().map(|(r, _)| *r)
    }
}

impl MorphQuadruple {
    pub fn identity(g: &FiniteGroup) -> Self {
        let n = g.order();
        MorphQuadruple {
            p: PMap::trivial(g),
            ustar: GroupHom::identity(n),
            r: Bicharacter::zero(g),
            v: GroupHom::identity(n),
        }
    }

    /// e_g # h ↦ e_{σ(g)} # σ(h).
    pub fn from_automorphism(g: &FiniteGroup, sigma: &GroupHom) -> Self {
        MorphQuadruple {
            ustar: sigma.inverse(),
            v: sigma.clone(),
            ..Self::identity(g)
        }
    }

    /// e_g # h ↦ e_{w(g)} # v(h) for (w, v) ∈ SpAut_c(G).
    pub fn from_spautc(g: &FiniteGroup, w: &GroupHom, v: &GroupHom) -> Self {
        MorphQuadruple {
            ustar: w.inverse(),
            v: v.clone(),
            ..Self::identity(g)
        }
    }

    /// e_g # h ↦ ζ^{ω(h,g)} e_g # h.
    pub fn from_bicharacter(g: &FiniteGroup, r: &Bicharacter) -> Self {
        MorphQuadruple {
            r: r.clone(),
            ..Self::identity(g)
        }
    }

    /// The Λ-type map with the given p and identity elsewhere.
    pub fn from_pmap(g: &FiniteGroup, p: &PMap) -> Self {
        MorphQuadruple {
            p: p.clone(),
            ..Self::identity(g)
        }
    }

    pub fn is_identity(&self) -> bool {
        self.p.is_trivial() && self.ustar.is_identity() && self.r.is_zero() && self.v.is_identity()
    }

    pub fn validate_types(&self, g: &FiniteGroup) -> std::result::Result<(), String> {
        self.p.validate(g)?;
        if !self.ustar.is_hom(g, g) {
            return Err("u* is not a group homomorphism".into());
        }
        if !self.v.is_hom(g, g) {
            return Err("v is not a group homomorphism".into());
        }
        let k = g.abelianization().rank();
        if self.r.matrix.len() != k
            || self.r.matrix.iter().any(|row| row.len() != k)
            || !self.r.is_valid(g)
        {
            return Err("ω is not a bicharacter on G/G'".into());
        }
        Ok(())
    }

    /// The induced linear map on D(G).
    pub fn to_map(&self, g: &FiniteGroup) -> Result<LinearMap> {
        self.validate_types(g).map_err(Error::invariant)?;
        let n = g.order();
        let e = g.exponent() as u32;
        let lam = self.p.lambda_table(g);
        let om = self.r.table(g);
        let ainv: Vec<usize> = (0..n).map(|y| g.inv(self.ustar.apply(y))).collect();
        let mut cols = Vec::with_capacity(n * n);
        for gg in 0..n {
            for h in 0..n {
                let vh = self.v.apply(h);
                let mut col: Vec<(u32, CycScalar)> = Vec::new();
                for y in 0..n {
                    let a = g.mul(gg, ainv[y]);
                    let ph = om[h * n + y] as i64;
                    for (z, c) in &lam[a] {
                        col.push((basis(n, y, g.mul(*z, vh)), c.mul_root(ph)));
                    }
                }
                col.sort_by_key(|t| t.0);
                cols.push(col);
            }
        }
        Ok(LinearMap::from_raw(n, e, cols))
    }

    /// Literal verification of the compatibility relations.
    pub fn check_compatibility(&self, g: &FiniteGroup) -> Compatibility {
        let fail = |r: Relation, s: String| Compatibility {
            failure: Some((r, s)),
        };
        if let Err(s) = self.validate_types(g) {
            return fail(Relation::TypeInvariants, s);
        }
        let n = g.order();
        let lam = self.p.lambda_table(g);
        // u(a₁)⊗p(a₂) = u(a₂)⊗p(a₁), evaluated on e_g: the e_y-component is
        // p(e_{u*(y)⁻¹g}) on one side and p(e_{g u*(y)⁻¹}) on the other.
        for gg in 0..n {
            for y in 0..n {
                let ai = g.inv(self.ustar.apply(y));
                if lam[g.mul(ai, gg)] != lam[g.mul(gg, ai)] {
                    return fail(
                        Relation::PUCocommutation,
                        format!("g={}, y={}", g.label(gg), g.label(y)),
                    );
                }
            }
        }
        // v(h) p(e_g) v(h)⁻¹ = p(e_{hgh⁻¹})
        for h in 0..n {
            let vh = self.v.apply(h);
            for gg in 0..n {
                let mut lhs: Vec<(usize, CycScalar)> = lam[gg]
                    .iter()
                    .map(|(z, c)| (g.conj(vh, *z), c.clone()))
                    .collect();
                lhs.sort_by_key(|t| t.0);
                if lhs != lam[g.conj(h, gg)] {
                    return fail(
                        Relation::VPConjugation,
                        format!("h={}, g={}", g.label(h), g.label(gg)),
                    );
                }
            }
        }
        // v(h)⇀u(e_g) = u(e_{hgh⁻¹}), i.e. u*(v(h) y v(h)⁻¹) = h u*(y) h⁻¹
        for h in 0..n {
            let vh = self.v.apply(h);
            for y in 0..n {
                if self.ustar.apply(g.conj(vh, y)) != g.conj(h, self.ustar.apply(y)) {
                    return fail(
                        Relation::VUEquivariance,
                        format!("h={}, y={}", g.label(h), g.label(y)),
                    );
                }
            }
        }
        Compatibility { failure: None }
    }

    /// Composition self ∘ q1 (apply q1 first), in closed form.
    ///
    /// Both p-maps must be supported in Z(G), and u₁* must map the support of
    /// p = self.p into Z(G).
    pub fn compose(&self, q1: &MorphQuadruple, g: &FiniteGroup) -> Result<MorphQuadruple> {
        let q2 = self;
        let (PMap::Central { pi: pi1 }, PMap::Central { pi: _ }) = (&q1.p, &q2.p) else {
            return Err(Error::pre("composition needs p-maps supported in the center"));
        };
        let n = g.order();
        let e = g.exponent() as u64;
        let z = g.center_structure();
        let zc = g.center();
        let a2 = q2.p.support(g);
        if a2.iter().any(|&a| !zc.contains(q1.ustar.apply(a))) {
            return Err(Error::pre(
                "composition needs u₁* to map the support of p₂ into the center",
            ));
        }
        let om1 = q1.r.table(g);
        let om2 = q2.r.table(g);
        // v(h) = p₂(r₁(h)) · v₂(v₁(h))
        let v_images: Vec<usize> = (0..n)
            .map(|h| {
                let nu = z.character_coords(e, |j| om1[h * n + z.generators()[j]] as u64)?;
                Ok(g.mul(q2.p.image_of(g, &nu), q2.v.apply(q1.v.apply(h))))
            })
            .collect::<Result<_>>()?;
        // u*(y) = u₁*(u₂*(y)) · β(y), μ(β(y)) = ω₂(p₁(μ), y)
        let f = z.factors();
        let ustar_images: Vec<usize> = (0..n)
            .map(|y| {
                let b: Vec<u32> = pi1
                    .iter()
                    .zip(f)
                    .map(|(&x, &d)| ((om2[x * n + y] as u64 * d / e) % d) as u32)
                    .collect();
                g.mul(q1.ustar.apply(q2.ustar.apply(y)), z.lookup(&b))
            })
            .collect();
        // ω(h, y) = ω₁(h, u₂*(y)) + ω₂(v₁(h), y)
        let r = Bicharacter::from_fn(g, |h, y| {
            (om1[h * n + q2.ustar.apply(y)] as u64 + om2[q1.v.apply(h) * n + y] as u64) % e
        })?;
        // p(μ) = p₂(μ∘u₁*) · v₂(p₁(μ))
        let pi = if q2.p.is_trivial() {
            pi1.iter().map(|&x| q2.v.apply(x)).collect()
        } else {
            let zcoords: Vec<(&[u32], &[u32])> = a2
                .iter()
                .map(|&a| (z.coords(a).unwrap(), z.coords(q1.ustar.apply(a)).unwrap()))
                .collect();
            (0..z.rank())
                .map(|j| {
                    let mut mu = vec![0u32; z.rank()];
                    mu[j] = 1;
                    let nu = (0..z.size())
                        .map(|i| z.coords_of_index(i))
                        .find(|nu| {
                            zcoords
                                .iter()
                                .all(|(a, ua)| z.pairing(nu, a, e) == z.pairing(&mu, ua, e))
                        })
                        .ok_or_else(|| Error::invariant("pulled-back character does not extend"))?;
                    Ok(g.mul(q2.p.image_of(g, &nu), q2.v.apply(pi1[j])))
                })
                .collect::<Result<Vec<_>>>()?
        };
        let q = MorphQuadruple {
            p: PMap::Central { pi },
            ustar: GroupHom::new(ustar_images),
            r,
            v: GroupHom::new(v_images),
        };
        q.validate_types(g)
            .map_err(|s| Error::invariant(format!("composite quadruple: {s}")))?;
        Ok(q)
    }

    /// The flip (u*, v, ω, p) ↦ (v, u*, ωᵀ, p*).
    pub fn flip(&self, g: &FiniteGroup) -> Result<MorphQuadruple> {
        if !self.p.is_central(g) || !matches!(self.p, PMap::Central { .. }) {
            return Err(Error::pre("flip needs central A and B"));
        }
        Ok(MorphQuadruple {
            p: self.p.dual(g)?,
            ustar: self.v.clone(),
            r: self.r.transpose(g),
            v: self.ustar.clone(),
        })
    }

    /// The flip exists and is again compatible.
    pub fn is_flippable(&self, g: &FiniteGroup) -> bool {
        self.flip(g)
            .map(|f| f.check_compatibility(g).holds())
            .unwrap_or(false)
    }

    /// ψ(Λ) = Λ for the integral Λ = e_1 # Σ_h h.
    pub fn preserves_integral(&self, g: &FiniteGroup) -> Result<bool> {
        let m = self.to_map(g)?;
        let d = Double::new(g);
        let lam = d.integral();
        Ok(m.apply(&lam) == lam)
    }

    pub fn is_bijective(&self, g: &FiniteGroup) -> Result<bool> {
        Ok(self.to_map(g)?.is_bijective())
    }

    /// The induced endomorphism (χ, g) ↦ (r(g)u(χ), p(χ)v(g)) of
    /// Γ = Ĝ × G, on indices χ·|G| + g with χ the mixed-radix index of the
    /// dual coordinates over G/G'.
    pub fn restrict_to_grouplikes(&self, g: &FiniteGroup) -> Vec<usize> {
        let n = g.order();
        let e = g.exponent() as u64;
        let ab = g.abelianization();
        let st = self.p.domain_structure(g);
        let mut out = Vec::with_capacity(ab.size() * n);
        for ci in 0..ab.size() {
            let chi = ab.coords_of_index(ci);
            let phase = |x: usize| ab.pairing(&chi, ab.coords(x).unwrap(), e) as u64;
            let u_chi = ab
                .character_coords(e, |j| phase(self.ustar.apply(ab.generators()[j])))
                .expect("pullback of a linear character");
            let p_chi = self.p.image_of(
                g,
                &st.character_coords(e, |j| phase(st.generators()[j]))
                    .expect("restriction of a linear character"),
            );
            for x in 0..n {
                let new_chi = add_coords(ab.factors(), &self.r.row(g, x), &u_chi);
                let new_x = g.mul(p_chi, self.v.apply(x));
                out.push(ab.index_of_coords(&new_chi) * n + new_x);
            }
        }
        out
    }

    /// Recover the quadruple from a linear map induced by one.
    pub fn extract(map: &LinearMap, g: &FiniteGroup) -> Result<MorphQuadruple> {
        let n = g.order();
        let e = g.exponent() as u32;
        if map.group_order() != n {
            return Err(Error::pre("linear map over a different group"));
        }
        let bad = |s: &str| Error::invariant(format!("map is not induced by a quadruple: {s}"));
        // ψ(ε # h) = Σ_y ζ^{ω(h,y)} e_y # v(h)
        let mut v = vec![usize::MAX; n];
        let mut om = vec![0u32; n * n];
        for h in 0..n {
            let mut img = DoubleElement::zero(n);
            for gg in 0..n {
                img = img.add(&map.image(gg, h));
            }
            if img.len() != n {
                return Err(bad("ψ(ε#h) has the wrong support"));
            }
            for (b, c) in img.terms() {
                let (y, x) = ((b as usize) / n, (b as usize) % n);
                if v[h] == usize::MAX {
                    v[h] = x;
                } else if v[h] != x {
                    return Err(bad("ψ(ε#h) is not homogeneous"));
                }
                om[h * n + y] = c.as_root_of_unity().ok_or_else(|| bad("non-root coefficient"))?;
            }
        }
        // Σ_z [e_y # z] ψ(e_g # 1) = [u*(y) = g]
        let mut ustar = vec![usize::MAX; n];
        for gg in 0..n {
            let img = map.image(gg, 0);
            let mut sums = vec![CycScalar::zero(e); n];
            for (b, c) in img.terms() {
                sums[b as usize / n] += c;
            }
            for (y, s) in sums.iter().enumerate() {
                if s.is_one() {
                    if ustar[y] != usize::MAX {
                        return Err(bad("u* is not a function"));
                    }
                    ustar[y] = gg;
                } else if !s.is_zero() {
                    return Err(bad("u is not dual to a function"));
                }
            }
        }
        if ustar.contains(&usize::MAX) {
            return Err(bad("u* is not defined everywhere"));
        }
        // λ(g, z) = [e_1 # z] ψ(e_g # 1)
        let lam: Vec<Vec<(usize, CycScalar)>> = (0..n)
            .map(|gg| {
                map.image(gg, 0)
                    .terms()
                    .filter(|(b, _)| (*b as usize) < n)
                    .map(|(b, c)| (b as usize, c.clone()))
                    .collect()
            })
            .collect();
        let support: Vec<usize> = (0..n).filter(|&a| !lam[a].is_empty()).collect();
        let mut member = vec![false; n];
        for &a in &support {
            member[a] = true;
        }
        let sub = Subgroup::from_members(member);
        if !sub.is_closed(g) || !sub.contains(0) {
            return Err(bad("support of p is not a subgroup"));
        }
        let st = AbelianStructure::of_subgroup(g, &sub).map_err(|_| bad("support of p"))?;
        let images_on = |st: &AbelianStructure| -> Result<Vec<usize>> {
            (0..st.rank())
                .map(|j| {
                    let mut mu = vec![0u32; st.rank()];
                    mu[j] = 1;
                    let mut acc = vec![CycScalar::zero(e); n];
                    for i in 0..st.size() {
                        let a = st.element_at(i);
                        let ph = st.pairing(&mu, &st.coords_of_index(i), e as u64) as i64;
                        for (z, c) in &lam[a] {
                            acc[*z] += &c.mul_root(ph);
                        }
                    }
                    let nz: Vec<usize> = (0..n).filter(|&z| !acc[z].is_zero()).collect();
                    match nz.as_slice() {
                        [z] if acc[*z].is_one() => Ok(*z),
                        _ => Err(bad("p is not a Hopf map")),
                    }
                })
                .collect()
        };
        let zc = g.center();
        let p = if support.iter().all(|&a| zc.contains(a)) {
            PMap::Central {
                pi: images_on(g.center_structure())?,
            }
        } else {
            PMap::General {
                domain: support.clone(),
                pi: images_on(&st)?,
            }
        };
        let r = Bicharacter::from_fn(g, |h, y| om[h * n + y] as u64)?;
        let q = MorphQuadruple {
            p,
            ustar: GroupHom::new(ustar),
            r,
            v: GroupHom::new(v),
        };
        q.validate_types(g).map_err(|s| bad(&s))?;
        if &q.to_map(g)? != map {
            return Err(bad("reconstruction differs"));
        }
        Ok(q)
    }

    /// Self-describing JSON: p by its support A, image B and the full
    /// character table of Â with images; ω on the abelianization generators.
    pub fn to_json(&self, g: &FiniteGroup) -> Value {
        let e = g.exponent() as i64;
        let st = self.p.domain_structure(g);
        let support = self.p.support(g);
        let mut pairs = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..st.size() {
            let mu = st.coords_of_index(i);
            let values: Vec<(i64, i64)> = support
                .iter()
                .map(|&a| {
                    let ph = st.pairing(&mu, st.coords(a).unwrap(), e as u64) as i64;
                    reduce(ph, e)
                })
                .collect();
            if seen.insert(values.clone()) {
                pairs.push(json!({
                    "character": values.iter().map(|&(a, b)| format_ratio(a, b)).collect::<Vec<_>>(),
                    "image": self.p.image_of(g, &mu),
                }));
            }
        }
        let ab = g.abelianization();
        let gens = ab.generators();
        let omega: Vec<Vec<String>> = gens
            .iter()
            .map(|&h| {
                gens.iter()
                    .map(|&y| {
                        let (a, b) = reduce(self.r.phase(g, h, y) as i64, e);
                        format_ratio(a, b)
                    })
                    .collect()
            })
            .collect();
        json!({
            "p": {"A": support, "B": self.p.image(g), "f": pairs},
            "ustar": self.ustar.images,
            "omega": {"generators": gens, "values": omega},
            "v": self.v.images,
        })
    }

    pub fn from_json(g: &FiniteGroup, value: &Value) -> Result<MorphQuadruple> {
        let bad = |s: &str| Error::parse(format!("quadruple: {s}"));
        let n = g.order();
        let e = g.exponent() as i64;
        let usizes = |v: &Value, what: &str| -> Result<Vec<usize>> {
            v.as_array()
                .ok_or_else(|| bad(what))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad(what)))
                .collect()
        };
        let phase = |v: &Value| -> Result<u64> {
            let (a, b) = parse_ratio(v.as_str().ok_or_else(|| bad("rational"))?)?;
            if e % b != 0 {
                return Err(bad("phase denominator does not divide exp(G)"));
            }
            Ok((a * (e / b)).rem_euclid(e) as u64)
        };
        let ustar = GroupHom::new(usizes(&value["ustar"], "ustar")?);
        let v = GroupHom::new(usizes(&value["v"], "v")?);
        if ustar.images.len() != n || v.images.len() != n {
            return Err(bad("homomorphism arrays have the wrong length"));
        }
        // ω: generator values must refer to our generators
        let ab = g.abelianization();
        let gens = usizes(&value["omega"]["generators"], "omega generators")?;
        if gens != ab.generators() {
            return Err(bad("omega is given on different generators"));
        }
        let rows = value["omega"]["values"].as_array().ok_or_else(|| bad("omega"))?;
        let mut table = vec![vec![0u64; gens.len()]; gens.len()];
        for (i, row) in rows.iter().enumerate().take(gens.len()) {
            let row = row.as_array().ok_or_else(|| bad("omega row"))?;
            for (j, x) in row.iter().enumerate().take(gens.len()) {
                table[i][j] = phase(x)?;
            }
        }
        let r = Bicharacter::from_fn(g, |h, y| {
            let i = gens.iter().position(|&x| x == h).unwrap();
            let j = gens.iter().position(|&x| x == y).unwrap();
            table[i][j]
        })?;
        // p: rebuild π on the dual basis of A from the listed pairs
        let support = usizes(&value["p"]["A"], "A")?;
        if support.iter().any(|&a| a >= n) || support.first() != Some(&0) {
            return Err(bad("A is not a subgroup"));
        }
        let mut member = vec![false; n];
        for &a in &support {
            member[a] = true;
        }
        let sub = Subgroup::from_members(member);
        if !sub.is_closed(g) {
            return Err(bad("A is not a subgroup"));
        }
        let st = AbelianStructure::of_subgroup(g, &sub)?;
        let pairs = value["p"]["f"].as_array().ok_or_else(|| bad("f"))?;
        let mut table_f: Vec<(Vec<u64>, usize)> = Vec::new();
        for pr in pairs {
            let chi = pr["character"]
                .as_array()
                .ok_or_else(|| bad("f character"))?
                .iter()
                .map(phase)
                .collect::<Result<Vec<_>>>()?;
            let img = pr["image"].as_u64().ok_or_else(|| bad("f image"))? as usize;
            if chi.len() != support.len() || img >= n {
                return Err(bad("f entry"));
            }
            table_f.push((chi, img));
        }
        let pi = (0..st.rank())
            .map(|j| {
                let mut mu = vec![0u32; st.rank()];
                mu[j] = 1;
                let want: Vec<u64> = support
                    .iter()
                    .map(|&a| st.pairing(&mu, st.coords(a).unwrap(), e as u64) as u64)
                    .collect();
                table_f
                    .iter()
                    .find(|(chi, _)| *chi == want)
                    .map(|(_, b)| *b)
                    .ok_or_else(|| bad("f does not cover the dual of A"))
            })
            .collect::<Result<Vec<_>>>()?;
        // the listed pairs must agree with the homomorphism they generate
        for (chi, b) in &table_f {
            let coords = st
                .character_coords(e as u64, |j| {
                    let s = st.generators()[j];
                    chi[support.iter().position(|&a| a == s).unwrap()]
                })
                .map_err(|_| bad("f lists a non-character"))?;
            let mut x = 0;
            for (&img, &c) in pi.iter().zip(&coords) {
                x = g.mul(x, g.pow(img, c as i64));
            }
            if x != *b {
                return Err(bad("f is not a homomorphism"));
            }
        }
        let p = PMap::general(g, &sub, pi)?;
        let q = MorphQuadruple { p, ustar, r, v };
        q.validate_types(g).map_err(|s| bad(&s))?;
        Ok(q)
    }
}

fn reduce(a: i64, b: i64) -> (i64, i64) {
    use num_integer::Integer;
    let gg = a.gcd(&b).max(1);
    (a / gg, b / gg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library::*;

    #[test]
    fn identity_quadruple_gives_identity_map() {
        let g = symmetric(3);
        let d = Double::new(&g);
        let q = MorphQuadruple::identity(&g);
        assert_eq!(q.to_map(&g).unwrap(), LinearMap::identity(&d));
        assert!(q.check_compatibility(&g).holds());
    }

    #[test]
    fn grouplike_restriction_of_identity() {
        let g = quaternion(8);
        let q = MorphQuadruple::identity(&g);
        let res = q.restrict_to_grouplikes(&g);
        assert!(res.iter().enumerate().all(|(i, &x)| i == x));
    }

    #[test]
    fn json_round_trip() {
        let g = direct_product(&cyclic(2), &symmetric(3));
        let z = g.center_structure();
        let p = PMap::from_center_hom(
            &g,
            &crate::groups::AbHom {
                images: vec![vec![1; z.rank()]; z.rank()],
            },
        );
        let r = Bicharacter::all(&g).into_iter().nth(1).unwrap();
        let q = MorphQuadruple {
            p,
            r,
            ..MorphQuadruple::identity(&g)
        };
        let j = q.to_json(&g);
        assert_eq!(MorphQuadruple::from_json(&g, &j).unwrap(), q);
    }
}
