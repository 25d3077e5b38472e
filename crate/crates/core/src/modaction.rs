//! The action of Aut(D(G)) on the simple D(G)-modules, labelled by pairs
//! (s, η) with s a class representative and η an irreducible character of
//! C_G(s).
//!
//! The character of (s, η) at e_g # a is η(x⁻¹ a x) when g = x s x⁻¹ and
//! x⁻¹ a x ∈ C_G(s), and 0 otherwise. Pulling a module back along a Hopf
//! map ψ = (p, u, ω, v) with central p-map sends (s, η) to
//!
//!   (P(η)·u*(s),  h ↦ ζ^{ω(h,s)} η(v(h))),
//!
//! where P(η) is the unique a ∈ A with η(p(e_a)) = dim η. Pullback is
//! contravariant, so `act(q, ·)` is the pullback along q⁻¹; this makes it a
//! left action: act(q₂, act(q₁, ℓ)) = act(q₂∘q₁, ℓ).

use std::collections::HashMap;

use num_rational::Ratio;
use serde_json::{json, Value};

use crate::autdouble::{inverse, AutDG};
use crate::chartab::CharacterTable;
use crate::cyclotomic::CycScalar;
use crate::double::{basis, MorphQuadruple, PMap};
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;

/// C_G(s) for a class representative s, with its character table over
/// Q(ζ_e), e = exp(G).
#[derive(Clone, Debug)]
pub struct CentralizerData {
    pub s: usize,
    pub class_size: usize,
    pub group: FiniteGroup,
    pub embedding: Vec<usize>,
    position: Vec<usize>,
    pub table: CharacterTable,
}

impl CentralizerData {
    pub fn contains(&self, x: usize) -> bool {
        self.position[x] != usize::MAX
    }

    /// χ_i(x) for x ∈ C_G(s) given as an element of G.
    pub fn value(&self, i: usize, x: usize) -> Option<&CycScalar> {
        self.contains(x).then(|| self.table.value(i, self.position[x]))
    }
}

/// A simple module: the class of s, its representative, the row of η in
/// the centralizer table, and dim = |class(s)|·η(1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModuleLabel {
    pub class: usize,
    pub s: usize,
    pub eta: usize,
    pub dim: u64,
}

/// All simple-module labels of D(G) with the data needed to act on them.
#[derive(Clone, Debug)]
pub struct LabelSpace {
    group: FiniteGroup,
    e: u32,
    centralizers: Vec<CentralizerData>,
    labels: Vec<ModuleLabel>,
    index: HashMap<(usize, usize), usize>,
    /// conjugator[t] = the least x with x·rep·x⁻¹ = t.
    conjugator: Vec<usize>,
}

impl LabelSpace {
    pub fn new(g: &FiniteGroup) -> Result<Self> {
        let n = g.order();
        let e = g.exponent() as u32;
        let mut conjugator = vec![usize::MAX; n];
        let mut centralizers = Vec::new();
        let mut labels = Vec::new();
        let mut index = HashMap::new();
        for (ci, &s) in g.class_reps().iter().enumerate() {
            for x in 0..n {
                let t = g.conj(x, s);
                if conjugator[t] == usize::MAX {
                    conjugator[t] = x;
                }
            }
            let sub = g.centralizer(s);
            let (cg, emb) = g.subgroup_as_group(&sub, &format!("C({})", g.label(s)));
            let mut position = vec![usize::MAX; n];
            for (i, &x) in emb.iter().enumerate() {
                position[x] = i;
            }
            let table = CharacterTable::compute_with_conductor(&cg, e)?;
            let class_size = n / sub.order();
            for (eta, &d) in table.degrees.iter().enumerate() {
                index.insert((ci, eta), labels.len());
                labels.push(ModuleLabel {
                    class: ci,
                    s,
                    eta,
                    dim: class_size as u64 * d,
                });
            }
            centralizers.push(CentralizerData {
                s,
                class_size,
                group: cg,
                embedding: emb,
                position,
                table,
            });
        }
        Ok(LabelSpace {
            group: g.clone(),
            e,
            centralizers,
            labels,
            index,
            conjugator,
        })
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn labels(&self) -> &[ModuleLabel] {
        &self.labels
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn index_of(&self, l: &ModuleLabel) -> usize {
        self.index[&(l.class, l.eta)]
    }

    pub fn centralizer(&self, class: usize) -> &CentralizerData {
        &self.centralizers[class]
    }

    /// The character of the module, densely on the basis e_g # a.
    pub fn character(&self, l: &ModuleLabel) -> Vec<CycScalar> {
        let g = &self.group;
        let n = g.order();
        let c = &self.centralizers[l.class];
        let mut out = vec![CycScalar::zero(self.e); n * n];
        for t in 0..n {
            if g.class_of(t) != l.class {
                continue;
            }
            let x = self.conjugator[t];
            let xi = g.inv(x);
            for a in 0..n {
                if let Some(v) = c.value(l.eta, g.conj(xi, a)) {
                    out[basis(n, t, a) as usize] = v.clone();
                }
            }
        }
        out
    }

    pub fn label_json(&self, l: &ModuleLabel) -> Value {
        let c = &self.centralizers[l.class];
        let row: Vec<String> = c.table.values[l.eta].iter().map(|v| v.to_string()).collect();
        json!({
            "s": l.s,
            "class": l.class,
            "eta": l.eta,
            "eta_values": row,
            "dim": l.dim,
        })
    }
}

pub fn all_labels(g: &FiniteGroup) -> Result<LabelSpace> {
    LabelSpace::new(g)
}

/// P(η): the unique a ∈ A with η(p(e_a)) = dim η.
pub fn p_of(space: &LabelSpace, q: &MorphQuadruple, l: &ModuleLabel) -> Result<usize> {
    let g = &space.group;
    if !q.p.is_central(g) || !matches!(q.p, PMap::Central { .. }) {
        return Err(Error::pre("P(η) needs a central p-map"));
    }
    let c = &space.centralizers[l.class];
    let dim = CycScalar::from_int(space.e, c.table.degrees[l.eta] as i64);
    let lam = q.p.lambda_table(g);
    let mut found = None;
    for a in q.p.support(g) {
        let mut acc = CycScalar::zero(space.e);
        for (z, coef) in &lam[a] {
            let v = c
                .value(l.eta, *z)
                .ok_or_else(|| Error::invariant("image of p outside the centralizer"))?;
            acc += &(coef * v);
        }
        if acc == dim {
            if found.is_some() {
                return Err(Error::invariant("P(η) is not a single point"));
            }
            found = Some(a);
        } else if !acc.is_zero() {
            return Err(Error::invariant("η∘p is not supported at a single point"));
        }
    }
    found.ok_or_else(|| Error::invariant("P(η) is empty"))
}

/// The label of the pullback of (s, η) along ψ.
pub fn pullback_label(space: &LabelSpace, psi: &MorphQuadruple, l: &ModuleLabel) -> Result<ModuleLabel> {
    let g = &space.group;
    let n = g.order();
    let pe = p_of(space, psi, l)?;
    // A·Im(u*) = G
    let mut covered = vec![false; n];
    for &a in &psi.p.support(g) {
        for y in 0..n {
            covered[g.mul(a, psi.ustar.apply(y))] = true;
        }
    }
    if covered.iter().any(|&b| !b) {
        return Err(Error::pre("A·Im(u*) is a proper subgroup"));
    }
    let src = &space.centralizers[l.class];
    let t = g.mul(pe, psi.ustar.apply(l.s));
    let class = g.class_of(t);
    let dst = &space.centralizers[class];
    let x = space.conjugator[t];
    // η'(h) = ζ^{ω(h,s)} η(v(h)) on C(t), moved to C(s') by γ ↦ xγx⁻¹
    let values: Vec<CycScalar> = dst
        .table
        .classes
        .iter()
        .map(|cl| {
            let gamma = dst.embedding[cl[0]];
            let h = g.conj(x, gamma);
            let v = src
                .value(l.eta, psi.v.apply(h))
                .ok_or_else(|| Error::pre("v does not map C(s') into C(s)"))?;
            Ok(v.mul_root(psi.r.phase(g, h, l.s) as i64))
        })
        .collect::<Result<_>>()?;
    let eta = dst
        .table
        .values
        .iter()
        .position(|row| *row == values)
        .ok_or_else(|| Error::invariant("image character is not irreducible"))?;
    Ok(space.labels[space.index[&(class, eta)]])
}

/// The action of an automorphism q: pullback along q⁻¹.
pub fn act(space: &LabelSpace, q: &MorphQuadruple, l: &ModuleLabel) -> Result<ModuleLabel> {
    let qi = inverse(&space.group, q)?;
    pullback_label(space, &qi, l)
}

/// The literal pullback character x ↦ χ(ψ(x)) of a module along a linear
/// map ψ on D(G).
pub fn pullback_character(space: &LabelSpace, psi: &MorphQuadruple, l: &ModuleLabel) -> Result<Vec<CycScalar>> {
    let g = &space.group;
    let chi = space.character(l);
    let map = psi.to_map(g)?;
    Ok((0..chi.len() as u32)
        .map(|b| {
            let mut acc = CycScalar::zero(space.e);
            for (b2, c) in map.column(b) {
                let v = &chi[*b2 as usize];
                if !v.is_zero() {
                    acc += &(c * v);
                }
            }
            acc
        })
        .collect())
}

/// Compare the literal pullback character along q⁻¹ with the character of
/// act(q, ℓ), entry by entry.
pub fn pullback_character_oracle(space: &LabelSpace, q: &MorphQuadruple, l: &ModuleLabel) -> Result<()> {
    let g = &space.group;
    let n = g.order();
    let qi = inverse(g, q)?;
    let xi = pullback_character(space, &qi, l)?;
    let image = pullback_label(space, &qi, l)?;
    let beta = space.character(&image);
    if let Some(b) = (0..xi.len()).find(|&b| xi[b] != beta[b]) {
        return Err(Error::invariant(format!(
            "pullback character differs at e_{} # {}",
            g.label(b / n),
            g.label(b % n)
        )));
    }
    // support: zero off the class of s'
    if (0..xi.len()).any(|b| !xi[b].is_zero() && g.class_of(b / n) != image.class) {
        return Err(Error::invariant("pullback character is not supported at one class"));
    }
    Ok(())
}

/// Orbit partition of the labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbits {
    /// Orbits as sorted label indices, ordered by their least element.
    pub orbits: Vec<Vec<usize>>,
    pub representatives: Vec<usize>,
}

impl Orbits {
    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbits.iter().position(|o| o.contains(&i)).unwrap()
    }

    pub fn reduction_factor(&self, labels: usize) -> Ratio<u64> {
        Ratio::new(labels as u64, self.orbits.len().max(1) as u64)
    }
}

/// Orbits under a generating set, by union-find with the least index as
/// root.
pub fn orbits_under(space: &LabelSpace, gens: &[MorphQuadruple]) -> Result<Orbits> {
    let m = space.len();
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for q in gens {
        let qi = inverse(&space.group, q)?;
        for (i, l) in space.labels.iter().enumerate() {
            let j = space.index_of(&pullback_label(space, &qi, l)?);
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = vec![Vec::new(); m];
    for i in 0..m {
        let r = find(&mut parent, i);
        groups[r].push(i);
    }
    let orbits: Vec<Vec<usize>> = groups.into_iter().filter(|o| !o.is_empty()).collect();
    let representatives = orbits.iter().map(|o| o[0]).collect();
    Ok(Orbits {
        orbits,
        representatives,
    })
}

pub fn orbits(space: &LabelSpace, a: &AutDG) -> Result<Orbits> {
    orbits_under(space, a.generators())
}

/// Orbit report JSON.
pub fn orbit_report(space: &LabelSpace, o: &Orbits) -> Value {
    let r = o.reduction_factor(space.len());
    json!({
        "group": {"name": space.group.name(), "order": space.group.order()},
        "labels": space.labels.iter().map(|l| space.label_json(l)).collect::<Vec<_>>(),
        "orbits": o.orbits,
        "representatives": o.representatives,
        "reduction_factor": format!("{}/{}", r.numer(), r.denom()),
    })
}
