//! Invariant-factor decompositions, homomorphisms between finite abelian
//! groups, linear characters and bicharacters.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// A finite abelian group Z/d_1 × … × Z/d_k (d_i | d_{i+1}, all d_i > 1)
/// realized inside a parent group. For a subgroup the coordinate map is an
/// isomorphism onto the coordinate group; for the abelianization it is the
/// projection G → G/G'.
#[derive(Clone, Debug)]
pub struct AbelianStructure {
    factors: Vec<u64>,
    gens: Vec<usize>,
    k: usize,
    coords: Vec<u32>,
    lift: Vec<usize>,
}

const NONE: u32 = u32::MAX;

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let e = a.extended_gcd(&b);
    if e.gcd < 0 {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

/// Upper-triangular basis of the lattice spanned by `rels` and m·Z^k.
fn hnf_mod(rels: &[Vec<i64>], k: usize, m: i64) -> Vec<Vec<i64>> {
    let mut basis: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            let mut r = vec![0; k];
            r[i] = m;
            r
        })
        .collect();
    for rel in rels {
        let mut r: Vec<i64> = rel.iter().map(|x| x.rem_euclid(m)).collect();
        for col in 0..k {
            if r[col] == 0 {
                continue;
            }
            let a = basis[col][col];
            let b = r[col];
            let (g, s, t) = ext_gcd(a, b);
            let piv: Vec<i64> = (0..k).map(|j| s * basis[col][j] + t * r[j]).collect();
            let rest: Vec<i64> = (0..k)
                .map(|j| (b / g) * basis[col][j] - (a / g) * r[j])
                .collect();
            basis[col] = piv
                .iter()
                .enumerate()
                .map(|(j, &x)| if j == col { x } else { x.rem_euclid(m) })
                .collect();
            r = rest.iter().map(|x| x.rem_euclid(m)).collect();
            debug_assert_eq!(r[col], 0);
        }
    }
    basis
}

/// Smith form of a square matrix: returns the diagonal and Q, Q⁻¹ with
/// P·A·Q = diag for some unimodular P.
fn smith(mut a: Vec<Vec<i64>>) -> (Vec<i64>, Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let k = a.len();
    let ident = |k: usize| -> Vec<Vec<i64>> {
        (0..k)
            .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
            .collect()
    };
    let mut q = ident(k);
    let mut qi = ident(k);
    for t in 0..k {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..k {
                for j in t..k {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                for row in q.iter_mut() {
                    row.swap(t, pj);
                }
                qi.swap(t, pj);
            }
            let mut clean = true;
            for i in (t + 1)..k {
                let f = a[i][t] / a[t][t];
                if f != 0 {
                    for j in 0..k {
                        a[i][j] -= f * a[t][j];
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in (t + 1)..k {
                let f = a[t][j] / a[t][t];
                if f != 0 {
                    for row in a.iter_mut() {
                        row[j] -= f * row[t];
                    }
                    for row in q.iter_mut() {
                        row[j] -= f * row[t];
                    }
                    for c in 0..k {
                        qi[t][c] += f * qi[j][c];
                    }
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            let p = a[t][t];
            let bad = ((t + 1)..k).find(|&i| ((t + 1)..k).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    for j in 0..k {
                        a[t][j] += a[i][j];
                    }
                }
                None => break,
            }
        }
    }
    let diag = (0..k).map(|i| a[i][i].abs()).collect();
    (diag, q, qi)
}

fn mixed_radix(factors: &[u64], c: &[u32]) -> usize {
    let mut idx = 0usize;
    let mut scale = 1usize;
    for (d, &x) in factors.iter().zip(c) {
        idx += x as usize * scale;
        scale *= *d as usize;
    }
    idx
}

fn unradix(factors: &[u64], mut idx: usize) -> Vec<u32> {
    factors
        .iter()
        .map(|&d| {
            let x = idx % d as usize;
            idx /= d as usize;
            x as u32
        })
        .collect()
}

impl AbelianStructure {
    /// Smith decomposition of an abelian subgroup of `g`.
    pub fn of_subgroup(g: &FiniteGroup, s: &Subgroup) -> Result<Self> {
        let elems = s.elements();
        for &a in elems {
            for &b in elems {
                if g.mul(a, b) != g.mul(b, a) {
                    return Err(Error::pre("smith decomposition of a non-abelian subgroup"));
                }
            }
        }
        let n = g.order();
        if s.order() == 1 {
            return Ok(AbelianStructure {
                factors: vec![],
                gens: vec![],
                k: 0,
                coords: (0..n).map(|x| if x == 0 { 0 } else { NONE }).collect(),
                lift: vec![0],
            });
        }
        // greedy generating set in index order
        let mut sgens: Vec<usize> = Vec::new();
        let mut span = Subgroup::trivial(n);
        for &x in elems {
            if !span.contains(x) {
                sgens.push(x);
                span = g.generate(&sgens);
            }
        }
        let k = sgens.len();
        // word vectors along a breadth-first spanning tree
        let mut word: Vec<Option<Vec<i64>>> = vec![None; n];
        word[0] = Some(vec![0; k]);
        let mut queue = vec![0usize];
        let mut qi = 0;
        let mut rels: Vec<Vec<i64>> = Vec::new();
        while qi < queue.len() {
            let x = queue[qi];
            qi += 1;
            let wx = word[x].clone().unwrap();
            for (i, &sg) in sgens.iter().enumerate() {
                let y = g.mul(x, sg);
                let mut wy = wx.clone();
                wy[i] += 1;
                match &word[y] {
                    None => {
                        word[y] = Some(wy);
                        queue.push(y);
                    }
                    Some(old) => {
                        let rel: Vec<i64> = wy.iter().zip(old).map(|(a, b)| a - b).collect();
                        if rel.iter().any(|&v| v != 0) {
                            rels.push(rel);
                        }
                    }
                }
            }
        }
        let m = s.order() as i64;
        let basis = hnf_mod(&rels, k, m);
        let (diag, q, qinv) = smith(basis);
        let keep: Vec<usize> = (0..k).filter(|&j| diag[j] > 1).collect();
        let factors: Vec<u64> = keep.iter().map(|&j| diag[j] as u64).collect();
        let gens: Vec<usize> = keep
            .iter()
            .map(|&j| {
                let mut x = 0;
                for (i, &sg) in sgens.iter().enumerate() {
                    x = g.mul(x, g.pow(sg, qinv[j][i]));
                }
                x
            })
            .collect();
        let kk = factors.len();
        let mut coords = vec![NONE; n * kk.max(1)];
        if kk == 0 {
            return Err(Error::invariant("nontrivial subgroup with no invariant factors"));
        }
        let mut lift = vec![usize::MAX; s.order()];
        for &x in elems {
            let w = word[x].as_ref().unwrap();
            let c: Vec<u32> = keep
                .iter()
                .zip(&factors)
                .map(|(&j, &d)| {
                    let v: i64 = (0..k).map(|i| w[i] * q[i][j]).sum();
                    v.rem_euclid(d as i64) as u32
                })
                .collect();
            coords[x * kk..(x + 1) * kk].copy_from_slice(&c);
            let idx = mixed_radix(&factors, &c);
            if lift[idx] != usize::MAX {
                return Err(Error::invariant("smith coordinates are not injective"));
            }
            lift[idx] = x;
        }
        let st = AbelianStructure {
            factors,
            gens,
            k: kk,
            coords,
            lift,
        };
        // the generators must realize the coordinates
        for &x in elems {
            if st.element_of(st.coords(x).unwrap(), g) != x {
                return Err(Error::invariant("smith generators do not realize coordinates"));
            }
        }
        Ok(st)
    }

    /// Structure of G/G' with coordinates of every element of G.
    pub(crate) fn abelianization(g: &FiniteGroup) -> Self {
        let (q, proj) = g
            .quotient(g.derived_subgroup(), "ab")
            .expect("derived subgroup is normal");
        let qs = AbelianStructure::of_subgroup(&q, &q.whole()).expect("G/G' is abelian");
        // minimal coset representatives
        let mut rep = vec![usize::MAX; q.order()];
        for x in g.elements() {
            if rep[proj[x]] == usize::MAX {
                rep[proj[x]] = x;
            }
        }
        let kk = qs.k;
        let n = g.order();
        let mut coords = vec![0u32; n * kk.max(1)];
        if kk > 0 {
            for x in 0..n {
                coords[x * kk..(x + 1) * kk].copy_from_slice(qs.coords(proj[x]).unwrap());
            }
        }
        AbelianStructure {
            factors: qs.factors.clone(),
            gens: qs.gens.iter().map(|&y| rep[y]).collect(),
            k: kk,
            coords,
            lift: qs.lift.iter().map(|&y| rep[y]).collect(),
        }
    }

    /// Invariant factors d_1 | … | d_k (all > 1).
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.factors.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.factors.last().copied().unwrap_or(1)
    }

    /// Generators in the parent group (lifts, for the abelianization).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    /// Coordinates of a parent element (None outside the subgroup).
    pub fn coords(&self, x: usize) -> Option<&[u32]> {
        if self.k == 0 {
            return (self.coords[x] != NONE).then_some(&[]);
        }
        let c = &self.coords[x * self.k..(x + 1) * self.k];
        (c[0] != NONE).then_some(c)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.coords(x).is_some()
    }

    /// Mixed-radix index of a member.
    pub fn index_of(&self, x: usize) -> Option<usize> {
        self.coords(x).map(|c| mixed_radix(&self.factors, c))
    }

    /// The member (or minimal lift) with the given mixed-radix index.
    pub fn element_at(&self, idx: usize) -> usize {
        self.lift[idx]
    }

    /// The member with the given coordinates (via the stored lift table).
    pub fn lookup(&self, c: &[u32]) -> usize {
        self.lift[mixed_radix(&self.factors, c)]
    }

    /// Product of generator powers with the given coordinates.
    pub fn element_of(&self, c: &[u32], g: &FiniteGroup) -> usize {
        let mut x = 0;
        for (&gen, &ci) in self.gens.iter().zip(c) {
            x = g.mul(x, g.pow(gen, ci as i64));
        }
        x
    }

    pub fn coords_of_index(&self, idx: usize) -> Vec<u32> {
        unradix(&self.factors, idx)
    }

    pub fn index_of_coords(&self, c: &[u32]) -> usize {
        mixed_radix(&self.factors, c)
    }

    /// Phase (in units of 1/e) of the character with coordinates `chi`
    /// evaluated at the coordinates `x`; `e` must be a multiple of the exponent.
    pub fn pairing(&self, chi: &[u32], x: &[u32], e: u64) -> u32 {
        let mut acc = 0u64;
        for ((&d, &c), &xi) in self.factors.iter().zip(chi).zip(x) {
            acc += c as u64 * xi as u64 % d * (e / d);
        }
        (acc % e) as u32
    }

    /// Coordinates of the character x ↦ phase(x) from its values on the
    /// generators, where phases are in units of 1/e.
    pub fn character_coords(&self, e: u64, phase_at_gen: impl Fn(usize) -> u64) -> Result<Vec<u32>> {
        self.factors
            .iter()
            .enumerate()
            .map(|(j, &d)| {
                let ph = phase_at_gen(j) % e;
                let unit = e / d;
                if ph % unit != 0 {
                    return Err(Error::invariant(
                        "character value is not a d-th root of unity on a generator",
                    ));
                }
                Ok((ph / unit) as u32)
            })
            .collect()
    }
}

/// Add coordinate vectors modulo the factors.
pub fn add_coords(factors: &[u64], a: &[u32], b: &[u32]) -> Vec<u32> {
    factors
        .iter()
        .zip(a.iter().zip(b))
        .map(|(&d, (&x, &y))| ((x as u64 + y as u64) % d) as u32)
        .collect()
}

/// A homomorphism between coordinate groups Z/d_1×…×Z/d_k → Z/c_1×…×Z/c_l,
/// stored by the coordinates of the images of the domain generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbHom {
    pub images: Vec<Vec<u32>>,
}

impl AbHom {
    pub fn apply(&self, x: &[u32], cod: &[u64]) -> Vec<u32> {
        let mut out = vec![0u64; cod.len()];
        for (xi, img) in x.iter().zip(&self.images) {
            for (j, &c) in cod.iter().enumerate() {
                out[j] = (out[j] + *xi as u64 * img[j] as u64) % c;
            }
        }
        out.into_iter().map(|v| v as u32).collect()
    }

    pub fn identity(factors: &[u64]) -> Self {
        let k = factors.len();
        AbHom {
            images: (0..k)
                .map(|i| (0..k).map(|j| u32::from(i == j)).collect())
                .collect(),
        }
    }

    pub fn zero(dom: &[u64], cod: &[u64]) -> Self {
        AbHom {
            images: vec![vec![0; cod.len()]; dom.len()],
        }
    }

    /// Well-definedness: each image has order dividing its generator's order.
    pub fn is_valid(&self, dom: &[u64], cod: &[u64]) -> bool {
        self.images.len() == dom.len()
            && self.images.iter().zip(dom).all(|(img, &d)| {
                img.len() == cod.len()
                    && img
                        .iter()
                        .zip(cod)
                        .all(|(&x, &c)| (x as u64) < c && (x as u64 * d) % c == 0)
            })
    }
}

/// |Hom(Z/d_1×…, Z/c_1×…)| = ∏ gcd(d_i, c_j).
pub fn hom_count(dom: &[u64], cod: &[u64]) -> u128 {
    dom.iter()
        .flat_map(|&d| cod.iter().map(move |&c| d.gcd(&c) as u128))
        .product()
}

/// All homomorphisms between coordinate groups, in lexicographic order of
/// the (generator, coordinate) choices.
pub fn enumerate_homs(dom: &[u64], cod: &[u64]) -> Vec<AbHom> {
    let slots: Vec<(usize, usize, u64, u64)> = dom
        .iter()
        .enumerate()
        .flat_map(|(i, &d)| {
            cod.iter()
                .enumerate()
                .map(move |(j, &c)| (i, j, d.gcd(&c), c / d.gcd(&c)))
        })
        .collect();
    let total = hom_count(dom, cod) as usize;
    let mut out = Vec::with_capacity(total);
    for mut idx in 0..total {
        let mut images = vec![vec![0u32; cod.len()]; dom.len()];
        for &(i, j, choices, step) in &slots {
            let x = idx as u64 % choices;
            idx /= choices as usize;
            images[i][j] = (x * step) as u32;
        }
        out.push(AbHom { images });
    }
    out
}

/// A linear character of G, stored by its coordinates in the dual of G/G'
/// and its values as phases k (meaning ζ_e^k, e = exp G).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCharacter {
    pub e: u32,
    pub coords: Vec<u32>,
    pub values: Vec<u32>,
}

impl LinearCharacter {
    pub fn from_coords(g: &FiniteGroup, coords: &[u32]) -> Self {
        let ab = g.abelianization();
        let e = g.exponent() as u64;
        let values = g
            .elements()
            .map(|x| ab.pairing(coords, ab.coords(x).unwrap(), e))
            .collect();
        LinearCharacter {
            e: e as u32,
            coords: coords.to_vec(),
            values,
        }
    }

    /// Value at x as a rational (numerator, denominator) in [0, 1).
    pub fn value_ratio(&self, x: usize) -> (i64, i64) {
        let g = (self.values[x] as i64).gcd(&(self.e as i64));
        (self.values[x] as i64 / g, self.e as i64 / g)
    }

    /// All linear characters of G (the dual group Ĝ), in coordinate order.
    pub fn dual_group(g: &FiniteGroup) -> Vec<LinearCharacter> {
        let ab = g.abelianization();
        (0..ab.size())
            .map(|i| Self::from_coords(g, &ab.coords_of_index(i)))
            .collect()
    }
}

/// A bicharacter ω: G×G → Q/Z, stored as a homomorphism r: G/G' → Ĝ by the
/// dual coordinates of r(g_i) for the abelianization generators g_i.
/// ω(h, y) = r(h)(y).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bicharacter {
    pub matrix: Vec<Vec<u32>>,
}

impl Bicharacter {
    pub fn zero(g: &FiniteGroup) -> Self {
        let k = g.abelianization().rank();
        Bicharacter {
            matrix: vec![vec![0; k]; k],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|r| r.iter().all(|&x| x == 0))
    }

    pub fn is_valid(&self, g: &FiniteGroup) -> bool {
        let f = g.abelianization().factors();
        AbHom {
            images: self.matrix.clone(),
        }
        .is_valid(f, f)
    }

    /// Dual coordinates of r(h).
    pub fn row(&self, g: &FiniteGroup, h: usize) -> Vec<u32> {
        let ab = g.abelianization();
        AbHom {
            images: self.matrix.clone(),
        }
        .apply(ab.coords(h).unwrap(), ab.factors())
    }

    /// ω(h, y) as a phase in units of 1/exp(G).
    pub fn phase(&self, g: &FiniteGroup, h: usize, y: usize) -> u32 {
        let ab = g.abelianization();
        let r = self.row(g, h);
        ab.pairing(&r, ab.coords(y).unwrap(), g.exponent() as u64)
    }

    /// Dense table of ω(h, y), row-major in h.
    pub fn table(&self, g: &FiniteGroup) -> Vec<u32> {
        let n = g.order();
        let ab = g.abelianization();
        let e = g.exponent() as u64;
        let mut out = vec![0u32; n * n];
        for h in 0..n {
            let r = self.row(g, h);
            for y in 0..n {
                out[h * n + y] = ab.pairing(&r, ab.coords(y).unwrap(), e);
            }
        }
        out
    }

    /// The bicharacter with ω(h, y) = f(h, y) (phases in units of 1/exp G).
    /// Only generator values are read; callers guarantee biadditivity.
    pub fn from_fn(g: &FiniteGroup, f: impl Fn(usize, usize) -> u64) -> Result<Self> {
        let ab = g.abelianization();
        let e = g.exponent() as u64;
        let gens = ab.generators().to_vec();
        let matrix = gens
            .iter()
            .map(|&h| ab.character_coords(e, |j| f(h, gens[j])))
            .collect::<Result<Vec<_>>>()?;
        let b = Bicharacter { matrix };
        if !b.is_valid(g) {
            return Err(Error::invariant("pairing is not a bicharacter"));
        }
        Ok(b)
    }

    pub fn add(&self, other: &Self, g: &FiniteGroup) -> Self {
        let f = g.abelianization().factors();
        Bicharacter {
            matrix: self
                .matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| add_coords(f, a, b))
                .collect(),
        }
    }

    pub fn neg(&self, g: &FiniteGroup) -> Self {
        let f = g.abelianization().factors();
        Bicharacter {
            matrix: self
                .matrix
                .iter()
                .map(|r| {
                    r.iter()
                        .zip(f)
                        .map(|(&x, &d)| ((d - x as u64) % d) as u32)
                        .collect()
                })
                .collect(),
        }
    }

    /// ωᵀ(h, y) = ω(y, h).
    pub fn transpose(&self, g: &FiniteGroup) -> Self {
        Self::from_fn(g, |h, y| self.phase(g, y, h) as u64).expect("transpose of a bicharacter")
    }

    /// Pairing values on the abelianization generators as rationals mod 1.
    pub fn generator_values(&self, g: &FiniteGroup) -> Vec<Vec<(i64, i64)>> {
        let f = g.abelianization().factors();
        self.matrix
            .iter()
            .map(|row| {
                row.iter()
                    .zip(f)
                    .map(|(&x, &d)| {
                        let gg = (x as i64).gcd(&(d as i64));
                        (x as i64 / gg, d as i64 / gg)
                    })
                    .collect()
            })
            .collect()
    }

    /// BCh(G) = Hom(G/G', Ĝ), enumerated in coordinate order.
    pub fn all(g: &FiniteGroup) -> Vec<Bicharacter> {
        let f = g.abelianization().factors();
        enumerate_homs(f, f)
            .into_iter()
            .map(|h| Bicharacter { matrix: h.images })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::super::library::*;
    use super::*;

    fn check_structure(g: &FiniteGroup, s: &Subgroup) -> AbelianStructure {
        let st = AbelianStructure::of_subgroup(g, s).unwrap();
        assert_eq!(st.size(), s.order());
        for w in st.factors().windows(2) {
            assert_eq!(w[1] % w[0], 0);
        }
        for &a in s.elements() {
            for &b in s.elements() {
                let ab = st.coords(g.mul(a, b)).unwrap().to_vec();
                let sum = add_coords(st.factors(), st.coords(a).unwrap(), st.coords(b).unwrap());
                assert_eq!(ab, sum);
            }
            assert_eq!(st.lookup(st.coords(a).unwrap()), a);
        }
        st
    }

    #[test]
    fn smith_decompositions() {
        let q8 = quaternion(8);
        assert_eq!(check_structure(&q8, q8.center()).factors(), &[2]);
        let z = direct_product(&cyclic(4), &cyclic(6));
        assert_eq!(check_structure(&z, &z.whole()).factors(), &[2, 12]);
        let e = direct_product(&direct_product(&cyclic(2), &cyclic(2)), &cyclic(2));
        assert_eq!(check_structure(&e, &e.whole()).factors(), &[2, 2, 2]);
        let t = cyclic(5);
        assert!(check_structure(&t, &t.trivial_subgroup()).factors().is_empty());
        let sg = smallgroup_32_2();
        assert_eq!(check_structure(&sg, sg.center()).factors(), &[2, 2, 2]);
        let z30 = cyclic(30);
        assert_eq!(check_structure(&z30, &z30.whole()).factors(), &[30]);
        assert!(AbelianStructure::of_subgroup(&q8, &q8.whole()).is_err());
    }

    #[test]
    fn hom_enumeration_counts() {
        assert_eq!(enumerate_homs(&[2], &[2]).len(), 2);
        assert_eq!(enumerate_homs(&[2, 2], &[2, 2]).len(), 16);
        assert_eq!(enumerate_homs(&[2], &[2, 2, 2]).len(), 8);
        assert_eq!(enumerate_homs(&[4], &[2, 4]).len(), 8);
        for h in enumerate_homs(&[2, 4], &[4, 6]) {
            assert!(h.is_valid(&[2, 4], &[4, 6]));
        }
        assert_eq!(hom_count(&[2, 4], &[4, 6]), 2 * 2 * 4 * 2);
        assert_eq!(enumerate_homs(&[], &[3]).len(), 1);
    }

    #[test]
    fn homs_agree_with_brute_force() {
        // Hom(Z2×Z4, Z4): check every candidate map on the full group table.
        let dom = [2u64, 4];
        let cod = [4u64];
        let mut brute = 0;
        for a in 0..4u32 {
            for b in 0..4u32 {
                let h = AbHom {
                    images: vec![vec![a], vec![b]],
                };
                let ok = (0..8).all(|i| {
                    (0..8).all(|j| {
                        let x = unradix(&dom, i);
                        let y = unradix(&dom, j);
                        let s = add_coords(&dom, &x, &y);
                        // well-defined additive map on coordinates
                        let lhs = (a as u64 * s[0] as u64 + b as u64 * s[1] as u64) % 4;
                        let rhs = (a as u64 * (x[0] + y[0]) as u64 + b as u64 * (x[1] + y[1]) as u64) % 4;
                        lhs == rhs
                    })
                });
                if ok {
                    brute += 1;
                    assert!(h.is_valid(&dom, &cod));
                }
            }
        }
        assert_eq!(brute, enumerate_homs(&dom, &cod).len());
    }

    #[test]
    fn dual_and_bicharacter_groups() {
        let d8 = dihedral(8);
        assert_eq!(LinearCharacter::dual_group(&d8).len(), 4);
        assert_eq!(Bicharacter::all(&d8).len(), 16);
        assert_eq!(Bicharacter::all(&alternating(4)).len(), 3);
        assert_eq!(Bicharacter::all(&alternating(5)).len(), 1);
        for chi in LinearCharacter::dual_group(&d8) {
            for a in d8.elements() {
                for b in d8.elements() {
                    assert_eq!(
                        chi.values[d8.mul(a, b)],
                        (chi.values[a] + chi.values[b]) % chi.e
                    );
                }
            }
        }
    }

    #[test]
    fn bicharacters_are_biadditive_and_vanish_on_derived() {
        for g in [dihedral(8), quaternion(8), cyclic(6), direct_product(&cyclic(2), &cyclic(4))] {
            let e = g.exponent() as u32;
            let der = g.derived_subgroup().clone();
            for b in Bicharacter::all(&g) {
                let t = b.table(&g);
                let n = g.order();
                for x in 0..n {
                    for y in 0..n {
                        for z in [1usize.min(n - 1), n - 1] {
                            assert_eq!(t[g.mul(x, z) * n + y], (t[x * n + y] + t[z * n + y]) % e);
                            assert_eq!(t[x * n + g.mul(y, z)], (t[x * n + y] + t[x * n + z]) % e);
                        }
                    }
                    for &d in der.elements() {
                        assert_eq!(t[d * n + x], 0);
                        assert_eq!(t[x * n + d], 0);
                    }
                }
                assert_eq!(b.transpose(&g).transpose(&g), b);
            }
        }
    }
}
