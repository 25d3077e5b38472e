//! Finite groups as dense Cayley tables, with subgroup machinery,
//! abelian-structure analysis and homomorphism enumeration.

mod abelian;
mod hom;
pub mod io;
mod iso;
pub mod library;
pub mod perm;
mod structure;
mod subgroup;

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub use abelian::{
    add_coords, enumerate_homs, hom_count, AbHom, AbelianStructure, Bicharacter, LinearCharacter,
};
pub use hom::{extend_from_generators, GroupHom};
pub use iso::{are_isomorphic, find_isomorphism};
pub(crate) use iso::search_homs as search_homs_pub;
pub use structure::{
    abelian_direct_factor, complement_in_abelian, is_perfect, is_purely_nonabelian, is_stem,
    DirectDecomposition,
};
pub use subgroup::Subgroup;

/// Default largest accepted group order.
pub const DEFAULT_MAX_ORDER: usize = 512;

/// Conjugacy-class data. Classes are ordered with the identity first, then
/// by class size, then by minimal element index; the representative of a
/// class is its minimal element.
#[derive(Debug, Clone)]
pub struct Classes {
    pub list: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// For each g, the minimal x with x g x⁻¹ equal to the class representative.
    pub conjugator: Vec<usize>,
}

/// A finite group given by its multiplication table. Element 0 is the identity.
pub struct FiniteGroup {
    name: String,
    n: usize,
    table: Vec<u32>,
    inverse: Vec<u32>,
    generators: Vec<usize>,
    labels: Option<Vec<String>>,
    orders: OnceLock<Vec<usize>>,
    classes: OnceLock<Classes>,
    center: OnceLock<Subgroup>,
    derived: OnceLock<Subgroup>,
    center_structure: OnceLock<AbelianStructure>,
    abelianization: OnceLock<AbelianStructure>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.name, self.n)
    }
}

impl Clone for FiniteGroup {
    fn clone(&self) -> Self {
        FiniteGroup::from_parts(
            self.name.clone(),
            self.n,
            self.table.clone(),
            self.generators.clone(),
            self.labels.clone(),
        )
    }
}

impl FiniteGroup {
    /// Trusted constructor: the table must already be a group table with
    /// identity 0.
    pub(crate) fn from_parts(
        name: String,
        n: usize,
        table: Vec<u32>,
        generators: Vec<usize>,
        labels: Option<Vec<String>>,
    ) -> Self {
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            for b in 0..n {
                if table[a * n + b] == 0 {
                    inverse[a] = b as u32;
                    break;
                }
            }
        }
        let mut g = FiniteGroup {
            name,
            n,
            table,
            inverse,
            generators,
            labels,
            orders: OnceLock::new(),
            classes: OnceLock::new(),
            center: OnceLock::new(),
            derived: OnceLock::new(),
            center_structure: OnceLock::new(),
            abelianization: OnceLock::new(),
        };
        if g.generators.is_empty() && n > 1 {
            g.generators = g.greedy_generators();
        }
        g
    }

    /// Build a group from a full multiplication table, validating the group
    /// axioms exhaustively. The identity is relabelled to index 0; other
    /// elements keep their relative order.
    pub fn from_table(name: &str, rows: &[Vec<usize>], max_order: usize) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::parse("empty multiplication table"));
        }
        if n > max_order {
            return Err(Error::size(format!(
                "table of order {n} exceeds the maximum order {max_order}"
            )));
        }
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::parse(format!(
                    "row {i} has {} entries, expected {n}",
                    r.len()
                )));
            }
            if let Some(j) = r.iter().position(|&x| x >= n) {
                return Err(Error::parse(format!(
                    "entry ({i},{j}) = {} is out of range",
                    r[j]
                )));
            }
        }
        let id = (0..n)
            .find(|&e| (0..n).all(|x| rows[e][x] == x && rows[x][e] == x))
            .ok_or_else(|| Error::parse("table has no identity element"))?;
        for (i, r) in rows.iter().enumerate() {
            let mut seen = vec![false; n];
            for &x in r {
                if seen[x] {
                    return Err(Error::parse(format!("row {i} repeats element {x}")));
                }
                seen[x] = true;
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for r in rows {
                if seen[r[j]] {
                    return Err(Error::parse(format!("column {j} repeats element {}", r[j])));
                }
                seen[r[j]] = true;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = rows[a][b];
                for c in 0..n {
                    if rows[ab][c] != rows[a][rows[b][c]] {
                        return Err(Error::parse(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        // relabel: identity first, others in original order
        let mut order: Vec<usize> = vec![id];
        order.extend((0..n).filter(|&x| x != id));
        let mut pos = vec![0usize; n];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = pos[rows[order[a]][order[b]]] as u32;
            }
        }
        let labels = Some(order.iter().map(|o| format!("{o}")).collect());
        Ok(Self::from_parts(name.to_string(), n, table, Vec::new(), labels))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: &str) -> Self {
        self.name = name.to_string();
        self
    }

    /// Human-readable label of an element (permutation cycles or table index).
    pub fn label(&self, g: usize) -> String {
        match &self.labels {
            Some(l) => l[g].clone(),
            None => format!("{g}"),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// h g h⁻¹
    #[inline]
    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    /// a b a⁻¹ b⁻¹
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.element_order(a) as i64;
        let k = k.rem_euclid(o);
        let mut r = 0;
        for _ in 0..k {
            r = self.mul(r, a);
        }
        r
    }

    /// The raw multiplication table (row-major, n×n).
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn element_orders(&self) -> &[usize] {
        self.orders.get_or_init(|| {
            (0..self.n)
                .map(|a| {
                    let mut x = a;
                    let mut k = 1;
                    while x != 0 {
                        x = self.mul(x, a);
                        k += 1;
                    }
                    k
                })
                .collect()
        })
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.element_orders()[a]
    }

    pub fn exponent(&self) -> usize {
        self.element_orders()
            .iter()
            .fold(1, |acc, &o| num_integer::lcm(acc, o))
    }

    pub fn is_abelian(&self) -> bool {
        self.generators
            .iter()
            .all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// A generating set chosen greedily by decreasing element order
    /// (ties broken by index).
    pub fn greedy_generators(&self) -> Vec<usize> {
        let mut cand: Vec<usize> = (1..self.n).collect();
        let orders = self.element_orders().to_vec();
        cand.sort_by_key(|&x| (std::cmp::Reverse(orders[x]), x));
        let mut gens = Vec::new();
        let mut span = Subgroup::trivial(self.n);
        for x in cand {
            if span.order() == self.n {
                break;
            }
            if !span.contains(x) {
                gens.push(x);
                span = self.generate(&gens);
            }
        }
        gens
    }

    /// Subgroup generated by the given elements.
    pub fn generate(&self, gens: &[usize]) -> Subgroup {
        let mut member = vec![false; self.n];
        member[0] = true;
        let mut elems = vec![0usize];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &s in gens {
                let y = self.mul(x, s);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        Subgroup::from_members(member)
    }

    /// Subgroup generated by a subgroup and extra elements.
    pub fn join(&self, a: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens: Vec<usize> = a.elements().to_vec();
        gens.extend_from_slice(extra);
        self.generate(&gens)
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_members(vec![true; self.n])
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::trivial(self.n)
    }

    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| {
            let member = (0..self.n)
                .map(|z| self.generators.iter().all(|&g| self.mul(z, g) == self.mul(g, z)))
                .collect();
            Subgroup::from_members(member)
        })
    }

    pub fn derived_subgroup(&self) -> &Subgroup {
        self.derived.get_or_init(|| {
            let comms: HashSet<usize> = (0..self.n)
                .flat_map(|a| (0..self.n).map(move |b| (a, b)))
                .map(|(a, b)| self.commutator(a, b))
                .collect();
            let mut comms: Vec<usize> = comms.into_iter().collect();
            comms.sort_unstable();
            self.generate(&comms)
        })
    }

    pub fn centralizer(&self, s: usize) -> Subgroup {
        let member = (0..self.n)
            .map(|g| self.mul(g, s) == self.mul(s, g))
            .collect();
        Subgroup::from_members(member)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.elements()
            .iter()
            .all(|&x| self.generators.iter().all(|&g| h.contains(self.conj(g, x))))
    }

    pub fn classes(&self) -> &Classes {
        self.classes.get_or_init(|| {
            let mut seen = vec![false; self.n];
            let mut list: Vec<Vec<usize>> = Vec::new();
            for g in 0..self.n {
                if seen[g] {
                    continue;
                }
                let mut cls: Vec<usize> = (0..self.n).map(|h| self.conj(h, g)).collect();
                cls.sort_unstable();
                cls.dedup();
                for &c in &cls {
                    seen[c] = true;
                }
                list.push(cls);
            }
            list.sort_by_key(|c| (c[0] != 0, c.len(), c[0]));
            let mut class_of = vec![0usize; self.n];
            for (i, c) in list.iter().enumerate() {
                for &x in c {
                    class_of[x] = i;
                }
            }
            let conjugator = (0..self.n)
                .map(|g| {
                    let rep = list[class_of[g]][0];
                    (0..self.n)
                        .find(|&x| self.conj(x, g) == rep)
                        .expect("representative is conjugate")
                })
                .collect();
            Classes {
                list,
                class_of,
                conjugator,
            }
        })
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.classes().class_of[g]
    }

    pub fn class_rep(&self, g: usize) -> usize {
        let c = self.classes();
        c.list[c.class_of[g]][0]
    }

    pub fn class_reps(&self) -> Vec<usize> {
        self.classes().list.iter().map(|c| c[0]).collect()
    }

    /// Invariant-factor structure of Z(G).
    pub fn center_structure(&self) -> &AbelianStructure {
        self.center_structure.get_or_init(|| {
            AbelianStructure::of_subgroup(self, self.center())
                .expect("the center is abelian")
        })
    }

    /// Invariant-factor structure of G/G', with coordinates defined on all of G
    /// and generators given by minimal coset representatives.
    pub fn abelianization(&self) -> &AbelianStructure {
        self.abelianization
            .get_or_init(|| AbelianStructure::abelianization(self))
    }

    /// Subgroup as a standalone group, with the embedding into `self`.
    /// The standalone element i corresponds to the i-th smallest member.
    pub fn subgroup_as_group(&self, h: &Subgroup, name: &str) -> (FiniteGroup, Vec<usize>) {
        let elems = h.elements().to_vec();
        let m = elems.len();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in elems.iter().enumerate() {
            pos[x] = i;
        }
        let mut table = vec![0u32; m * m];
        for (i, &a) in elems.iter().enumerate() {
            for (j, &b) in elems.iter().enumerate() {
                table[i * m + j] = pos[self.mul(a, b)] as u32;
            }
        }
        let labels = Some(elems.iter().map(|&x| self.label(x)).collect());
        (
            FiniteGroup::from_parts(name.to_string(), m, table, Vec::new(), labels),
            elems,
        )
    }

    /// Quotient by a normal subgroup, with the projection. Cosets are
    /// indexed in order of their minimal element.
    pub fn quotient(&self, nsub: &Subgroup, name: &str) -> Result<(FiniteGroup, Vec<usize>)> {
        if !self.is_normal(nsub) {
            return Err(Error::pre("quotient by a non-normal subgroup"));
        }
        let mut proj = vec![usize::MAX; self.n];
        let mut reps = Vec::new();
        for g in 0..self.n {
            if proj[g] != usize::MAX {
                continue;
            }
            let idx = reps.len();
            reps.push(g);
            for &x in nsub.elements() {
                proj[self.mul(g, x)] = idx;
            }
        }
        let m = reps.len();
        let mut table = vec![0u32; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                table[i * m + j] = proj[self.mul(a, b)] as u32;
            }
        }
        Ok((
            FiniteGroup::from_parts(name.to_string(), m, table, Vec::new(), None),
            proj,
        ))
    }

    /// All normal subgroups, sorted by (order, element list).
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        let classes = self.classes().list.clone();
        let mut found: Vec<Subgroup> = vec![self.trivial_subgroup()];
        let mut keys: HashSet<Vec<usize>> = HashSet::new();
        keys.insert(vec![0]);
        let mut i = 0;
        while i < found.len() {
            let cur = found[i].clone();
            for c in &classes {
                if cur.contains(c[0]) {
                    continue;
                }
                let next = self.join(&cur, c);
                if keys.insert(next.elements().to_vec()) {
                    found.push(next);
                }
            }
            i += 1;
        }
        found.sort_by(|a, b| {
            (a.order(), a.elements()).cmp(&(b.order(), b.elements()))
        });
        found
    }

    /// Exhaustive check of the group axioms on the stored table.
    pub fn verify_axioms(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            if self.mul(0, a) != a || self.mul(a, 0) != a {
                return false;
            }
            if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                return false;
            }
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::library::*;
    use super::*;

    #[test]
    fn centers_and_derived_subgroups() {
        let q8 = quaternion(8);
        assert_eq!(q8.center().order(), 2);
        assert_eq!(q8.derived_subgroup(), q8.center());
        let s3 = symmetric(3);
        assert_eq!(s3.center().order(), 1);
        assert_eq!(s3.derived_subgroup().order(), 3);
        let z6 = cyclic(6);
        assert_eq!(z6.center().order(), 6);
        assert_eq!(z6.derived_subgroup().order(), 1);
        let a5 = alternating(5);
        assert_eq!(a5.derived_subgroup().order(), 60);
    }

    #[test]
    fn classes_and_centralizers() {
        let s3 = symmetric(3);
        let sizes: Vec<usize> = s3.classes().list.iter().map(|c| c.len()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2, 3]);
        let q8 = quaternion(8);
        assert_eq!(q8.classes().list.len(), 5);
        let i = q8.generators()[0];
        assert_eq!(q8.centralizer(i).order(), 4);
        for g in [symmetric(4), q8, dihedral(12)] {
            for s in g.elements() {
                let cls = &g.classes().list[g.class_of(s)];
                assert_eq!(cls.len() * g.centralizer(s).order(), g.order());
                let x = g.classes().conjugator[s];
                assert_eq!(g.conj(x, s), cls[0]);
            }
        }
    }

    #[test]
    fn abelianization_invariants() {
        assert_eq!(symmetric(3).abelianization().factors(), &[2]);
        assert_eq!(quaternion(8).abelianization().factors(), &[2, 2]);
        assert_eq!(cyclic(6).abelianization().factors(), &[6]);
        assert_eq!(alternating(4).abelianization().factors(), &[3]);
    }

    #[test]
    fn table_constructor_validates() {
        let rows = vec![vec![1, 0], vec![0, 1]];
        let g = FiniteGroup::from_table("Z2", &rows, 512).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.label(0), "1");
        let bad = vec![vec![0, 1], vec![1, 1]];
        assert!(matches!(
            FiniteGroup::from_table("bad", &bad, 512),
            Err(Error::Parse(_))
        ));
        let big: Vec<Vec<usize>> = (0..4).map(|i| (0..4).map(|j| (i + j) % 4).collect()).collect();
        assert!(matches!(
            FiniteGroup::from_table("Z4", &big, 3),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn quotients_and_normal_subgroups() {
        let d8 = dihedral(8);
        let (q, proj) = d8.quotient(d8.center(), "D8/Z").unwrap();
        assert_eq!(q.order(), 4);
        assert!(q.is_abelian());
        for a in d8.elements() {
            for b in d8.elements() {
                assert_eq!(proj[d8.mul(a, b)], q.mul(proj[a], proj[b]));
            }
        }
        assert_eq!(d8.normal_subgroups().len(), 6);
        assert_eq!(quaternion(8).normal_subgroups().len(), 6);
        assert_eq!(symmetric(3).normal_subgroups().len(), 3);
    }
}
