//! Exact irreducible character tables by the Burnside–Dixon method.
//!
//! Central characters ω_χ(K_i) = |C_i| χ(g_i)/χ(1) are the common
//! eigenvectors of the class-multiplication matrices. They are computed
//! modulo a prime p ≡ 1 (mod e) from a random combination of those
//! matrices, turned into character values mod p through the degree formula,
//! and lifted to Q(ζ_e) through eigenvalue multiplicities of cyclic
//! subgroups.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::cyclotomic::CycScalar;
use crate::error::{Error, Result};
use crate::groups::FiniteGroup;
use crate::modp::{inv_mod, mul_mod, pow_mod, prime_congruent_one, root_of_unity};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    /// Conductor of the value field.
    pub e: u32,
    pub group_order: usize,
    /// Classes in the group's canonical order (identity first).
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// `values[i][j]` = χ_i on class j. Row 0 is the trivial character.
    pub values: Vec<Vec<CycScalar>>,
    pub degrees: Vec<u64>,
}

/// The linear character μ of Z(H) with η(z) = μ(z)η(1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralCharacter {
    pub e: u32,
    /// Members of Z(H) in increasing order.
    pub center: Vec<usize>,
    /// μ(z) = ζ_e^phase for the matching member of `center`.
    pub phases: Vec<u32>,
}

impl CentralCharacter {
    pub fn phase_at(&self, z: usize) -> Option<u32> {
        self.center
            .iter()
            .position(|&x| x == z)
            .map(|i| self.phases[i])
    }

    pub fn is_trivial(&self) -> bool {
        self.phases.iter().all(|&x| x == 0)
    }
}

impl CharacterTable {
    /// The table over Q(ζ_e) with e = exp(G).
    pub fn compute(g: &FiniteGroup) -> Result<Self> {
        Self::compute_with_conductor(g, g.exponent() as u32)
    }

    /// The table with values in Q(ζ_e); e must be a multiple of exp(G).
    pub fn compute_with_conductor(g: &FiniteGroup, e: u32) -> Result<Self> {
        if e as usize % g.exponent() != 0 {
            return Err(Error::pre("conductor must be a multiple of the exponent"));
        }
        let n = g.order();
        let cls = g.classes();
        let k = cls.list.len();
        let reps: Vec<usize> = cls.list.iter().map(|c| c[0]).collect();
        let sizes: Vec<u64> = cls.list.iter().map(|c| c.len() as u64).collect();
        let inv_class: Vec<usize> = reps.iter().map(|&r| cls.class_of[g.inv(r)]).collect();
        let mut start = 2 * n as u64 * e as u64 + 1;
        for _attempt in 0..4 {
            let p = prime_congruent_one(e as u64, start);
            start = p + 1;
            // c[i][j][l] = #{x ∈ C_i : x⁻¹ g_l ∈ C_j}
            let mut c = vec![0u64; k * k * k];
            for (i, ci) in cls.list.iter().enumerate() {
                for &x in ci {
                    let xi = g.inv(x);
                    for (l, &gl) in reps.iter().enumerate() {
                        let j = cls.class_of[g.mul(xi, gl)];
                        c[(i * k + j) * k + l] += 1;
                    }
                }
            }
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            for _try in 0..8 {
                let coef: Vec<u64> = (0..k).map(|_| rng.gen_range(1..p)).collect();
                let mut m = vec![vec![0u64; k]; k];
                for (i, &ri) in coef.iter().enumerate() {
                    for j in 0..k {
                        for l in 0..k {
                            let x = c[(i * k + j) * k + l] % p;
                            if x != 0 {
                                m[j][l] = (m[j][l] + mul_mod(ri, x, p)) % p;
                            }
                        }
                    }
                }
                let roots = distinct_roots(&charpoly_mod(&m, p), p);
                if roots.len() != k {
                    continue;
                }
                let omegas: Option<Vec<Vec<u64>>> =
                    roots.iter().map(|&lam| eigenvector(&m, lam, p)).collect();
                let Some(omegas) = omegas else { continue };
                if let Ok(t) = Self::from_central_characters(g, e, p, &omegas, &sizes, &inv_class) {
                    return Ok(t);
                }
            }
        }
        Err(Error::invariant("no prime separated the central characters"))
    }

    fn from_central_characters(
        g: &FiniteGroup,
        e: u32,
        p: u64,
        omegas: &[Vec<u64>],
        sizes: &[u64],
        inv_class: &[usize],
    ) -> Result<Self> {
        let n = g.order();
        let cls = g.classes();
        let k = sizes.len();
        let z = root_of_unity(p, e as u64);
        let bad = || Error::invariant("central character does not lift");
        let mut rows: Vec<(u64, Vec<CycScalar>)> = Vec::with_capacity(k);
        for w in omegas {
            // d² = |G| / Σ_l ω_l ω_{l'} / |C_l|
            let mut s = 0u64;
            for l in 0..k {
                let t = mul_mod(mul_mod(w[l], w[inv_class[l]], p), inv_mod(sizes[l] % p, p), p);
                s = (s + t) % p;
            }
            if s == 0 {
                return Err(bad());
            }
            let d2 = mul_mod(n as u64 % p, inv_mod(s, p), p);
            let d = (1..=n as u64)
                .take_while(|d| d * d <= n as u64)
                .find(|d| d * d % p == d2)
                .ok_or_else(bad)?;
            let chi: Vec<u64> = (0..k)
                .map(|l| mul_mod(mul_mod(w[l], d, p), inv_mod(sizes[l] % p, p), p))
                .collect();
            // lift: multiplicities of ζ_o^j as eigenvalues on ⟨g_l⟩
            let mut vals = Vec::with_capacity(k);
            for list in &cls.list {
                let x = list[0];
                let o = g.element_order(x) as u64;
                let zo = pow_mod(z, e as u64 / o, p);
                let zo_inv = inv_mod(zo, p);
                let powers: Vec<u64> = (0..o)
                    .map(|t| chi[cls.class_of[g.pow(x, t as i64)]])
                    .collect();
                let inv_o = inv_mod(o % p, p);
                let mut val = CycScalar::zero(e);
                let mut total = 0u64;
                for j in 0..o {
                    let step = pow_mod(zo_inv, j, p);
                    let mut acc = 0u64;
                    let mut f = 1u64;
                    for &v in &powers {
                        acc = (acc + mul_mod(v, f, p)) % p;
                        f = mul_mod(f, step, p);
                    }
                    let mult = mul_mod(acc, inv_o, p);
                    if mult > d {
                        return Err(bad());
                    }
                    total += mult;
                    if mult > 0 {
                        val += &CycScalar::root(e, (j * (e as u64 / o)) as i64)
                            .scale_int(mult as i64);
                    }
                }
                if total != d {
                    return Err(bad());
                }
                vals.push(val);
            }
            rows.push((d, vals));
        }
        rows.sort_by_cached_key(|(d, v)| {
            let trivial = v.iter().all(CycScalar::is_one);
            let key: Vec<Vec<i64>> = v
                .iter()
                .map(|x| {
                    let mut c = x.numerators().to_vec();
                    c.push(x.denominator());
                    c
                })
                .collect();
            (!trivial, *d, key)
        });
        let t = CharacterTable {
            e,
            group_order: n,
            classes: cls.list.clone(),
            class_of: cls.class_of.clone(),
            degrees: rows.iter().map(|r| r.0).collect(),
            values: rows.into_iter().map(|r| r.1).collect(),
        };
        t.verify().map_err(Error::invariant)?;
        Ok(t)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_characters(&self) -> usize {
        self.values.len()
    }

    /// χ_i(x).
    pub fn value(&self, i: usize, x: usize) -> &CycScalar {
        &self.values[i][self.class_of[x]]
    }

    /// Exact row and column orthogonality, degree sum, trivial first row.
    pub fn verify(&self) -> std::result::Result<(), String> {
        let n = self.group_order as i64;
        let k = self.classes.len();
        if self.values.len() != k || self.values.iter().any(|r| r.len() != k) {
            return Err("character table is not square".into());
        }
        if !self.values[0].iter().all(CycScalar::is_one) {
            return Err("first row is not the trivial character".into());
        }
        if self.classes.first().map(|c| c.as_slice()) != Some(&[0][..]) {
            return Err("first class is not the identity".into());
        }
        for (i, row) in self.values.iter().enumerate() {
            if row[0] != CycScalar::from_int(self.e, self.degrees[i] as i64) {
                return Err(format!("degree of χ_{i} disagrees with χ_{i}(1)"));
            }
            if n % self.degrees[i] as i64 != 0 {
                return Err(format!("degree of χ_{i} does not divide |G|"));
            }
        }
        if self.degrees.iter().map(|d| d * d).sum::<u64>() != n as u64 {
            return Err("squared degrees do not sum to |G|".into());
        }
        let conj: Vec<Vec<CycScalar>> = self
            .values
            .iter()
            .map(|r| r.iter().map(CycScalar::conj).collect())
            .collect();
        for i in 0..k {
            for j in i..k {
                let mut acc = CycScalar::zero(self.e);
                for l in 0..k {
                    let t = &self.values[i][l] * &conj[j][l];
                    acc += &t.scale_int(self.classes[l].len() as i64);
                }
                let want = if i == j { n } else { 0 };
                if acc != CycScalar::from_int(self.e, want) {
                    return Err(format!("rows {i} and {j} are not orthogonal"));
                }
            }
        }
        for a in 0..k {
            for b in a..k {
                let mut acc = CycScalar::zero(self.e);
                for i in 0..k {
                    acc += &(&self.values[i][a] * &conj[i][b]);
                }
                let want = if a == b {
                    n / self.classes[a].len() as i64
                } else {
                    0
                };
                if acc != CycScalar::from_int(self.e, want) {
                    return Err(format!("columns {a} and {b} are not orthogonal"));
                }
            }
        }
        Ok(())
    }

    /// μ with η(z) = μ(z)η(1) on Z(H), for η = χ_i.
    pub fn central_character(&self, h: &FiniteGroup, i: usize) -> Result<CentralCharacter> {
        let center = h.center().elements().to_vec();
        let d = self.degrees[i] as i64;
        let phases = center
            .iter()
            .map(|&z| {
                self.value(i, z)
                    .scale_ratio(1, d)
                    .as_root_of_unity()
                    .ok_or_else(|| Error::invariant("η(z)/η(1) is not a root of unity"))
            })
            .collect::<Result<Vec<u32>>>()?;
        let mu = CentralCharacter {
            e: self.e,
            center,
            phases,
        };
        for (a, &za) in mu.center.iter().enumerate() {
            for (b, &zb) in mu.center.iter().enumerate() {
                let ab = mu.phase_at(h.mul(za, zb)).expect("center is closed");
                if ab != (mu.phases[a] + mu.phases[b]) % self.e {
                    return Err(Error::invariant("central character is not multiplicative"));
                }
            }
        }
        Ok(mu)
    }

    /// JSON: classes as element lists; each value as integer coefficients
    /// over ζ_e^0 … ζ_e^{e-1}.
    pub fn to_json(&self) -> Value {
        let values: Vec<Vec<Vec<i64>>> = self
            .values
            .iter()
            .map(|row| row.iter().map(|x| root_coefficients(x, self.e)).collect())
            .collect();
        json!({
            "conductor": self.e,
            "classes": self.classes,
            "values": values,
        })
    }

    /// Ingest an externally computed table and re-validate it fully.
    pub fn from_json(g: &FiniteGroup, value: &Value) -> Result<Self> {
        let bad = |s: &str| Error::parse(format!("character table: {s}"));
        let e = value["conductor"].as_u64().ok_or_else(|| bad("conductor"))? as u32;
        if e == 0 || e as usize % g.exponent() != 0 {
            return Err(bad("conductor is not a multiple of exp(G)"));
        }
        let cls = g.classes();
        let k = cls.list.len();
        let classes = value["classes"].as_array().ok_or_else(|| bad("classes"))?;
        if classes.len() != k {
            return Err(bad("wrong number of classes"));
        }
        // position of each given class in the canonical order
        let mut perm = Vec::with_capacity(k);
        for c in classes {
            let mut members: Vec<usize> = c
                .as_array()
                .ok_or_else(|| bad("class"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(|| bad("class member")))
                .collect::<Result<_>>()?;
            members.sort_unstable();
            let pos = cls
                .list
                .iter()
                .position(|l| *l == members)
                .ok_or_else(|| bad("a listed class is not a conjugacy class"))?;
            perm.push(pos);
        }
        let rows = value["values"].as_array().ok_or_else(|| bad("values"))?;
        if rows.len() != k {
            return Err(bad("table is not square"));
        }
        let mut values = Vec::with_capacity(k);
        for row in rows {
            let row = row.as_array().ok_or_else(|| bad("row"))?;
            if row.len() != k {
                return Err(bad("table is not square"));
            }
            let mut out = vec![CycScalar::zero(e); k];
            for (j, v) in row.iter().enumerate() {
                let coeffs = v.as_array().ok_or_else(|| bad("value"))?;
                let mut x = CycScalar::zero(e);
                for (t, c) in coeffs.iter().enumerate() {
                    let c = c.as_i64().ok_or_else(|| bad("coefficient"))?;
                    if c != 0 {
                        x += &CycScalar::root(e, t as i64).scale_int(c);
                    }
                }
                out[perm[j]] = x;
            }
            values.push(out);
        }
        let degrees = values
            .iter()
            .map(|r| {
                r[0].to_rational()
                    .filter(|&(a, b)| b == 1 && a > 0)
                    .map(|(a, _)| a as u64)
                    .ok_or_else(|| bad("degree is not a positive integer"))
            })
            .collect::<Result<Vec<_>>>()?;
        let mut rows: Vec<(u64, Vec<CycScalar>)> = degrees.into_iter().zip(values).collect();
        // trivial character first, others in the given order
        if let Some(t) = rows.iter().position(|(_, r)| r.iter().all(CycScalar::is_one)) {
            let triv = rows.remove(t);
            rows.insert(0, triv);
        }
        let t = CharacterTable {
            e,
            group_order: g.order(),
            classes: cls.list.clone(),
            class_of: cls.class_of.clone(),
            degrees: rows.iter().map(|r| r.0).collect(),
            values: rows.into_iter().map(|r| r.1).collect(),
        };
        t.verify()
            .map_err(|s| Error::invariant(format!("ingested character table: {s}")))?;
        Ok(t)
    }
}

/// Integer coefficients c_t with x = Σ_t c_t ζ_e^t (x an algebraic integer
/// expressed over the power basis, which is a subset of the roots).
fn root_coefficients(x: &CycScalar, e: u32) -> Vec<i64> {
    let mut out = vec![0i64; e as usize];
    for (t, &c) in x.numerators().iter().enumerate() {
        out[t] = c;
    }
    debug_assert_eq!(x.denominator(), 1);
    out
}

/// Characteristic polynomial (monic, coefficients low to high) of a square
/// matrix over F_p, via reduction to Hessenberg form.
fn charpoly_mod(m: &[Vec<u64>], p: u64) -> Vec<u64> {
    let k = m.len();
    let mut h: Vec<Vec<u64>> = m.to_vec();
    let sub = |a: u64, b: u64| (a + p - b) % p;
    for col in 0..k.saturating_sub(2) {
        let Some(piv) = (col + 1..k).find(|&r| h[r][col] != 0) else {
            continue;
        };
        if piv != col + 1 {
            h.swap(piv, col + 1);
            for row in h.iter_mut() {
                row.swap(piv, col + 1);
            }
        }
        let inv = inv_mod(h[col + 1][col], p);
        for r in col + 2..k {
            if h[r][col] == 0 {
                continue;
            }
            let f = mul_mod(h[r][col], inv, p);
            // row_r -= f·row_{col+1}; col_{col+1} += f·col_r
            for c in 0..k {
                let t = mul_mod(f, h[col + 1][c], p);
                h[r][c] = sub(h[r][c], t);
            }
            for row in h.iter_mut() {
                let t = mul_mod(f, row[r], p);
                row[col + 1] = (row[col + 1] + t) % p;
            }
        }
    }
    // p_0 = 1; p_m = (x − h_mm) p_{m−1} − Σ_{i<m} h_im (Π_{j=i+1}^{m} h_{j,j−1}) p_{i−1}
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for mm in 0..k {
        let prev = &polys[mm];
        let mut next = vec![0u64; mm + 2];
        for (d, &c) in prev.iter().enumerate() {
            next[d + 1] = (next[d + 1] + c) % p;
            next[d] = sub(next[d], mul_mod(h[mm][mm], c, p));
        }
        let mut prod = 1u64;
        for i in (0..mm).rev() {
            prod = mul_mod(prod, h[i + 1][i], p);
            if prod == 0 {
                break;
            }
            let f = mul_mod(h[i][mm], prod, p);
            if f == 0 {
                continue;
            }
            for (d, &c) in polys[i].iter().enumerate() {
                next[d] = sub(next[d], mul_mod(f, c, p));
            }
        }
        polys.push(next);
    }
    polys.pop().unwrap()
}

/// Distinct roots in F_p of a polynomial, when it splits into distinct
/// linear factors; otherwise a shorter list.
fn distinct_roots(poly: &[u64], p: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let deg = poly.len() - 1;
    for x in 0..p {
        let mut acc = 0u64;
        for &c in poly.iter().rev() {
            acc = (mul_mod(acc, x, p) + c) % p;
        }
        if acc == 0 {
            out.push(x);
            if out.len() == deg {
                break;
            }
        }
    }
    out
}

/// A vector spanning ker(M − λI), normalized to first coordinate 1; None
/// if the kernel is not one-dimensional or the vector cannot be normalized.
fn eigenvector(m: &[Vec<u64>], lam: u64, p: u64) -> Option<Vec<u64>> {
    let k = m.len();
    let mut a: Vec<Vec<u64>> = m.to_vec();
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = (row[i] + p - lam) % p;
    }
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(piv) = (r..k).find(|&i| a[i][c] != 0) else {
            continue;
        };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pr = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (cc, x) in row.iter_mut().enumerate() {
                    *x = (*x + p - mul_mod(f, pr[cc], p)) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if pivots.len() != k - 1 {
        return None;
    }
    let free = (0..k).find(|c| !pivots.contains(c))?;
    let mut v = vec![0u64; k];
    v[free] = 1;
    for (row, &c) in pivots.iter().enumerate() {
        v[c] = (p - a[row][free]) % p;
    }
    if v[0] == 0 {
        return None;
    }
    let inv = inv_mod(v[0], p);
    Some(v.iter().map(|&x| mul_mod(x, inv, p)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::library::*;
    use crate::groups::LinearCharacter;

    #[test]
    fn cyclic_two() {
        let t = CharacterTable::compute(&cyclic(2)).unwrap();
        assert_eq!(t.degrees, vec![1, 1]);
        assert!(t.values[1][1] == CycScalar::from_int(2, -1));
    }

    #[test]
    fn small_degrees() {
        assert_eq!(CharacterTable::compute(&symmetric(3)).unwrap().degrees, vec![1, 1, 2]);
        assert_eq!(
            CharacterTable::compute(&quaternion(8)).unwrap().degrees,
            vec![1, 1, 1, 1, 2]
        );
        assert_eq!(
            CharacterTable::compute(&alternating(5)).unwrap().degrees,
            vec![1, 3, 3, 4, 5]
        );
    }

    #[test]
    fn abelian_tables_are_dual_groups() {
        for g in [cyclic(6), direct_product(&cyclic(4), &cyclic(2))] {
            let t = CharacterTable::compute(&g).unwrap();
            let e = t.e;
            let mut rows: Vec<Vec<u32>> = t
                .values
                .iter()
                .map(|r| r.iter().map(|x| x.as_root_of_unity().unwrap()).collect())
                .collect();
            let mut dual: Vec<Vec<u32>> = LinearCharacter::dual_group(&g)
                .into_iter()
                .map(|c| (0..g.order()).map(|x| c.values[x]).collect())
                .collect();
            // tables are per class; for abelian groups classes are singletons
            for r in rows.iter_mut() {
                let mut full = vec![0; g.order()];
                for (j, cls) in t.classes.iter().enumerate() {
                    full[cls[0]] = r[j];
                }
                *r = full;
            }
            rows.sort();
            dual.sort();
            assert_eq!(rows, dual, "{}", e);
        }
    }

    #[test]
    fn central_character_of_q8() {
        let g = quaternion(8);
        let t = CharacterTable::compute(&g).unwrap();
        let two = t.degrees.iter().position(|&d| d == 2).unwrap();
        let mu = t.central_character(&g, two).unwrap();
        let minus_one = g.center().elements()[1];
        assert_eq!(mu.phase_at(minus_one), Some(t.e / 2));
        assert!(t.central_character(&g, 0).unwrap().is_trivial());
    }

    #[test]
    fn json_round_trip_and_rejection() {
        let g = dihedral(8);
        let t = CharacterTable::compute(&g).unwrap();
        let j = t.to_json();
        assert_eq!(CharacterTable::from_json(&g, &j).unwrap(), t);
        let mut broken = j.clone();
        broken["values"][1][1] = json!([0, 0, 5, 0, 0, 0, 0, 0]);
        assert!(CharacterTable::from_json(&g, &broken).is_err());
    }
}
