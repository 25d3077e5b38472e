//! Exact arithmetic in the cyclotomic field Q(ζ_e).
//!
//! Elements are stored over the power basis 1, ζ, …, ζ^{φ(e)-1} as an
//! integer numerator vector with a single positive common denominator,
//! reduced modulo the e-th cyclotomic polynomial. The representation is
//! canonical, so structural equality is field equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Largest supported conductor.
pub const MAX_CONDUCTOR: usize = 1024;

/// Precomputed reduction data for one conductor.
#[derive(Debug)]
pub struct CycTables {
    pub e: u32,
    pub phi: usize,
    /// Coefficients of Φ_e, lowest degree first (monic, length φ+1).
    pub poly: Vec<i64>,
    /// ζ^k reduced to the power basis, for k in 0..e.
    pub powers: Vec<Vec<i64>>,
}

#[allow(clippy::declare_interior_mutable_const)]
const EMPTY: OnceLock<CycTables> = OnceLock::new();
static TABLES: [OnceLock<CycTables>; MAX_CONDUCTOR + 1] = [EMPTY; MAX_CONDUCTOR + 1];

/// Reduction tables for conductor `e` (computed once, then shared).
pub fn tables(e: u32) -> &'static CycTables {
    assert!(
        e >= 1 && (e as usize) <= MAX_CONDUCTOR,
        "conductor {e} out of range"
    );
    TABLES[e as usize].get_or_init(|| CycTables::new(e))
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d of n.
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            p = poly_div_exact(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = *den.last().unwrap();
    debug_assert_eq!(lead, 1);
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for k in (0..qlen).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (i, &di) in den.iter().enumerate() {
            rem[k + i] -= c * di;
        }
    }
    debug_assert!(rem.iter().all(|&x| x == 0), "inexact polynomial division");
    q
}

impl CycTables {
    fn new(e: u32) -> Self {
        let poly = cyclotomic_polynomial(e);
        let phi = poly.len() - 1;
        let mut powers = Vec::with_capacity(e as usize);
        let mut cur = vec![0i64; phi];
        cur[0] = 1;
        for _ in 0..e {
            powers.push(cur.clone());
            // multiply by ζ
            let top = cur[phi - 1];
            let mut next = vec![0i64; phi];
            next[1..phi].copy_from_slice(&cur[..(phi - 1)]);
            for i in 0..phi {
                next[i] -= top * poly[i];
            }
            cur = next;
        }
        CycTables {
            e,
            phi,
            poly,
            powers,
        }
    }
}

type Coeffs = SmallVec<[i64; 8]>;

/// An exact element of Q(ζ_e).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycScalar {
    e: u32,
    num: Coeffs,
    den: i64,
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

impl CycScalar {
    /// The zero element of Q(ζ_e).
    pub fn zero(e: u32) -> Self {
        let t = tables(e);
        CycScalar {
            e,
            num: SmallVec::from_elem(0, t.phi),
            den: 1,
        }
    }

    pub fn one(e: u32) -> Self {
        Self::from_int(e, 1)
    }

    pub fn from_int(e: u32, n: i64) -> Self {
        let mut s = Self::zero(e);
        s.num[0] = n;
        s
    }

    /// The rational number `n/d`.
    pub fn from_ratio(e: u32, n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        let mut s = Self::zero(e);
        s.num[0] = n;
        s.den = d;
        s.normalize();
        s
    }

    /// The root of unity ζ_e^k (k taken modulo e).
    pub fn root(e: u32, k: i64) -> Self {
        let t = tables(e);
        let k = k.rem_euclid(e as i64) as usize;
        CycScalar {
            e,
            num: SmallVec::from_slice(&t.powers[k]),
            den: 1,
        }
    }

    /// Build from power-basis numerators over a common denominator.
    pub fn from_coeffs(e: u32, num: &[i64], den: i64) -> Result<Self> {
        let t = tables(e);
        if num.len() != t.phi {
            return Err(Error::parse(format!(
                "expected {} coefficients for conductor {e}, got {}",
                t.phi,
                num.len()
            )));
        }
        if den == 0 {
            return Err(Error::parse("zero denominator"));
        }
        let mut s = CycScalar {
            e,
            num: SmallVec::from_slice(num),
            den,
        };
        s.normalize();
        Ok(s)
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|&c| c == 0)
    }

    pub fn is_one(&self) -> bool {
        self.den == 1 && self.num[0] == 1 && self.num[1..].iter().all(|&c| c == 0)
    }

    /// Coefficient of ζ^i as a reduced fraction.
    pub fn coeff(&self, i: usize) -> (i64, i64) {
        let g = self.num[i].gcd(&self.den);
        if g == 0 {
            return (0, 1);
        }
        (self.num[i] / g, self.den / g)
    }

    /// The rational value, if the element lies in Q.
    pub fn to_rational(&self) -> Option<(i64, i64)> {
        if self.num[1..].iter().all(|&c| c == 0) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// Returns k with self = ζ_e^k, if self is an e-th root of unity.
    pub fn as_root_of_unity(&self) -> Option<u32> {
        if self.den != 1 {
            return None;
        }
        let t = tables(self.e);
        (0..self.e).find(|&k| t.powers[k as usize][..] == self.num[..])
    }

    fn normalize(&mut self) {
        if self.den < 0 {
            self.den = -self.den;
            for c in self.num.iter_mut() {
                *c = -*c;
            }
        }
        if self.den == 1 {
            return;
        }
        let mut g = self.den;
        for &c in self.num.iter() {
            g = g.gcd(&c);
            if g == 1 {
                return;
            }
        }
        if self.is_zero() {
            self.den = 1;
            return;
        }
        self.den /= g;
        for c in self.num.iter_mut() {
            *c /= g;
        }
    }

    fn from_wide(e: u32, wide: &[i128], den: i128) -> Self {
        let mut g = den;
        for &c in wide {
            if g == 1 {
                break;
            }
            g = gcd_i128(g, c);
        }
        let all_zero = wide.iter().all(|&c| c == 0);
        let (g, den) = if all_zero {
            (1, 1)
        } else {
            let g = if den < 0 { -g } else { g };
            (g, den / g)
        };
        let num: Coeffs = wide
            .iter()
            .map(|&c| i64::try_from(c / g).expect("cyclotomic numerator overflow"))
            .collect();
        CycScalar {
            e,
            num,
            den: i64::try_from(den).expect("cyclotomic denominator overflow"),
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.e, other.e, "mixed cyclotomic conductors");
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.den == other.den {
            let mut out = self.clone();
            for (a, b) in out.num.iter_mut().zip(other.num.iter()) {
                *a = a.checked_add(*b).expect("cyclotomic numerator overflow");
            }
            out.normalize();
            return out;
        }
        let (da, db) = (self.den as i128, other.den as i128);
        let wide: Vec<i128> = self
            .num
            .iter()
            .zip(other.num.iter())
            .map(|(&a, &b)| a as i128 * db + b as i128 * da)
            .collect();
        Self::from_wide(self.e, &wide, da * db)
    }

    pub fn neg_ref(&self) -> Self {
        let mut out = self.clone();
        for c in out.num.iter_mut() {
            *c = -*c;
        }
        out
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.check_same(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.e);
        }
        let t = tables(self.e);
        let phi = t.phi;
        let mut prod = vec![0i128; 2 * phi - 1];
        for (i, &a) in self.num.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.num.iter().enumerate() {
                prod[i + j] += a as i128 * b as i128;
            }
        }
        let mut wide = vec![0i128; phi];
        wide.copy_from_slice(&prod[..phi]);
        for (k, &c) in prod.iter().enumerate().skip(phi) {
            if c == 0 {
                continue;
            }
            let pw = &t.powers[k % t.e as usize];
            for i in 0..phi {
                wide[i] += c * pw[i] as i128;
            }
        }
        Self::from_wide(self.e, &wide, self.den as i128 * other.den as i128)
    }

    /// Multiply by the integer `k`.
    pub fn scale_int(&self, k: i64) -> Self {
        let wide: Vec<i128> = self.num.iter().map(|&c| c as i128 * k as i128).collect();
        Self::from_wide(self.e, &wide, self.den as i128)
    }

    /// Multiply by the rational `n/d`.
    pub fn scale_ratio(&self, n: i64, d: i64) -> Self {
        let wide: Vec<i128> = self.num.iter().map(|&c| c as i128 * n as i128).collect();
        Self::from_wide(self.e, &wide, self.den as i128 * d as i128)
    }

    /// Multiply by ζ^k.
    pub fn mul_root(&self, k: i64) -> Self {
        self.mul_ref(&Self::root(self.e, k))
    }

    /// Apply the Galois automorphism ζ ↦ ζ^k (k coprime to e).
    pub fn galois(&self, k: i64) -> Self {
        let t = tables(self.e);
        let e = self.e as i64;
        debug_assert_eq!(k.rem_euclid(e).gcd(&e), 1);
        let mut wide = vec![0i128; t.phi];
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let pw = &t.powers[(i as i64 * k).rem_euclid(e) as usize];
            for j in 0..t.phi {
                wide[j] += c as i128 * pw[j] as i128;
            }
        }
        Self::from_wide(self.e, &wide, self.den as i128)
    }

    /// Complex conjugation ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Multiplicative inverse (None for zero).
    ///
    /// Solves x·y = 1 as a rational linear system in the coefficients of y.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let t = tables(self.e);
        let phi = t.phi;
        // Column j of M is the coefficient vector of x·ζ^j.
        let cols: Vec<CycScalar> = (0..phi).map(|j| self.mul_root(j as i64)).collect();
        let mut m: Vec<Vec<Ratio<i128>>> = (0..phi)
            .map(|i| {
                let mut row: Vec<Ratio<i128>> = cols
                    .iter()
                    .map(|c| Ratio::new(c.num[i] as i128, c.den as i128))
                    .collect();
                row.push(Ratio::from_integer(if i == 0 { 1 } else { 0 }));
                row
            })
            .collect();
        for col in 0..phi {
            let piv = (col..phi).find(|&r| m[r][col] != Ratio::from_integer(0))?;
            m.swap(col, piv);
            let p = m[col][col];
            for x in m[col].iter_mut() {
                *x /= p;
            }
            for r in 0..phi {
                if r != col && m[r][col] != Ratio::from_integer(0) {
                    let f = m[r][col];
                    for c in col..=phi {
                        let v = m[col][c];
                        m[r][c] -= f * v;
                    }
                }
            }
        }
        let den = m
            .iter()
            .fold(1i128, |acc, row| acc.lcm(row[phi].denom()));
        let wide: Vec<i128> = m
            .iter()
            .map(|row| row[phi].numer() * (den / row[phi].denom()))
            .collect();
        Some(Self::from_wide(self.e, &wide, den))
    }

    /// Image in F_p under ζ ↦ omega (omega a primitive e-th root of unity mod p).
    pub fn reduce_mod(&self, p: u64, omega: u64) -> Option<u64> {
        let d = (self.den as i128).rem_euclid(p as i128) as u64;
        if d == 0 {
            return None;
        }
        let mut acc = 0u64;
        let mut w = 1u64;
        for &c in self.num.iter() {
            let cm = (c as i128).rem_euclid(p as i128) as u64;
            acc = (acc + crate::modp::mul_mod(cm, w, p)) % p;
            w = crate::modp::mul_mod(w, omega, p);
        }
        Some(crate::modp::mul_mod(acc, crate::modp::inv_mod(d, p), p))
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.num.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let (n, d) = self.coeff(i);
            let sign = if n < 0 { "-" } else { "+" };
            if first {
                if n < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = n.abs();
            let coef = if d == 1 {
                format!("{a}")
            } else {
                format!("{a}/{d}")
            };
            match i {
                0 => write!(f, "{coef}")?,
                _ => {
                    if a == 1 && d == 1 {
                        write!(f, "z{}^{}", self.e, i)?
                    } else {
                        write!(f, "{coef}*z{}^{}", self.e, i)?
                    }
                }
            }
        }
        Ok(())
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.add_ref(rhs)
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self.sub_ref(rhs)
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.mul_ref(rhs)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.neg_ref()
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = self.add_ref(rhs);
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = self.sub_ref(rhs);
    }
}

/// Rational number formatted as "n" or "n/d".
pub fn format_ratio(n: i64, d: i64) -> String {
    if d == 1 {
        format!("{n}")
    } else {
        format!("{n}/{d}")
    }
}

/// Parse "n" or "n/d".
pub fn parse_ratio(s: &str) -> Result<(i64, i64)> {
    let bad = || Error::parse(format!("bad rational '{s}'"));
    match s.split_once('/') {
        None => Ok((s.trim().parse().map_err(|_| bad())?, 1)),
        Some((a, b)) => {
            let n: i64 = a.trim().parse().map_err(|_| bad())?;
            let d: i64 = b.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            let g = n.gcd(&d);
            let (n, d) = (n / g, d / g);
            Ok(if d < 0 { (-n, -d) } else { (n, d) })
        }
    }
}

#[derive(Serialize, Deserialize)]
struct CycRepr {
    conductor: u32,
    coeffs: Vec<String>,
}

impl Serialize for CycScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let coeffs = (0..self.num.len())
            .map(|i| {
                let (n, d) = self.coeff(i);
                format_ratio(n, d)
            })
            .collect();
        CycRepr {
            conductor: self.e,
            coeffs,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CycScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = CycRepr::deserialize(d)?;
        if r.conductor == 0 || r.conductor as usize > MAX_CONDUCTOR {
            return Err(serde::de::Error::custom("conductor out of range"));
        }
        let mut acc = CycScalar::zero(r.conductor);
        if r.coeffs.len() != acc.num.len() {
            return Err(serde::de::Error::custom("wrong coefficient count"));
        }
        for (i, c) in r.coeffs.iter().enumerate() {
            let (n, d) = parse_ratio(c).map_err(serde::de::Error::custom)?;
            let mut term = CycScalar::zero(r.conductor);
            term.num[i] = n;
            term.den = d;
            term.normalize();
            acc += &term;
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        // Φ_105 is the first with a coefficient of absolute value 2.
        assert!(cyclotomic_polynomial(105).iter().any(|&c| c == -2));
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for e in [2u32, 3, 4, 5, 6, 8, 12, 16] {
            let mut s = CycScalar::zero(e);
            for k in 0..e as i64 {
                s += &CycScalar::root(e, k);
            }
            assert!(s.is_zero(), "e = {e}");
            assert_eq!(CycScalar::root(e, e as i64), CycScalar::one(e));
        }
    }

    #[test]
    fn root_products_and_conjugation() {
        let e = 12;
        for a in 0..12 {
            for b in 0..12 {
                let p = &CycScalar::root(e, a) * &CycScalar::root(e, b);
                assert_eq!(p, CycScalar::root(e, a + b));
                assert_eq!(p.as_root_of_unity(), Some(((a + b) % 12) as u32));
            }
            assert_eq!(CycScalar::root(e, a).conj(), CycScalar::root(e, -a));
        }
    }

    #[test]
    fn inverse_and_rationals() {
        let e = 8;
        let x = &CycScalar::from_ratio(e, 3, 2) + &CycScalar::root(e, 1);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert_eq!(CycScalar::from_ratio(e, 4, -6).to_rational(), Some((-2, 3)));
        assert!(CycScalar::zero(e).inv().is_none());
    }

    #[test]
    fn serde_round_trip() {
        let e = 6;
        let x = &CycScalar::from_ratio(6, 1, 3) + &CycScalar::root(e, 1).scale_int(-2);
        let js = serde_json::to_string(&x).unwrap();
        let y: CycScalar = serde_json::from_str(&js).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn reduction_mod_p_is_a_ring_map() {
        let e = 8u32;
        let p = crate::modp::prime_congruent_one(e as u64, 1000);
        let w = crate::modp::root_of_unity(p, e as u64);
        let a = &CycScalar::root(e, 3) + &CycScalar::from_ratio(e, 5, 7);
        let b = &CycScalar::root(e, 5).scale_int(3) - &CycScalar::one(e);
        let ab = (&a * &b).reduce_mod(p, w).unwrap();
        let expect = crate::modp::mul_mod(a.reduce_mod(p, w).unwrap(), b.reduce_mod(p, w).unwrap(), p);
        assert_eq!(ab, expect);
    }
}
