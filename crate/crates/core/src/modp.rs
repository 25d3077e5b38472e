//! Arithmetic modulo word-sized primes: primality, roots of unity and rank.

/// (a·b) mod p without overflow.
#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut k: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while k > 0 {
        if k & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        k >>= 1;
    }
    r
}

/// Inverse of a nonzero residue modulo a prime.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for all u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest prime p ≥ start with p ≡ 1 (mod m).
pub fn prime_congruent_one(m: u64, start: u64) -> u64 {
    let m = m.max(1);
    let mut k = start.saturating_sub(1).div_ceil(m).max(1);
    loop {
        let p = k * m + 1;
        if is_prime(p) {
            return p;
        }
        k += 1;
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest generator of the multiplicative group of F_p.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let fs = prime_factors(p - 1);
    (2..p)
        .find(|&g| fs.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("every prime field has a primitive root")
}

/// A primitive m-th root of unity modulo p (requires m | p-1).
pub fn root_of_unity(p: u64, m: u64) -> u64 {
    assert_eq!((p - 1) % m, 0, "{m} does not divide {p}-1");
    pow_mod(primitive_root(p), (p - 1) / m, p)
}

/// Rank of a matrix over F_p (rows are consumed).
pub fn rank_mod(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&r| rows[r][col] % p != 0) else {
            continue;
        };
        rows.swap(rank, piv);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col] == 0 {
                continue;
            }
            let f = row[col];
            for (c, x) in row.iter_mut().enumerate().skip(col) {
                *x = (*x + p - mul_mod(f, pivot_row[c], p)) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_roots() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(91) && !is_prime(1));
        assert!(is_prime(2_305_843_009_213_693_951));
        let p = prime_congruent_one(24, 100);
        assert_eq!(p, 193);
        let w = root_of_unity(p, 24);
        assert_eq!(pow_mod(w, 24, p), 1);
        assert!((1..24).all(|k| pow_mod(w, k, p) != 1));
    }

    #[test]
    fn rank_over_small_field() {
        let m = vec![vec![1, 2, 3], vec![2, 4, 6], vec![0, 1, 1]];
        assert_eq!(rank_mod(m, 7), 2);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert_eq!(rank_mod(id, 5), 2);
    }
}
