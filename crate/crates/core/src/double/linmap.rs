//! Linear endomorphisms of D(G) as sparse column matrices.

use serde::Serialize;

use super::element::{basis, DoubleElement, Double};
use crate::cyclotomic::CycScalar;
use crate::modp;

/// A linear map D(G) → D(G); column b holds the image of basis element b
/// as (row, coefficient) pairs sorted by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    n: usize,
    e: u32,
    cols: Vec<Vec<(u32, CycScalar)>>,
}

#[derive(Serialize)]
struct DumpEntry {
    col: u32,
    row: u32,
    value: CycScalar,
}

impl LinearMap {
    /// Build from the images of the basis elements, in flat index order.
    pub fn from_columns(n: usize, e: u32, images: Vec<DoubleElement>) -> Self {
        assert_eq!(images.len(), n * n, "one image per basis element");
        let cols = images
            .into_iter()
            .map(|x| x.terms().map(|(b, c)| (b, c.clone())).collect())
            .collect();
        LinearMap { n, e, cols }
    }

    pub(crate) fn from_raw(n: usize, e: u32, cols: Vec<Vec<(u32, CycScalar)>>) -> Self {
        LinearMap { n, e, cols }
    }

    /// Build from a function on basis pairs (g, h).
    pub fn from_fn(d: &Double, f: impl Fn(usize, usize) -> DoubleElement) -> Self {
        let n = d.group().order();
        let images = (0..n * n).map(|b| f(b / n, b % n)).collect();
        Self::from_columns(n, d.conductor(), images)
    }

    pub fn identity(d: &Double) -> Self {
        Self::from_fn(d, |g, h| d.basis_element(g, h))
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn conductor(&self) -> u32 {
        self.e
    }

    pub fn dim(&self) -> usize {
        self.n * self.n
    }

    pub fn column(&self, b: u32) -> &[(u32, CycScalar)] {
        &self.cols[b as usize]
    }

    /// ψ(e_g # h).
    pub fn image(&self, g: usize, h: usize) -> DoubleElement {
        let b = basis(self.n, g, h);
        DoubleElement::from_terms(self.n, self.cols[b as usize].iter().cloned())
    }

    pub fn apply(&self, x: &DoubleElement) -> DoubleElement {
        let mut out = DoubleElement::zero(self.n);
        for (b, c) in x.terms() {
            for (r, d) in &self.cols[b as usize] {
                out.add_term(*r, &(c * d));
            }
        }
        out
    }

    /// self ∘ other.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        let cols = other
            .cols
            .iter()
            .map(|col| {
                let x = DoubleElement::from_terms(self.n, col.iter().cloned());
                self.apply(&x).terms().map(|(b, c)| (b, c.clone())).collect()
            })
            .collect();
        LinearMap {
            n: self.n,
            e: self.e,
            cols,
        }
    }

    /// The first basis index where the two maps differ.
    pub fn first_difference(&self, other: &LinearMap) -> Option<u32> {
        (0..self.cols.len())
            .find(|&b| self.cols[b] != other.cols[b])
            .map(|b| b as u32)
    }

    pub fn nonzeros(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    /// Debug dump: (column, row, value) triples.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<DumpEntry> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(col, c)| {
                c.iter().map(move |(row, v)| DumpEntry {
                    col: col as u32,
                    row: *row,
                    value: v.clone(),
                })
            })
            .collect();
        serde_json::json!({
            "group_order": self.n,
            "conductor": self.e,
            "entries": entries,
        })
    }

    /// Exact bijectivity test.
    ///
    /// Columns are grouped into blocks by the right coset of the output
    /// group-algebra component; each block must be square and of full rank.
    /// Ranks are computed modulo primes p ≡ 1 (mod e); a deficient rank is
    /// re-checked with further primes and finally by exact elimination over
    /// Q(ζ_e).
    pub fn is_bijective(&self) -> bool {
        let n = self.n;
        let dim = n * n;
        // connected components of the bipartite graph (columns, rows) keyed
        // by the group-algebra coordinate h of the rows: union-find over h.
        let mut parent: Vec<usize> = (0..n).collect();
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
        for col in &self.cols {
            if col.is_empty() {
                return false;
            }
            let h0 = col[0].0 as usize % n;
            for (r, _) in col.iter().skip(1) {
                let a = find(&mut parent, h0);
                let b = find(&mut parent, *r as usize % n);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut block_cols: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (b, col) in self.cols.iter().enumerate() {
            let root = find(&mut parent, col[0].0 as usize % n);
            block_cols[root].push(b);
        }
        let mut hs_in: Vec<Vec<usize>> = vec![Vec::new(); n];
        for h in 0..n {
            let root = find(&mut parent, h);
            hs_in[root].push(h);
        }
        let mut total = 0;
        for root in 0..n {
            let cols = &block_cols[root];
            if cols.is_empty() {
                continue;
            }
            let rows_h = &hs_in[root];
            if cols.len() != rows_h.len() * n {
                return false;
            }
            total += cols.len();
            if !self.block_full_rank(cols, rows_h) {
                return false;
            }
        }
        total == dim
    }

    fn block_full_rank(&self, cols: &[usize], rows_h: &[usize]) -> bool {
        let n = self.n;
        let size = cols.len();
        let mut row_index = vec![usize::MAX; n * n];
        let mut k = 0;
        for g in 0..n {
            for &h in rows_h {
                row_index[g * n + h] = k;
                k += 1;
            }
        }
        let e = self.e as u64;
        let mut start = 1u64 << 31;
        for _ in 0..3 {
            let p = modp::prime_congruent_one(e.max(2), start);
            start = p + 1;
            let omega = modp::root_of_unity(p, e.max(1));
            let mut rows = vec![vec![0u64; size]; size];
            let mut ok = true;
            for (j, &b) in cols.iter().enumerate() {
                for (r, c) in &self.cols[b] {
                    match c.reduce_mod(p, omega) {
                        Some(v) => rows[row_index[*r as usize]][j] = v,
                        None => ok = false,
                    }
                }
            }
            if ok && modp::rank_mod(rows, p) == size {
                return true;
            }
        }
        self.block_full_rank_exact(cols, &row_index, size)
    }

    fn block_full_rank_exact(&self, cols: &[usize], row_index: &[usize], size: usize) -> bool {
        let zero = CycScalar::zero(self.e);
        let mut m = vec![vec![zero.clone(); size]; size];
        for (j, &b) in cols.iter().enumerate() {
            for (r, c) in &self.cols[b] {
                m[row_index[*r as usize]][j] = c.clone();
            }
        }
        let mut rank = 0;
        for col in 0..size {
            let Some(piv) = (rank..size).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = m[rank][col].inv().expect("nonzero cyclotomic scalar is invertible");
            let pivot: Vec<CycScalar> = m[rank].iter().map(|x| x * &inv).collect();
            for r in 0..size {
                if r != rank && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in col..size {
                        let t = &f * &pivot[c];
                        m[r][c] -= &t;
                    }
                }
            }
            m[rank] = pivot;
            rank += 1;
        }
        rank == size
    }
}
