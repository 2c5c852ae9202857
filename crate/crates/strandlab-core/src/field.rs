//! Arithmetic in the prime field F_p and exact sparse linear algebra.
//!
//! Every degreewise computation in the crate bottoms out here: ranks and
//! nullspaces of sparse matrices over F_p, computed by Gaussian elimination
//! with left-to-right pivot preference so that pivot sets and nullspace
//! bases are reproducible.

use alloc::vec;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A prime field F_p. Element values are always reduced to `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FieldSpec {
    p: u64,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::Invalid(alloc::format!("{p} is not prime")));
        }
        Ok(FieldSpec { p })
    }

    #[inline]
    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, a: u64) -> u64 {
        a % self.p
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.p as u128) as u64
    }

    /// Multiplicative inverse via the extended Euclidean algorithm.
    pub fn inv(&self, a: u64) -> Result<u64> {
        if a % self.p == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.p as i128, (a % self.p) as i128);
        let (mut t0, mut t1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        debug_assert_eq!(r0, 1);
        let t = t0.rem_euclid(self.p as i128) as u64;
        Ok(t)
    }

    #[inline]
    pub fn div(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Sparse row vector: (column, value) pairs sorted by column, values nonzero.
pub type SparseRow = Vec<(usize, u64)>;

/// A sparse matrix over F_p in coordinate form, stored row-major.
/// No duplicate positions, no explicit zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: usize,
    pub field: FieldSpec,
    row_data: Vec<SparseRow>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize, field: FieldSpec) -> Self {
        SparseMatrix {
            rows,
            cols,
            field,
            row_data: vec![Vec::new(); rows],
        }
    }

    /// Build from (row, col, value) triples. Duplicate positions are summed.
    pub fn from_triples(
        rows: usize,
        cols: usize,
        field: FieldSpec,
        triples: impl IntoIterator<Item = (usize, usize, u64)>,
    ) -> Self {
        let mut m = SparseMatrix::zero(rows, cols, field);
        for (r, c, v) in triples {
            m.add_entry(r, c, v);
        }
        for row in &mut m.row_data {
            row.sort_unstable_by_key(|&(c, _)| c);
        }
        m
    }

    /// Adds `v` to position (r, c), dropping the entry if it becomes zero.
    pub fn add_entry(&mut self, r: usize, c: usize, v: u64) {
        let v = self.field.reduce(v);
        if v == 0 {
            return;
        }
        debug_assert!(r < self.rows && c < self.cols);
        let row = &mut self.row_data[r];
        match row.iter().position(|&(cc, _)| cc == c) {
            Some(k) => {
                let nv = self.field.add(row[k].1, v);
                if nv == 0 {
                    row.remove(k);
                } else {
                    row[k].1 = nv;
                }
            }
            None => row.push((c, v)),
        }
    }

    pub fn row(&self, r: usize) -> &SparseRow {
        &self.row_data[r]
    }

    pub fn nnz(&self) -> usize {
        self.row_data.iter().map(|r| r.len()).sum()
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut t = SparseMatrix::zero(self.cols, self.rows, self.field);
        for (r, row) in self.row_data.iter().enumerate() {
            for &(c, v) in row {
                t.row_data[c].push((r, v));
            }
        }
        for row in &mut t.row_data {
            row.sort_unstable_by_key(|&(c, _)| c);
        }
        t
    }

    /// Rank only; cheaper than `row_reduce` when the nullspace is not needed.
    pub fn rank(&self) -> usize {
        self.echelon().len()
    }

    /// Row echelon basis of the row space. Each returned row is monic at its
    /// leading (= smallest) column and rows are kept in pivot-column order.
    fn echelon(&self) -> Vec<SparseRow> {
        let f = self.field;
        // pivot column -> index into `basis`
        let mut pivot_of_col: Vec<Option<usize>> = vec![None; self.cols];
        let mut basis: Vec<SparseRow> = Vec::new();
        for row in &self.row_data {
            let mut cur = row.clone();
            loop {
                let Some(&(lead, lv)) = cur.first() else { break };
                match pivot_of_col[lead] {
                    Some(bi) => {
                        cur = row_sub_scaled(f, &cur, &basis[bi], lv);
                    }
                    None => {
                        let inv = f.inv(lv).expect("nonzero leading value");
                        if inv != 1 {
                            for e in &mut cur {
                                e.1 = f.mul(e.1, inv);
                            }
                        }
                        pivot_of_col[lead] = Some(basis.len());
                        basis.push(cur);
                        break;
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..basis.len()).collect();
        order.sort_unstable_by_key(|&i| basis[i][0].0);
        order.into_iter().map(|i| core::mem::take(&mut basis[i])).collect()
    }

    /// Full reduction: returns (rank, pivot columns ascending, nullspace basis).
    ///
    /// The nullspace basis contains one sparse column vector per free column,
    /// in ascending free-column order, with a 1 in the free position. The
    /// output is a function of the matrix alone, so repeated calls agree.
    pub fn row_reduce(&self) -> (usize, Vec<usize>, Vec<SparseRow>) {
        let f = self.field;
        let mut basis = self.echelon();
        // back-substitute to reduced row echelon form
        for i in (0..basis.len()).rev() {
            let (pcol, _) = basis[i][0];
            for j in 0..i {
                if let Some(k) = basis[j].iter().position(|&(c, _)| c == pcol) {
                    let coef = basis[j][k].1;
                    basis[j] = row_sub_scaled(f, &basis[j], &basis[i], coef);
                }
            }
        }
        let pivots: Vec<usize> = basis.iter().map(|r| r[0].0).collect();
        let rank = pivots.len();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &c in &pivots {
                v[c] = true;
            }
            v
        };
        let mut nullspace = Vec::with_capacity(self.cols - rank);
        for free in 0..self.cols {
            if is_pivot[free] {
                continue;
            }
            let mut vecr: SparseRow = Vec::new();
            for (bi, row) in basis.iter().enumerate() {
                if let Some(&(_, v)) = row.iter().find(|&&(c, _)| c == free) {
                    vecr.push((pivots[bi], f.neg(v)));
                }
            }
            vecr.push((free, 1));
            vecr.sort_unstable_by_key(|&(c, _)| c);
            nullspace.push(vecr);
        }
        (rank, pivots, nullspace)
    }

    /// Reduced row echelon basis of the row space; canonical for the span.
    pub fn rref(&self) -> Vec<SparseRow> {
        let f = self.field;
        let mut basis = self.echelon();
        for i in (0..basis.len()).rev() {
            let (pcol, _) = basis[i][0];
            for j in 0..i {
                if let Some(k) = basis[j].iter().position(|&(c, _)| c == pcol) {
                    let coef = basis[j][k].1;
                    basis[j] = row_sub_scaled(f, &basis[j], &basis[i], coef);
                }
            }
        }
        basis
    }

    /// Multiply by a sparse column vector.
    pub fn apply(&self, v: &SparseRow) -> SparseRow {
        let f = self.field;
        let mut out: SparseRow = Vec::new();
        for (r, row) in self.row_data.iter().enumerate() {
            let mut acc = 0u64;
            let mut a = row.iter().peekable();
            let mut b = v.iter().peekable();
            while let (Some(&&(ca, va)), Some(&&(cb, vb))) = (a.peek(), b.peek()) {
                match ca.cmp(&cb) {
                    core::cmp::Ordering::Less => {
                        a.next();
                    }
                    core::cmp::Ordering::Greater => {
                        b.next();
                    }
                    core::cmp::Ordering::Equal => {
                        acc = f.add(acc, f.mul(va, vb));
                        a.next();
                        b.next();
                    }
                }
            }
            if acc != 0 {
                out.push((r, acc));
            }
        }
        out
    }
}

/// `a - s * b` for sorted sparse rows.
fn row_sub_scaled(f: FieldSpec, a: &SparseRow, b: &SparseRow, s: u64) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j >= b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i]);
            i += 1;
        } else if i >= a.len() || b[j].0 < a[i].0 {
            let v = f.neg(f.mul(s, b[j].1));
            if v != 0 {
                out.push((b[j].0, v));
            }
            j += 1;
        } else {
            let v = f.sub(a[i].1, f.mul(s, b[j].1));
            if v != 0 {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// `field_inverse` from the module contract; see [`FieldSpec::inv`].
pub fn field_inverse(a: u64, spec: FieldSpec) -> Result<u64> {
    spec.inv(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::new(p).unwrap()
    }

    #[test]
    fn inverse_small() {
        assert_eq!(field_inverse(1, f(3)).unwrap(), 1);
        assert_eq!(field_inverse(2, f(3)).unwrap(), 2);
        assert!(field_inverse(0, f(3)).is_err());
    }

    #[test]
    fn inverse_random_mod_101() {
        let spec = f(101);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let a = rng.gen_range(1..101u64);
            let inv = spec.inv(a).unwrap();
            assert_eq!(spec.mul(a, inv), 1, "a = {a}");
        }
    }

    #[test]
    fn rejects_composite_characteristic() {
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(91).is_err());
        assert!(FieldSpec::new(2).is_ok());
    }

    #[test]
    fn identity_mod_5() {
        let m = SparseMatrix::from_triples(3, 3, f(5), [(0, 0, 1), (1, 1, 1), (2, 2, 1)]);
        let (rank, pivots, null) = m.row_reduce();
        assert_eq!(rank, 3);
        assert_eq!(pivots, vec![0, 1, 2]);
        assert!(null.is_empty());
    }

    #[test]
    fn dependent_rows_mod_5() {
        let m = SparseMatrix::from_triples(
            2,
            2,
            f(5),
            [(0, 0, 1), (0, 1, 2), (1, 0, 2), (1, 1, 4)],
        );
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn empty_matrix() {
        let m = SparseMatrix::zero(0, 4, f(3));
        let (rank, pivots, null) = m.row_reduce();
        assert_eq!(rank, 0);
        assert!(pivots.is_empty());
        assert_eq!(null.len(), 4);
    }

    /// Dense fraction-free elimination, independent of the sparse path.
    fn dense_rank(p: u64, a: &[Vec<u64>]) -> usize {
        let mut m: Vec<Vec<u64>> = a.to_vec();
        let rows = m.len();
        if rows == 0 {
            return 0;
        }
        let cols = m[0].len();
        let mut rank = 0;
        for c in 0..cols {
            let Some(pr) = (rank..rows).find(|&r| m[r][c] % p != 0) else {
                continue;
            };
            m.swap(rank, pr);
            for r in 0..rows {
                if r != rank && m[r][c] % p != 0 {
                    // fraction-free: row_r <- m[rank][c]*row_r - m[r][c]*row_rank
                    let (x, y) = (m[rank][c] % p, m[r][c] % p);
                    for k in 0..cols {
                        let t = (x as u128 * m[r][k] as u128
                            + (p as u128 - y as u128) * m[rank][k] as u128)
                            % p as u128;
                        m[r][k] = t as u64;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn random_rank_matches_dense_oracle() {
        let spec = f(3);
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..10 {
            let mut dense = vec![vec![0u64; 20]; 20];
            let mut triples = Vec::new();
            for r in 0..20 {
                for c in 0..20 {
                    let v = rng.gen_range(0..3u64);
                    dense[r][c] = v;
                    if v != 0 {
                        triples.push((r, c, v));
                    }
                }
            }
            let m = SparseMatrix::from_triples(20, 20, spec, triples);
            assert_eq!(m.rank(), dense_rank(3, &dense));
        }
    }

    #[test]
    fn rank_transpose_and_nullity() {
        let spec = f(7);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..20 {
            let rows = rng.gen_range(1..12);
            let cols = rng.gen_range(1..12);
            let mut triples = Vec::new();
            for r in 0..rows {
                for c in 0..cols {
                    if rng.gen_bool(0.4) {
                        triples.push((r, c, rng.gen_range(1..7u64)));
                    }
                }
            }
            let m = SparseMatrix::from_triples(rows, cols, spec, triples);
            assert_eq!(m.rank(), m.transpose().rank());
            let (rank, _, null) = m.row_reduce();
            assert_eq!(rank + null.len(), cols);
            for v in &null {
                assert!(m.apply(v).is_empty(), "nullspace vector not annihilated");
            }
        }
    }

    #[test]
    fn row_reduce_is_deterministic() {
        let spec = f(5);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut triples = Vec::new();
        for r in 0..8 {
            for c in 0..8 {
                if rng.gen_bool(0.5) {
                    triples.push((r, c, rng.gen_range(1..5u64)));
                }
            }
        }
        let m = SparseMatrix::from_triples(8, 8, spec, triples);
        assert_eq!(m.row_reduce(), m.row_reduce());
    }
}
