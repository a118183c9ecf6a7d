use alloc::vec;
use alloc::vec::Vec;

use super::OracleError;

/// Dense row-major matrix over `GF(p)`, `p < 256`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u8,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

pub fn check_prime(p: u32) -> Result<u8, OracleError> {
    let prime = (2..256).contains(&p) && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d));
    if prime {
        Ok(p as u8)
    } else {
        Err(OracleError::NotPrime(p))
    }
}

fn inv(p: u8, x: u8) -> u8 {
    debug_assert!(x != 0);
    let (p, mut base, mut exp, mut acc) = (u32::from(p), u32::from(x), u32::from(p) - 2, 1u32);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc as u8
}

impl FpMatrix {
    pub fn zeros(p: u8, rows: usize, cols: usize) -> Self {
        FpMatrix { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u8, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Rows are reduced mod `p`.
    pub fn from_rows(p: u8, rows: &[Vec<u64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (j, &x) in row.iter().enumerate() {
                m.set(i, j, (x % u64::from(p)) as u8);
            }
        }
        m
    }

    /// Matrix whose columns are the given vectors, each of length `rows`.
    pub fn from_columns(p: u8, rows: usize, columns: &[Vec<u8>]) -> Self {
        let mut m = Self::zeros(p, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column of wrong length");
            for (i, &x) in c.iter().enumerate() {
                m.set(i, j, x);
            }
        }
        m
    }

    pub fn prime(&self) -> u8 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: u8) {
        debug_assert!(x < self.p);
        self.data[i * self.cols + j] = x;
    }

    pub fn column(&self, j: usize) -> Vec<u8> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn set_column(&mut self, j: usize, c: &[u8]) {
        for (i, &x) in c.iter().enumerate() {
            self.set(i, j, x);
        }
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn mul(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        let p = u32::from(self.p);
        let mut out = vec![0u32; self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = u32::from(self.get(i, k));
                if x == 0 {
                    continue;
                }
                let row = &other.data[k * other.cols..(k + 1) * other.cols];
                let acc = &mut out[i * other.cols..(i + 1) * other.cols];
                for (o, &y) in acc.iter_mut().zip(row) {
                    *o = (*o + x * u32::from(y)) % p;
                }
            }
        }
        FpMatrix { p: self.p, rows: self.rows, cols: other.cols, data: out.into_iter().map(|x| x as u8).collect() }
    }

    pub fn mul_vec(&self, v: &[u8]) -> Vec<u8> {
        assert_eq!(self.cols, v.len(), "shape mismatch in product");
        let p = u32::from(self.p);
        (0..self.rows)
            .map(|i| {
                let row = &self.data[i * self.cols..(i + 1) * self.cols];
                (row.iter().zip(v).fold(0u32, |acc, (&a, &b)| (acc + u32::from(a) * u32::from(b)) % p)) as u8
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let p = u32::from(self.p);
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.get(i, c) != 0) else { continue };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let s = u32::from(inv(self.p, self.get(r, c)));
            for j in c..cols {
                let x = u32::from(self.data[r * cols + j]);
                self.data[r * cols + j] = (x * s % p) as u8;
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for row in before.chunks_mut(cols).chain(after.chunks_mut(cols)) {
                let f = u32::from(row[c]);
                if f == 0 {
                    continue;
                }
                let f = p - f;
                for j in c..cols {
                    row[j] = ((u32::from(row[j]) + f * u32::from(pivot_row[j])) % p) as u8;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref_in_place().len()
    }

    /// Basis of the right kernel, as the columns of a `cols × k` matrix.
    pub fn kernel(&self) -> FpMatrix {
        let mut r = self.clone();
        let pivots = r.rref_in_place();
        let free: Vec<usize> = (0..self.cols).filter(|c| pivots.binary_search(c).is_err()).collect();
        let mut k = FpMatrix::zeros(self.p, self.cols, free.len());
        for (idx, &f) in free.iter().enumerate() {
            k.set(f, idx, 1);
            for (row, &pc) in pivots.iter().enumerate() {
                let x = r.get(row, f);
                if x != 0 {
                    k.set(pc, idx, self.p - x);
                }
            }
        }
        k
    }

    /// Some `X` with `self · X = rhs`, or `None` if the system is inconsistent.
    pub fn solve(&self, rhs: &FpMatrix) -> Option<FpMatrix> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let mut aug = self.hstack(rhs);
        let pivots = aug.rref_in_place();
        if pivots.last().is_some_and(|&c| c >= self.cols) {
            return None;
        }
        let mut x = FpMatrix::zeros(self.p, self.cols, rhs.cols);
        for (row, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, aug.get(row, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn hstack(&self, other: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, other.rows, "shape mismatch in hstack");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for i in 0..self.rows {
            data.extend_from_slice(&self.data[i * self.cols..(i + 1) * self.cols]);
            data.extend_from_slice(&other.data[i * other.cols..(i + 1) * other.cols]);
        }
        FpMatrix { p: self.p, rows: self.rows, cols, data }
    }

    /// Matrix with the given rows, each of length `cols`.
    pub fn from_row_vectors(p: u8, cols: usize, rows: &[Vec<u8>]) -> FpMatrix {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row of wrong length");
            data.extend_from_slice(r);
        }
        FpMatrix { p, rows: rows.len(), cols, data }
    }
}

/// Rank of the span of `vectors`, all of length `len`.
pub fn span_rank(p: u8, len: usize, vectors: &[Vec<u8>]) -> usize {
    FpMatrix::from_row_vectors(p, len, vectors).rank()
}
