//! Dense matrices over prime fields GF(r).

use std::fmt;

use crate::error::{Error, Result};
use crate::ring::is_prime;

/// The prime field GF(r).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    r: u32,
}

impl PrimeField {
    pub fn new(r: u64) -> Result<Self> {
        if !is_prime(r) || r > u32::MAX as u64 {
            return Err(Error::NotPrime(r));
        }
        Ok(Self { r: r as u32 })
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.r
    }

    #[inline]
    pub fn add(&self, x: u32, y: u32) -> u32 {
        ((x as u64 + y as u64) % self.r as u64) as u32
    }

    #[inline]
    pub fn sub(&self, x: u32, y: u32) -> u32 {
        ((x as u64 + self.r as u64 - y as u64) % self.r as u64) as u32
    }

    #[inline]
    pub fn mul(&self, x: u32, y: u32) -> u32 {
        ((x as u64 * y as u64) % self.r as u64) as u32
    }

    #[inline]
    pub fn neg(&self, x: u32) -> u32 {
        if x == 0 {
            0
        } else {
            self.r - x
        }
    }

    /// Multiplicative inverse by extended Euclid. `x` must be nonzero.
    pub fn inv(&self, x: u32) -> u32 {
        assert!(x % self.r != 0, "zero has no inverse");
        let (mut old_r, mut r) = (x as i64, self.r as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        old_s.rem_euclid(self.r as i64) as u32
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.r)
    }
}

/// Row-major dense matrix with entries reduced into `[0, r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: GfMatrix,
    pub pivots: Vec<usize>,
}

impl GfMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            entries: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, k: usize) -> Self {
        let mut m = Self::zeros(field, k, k);
        for i in 0..k {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row-major values, reducing each modulo r.
    pub fn from_entries(
        field: PrimeField,
        rows: usize,
        cols: usize,
        values: Vec<u64>,
    ) -> Result<Self> {
        if values.len() != rows * cols {
            return Err(Error::Shape {
                rows,
                cols,
                len: values.len(),
            });
        }
        let r = field.order() as u64;
        Ok(Self {
            field,
            rows,
            cols,
            entries: values.into_iter().map(|v| (v % r) as u32).collect(),
        })
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut values = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::Shape {
                    rows: rows.len(),
                    cols,
                    len: row.len(),
                });
            }
            values.extend_from_slice(row);
        }
        Self::from_entries(field, rows.len(), cols, values)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.entries[i * self.cols + j] = v % self.field.order();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> GfMatrix {
        let mut t = GfMatrix::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&v| v == 0)
    }

    /// Reduced row echelon form; `self` is untouched.
    pub fn rref(&self) -> Rref {
        let mut work = self.clone();
        let pivots = work.eliminate(true);
        Rref {
            matrix: work,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        let mut work = self.clone();
        work.eliminate(false).len()
    }

    /// In-place Gauss-Jordan elimination. Pivots are the first nonzero entry
    /// at or below the current row. With `full` the pivot rows are scaled to 1
    /// and entries above each pivot cleared too.
    fn eliminate(&mut self, full: bool) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&i| self.get(i, col) != 0) else {
                continue;
            };
            self.swap_rows(row, p);
            let inv = f.inv(self.get(row, col));
            if inv != 1 {
                for v in &mut self.entries[row * cols + col..(row + 1) * cols] {
                    *v = f.mul(*v, inv);
                }
            }
            let (before, rest) = self.entries.split_at_mut(row * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let targets = if full {
                before
                    .chunks_mut(cols)
                    .chain(after.chunks_mut(cols))
                    .collect::<Vec<_>>()
            } else {
                after.chunks_mut(cols).collect::<Vec<_>>()
            };
            for target in targets {
                let factor = target[col];
                if factor == 0 {
                    continue;
                }
                let factor = f.neg(factor);
                for j in col..cols {
                    let pv = pivot_row[j];
                    if pv != 0 {
                        target[j] = f.add(target[j], f.mul(factor, pv));
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let cols = self.cols;
        let (lo, hi) = (a.min(b), a.max(b));
        let (first, second) = self.entries.split_at_mut(hi * cols);
        first[lo * cols..(lo + 1) * cols].swap_with_slice(&mut second[..cols]);
    }

    /// Whether the selected columns are linearly dependent.
    pub fn columns_dependent(&self, cols: &[usize]) -> Result<bool> {
        for (i, &c) in cols.iter().enumerate() {
            if c >= self.cols {
                return Err(Error::ColumnOutOfRange {
                    index: c,
                    cols: self.cols,
                });
            }
            if cols[..i].contains(&c) {
                return Err(Error::DuplicateColumn(c));
            }
        }
        if cols.len() > self.rows {
            return Ok(true);
        }
        // Only rows touching the selection matter.
        let mut values = Vec::new();
        let mut rows = 0;
        for i in 0..self.rows {
            let row = self.row(i);
            if cols.iter().any(|&c| row[c] != 0) {
                values.extend(cols.iter().map(|&c| row[c] as u64));
                rows += 1;
            }
        }
        let sub = GfMatrix::from_entries(self.field, rows, cols.len(), values)?;
        Ok(sub.rank() < cols.len())
    }

    /// Basis of the right kernel `{x : M x = 0}`, one basis vector per row.
    pub fn nullspace(&self) -> GfMatrix {
        let f = self.field;
        let Rref { matrix, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = GfMatrix::zeros(f, free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(k, pc, f.neg(matrix.get(i, fc)));
            }
        }
        basis
    }

    /// `self · v` for a column vector `v`.
    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let f = self.field;
        self.row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .fold(0u32, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Multiply row `i` by the nonzero scalar `c`.
    pub fn scale_row(&mut self, i: usize, c: u32) {
        let f = self.field;
        let cols = self.cols;
        for v in &mut self.entries[i * cols..(i + 1) * cols] {
            *v = f.mul(*v, c);
        }
    }

    /// The nonzero rows, in order.
    pub fn nonzero_rows(&self) -> GfMatrix {
        let keep: Vec<&[u32]> = self
            .row_iter()
            .filter(|r| r.iter().any(|&v| v != 0))
            .collect();
        let mut out = GfMatrix::zeros(self.field, keep.len(), self.cols);
        for (i, r) in keep.iter().enumerate() {
            out.entries[i * self.cols..(i + 1) * self.cols].copy_from_slice(r);
        }
        out
    }
}
