//! Sparse vectors and column-major sparse matrices over `Q(q)`.

use alloc::collections::btree_map::{self, BTreeMap};
use alloc::vec::Vec;
use core::fmt;

use super::Scalar;
use crate::Error;

/// A sparse vector: index to nonzero entry. Zero entries are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SparseVec(BTreeMap<usize, Scalar>);

impl SparseVec {
    pub fn new() -> Self {
        SparseVec(BTreeMap::new())
    }

    pub fn unit(i: usize) -> Self {
        let mut v = Self::new();
        v.0.insert(i, Scalar::one());
        v
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (usize, Scalar)>) -> Self {
        let mut v = Self::new();
        for (i, c) in entries {
            v.add_at(i, &c);
        }
        v
    }

    pub fn from_dense(values: &[Scalar]) -> Self {
        Self::from_entries(values.iter().cloned().enumerate())
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.0.get(&i)
    }

    pub fn entry(&self, i: usize) -> Scalar {
        self.0.get(&i).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            self.0.remove(&i);
        } else {
            self.0.insert(i, c);
        }
    }

    /// `self[i] += c`.
    pub fn add_at(&mut self, i: usize, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(i) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Scalar, other: &SparseVec) {
        if c.is_zero() {
            return;
        }
        for (&i, x) in &other.0 {
            self.add_at(i, &(c * x));
        }
    }

    pub fn scale(&self, c: &Scalar) -> SparseVec {
        if c.is_zero() {
            return SparseVec::new();
        }
        SparseVec(self.0.iter().map(|(&i, x)| (i, c * x)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn nnz(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.0.iter().map(|(&i, c)| (i, c))
    }

    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.keys().copied()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.0.keys().next_back().copied()
    }

    /// Keeps entries with index in `start..end`, shifted down by `start`.
    pub fn slice(&self, start: usize, end: usize) -> SparseVec {
        SparseVec(self.0.range(start..end).map(|(&i, c)| (i - start, c.clone())).collect())
    }

    pub fn shifted(&self, offset: usize) -> SparseVec {
        SparseVec(self.0.iter().map(|(&i, c)| (i + offset, c.clone())).collect())
    }

    pub fn dot(&self, other: &SparseVec) -> Scalar {
        let (small, large) = if self.nnz() <= other.nnz() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Scalar::zero();
        for (i, x) in small.iter() {
            if let Some(y) = large.get(i) {
                acc += &(x * y);
            }
        }
        acc
    }

    pub fn to_dense(&self, len: usize) -> Vec<Scalar> {
        (0..len).map(|i| self.entry(i)).collect()
    }
}

impl fmt::Debug for SparseVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.0.iter()).finish()
    }
}

impl FromIterator<(usize, Scalar)> for SparseVec {
    fn from_iter<T: IntoIterator<Item = (usize, Scalar)>>(iter: T) -> Self {
        Self::from_entries(iter)
    }
}

/// An exact `rows x cols` matrix stored as sparse columns.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: Vec<SparseVec>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols: (0..cols).map(|_| SparseVec::new()).collect(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, &Scalar::one())
    }

    /// `c * I_n`.
    pub fn scalar(n: usize, c: &Scalar) -> Self {
        ExactMatrix {
            rows: n,
            cols: (0..n).map(|j| SparseVec::from_entries([(j, c.clone())])).collect(),
        }
    }

    /// Builds from sparse columns; fails if an entry lies outside `rows`.
    pub fn from_columns(rows: usize, cols: Vec<SparseVec>) -> Result<Self, Error> {
        if cols.iter().any(|c| c.max_index().is_some_and(|i| i >= rows)) {
            return Err(Error::Shape("column entry outside row range".into()));
        }
        Ok(ExactMatrix { rows, cols })
    }

    pub fn from_rows(cols: usize, rows: &[SparseVec]) -> Result<Self, Error> {
        Ok(Self::from_columns(cols, rows.to_vec())?.transpose())
    }

    pub fn from_dense(rows: &[Vec<Scalar>]) -> Result<Self, Error> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged dense matrix".into()));
        }
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                m.cols[j].set(i, c.clone());
            }
        }
        Ok(m)
    }

    pub fn from_triplets(
        rows: usize,
        cols: usize,
        entries: impl IntoIterator<Item = (usize, usize, Scalar)>,
    ) -> Result<Self, Error> {
        let mut m = Self::zeros(rows, cols);
        for (i, j, c) in entries {
            if i >= rows || j >= cols {
                return Err(Error::Shape("triplet outside matrix".into()));
            }
            m.cols[j].add_at(i, &c);
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.cols[j].entry(i)
    }

    pub fn set(&mut self, i: usize, j: usize, c: Scalar) {
        assert!(i < self.rows && j < self.cols.len(), "index out of range");
        self.cols[j].set(i, c);
    }

    pub fn column(&self, j: usize) -> &SparseVec {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.cols
    }

    pub fn rows(&self) -> Vec<SparseVec> {
        self.transpose().cols
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triplets(&self) -> Vec<(usize, usize, Scalar)> {
        let mut out: Vec<_> = self
            .cols
            .iter()
            .enumerate()
            .flat_map(|(j, col)| col.iter().map(move |(i, c)| (i, j, c.clone())))
            .collect();
        out.sort_by_key(|t| (t.0, t.1));
        out
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(SparseVec::nnz).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn transpose(&self) -> ExactMatrix {
        let mut t = Self::zeros(self.cols.len(), self.rows);
        for (j, col) in self.cols.iter().enumerate() {
            for (i, c) in col.iter() {
                t.cols[i].set(j, c.clone());
            }
        }
        t
    }

    pub fn mul_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.axpy(c, &self.cols[j]);
        }
        out
    }

    pub fn mul(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, Error> {
        if self.ncols() != rhs.rows {
            return Err(Error::Shape("matrix product dimension mismatch".into()));
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: rhs.cols.iter().map(|c| self.mul_vec(c)).collect(),
        })
    }

    fn zip_with(&self, rhs: &ExactMatrix, sign: &Scalar) -> Result<ExactMatrix, Error> {
        if self.rows != rhs.rows || self.ncols() != rhs.ncols() {
            return Err(Error::Shape("matrix sum dimension mismatch".into()));
        }
        let cols = self
            .cols
            .iter()
            .zip(&rhs.cols)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.axpy(sign, b);
                c
            })
            .collect();
        Ok(ExactMatrix { rows: self.rows, cols })
    }

    pub fn add(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, Error> {
        self.zip_with(rhs, &Scalar::one())
    }

    pub fn sub(&self, rhs: &ExactMatrix) -> Result<ExactMatrix, Error> {
        self.zip_with(rhs, &Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols.iter().map(|col| col.scale(c)).collect(),
        }
    }

    /// `self - c * I`; requires a square matrix.
    pub fn minus_scalar(&self, c: &Scalar) -> ExactMatrix {
        debug_assert!(self.is_square());
        let mut out = self.clone();
        let neg = -c;
        for (j, col) in out.cols.iter_mut().enumerate() {
            col.add_at(j, &neg);
        }
        out
    }

    pub fn trace(&self) -> Scalar {
        let mut acc = Scalar::zero();
        for (j, col) in self.cols.iter().enumerate() {
            if let Some(c) = col.get(j) {
                acc += c;
            }
        }
        acc
    }

    /// Block-diagonal sum `diag(self, rhs)`.
    pub fn direct_sum(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut cols = self.cols.clone();
        cols.extend(rhs.cols.iter().map(|c| c.shifted(self.rows)));
        ExactMatrix {
            rows: self.rows + rhs.rows,
            cols,
        }
    }

    /// Kronecker product; basis index of `e_i (x) f_k` is `i * rhs.rows + k`.
    pub fn kron(&self, rhs: &ExactMatrix) -> ExactMatrix {
        let mut out = Self::zeros(self.rows * rhs.rows, self.ncols() * rhs.ncols());
        for (j, a_col) in self.cols.iter().enumerate() {
            for (l, b_col) in rhs.cols.iter().enumerate() {
                let col = &mut out.cols[j * rhs.ncols() + l];
                for (i, a) in a_col.iter() {
                    for (k, b) in b_col.iter() {
                        col.set(i * rhs.rows + k, a * b);
                    }
                }
            }
        }
        out
    }

    /// Restricts to the given rows and columns (in the given order).
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExactMatrix {
        let mut pos = BTreeMap::new();
        for (new, &old) in rows.iter().enumerate() {
            pos.insert(old, new);
        }
        let cols = cols
            .iter()
            .map(|&j| {
                self.cols[j]
                    .iter()
                    .filter_map(|(i, c)| pos.get(&i).map(|&ni| (ni, c.clone())))
                    .collect()
            })
            .collect();
        ExactMatrix { rows: rows.len(), cols }
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.ncols())?;
        for row in self.rows() {
            write!(f, "  ")?;
            for j in 0..self.ncols() {
                write!(f, "{} ", row.entry(j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}
