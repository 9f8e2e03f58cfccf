//! Sparse exact matrices.
//!
//! Rows are stored as column-sorted `(col, value)` lists with no explicit
//! zeros, so structural equality is value equality.

use std::fmt;

use num_traits::{One, Zero};

use super::rational::{format_rational, rat, Rational};

pub type SparseRow = Vec<(usize, Rational)>;

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseRow>,
}

/// First entry where two matrices differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub row: usize,
    pub col: usize,
    pub left: Rational,
    pub right: Rational,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Vec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        Matrix {
            rows: n,
            cols: n,
            data: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    /// Builds a matrix from `(row, col, value)` triples; duplicates are summed.
    pub fn from_entries<I>(rows: usize, cols: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut buckets: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); rows];
        for (i, j, v) in entries {
            assert!(i < rows && j < cols, "entry ({i},{j}) outside {rows}x{cols}");
            if !v.is_zero() {
                buckets[i].push((j, v));
            }
        }
        let data = buckets.into_iter().map(normalize_row).collect();
        Matrix { rows, cols, data }
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseRow>) -> Self {
        let n = rows.len();
        let data: Vec<SparseRow> = rows.into_iter().map(normalize_row).collect();
        for r in &data {
            if let Some(&(c, _)) = r.last() {
                assert!(c < cols, "column {c} outside width {cols}");
            }
        }
        Matrix { rows: n, cols, data }
    }

    pub fn from_i64(rows: usize, cols: usize, dense: &[i64]) -> Self {
        assert_eq!(dense.len(), rows * cols);
        Self::from_entries(
            rows,
            cols,
            dense
                .iter()
                .enumerate()
                .map(|(k, &v)| (k / cols, k % cols, rat(v))),
        )
    }

    pub fn from_dense(dense: &[Vec<Rational>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        Self::from_entries(
            rows,
            cols,
            dense.iter().enumerate().flat_map(|(i, r)| {
                assert_eq!(r.len(), cols, "ragged dense matrix");
                r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))
            }),
        )
    }

    /// Column vector `n x 1`.
    pub fn column_vector(v: &[Rational]) -> Self {
        Self::from_entries(
            v.len(),
            1,
            v.iter().enumerate().map(|(i, x)| (i, 0, x.clone())),
        )
    }

    /// Row vector `1 x n`.
    pub fn row_vector(v: &[Rational]) -> Self {
        Self::from_entries(
            1,
            v.len(),
            v.iter().enumerate().map(|(j, x)| (0, j, x.clone())),
        )
    }

    /// Matrix whose columns are the given dense vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        Self::from_entries(
            rows,
            columns.len(),
            columns.iter().enumerate().flat_map(|(j, c)| {
                assert_eq!(c.len(), rows);
                c.iter().enumerate().map(move |(i, v)| (i, j, v.clone()))
            }),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[(usize, Rational)] {
        &self.data[i]
    }

    pub fn rows_iter(&self) -> impl Iterator<Item = &SparseRow> {
        self.data.iter()
    }

    pub fn into_rows(self) -> Vec<SparseRow> {
        self.data
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        match self.data[i].binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.data[i][k].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.rows)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(j, v)| (i, *j, v)))
    }

    pub fn transpose(&self) -> Matrix {
        let mut t: Vec<SparseRow> = vec![Vec::new(); self.cols];
        for (i, row) in self.data.iter().enumerate() {
            for (j, v) in row {
                t[*j].push((i, v.clone()));
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data: t,
        }
    }

    /// Matrix product `self * other`, i.e. the composite "apply `other`, then `self`".
    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "cannot compose {}x{} with {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut acc = Accumulator::new(other.cols);
        let data = self
            .data
            .iter()
            .map(|row| {
                for (k, a) in row {
                    for (j, b) in &other.data[*k] {
                        acc.add(*j, a * b);
                    }
                }
                acc.drain()
            })
            .collect();
        Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.combine(other, Rational::one())
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.combine(other, -Rational::one())
    }

    /// `self + c * other`.
    pub fn combine(&self, other: &Matrix, c: Rational) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| merge_rows(a, b, &c))
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: &Rational) -> Matrix {
        if c.is_zero() {
            return Matrix::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(j, v)| (*j, v * c)).collect())
            .collect();
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-Rational::one())
    }

    /// Kronecker product, consistent with row-major tensor indexing:
    /// row `(i, k) -> i * other.rows + k`, col `(j, l) -> j * other.cols + l`.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        let mut data = Vec::with_capacity(self.rows * other.rows);
        for ra in &self.data {
            for rb in &other.data {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (j, a) in ra {
                    for (l, b) in rb {
                        row.push((j * other.cols + l, a * b));
                    }
                }
                data.push(row);
            }
        }
        Matrix {
            rows: self.rows * other.rows,
            cols: self.cols * other.cols,
            data,
        }
    }

    pub fn pow(&self, k: usize) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut out = Matrix::identity(self.rows);
        for _ in 0..k {
            out = self.mul(&out);
        }
        out
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        self.data
            .iter()
            .map(|row| {
                let mut s = Rational::zero();
                for (j, a) in row {
                    if !v[*j].is_zero() {
                        s += a * &v[*j];
                    }
                }
                s
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix {
            rows: idx.len(),
            cols: self.cols,
            data: idx.iter().map(|&i| self.data[i].clone()).collect(),
        }
    }

    /// Stacks matrices of equal width on top of each other.
    pub fn vstack(blocks: &[Matrix]) -> Matrix {
        let cols = blocks.first().map_or(0, |b| b.cols);
        let mut data = Vec::new();
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack width mismatch");
            data.extend(b.data.iter().cloned());
        }
        Matrix {
            rows: data.len(),
            cols,
            data,
        }
    }

    /// Places matrices with `rows` rows side by side.
    pub fn hstack(rows: usize, blocks: &[Matrix]) -> Matrix {
        let mut data: Vec<SparseRow> = vec![Vec::new(); rows];
        let mut offset = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack height mismatch");
            for (i, row) in b.data.iter().enumerate() {
                data[i].extend(row.iter().map(|(j, v)| (j + offset, v.clone())));
            }
            offset += b.cols;
        }
        Matrix {
            rows,
            cols: offset,
            data,
        }
    }

    /// Places `block` at offset `(r0, c0)` inside a zero matrix of the given shape.
    pub fn embed_block(&self, rows: usize, cols: usize, r0: usize, c0: usize) -> Matrix {
        assert!(r0 + self.rows <= rows && c0 + self.cols <= cols);
        let mut data = vec![Vec::new(); rows];
        for (i, row) in self.data.iter().enumerate() {
            data[r0 + i] = row.iter().map(|(j, v)| (j + c0, v.clone())).collect();
        }
        Matrix { rows, cols, data }
    }

    /// Sub-block `rows r0..r0+nr`, `cols c0..c0+nc`.
    pub fn block(&self, r0: usize, nr: usize, c0: usize, nc: usize) -> Matrix {
        let data = self.data[r0..r0 + nr]
            .iter()
            .map(|row| {
                row.iter()
                    .filter(|(j, _)| *j >= c0 && *j < c0 + nc)
                    .map(|(j, v)| (j - c0, v.clone()))
                    .collect()
            })
            .collect();
        Matrix {
            rows: nr,
            cols: nc,
            data,
        }
    }

    /// First entry (in row-major order) where `self` and `other` differ.
    pub fn first_mismatch(&self, other: &Matrix) -> Option<Mismatch> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        for (i, (a, b)) in self.data.iter().zip(&other.data).enumerate() {
            if a == b {
                continue;
            }
            let diff = merge_rows(a, b, &-Rational::one());
            let (j, _) = diff[0].clone();
            return Some(Mismatch {
                row: i,
                col: j,
                left: self.get(i, j),
                right: other.get(i, j),
            });
        }
        None
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        if self.rows * self.cols <= 400 {
            for i in 0..self.rows {
                let cells: Vec<String> = (0..self.cols)
                    .map(|j| format_rational(&self.get(i, j)))
                    .collect();
                writeln!(f, "  [{}]", cells.join(", "))?;
            }
        } else {
            writeln!(f, "  ({} nonzeros)", self.nnz())?;
        }
        write!(f, "]")
    }
}

fn normalize_row(mut row: Vec<(usize, Rational)>) -> SparseRow {
    row.sort_by_key(|e| e.0);
    let mut out: SparseRow = Vec::with_capacity(row.len());
    for (j, v) in row {
        match out.last_mut() {
            Some((lj, lv)) if *lj == j => *lv += v,
            _ => out.push((j, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// `a + c * b` for sorted sparse rows.
pub(crate) fn merge_rows(a: &[(usize, Rational)], b: &[(usize, Rational)], c: &Rational) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let take_a = k >= b.len() || (i < a.len() && a[i].0 < b[k].0);
        let take_b = i >= a.len() || (k < b.len() && b[k].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[k].0, &b[k].1 * c));
            k += 1;
        } else {
            let v = &a[i].1 + &b[k].1 * c;
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            k += 1;
        }
    }
    out
}

/// Dense scratch accumulator for building one sparse row at a time.
pub(crate) struct Accumulator {
    vals: Vec<Rational>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub(crate) fn new(width: usize) -> Self {
        Accumulator {
            vals: vec![Rational::zero(); width],
            touched: Vec::new(),
            mark: vec![false; width],
        }
    }

    pub(crate) fn add(&mut self, j: usize, v: Rational) {
        if !self.mark[j] {
            self.mark[j] = true;
            self.touched.push(j);
        }
        self.vals[j] += v;
    }

    pub(crate) fn drain(&mut self) -> SparseRow {
        self.touched.sort_unstable();
        let mut out = Vec::with_capacity(self.touched.len());
        for &j in &self.touched {
            self.mark[j] = false;
            let v = std::mem::replace(&mut self.vals[j], Rational::zero());
            if !v.is_zero() {
                out.push((j, v));
            }
        }
        self.touched.clear();
        out
    }
}
