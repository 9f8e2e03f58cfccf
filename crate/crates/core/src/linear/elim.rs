//! Row reduction and the subspaces/quotients built from it.
//!
//! Pivoting always takes the first nonzero entry in column order, so the
//! reduced row-echelon form, and everything derived from it, is canonical.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::matrix::{Matrix, SparseRow};
use super::rational::{format_rational, Rational};

/// Reduced row-echelon form of a set of sparse rows.
#[derive(Debug, Clone)]
pub struct Rref {
    width: usize,
    /// Pivot column of each row, ascending.
    pivots: Vec<usize>,
    rows: Vec<SparseRow>,
}

impl Rref {
    pub fn of_rows<'a, I>(width: usize, rows: I) -> Rref
    where
        I: IntoIterator<Item = &'a SparseRow>,
    {
        let mut pivot_row: Vec<Option<usize>> = vec![None; width];
        let mut stored: Vec<SparseRow> = Vec::new();
        let mut pivot_cols: Vec<usize> = Vec::new();
        for row in rows {
            if row.is_empty() {
                continue;
            }
            let mut work: BTreeMap<usize, Rational> = row.iter().cloned().collect();
            reduce_against(&mut work, 0, &pivot_row, &stored);
            let Some((&lead, lv)) = work.iter().next() else {
                continue;
            };
            let inv = Rational::one() / lv;
            let normalized: SparseRow = work.into_iter().map(|(j, v)| (j, v * &inv)).collect();
            pivot_row[lead] = Some(stored.len());
            pivot_cols.push(lead);
            stored.push(normalized);
        }
        // back substitution, largest pivot first
        let mut order: Vec<usize> = (0..stored.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(pivot_cols[r]));
        for &r in &order {
            let lead = pivot_cols[r];
            let mut work: BTreeMap<usize, Rational> = stored[r].iter().cloned().collect();
            pivot_row[lead] = None;
            reduce_against(&mut work, lead + 1, &pivot_row, &stored);
            pivot_row[lead] = Some(r);
            stored[r] = work.into_iter().collect();
        }
        order.reverse();
        let pivots = order.iter().map(|&r| pivot_cols[r]).collect();
        let rows = order.into_iter().map(|r| std::mem::take(&mut stored[r])).collect();
        Rref { width, pivots, rows }
    }

    pub fn of_matrix(m: &Matrix) -> Rref {
        Rref::of_rows(m.ncols(), m.rows_iter())
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.width];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.width).filter(|&j| !is_pivot[j]).collect()
    }

    /// Reduces `v` modulo the row space; the result is supported on free columns.
    pub fn reduce(&self, v: &SparseRow) -> SparseRow {
        let mut pivot_row: Vec<Option<usize>> = vec![None; self.width];
        for (r, &p) in self.pivots.iter().enumerate() {
            pivot_row[p] = Some(r);
        }
        let mut work: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        reduce_against(&mut work, 0, &pivot_row, &self.rows);
        work.into_iter().collect()
    }
}

fn reduce_against(
    work: &mut BTreeMap<usize, Rational>,
    start: usize,
    pivot_row: &[Option<usize>],
    stored: &[SparseRow],
) {
    let mut cursor = start;
    while let Some((&c, _)) = work.range(cursor..).next() {
        cursor = c + 1;
        let Some(r) = pivot_row[c] else { continue };
        let factor = work.remove(&c).expect("present");
        for (j, v) in stored[r].iter().skip(1) {
            let e = work.entry(*j).or_insert_with(Rational::zero);
            *e -= &factor * v;
            if e.is_zero() {
                work.remove(j);
            }
        }
    }
}

pub fn rank(m: &Matrix) -> usize {
    Rref::of_matrix(m).rank()
}

/// A subspace of `Q^ambient` with a canonical basis.
///
/// The basis vector attached to free column `coords[k]` has a 1 there and 0 at
/// every other free column, so a vector of the subspace is recovered from its
/// values at `coords` alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    coords: Vec<usize>,
    /// `dim x ambient`, one basis vector per row.
    basis: Matrix,
}

impl Subspace {
    pub fn full(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            coords: (0..ambient).collect(),
            basis: Matrix::identity(ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn coords(&self) -> &[usize] {
        &self.coords
    }

    /// Rows are the basis vectors.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vector(&self, k: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.ambient];
        for (j, x) in self.basis.row(k) {
            v[*j] = x.clone();
        }
        v
    }

    /// `ambient x dim` inclusion.
    pub fn embedding(&self) -> Matrix {
        self.basis.transpose()
    }

    /// `dim x ambient` coordinate read-off; a left inverse of the embedding.
    pub fn retraction(&self) -> Matrix {
        Matrix::from_entries(
            self.dim(),
            self.ambient,
            self.coords
                .iter()
                .enumerate()
                .map(|(k, &j)| (k, j, Rational::one())),
        )
    }

    /// Coordinates of `v`, or `None` if `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        let c: Vec<Rational> = self.coords.iter().map(|&j| v[j].clone()).collect();
        let back = self.embedding().apply(&c);
        (back == v).then_some(c)
    }

    /// `true` iff every column of `m` (an `ambient x k` matrix) lies in the subspace.
    pub fn contains_columns(&self, m: &Matrix) -> bool {
        self.embedding().mul(&self.retraction().mul(m)) == *m
    }
}

/// Basis of `ker f`, one vector per free column of the reduced form.
pub fn kernel(f: &Matrix) -> Subspace {
    kernel_of_rref(&Rref::of_matrix(f))
}

fn kernel_of_rref(r: &Rref) -> Subspace {
    let free = r.free_columns();
    let mut free_index = vec![usize::MAX; r.width()];
    for (k, &j) in free.iter().enumerate() {
        free_index[j] = k;
    }
    let mut rows: Vec<SparseRow> = free.iter().map(|&j| vec![(j, Rational::one())]).collect();
    for (row, &p) in r.rows().iter().zip(r.pivots()) {
        for (j, v) in row.iter().skip(1) {
            rows[free_index[*j]].push((p, -v.clone()));
        }
    }
    Subspace {
        ambient: r.width(),
        coords: free,
        basis: Matrix::from_rows(r.width(), rows),
    }
}

/// Joint kernel of several linear constraints on a common space.
pub fn solve_constrained_subspace(ambient: usize, constraints: &[Matrix]) -> Subspace {
    for c in constraints {
        assert_eq!(c.ncols(), ambient, "constraint acts on a different space");
    }
    let r = Rref::of_rows(ambient, constraints.iter().flat_map(|c| c.rows_iter()));
    kernel_of_rref(&r)
}

/// The cokernel `target / im f` with a canonical complement basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    ambient: usize,
    kept: Vec<usize>,
    projection: Matrix,
}

impl Quotient {
    pub fn trivial(ambient: usize) -> Quotient {
        Quotient {
            ambient,
            kept: (0..ambient).collect(),
            projection: Matrix::identity(ambient),
        }
    }

    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Ambient basis indices whose classes form the quotient basis.
    pub fn kept(&self) -> &[usize] {
        &self.kept
    }

    /// `dim x ambient`.
    pub fn projection(&self) -> &Matrix {
        &self.projection
    }

    /// `ambient x dim`, `projection * section = id`.
    pub fn section(&self) -> Matrix {
        Matrix::from_entries(
            self.ambient,
            self.dim(),
            self.kept
                .iter()
                .enumerate()
                .map(|(k, &j)| (j, k, Rational::one())),
        )
    }
}

/// Cokernel of `f : source -> target`.
pub fn cokernel(f: &Matrix) -> Quotient {
    let ft = f.transpose();
    let r = Rref::of_matrix(&ft);
    let kept = r.free_columns();
    let m = f.nrows();
    let mut kept_index = vec![usize::MAX; m];
    for (k, &j) in kept.iter().enumerate() {
        kept_index[j] = k;
    }
    let mut entries: Vec<(usize, usize, Rational)> =
        kept.iter().enumerate().map(|(k, &j)| (k, j, Rational::one())).collect();
    for (row, &p) in r.rows().iter().zip(r.pivots()) {
        for (j, v) in row.iter().skip(1) {
            entries.push((kept_index[*j], p, -v.clone()));
        }
    }
    Quotient {
        ambient: m,
        projection: Matrix::from_entries(kept.len(), m, entries),
        kept,
    }
}

/// Some `x` with `a x = b`, or `None` when the system is inconsistent.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(a.nrows(), b.len(), "right-hand side length mismatch");
    let n = a.ncols();
    let rows: Vec<SparseRow> = a
        .rows_iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            if !bi.is_zero() {
                r.push((n, bi.clone()));
            }
            r
        })
        .collect();
    let r = Rref::of_rows(n + 1, rows.iter());
    if r.pivots().last() == Some(&n) {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (row, &p) in r.rows().iter().zip(r.pivots()) {
        if let Some((j, v)) = row.last() {
            if *j == n {
                x[p] = v.clone();
            }
        }
    }
    Some(x)
}

/// Is `v` in the column span of `m`?
pub fn in_column_span(m: &Matrix, v: &[Rational]) -> bool {
    solve(m, v).is_some()
}

pub fn vector_is_zero(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// First nonzero entry of a vector, rendered for diagnostics.
pub fn first_nonzero(v: &[Rational]) -> Option<(usize, String)> {
    v.iter()
        .enumerate()
        .find(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, format_rational(x)))
}
