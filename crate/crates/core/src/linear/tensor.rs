//! Multilinear operator assembly on tensor products.
//!
//! A [`Tensor`] is a sparse element of `V_0 (x) ... (x) V_k`. Structure maps are
//! applied to contiguous slot ranges and slots can be permuted, which is enough
//! to write every Sweedler-notation formula as a short pipeline. The resulting
//! operator is read back as a matrix with [`operator_matrix`].

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use num_traits::Zero;

use super::matrix::{Matrix, SparseRow};
use super::rational::Rational;
use super::space::{flat_index, multi_index};

/// A linear map between tensor products, stored column-wise for lookup.
#[derive(Debug, Clone)]
pub struct SlotMap {
    in_dims: Vec<usize>,
    out_dims: Vec<usize>,
    cols: Vec<SparseRow>,
}

impl SlotMap {
    /// `m` has shape `prod(out_dims) x prod(in_dims)`.
    pub fn new(m: &Matrix, in_dims: &[usize], out_dims: &[usize]) -> Self {
        assert_eq!(m.ncols(), in_dims.iter().product::<usize>(), "slot map input size");
        assert_eq!(m.nrows(), out_dims.iter().product::<usize>(), "slot map output size");
        SlotMap {
            in_dims: in_dims.to_vec(),
            out_dims: out_dims.to_vec(),
            cols: m.transpose().into_rows(),
        }
    }

    pub fn arity(&self) -> usize {
        self.in_dims.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor {
    dims: Vec<usize>,
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Tensor {
    pub fn zero(dims: Vec<usize>) -> Self {
        Tensor {
            dims,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(dims: &[usize], idx: &[usize]) -> Self {
        assert_eq!(dims.len(), idx.len());
        let mut terms = BTreeMap::new();
        terms.insert(idx.to_vec(), Rational::from_integer(1.into()));
        Tensor {
            dims: dims.to_vec(),
            terms,
        }
    }

    /// Basis element of the flattened space with the given row-major index.
    pub fn basis_flat(dims: &[usize], flat: usize) -> Self {
        Tensor::basis(dims, &multi_index(dims, flat))
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, idx: Vec<usize>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&mut self, other: &Tensor) {
        assert_eq!(self.dims, other.dims);
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> Tensor {
        if c.is_zero() {
            return Tensor::zero(self.dims.clone());
        }
        Tensor {
            dims: self.dims.clone(),
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Applies `map` to slots `start .. start + map.arity()`.
    pub fn apply(&self, start: usize, map: &SlotMap) -> Tensor {
        let k = map.arity();
        assert!(start + k <= self.dims.len(), "slot range out of bounds");
        assert_eq!(&self.dims[start..start + k], &map.in_dims[..], "slot dims mismatch");
        let mut dims = self.dims[..start].to_vec();
        dims.extend_from_slice(&map.out_dims);
        dims.extend_from_slice(&self.dims[start + k..]);
        let mut out = Tensor::zero(dims);
        for (idx, c) in &self.terms {
            let input = flat_index(&map.in_dims, &idx[start..start + k]);
            for (o, m) in &map.cols[input] {
                let mid = multi_index(&map.out_dims, *o);
                let mut key = idx[..start].to_vec();
                key.extend(mid);
                key.extend_from_slice(&idx[start + k..]);
                out.add_term(key, c * m);
            }
        }
        out
    }

    /// New slot `i` is old slot `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Tensor {
        assert_eq!(perm.len(), self.dims.len());
        let dims = perm.iter().map(|&p| self.dims[p]).collect();
        let terms = self
            .terms
            .iter()
            .map(|(idx, c)| (perm.iter().map(|&p| idx[p]).collect(), c.clone()))
            .collect();
        Tensor { dims, terms }
    }

    /// Moves slot `from` to position `to`, shifting the slots in between.
    pub fn move_slot(&self, from: usize, to: usize) -> Tensor {
        let mut order: Vec<usize> = (0..self.dims.len()).collect();
        let s = order.remove(from);
        order.insert(to, s);
        self.permute(&order)
    }

    /// Inserts a new slot of the given dimension holding basis index `value`.
    pub fn insert_basis_slot(&self, at: usize, dim: usize, value: usize) -> Tensor {
        let mut dims = self.dims.clone();
        dims.insert(at, dim);
        let terms = self
            .terms
            .iter()
            .map(|(idx, c)| {
                let mut k = idx.clone();
                k.insert(at, value);
                (k, c.clone())
            })
            .collect();
        Tensor { dims, terms }
    }

    /// Tensor product `self (x) other`.
    pub fn outer(&self, other: &Tensor) -> Tensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let mut out = Tensor::zero(dims);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut k = a.clone();
                k.extend_from_slice(b);
                out.add_term(k, x * y);
            }
        }
        out
    }

    /// Reinterprets the flattened tensor with new slot dimensions of equal product.
    pub fn reshape(&self, dims: &[usize]) -> Tensor {
        assert_eq!(
            dims.iter().product::<usize>(),
            self.dims.iter().product::<usize>(),
            "reshape changes size"
        );
        let terms = self
            .terms
            .iter()
            .map(|(idx, c)| (multi_index(dims, flat_index(&self.dims, idx)), c.clone()))
            .collect();
        Tensor {
            dims: dims.to_vec(),
            terms,
        }
    }

    pub fn to_flat(&self) -> SparseRow {
        let mut v: SparseRow = self
            .terms
            .iter()
            .map(|(idx, c)| (flat_index(&self.dims, idx), c.clone()))
            .collect();
        v.sort_by_key(|e| e.0);
        v
    }
}

/// Matrix of the linear map `basis tensor -> f(basis tensor)`, of shape
/// `prod(target_dims) x prod(source_dims)`.
pub fn operator_matrix<F>(source_dims: &[usize], target_dims: &[usize], f: F) -> Matrix
where
    F: Fn(Tensor) -> Tensor,
{
    let n: usize = source_dims.iter().product();
    let m: usize = target_dims.iter().product();
    let mut entries = Vec::new();
    for j in 0..n {
        let out = f(Tensor::basis_flat(source_dims, j));
        assert_eq!(out.dims(), target_dims, "operator produced wrong shape");
        for (i, c) in out.to_flat() {
            entries.push((i, j, c));
        }
    }
    Matrix::from_entries(m, n, entries)
}

/// Applies `f` to every column of `input`, each read as a tensor of shape
/// `source_dims`; returns the outputs as columns.
pub fn operator_on_columns<F>(input: &Matrix, source_dims: &[usize], target_dims: &[usize], f: F) -> Matrix
where
    F: Fn(Tensor) -> Tensor,
{
    assert_eq!(input.nrows(), source_dims.iter().product::<usize>(), "column length");
    let m: usize = target_dims.iter().product();
    let mut entries = Vec::new();
    for (j, col) in input.transpose().rows_iter().enumerate() {
        let mut t = Tensor::zero(source_dims.to_vec());
        for (i, c) in col {
            t.add_term(multi_index(source_dims, *i), c.clone());
        }
        let out = f(t);
        assert_eq!(out.dims(), target_dims, "operator produced wrong shape");
        for (i, c) in out.to_flat() {
            entries.push((i, j, c));
        }
    }
    Matrix::from_entries(m, input.ncols(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::rational::rat;

    #[test]
    fn apply_on_middle_slot_matches_kron() {
        let f = Matrix::from_i64(2, 2, &[1, 2, 3, 4]);
        let sm = SlotMap::new(&f, &[2], &[2]);
        let m = operator_matrix(&[2, 2, 2], &[2, 2, 2], |t| t.apply(1, &sm));
        let expected = Matrix::identity(2).kron(&f).kron(&Matrix::identity(2));
        assert_eq!(m, expected);
    }

    #[test]
    fn columnwise_application_matches_the_operator_matrix() {
        let f = Matrix::from_i64(2, 4, &[1, 0, 2, -1, 0, 3, 1, 1]);
        let sm = SlotMap::new(&f, &[2, 2], &[2]);
        let full = operator_matrix(&[2, 2, 3], &[2, 3], |t| t.apply(0, &sm));
        let input = Matrix::from_i64(12, 2, &[1, 0, 0, 2, 3, 0, 0, 0, 0, 1, -1, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 7, 1, 1]);
        assert_eq!(operator_on_columns(&input, &[2, 2, 3], &[2, 3], |t| t.apply(0, &sm)), full.mul(&input));
    }

    #[test]
    fn permutation_is_swap() {
        let m = operator_matrix(&[2, 3], &[3, 2], |t| t.permute(&[1, 0]));
        assert_eq!(m.get(2, 1), rat(1));
        assert_eq!(m.nnz(), 6);
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut t = Tensor::basis(&[2], &[0]);
        t.add_term(vec![0], rat(-1));
        assert!(t.is_zero());
    }
}
