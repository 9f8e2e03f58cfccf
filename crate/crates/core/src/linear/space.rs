//! Based vector spaces and typed linear maps.
//!
//! Tensor products use the row-major convention everywhere: the basis vector
//! `v_i (x) w_j` of `V (x) W` has index `i * dim(W) + j`.

use serde::Serialize;

use super::elim::{self, Quotient, Subspace};
use super::matrix::Matrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VectorSpace {
    labels: Vec<String>,
}

impl VectorSpace {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Self {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut seen = std::collections::BTreeSet::new();
        for l in &labels {
            assert!(seen.insert(l.as_str()), "duplicate basis label {l:?}");
        }
        VectorSpace { labels }
    }

    /// `e0, e1, ...`
    pub fn standard(prefix: &str, dim: usize) -> Self {
        VectorSpace {
            labels: (0..dim).map(|i| format!("{prefix}{i}")).collect(),
        }
    }

    /// The ground field, one basis vector labelled `1`.
    pub fn ground() -> Self {
        VectorSpace::new(["1"])
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn tensor(&self, other: &VectorSpace) -> VectorSpace {
        let mut labels = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(format!("{a}⊗{b}"));
            }
        }
        VectorSpace { labels }
    }

    pub fn tensor_power(&self, k: usize) -> VectorSpace {
        let mut out = VectorSpace::ground();
        for i in 0..k {
            out = if i == 0 { self.clone() } else { out.tensor(self) };
        }
        out
    }

    pub fn dual(&self) -> VectorSpace {
        VectorSpace {
            labels: self.labels.iter().map(|l| format!("{l}*")).collect(),
        }
    }

    pub fn select(&self, idx: &[usize]) -> VectorSpace {
        VectorSpace {
            labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
        }
    }
}

pub fn tensor_space(v: &VectorSpace, w: &VectorSpace) -> VectorSpace {
    v.tensor(w)
}

/// Row-major index of a multi-index.
pub fn flat_index(dims: &[usize], idx: &[usize]) -> usize {
    debug_assert_eq!(dims.len(), idx.len());
    idx.iter().zip(dims).fold(0, |acc, (&i, &d)| {
        debug_assert!(i < d);
        acc * d + i
    })
}

/// Inverse of [`flat_index`].
pub fn multi_index(dims: &[usize], mut flat: usize) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (k, &d) in dims.iter().enumerate().rev() {
        out[k] = flat % d;
        flat /= d;
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    pub source: VectorSpace,
    pub target: VectorSpace,
    pub matrix: Matrix,
}

impl LinearMap {
    pub fn new(source: VectorSpace, target: VectorSpace, matrix: Matrix) -> Self {
        assert_eq!(matrix.ncols(), source.dim(), "matrix width != dim(source)");
        assert_eq!(matrix.nrows(), target.dim(), "matrix height != dim(target)");
        LinearMap { source, target, matrix }
    }

    pub fn identity(v: &VectorSpace) -> Self {
        LinearMap::new(v.clone(), v.clone(), Matrix::identity(v.dim()))
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &LinearMap) -> LinearMap {
        assert_eq!(inner.target.dim(), self.source.dim(), "inner dimensions differ");
        LinearMap::new(
            inner.source.clone(),
            self.target.clone(),
            self.matrix.mul(&inner.matrix),
        )
    }

    pub fn transpose(&self) -> LinearMap {
        LinearMap::new(self.target.dual(), self.source.dual(), self.matrix.transpose())
    }

    pub fn kernel(&self) -> Subspace {
        elim::kernel(&self.matrix)
    }

    pub fn cokernel(&self) -> (VectorSpace, LinearMap, LinearMap) {
        let q: Quotient = elim::cokernel(&self.matrix);
        let space = self.target.select(q.kept());
        let projection = LinearMap::new(self.target.clone(), space.clone(), q.projection().clone());
        let section = LinearMap::new(space.clone(), self.target.clone(), q.section());
        (space, projection, section)
    }
}

pub fn tensor_map(f: &LinearMap, g: &LinearMap) -> LinearMap {
    LinearMap::new(
        f.source.tensor(&g.source),
        f.target.tensor(&g.target),
        f.matrix.kron(&g.matrix),
    )
}

pub fn dual_space(v: &VectorSpace) -> VectorSpace {
    v.dual()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tensor_with_unit() {
        let v = VectorSpace::ground();
        let w = VectorSpace::new(["a", "b", "c"]);
        let t = tensor_space(&v, &w);
        assert_eq!(t.dim(), 3);
        assert_eq!(t.label(2), "1⊗c");
    }

    #[test]
    fn tensor_order_is_row_major() {
        let v = VectorSpace::new(["v0", "v1"]);
        let t = tensor_space(&v, &v);
        assert_eq!(t.labels(), &["v0⊗v0", "v0⊗v1", "v1⊗v0", "v1⊗v1"]);
    }

    #[test]
    fn iterated_tensor_index() {
        let v = VectorSpace::standard("e", 2);
        assert_eq!(v.tensor_power(3).dim(), 8);
        assert_eq!(flat_index(&[2, 2, 2], &[1, 0, 1]), 5);
        assert_eq!(multi_index(&[2, 2, 2], 5), vec![1, 0, 1]);
        assert_eq!(v.tensor_power(3).label(5), "e1⊗e0⊗e1");
    }

    #[test]
    fn dual_pairing_and_transpose() {
        let v = VectorSpace::standard("e", 3);
        let id = LinearMap::identity(&v);
        assert_eq!(id.transpose().matrix, id.matrix);
        // pairing of basis with dual basis is the identity matrix
        let pairing = Matrix::identity(v.dim());
        assert_eq!(dual_space(&v).dim(), 3);
        assert!(pairing.is_identity());
        let f = LinearMap::new(
            v.clone(),
            VectorSpace::standard("w", 2),
            Matrix::from_i64(2, 3, &[1, 2, 3, 4, 5, 6]),
        );
        assert_eq!(f.transpose().transpose().matrix, f.matrix);
    }
}
