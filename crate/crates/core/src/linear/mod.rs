//! Exact rational linear algebra: based spaces, sparse matrices, row
//! reduction, kernels, cokernels and tensor-slot operator assembly.

pub mod elim;
pub mod matrix;
pub mod rational;
pub mod space;
pub mod tensor;

pub use elim::{
    cokernel, first_nonzero, kernel, rank, solve, solve_constrained_subspace, vector_is_zero, Quotient, Rref, Subspace,
};
pub use matrix::{Matrix, Mismatch};
pub use rational::{parse_rational, rat, ratio, Rational};
pub use space::{dual_space, tensor_map, tensor_space, LinearMap, VectorSpace};
pub use tensor::{operator_matrix, operator_on_columns, SlotMap, Tensor};
