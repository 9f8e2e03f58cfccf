//! Hopf algebras and the algebraic structures they act on.

pub mod algebra;
pub mod builtin;
pub mod derived;
pub mod structures;

pub use algebra::{swap_matrix, Algebra, HopfAlgebra};
pub use builtin::{group_algebra, group_algebra_cyclic, group_algebra_s3, sweedler_h4, trivial_hopf, Group};
pub use derived::{crossed_product, ConvolutionAlgebra};
pub use structures::{adjoint_action, CoalgebraAction, ComoduleAlgebra, ModuleAlgebra, ModuleCoalgebra};
