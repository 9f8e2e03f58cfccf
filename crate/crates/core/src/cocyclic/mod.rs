//! Cocyclic modules, their constructions from Hopf-symmetric data, and
//! Hochschild and cyclic cohomology.

pub mod build;
pub mod mixed;
pub mod module;

pub use build::{
    algebra_contra_cocyclic, algebra_module_cocyclic, coalgebra_cocyclic, comodule_algebra_cocyclic, diagonal_action,
    diagonal_coaction, iso_i, plain_algebra_cocyclic, verify_cyclic_map, verify_morphism, Isomorphism,
};
pub use mixed::{
    cyclic_cochains, cyclic_cohomology, hochschild_cohomology, verify_lambda_compatibility, ClassKind, CochainClass,
    Cohomology, MixedComplex,
};
pub use module::{pullback, twisted_pullback, verify_cocyclic, CocyclicModule, Realization};
