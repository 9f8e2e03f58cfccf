//! Cup products in Hopf cyclic cohomology.

pub mod bicocyclic;
pub mod maps;
pub mod pipeline;
pub mod smap;

pub use bicocyclic::{AlexanderWhitney, Bicocyclic, TotalComplex};
pub use maps::{phi_map, postcompose, psi_map, pullback_along, Coupling, CyclicMap};
pub use pipeline::{
    collapse_cocycle, cup_aa, cup_aa_general, cup_ac, cup_ac_general, cyclic_complete, normalized_representative,
    BbCocycle, CupProduct,
};
pub use smap::{extend_to_s_map, SMap};
