//! Coefficients: SAYD modules, SAYD contramodules, pairings and `L(N, M)`.

pub mod contra;
pub mod module;
pub mod pair;

pub use contra::SaydContramodule;
pub use module::SaydModule;
pub use pair::{collapse_map, diagonal_pairing, trivial_coefficients, CompatiblePair, Contratensor};
