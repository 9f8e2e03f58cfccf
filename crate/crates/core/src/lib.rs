//! Exact computation of Hopf cyclic cohomology with coefficients and its cup products.

pub mod cocyclic;
pub mod coeff;
pub mod cup;
pub mod error;
pub mod hopf;
pub mod linear;
pub mod report;

pub use error::{HccError, Result};
