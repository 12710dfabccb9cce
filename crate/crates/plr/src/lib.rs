//! Genus-one finite-gap solutions of the complex PLR (sigma-model) equation.
//!
//! Pipeline: branch points → [`spectral::SpectralData`] → [`bafield::FieldContext`] →
//! potential `q`, frame `Ψ` and Sym curve `γ` → closure search and residual checks.

pub mod bafield;
pub mod cli;
pub mod closure;
pub mod error;
pub mod quad;
pub mod specfun;
pub mod spectral;
pub mod theta;
pub mod verify;

pub use error::{Error, Result};
