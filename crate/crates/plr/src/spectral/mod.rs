//! The spectral curve, its differentials, periods and asymptotic constants.

pub mod curve;
pub mod data;
pub mod path;

pub use curve::{distance_to_cuts, mu, mu_plus, mu_plus_at_infinity, sheet_at_origin, BranchData, CurvePoint};
pub use data::{
    abel_map, abel_map_infinity, abelian_integral, abelian_integral_with, asymptotic_constant, cycle_periods,
    genus1_spectral, r_closed_form, AbelValue, AsymptoticKind, AsymptoticMethod, Diagnostics, Differential, Divisor,
    SpectralData,
};
pub use path::{PathSpec, RouteGeometry};
