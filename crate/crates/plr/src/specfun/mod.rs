//! Elliptic integrals and Jacobi elliptic functions.
//!
//! **Modulus convention.** Every function takes the modulus `p`, never the parameter
//! `m = p²`: `elliptic_k(p) = ∫₀^{π/2} dθ/√(1 − p² sin²θ)`.

mod carlson;
mod incomplete;
mod jacobi;

pub use carlson::{carlson_rd, carlson_rf, carlson_rj};
pub use incomplete::{
    complete_pi, elliptic_e, elliptic_k, incomplete_e, incomplete_e_real, incomplete_f, incomplete_f_real,
    incomplete_pi,
};
pub use jacobi::{jacobi_sn_cn_dn, jacobi_zeta};

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Default cap on |Im φ| for complex amplitudes.
pub const AMPLITUDE_IM_CAP: f64 = 50.0;

/// A modulus p in (0, 1) together with its complement p' = √(1 − p²).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EllipticModulus {
    pub p: f64,
    pub p_prime: f64,
}

impl EllipticModulus {
    pub fn from_p(p: f64) -> Result<Self> {
        if !(p > 0.0 && p < 1.0) {
            return Err(Error::Domain(format!("modulus {p} not in (0, 1)")));
        }
        Ok(Self { p, p_prime: ((1.0 - p) * (1.0 + p)).sqrt() })
    }

    pub fn from_p_prime(p_prime: f64) -> Result<Self> {
        let m = Self::from_p(p_prime)?;
        Ok(Self { p: m.p_prime, p_prime })
    }

    pub fn complement(&self) -> Self {
        Self { p: self.p_prime, p_prime: self.p }
    }
}

/// Complex amplitude of an incomplete elliptic integral.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexAmplitude(Complex64);

impl ComplexAmplitude {
    pub fn new(phi: Complex64) -> Result<Self> {
        Self::with_cap(phi, AMPLITUDE_IM_CAP)
    }

    pub fn with_cap(phi: Complex64, cap: f64) -> Result<Self> {
        if !phi.re.is_finite() || !phi.im.is_finite() {
            return Err(Error::Domain("non-finite amplitude".into()));
        }
        if phi.im.abs() > cap {
            return Err(Error::AmplitudeOverflow { im: phi.im, cap });
        }
        Ok(Self(phi))
    }

    pub fn value(&self) -> Complex64 {
        self.0
    }
}
