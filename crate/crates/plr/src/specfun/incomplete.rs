//! Complete and incomplete elliptic integrals in the modulus convention.
//!
//! Complex amplitudes are integrated along the straight segment [0, φ]; the square root
//! √(1 − p² sin²θ) is continued along that segment starting from 1 at θ = 0.

use super::carlson::{carlson_rd, carlson_rf};
use super::ComplexAmplitude;
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadOptions};
use num_complex::Complex64;
use std::f64::consts::PI;

fn check_modulus(p: f64) -> Result<()> {
    if !(0.0..1.0).contains(&p) {
        return Err(Error::Domain(format!("modulus p = {p} outside [0, 1)")));
    }
    Ok(())
}

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Complete integral of the first kind K(p), modulus convention.
pub fn elliptic_k(p: f64) -> Result<f64> {
    check_modulus(p)?;
    Ok(carlson_rf(re(0.0), re((1.0 - p) * (1.0 + p)), re(1.0))?.re)
}

/// Complete integral of the second kind E(p), modulus convention.
pub fn elliptic_e(p: f64) -> Result<f64> {
    check_modulus(p)?;
    let y = re((1.0 - p) * (1.0 + p));
    let rf = carlson_rf(re(0.0), y, re(1.0))?;
    let rd = carlson_rd(re(0.0), y, re(1.0))?;
    Ok((rf - rd * (p * p / 3.0)).re)
}

/// Incomplete E(φ, p) for real φ, extended quasi-periodically beyond [−π/2, π/2].
pub fn incomplete_e_real(phi: f64, p: f64) -> Result<f64> {
    check_modulus(p)?;
    let j = (phi / PI).round();
    let r = phi - j * PI;
    let (s, c) = r.sin_cos();
    let delta = 1.0 - p * p * s * s;
    let base = if s == 0.0 {
        0.0
    } else {
        let rf = carlson_rf(re(c * c), re(delta), re(1.0))?;
        let rd = carlson_rd(re(c * c), re(delta), re(1.0))?;
        s * rf.re - p * p * s * s * s * rd.re / 3.0
    };
    Ok(base + 2.0 * j * elliptic_e(p)?)
}

/// Incomplete F(φ, p) for real φ via Carlson, extended quasi-periodically.
pub fn incomplete_f_real(phi: f64, p: f64) -> Result<f64> {
    check_modulus(p)?;
    let j = (phi / PI).round();
    let r = phi - j * PI;
    let (s, c) = r.sin_cos();
    let base = if s == 0.0 { 0.0 } else { s * carlson_rf(re(c * c), re(1.0 - p * p * s * s), re(1.0))?.re };
    Ok(base + 2.0 * j * elliptic_k(p)?)
}

/// Pieces of [0, 1] on which √w(tφ) equals sign·principal √w(tφ).
struct BranchPieces {
    knots: Vec<f64>,
    signs: Vec<f64>,
}

fn radicand(t: f64, phi: Complex64, p: f64) -> Complex64 {
    let s = (phi * t).sin();
    Complex64::new(1.0, 0.0) - s * s * (p * p)
}

fn branch_pieces(phi: Complex64, p: f64) -> Result<BranchPieces> {
    let n = 512 + (64.0 * phi.norm()).ceil() as usize;
    let mut knots = vec![0.0];
    let mut signs = vec![1.0];
    let mut sign = 1.0;
    let mut last = (0.0, radicand(0.0, phi, p));
    for i in 1..=n {
        let t = i as f64 / n as f64;
        let w = radicand(t, phi, p);
        if w.norm() < 1e-10 {
            return Err(Error::BranchAmbiguity(format!("integrand singular on the amplitude path near t = {t}")));
        }
        if w.im == 0.0 {
            continue;
        }
        if last.1.im != 0.0 && (last.1.im > 0.0) != (w.im > 0.0) {
            let up = last.1.im > 0.0;
            let (mut lo, mut hi) = (last.0, t);
            for _ in 0..80 {
                let mid = 0.5 * (lo + hi);
                if (radicand(mid, phi, p).im > 0.0) == up {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let tc = 0.5 * (lo + hi);
            if radicand(tc, phi, p).re < 0.0 {
                sign = -sign;
                knots.push(tc);
                signs.push(sign);
            }
        }
        last = (t, w);
    }
    knots.push(1.0);
    Ok(BranchPieces { knots, signs })
}

fn amplitude_integral<G>(phi: &ComplexAmplitude, p: f64, g: G) -> Result<Complex64>
where
    G: Fn(Complex64, Complex64) -> Complex64,
{
    check_modulus(p)?;
    let phi = phi.value();
    if phi.norm() == 0.0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let pieces = branch_pieces(phi, p)?;
    let opts = QuadOptions { abs_tol: 1e-15, rel_tol: 1e-14, max_intervals: 4000 };
    let mut total = Complex64::new(0.0, 0.0);
    for (k, sign) in pieces.signs.iter().enumerate() {
        let (a, b) = (pieces.knots[k], pieces.knots[k + 1]);
        let r = integrate(
            |t| {
                let th = phi * t;
                let s = th.sin();
                let root = radicand(t, phi, p).sqrt() * *sign;
                g(s * s, root) * phi
            },
            a,
            b,
            opts,
        )?;
        total += r.value;
    }
    Ok(total)
}

/// Incomplete integral of the first kind F(φ, p) = ∫₀^φ dθ/√(1 − p² sin²θ).
pub fn incomplete_f(phi: &ComplexAmplitude, p: f64) -> Result<Complex64> {
    amplitude_integral(phi, p, |_, root| root.inv())
}

/// Incomplete integral of the second kind E(φ, p) = ∫₀^φ √(1 − p² sin²θ) dθ.
pub fn incomplete_e(phi: &ComplexAmplitude, p: f64) -> Result<Complex64> {
    amplitude_integral(phi, p, |_, root| root)
}

/// Incomplete integral of the third kind Π(n, φ, p) = ∫₀^φ dθ/((1 − n sin²θ)√(1 − p² sin²θ)).
pub fn incomplete_pi(characteristic: Complex64, phi: &ComplexAmplitude, p: f64) -> Result<Complex64> {
    let z = phi.value();
    if characteristic.norm() > 0.0 && z.norm() > 0.0 {
        // zeros of 1 − n sin²θ are ±w + kπ with sin w = 1/√n
        let w = (characteristic.sqrt().inv()).asin();
        let kmax = (z.norm() / PI).ceil() as i64 + 1;
        for k in -kmax..=kmax {
            for root in [w + PI * k as f64, -w + PI * k as f64] {
                let t = root / z;
                let along = t.re.clamp(0.0, 1.0);
                let miss = (root - z * along).norm();
                if miss < 1e-8 * (1.0 + z.norm()) {
                    return Err(Error::BranchAmbiguity(format!(
                        "1 − n sin²θ vanishes at θ = {root} on the amplitude path"
                    )));
                }
            }
        }
    }
    amplitude_integral(phi, p, |s2, root| (root * (Complex64::new(1.0, 0.0) - characteristic * s2)).inv())
}

/// Complete integral of the third kind Π(n, p).
pub fn complete_pi(characteristic: Complex64, p: f64) -> Result<Complex64> {
    incomplete_pi(characteristic, &ComplexAmplitude::new(Complex64::new(PI / 2.0, 0.0))?, p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_degenerate() {
        assert!((elliptic_k(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((elliptic_e(0.0).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!(elliptic_k(1.0).is_err());
    }

    #[test]
    fn incomplete_real_matches_complete() {
        let p = 0.7;
        assert!((incomplete_f_real(PI / 2.0, p).unwrap() - elliptic_k(p).unwrap()).abs() < 1e-14);
        assert!((incomplete_e_real(PI, p).unwrap() - 2.0 * elliptic_e(p).unwrap()).abs() < 1e-14);
    }

    #[test]
    fn zero_modulus_is_identity() {
        let phi = Complex64::new(0.3, 0.2);
        let f = incomplete_f(&ComplexAmplitude::new(phi).unwrap(), 0.0).unwrap();
        assert!((f - phi).norm() < 1e-15);
    }
}
