//! Complete and incomplete elliptic integrals, Carlson forms and the Legendre relation.
use num_complex::Complex64;
use plr::specfun::*;
use std::f64::consts::PI;

fn main() -> plr::Result<()> {
    let p = 0.6;
    let m = EllipticModulus::from_p(p)?;
    let (k, e) = (elliptic_k(m.p)?, elliptic_e(m.p)?);
    let (kp, ep) = (elliptic_k(m.p_prime)?, elliptic_e(m.p_prime)?);
    println!("p = {p}, p' = {}", m.p_prime);
    println!("K = {k:.15}, E = {e:.15}, K' = {kp:.15}, E' = {ep:.15}");
    println!("Legendre residual EK' + E'K - KK' - pi/2 = {:.2e}", e * kp + ep * k - k * kp - PI / 2.0);

    let phi = ComplexAmplitude::new(Complex64::new(1.2, 0.3))?;
    println!("F(1.2+0.3i) = {}", incomplete_f(&phi, p)?);
    println!("E(1.2+0.3i) = {}", incomplete_e(&phi, p)?);
    println!("Pi(0.3+0.4i; 1.2+0.3i) = {}", incomplete_pi(Complex64::new(0.3, 0.4), &phi, p)?);
    println!("Pi(0.3+0.4i) complete = {}", complete_pi(Complex64::new(0.3, 0.4), p)?);

    let z = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let y = Complex64::new(1.0 - p * p, 0.0);
    println!("R_F(0, 1-p^2, 1) = {} (equals K)", carlson_rf(z, y, one)?);
    println!("R_D(0, 1-p^2, 1) = {}", carlson_rd(z, y, one)?);
    println!("R_J(0, 1, 2, 3) = {}", carlson_rj(z, one, one * 2.0, one * 3.0)?);
    Ok(())
}
