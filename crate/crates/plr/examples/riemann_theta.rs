//! Riemann theta for genus one and two: quasi-periodicity, conjugation symmetry and derivatives.
use nalgebra::DMatrix;
use num_complex::Complex64;
use plr::theta::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> plr::Result<()> {
    let t1 = PeriodMatrix::scalar(c(-6.9, 0.0))?;
    let u = c(0.7, -1.9);
    let jet = theta1_jet(u, &t1)?;
    println!("genus 1: theta = {:.15}, theta' = {:.15}, theta'' = {:.15}", jet.value, jet.d1, jet.d2);
    println!("  theta(u + 2 pi i)/theta(u) = {:.15}", theta(&[u + c(0.0, 2.0 * PI)], &t1)? / jet.value);
    let shifted = theta(&[u + c(-6.9, 0.0)], &t1)?;
    println!("  tau shift: {:.3e}", (shifted - theta_shift_factor(&[u], &t1, 0) * jet.value).norm() / shifted.norm());
    println!("  conj symmetry: {:.3e}", (theta(&[u.conj()], &t1)? - jet.value.conj()).norm());

    let t2 = PeriodMatrix::new(DMatrix::from_row_slice(2, 2, &[c(-4.0, 0.0), c(-1.0, PI), c(-1.0, PI), c(-3.0, 0.0)]))?;
    let v = [c(0.3, 1.0), c(-0.2, 2.5)];
    println!("genus 2 (real structure {}): theta = {:.15}", t2.has_real_structure(1e-8), theta(&v, &t2)?);
    let d = [c(1.0, 0.0), c(0.5, 0.0)];
    println!("  directional derivatives: {:.12}, {:.12}", theta_dderiv(&v, &t2, &d, 1)?, theta_dderiv(&v, &t2, &d, 2)?);
    let r = lattice_reduce(&[c(-4.0 * 2.0 + 0.1, 2.0 * PI * 3.0 + 0.2), c(-1.0 * 2.0, PI * 2.0 + 6.0 * PI)], &t2);
    println!("  lattice reduction: shifts k = {:?}, m = {:?}", r.k, r.m);
    Ok(())
}
