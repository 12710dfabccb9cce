//! Baker-Akhiezer frame: SU(2) membership and the Lax equations checked by finite differences.
use nalgebra::Matrix2;
use num_complex::Complex64;
use plr::bafield::*;
use plr::spectral::*;

fn main() -> plr::Result<()> {
    let d = genus1_spectral(BranchData::new(Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095))?, Divisor::default())?;
    let ctx = FieldContext::new(d, 0.8)?;
    let (s, t, h) = (0.4, -0.2, 1e-5);
    let f = ctx.frame_at(&ctx.p0, s, t)?;
    println!("Psi = {}", f.psi);
    println!("|Psi* Psi - I| = {:.2e}, det Psi = {:.15}", (f.psi.adjoint() * f.psi - Matrix2::identity()).norm(), f.psi.determinant());
    let j = ctx.q_potential(s, t)?;
    let row = |s: f64, t: f64| ctx.psi_at(&ctx.p0, s, t);
    let (a, b) = row(s, t)?;
    let ds = |x: (Complex64, Complex64), y: (Complex64, Complex64)| ((x.0 - y.0) / (2.0 * h), (x.1 - y.1) / (2.0 * h));
    let (ps, pt) = (ds(row(s + h, t)?, row(s - h, t)?), ds(row(s, t + h)?, row(s, t - h)?));
    let l = lax_l(ctx.lambda0(), j.q);
    let m = lax_m(ctx.lambda0(), &j);
    let rl = (ps.0 - (a * l[(0, 0)] + b * l[(1, 0)])).norm() + (ps.1 - (a * l[(0, 1)] + b * l[(1, 1)])).norm();
    let rm = (pt.0 - (a * m[(0, 0)] + b * m[(1, 0)])).norm() + (pt.1 - (a * m[(0, 1)] + b * m[(1, 1)])).norm();
    println!("psi_s - psi L = {rl:.2e}, psi_t - psi M = {rm:.2e}");
    Ok(())
}
