//! Carlson symmetric elliptic integrals R_F, R_D, R_J for complex arguments.

use crate::error::{Error, Result};
use num_complex::Complex64;

const TOL: f64 = 1e-16;
const MAX_ITER: usize = 100;

fn too_many_zeros(args: &[Complex64]) -> bool {
    args.iter().filter(|z| z.norm() == 0.0).count() > 1
}

/// R_F(x, y, z) = ½∫₀^∞ dt / √((t+x)(t+y)(t+z)).
pub fn carlson_rf(x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    if too_many_zeros(&[x, y, z]) {
        return Err(Error::Domain("carlson_rf: two arguments are zero".into()));
    }
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + z) / 3.0;
    let q = (3.0 * TOL).powf(-1.0 / 6.0) * (a0 - x).norm().max((a0 - y).norm()).max((a0 - z).norm());
    let mut a = a0;
    let mut scale = 1.0;
    let (x0, y0) = (x, y);
    for _ in 0..MAX_ITER {
        if scale * q < a.norm() {
            let xx = (a0 - x0) / a * scale;
            let yy = (a0 - y0) / a * scale;
            let zz = -xx - yy;
            let e2 = xx * yy - zz * zz;
            let e3 = xx * yy * zz;
            let poly = Complex64::new(1.0, 0.0) - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - e2 * e3 * (3.0 / 44.0);
            return Ok(poly / a.sqrt());
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        a = (a + lam) * 0.25;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        z = (z + lam) * 0.25;
        scale *= 0.25;
    }
    Err(Error::NonConvergent("carlson_rf duplication".into()))
}

/// R_D(x, y, z) = (3/2)∫₀^∞ dt / ((t+z)√((t+x)(t+y)(t+z))).
pub fn carlson_rd(x: Complex64, y: Complex64, z: Complex64) -> Result<Complex64> {
    if too_many_zeros(&[x, y]) || z.norm() == 0.0 {
        return Err(Error::Domain("carlson_rd: invalid zero arguments".into()));
    }
    let (mut x, mut y, mut z) = (x, y, z);
    let a0 = (x + y + 3.0 * z) / 5.0;
    let q = (TOL / 4.0).powf(-1.0 / 6.0) * (a0 - x).norm().max((a0 - y).norm()).max((a0 - z).norm());
    let (x0, y0) = (x, y);
    let mut a = a0;
    let mut scale = 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    for _ in 0..MAX_ITER {
        if scale * q < a.norm() {
            let xx = (a0 - x0) / a * scale;
            let yy = (a0 - y0) / a * scale;
            let zz = -(xx + yy) / 3.0;
            let xy = xx * yy;
            let z2 = zz * zz;
            let e2 = xy - 6.0 * z2;
            let e3 = (3.0 * xy - 8.0 * z2) * zz;
            let e4 = 3.0 * (xy - z2) * z2;
            let e5 = xy * z2 * zz;
            let poly = Complex64::new(1.0, 0.0) - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0
                - 9.0 * e2 * e3 / 52.0
                + 3.0 * e5 / 26.0;
            return Ok(poly * scale / (a * a.sqrt()) + 3.0 * sum);
        }
        let (sx, sy, sz) = (x.sqrt(), y.sqrt(), z.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        sum += scale / (sz * (z + lam));
        a = (a + lam) * 0.25;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        z = (z + lam) * 0.25;
        scale *= 0.25;
    }
    Err(Error::NonConvergent("carlson_rd duplication".into()))
}

/// R_J(x, y, z, p) = (3/2)∫₀^∞ dt / ((t+p)√((t+x)(t+y)(t+z))).
pub fn carlson_rj(x: Complex64, y: Complex64, z: Complex64, p: Complex64) -> Result<Complex64> {
    if too_many_zeros(&[x, y, z]) || p.norm() == 0.0 {
        return Err(Error::Domain("carlson_rj: invalid zero arguments".into()));
    }
    let (mut x, mut y, mut z, mut p) = (x, y, z, p);
    let a0 = (x + y + z + 2.0 * p) / 5.0;
    let delta = (p - x) * (p - y) * (p - z);
    let q = (TOL / 4.0).powf(-1.0 / 6.0)
        * (a0 - x).norm().max((a0 - y).norm()).max((a0 - z).norm()).max((a0 - p).norm());
    let (x0, y0, z0) = (x, y, z);
    let mut a = a0;
    let mut scale = 1.0;
    let mut sum = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    for _ in 0..MAX_ITER {
        if scale * q < a.norm() {
            let xx = (a0 - x0) / a * scale;
            let yy = (a0 - y0) / a * scale;
            let zz = (a0 - z0) / a * scale;
            let pp = -(xx + yy + zz) / 2.0;
            let e2 = xx * yy + xx * zz + yy * zz - 3.0 * pp * pp;
            let e3 = xx * yy * zz + 2.0 * e2 * pp + 4.0 * pp * pp * pp;
            let e4 = (2.0 * xx * yy * zz + e2 * pp + 3.0 * pp * pp * pp) * pp;
            let e5 = xx * yy * zz * pp * pp;
            let poly = one - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 - 3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0
                + 3.0 * e5 / 26.0;
            return Ok(poly * scale / (a * a.sqrt()) + 6.0 * sum);
        }
        let (sx, sy, sz, sp) = (x.sqrt(), y.sqrt(), z.sqrt(), p.sqrt());
        let lam = sx * sy + sy * sz + sz * sx;
        let d = (sp + sx) * (sp + sy) * (sp + sz);
        let e = delta * scale * scale * scale / (d * d);
        sum += scale / d * carlson_rf(one, one + e, one + e)?;
        a = (a + lam) * 0.25;
        x = (x + lam) * 0.25;
        y = (y + lam) * 0.25;
        z = (z + lam) * 0.25;
        p = (p + lam) * 0.25;
        scale *= 0.25;
    }
    Err(Error::NonConvergent("carlson_rj duplication".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn rf_trivial_values() {
        assert!((carlson_rf(c(2.0), c(2.0), c(2.0)).unwrap().re - 0.5f64.sqrt()).abs() < 1e-15);
        assert!((carlson_rf(c(0.0), c(1.0), c(1.0)).unwrap().re - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        assert!(carlson_rf(c(0.0), c(0.0), c(1.0)).is_err());
    }

    #[test]
    fn rd_reference() {
        // mpmath elliprd(0, 2, 1)
        let v = carlson_rd(c(0.0), c(2.0), c(1.0)).unwrap();
        assert!((v.re - 1.797_210_352_103_388_3).abs() < 1e-14);
    }

    #[test]
    fn rj_reference() {
        // mpmath elliprj(0, 1, 2, 3)
        let v = carlson_rj(c(0.0), c(1.0), c(2.0), c(3.0)).unwrap();
        assert!((v.re - 0.776_886_237_785_823_3).abs() < 1e-14);
        // mpmath elliprj(0, 0.8, 1, 0.3+0.4i)
        let w = carlson_rj(c(0.0), c(0.8), c(1.0), Complex64::new(0.3, 0.4)).unwrap();
        assert!((w - Complex64::new(3.451_974_046_448_823_5, -2.687_504_169_376_638)).norm() < 1e-13);
    }
}
