//! Genus-one spectral data: closed-form constants, normalized differentials and their
//! integrals, the Abel map, and the asymptotic constants E, H, β.

use super::curve::{mu, sheet_at_origin, BranchData, CurvePoint};
use super::path::{
    integrate_a_cycle, integrate_b_cycle, integrate_polyline, integrate_segment, integrate_tail, PathSpec,
    RouteGeometry,
};
use crate::error::{Error, Result};
use crate::specfun::{complete_pi, elliptic_e, elliptic_k, incomplete_f, ComplexAmplitude, EllipticModulus};
use crate::theta::{lattice_reduce, PeriodMatrix};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

const REALITY_TOL: f64 = 1e-6;

/// Divisor phase D = ε·τ/2 + i·y.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Divisor {
    pub epsilon: u8,
    pub y: f64,
}

impl Default for Divisor {
    fn default() -> Self {
        Self { epsilon: 0, y: 0.0 }
    }
}

/// Quantities recorded during construction that are checked rather than consumed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    pub e_imag: f64,
    pub h_imag: f64,
    pub c_plus_phase_residual: f64,
    pub c3_imag: f64,
    pub r_closed_form: Complex64,
    pub quadrature_error: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectralData {
    pub branch: BranchData,
    pub divisor: Divisor,
    pub h: Complex64,
    pub modulus: EllipticModulus,
    /// K(p), K(p'), E(p).
    pub k: f64,
    pub k_prime: f64,
    pub e: f64,
    /// Genus-one period matrix (a real negative scalar).
    pub tau: f64,
    pub mu0: f64,
    pub c: f64,
    pub d: f64,
    pub c1: f64,
    pub c2: f64,
    pub c3: Complex64,
    pub u: f64,
    pub v: f64,
    /// r = A(P∞⁺), the route-consistent representative.
    pub r: Complex64,
    pub e_const: f64,
    pub h_const: f64,
    pub f_const: Option<f64>,
    pub log_beta: f64,
    /// lim (Ω₃ − log λ) at P∞⁺; e^{c₊} = i·q_sign/√β.
    pub c_plus: Complex64,
    pub q_sign: f64,
    pub k_minus: f64,
    pub d_phase: Complex64,
    /// ω = omega_norm · dλ/μ.
    pub omega_norm: f64,
    pub base_point: CurvePoint,
    pub route: RouteGeometry,
    pub diagnostics: Diagnostics,
}

/// The normalized differentials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Differential {
    Omega1,
    Omega2,
    Omega3,
    Holomorphic,
}

impl Differential {
    pub fn from_kind(kind: u8) -> Result<Self> {
        match kind {
            1 => Ok(Self::Omega1),
            2 => Ok(Self::Omega2),
            3 => Ok(Self::Omega3),
            _ => Err(Error::Domain(format!("differential kind {kind} not in {{1, 2, 3}}"))),
        }
    }
}

/// Methods for the limits at infinity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AsymptoticMethod {
    /// Exact integral of the regularized differential in ζ = 1/λ down to ζ = 0.
    TailSubstitution,
    /// Two-radius Richardson extrapolation of the truncated limit.
    Richardson { r1: f64, r2: f64 },
    /// Truncated limit at a single radius.
    Radius(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AsymptoticKind {
    E,
    H,
    CPlus,
}

impl SpectralData {
    pub fn period_matrix(&self) -> Result<PeriodMatrix> {
        PeriodMatrix::scalar(Complex64::new(self.tau, 0.0))
    }

    pub fn beta(&self) -> f64 {
        self.log_beta.exp()
    }

    /// f(λ, μ) with dΩ = f dλ on the sheet where μ is given.
    pub fn integrand(&self, kind: Differential, lambda: Complex64, mu: Complex64) -> Complex64 {
        match kind {
            Differential::Omega1 => (lambda * lambda - lambda * (self.c / 2.0) - self.c1) / mu,
            Differential::Omega2 => {
                let z = lambda.inv();
                -(z * z - z * (self.d / 2.0) - self.c2) * self.mu0 / mu
            }
            Differential::Omega3 => (lambda - self.c3) / mu,
            Differential::Holomorphic => Complex64::new(self.omega_norm, 0.0) / mu,
        }
    }

    /// Integrand evaluated on the + sheet.
    pub fn integrand_at(&self, kind: Differential, point: &CurvePoint) -> Result<Complex64> {
        Ok(self.integrand(kind, point.lambda, mu(&self.branch, point)?))
    }

    pub fn lattice_reduce(&self, u: Complex64) -> Complex64 {
        match self.period_matrix() {
            Ok(pm) => lattice_reduce(&[u], &pm).value[0],
            Err(_) => u,
        }
    }
}

/// ∫ from the base point to `target`, with absolute error estimate.
pub fn abelian_integral_with(
    kind: Differential,
    target: &CurvePoint,
    path: Option<&PathSpec>,
    data: &SpectralData,
) -> Result<(Complex64, f64)> {
    let auto;
    let path = match path {
        Some(p) => p,
        None => {
            auto = PathSpec::auto(&data.branch, target.lambda, target.sheet);
            &auto
        }
    };
    if path.initial_sheet != target.sheet {
        return Err(Error::Domain("path sheet differs from target sheet; paths cannot change sheet".into()));
    }
    if (path.waypoints[0] - data.base_point.lambda).norm() > 1e-14 {
        return Err(Error::Domain("path must start at the base point".into()));
    }
    if (path.end() - target.lambda).norm() > 1e-14 * (1.0 + target.lambda.norm()) {
        return Err(Error::Domain("path must end at the target".into()));
    }
    if data.branch.is_branch_point(target.lambda) && target.lambda != data.base_point.lambda {
        return Err(Error::AtBranchPoint { re: target.lambda.re, im: target.lambda.im });
    }
    path.validate(&data.branch, data.route.cut_margin)?;
    let f = |lam: Complex64, m: Complex64| data.integrand(kind, lam, m);
    let (v, e) = integrate_polyline(&data.branch, &f, &path.waypoints)?;
    Ok((v * target.sign(), e))
}

/// Ω_kind(target) for kind ∈ {1, 2, 3}, integrated from the base point over λ̄₂.
pub fn abelian_integral(kind: u8, target: &CurvePoint, path: Option<&PathSpec>, data: &SpectralData) -> Result<(Complex64, f64)> {
    abelian_integral_with(Differential::from_kind(kind)?, target, path, data)
}

/// Abel map with base point P∞⁻: the path representative and its lattice reduction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbelValue {
    pub value: Complex64,
    pub reduced: Complex64,
}

pub fn abel_map(target: &CurvePoint, data: &SpectralData) -> Result<AbelValue> {
    let (w, _) = abelian_integral_with(Differential::Holomorphic, target, None, data)?;
    let value = w + data.r / 2.0;
    Ok(AbelValue { value, reduced: data.lattice_reduce(value) })
}

/// Abel map at P∞^± (sheet +1 or −1).
pub fn abel_map_infinity(sheet: i8, data: &SpectralData) -> AbelValue {
    let value = if sheet > 0 { data.r } else { Complex64::new(0.0, 0.0) };
    AbelValue { value, reduced: data.lattice_reduce(value) }
}

fn z_poly_eval(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * z + c)
}

fn poly_square_minus(n: &[Complex64], s2: &[Complex64; 5]) -> Vec<Complex64> {
    let mut out = vec![Complex64::new(0.0, 0.0); 5];
    for (i, a) in n.iter().enumerate() {
        for (j, b) in n.iter().enumerate() {
            if i + j < 5 {
                out[i + j] += a * b;
            }
        }
    }
    for k in 0..5 {
        out[k] -= s2[k];
    }
    out
}

/// E, H or c₊ extracted from the + sheet limit at P∞⁺ along the fixed tail route.
pub fn asymptotic_constant(kind: AsymptoticKind, method: AsymptoticMethod, data: &SpectralData) -> Result<Complex64> {
    let branch = &data.branch;
    let head = PathSpec::to_tail(branch, 1);
    let st = head.end();
    let diff = match kind {
        AsymptoticKind::E => Differential::Omega1,
        AsymptoticKind::H => Differential::Omega2,
        AsymptoticKind::CPlus => Differential::Omega3,
    };
    let f = |lam: Complex64, m: Complex64| data.integrand(diff, lam, m);
    let (at_start, _) = integrate_polyline(branch, &f, &head.waypoints)?;
    let finish = |omega: Complex64, lam: Complex64| match kind {
        AsymptoticKind::E => -(omega - lam) * 2.0,
        AsymptoticKind::H => omega * 2.0,
        AsymptoticKind::CPlus => omega - lam.ln(),
    };
    let truncated = |radius: f64| -> Result<Complex64> {
        let lam_r = st * (radius / st.norm());
        let (ext, _) = integrate_segment(branch, &f, st, lam_r)?;
        Ok(finish(at_start + ext, lam_r))
    };
    match method {
        AsymptoticMethod::Radius(r) => truncated(r),
        AsymptoticMethod::Richardson { r1, r2 } => {
            let (v1, v2) = (truncated(r1)?, truncated(r2)?);
            Ok((v2 * r2 - v1 * r1) / (r2 - r1))
        }
        AsymptoticMethod::TailSubstitution => {
            let s2 = branch.reversed_quartic();
            let one = Complex64::new(1.0, 0.0);
            let tail = match kind {
                AsymptoticKind::E => {
                    let n1 = [one, Complex64::new(-data.c / 2.0, 0.0), Complex64::new(-data.c1, 0.0)];
                    let mut q = poly_square_minus(&n1, &s2);
                    q[0] = Complex64::new(0.0, 0.0);
                    q[1] = Complex64::new(0.0, 0.0);
                    let qz: Vec<Complex64> = q[2..].to_vec();
                    let g = move |z: Complex64, s: Complex64| {
                        let n = z_poly_eval(&n1, z);
                        -z_poly_eval(&qz, z) / (s * (n + s))
                    };
                    integrate_tail(branch, &g, st)?.0
                }
                AsymptoticKind::H => {
                    let g = |z: Complex64, s: Complex64| (z * z - z * (data.d / 2.0) - data.c2) * data.mu0 / s;
                    integrate_tail(branch, &g, st)?.0
                }
                AsymptoticKind::CPlus => {
                    let n3 = [one, -data.c3];
                    let mut q = poly_square_minus(&n3, &s2);
                    q[0] = Complex64::new(0.0, 0.0);
                    let qz: Vec<Complex64> = q[1..].to_vec();
                    let g = move |z: Complex64, s: Complex64| {
                        let n = z_poly_eval(&n3, z);
                        -z_poly_eval(&qz, z) / (s * (n + s))
                    };
                    integrate_tail(branch, &g, st)?.0
                }
            };
            Ok(match kind {
                AsymptoticKind::E => -(at_start - st + tail) * 2.0,
                AsymptoticKind::H => (at_start + tail) * 2.0,
                AsymptoticKind::CPlus => at_start - st.ln() + tail,
            })
        }
    }
}

/// Ω_ω(P∞⁺) along the tail route.
fn holomorphic_at_infinity(data: &SpectralData) -> Result<Complex64> {
    let head = PathSpec::to_tail(&data.branch, 1);
    let f = |lam: Complex64, m: Complex64| data.integrand(Differential::Holomorphic, lam, m);
    let (a, _) = integrate_polyline(&data.branch, &f, &head.waypoints)?;
    let g = |_z: Complex64, s: Complex64| -Complex64::new(data.omega_norm, 0.0) / s;
    let (b, _) = integrate_tail(&data.branch, &g, head.end())?;
    Ok(a + b)
}

/// The constant F in Ω₂ ∼ 1/λ − F/2 at P₀⁺, or None when λ = 0 lies too close to a cut.
fn f_constant(data: &SpectralData) -> Result<Option<f64>> {
    let branch = &data.branch;
    let geo = data.route;
    if branch.cuts().iter().any(|(a, _)| a.abs() < 10.0 * geo.cut_margin) {
        return Ok(None);
    }
    let s0 = sheet_at_origin(branch) as f64;
    let w0 = Complex64::new(0.0, geo.y_low);
    let f = |lam: Complex64, m: Complex64| data.integrand(Differential::Omega2, lam, m);
    let (head, _) = integrate_polyline(branch, &f, &[geo.base, geo.tail_start, w0])?;
    let p = branch.reversed_quartic();
    let mu0sq = data.mu0 * data.mu0;
    // μ² − μ₀²N², N = 1 − (d/2)λ − c₂λ², has vanishing constant and linear terms
    let quartic = [p[4], p[3], p[2], p[1], p[0]];
    let n = [1.0, -data.d / 2.0, -data.c2];
    let mut num = quartic.to_vec();
    for i in 0..3 {
        for j in 0..3 {
            if i + j < 5 {
                num[i + j] -= mu0sq * n[i] * n[j];
            }
        }
    }
    let qz: Vec<Complex64> = num[2..].to_vec();
    let reg = |lam: Complex64, m: Complex64| {
        let nl = Complex64::new(1.0, 0.0) - lam * (data.d / 2.0) - lam * lam * data.c2;
        z_poly_eval(&qz, lam) * s0 / (m * (m + nl * (s0 * data.mu0)))
    };
    let (tail, _) = integrate_segment(branch, &reg, w0, Complex64::new(0.0, 0.0))?;
    let minus_half_f = head * s0 + tail * s0 - w0.inv();
    Ok(Some(-2.0 * minus_half_f.re))
}

/// Builds all genus-one spectral constants from the branch points.
pub fn genus1_spectral(branch: BranchData, divisor: Divisor) -> Result<SpectralData> {
    branch.validate()?;
    if divisor.epsilon > 1 {
        return Err(Error::Domain(format!("divisor epsilon must be 0 or 1, got {}", divisor.epsilon)));
    }
    if !divisor.y.is_finite() {
        return Err(Error::Domain("divisor y must be finite".into()));
    }
    let (l1, l2) = (branch.lambda1, branch.lambda2);
    let h = (l1 - l2) / (l1 - l2.conj());
    let p_prime = h.norm();
    if !(p_prime > 1e-10 && p_prime < 1.0 - 1e-10) {
        return Err(Error::ModulusDegenerate(p_prime));
    }
    let modulus = EllipticModulus::from_p_prime(p_prime)?;
    let p = modulus.p;
    let k = elliptic_k(p)?;
    let k_prime = elliptic_k(p_prime)?;
    let e = elliptic_e(p)?;
    let tau = -2.0 * PI * k_prime / k;
    let mu0 = branch.mu0();
    let dist = branch.distance();
    let c = 2.0 * (l1.re + l2.re);
    let d = 2.0 * (l1.inv().re + l2.inv().re);
    let c1 = 0.5 * (dist * dist * e / k - l1.norm_sqr() - l2.norm_sqr());
    let dist_inv = (l1.inv() - l2.conj().inv()).norm();
    let c2 = 0.5 * (dist_inv * dist_inv * e / k - l1.inv().norm_sqr() - l2.inv().norm_sqr());
    let beta2 = (l1 - l1.conj()) / (l1 - l2.conj());
    let c3 = l2 + (l1 - l2) * complete_pi(beta2.conj(), p)? / k;
    let u = PI * dist / k;
    let v = -PI * dist / (mu0 * k);
    let omega_norm = PI * dist / (2.0 * k);
    let route = RouteGeometry::new(&branch);
    let zero = Complex64::new(0.0, 0.0);
    let mut data = SpectralData {
        branch,
        divisor,
        h,
        modulus,
        k,
        k_prime,
        e,
        tau,
        mu0,
        c,
        d,
        c1,
        c2,
        c3,
        u,
        v,
        r: zero,
        e_const: 0.0,
        h_const: 0.0,
        f_const: None,
        log_beta: 0.0,
        c_plus: zero,
        q_sign: 1.0,
        k_minus: tau / 2.0,
        d_phase: Complex64::new(divisor.epsilon as f64 * tau / 2.0, divisor.y),
        omega_norm,
        base_point: CurvePoint::upper(l2.conj()),
        route,
        diagnostics: Diagnostics {
            e_imag: 0.0,
            h_imag: 0.0,
            c_plus_phase_residual: 0.0,
            c3_imag: c3.im,
            r_closed_form: zero,
            quadrature_error: 0.0,
        },
    };

    let e_c = asymptotic_constant(AsymptoticKind::E, AsymptoticMethod::TailSubstitution, &data)?;
    let h_c = asymptotic_constant(AsymptoticKind::H, AsymptoticMethod::TailSubstitution, &data)?;
    let c_plus = asymptotic_constant(AsymptoticKind::CPlus, AsymptoticMethod::TailSubstitution, &data)?;
    data.diagnostics.e_imag = e_c.im;
    data.diagnostics.h_imag = h_c.im;
    if e_c.im.abs() > REALITY_TOL {
        return Err(Error::RealityViolation { what: "E".into(), imag: e_c.im });
    }
    if h_c.im.abs() > REALITY_TOL {
        return Err(Error::RealityViolation { what: "H".into(), imag: h_c.im });
    }
    let phase_residual = c_plus.im.cos();
    data.diagnostics.c_plus_phase_residual = phase_residual;
    if phase_residual.abs() > REALITY_TOL {
        return Err(Error::RealityViolation { what: "exp(c+) (must be imaginary)".into(), imag: phase_residual });
    }
    data.e_const = e_c.re;
    data.h_const = h_c.re;
    data.c_plus = c_plus;
    data.log_beta = -2.0 * c_plus.re;
    data.q_sign = if c_plus.im.sin() > 0.0 { 1.0 } else { -1.0 };
    data.r = holomorphic_at_infinity(&data)? * 2.0;
    data.diagnostics.r_closed_form = r_closed_form(&data)?;
    data.f_const = f_constant(&data)?;
    Ok(data)
}

/// r ≡ −2πF(φ, p')/K(p) with sin²φ = 1/h̄.
pub fn r_closed_form(data: &SpectralData) -> Result<Complex64> {
    let sin_phi = data.h.sqrt() / data.h.norm();
    let phi = sin_phi.asin();
    let f = incomplete_f(&ComplexAmplitude::new(phi)?, data.modulus.p_prime)?;
    Ok(-f * (2.0 * PI) / data.k)
}

/// Periods of a differential over the a- and b-cycles.
pub fn cycle_periods(kind: Differential, data: &SpectralData) -> Result<(Complex64, Complex64)> {
    let f = |lam: Complex64, m: Complex64| data.integrand(kind, lam, m);
    let (a, _) = integrate_a_cycle(&data.branch, &f)?;
    let (b, _) = integrate_b_cycle(&data.branch, &f)?;
    Ok((a, b))
}
