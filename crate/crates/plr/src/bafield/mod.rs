//! Gauge-fixed Baker–Akhiezer function, the potential q, the SU(2) frame and the Sym curve.

mod grid;

pub use grid::{fmt_sig15, sample_curve, sample_q, CurveGrid, CurveSample, GridSpec, QGrid, QSample};

use crate::error::{Error, Result};
use crate::spectral::path::integrate_segment;
use crate::spectral::{abelian_integral_with, mu, CurvePoint, Differential, SpectralData};
use crate::theta::{theta1, theta1_jet, PeriodMatrix, ThetaJet};
use nalgebra::Matrix2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Threshold below which |θ(W + D)| counts as a hit of the theta divisor.
pub const THETA_DIVISOR_TOL: f64 = 1e-12;
/// Relative λ-step of the finite-difference Sym formula.
pub const SYM_FD_STEP: f64 = 1e-5;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// q with its first derivatives and the mixed derivative.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QJet {
    pub q: Complex64,
    pub q_s: Complex64,
    pub q_t: Complex64,
    pub q_st: Complex64,
    /// Re(q_st/q), continued through zeros of q.
    pub a: f64,
}

/// Re(q_st/q), or its limit Re(q_sst/q_s) where q vanishes.
pub fn plr_coefficient(q: Complex64, q_s: Complex64, q_st: Complex64, q_sst: Complex64) -> f64 {
    if q.norm() > 1e-6 * (1.0 + q_s.norm()) {
        (q_st / q).re
    } else {
        (q_sst / q_s).re
    }
}

/// Derivatives of N/D up to third order from the jets of N and D.
fn quotient_jet(n: &ThetaJet, d: &ThetaJet) -> [Complex64; 4] {
    let g0 = d.value.inv();
    let (d1, d2, d3) = (d.d1 * g0, d.d2 * g0, d.d3 * g0);
    let g = [
        g0,
        -g0 * d1,
        g0 * (2.0 * d1 * d1 - d2),
        g0 * (6.0 * d1 * d2 - d3 - 6.0 * d1 * d1 * d1),
    ];
    let nn = [n.value, n.d1, n.d2, n.d3];
    [
        nn[0] * g[0],
        nn[1] * g[0] + nn[0] * g[1],
        nn[2] * g[0] + 2.0 * nn[1] * g[1] + nn[0] * g[2],
        nn[3] * g[0] + 3.0 * nn[2] * g[1] + 3.0 * nn[1] * g[2] + nn[0] * g[3],
    ]
}

/// Anything that supplies a PLR potential with derivatives.
pub trait Potential {
    fn q_jet(&self, s: f64, t: f64) -> Result<QJet>;
}

/// Ω₁, Ω₂, Ω₃, A and their λ-derivatives at a point of the curve.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PointData {
    pub point: CurvePoint,
    pub omega: [Complex64; 3],
    pub abel: Complex64,
    pub d_omega: [Complex64; 3],
    pub d_abel: Complex64,
}

impl PointData {
    /// Integrals along the default route from the base point.
    pub fn at(data: &SpectralData, point: CurvePoint) -> Result<Self> {
        let mut omega = [Complex64::new(0.0, 0.0); 3];
        for (j, kind) in [Differential::Omega1, Differential::Omega2, Differential::Omega3].into_iter().enumerate() {
            omega[j] = abelian_integral_with(kind, &point, None, data)?.0;
        }
        let w = abelian_integral_with(Differential::Holomorphic, &point, None, data)?.0;
        Self::assemble(data, point, omega, w + data.r / 2.0)
    }

    fn assemble(data: &SpectralData, point: CurvePoint, omega: [Complex64; 3], abel: Complex64) -> Result<Self> {
        let m = mu(&data.branch, &point)?;
        let d = |k| data.integrand(k, point.lambda, m);
        Ok(Self {
            point,
            omega,
            abel,
            d_omega: [d(Differential::Omega1), d(Differential::Omega2), d(Differential::Omega3)],
            d_abel: d(Differential::Holomorphic),
        })
    }

    /// Same-sheet neighbour reached by a straight segment from `self`.
    pub fn shifted(&self, data: &SpectralData, lambda: Complex64) -> Result<Self> {
        let (a, b) = (self.point.lambda, lambda);
        for (x, _) in data.branch.cuts() {
            if a.im.abs() < 1e-300 && b.im.abs() < 1e-300 && (a.re - x) * (b.re - x) <= 0.0 {
                return Err(Error::SheetCrossing(x));
            }
        }
        let sign = self.point.sign();
        let mut omega = self.omega;
        for (j, kind) in [Differential::Omega1, Differential::Omega2, Differential::Omega3].into_iter().enumerate() {
            let f = |l: Complex64, m: Complex64| data.integrand(kind, l, m);
            omega[j] += integrate_segment(&data.branch, &f, a, b)?.0 * sign;
        }
        let f = |l: Complex64, m: Complex64| data.integrand(Differential::Holomorphic, l, m);
        let abel = self.abel + integrate_segment(&data.branch, &f, a, b)?.0 * sign;
        Self::assemble(data, CurvePoint { lambda, sheet: self.point.sheet }, omega, abel)
    }
}

/// Unitary frame Ψ = F/√ρ with F = [[ψ₁, ψ₂], [−ψ̄₂, ψ̄₁]].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrameValue {
    pub psi: Matrix2<Complex64>,
    pub psi1: Complex64,
    pub psi2: Complex64,
    pub rho: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SymMethod {
    Analytic,
    FiniteDifference,
}

/// Spectral data bound to a reconstruction point Λ₀ on the + sheet.
#[derive(Debug, Clone)]
pub struct FieldContext {
    pub data: SpectralData,
    pub theta_tau: PeriodMatrix,
    pub reconstruction_point: CurvePoint,
    pub p0: PointData,
    stencil: [PointData; 2],
    pub alpha: Complex64,
}

/// ψ₁ = pre₁·θ(A − φ − r)/θ(φ), ψ₂ = pre₂·θ(A − φ)/θ(φ), in unevaluated form.
struct PsiParts {
    log1: Complex64,
    log2: Complex64,
    num1: ThetaJet,
    num2: ThetaJet,
    den: Complex64,
}

impl FieldContext {
    pub fn new(data: SpectralData, lambda0: f64) -> Result<Self> {
        if !(lambda0.is_finite() && lambda0 > 0.0) {
            return Err(Error::InvalidReconstructionPoint(format!("Lambda0 = {lambda0} must be real and positive")));
        }
        let scale = 1.0 + lambda0;
        if data.branch.cuts().iter().any(|(a, _)| (lambda0 - a).abs() <= 1e-12 * scale) {
            return Err(Error::InvalidReconstructionPoint(format!("Lambda0 = {lambda0} is a branch-point abscissa")));
        }
        if data.divisor.epsilon != 0 {
            return Err(Error::NonUnitaryDivisor("epsilon = 1 places W + D off the real-structure slice".into()));
        }
        let theta_tau = data.period_matrix()?;
        let point = CurvePoint::upper(Complex64::new(lambda0, 0.0));
        let p0 = PointData::at(&data, point)?;
        let h = SYM_FD_STEP * lambda0;
        let stencil = [
            p0.shifted(&data, Complex64::new(lambda0 - h, 0.0))?,
            p0.shifted(&data, Complex64::new(lambda0 + h, 0.0))?,
        ];
        let dp = data.d_phase;
        let alpha = theta1(dp, &theta_tau)? / (data.beta().sqrt() * theta1(dp - data.r, &theta_tau)?);
        Ok(Self { data, theta_tau, reconstruction_point: point, p0, stencil, alpha })
    }

    pub fn lambda0(&self) -> f64 {
        self.reconstruction_point.lambda.re
    }

    pub fn with_alpha(mut self, alpha: Complex64) -> Self {
        self.alpha = alpha;
        self
    }

    /// W(s,t) + D.
    pub fn phase(&self, s: f64, t: f64) -> Complex64 {
        -I * 0.5 * (s * self.data.u + t * self.data.v) + self.data.d_phase
    }

    fn denominator(&self, s: f64, t: f64) -> Result<ThetaJet> {
        let jet = theta1_jet(self.phase(s, t), &self.theta_tau)?;
        let modulus = jet.value.norm();
        if modulus < THETA_DIVISOR_TOL {
            return Err(Error::ThetaDivisorHit { s, t, modulus });
        }
        Ok(jet)
    }

    fn parts(&self, pd: &PointData, s: f64, t: f64) -> Result<PsiParts> {
        let d = &self.data;
        let den = self.denominator(s, t)?.value;
        let phi = self.phase(s, t);
        let [o1, o2, o3] = pd.omega;
        let log1 = I * (s / 2.0) * (o1 + d.e_const / 2.0) + I * (t / 2.0) * (o2 - d.h_const / 2.0) + o3;
        let log2 = I * (s / 2.0) * (o1 - d.e_const / 2.0) + I * (t / 2.0) * (o2 + d.h_const / 2.0);
        Ok(PsiParts {
            log1,
            log2,
            num1: theta1_jet(pd.abel - phi - d.r, &self.theta_tau)?,
            num2: theta1_jet(pd.abel - phi, &self.theta_tau)?,
            den,
        })
    }

    /// (ψ₁, ψ₂) at a precomputed point.
    pub fn psi_at(&self, pd: &PointData, s: f64, t: f64) -> Result<(Complex64, Complex64)> {
        let p = self.parts(pd, s, t)?;
        Ok((-I * p.log1.exp() * p.num1.value / p.den, p.log2.exp() * p.num2.value / p.den))
    }

    /// ψ and ∂_λψ scaled by a common positive factor.
    fn psi_with_derivative(&self, pd: &PointData, s: f64, t: f64) -> Result<[Complex64; 4]> {
        let p = self.parts(pd, s, t)?;
        let shift = p.log1.re.max(p.log2.re);
        let e1 = (p.log1 - shift).exp() / p.den;
        let e2 = (p.log2 - shift).exp() / p.den;
        let [f1, f2, f3] = pd.d_omega;
        let common = I * (s / 2.0) * f1 + I * (t / 2.0) * f2;
        let psi1 = -I * e1 * p.num1.value;
        let psi2 = e2 * p.num2.value;
        let dpsi1 = psi1 * (common + f3) - I * e1 * pd.d_abel * p.num1.d1;
        let dpsi2 = psi2 * common + e2 * pd.d_abel * p.num2.d1;
        Ok([psi1, psi2, dpsi1, dpsi2])
    }

    /// ψ at an arbitrary curve point, integrated along the default route.
    pub fn psi(&self, point: &CurvePoint, s: f64, t: f64) -> Result<(Complex64, Complex64)> {
        self.psi_at(&PointData::at(&self.data, *point)?, s, t)
    }

    /// q and its derivatives from the theta quotient.
    pub fn q_potential(&self, s: f64, t: f64) -> Result<QJet> {
        let d = &self.data;
        let den = self.denominator(s, t)?;
        let num = theta1_jet(self.phase(s, t) - d.r, &self.theta_tau)?;
        let r = quotient_jet(&num, &den);
        let (ps, pt) = (-I * 0.5 * d.u, -I * 0.5 * d.v);
        let (a, b) = (-I * d.e_const / 2.0, I * d.h_const / 2.0);
        let pref = I * 2.0 * d.q_sign * d.beta().sqrt() * (a * s + b * t).exp();
        let q = pref * r[0];
        let q_s = pref * (a * r[0] + ps * r[1]);
        let q_t = pref * (b * r[0] + pt * r[1]);
        let q_st = pref * (a * b * r[0] + (a * pt + b * ps) * r[1] + ps * pt * r[2]);
        let q_sst = pref
            * (a * a * b * r[0]
                + (a * a * pt + 2.0 * a * b * ps) * r[1]
                + (2.0 * a * ps * pt + b * ps * ps) * r[2]
                + ps * ps * pt * r[3]);
        Ok(QJet { q, q_s, q_t, q_st, a: plr_coefficient(q, q_s, q_st, q_sst) })
    }

    fn frame_from(psi1: Complex64, psi2: Complex64) -> FrameValue {
        let rho = psi1.norm_sqr() + psi2.norm_sqr();
        let f = Matrix2::new(psi1, psi2, -psi2.conj(), psi1.conj());
        FrameValue { psi: f.unscale(rho.sqrt()), psi1, psi2, rho }
    }

    pub fn frame_at(&self, pd: &PointData, s: f64, t: f64) -> Result<FrameValue> {
        let (a, b) = self.psi_at(pd, s, t)?;
        Ok(Self::frame_from(a, b))
    }

    /// Frame at the curve point over λ (on its sheet).
    pub fn frame(&self, s: f64, t: f64, point: &CurvePoint) -> Result<FrameValue> {
        if *point == self.reconstruction_point {
            return self.frame_at(&self.p0, s, t);
        }
        self.frame_at(&PointData::at(&self.data, *point)?, s, t)
    }

    /// Sym curve γ(s,t) in ℝ³.
    pub fn gamma_sym(&self, s: f64, t: f64, method: SymMethod) -> Result<[f64; 3]> {
        match method {
            SymMethod::Analytic => {
                let [p1, p2, d1, d2] = self.psi_with_derivative(&self.p0, s, t)?;
                let rho = p1.norm_sqr() + p2.norm_sqr();
                let g11 = (d1 * p1.conj() + d2 * p2.conj()).im / rho;
                let g21 = (d1 * p2 - d2 * p1).conj() / rho;
                Ok([2.0 * g21.re, -2.0 * g21.im, 2.0 * g11])
            }
            SymMethod::FiniteDifference => {
                let h = self.stencil[1].point.lambda.re - self.p0.point.lambda.re;
                let lo = self.frame_at(&self.stencil[0], s, t)?.psi;
                let hi = self.frame_at(&self.stencil[1], s, t)?.psi;
                let mid = self.frame_at(&self.p0, s, t)?.psi;
                let g = (hi - lo).unscale(2.0 * h) * mid.adjoint();
                Ok(su2_to_r3(&g))
            }
        }
    }

    /// κ = |q| and torsion Λ₀ + Im(q_s/q) of the curve reconstructed at Λ₀.
    pub fn frenet_from_q(&self, s: f64, t: f64) -> Result<(f64, f64)> {
        let j = self.q_potential(s, t)?;
        frenet(&j, self.lambda0(), s, t)
    }
}

impl Potential for FieldContext {
    fn q_jet(&self, s: f64, t: f64) -> Result<QJet> {
        self.q_potential(s, t)
    }
}

/// κ and torsion from a q-jet for a curve reconstructed at Λ₀.
pub fn frenet(j: &QJet, lambda0: f64, s: f64, t: f64) -> Result<(f64, f64)> {
    let kappa = j.q.norm();
    if kappa < 1e-12 {
        return Err(Error::VanishingCurvature { s, t });
    }
    Ok((kappa, lambda0 + (j.q_s / j.q).im))
}

/// (p, q, r) of ½[[ir, −p−iq], [p−iq, −ir]].
pub fn su2_to_r3(g: &Matrix2<Complex64>) -> [f64; 3] {
    let g21 = (g[(1, 0)] - g[(0, 1)].conj()) / 2.0;
    let g11 = (g[(0, 0)] - g[(1, 1)]) / 2.0;
    [2.0 * g21.re, -2.0 * g21.im, 2.0 * g11.im]
}

pub fn r3_to_su2(v: [f64; 3]) -> Matrix2<Complex64> {
    let [p, q, r] = v;
    Matrix2::new(
        Complex64::new(0.0, r / 2.0),
        Complex64::new(-p / 2.0, -q / 2.0),
        Complex64::new(p / 2.0, -q / 2.0),
        Complex64::new(0.0, -r / 2.0),
    )
}

/// L = ½[[iλ, q], [−q̄, −iλ]].
pub fn lax_l(lambda: f64, q: Complex64) -> Matrix2<Complex64> {
    Matrix2::new(I * lambda, q, -q.conj(), -I * lambda).scale(0.5)
}

/// M = (i/2λ)[[−a, −q_t], [−q̄_t, a]] with a = Re(q_st/q).
pub fn lax_m(lambda: f64, j: &QJet) -> Matrix2<Complex64> {
    let a = Complex64::new(j.a, 0.0);
    Matrix2::new(-a, -j.q_t, -j.q_t.conj(), a) * (I / (2.0 * lambda))
}
