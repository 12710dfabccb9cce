//! Closure in s and periodicity in t: critical points of the quasimomenta, phase
//! quantization, the Jacobi-form cross-evaluation and one-parameter spectral search.

use crate::error::{Error, Result};
use crate::specfun::{incomplete_f, jacobi_sn_cn_dn, jacobi_zeta, ComplexAmplitude};
use crate::spectral::{abelian_integral_with, genus1_spectral, BranchData, CurvePoint, Differential, Divisor, SpectralData};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

pub const TOL_CRIT: f64 = 1e-9;
pub const TOL_PHASE: f64 = 1e-6;
/// Agreement required between the quadrature phase and the Jacobi form.
pub const TOL_JACOBI: f64 = 1e-6;
/// Disagreement beyond which the Jacobi form signals a branch error.
pub const JACOBI_MISMATCH: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    S,
    T,
}

impl Kind {
    fn differential(self) -> Differential {
        match self {
            Kind::S => Differential::Omega1,
            Kind::T => Differential::Omega2,
        }
    }

    /// U for s, −V for t: the rate whose quarter-multiple of 4π fixes the period.
    fn rate(self, data: &SpectralData) -> f64 {
        match self {
            Kind::S => data.u,
            Kind::T => -data.v,
        }
    }
}

impl std::str::FromStr for Kind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "s" => Ok(Kind::S),
            "t" => Ok(Kind::T),
            _ => Err(Error::Config(format!("kind must be 's' or 't', got '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClosureReport {
    pub kind: Kind,
    #[serde(rename = "Lambda0")]
    pub lambda0: f64,
    pub period: f64,
    pub n_or_m: i64,
    pub quasimomentum: f64,
    pub critical_residual: f64,
    pub phase_distance: f64,
    pub jacobi_phase: Complex64,
    /// |exp(i·period·Ω/2) − jacobi_phase|, up to complex conjugation.
    pub jacobi_deviation: f64,
    pub tol_crit: f64,
    pub tol_phase: f64,
    pub passed: bool,
}

/// Value of the critical-point quadratic at Λ₀.
pub fn critical_polynomial(kind: Kind, lambda0: f64, data: &SpectralData) -> f64 {
    match kind {
        Kind::S => lambda0 * lambda0 - 0.5 * data.c * lambda0 - data.c1,
        Kind::T => {
            let x = lambda0.recip();
            x * x - 0.5 * data.d * x - data.c2
        }
    }
}

fn is_branch_abscissa(x: f64, data: &SpectralData) -> bool {
    data.branch.cuts().iter().any(|(a, _)| (x - a).abs() <= 1e-12 * (1.0 + x.abs()))
}

/// Positive real zeros of dΩ₁ (s) or dΩ₂ (t) on the real axis, ascending.
pub fn critical_lambda(kind: Kind, data: &SpectralData) -> Result<Vec<f64>> {
    let (b, c) = match kind {
        Kind::S => (0.5 * data.c, data.c1),
        Kind::T => (0.5 * data.d, data.c2),
    };
    // z² − b z − c = 0 with z = Λ₀ or Λ₀⁻¹
    let disc = b * b + 4.0 * c;
    if disc < 0.0 {
        return Err(Error::NoRealRoot);
    }
    let sq = disc.sqrt();
    let sgn = if b >= 0.0 { 1.0 } else { -1.0 };
    let z1 = 0.5 * (b + sgn * sq);
    let z2 = if z1 != 0.0 { -c / z1 } else { 0.5 * (b - sq) };
    let mut roots: Vec<f64> = [z1, z2]
        .into_iter()
        .filter(|z| *z > 0.0 && z.is_finite())
        .map(|z| match kind {
            Kind::S => z,
            Kind::T => z.recip(),
        })
        .filter(|x| !is_branch_abscissa(*x, data))
        .collect();
    roots.sort_by(|a, b| a.total_cmp(b));
    roots.dedup();
    if roots.is_empty() {
        return Err(Error::NoPositiveRoot);
    }
    Ok(roots)
}

/// L_n = 4πn/U (s) or T_m = −4πm/V (t).
pub fn quantized_period(kind: Kind, n: u32, data: &SpectralData) -> Result<f64> {
    let rate = kind.rate(data);
    if !(rate > 0.0) {
        return Err(Error::Domain(format!("period rate must be positive, got {rate}")));
    }
    Ok(4.0 * PI * n as f64 / rate)
}

/// Ω₁ or Ω₂ at (Λ₀, +) by quadrature.
pub fn quasimomentum(kind: Kind, lambda0: f64, data: &SpectralData) -> Result<f64> {
    let p0 = CurvePoint::upper(Complex64::new(lambda0, 0.0));
    let (v, _) = abelian_integral_with(kind.differential(), &p0, None, data)?;
    if v.im.abs() > 1e-8 * (1.0 + v.re.abs()) {
        return Err(Error::RealityViolation { what: "quasimomentum on the real slice".into(), imag: v.im });
    }
    Ok(v.re)
}

/// exp(iπν + 2νK·J) with J the Jacobi-form combination and ν = period·rate/(4π).
pub fn jacobi_phase(kind: Kind, lambda0: f64, period: f64, data: &SpectralData) -> Result<Complex64> {
    let (l2, h) = (data.branch.lambda2, data.h);
    let (p, pp) = (data.modulus.p, data.modulus.p_prime);
    let lam = Complex64::new(lambda0, 0.0);
    let x = (lam - l2) / (lam - l2.conj()) / h;
    let sin_phi = (Complex64::new(1.0, 0.0) - x * (pp * pp)).sqrt() / p;
    let phi = ComplexAmplitude::new(sin_phi.asin())?;
    let u = incomplete_f(&phi, p)?;
    let (sn, cn, dn) = jacobi_sn_cn_dn(u, p)?;
    let one = Complex64::new(1.0, 0.0);
    let k2 = match kind {
        Kind::S => (p * p) / (one - h.conj()),
        Kind::T => (p * p) / (one - l2 / l2.conj() * h.conj()),
    };
    let j = jacobi_zeta(u, p)? - k2 * sn * cn * dn / (one - k2 * sn * sn);
    let nu = period * kind.rate(data) / (4.0 * PI);
    Ok((Complex64::new(0.0, PI * nu) + j * (2.0 * nu * data.k)).exp())
}

/// Critical-point residual, phase quantization and the Jacobi cross-check at (Λ₀, period).
pub fn phase_check(kind: Kind, lambda0: f64, period: f64, data: &SpectralData) -> Result<ClosureReport> {
    if !(lambda0.is_finite() && lambda0 > 0.0) {
        return Err(Error::InvalidReconstructionPoint(format!("Lambda0 = {lambda0} must be real and positive")));
    }
    if is_branch_abscissa(lambda0, data) {
        return Err(Error::InvalidReconstructionPoint(format!("Lambda0 = {lambda0} is a branch-point abscissa")));
    }
    if !(period.is_finite() && period > 0.0) {
        return Err(Error::Domain(format!("period must be positive, got {period}")));
    }
    let omega = quasimomentum(kind, lambda0, data)?;
    let phase = period * omega / (2.0 * PI);
    let phase_distance = (phase - phase.round()).abs();
    let critical_residual = critical_polynomial(kind, lambda0, data).abs();
    let jp = jacobi_phase(kind, lambda0, period, data)?;
    let direct = Complex64::new(0.0, period * omega / 2.0).exp();
    let jacobi_deviation = (direct - jp).norm().min((direct - jp.conj()).norm());
    if jacobi_deviation > JACOBI_MISMATCH {
        return Err(Error::JacobiFormMismatch(jacobi_deviation));
    }
    Ok(ClosureReport {
        kind,
        lambda0,
        period,
        n_or_m: (period * kind.rate(data) / (4.0 * PI)).round() as i64,
        quasimomentum: omega,
        critical_residual,
        phase_distance,
        jacobi_phase: jp,
        jacobi_deviation,
        tol_crit: TOL_CRIT,
        tol_phase: TOL_PHASE,
        passed: critical_residual < TOL_CRIT && phase_distance < TOL_PHASE,
    })
}

/// λⱼ(θ) = λⱼ + θ·dλⱼ over a bracket of θ.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchFamily {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
    pub d_lambda1: Complex64,
    pub d_lambda2: Complex64,
    pub bracket: [f64; 2],
    #[serde(default)]
    pub divisor: Divisor,
}

impl BranchFamily {
    pub fn branch(&self, theta: f64) -> Result<BranchData> {
        BranchData::new(self.lambda1 + self.d_lambda1 * theta, self.lambda2 + self.d_lambda2 * theta)
    }

    pub fn spectral(&self, theta: f64) -> Result<SpectralData> {
        genus1_spectral(self.branch(theta)?, self.divisor)
    }

    /// Checks branch-data validity at both ends and the midpoint.
    pub fn validate(&self) -> Result<()> {
        let [lo, hi] = self.bracket;
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::Config("family bracket must be finite and ordered".into()));
        }
        for th in [lo, 0.5 * (lo + hi), hi] {
            self.branch(th)?;
        }
        Ok(())
    }
}

/// Tuned member of a family.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchResult {
    pub theta: f64,
    pub report: ClosureReport,
    pub data: SpectralData,
    pub evaluations: usize,
}

struct Probe {
    data: SpectralData,
    lambda0: f64,
    period: f64,
    phase: f64,
}

fn probe(kind: Kind, family: &BranchFamily, n: u32, root: usize, theta: f64) -> Result<Probe> {
    let data = family.spectral(theta)?;
    let roots = match critical_lambda(kind, &data) {
        Ok(r) => r,
        Err(Error::NoRealRoot) | Err(Error::NoPositiveRoot) => return Err(Error::CriticalPointLost(theta)),
        Err(e) => return Err(e),
    };
    let lambda0 = *roots.get(root).ok_or(Error::CriticalPointLost(theta))?;
    let period = quantized_period(kind, n, &data)?;
    let phase = period * quasimomentum(kind, lambda0, &data)? / (2.0 * PI);
    Ok(Probe { data, lambda0, period, phase })
}

fn finish(kind: Kind, theta: f64, p: Probe, evaluations: usize) -> Result<SearchResult> {
    let report = phase_check(kind, p.lambda0, p.period, &p.data)?;
    Ok(SearchResult { theta, report, data: p.data, evaluations })
}

/// Tunes the family parameter until period·Ω(Λ₀)/(2π) is an integer, with Λ₀ the
/// `root`-th positive critical point re-solved at every step.
pub fn search_phase(kind: Kind, family: &BranchFamily, n: u32, root: usize, tol: f64) -> Result<SearchResult> {
    family.validate()?;
    let [mut lo, mut hi] = family.bracket;
    let mut evals = 0usize;
    let mut eval = |th: f64| {
        evals += 1;
        probe(kind, family, n, root, th)
    };
    let dist = |x: f64| (x - x.round()).abs();
    let mid = 0.5 * (lo + hi);
    let pm = eval(mid)?;
    if dist(pm.phase) < TOL_PHASE {
        return finish(kind, mid, pm, 1);
    }
    let plo = eval(lo)?;
    let phi = eval(hi)?;
    let (xmin, xmax) = (plo.phase.min(phi.phase), plo.phase.max(phi.phase));
    let level = xmin.ceil();
    if level <= xmax {
        let mut flo = plo.phase - level;
        let mut best = if flo.abs() < (phi.phase - level).abs() { (lo, plo) } else { (hi, phi) };
        while hi - lo > tol {
            let m = 0.5 * (lo + hi);
            let pm = eval(m)?;
            let fm = pm.phase - level;
            let done = fm == 0.0;
            if (fm < 0.0) == (flo < 0.0) {
                lo = m;
                flo = fm;
            } else {
                hi = m;
            }
            best = (m, pm);
            if done {
                break;
            }
        }
        let count = evals;
        return finish(kind, best.0, best.1, count);
    }
    // golden-section search on the distance to the nearest level
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let mut a = lo;
    let mut b = hi;
    let mut x1 = b - g * (b - a);
    let mut x2 = a + g * (b - a);
    let mut p1 = eval(x1)?;
    let mut p2 = eval(x2)?;
    while b - a > tol {
        if dist(p1.phase) < dist(p2.phase) {
            b = x2;
            x2 = x1;
            p2 = p1;
            x1 = b - g * (b - a);
            p1 = eval(x1)?;
        } else {
            a = x1;
            x1 = x2;
            p1 = p2;
            x2 = a + g * (b - a);
            p2 = eval(x2)?;
        }
    }
    let (x, p) = if dist(p1.phase) < dist(p2.phase) { (x1, p1) } else { (x2, p2) };
    let d = dist(p.phase);
    if d >= TOL_PHASE {
        return Err(Error::NoRootInBracket(d));
    }
    let count = evals;
    finish(kind, x, p, count)
}
