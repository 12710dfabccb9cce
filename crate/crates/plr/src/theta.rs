//! Riemann theta function θ(u) = Σ_n exp(½ nτnᵀ + nuᵀ) with period lattice 2πi·ℤ^g + τℤ^g.

use crate::error::{Error, Result};
use nalgebra::DMatrix;
use num_complex::Complex64;
use std::f64::consts::PI;

const MAX_RADIUS: usize = 10_000;
const MIN_EIGENVALUE: f64 = 1e-6;

/// Symmetric g×g period matrix with negative definite real part.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodMatrix {
    tau: DMatrix<Complex64>,
    sigma_min: f64,
}

impl PeriodMatrix {
    pub fn new(tau: DMatrix<Complex64>) -> Result<Self> {
        let g = tau.nrows();
        if g == 0 || tau.ncols() != g {
            return Err(Error::PeriodMatrix("period matrix must be square and non-empty".into()));
        }
        let scale = tau.iter().map(|z| z.norm()).fold(1.0, f64::max);
        for j in 0..g {
            for k in 0..j {
                if (tau[(j, k)] - tau[(k, j)]).norm() > 1e-12 * scale {
                    return Err(Error::PeriodMatrix(format!("not symmetric at ({j},{k})")));
                }
            }
        }
        if tau.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::PeriodMatrix("non-finite entry".into()));
        }
        let neg_re = DMatrix::from_fn(g, g, |j, k| -0.5 * (tau[(j, k)].re + tau[(k, j)].re));
        if neg_re.clone().cholesky().is_none() {
            return Err(Error::PeriodMatrix("real part is not negative definite".into()));
        }
        let lmin = neg_re.symmetric_eigenvalues().min();
        if lmin < MIN_EIGENVALUE {
            return Err(Error::PeriodMatrix(format!("min eigenvalue of −Re τ is {lmin:e}")));
        }
        Ok(Self { tau, sigma_min: lmin.sqrt() })
    }

    pub fn scalar(tau: Complex64) -> Result<Self> {
        Self::new(DMatrix::from_element(1, 1, tau))
    }

    pub fn genus(&self) -> usize {
        self.tau.nrows()
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        self.tau[(j, k)]
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.tau
    }

    /// √(smallest eigenvalue of −Re τ).
    pub fn sigma_min(&self) -> f64 {
        self.sigma_min
    }

    /// Im τ_jk = π (j ≠ k), Im τ_jj = 0, both mod 2π.
    pub fn has_real_structure(&self, tol: f64) -> bool {
        let g = self.genus();
        (0..g).all(|j| {
            (0..g).all(|k| {
                let target = if j == k { 0.0 } else { PI };
                let d = (self.tau[(j, k)].im - target).rem_euclid(2.0 * PI);
                d.min(2.0 * PI - d) < tol
            })
        })
    }
}

/// Per-axis truncation radius so that omitted terms are below 1e-37 relative to e^0.
pub fn truncation_radius(u: &[Complex64], tau: &PeriodMatrix) -> Result<usize> {
    let a = (2.0 * 37.0 * std::f64::consts::LN_10).sqrt();
    let re_norm = u.iter().map(|z| z.re * z.re).sum::<f64>().sqrt();
    let sigma = tau.sigma_min();
    let r = (a + 2.0 * re_norm / sigma) / sigma;
    if !r.is_finite() || r > MAX_RADIUS as f64 {
        return Err(Error::TruncationOverflow { n: if r.is_finite() { r as usize } else { usize::MAX } });
    }
    Ok(r.ceil() as usize)
}

fn check_dim(u: &[Complex64], tau: &PeriodMatrix) -> Result<()> {
    if u.len() != tau.genus() {
        return Err(Error::Domain(format!("argument has length {} for genus {}", u.len(), tau.genus())));
    }
    if u.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(Error::Domain("non-finite theta argument".into()));
    }
    Ok(())
}

/// Sums Σ w(n)·exp(½nτn + nu) over the truncation box, where `w` sees the lattice vector.
fn lattice_sum<W: Fn(&[i64]) -> Complex64>(u: &[Complex64], tau: &PeriodMatrix, weight: W) -> Result<Complex64> {
    check_dim(u, tau)?;
    let g = tau.genus();
    let n_max = truncation_radius(u, tau)? as i64;
    if g == 1 {
        let t = tau.get(0, 0);
        let mut sum = Complex64::new(0.0, 0.0);
        for n in -n_max..=n_max {
            let nf = n as f64;
            sum += weight(&[n]) * (t * (0.5 * nf * nf) + u[0] * nf).exp();
        }
        return Ok(sum);
    }
    let mut n = vec![-n_max; g];
    let mut sum = Complex64::new(0.0, 0.0);
    loop {
        let mut e = Complex64::new(0.0, 0.0);
        for j in 0..g {
            let nj = n[j] as f64;
            e += u[j] * nj;
            for k in 0..g {
                e += tau.get(j, k) * (0.5 * nj * n[k] as f64);
            }
        }
        sum += weight(&n) * e.exp();
        let mut axis = 0;
        loop {
            if axis == g {
                return Ok(sum);
            }
            n[axis] += 1;
            if n[axis] <= n_max {
                break;
            }
            n[axis] = -n_max;
            axis += 1;
        }
    }
}

/// θ(u) for the given period matrix.
pub fn theta(u: &[Complex64], tau: &PeriodMatrix) -> Result<Complex64> {
    lattice_sum(u, tau, |_| Complex64::new(1.0, 0.0))
}

/// Factor f with θ(u + τ_k) = f·θ(u), where τ_k is the k-th column of τ.
pub fn theta_shift_factor(u: &[Complex64], tau: &PeriodMatrix, k: usize) -> Complex64 {
    (-0.5 * tau.get(k, k) - u[k]).exp()
}

fn dot(n: &[i64], d: &[Complex64]) -> Complex64 {
    n.iter().zip(d).map(|(&a, &b)| b * a as f64).sum()
}

/// Directional derivative of order 1 or 2 along `direction`: Σ (n·d)^order exp(...).
pub fn theta_dderiv(u: &[Complex64], tau: &PeriodMatrix, direction: &[Complex64], order: u32) -> Result<Complex64> {
    if direction.len() != tau.genus() {
        return Err(Error::Domain("direction length does not match genus".into()));
    }
    match order {
        1 => lattice_sum(u, tau, |n| dot(n, direction)),
        2 => lattice_sum(u, tau, |n| dot(n, direction).powi(2)),
        _ => Err(Error::Domain(format!("derivative order {order} not supported"))),
    }
}

/// Mixed second derivative Σ (n·d1)(n·d2) exp(...).
pub fn theta_mixed(u: &[Complex64], tau: &PeriodMatrix, d1: &[Complex64], d2: &[Complex64]) -> Result<Complex64> {
    lattice_sum(u, tau, |n| dot(n, d1) * dot(n, d2))
}

/// Value and first two derivatives of a genus-one theta function.
#[derive(Debug, Clone, Copy)]
pub struct ThetaJet {
    pub value: Complex64,
    pub d1: Complex64,
    pub d2: Complex64,
    pub d3: Complex64,
}

/// Genus-one fast path: θ, θ', θ'', θ''' in a single pass.
pub fn theta1_jet(u: Complex64, tau: &PeriodMatrix) -> Result<ThetaJet> {
    if tau.genus() != 1 {
        return Err(Error::Domain("theta1_jet requires genus one".into()));
    }
    if !u.re.is_finite() || !u.im.is_finite() {
        return Err(Error::Domain("non-finite theta argument".into()));
    }
    let n_max = truncation_radius(&[u], tau)? as i64;
    let t = tau.get(0, 0);
    let mut jet = ThetaJet { value: 0.0.into(), d1: 0.0.into(), d2: 0.0.into(), d3: 0.0.into() };
    for n in -n_max..=n_max {
        let nf = n as f64;
        let e = (t * (0.5 * nf * nf) + u * nf).exp();
        jet.value += e;
        jet.d1 += e * nf;
        jet.d2 += e * (nf * nf);
        jet.d3 += e * (nf * nf * nf);
    }
    Ok(jet)
}

/// Genus-one fast path for θ(u).
pub fn theta1(u: Complex64, tau: &PeriodMatrix) -> Result<Complex64> {
    Ok(theta1_jet(u, tau)?.value)
}

/// Lattice-reduced representative of u with the integer shifts used:
/// u = reduced + 2πi·m + τ·k.
#[derive(Debug, Clone, PartialEq)]
pub struct Reduced {
    pub value: Vec<Complex64>,
    pub m: Vec<i64>,
    pub k: Vec<i64>,
}

/// Reduces u modulo Γ = 2πiℤ^g + τℤ^g. Intended for comparisons in tests and reports.
pub fn lattice_reduce(u: &[Complex64], tau: &PeriodMatrix) -> Reduced {
    let g = tau.genus();
    let re_tau = DMatrix::from_fn(g, g, |j, k| tau.get(j, k).re);
    let re_u = nalgebra::DVector::from_iterator(g, u.iter().map(|z| z.re));
    let k: Vec<i64> = match re_tau.lu().solve(&re_u) {
        Some(x) => x.iter().map(|v| v.round() as i64).collect(),
        None => vec![0; g],
    };
    let mut value: Vec<Complex64> = u.to_vec();
    for (j, vj) in value.iter_mut().enumerate() {
        for (l, kl) in k.iter().enumerate() {
            *vj -= tau.get(j, l) * *kl as f64;
        }
    }
    let m: Vec<i64> = value.iter().map(|z| (z.im / (2.0 * PI)).round() as i64).collect();
    for (vj, mj) in value.iter_mut().zip(&m) {
        vj.im -= 2.0 * PI * *mj as f64;
    }
    Reduced { value, m, k }
}

/// Distance from u to the nearest lattice point of Γ (genus one).
pub fn lattice_distance1(u: Complex64, tau: &PeriodMatrix) -> f64 {
    lattice_reduce(&[u], tau).value[0].norm()
}
