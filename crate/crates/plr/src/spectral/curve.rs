//! The genus-one curve μ² = (λ−λ₁)(λ−λ̄₁)(λ−λ₂)(λ−λ̄₂) with vertical cuts [λ̄ⱼ, λⱼ].

use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

const BRANCH_POINT_TOL: f64 = 1e-12;

/// Branch points λ₁, λ₂ in the upper half-plane.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BranchData {
    pub lambda1: Complex64,
    pub lambda2: Complex64,
}

impl BranchData {
    pub fn new(lambda1: Complex64, lambda2: Complex64) -> Result<Self> {
        let b = Self { lambda1, lambda2 };
        b.validate()?;
        Ok(b)
    }

    pub fn validate(&self) -> Result<()> {
        let (l1, l2) = (self.lambda1, self.lambda2);
        for (name, l) in [("lambda1", l1), ("lambda2", l2)] {
            if !l.re.is_finite() || !l.im.is_finite() {
                return Err(Error::InvalidBranch(format!("{name} is not finite")));
            }
            if l.im <= 0.0 {
                return Err(Error::InvalidBranch(format!("{name} must lie in the upper half-plane (Im > 0)")));
            }
        }
        let scale = l1.norm().max(l2.norm());
        if (l1 - l2).norm() <= 1e-12 * scale {
            return Err(Error::InvalidBranch("lambda1 = lambda2".into()));
        }
        if (l1 - l2.conj()).norm() <= 1e-12 * scale || (l2 - l1.conj()).norm() <= 1e-12 * scale {
            return Err(Error::InvalidBranch("lambda_j = conj(lambda_k)".into()));
        }
        if (l1.re - l2.re).abs() <= 1e-9 * scale {
            return Err(Error::InvalidBranch("branch cuts share an abscissa (Re lambda1 = Re lambda2)".into()));
        }
        Ok(())
    }

    /// λ₁, λ̄₁, λ₂, λ̄₂.
    pub fn roots(&self) -> [Complex64; 4] {
        [self.lambda1, self.lambda1.conj(), self.lambda2, self.lambda2.conj()]
    }

    /// μ₀ = |λ₁||λ₂| = |μ(0)|.
    pub fn mu0(&self) -> f64 {
        self.lambda1.norm() * self.lambda2.norm()
    }

    pub fn distance(&self) -> f64 {
        (self.lambda1 - self.lambda2.conj()).norm()
    }

    /// Cut abscissae and half-lengths: [(a₁, b₁), (a₂, b₂)].
    pub fn cuts(&self) -> [(f64, f64); 2] {
        [(self.lambda1.re, self.lambda1.im), (self.lambda2.re, self.lambda2.im)]
    }

    /// +1 when cut 1 lies to the right of cut 2.
    pub fn orientation(&self) -> f64 {
        if self.lambda1.re > self.lambda2.re {
            1.0
        } else {
            -1.0
        }
    }

    pub fn min_cut_length(&self) -> f64 {
        2.0 * self.lambda1.im.min(self.lambda2.im)
    }

    /// Coefficients of μ² = Σ e_k λ^{4−k}, i.e. of ∏(1 − ρ z) in z = 1/λ.
    pub fn reversed_quartic(&self) -> [Complex64; 5] {
        let mut poly = [Complex64::new(0.0, 0.0); 5];
        poly[0] = Complex64::new(1.0, 0.0);
        for (deg, root) in self.roots().iter().enumerate() {
            for i in (1..=deg + 1).rev() {
                poly[i] = poly[i] - *root * poly[i - 1];
            }
        }
        poly
    }

    pub fn is_branch_point(&self, lambda: Complex64) -> bool {
        self.roots().iter().any(|r| (lambda - r).norm() < BRANCH_POINT_TOL * (1.0 + r.norm()))
    }
}

/// A point (λ, sheet) with μ = sheet·μ₊(λ), where μ₊ ~ +λ² at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub lambda: Complex64,
    pub sheet: i8,
}

impl CurvePoint {
    pub fn new(lambda: Complex64, sheet: i8) -> Result<Self> {
        if sheet != 1 && sheet != -1 {
            return Err(Error::Domain(format!("sheet must be ±1, got {sheet}")));
        }
        Ok(Self { lambda, sheet })
    }

    pub fn upper(lambda: Complex64) -> Self {
        Self { lambda, sheet: 1 }
    }

    pub fn sign(&self) -> f64 {
        self.sheet as f64
    }
}

/// Branch μ₊(λ) = ∏ⱼ (λ − aⱼ)·√(1 + bⱼ²/(λ − aⱼ)²), discontinuous exactly across the cuts.
pub fn mu_plus(branch: &BranchData, lambda: Complex64) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for (a, b) in branch.cuts() {
        let w = lambda - a;
        if w.norm() == 0.0 {
            // midpoint of a cut: take the limit from the right
            out *= Complex64::new(0.0, b);
            continue;
        }
        let ib = Complex64::new(0.0, b);
        out *= w * ((w - ib) * (w + ib) / (w * w)).sqrt();
    }
    out
}

/// μ₊(root + offset) for a branch point `root`, with the vanishing factor taken from
/// `offset` directly instead of by cancellation.
pub fn mu_plus_from_root(branch: &BranchData, root: Complex64, offset: Complex64) -> Complex64 {
    let lambda = root + offset;
    let mut out = Complex64::new(1.0, 0.0);
    for (a, b) in branch.cuts() {
        let w = lambda - a;
        let top = Complex64::new(a, b);
        let up = if root == top { offset } else { lambda - top };
        let down = if root == top.conj() { offset } else { lambda - top.conj() };
        out *= w * (up * down / (w * w)).sqrt();
    }
    out
}

/// μ at a curve point.
pub fn mu(branch: &BranchData, point: &CurvePoint) -> Result<Complex64> {
    if branch.is_branch_point(point.lambda) {
        return Err(Error::AtBranchPoint { re: point.lambda.re, im: point.lambda.im });
    }
    Ok(mu_plus(branch, point.lambda) * point.sign())
}

/// Sheet on which μ(0) = +μ₀.
pub fn sheet_at_origin(branch: &BranchData) -> i8 {
    let [(a1, _), (a2, _)] = branch.cuts();
    if a1 * a2 > 0.0 {
        1
    } else {
        -1
    }
}

/// ζ²·μ₊(1/ζ): the branch function in the local coordinate ζ = 1/λ, equal to 1 at ζ = 0.
pub fn mu_plus_at_infinity(branch: &BranchData, zeta: Complex64) -> Complex64 {
    let mut out = Complex64::new(1.0, 0.0);
    for (a, b) in branch.cuts() {
        let w = Complex64::new(1.0, 0.0) - zeta * a;
        let izb = zeta * Complex64::new(0.0, b);
        out *= w * ((w - izb) * (w + izb) / (w * w)).sqrt();
    }
    out
}

/// Shortest distance from λ to the cut segments.
pub fn distance_to_cuts(branch: &BranchData, lambda: Complex64) -> f64 {
    branch
        .cuts()
        .iter()
        .map(|&(a, b)| {
            let dy = (lambda.im.abs() - b).max(0.0);
            ((lambda.re - a).powi(2) + dy * dy).sqrt()
        })
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mu_squared_is_quartic() {
        let b = BranchData::new(Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095)).unwrap();
        for lam in [Complex64::new(0.3, 0.7), Complex64::new(-2.0, -0.1), Complex64::new(0.1, 0.0)] {
            let m = mu_plus(&b, lam);
            let q: Complex64 = b.roots().iter().map(|r| lam - r).product();
            assert!((m * m - q).norm() < 1e-12 * q.norm());
        }
    }

    #[test]
    fn origin_sheet() {
        let b = BranchData::new(Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095)).unwrap();
        let p0 = CurvePoint::new(Complex64::new(0.0, 0.0), sheet_at_origin(&b)).unwrap();
        assert!((mu(&b, &p0).unwrap() - b.mu0()).norm() < 1e-14);
    }

    #[test]
    fn reversed_quartic_matches_product() {
        let b = BranchData::new(Complex64::new(1.0, 0.8), Complex64::new(-0.3, 0.2)).unwrap();
        let z = Complex64::new(0.2, -0.1);
        let c = b.reversed_quartic();
        let poly: Complex64 = (0..5).map(|k| c[k] * z.powi(k as i32)).sum();
        let prod: Complex64 = b.roots().iter().map(|r| Complex64::new(1.0, 0.0) - r * z).product();
        assert!((poly - prod).norm() < 1e-14);
        let s = mu_plus_at_infinity(&b, z);
        assert!((s * s - prod).norm() < 1e-14);
    }
}
