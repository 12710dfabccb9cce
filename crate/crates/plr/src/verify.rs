//! Residual oracles: Lax propagation, zero curvature, the PLR equation, curve geometry
//! and closure.

use crate::bafield::{lax_l, lax_m, FieldContext, GridSpec, Potential, QJet, SymMethod};
use crate::closure::{ClosureReport, Kind};
use crate::error::{Error, Result};
use nalgebra::{Matrix2, RowVector2, Vector5};
use num_complex::Complex64;
use ode_solvers::{Dop853, System};
use serde::{Deserialize, Serialize};
use std::cell::RefCell;
use std::rc::Rc;

/// Step of first-derivative stencils.
pub const FD_STEP: f64 = 1e-4;
/// Step of mixed and higher-order stencils.
pub const FD_STEP_MIXED: f64 = 1e-3;
/// Largest fraction of grid points that may be skipped at theta-divisor hits.
pub const SKIP_BUDGET: f64 = 0.05;

pub const TOL_LAX: f64 = 1e-6;
pub const TOL_ZERO_CURVATURE: f64 = 1e-5;
pub const TOL_PLR: f64 = 1e-5;
pub const TOL_ARCLENGTH: f64 = 1e-6;
pub const TOL_EVOLUTION: f64 = 1e-5;
pub const TOL_FRENET: f64 = 1e-3;
pub const TOL_SYM: f64 = 1e-6;
pub const TOL_CLOSURE: f64 = 1e-4;

const LAX_CHECKPOINTS: usize = 10;
/// Torsion is only compared where κ exceeds this.
const FRENET_MIN_KAPPA: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    S,
    T,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub name: String,
    pub grid: GridSpec,
    pub max_residual: f64,
    pub tolerance: f64,
    pub passed: bool,
    /// (s, t) of the largest residual.
    pub argmax: Option<[f64; 2]>,
    pub skipped: Vec<[f64; 2]>,
}

impl ResidualReport {
    fn new(name: &str, grid: GridSpec, tolerance: f64) -> Self {
        Self { name: name.into(), grid, max_residual: 0.0, tolerance, passed: true, argmax: None, skipped: Vec::new() }
    }

    fn record(&mut self, s: f64, t: f64, r: f64) {
        if !(r <= self.max_residual) {
            self.max_residual = r;
            self.argmax = Some([s, t]);
        }
    }

    fn finish(mut self) -> Result<Self> {
        let total = self.grid.len();
        let limit = (SKIP_BUDGET * total as f64).floor() as usize;
        if self.skipped.len() > limit {
            return Err(Error::SkipBudgetExceeded { skipped: self.skipped.len(), total });
        }
        self.passed = self.max_residual < self.tolerance;
        Ok(self)
    }

    /// Visits every grid point, skipping theta-divisor hits.
    fn scan<F: FnMut(f64, f64) -> Result<f64>>(mut self, mut f: F) -> Result<Self> {
        for (s, t) in self.grid.points() {
            match f(s, t) {
                Ok(r) => self.record(s, t, r),
                Err(Error::ThetaDivisorHit { .. }) => self.skipped.push([s, t]),
                Err(e) => return Err(e),
            }
        }
        self.finish()
    }
}

struct LaxSystem<'a> {
    ctx: &'a FieldContext,
    direction: Direction,
    fixed: f64,
    failure: Rc<RefCell<Option<Error>>>,
}

/// State (Re ψ₁, Im ψ₁, Re ψ₂, Im ψ₂, x); the independent variable rides along so the
/// system stays autonomous.
fn pack(v: RowVector2<Complex64>, x: f64) -> Vector5<f64> {
    Vector5::new(v[0].re, v[0].im, v[1].re, v[1].im, x)
}

fn unpack(y: &Vector5<f64>) -> RowVector2<Complex64> {
    RowVector2::new(Complex64::new(y[0], y[1]), Complex64::new(y[2], y[3]))
}

impl System<f64, Vector5<f64>> for LaxSystem<'_> {
    fn system(&self, _x: f64, y: &Vector5<f64>, dy: &mut Vector5<f64>) {
        let x = y[4];
        let (s, t) = match self.direction {
            Direction::S => (x, self.fixed),
            Direction::T => (self.fixed, x),
        };
        let lam = self.ctx.lambda0();
        let gen = self.ctx.q_potential(s, t).map(|j| match self.direction {
            Direction::S => lax_l(lam, j.q),
            Direction::T => lax_m(lam, &j),
        });
        match gen {
            Ok(g) => *dy = pack(unpack(y) * g, 1.0),
            Err(e) => {
                self.failure.borrow_mut().get_or_insert(e);
                *dy = Vector5::zeros();
            }
        }
    }
}

/// Integrates ∂ψ = ψL (s) or ∂ψ = ψM (t) from the theta values at the origin and compares
/// with the theta formula at 10 checkpoints.
pub fn lax_propagation_residual(ctx: &FieldContext, direction: Direction, span: f64) -> Result<ResidualReport> {
    let (s_range, t_range, steps) = match direction {
        Direction::S => ([0.0, span], [0.0, 0.0], [LAX_CHECKPOINTS + 1, 1]),
        Direction::T => ([0.0, 0.0], [0.0, span], [1, LAX_CHECKPOINTS + 1]),
    };
    let grid = GridSpec { s_range, t_range, s_steps: steps[0], t_steps: steps[1] };
    let name = match direction {
        Direction::S => "lax_propagation_s",
        Direction::T => "lax_propagation_t",
    };
    let mut rep = ResidualReport::new(name, grid, TOL_LAX);
    if span == 0.0 {
        rep.grid = GridSpec { s_range: [0.0, 0.0], t_range: [0.0, 0.0], s_steps: 1, t_steps: 1 };
        return rep.finish();
    }
    if !span.is_finite() {
        return Err(Error::Domain("span must be finite".into()));
    }
    let theta_row = |x: f64| -> Result<RowVector2<Complex64>> {
        let (s, t) = match direction {
            Direction::S => (x, 0.0),
            Direction::T => (0.0, x),
        };
        let (a, b) = ctx.psi_at(&ctx.p0, s, t)?;
        Ok(RowVector2::new(a, b))
    };
    let y0 = theta_row(0.0)?;
    let failure = Rc::new(RefCell::new(None));
    let sys = LaxSystem { ctx, direction, fixed: 0.0, failure: failure.clone() };
    let dx = span / LAX_CHECKPOINTS as f64;
    let mut solver = Dop853::new(sys, 0.0, span, dx, pack(y0, 0.0), 1e-12, 1e-12 * y0.norm());
    let outcome = solver.integrate();
    if let Some(e) = failure.borrow_mut().take() {
        return Err(e);
    }
    outcome.map_err(|e| Error::NonConvergent(format!("Lax propagation: {e:?}")))?;
    let xs = solver.x_out().clone();
    let ys = solver.y_out().clone();
    for k in 1..=LAX_CHECKPOINTS {
        let x = k as f64 * dx;
        let idx = xs
            .iter()
            .enumerate()
            .min_by(|a, b| (a.1 - x).abs().total_cmp(&(b.1 - x).abs()))
            .map(|(i, _)| i)
            .ok_or_else(|| Error::NonConvergent("no ODE output".into()))?;
        let exact = theta_row(xs[idx])?;
        let r = (unpack(&ys[idx]) - exact).norm() / exact.norm();
        let (s, t) = match direction {
            Direction::S => (xs[idx], 0.0),
            Direction::T => (0.0, xs[idx]),
        };
        rep.record(s, t, r);
    }
    rep.finish()
}

/// ‖L_t − M_s + [M, L]‖ over the grid, derivatives of L and M by central differences.
pub fn zero_curvature_residual<P: Potential>(pot: &P, lambda: f64, grid: &GridSpec) -> Result<ResidualReport> {
    grid.validate()?;
    let h = FD_STEP;
    ResidualReport::new("zero_curvature", *grid, TOL_ZERO_CURVATURE).scan(|s, t| {
        let c = pot.q_jet(s, t)?;
        let l_t = (lax_l(lambda, pot.q_jet(s, t + h)?.q) - lax_l(lambda, pot.q_jet(s, t - h)?.q)).unscale(2.0 * h);
        let m_s = (lax_m(lambda, &pot.q_jet(s + h, t)?) - lax_m(lambda, &pot.q_jet(s - h, t)?)).unscale(2.0 * h);
        let (l, m) = (lax_l(lambda, c.q), lax_m(lambda, &c));
        Ok((l_t - m_s + (m * l - l * m)).norm())
    })
}

/// |∂_s(q_st/q) + ½(|q|²)_t| over the grid.
pub fn plr_equation_residual<P: Potential>(pot: &P, grid: &GridSpec) -> Result<ResidualReport> {
    grid.validate()?;
    let h = FD_STEP;
    ResidualReport::new("plr_equation", *grid, TOL_PLR).scan(|s, t| {
        let a_s = (pot.q_jet(s + h, t)?.a - pot.q_jet(s - h, t)?.a) / (2.0 * h);
        let m_t = (pot.q_jet(s, t + h)?.q.norm_sqr() - pot.q_jet(s, t - h)?.q.norm_sqr()) / (2.0 * h);
        Ok((a_s + 0.5 * m_t).abs())
    })
}

type V3 = [f64; 3];

fn sub(a: V3, b: V3) -> V3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}
fn add(a: V3, b: V3) -> V3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}
fn scale(a: V3, k: f64) -> V3 {
    [a[0] * k, a[1] * k, a[2] * k]
}
fn norm(a: V3) -> f64 {
    (a[0] * a[0] + a[1] * a[1] + a[2] * a[2]).sqrt()
}
fn dot(a: V3, b: V3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}
fn cross(a: V3, b: V3) -> V3 {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Curvature and torsion of s ↦ γ(s, t) from five-point stencils.
pub fn discrete_frenet(ctx: &FieldContext, s: f64, t: f64) -> Result<(f64, f64)> {
    let h = FD_STEP_MIXED;
    let g = |k: f64| ctx.gamma_sym(s + k * h, t, SymMethod::Analytic);
    let (m2, m1, z, p1, p2) = (g(-2.0)?, g(-1.0)?, g(0.0)?, g(1.0)?, g(2.0)?);
    let d1 = scale(add(sub(scale(sub(p1, m1), 8.0), p2), m2), 1.0 / (12.0 * h));
    let d2 = scale(
        add(add(scale(add(p1, m1), 16.0), scale(z, -30.0)), scale(add(p2, m2), -1.0)),
        1.0 / (12.0 * h * h),
    );
    let d3 = scale(sub(sub(p2, m2), scale(sub(p1, m1), 2.0)), 1.0 / (2.0 * h * h * h));
    let b = cross(d1, d2);
    let speed = norm(d1);
    let kappa = norm(b) / speed.powi(3);
    let torsion = dot(b, d3) / dot(b, b);
    Ok((kappa, torsion))
}

/// Arclength, evolution law γ_st = Λ₀·γ_s×γ_t, and Frenet data.
pub fn geometry_residuals(ctx: &FieldContext, grid: &GridSpec) -> Result<Vec<ResidualReport>> {
    grid.validate()?;
    let lam = ctx.lambda0();
    let g = |s: f64, t: f64| ctx.gamma_sym(s, t, SymMethod::Analytic);
    let h = FD_STEP;
    let arclength = ResidualReport::new("arclength", *grid, TOL_ARCLENGTH).scan(|s, t| {
        let gs = scale(sub(g(s + h, t)?, g(s - h, t)?), 0.5 / h);
        Ok((norm(gs) - 1.0).abs())
    })?;
    let k = FD_STEP_MIXED;
    let evolution = ResidualReport::new("evolution_law", *grid, TOL_EVOLUTION).scan(|s, t| {
        let gs = scale(sub(g(s + h, t)?, g(s - h, t)?), 0.5 / h);
        let gt = scale(sub(g(s, t + h)?, g(s, t - h)?), 0.5 / h);
        let gst = scale(sub(sub(g(s + k, t + k)?, g(s + k, t - k)?), sub(g(s - k, t + k)?, g(s - k, t - k)?)), 0.25 / (k * k));
        Ok(norm(sub(gst, scale(cross(gs, gt), lam))))
    })?;
    let frenet = ResidualReport::new("frenet", *grid, TOL_FRENET).scan(|s, t| {
        let j = ctx.q_potential(s, t)?;
        let (kd, td) = discrete_frenet(ctx, s, t)?;
        let mut r = (kd - j.q.norm()).abs();
        if j.q.norm() > FRENET_MIN_KAPPA {
            let (_, tq) = crate::bafield::frenet(&j, lam, s, t)?;
            r = r.max((td - tq).abs());
        }
        Ok(r)
    })?;
    Ok(vec![arclength, evolution, frenet])
}

/// max ‖γ_analytic − γ_finite-difference‖ over the grid.
pub fn sym_agreement_residual(ctx: &FieldContext, grid: &GridSpec) -> Result<ResidualReport> {
    grid.validate()?;
    ResidualReport::new("sym_analytic_vs_fd", *grid, TOL_SYM).scan(|s, t| {
        let a = ctx.gamma_sym(s, t, SymMethod::Analytic)?;
        let f = ctx.gamma_sym(s, t, SymMethod::FiniteDifference)?;
        Ok(norm(sub(a, f)))
    })
}

/// max ‖γ(s+L,t) − γ(s,t)‖ (kind s, t ∈ {0, 0.05, 0.1}) or ‖γ(s,t+T) − γ(s,t)‖ (kind t,
/// s ∈ {0, 0.05, 0.1}) over `samples` equally spaced points of one period.
pub fn closure_residual(ctx: &FieldContext, report: &ClosureReport, samples: usize) -> Result<ResidualReport> {
    if samples == 0 {
        return Err(Error::Domain("at least one sample is required".into()));
    }
    let per = report.period;
    let others = [0.0, 0.05, 0.1];
    let step = per / samples as f64;
    let grid = match report.kind {
        Kind::S => GridSpec { s_range: [0.0, per - step], t_range: [0.0, 0.1], s_steps: samples, t_steps: 3 },
        Kind::T => GridSpec { s_range: [0.0, 0.1], t_range: [0.0, per - step], s_steps: 3, t_steps: samples },
    };
    let name = match report.kind {
        Kind::S => "closure_s",
        Kind::T => "closure_t",
    };
    let mut rep = ResidualReport::new(name, grid, TOL_CLOSURE);
    for &o in &others {
        for i in 0..samples {
            let x = i as f64 * step;
            let (a, b) = match report.kind {
                Kind::S => ((x, o), (x + per, o)),
                Kind::T => ((o, x), (o, x + per)),
            };
            let r = ctx
                .gamma_sym(a.0, a.1, SymMethod::Analytic)
                .and_then(|ga| Ok(norm(sub(ctx.gamma_sym(b.0, b.1, SymMethod::Analytic)?, ga))));
            match r {
                Ok(r) => rep.record(a.0, a.1, r),
                Err(Error::ThetaDivisorHit { .. }) => rep.skipped.push([a.0, a.1]),
                Err(e) => return Err(e),
            }
        }
    }
    rep.finish()
}

/// Spectral constants that negative controls detune.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Perturbation {
    E,
    H,
    U,
    V,
    Beta,
    Lambda0,
}

/// Copy of the context with one constant scaled by (1 + rel).
pub fn perturbed(ctx: &FieldContext, which: Perturbation, rel: f64) -> Result<FieldContext> {
    let mut data = ctx.data.clone();
    let f = 1.0 + rel;
    match which {
        Perturbation::E => data.e_const *= f,
        Perturbation::H => data.h_const *= f,
        Perturbation::U => data.u *= f,
        Perturbation::V => data.v *= f,
        Perturbation::Beta => data.log_beta += f.ln(),
        Perturbation::Lambda0 => return FieldContext::new(data, ctx.lambda0() * f),
    }
    FieldContext::new(data, ctx.lambda0())
}

/// Potentials with known closed forms, used to exercise the oracles.
pub mod synthetic {
    use super::*;

    /// q ≡ const, with vanishing derivatives.
    #[derive(Debug, Clone, Copy)]
    pub struct ConstantQ(pub Complex64);

    impl Potential for ConstantQ {
        fn q_jet(&self, _s: f64, _t: f64) -> Result<QJet> {
            let z = Complex64::new(0.0, 0.0);
            Ok(QJet { q: self.0, q_s: z, q_t: z, q_st: z, a: 0.0 })
        }
    }

    /// Real kink q = u_s with u = 4·atan(exp(a·s + t/a)), a sine-Gordon solution.
    #[derive(Debug, Clone, Copy)]
    pub struct SineGordonKink {
        pub a: f64,
    }

    impl Potential for SineGordonKink {
        fn q_jet(&self, s: f64, t: f64) -> Result<QJet> {
            let a = self.a;
            let z = a * s + t / a;
            let u = 4.0 * z.exp().atan();
            let sech = 1.0 / z.cosh();
            let q = 2.0 * a * sech;
            let q_s = -2.0 * a * a * sech * z.tanh();
            let c = |x: f64| Complex64::new(x, 0.0);
            Ok(QJet { q: c(q), q_s: c(q_s), q_t: c(u.sin()), q_st: c(u.cos() * q), a: u.cos() })
        }
    }

    /// Wraps a potential and reports a theta-divisor hit inside a disc.
    #[derive(Debug, Clone, Copy)]
    pub struct Punctured<P> {
        pub inner: P,
        pub centre: [f64; 2],
        pub radius: f64,
    }

    impl<P: Potential> Potential for Punctured<P> {
        fn q_jet(&self, s: f64, t: f64) -> Result<QJet> {
            let d = ((s - self.centre[0]).powi(2) + (t - self.centre[1]).powi(2)).sqrt();
            if d < self.radius {
                return Err(Error::ThetaDivisorHit { s, t, modulus: 0.0 });
            }
            self.inner.q_jet(s, t)
        }
    }
}

/// Sym formula γ as a 2×2 matrix for callers that need the su(2) form.
pub fn gamma_matrix(ctx: &FieldContext, s: f64, t: f64) -> Result<Matrix2<Complex64>> {
    Ok(crate::bafield::r3_to_su2(ctx.gamma_sym(s, t, SymMethod::Analytic)?))
}
