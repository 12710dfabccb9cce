use super::{FieldContext, SymMethod};
use crate::error::{Error, Result};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

/// Uniform (s, t) grid; a count of 1 samples only the lower end.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub s_range: [f64; 2],
    pub t_range: [f64; 2],
    pub s_steps: usize,
    pub t_steps: usize,
}

impl GridSpec {
    pub fn new(s_range: [f64; 2], t_range: [f64; 2], s_steps: usize, t_steps: usize) -> Result<Self> {
        let g = Self { s_range, t_range, s_steps, t_steps };
        g.validate()?;
        Ok(g)
    }

    pub fn validate(&self) -> Result<()> {
        if self.s_steps == 0 || self.t_steps == 0 {
            return Err(Error::Config("grid step counts must be positive".into()));
        }
        if self.s_range.iter().chain(&self.t_range).any(|x| !x.is_finite()) {
            return Err(Error::Config("grid ranges must be finite".into()));
        }
        if (self.s_steps > 1 && self.s_range[1] <= self.s_range[0]) || (self.t_steps > 1 && self.t_range[1] <= self.t_range[0]) {
            return Err(Error::Config("grid ranges must be non-empty".into()));
        }
        Ok(())
    }

    fn axis(range: [f64; 2], n: usize) -> Vec<f64> {
        if n == 1 {
            return vec![range[0]];
        }
        (0..n).map(|i| range[0] + (range[1] - range[0]) * i as f64 / (n - 1) as f64).collect()
    }

    pub fn s_values(&self) -> Vec<f64> {
        Self::axis(self.s_range, self.s_steps)
    }

    pub fn t_values(&self) -> Vec<f64> {
        Self::axis(self.t_range, self.t_steps)
    }

    /// Points in row-major order (t outer, s inner).
    pub fn points(&self) -> Vec<(f64, f64)> {
        let s = self.s_values();
        self.t_values().into_iter().flat_map(|t| s.iter().map(move |&s| (s, t))).collect()
    }

    pub fn len(&self) -> usize {
        self.s_steps * self.t_steps
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub s: f64,
    pub t: f64,
    pub gamma: [f64; 3],
    pub q: Complex64,
    pub kappa: f64,
    /// None where q vanishes.
    pub torsion: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurveGrid {
    pub lambda0: f64,
    pub grid: GridSpec,
    pub samples: Vec<CurveSample>,
    /// Grid points dropped because they hit the theta divisor.
    pub skipped: Vec<[f64; 2]>,
    pub q_origin: Option<Complex64>,
    /// max |‖γ_s‖ − 1| over the samples (central differences, step 1e-4).
    pub arclength_max_deviation: f64,
}

/// Formats x with 15 significant digits in the shortest of fixed or exponent form.
pub fn fmt_sig15(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.14e}", x);
    let (mant, exp) = sci.split_once('e').unwrap_or((&sci, "0"));
    let exp: i32 = exp.parse().unwrap_or(0);
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let s = format!("{:.*}", decimals, x);
        trim_zeros(&s)
    } else {
        format!("{}e{}", trim_zeros(mant), exp)
    }
}

fn trim_zeros(s: &str) -> String {
    if !s.contains('.') {
        return s.into();
    }
    s.trim_end_matches('0').trim_end_matches('.').into()
}

impl CurveGrid {
    pub const CSV_HEADER: &'static str = "s,t,x,y,z,q_re,q_im,kappa,torsion";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for p in &self.samples {
            let row = [p.s, p.t, p.gamma[0], p.gamma[1], p.gamma[2], p.q.re, p.q.im, p.kappa];
            let mut cells: Vec<String> = row.iter().map(|&x| fmt_sig15(x)).collect();
            cells.push(p.torsion.map(fmt_sig15).unwrap_or_default());
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

fn arclength_deviation(ctx: &FieldContext, s: f64, t: f64) -> Result<f64> {
    let h = 1e-4;
    let a = ctx.gamma_sym(s + h, t, SymMethod::Analytic)?;
    let b = ctx.gamma_sym(s - h, t, SymMethod::Analytic)?;
    let n = (0..3).map(|k| ((a[k] - b[k]) / (2.0 * h)).powi(2)).sum::<f64>().sqrt();
    Ok((n - 1.0).abs())
}

/// Samples γ, q, κ and torsion over the grid, skipping theta-divisor hits.
pub fn sample_curve(ctx: &FieldContext, grid: &GridSpec, method: SymMethod) -> Result<CurveGrid> {
    grid.validate()?;
    let mut samples = Vec::with_capacity(grid.len());
    let mut skipped = Vec::new();
    let mut arc = 0.0f64;
    for (s, t) in grid.points() {
        let res = (|| -> Result<CurveSample> {
            let gamma = ctx.gamma_sym(s, t, method)?;
            let j = ctx.q_potential(s, t)?;
            let (kappa, torsion) = match super::frenet(&j, ctx.lambda0(), s, t) {
                Ok((k, tor)) => (k, Some(tor)),
                Err(Error::VanishingCurvature { .. }) => (j.q.norm(), None),
                Err(e) => return Err(e),
            };
            arc = arc.max(arclength_deviation(ctx, s, t)?);
            Ok(CurveSample { s, t, gamma, q: j.q, kappa, torsion })
        })();
        match res {
            Ok(x) => samples.push(x),
            Err(Error::ThetaDivisorHit { .. }) => skipped.push([s, t]),
            Err(e) => return Err(e),
        }
    }
    let q_origin = ctx.q_potential(0.0, 0.0).ok().map(|j| j.q);
    Ok(CurveGrid { lambda0: ctx.lambda0(), grid: *grid, samples, skipped, q_origin, arclength_max_deviation: arc })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QSample {
    pub s: f64,
    pub t: f64,
    pub q: Complex64,
    pub q_s: Complex64,
    pub q_t: Complex64,
    pub q_st: Complex64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QGrid {
    pub grid: GridSpec,
    pub samples: Vec<QSample>,
    pub skipped: Vec<[f64; 2]>,
}

impl QGrid {
    pub const CSV_HEADER: &'static str = "s,t,q_re,q_im,abs_q,q_s_re,q_s_im,q_t_re,q_t_im";

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::CSV_HEADER);
        out.push('\n');
        for p in &self.samples {
            let row = [p.s, p.t, p.q.re, p.q.im, p.q.norm(), p.q_s.re, p.q_s.im, p.q_t.re, p.q_t.im];
            let cells: Vec<String> = row.iter().map(|&x| fmt_sig15(x)).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }
}

pub fn sample_q(ctx: &FieldContext, grid: &GridSpec) -> Result<QGrid> {
    grid.validate()?;
    let mut samples = Vec::with_capacity(grid.len());
    let mut skipped = Vec::new();
    for (s, t) in grid.points() {
        match ctx.q_potential(s, t) {
            Ok(j) => samples.push(QSample { s, t, q: j.q, q_s: j.q_s, q_t: j.q_t, q_st: j.q_st }),
            Err(Error::ThetaDivisorHit { .. }) => skipped.push([s, t]),
            Err(e) => return Err(e),
        }
    }
    Ok(QGrid { grid: *grid, samples, skipped })
}
