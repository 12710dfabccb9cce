//! Integration paths on the λ-plane avoiding the vertical cuts, and the quadrature engine
//! that integrates differentials along them.

use super::curve::{mu_plus, mu_plus_at_infinity, mu_plus_from_root, BranchData};
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadOptions};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Polyline from the base point; the sheet stays constant because the path never crosses a cut.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PathSpec {
    pub waypoints: Vec<Complex64>,
    pub initial_sheet: i8,
}

/// Geometry shared by every automatically generated path.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RouteGeometry {
    pub base: Complex64,
    pub y_low: f64,
    pub tail_start: Complex64,
    pub cut_margin: f64,
}

impl RouteGeometry {
    pub fn new(branch: &BranchData) -> Self {
        let [(a1, b1), (a2, b2)] = branch.cuts();
        let bmax = b1.max(b2);
        let y_low = -(1.5 * bmax + 0.25 * (a1 - a2).abs());
        Self {
            base: branch.lambda2.conj(),
            y_low,
            tail_start: Complex64::new(a2, y_low),
            cut_margin: 1e-3 * branch.min_cut_length(),
        }
    }
}

fn gap_abscissa(branch: &BranchData, x: f64) -> f64 {
    let [(a1, _), (a2, _)] = branch.cuts();
    let (xl, xr) = (a1.min(a2), a1.max(a2));
    let m = 0.25 * (xr - xl);
    if x < xl {
        x.min(xl - m)
    } else if x > xr {
        x.max(xr + m)
    } else if x - xl >= m && xr - x >= m {
        x
    } else {
        0.5 * (xl + xr)
    }
}

fn gap_width(branch: &BranchData) -> f64 {
    let [(a1, _), (a2, _)] = branch.cuts();
    (a1 - a2).abs()
}

fn origin_clearance(w: &[Complex64]) -> f64 {
    w.windows(2)
        .map(|s| {
            let d = s[1] - s[0];
            let l2 = d.norm_sqr();
            let u = if l2 == 0.0 { 0.0 } else { (-(s[0].conj() * d).re / l2).clamp(0.0, 1.0) };
            (s[0] + d * u).norm()
        })
        .fold(f64::INFINITY, f64::min)
}

fn push_distinct(v: &mut Vec<Complex64>, z: Complex64) {
    if v.last().map_or(true, |l| (*l - z).norm() > 0.0) {
        v.push(z);
    }
}

impl PathSpec {
    /// Default route from the base point λ̄₂: down below both cuts, across, then up a
    /// vertical lying inside the gap that contains the target, and finally horizontally.
    pub fn auto(branch: &BranchData, target: Complex64, sheet: i8) -> Self {
        let geo = RouteGeometry::new(branch);
        let w = vec![geo.base];
        if (target - geo.base).norm() == 0.0 {
            return Self { waypoints: w, initial_sheet: sheet };
        }
        let build = |xa: f64| {
            let mut v = w.clone();
            push_distinct(&mut v, geo.tail_start);
            push_distinct(&mut v, Complex64::new(xa, geo.y_low));
            push_distinct(&mut v, Complex64::new(xa, target.im));
            push_distinct(&mut v, target);
            v
        };
        let xa = gap_abscissa(branch, target.re);
        let first = build(xa);
        let need = 0.25 * target.norm().min(gap_width(branch));
        if origin_clearance(&first) >= need {
            return Self { waypoints: first, initial_sheet: sheet };
        }
        // keep the pole of the second-kind differential at λ = 0 off the route
        let [(a1, _), (a2, _)] = branch.cuts();
        let (xl, xr) = (a1.min(a2), a1.max(a2));
        let (lo, hi) = if target.re < xl {
            (xl - 2.0 * target.norm() - 1.0, xl)
        } else if target.re > xr {
            (xr, xr + 2.0 * target.norm() + 1.0)
        } else {
            (xl, xr)
        };
        let mut best = (origin_clearance(&first), first);
        for k in 1..8 {
            let x = lo + (hi - lo) * k as f64 / 8.0;
            if gap_abscissa(branch, x) != x {
                continue;
            }
            let cand = build(x);
            let c = origin_clearance(&cand);
            if c > best.0 {
                best = (c, cand);
            }
        }
        Self { waypoints: best.1, initial_sheet: sheet }
    }

    /// Route to the start of the tail towards infinity.
    pub fn to_tail(branch: &BranchData, sheet: i8) -> Self {
        let geo = RouteGeometry::new(branch);
        Self { waypoints: vec![geo.base, geo.tail_start], initial_sheet: sheet }
    }

    pub fn end(&self) -> Complex64 {
        *self.waypoints.last().expect("path has at least one waypoint")
    }

    /// Checks the cut margin and continuity of μ along every segment.
    pub fn validate(&self, branch: &BranchData, margin: f64) -> Result<()> {
        if self.initial_sheet != 1 && self.initial_sheet != -1 {
            return Err(Error::Domain("initial sheet must be ±1".into()));
        }
        if self.waypoints.is_empty() {
            return Err(Error::Domain("empty path".into()));
        }
        for seg in self.waypoints.windows(2) {
            check_segment(branch, seg[0], seg[1], margin)?;
        }
        Ok(())
    }
}

fn seg_point_distance(p: Complex64, a: Complex64, b: Complex64) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let t = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + d * t)).norm()
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn segments_intersect(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> bool {
    let d1 = cross(q2 - q1, p1 - q1);
    let d2 = cross(q2 - q1, p2 - q1);
    let d3 = cross(p2 - p1, q1 - p1);
    let d4 = cross(p2 - p1, q2 - p1);
    ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0)) && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
}

fn segment_distance(p1: Complex64, p2: Complex64, q1: Complex64, q2: Complex64) -> f64 {
    if segments_intersect(p1, p2, q1, q2) {
        return 0.0;
    }
    seg_point_distance(p1, q1, q2)
        .min(seg_point_distance(p2, q1, q2))
        .min(seg_point_distance(q1, p1, p2))
        .min(seg_point_distance(q2, p1, p2))
}

fn check_segment(branch: &BranchData, z0: Complex64, z1: Complex64, margin: f64) -> Result<()> {
    for (a, b) in branch.cuts() {
        let top = Complex64::new(a, b);
        let bottom = Complex64::new(a, -b);
        let touches_start = (z0 - top).norm() < 1e-14 || (z0 - bottom).norm() < 1e-14;
        let touches_end = (z1 - top).norm() < 1e-14 || (z1 - bottom).norm() < 1e-14;
        if touches_start || touches_end {
            // a segment emanating from a branch point must leave the cut transversally
            let (from, to) = if touches_start { (z0, z1) } else { (z1, z0) };
            let dir = to - from;
            let into_cut = if (from - top).norm() < 1e-14 { -1.0 } else { 1.0 };
            if dir.re.abs() < 1e-14 * dir.norm() && dir.im * into_cut > 0.0 {
                return Err(Error::PathThroughCut(format!("segment {z0} -> {z1} runs along the cut at x = {a}")));
            }
            let inner_from = from + dir * 1e-9;
            if segments_intersect(inner_from, to, top, bottom) {
                return Err(Error::PathThroughCut(format!("segment {z0} -> {z1} crosses the cut at x = {a}")));
            }
            continue;
        }
        let d = segment_distance(z0, z1, top, bottom);
        if d < margin {
            return Err(Error::PathThroughCut(format!(
                "segment {z0} -> {z1} passes within {d:e} of the cut at x = {a} (margin {margin:e})"
            )));
        }
    }
    check_continuity(branch, z0, z1)
}

fn check_continuity(branch: &BranchData, z0: Complex64, z1: Complex64) -> Result<()> {
    let (t0, t1) = (1e-6, 1.0 - 1e-6);
    let n = 64;
    let at = |t: f64| mu_plus(branch, z0 + (z1 - z0) * t);
    let mut stack: Vec<(f64, f64, Complex64, Complex64, u32)> = Vec::new();
    let mut prev_t = t0;
    let mut prev = at(t0);
    for i in 1..=n {
        let t = t0 + (t1 - t0) * i as f64 / n as f64;
        let m = at(t);
        stack.push((prev_t, t, prev, m, 0));
        prev_t = t;
        prev = m;
    }
    while let Some((ta, tb, ma, mb, depth)) = stack.pop() {
        if (mb - ma).norm() < 0.5 * ma.norm().max(mb.norm()) {
            continue;
        }
        if depth > 40 {
            return Err(Error::PathThroughCut(format!("mu jumps along segment {z0} -> {z1} near t = {ta}")));
        }
        let tm = 0.5 * (ta + tb);
        let mm = at(tm);
        stack.push((ta, tm, ma, mm, depth + 1));
        stack.push((tm, tb, mm, mb, depth + 1));
    }
    Ok(())
}

/// Quadrature tolerances for path integrals.
pub const PATH_QUAD: QuadOptions = QuadOptions { abs_tol: 1e-14, rel_tol: 1e-13, max_intervals: 4000 };

/// Integrand of a differential written as f(λ, μ₊(λ)) dλ on the + sheet.
pub type Integrand<'a> = &'a dyn Fn(Complex64, Complex64) -> Complex64;

/// ∫ f dλ along one straight segment, with √-substitution at branch-point endpoints.
pub fn integrate_segment(branch: &BranchData, f: Integrand, z0: Complex64, z1: Complex64) -> Result<(Complex64, f64)> {
    let delta = z1 - z0;
    if delta.norm() == 0.0 {
        return Ok((Complex64::new(0.0, 0.0), 0.0));
    }
    let root_near = |z: Complex64| branch.roots().into_iter().find(|r| (z - r).norm() < 1e-14);
    let eval = |lam: Complex64| f(lam, mu_plus(branch, lam));
    match (root_near(z0), root_near(z1)) {
        (Some(_), Some(_)) => {
            let mid = z0 + delta * 0.5;
            let (a, ea) = integrate_segment(branch, f, z0, mid)?;
            let (b, eb) = integrate_segment(branch, f, mid, z1)?;
            Ok((a + b, ea + eb))
        }
        (Some(r), None) => {
            let g = |u: f64| {
                let off = delta * (u * u);
                f(r + off, mu_plus_from_root(branch, r, off)) * delta * (2.0 * u)
            };
            let q = integrate(g, 0.0, 1.0, PATH_QUAD)?;
            Ok((q.value, q.error))
        }
        (None, Some(r)) => {
            let g = |u: f64| {
                let off = -delta * (u * u);
                f(r + off, mu_plus_from_root(branch, r, off)) * delta * (2.0 * u)
            };
            let q = integrate(g, 0.0, 1.0, PATH_QUAD)?;
            Ok((q.value, q.error))
        }
        (None, None) => {
            let r = integrate(|t| eval(z0 + delta * t) * delta, 0.0, 1.0, PATH_QUAD)?;
            Ok((r.value, r.error))
        }
    }
}

/// ∫ f dλ along a polyline on the + sheet.
pub fn integrate_polyline(branch: &BranchData, f: Integrand, waypoints: &[Complex64]) -> Result<(Complex64, f64)> {
    let mut total = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for seg in waypoints.windows(2) {
        let (v, e) = integrate_segment(branch, f, seg[0], seg[1])?;
        total += v;
        err += e;
    }
    Ok((total, err))
}

/// ∮ f dλ over the a-cycle: an ellipse around cut 1, counterclockwise when cut 1 is to the right of cut 2.
pub fn integrate_a_cycle(branch: &BranchData, f: Integrand) -> Result<(Complex64, f64)> {
    let [(a1, b1), (a2, _)] = branch.cuts();
    let rx = (0.3 * (a1 - a2).abs()).min(0.25 * b1 + 0.2);
    let ry = 1.25 * b1 + 0.05;
    let o = branch.orientation();
    let point = |th: f64| Complex64::new(a1 + rx * th.cos(), ry * th.sin());
    let r = integrate(
        |th| {
            let lam = point(th);
            let dl = Complex64::new(-rx * th.sin(), ry * th.cos());
            f(lam, mu_plus(branch, lam)) * dl * o
        },
        0.0,
        2.0 * PI,
        PATH_QUAD,
    )?;
    Ok((r.value, r.error))
}

/// ∮ f dλ over the b-cycle: twice the + sheet integral from the left top branch point to the right one.
pub fn integrate_b_cycle(branch: &BranchData, f: Integrand) -> Result<(Complex64, f64)> {
    let (left, right) = if branch.orientation() > 0.0 {
        (branch.lambda2, branch.lambda1)
    } else {
        (branch.lambda1, branch.lambda2)
    };
    let (v, e) = integrate_segment(branch, f, left, right)?;
    Ok((v * 2.0, e * 2.0))
}

/// ∫ g(ζ) dζ from ζ₀ = 1/λ_start straight to ζ = 0, where g sees (ζ, ζ²μ₊(1/ζ)).
pub fn integrate_tail(branch: &BranchData, g: Integrand, lambda_start: Complex64) -> Result<(Complex64, f64)> {
    let z0 = lambda_start.inv();
    let r = integrate(
        |u| {
            let z = z0 * (1.0 - u);
            g(z, mu_plus_at_infinity(branch, z)) * (-z0)
        },
        0.0,
        1.0,
        PATH_QUAD,
    )?;
    Ok((r.value, r.error))
}

/// Counterclockwise circle |λ| = radius.
pub fn integrate_circle(branch: &BranchData, f: Integrand, centre: Complex64, radius: f64) -> Result<(Complex64, f64)> {
    let r = integrate(
        |th| {
            let e = Complex64::from_polar(1.0, th);
            let lam = centre + e * radius;
            f(lam, mu_plus(branch, lam)) * Complex64::new(0.0, radius) * e
        },
        0.0,
        2.0 * PI,
        PATH_QUAD,
    )?;
    Ok((r.value, r.error))
}
