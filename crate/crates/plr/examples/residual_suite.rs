//! Residual oracles on a theta context with a negative control.
use num_complex::Complex64;
use plr::bafield::{FieldContext, GridSpec};
use plr::spectral::*;
use plr::verify::*;

fn main() -> plr::Result<()> {
    let d = genus1_spectral(BranchData::new(Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095))?, Divisor::default())?;
    let ctx = FieldContext::new(d, 0.7)?;
    let g = GridSpec::new([-1.0, 1.0], [-1.0, 1.0], 10, 10)?;
    let mut reports = vec![
        lax_propagation_residual(&ctx, Direction::S, 1.0)?,
        lax_propagation_residual(&ctx, Direction::T, 1.0)?,
        zero_curvature_residual(&ctx, ctx.lambda0(), &g)?,
        plr_equation_residual(&ctx, &g)?,
        sym_agreement_residual(&ctx, &g)?,
    ];
    reports.extend(geometry_residuals(&ctx, &g)?);
    for r in &reports {
        println!("{:<20} {:.2e} (tol {:.0e}) {}", r.name, r.max_residual, r.tolerance, if r.passed { "pass" } else { "FAIL" });
    }
    let bad = perturbed(&ctx, Perturbation::U, 0.01)?;
    let r = plr_equation_residual(&bad, &g)?;
    println!("U detuned by 1%: plr_equation {:.2e} passed = {}", r.max_residual, r.passed);
    Ok(())
}
