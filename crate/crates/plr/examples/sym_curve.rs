//! Sym-formula curve at the critical reconstruction point, written as CSV.
use num_complex::Complex64;
use plr::bafield::*;
use plr::closure::{critical_lambda, Kind};
use plr::spectral::*;

fn main() -> plr::Result<()> {
    let d = genus1_spectral(BranchData::new(Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095))?, Divisor::default())?;
    let l0 = critical_lambda(Kind::S, &d)?[0];
    let ctx = FieldContext::new(d, l0)?;
    let a = ctx.gamma_sym(0.7, 0.1, SymMethod::Analytic)?;
    let f = ctx.gamma_sym(0.7, 0.1, SymMethod::FiniteDifference)?;
    println!("# gamma(0.7, 0.1) analytic {a:?}, finite difference {f:?}");
    let grid = sample_curve(&ctx, &GridSpec::new([-5.0, 5.0], [0.0, 0.0], 21, 1)?, SymMethod::Analytic)?;
    println!("# Lambda0 = {l0}, max arclength deviation {:.2e}", grid.arclength_max_deviation);
    print!("{}", grid.to_csv());
    Ok(())
}
