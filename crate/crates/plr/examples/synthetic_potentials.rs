//! The residual oracles on closed-form potentials: the sine-Gordon kink and a punctured grid.
use num_complex::Complex64;
use plr::bafield::GridSpec;
use plr::verify::synthetic::{ConstantQ, Punctured, SineGordonKink};
use plr::verify::*;

fn main() -> plr::Result<()> {
    let g = GridSpec::new([-2.0, 2.0], [-2.0, 2.0], 20, 20)?;
    let kink = SineGordonKink { a: 0.8 };
    println!("kink zero curvature {:.2e}", zero_curvature_residual(&kink, 0.6, &g)?.max_residual);
    println!("kink PLR equation   {:.2e}", plr_equation_residual(&kink, &g)?.max_residual);
    println!("constant q zero curvature {:.2e}", zero_curvature_residual(&ConstantQ(Complex64::new(0.3, 0.1)), 1.0, &g)?.max_residual);
    let holed = Punctured { inner: kink, centre: [0.0, 0.0], radius: 0.2 };
    let r = plr_equation_residual(&holed, &g)?;
    println!("punctured: {} of {} points skipped, residual {:.2e}", r.skipped.len(), g.len(), r.max_residual);
    let wide = Punctured { inner: kink, centre: [0.0, 0.0], radius: 1.0 };
    println!("wide puncture: {}", plr_equation_residual(&wide, &g).unwrap_err());
    Ok(())
}
