//! The PLR potential q(s, t) from the theta formula, with derivatives and a CSV sample.
use num_complex::Complex64;
use plr::bafield::*;
use plr::closure::{critical_lambda, Kind};
use plr::spectral::*;

fn main() -> plr::Result<()> {
    let d = genus1_spectral(BranchData::new(Complex64::new(1.0, 0.813211), Complex64::new(-1.0, 0.813211))?, Divisor::default())?;
    let l0 = critical_lambda(Kind::T, &d)?[0];
    let ctx = FieldContext::new(d, l0)?;
    for (s, t) in [(0.0, 0.0), (0.5, 0.0), (1.0, 0.3)] {
        let j = ctx.q_potential(s, t)?;
        println!("q({s}, {t}) = {:.12}, q_s = {:.6}, q_t = {:.6}, q_st = {:.6}, a = {:.6}", j.q, j.q_s, j.q_t, j.q_st, j.a);
    }
    let grid = GridSpec::new([-1.0, 1.0], [0.0, 0.5], 5, 2)?;
    print!("{}", sample_q(&ctx, &grid)?.to_csv());
    Ok(())
}
