//! Closure: critical points, phase quantization and one-parameter searches in s and t.
use num_complex::Complex64;
use plr::bafield::FieldContext;
use plr::closure::*;
use plr::spectral::Divisor;
use plr::verify::closure_residual;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn main() -> plr::Result<()> {
    let families = [
        (Kind::S, BranchFamily { lambda1: c(0.454, 0.324), lambda2: c(-0.454, 0.0), d_lambda1: c(0.0, 0.0), d_lambda2: c(0.0, 1.0), bracket: [0.07, 0.12], divisor: Divisor::default() }),
        (Kind::T, BranchFamily { lambda1: c(1.0, 0.0), lambda2: c(-1.0, 0.0), d_lambda1: c(0.0, 1.0), d_lambda2: c(0.0, 1.0), bracket: [0.7, 0.9], divisor: Divisor::default() }),
    ];
    for (kind, fam) in families {
        let res = search_phase(kind, &fam, 3, 0, 1e-12)?;
        let r = &res.report;
        println!("{kind:?}: parameter {:.12} after {} evaluations", res.theta, res.evaluations);
        println!("  Lambda0 {:.12}, period {:.9}, critical residual {:.1e}, phase distance {:.1e}, Jacobi deviation {:.1e}",
            r.lambda0, r.period, r.critical_residual, r.phase_distance, r.jacobi_deviation);
        let ctx = FieldContext::new(res.data.clone(), r.lambda0)?;
        println!("  max |gamma shifted by one period - gamma| = {:.2e}", closure_residual(&ctx, r, 32)?.max_residual);
    }
    Ok(())
}
