use num_complex::Complex64;
use plr::bafield::FieldContext;
use plr::closure::*;
use plr::error::Error;
use plr::spectral::*;
use plr::verify::{closure_residual, perturbed, Perturbation};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ex1() -> SpectralData {
    genus1_spectral(BranchData::new(c(0.454, 0.324), c(-0.454, 0.095)).unwrap(), Divisor::default()).unwrap()
}

fn ex2() -> SpectralData {
    genus1_spectral(BranchData::new(c(1.0, 0.813211), c(-1.0, 0.813211)).unwrap(), Divisor::default()).unwrap()
}

fn t_family() -> BranchFamily {
    BranchFamily { lambda1: c(1.0, 0.0), lambda2: c(-1.0, 0.0), d_lambda1: c(0.0, 1.0), d_lambda2: c(0.0, 1.0), bracket: [0.7, 0.9], divisor: Divisor::default() }
}

fn s_family() -> BranchFamily {
    BranchFamily { lambda1: c(0.454, 0.324), lambda2: c(-0.454, 0.0), d_lambda1: c(0.0, 0.0), d_lambda2: c(0.0, 1.0), bracket: [0.07, 0.12], divisor: Divisor::default() }
}

#[test]
fn critical_points_of_examples() {
    let d = ex1();
    let r = critical_lambda(Kind::S, &d).unwrap();
    assert!((r[0] - 0.45344307559165).abs() < 1e-10, "{r:?}");
    assert!(critical_polynomial(Kind::S, r[0], &d).abs() < 1e-12);
    let d = ex2();
    let r = critical_lambda(Kind::T, &d).unwrap();
    assert!(r.iter().any(|x| (x - 1.69717992020508).abs() < 1e-10), "{r:?}");
}

#[test]
fn phase_check_fields() {
    let d = ex2();
    let l0 = critical_lambda(Kind::T, &d).unwrap()[0];
    let per = quantized_period(Kind::T, 3, &d).unwrap();
    let rep = phase_check(Kind::T, l0, per, &d).unwrap();
    assert!(rep.critical_residual < TOL_CRIT);
    assert!((rep.jacobi_phase.norm() - 1.0).abs() < 1e-8);
    assert!(rep.jacobi_deviation < TOL_JACOBI);
    assert_eq!(rep.n_or_m, 3);
    assert_eq!(rep.passed, rep.critical_residual < rep.tol_crit && rep.phase_distance < rep.tol_phase);
}

#[test]
fn phase_check_rejects_bad_inputs() {
    let d = ex1();
    assert!(matches!(phase_check(Kind::S, -1.0, 1.0, &d), Err(Error::InvalidReconstructionPoint(_))));
    assert!(matches!(phase_check(Kind::S, 0.454, 1.0, &d), Err(Error::InvalidReconstructionPoint(_))));
    assert!(phase_check(Kind::S, 0.5, -1.0, &d).is_err());
}

#[test]
fn t_family_recovers_beta() {
    let r = search_phase(Kind::T, &t_family(), 3, 0, 1e-12).unwrap();
    assert!((r.theta - 0.813211).abs() < 5e-6, "{}", r.theta);
    assert!(r.report.passed);
    assert!(r.report.phase_distance < 1e-6);
    let ctx = FieldContext::new(r.data.clone(), r.report.lambda0).unwrap();
    let res = closure_residual(&ctx, &r.report, 40).unwrap();
    assert!(res.passed, "{res:?}");
    let off = perturbed(&ctx, Perturbation::Lambda0, 0.01).unwrap();
    let bad = closure_residual(&off, &r.report, 40).unwrap();
    assert!(bad.max_residual > 10.0 * bad.tolerance, "{bad:?}");
}

#[test]
fn t_family_lowest_level_unreachable() {
    assert!(matches!(search_phase(Kind::T, &t_family(), 1, 0, 1e-12), Err(Error::NoRootInBracket(_))));
}

#[test]
fn s_family_closes() {
    let r = search_phase(Kind::S, &s_family(), 3, 0, 1e-12).unwrap();
    assert!((r.theta - 0.09130259601181026).abs() < 1e-8, "{}", r.theta);
    assert!(r.report.passed);
    let ctx = FieldContext::new(r.data.clone(), r.report.lambda0).unwrap();
    let res = closure_residual(&ctx, &r.report, 40).unwrap();
    assert!(res.passed, "{res:?}");
    let off = perturbed(&ctx, Perturbation::Lambda0, 0.01).unwrap();
    assert!(closure_residual(&off, &r.report, 40).unwrap().max_residual > 1e-3);
}

#[test]
fn report_json_field_names() {
    let d = ex1();
    let l0 = critical_lambda(Kind::S, &d).unwrap()[0];
    let rep = phase_check(Kind::S, l0, quantized_period(Kind::S, 1, &d).unwrap(), &d).unwrap();
    let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
    assert_eq!(v["kind"], "s");
    assert!(v.get("Lambda0").is_some());
    let back: ClosureReport = serde_json::from_value(v).unwrap();
    assert_eq!(back, rep);
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, rng_seed: proptest::test_runner::RngSeed::Fixed(7), ..ProptestConfig::default() })]

    #[test]
    fn jacobi_form_matches_quadrature(
        a1 in 0.2f64..1.5, b1 in 0.1f64..1.2, a2 in -1.5f64..-0.2, b2 in 0.1f64..1.2,
        l0 in 0.1f64..2.5, n in 1u32..6, t in any::<bool>()
    ) {
        let Ok(d) = genus1_spectral(BranchData::new(c(a1, b1), c(a2, b2)).unwrap(), Divisor::default()) else { return Ok(()); };
        let kind = if t { Kind::T } else { Kind::S };
        prop_assume!((l0 - a1).abs() > 1e-3 && (l0 - a2).abs() > 1e-3);
        let per = quantized_period(kind, n, &d).unwrap();
        let rep = phase_check(kind, l0, per, &d).unwrap();
        prop_assert!(rep.jacobi_deviation < TOL_JACOBI);
        prop_assert!((rep.jacobi_phase.norm() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn critical_roots_solve_polynomial(a1 in 0.2f64..1.5, b1 in 0.1f64..1.2, a2 in -1.5f64..-0.2, b2 in 0.1f64..1.2, t in any::<bool>()) {
        let d = genus1_spectral(BranchData::new(c(a1, b1), c(a2, b2)).unwrap(), Divisor::default()).unwrap();
        let kind = if t { Kind::T } else { Kind::S };
        if let Ok(roots) = critical_lambda(kind, &d) {
            for r in roots {
                prop_assert!(r > 0.0);
                prop_assert!(critical_polynomial(kind, r, &d).abs() < 1e-9 * (1.0 + r * r + 1.0 / (r * r)));
            }
        }
    }
}
