use num_complex::Complex64;
use plr::bafield::*;
use plr::error::Error;
use plr::spectral::*;
use plr::verify::synthetic::{ConstantQ, Punctured, SineGordonKink};
use plr::verify::*;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ex1(lambda0: f64) -> FieldContext {
    let d = genus1_spectral(BranchData::new(c(0.454, 0.324), c(-0.454, 0.095)).unwrap(), Divisor::default()).unwrap();
    FieldContext::new(d, lambda0).unwrap()
}

fn ex2(lambda0: f64) -> FieldContext {
    let d = genus1_spectral(BranchData::new(c(1.0, 0.813211), c(-1.0, 0.813211)).unwrap(), Divisor::default()).unwrap();
    FieldContext::new(d, lambda0).unwrap()
}

fn grid20() -> GridSpec {
    GridSpec::new([-1.0, 1.0], [-1.0, 1.0], 20, 20).unwrap()
}

#[test]
fn lax_propagation_ex1_s() {
    let r = lax_propagation_residual(&ex1(0.45344307559165), Direction::S, 1.0).unwrap();
    assert!(r.passed, "{r:?}");
    assert!(r.max_residual < 1e-6);
}

#[test]
fn lax_propagation_ex2_t() {
    let r = lax_propagation_residual(&ex2(1.69717992020508), Direction::T, 1.0).unwrap();
    assert!(r.passed, "{r:?}");
}

#[test]
fn lax_propagation_zero_span() {
    let r = lax_propagation_residual(&ex1(1.0), Direction::S, 0.0).unwrap();
    assert_eq!(r.max_residual, 0.0);
    assert!(r.passed);
}

#[test]
fn zero_curvature_and_plr_on_theta_potentials() {
    for x in [ex1(0.7), ex2(1.3)] {
        let z = zero_curvature_residual(&x, x.lambda0(), &grid20()).unwrap();
        assert!(z.passed, "{z:?}");
        let p = plr_equation_residual(&x, &grid20()).unwrap();
        assert!(p.passed, "{p:?}");
    }
}

#[test]
fn synthetic_potentials() {
    let g = grid20();
    let k = SineGordonKink { a: 0.8 };
    assert!(zero_curvature_residual(&k, 0.6, &g).unwrap().passed);
    assert!(plr_equation_residual(&k, &g).unwrap().passed);
    let q = ConstantQ(c(0.3, -0.2));
    let z = zero_curvature_residual(&q, 1.0, &g).unwrap();
    assert_eq!(z.max_residual, 0.0);
}

#[test]
fn skip_budget() {
    let g = grid20();
    let small = Punctured { inner: SineGordonKink { a: 0.8 }, centre: [0.0, 0.0], radius: 0.12 };
    let r = plr_equation_residual(&small, &g).unwrap();
    assert!(!r.skipped.is_empty() && r.skipped.len() <= 20);
    let big = Punctured { inner: SineGordonKink { a: 0.8 }, centre: [0.0, 0.0], radius: 0.6 };
    assert!(matches!(plr_equation_residual(&big, &g), Err(Error::SkipBudgetExceeded { .. })));
}

#[test]
fn geometry_on_grids() {
    let g = GridSpec::new([-1.0, 1.0], [-0.5, 0.5], 9, 5).unwrap();
    for x in [ex1(0.45344307559165), ex2(1.69717992020508), ex1(1.0)] {
        for r in geometry_residuals(&x, &g).unwrap() {
            assert!(r.passed, "{r:?}");
        }
        assert!(sym_agreement_residual(&x, &g).unwrap().passed);
    }
}

#[test]
fn negative_controls() {
    let x = ex1(0.7);
    let g = GridSpec::new([-1.0, 1.0], [-1.0, 1.0], 6, 6).unwrap();
    let p = perturbed(&x, Perturbation::U, 0.01).unwrap();
    let z = zero_curvature_residual(&p, p.lambda0(), &g).unwrap();
    assert!(z.max_residual > 10.0 * z.tolerance, "{z:?}");
    let e = plr_equation_residual(&p, &g).unwrap();
    assert!(e.max_residual > 10.0 * e.tolerance, "{e:?}");
    let pe = perturbed(&x, Perturbation::E, 0.01).unwrap();
    let l = lax_propagation_residual(&pe, Direction::S, 1.0).unwrap();
    assert!(l.max_residual > 10.0 * l.tolerance, "{l:?}");
}

#[test]
fn report_serializes() {
    let r = plr_equation_residual(&SineGordonKink { a: 1.0 }, &grid20()).unwrap();
    let s = serde_json::to_string(&r).unwrap();
    let back: ResidualReport = serde_json::from_str(&s).unwrap();
    assert_eq!(back, r);
}
