use num_complex::Complex64;
use plr::spectral::*;
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn ex1() -> SpectralData {
    genus1_spectral(BranchData::new(c(0.454, 0.324), c(-0.454, 0.095)).unwrap(), Divisor::default()).unwrap()
}

fn ex2() -> SpectralData {
    genus1_spectral(BranchData::new(c(1.0, 0.813211), c(-1.0, 0.813211)).unwrap(), Divisor::default()).unwrap()
}

fn close(a: f64, b: f64, tol: f64, what: &str) {
    assert!((a - b).abs() < tol, "{what}: {a} vs {b}");
}

/// a - b is a lattice vector 2πi·m + τ·n
fn close_mod_lattice(a: Complex64, b: Complex64, tau: f64, tol: f64, what: &str) {
    let d = a - b;
    let n = (d.re / tau).round();
    let e = d - n * tau;
    let m = (e.im / (2.0 * PI)).round();
    let e = e - c(0.0, 2.0 * PI * m);
    assert!(e.norm() < tol, "{what}: {a} vs {b} (residual {e})");
}

#[test]
fn example_one_constants() {
    let s = ex1();
    close(s.modulus.p_prime, 0.93642035321914, 1e-12, "p'");
    close(s.modulus.p, 0.35088021043790, 1e-12, "p");
    close(s.mu0, 0.454f64.hypot(0.324) * 0.454f64.hypot(0.095), 1e-15, "mu0");
    close(s.tau, -9.6046554012635, 1e-10, "tau");
    close(s.u, 1.9359224887386, 1e-10, "U");
    close(s.v, -7.4831069431552, 1e-10, "V");
    close(s.c1, 0.2056106228020147, 1e-12, "c1");
    close(s.c2, 3.072087085583762, 1e-11, "c2");
    close(s.c3.re, 0.50955811654508, 1e-10, "c3");
    close(s.c3.im, 0.0, 1e-10, "Im c3");
    close(s.e_const, -1.0191162330902, 1e-9, "E");
    close(s.h_const, -3.939287757687, 1e-9, "H");
    close(s.c_plus.re, 3.10553261440, 1e-9, "Re c+");
    close_mod_lattice(s.r, c(-6.08286968021, PI), s.tau, 1e-9, "r");
    close_mod_lattice(s.r, s.diagnostics.r_closed_form, s.tau, 1e-9, "r closed form");
    close(s.r.im, PI, 1e-9, "Im r");
}

#[test]
fn example_two_constants() {
    let s = ex2();
    close(s.modulus.p_prime, 0.775844, 1e-6, "p'");
    close(s.modulus.p, 0.630925, 1e-6, "p");
    close(s.u, 4.5595119515806, 1e-10, "U");
    close(s.v, -2.7445245645385, 1e-10, "V");
    close(s.tau, -6.9039475407677, 1e-10, "tau");
    close(s.e_const, -2.2797559757903, 1e-9, "E");
    close(s.h_const, -1.372262282269, 1e-9, "H");
    close(s.c1, 0.958179119764106, 1e-11, "c1");
    close(s.c2, 0.347171631414076, 1e-11, "c2");
    close(s.c3.re, 1.139877987895149, 1e-10, "c3");
    close(s.c_plus.re, 0.96637577785, 1e-9, "Re c+");
    close_mod_lattice(s.r, c(-3.45197377038, PI), s.tau, 1e-9, "r");
}

#[test]
fn normalization_of_periods() {
    for s in [ex1(), ex2()] {
        for kind in [Differential::Omega1, Differential::Omega2, Differential::Omega3] {
            let (a, _) = cycle_periods(kind, &s).unwrap();
            assert!(a.norm() < 1e-9, "{kind:?} a-period {a}");
        }
        let (a, b) = cycle_periods(Differential::Holomorphic, &s).unwrap();
        assert!((a - c(0.0, 2.0 * PI)).norm() < 1e-10, "omega a-period {a}");
        assert!((b - s.tau).norm() < 1e-9, "omega b-period {b} vs {}", s.tau);
        let (_, b1) = cycle_periods(Differential::Omega1, &s).unwrap();
        let (_, b2) = cycle_periods(Differential::Omega2, &s).unwrap();
        let (_, b3) = cycle_periods(Differential::Omega3, &s).unwrap();
        assert!((b1 - s.u).norm() < 1e-9, "U {b1} vs {}", s.u);
        assert!((b2 - s.v).norm() < 1e-9, "V {b2} vs {}", s.v);
        close_mod_lattice(-b3, s.r, s.tau, 1e-9, "-b-period of Omega3 vs r");
    }
}

#[test]
fn tail_substitution_agrees_with_extrapolation() {
    let s = ex1();
    let tail = asymptotic_constant(AsymptoticKind::E, AsymptoticMethod::TailSubstitution, &s).unwrap();
    let rich = asymptotic_constant(AsymptoticKind::E, AsymptoticMethod::Richardson { r1: 1e3, r2: 1e4 }, &s).unwrap();
    let far = asymptotic_constant(AsymptoticKind::E, AsymptoticMethod::Radius(1e5), &s).unwrap();
    assert!((rich - far).norm() < 1e-4, "richardson {rich} vs R=1e5 {far}");
    assert!((tail - rich).norm() < 1e-6, "tail {tail} vs richardson {rich}");
    assert!(tail.im.abs() < 1e-6);
    for kind in [AsymptoticKind::H, AsymptoticKind::CPlus] {
        let t = asymptotic_constant(kind, AsymptoticMethod::TailSubstitution, &s).unwrap();
        let r = asymptotic_constant(kind, AsymptoticMethod::Richardson { r1: 1e3, r2: 1e4 }, &s).unwrap();
        assert!((t - r).norm() < 1e-6, "{kind:?}: {t} vs {r}");
    }
}

#[test]
fn abel_map_at_infinity_and_sheets() {
    let s = ex1();
    assert_eq!(abel_map_infinity(-1, &s).value, c(0.0, 0.0));
    assert_eq!(abel_map_infinity(1, &s).value, s.r);
    let up = CurvePoint::new(c(2.0, 0.5), 1).unwrap();
    let down = CurvePoint::new(c(2.0, 0.5), -1).unwrap();
    let a = abel_map(&up, &s).unwrap().value;
    let b = abel_map(&down, &s).unwrap().value;
    // A(P) + A(σP) = r
    assert!((a + b - s.r).norm() < 1e-12);
}

#[test]
fn invalid_inputs_are_rejected() {
    assert!(BranchData::new(c(0.5, -0.1), c(-0.5, 0.2)).is_err());
    assert!(BranchData::new(c(0.5, 0.1), c(0.5, 0.1)).is_err());
    assert!(BranchData::new(c(0.5, 0.1), c(0.5, 0.3)).is_err());
    let b = BranchData::new(c(0.454, 0.324), c(-0.454, 0.095)).unwrap();
    assert!(genus1_spectral(b, Divisor { epsilon: 2, y: 0.0 }).is_err());
    let s = ex1();
    let bp = CurvePoint::upper(c(0.454, 0.324));
    assert!(abelian_integral(1, &bp, None, &s).is_err());
    assert!(abelian_integral(4, &CurvePoint::upper(c(1.0, 1.0)), None, &s).is_err());
}

#[test]
fn json_roundtrip() {
    let s = ex2();
    let j = serde_json::to_string(&s).unwrap();
    let back: SpectralData = serde_json::from_str(&j).unwrap();
    assert_eq!(back, s);
}
