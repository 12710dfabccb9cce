#[path = "oracles/oracle_values.rs"]
mod oracle;

use num_complex::Complex64;
use plr::error::Error;
use plr::specfun::*;
use proptest::prelude::*;
use std::f64::consts::PI;

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm().max(1e-300)
}

fn amp(z: Complex64) -> ComplexAmplitude {
    ComplexAmplitude::new(z).unwrap()
}

#[test]
fn complete_integrals_match_oracle() {
    for &(p, k, e) in oracle::COMPLETE {
        assert!((elliptic_k(p).unwrap() - k).abs() < 1e-14 * k, "K({p})");
        assert!((elliptic_e(p).unwrap() - e).abs() < 1e-14 * e, "E({p})");
    }
}

#[test]
fn carlson_match_oracle() {
    for (a, v) in oracle::rf_cases() {
        assert!(rel(carlson_rf(a[0], a[1], a[2]).unwrap(), v) < 1e-13, "RF{a:?}");
    }
    for (a, v) in oracle::rd_cases() {
        assert!(rel(carlson_rd(a[0], a[1], a[2]).unwrap(), v) < 1e-13, "RD{a:?}");
    }
    for (a, v) in oracle::rj_cases() {
        assert!(rel(carlson_rj(a[0], a[1], a[2], a[3]).unwrap(), v) < 1e-12, "RJ{a:?}");
    }
}

#[test]
fn incomplete_integrals_match_oracle() {
    let n = Complex64::new(0.3, 0.4);
    for (phi, p, f, e, pi3) in oracle::incomplete_cases() {
        assert!(rel(incomplete_f(&amp(phi), p).unwrap(), f) < 1e-12, "F({phi}, {p})");
        assert!(rel(incomplete_e(&amp(phi), p).unwrap(), e) < 1e-12, "E({phi}, {p})");
        assert!(rel(incomplete_pi(n, &amp(phi), p).unwrap(), pi3) < 1e-11, "Pi({phi}, {p})");
    }
}

#[test]
fn jacobi_functions_match_oracle() {
    for (u, p, sn, cn, dn, z) in oracle::jacobi_cases() {
        let (s, c, d) = jacobi_sn_cn_dn(u, p).unwrap();
        assert!(rel(s, sn) < 1e-12 && rel(c, cn) < 1e-12 && rel(d, dn) < 1e-12, "sn cn dn at {u}, {p}");
        assert!((jacobi_zeta(u, p).unwrap() - z).norm() < 1e-11, "Z at {u}, {p}");
    }
}

#[test]
fn real_incomplete_forms_agree_with_complex() {
    for &(phi, p) in &[(0.4, 0.2), (1.3, 0.7), (-2.9, 0.95), (7.0, 0.5)] {
        let fc = incomplete_f(&amp(Complex64::new(phi, 0.0)), p).unwrap();
        let ec = incomplete_e(&amp(Complex64::new(phi, 0.0)), p).unwrap();
        assert!((incomplete_f_real(phi, p).unwrap() - fc.re).abs() < 1e-12);
        assert!((incomplete_e_real(phi, p).unwrap() - ec.re).abs() < 1e-12);
    }
}

#[test]
fn complete_pi_degenerates_to_k() {
    for &p in &[0.2, 0.6, 0.9] {
        let v = complete_pi(Complex64::new(0.0, 0.0), p).unwrap();
        assert!((v.re - elliptic_k(p).unwrap()).abs() < 1e-12);
    }
}

#[test]
fn invalid_inputs() {
    assert!(matches!(elliptic_k(1.0), Err(Error::Domain(_))));
    assert!(elliptic_k(-0.1).is_err());
    assert!(matches!(ComplexAmplitude::new(Complex64::new(0.0, 60.0)), Err(Error::AmplitudeOverflow { .. })));
    assert!(ComplexAmplitude::new(Complex64::new(f64::NAN, 0.0)).is_err());
    assert!(EllipticModulus::from_p(1.0).is_err());
    let m = EllipticModulus::from_p(0.6).unwrap();
    assert!((m.p_prime - 0.8).abs() < 1e-15);
    assert_eq!(m.complement().complement(), m);
    // 1 − n sin²θ vanishes at θ = π/4 for n = 2
    assert!(matches!(incomplete_pi(Complex64::new(2.0, 0.0), &amp(Complex64::new(1.0, 0.0)), 0.5), Err(Error::BranchAmbiguity(_))));
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 100, rng_seed: proptest::test_runner::RngSeed::Fixed(11), ..ProptestConfig::default() })]

    #[test]
    fn legendre_relation(p in 0.001f64..0.999) {
        let pc = ((1.0 - p) * (1.0 + p)).sqrt();
        let (k, e, kp, ep) = (elliptic_k(p).unwrap(), elliptic_e(p).unwrap(), elliptic_k(pc).unwrap(), elliptic_e(pc).unwrap());
        prop_assert!((e * kp + ep * k - k * kp - PI / 2.0).abs() < 1e-12);
    }

    #[test]
    fn jacobi_identities(x in -6.0f64..6.0, yf in -0.9f64..0.9, p in 0.01f64..0.99) {
        let pc = ((1.0 - p) * (1.0 + p)).sqrt();
        let u = Complex64::new(x, yf * elliptic_k(pc).unwrap());
        let (s, c, d) = jacobi_sn_cn_dn(u, p).unwrap();
        let one = Complex64::new(1.0, 0.0);
        let scale = 1.0 + s.norm_sqr();
        prop_assert!((s * s + c * c - one).norm() < 1e-11 * scale);
        prop_assert!((d * d + s * s * (p * p) - one).norm() < 1e-11 * scale);
    }

    #[test]
    fn sn_inverts_f(phi in -1.5f64..1.5, p in 0.0f64..0.99) {
        let u = incomplete_f_real(phi, p).unwrap();
        let (s, _, _) = jacobi_sn_cn_dn(Complex64::new(u, 0.0), p).unwrap();
        prop_assert!((s.re - phi.sin()).abs() < 1e-12);
    }

    #[test]
    fn sn_derivative(x in -3.0f64..3.0, y in -0.5f64..0.5, p in 0.05f64..0.95) {
        let u = Complex64::new(x, y);
        let h = 1e-5;
        let sn = |z: Complex64| jacobi_sn_cn_dn(z, p).unwrap().0;
        let fd = (sn(u + h) - sn(u - h)) / (2.0 * h);
        let (_, c, d) = jacobi_sn_cn_dn(u, p).unwrap();
        prop_assert!((fd - c * d).norm() < 1e-7 * (1.0 + (c * d).norm()));
    }
}
