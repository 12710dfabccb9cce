//! Genus-one spectral data from two branch points, with periods checked against closed forms.
use num_complex::Complex64;
use plr::spectral::*;

fn main() -> plr::Result<()> {
    for (name, l1, l2) in [
        ("s-type", Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095)),
        ("t-type", Complex64::new(1.0, 0.813211), Complex64::new(-1.0, 0.813211)),
    ] {
        let d = genus1_spectral(BranchData::new(l1, l2)?, Divisor::default())?;
        println!("{name}: lambda1 = {l1}, lambda2 = {l2}");
        println!("  p = {:.12}, p' = {:.12}, K = {:.12}, K' = {:.12}", d.modulus.p, d.modulus.p_prime, d.k, d.k_prime);
        println!("  tau = {:.12}, U = {:.12}, V = {:.12}, r = {:.12}", d.tau, d.u, d.v, d.r);
        println!("  c1 = {:.12}, c2 = {:.12}, c3 = {:.12}", d.c1, d.c2, d.c3);
        println!("  E = {:.12}, H = {:.12}, beta = {:.12}", d.e_const, d.h_const, d.beta());
        for kind in [Differential::Holomorphic, Differential::Omega1, Differential::Omega2, Differential::Omega3] {
            let (a, b) = cycle_periods(kind, &d)?;
            println!("  {kind:?}: a-period {a:.3e}, b-period {b:.12}");
        }
    }
    Ok(())
}
