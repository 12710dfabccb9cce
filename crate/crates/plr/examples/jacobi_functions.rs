//! Jacobi sn, cn, dn and the zeta function at complex arguments.
use num_complex::Complex64;
use plr::specfun::{elliptic_k, jacobi_sn_cn_dn, jacobi_zeta};

fn main() -> plr::Result<()> {
    let p = 0.8;
    let k = elliptic_k(p)?;
    for u in [Complex64::new(0.5, 0.0), Complex64::new(k, 0.0), Complex64::new(1.1, 0.4), Complex64::new(-2.0, 1.3)] {
        let (sn, cn, dn) = jacobi_sn_cn_dn(u, p)?;
        let id1 = (sn * sn + cn * cn - 1.0).norm();
        let id2 = (dn * dn + sn * sn * (p * p) - 1.0).norm();
        println!("u = {u}: sn = {sn:.12}, cn = {cn:.12}, dn = {dn:.12}, identities {id1:.1e} {id2:.1e}");
        println!("    Z(u) = {:.12}", jacobi_zeta(u, p)?);
    }
    Ok(())
}
