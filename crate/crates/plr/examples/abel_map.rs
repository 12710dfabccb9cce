//! Abelian integrals and the Abel map at points on both sheets, and the asymptotic constants.
use num_complex::Complex64;
use plr::spectral::*;

fn main() -> plr::Result<()> {
    let d = genus1_spectral(BranchData::new(Complex64::new(0.454, 0.324), Complex64::new(-0.454, 0.095))?, Divisor::default())?;
    for (lam, sheet) in [(0.8, 1), (0.8, -1), (1.7, 1), (-0.3, 1)] {
        let p = CurvePoint::new(Complex64::new(lam, 0.0), sheet)?;
        let a = abel_map(&p, &d)?;
        println!("P = ({lam}, {sheet:+}): A(P) = {:.12} (reduced {:.12})", a.value, a.reduced);
        for k in 1..=3u8 {
            let (v, err) = abelian_integral(k, &p, None, &d)?;
            println!("    Omega{k}(P) = {v:.12}  (error estimate {err:.1e})");
        }
    }
    let (plus, minus) = (abel_map_infinity(1, &d), abel_map_infinity(-1, &d));
    println!("A(inf+) + A(inf-) = {:.12}, r = {:.12}", plus.value + minus.value, d.r);
    for (name, kind) in [("E", AsymptoticKind::E), ("H", AsymptoticKind::H), ("c+", AsymptoticKind::CPlus)] {
        let tail = asymptotic_constant(kind, AsymptoticMethod::TailSubstitution, &d)?;
        let rich = asymptotic_constant(kind, AsymptoticMethod::Richardson { r1: 1e3, r2: 2e3 }, &d)?;
        println!("{name}: tail substitution {tail:.12}, Richardson {rich:.12}");
    }
    Ok(())
}
