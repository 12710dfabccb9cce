// Generated by generate.py; do not edit.
#![allow(dead_code)]
use num_complex::Complex64;
fn c(re: f64, im: f64) -> Complex64 { Complex64::new(re, im) }

/// (p, K(p), E(p))
pub const COMPLETE: &[(f64, f64, f64)] = &[
    (0.1, 1.574745561517356, 1.5668619420216683),
    (0.3508802104379, 1.6228087340932022, 1.5212709058063302),
    (0.5, 1.685750354812596, 1.4674622093394272),
    (0.630925, 1.7761807628796352, 1.4003055779851836),
    (0.9, 2.2805491384227702, 1.1716970527816141),
    (0.99, 3.3566005233611924, 1.028475809028804),
];

pub fn rf_cases() -> Vec<([Complex64; 3], Complex64)> {
    vec![
        ([c(1.0, 0.0), c(2.0, 0.0), c(0.0, 0.0)], c(1.3110287771460599, 0.0)),
        ([c(0.5, 1.0), c(0.5, -1.0), c(2.0, 0.0)], c(0.92441236553614919, 0.0)),
        ([c(-1.0, 0.001), c(0.0, 1.0), c(2.0, 3.0)], c(0.54797813266054602, -0.64136380881098075)),
        ([c(1.0, 2.0), c(3.0, -1.0), c(0.25, 0.0)], c(0.83128952572767659, -0.12510108297390514)),
    ]
}

pub fn rd_cases() -> Vec<([Complex64; 3], Complex64)> {
    vec![
        ([c(0.0, 0.0), c(2.0, 0.0), c(1.0, 0.0)], c(1.7972103521033883, 0.0)),
        ([c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0)], c(0.16510527294261053, 0.0)),
        ([c(0.0, 1.0), c(0.0, -1.0), c(2.0, 0.0)], c(0.65933854154219769, 0.0)),
        ([c(0.5, 1.0), c(0.5, -1.0), c(1.0, 1.0)], c(0.59248363528310318, -0.5218575749685612)),
    ]
}

pub fn rj_cases() -> Vec<([Complex64; 4], Complex64)> {
    vec![
        ([c(0.0, 0.0), c(1.0, 0.0), c(2.0, 0.0), c(3.0, 0.0)], c(0.77688623778582332, 0.0)),
        ([c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0), c(5.0, 0.0)], c(0.14297579667156754, 0.0)),
        ([c(2.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(2.0, 0.0)], c(0.65933854154219769, -0.0000000000000000000000000000000000000000000000019499001942954729)),
        ([c(0.0, 1.0), c(0.0, -1.0), c(0.0, 0.0), c(2.0, 0.0)], c(1.6490011662710885, 0.0)),
    ]
}

/// (φ, p, F, E, Π(0.3+0.4i, φ, p)) along the straight amplitude path
pub fn incomplete_cases() -> Vec<(Complex64, f64, Complex64, Complex64, Complex64)> {
    vec![
        (c(0.7, 0.0), 0.5, c(0.71362050286777775, 0.0), c(0.68682918035227031, 0.0), c(0.7427107973833179, 0.049752415592382345)),
        (c(1.2, 0.29999999999999999), 0.3508802104379, c(1.2257656923840798, 0.31791732011494089), c(1.1750107161981968, 0.28307297718261809), c(1.1518220201355266, 0.56934919626036887)),
        (c(0.40000000000000002, -0.80000000000000004), 0.9, c(0.31438422287099384, -0.77539855596102394), c(0.49947461375645459, -0.81335251537929738), c(0.20211084284752983, -0.82941175105214332)),
        (c(2.5, 0.20000000000000001), 0.630925, c(2.8983115525266142, 0.21558000372718483), c(2.1713568589976959, 0.18542102170842849), c(3.1235231619512974, 1.2959409475031691)),
        (c(-0.90000000000000002, 1.1000000000000001), 0.3, c(-0.86618921932961387, 1.1341387224935531), c(-0.93114466301756793, 1.0644497313083564), c(-0.024714088004763143, 1.8493135708839325)),
    ]
}

/// (u, p, sn, cn, dn, Z)
pub fn jacobi_cases() -> Vec<(Complex64, f64, Complex64, Complex64, Complex64, Complex64)> {
    vec![
        (c(0.3, 0.0), 0.5, c(0.29446555154955624, 0.0), c(0.95566209454525067, 0.0), c(0.98910187025283392, 0.0), c(0.036646768833355379, 0.0)),
        (c(1.1000000000000001, 0.40000000000000002), 0.3508802104379, c(0.94776127711566449, 0.1822877693103906), c(0.50295923507070094, -0.34349759781206885), c(0.94551951085960258, -0.022495919316901046), c(0.034876781100453221, -0.014639683531746387)),
        (c(-2.0, 1.3), 0.9, c(-1.1048081431690971, 0.020267863302985476), c(0.047477098634234027, 0.47164003416228828), c(0.15770967574113645, 0.11500626867948083), c(-0.13878789143407418, -0.50438492310820268)),
        (c(0.69999999999999996, -2.2000000000000002), 0.630925, c(2.2689546779722205, 0.6221824968145492), c(-0.68623475519599286, 2.0571734031404695), c(-0.52040715811066339, 1.079831075806883), c(1.0872078449839244, 1.4037282990775419)),
        (c(3.8999999999999999, 0.050000000000000003), 0.99, c(0.99680997086311073, -0.0006492441435510557), c(-0.080220859522463204, -0.0080673909463031079), c(0.16173717773795429, 0.003921759370817707), c(-0.15461406846300613, -0.014010398287501309)),
    ]
}

/// (u, τ, θ(u), θ'(u), θ''(u)) for θ(u) = Σ exp(½τn² + nu)
pub fn theta_cases() -> Vec<(Complex64, f64, Complex64, Complex64, Complex64)> {
    vec![
        (c(0.29999999999999999, 0.20000000000000001), -9.6046554012635, c(1.0168235778457281, 0.00099346741835678953), c(0.0049009281818024071, 0.0034103144427302975), c(0.016823607619288705, 0.00099347417876870429)),
        (c(-1.7, 2.8999999999999999), -6.9039475407677, c(0.82601236141499934, -0.040094540281826595), c(0.16272123914742089, 0.042850001164388877), c(-0.17390733937799718, -0.040052503754615377)),
        (c(2.5, -0.40000000000000002), -1.5, c(12.246644144273146, -9.6363554413300891), c(17.841651667444072, -19.326991408214984), c(32.749537922714012, -43.393833494027494)),
        (c(0.10000000000000001, 3.1415899999999999), -6.9039475407677, c(0.93631888206574707, 0.000000016840643312126392), c(-0.006346362709961088, 0.00000016896719939390992), c(-0.063674950746562174, 0.000000016834183145033579)),
    ]
}

