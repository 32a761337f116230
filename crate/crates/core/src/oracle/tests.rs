#![allow(clippy::excessive_precision)]

use super::fixed::Fixed;
use super::*;
use crate::error::Error;
use std::f64::consts::PI;

fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1e-300)
}

fn oracle() -> Oracle {
    Oracle::default()
}

// 45-digit references from an independent arbitrary-precision library
const J0_1: f64 = 0.765_197_686_557_966_551_449_717_526_102_663_220_909_274_29;
const J1_2: f64 = 0.576_724_807_756_873_387_202_448_242_269_137_086_920_302_69;
const J20_150: f64 = 0.063_447_240_953_861_972_933_287_639_553_680_827_534_503_423;
const J30_TENTH: f64 = 3.510_791_444_621_463_075_258_358_958_240_150_418_924_770_92e-72;
const J_THIRD_200: f64 = -0.040_491_219_246_916_073_251_014_851_254_662_171_461_131_048;
const J_MTHIRD_300: f64 = -0.012_913_265_138_393_049_208_001_182_867_612_955_512_973_824;
const J25_73: f64 = -0.300_849_431_587_499_808_377_826_719_864_246_932_358_645_088;
const J10_10: f64 = 0.207_486_106_633_358_857_697_278_723_518_753_428_032_744_611;
const DJ2_3: f64 = 0.014_998_118_135_342_407_653_627_201_129_873_871_972_241_1;
const AI_0: f64 = 0.355_028_053_887_817_239_260_063_186_004_183_176_397_979_174;
const AI_M1: f64 = 0.535_560_883_292_352_118_799_516_565_638_874_707_466_930_898;
const AI_M10: f64 = 0.040_241_238_486_443_190_689_430_314_029_934_590_101_740_716_4;
const AI_M50: f64 = -0.161_881_423_612_320_923_915_199_469_402_434_781_718_979_491;
const A1: f64 = 2.338_107_410_459_767_038_489_197_252_446_735_440_638_540_15;
const J01: f64 = 2.404_825_557_695_772_768_621_631_879_326_454_643_124_244_91;

#[test]
fn gamma_public_values() {
    assert!(close(gamma(1.0).unwrap(), 1.0, 1e-15));
    assert!(close(gamma(0.5).unwrap(), PI.sqrt(), 1e-15));
    assert!(close(gamma(2.0 / 3.0).unwrap(), 1.354_117_939_426_400_4, 1e-15));
    assert!(gamma(0.0).is_err());
    assert!(gamma(64.0).is_err());
}

#[test]
fn bessel_reference_values() {
    let o = oracle();
    let cases = [
        (0.0, 1.0, J0_1),
        (1.0, 2.0, J1_2),
        (20.0, 150.0, J20_150),
        (30.0, 0.1, J30_TENTH),
        (2.5, 7.3, J25_73),
        (10.0, 10.0, J10_10),
    ];
    for (nu, x, r) in cases {
        let v = o.j(nu, x).unwrap();
        assert!(close(v.value, r, 1e-14), "J_{nu}({x}) = {} vs {r}", v.value);
        assert!(v.abs_err_estimate <= 1e-12 * v.value.abs().max(1e-10));
    }
}

#[test]
fn orders_one_third_beyond_public_cap() {
    let o = oracle();
    let a = o.pair_uncapped(1.0 / 3.0, 200.0).unwrap().j.value;
    let b = o.pair_uncapped(-1.0 / 3.0, 300.0).unwrap().j.value;
    assert!(close(a, J_THIRD_200, 1e-13));
    assert!(close(b, J_MTHIRD_300, 1e-12));
}

#[test]
fn public_domain_is_enforced() {
    let ctx = PrecisionCtx::default();
    let o0 = Order::new(0.0).unwrap();
    assert!(matches!(bessel_j_ref(&o0, 0.0, ctx), Err(Error::Domain { .. })));
    assert!(matches!(bessel_j_ref(&o0, 200.5, ctx), Err(Error::Domain { .. })));
    let neg = Order::new(-0.75).unwrap();
    assert!(bessel_j_ref(&neg, 1.0, ctx).is_err());
    assert!(bessel_j_prime_ref(&o0, 1.0, ctx).is_err());
    assert!(airy_ai_neg_ref(0.0, ctx).is_err());
    assert!(airy_ai_neg_ref(121.0, ctx).is_err());
}

#[test]
fn precision_cap_is_reported() {
    let ctx = PrecisionCtx::default().with_max_digits(60);
    let e = bessel_j_ref(&Order::new(0.0).unwrap(), 150.0, ctx).unwrap_err();
    assert!(matches!(e, Error::PrecisionInfeasible { .. }));
}

#[test]
fn derivative_routes_agree() {
    let o = oracle();
    let ctx = PrecisionCtx::default();
    let rec = bessel_j_prime_ref(&Order::new(2.0).unwrap(), 3.0, ctx).unwrap();
    let direct = o.pair(2.0, 3.0).unwrap().dj;
    assert!(close(rec.value, DJ2_3, 1e-13));
    assert!(close(direct.value, DJ2_3, 1e-13));
    let h = 1e-6;
    let fd = (o.j(2.0, 3.0 + h).unwrap().value - o.j(2.0, 3.0 - h).unwrap().value) / (2.0 * h);
    assert!((fd - rec.value).abs() <= 1e-9);
    for &(nu, x) in &[(0.5, 1.0), (1.0, 17.0), (5.5, 40.0), (20.0, 120.0)] {
        let a = o.j_prime(nu, x).unwrap().value;
        let b = o.pair(nu, x).unwrap().dj.value;
        assert!((a - b).abs() <= 1e-13 * a.abs().max(1e-3), "nu={nu} x={x}");
    }
}

#[test]
fn derivative_half_order_closed_form() {
    let o = oracle();
    // d/dx √(2/(πx)) sin x = √(2/(πx)) (cos x − sin x / (2x))
    for &x in &[PI, 0.3, 7.0, 55.0] {
        let expect = (2.0 / (PI * x)).sqrt() * (x.cos() - x.sin() / (2.0 * x));
        let got = o.j_prime(0.5, x).unwrap().value;
        assert!((got - expect).abs() <= 1e-13, "x={x}");
    }
    let one = o.j_prime(1.0, 1e-9).unwrap().value;
    assert!((one - 0.5).abs() < 1e-12);
}

#[test]
fn recurrence_residual_grid() {
    let o = oracle();
    let nus = [0.0, 1.0 / 3.0, 0.5, 1.0, 2.5, 5.0, 10.0, 20.0];
    let xs = [0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 20.0, 50.0, 100.0, 150.0];
    for &nu in &nus {
        for &x in &xs {
            let jm = if nu == 0.0 {
                -o.j(1.0, x).unwrap().value
            } else {
                o.pair_uncapped(nu - 1.0, x).unwrap().j.value
            };
            let j0 = o.j(nu, x).unwrap().value;
            let jp = o.j(nu + 1.0, x).unwrap().value;
            let res = (jm + jp - 2.0 * nu / x * j0).abs();
            assert!(res <= 1e-11 * j0.abs().max(1.0), "nu={nu} x={x} res={res:e}");
        }
    }
}

#[test]
fn half_order_closed_form() {
    let o = oracle();
    let mut x = 0.1f64;
    while x <= 150.0 {
        let closed = (2.0 / (PI * x)).sqrt() * x.sin();
        let v = o.j(0.5, x).unwrap().value;
        let tol = 1e-12 * closed.abs() + 1e-15;
        assert!((v - closed).abs() <= tol, "x={x}: {v} vs {closed}");
        x *= 1.037;
    }
}

#[test]
fn transition_bracket_at_argument_equal_order() {
    let o = oracle();
    let alpha = 0.094_349_80;
    let g23 = gamma(2.0 / 3.0).unwrap();
    let k = 2f64.cbrt() / (3f64.powf(2.0 / 3.0) * g23);
    for &nu in &[1.0, 2.0, 5.0, 10.0, 20.0, 30.0] {
        let v = o.j(nu, nu).unwrap().value;
        let lo = k / (nu + alpha).cbrt();
        let hi = k / nu.cbrt();
        assert!(lo < v && v <= hi, "nu={nu}: {lo} < {v} <= {hi}");
    }
}

#[test]
fn airy_reference_values() {
    let o = oracle();
    for &(x, r) in &[(1.0, AI_M1), (10.0, AI_M10), (50.0, AI_M50)] {
        let v = o.airy(x).unwrap();
        assert!(close(v.value, r, 1e-12), "Ai(-{x}) = {} vs {r}", v.value);
    }
    // the limit x -> 0+
    let small = o.airy(1e-12).unwrap().value;
    assert!((small - AI_0).abs() < 1e-11);
    let z = o.airy(A1).unwrap();
    assert!(z.value.abs() < 1e-10);
}

#[test]
fn airy_is_bessel_reconstruction() {
    let o = oracle();
    for &x in &[0.5, 3.0, 17.25] {
        let zeta = airy_zeta(x);
        let a = o.pair_uncapped(-1.0 / 3.0, zeta).unwrap().j.value;
        let b = o.pair_uncapped(1.0 / 3.0, zeta).unwrap().j.value;
        assert_eq!(o.airy(x).unwrap().value, x.sqrt() / 3.0 * (a + b));
    }
}

/// Maclaurin series of Ai(z) at z = −x, carried in fixed point.
fn airy_maclaurin(x: f64) -> f64 {
    let p = 260;
    // 1/(3^{2/3} Γ(2/3)) and 1/(3^{1/3} Γ(1/3))
    let c1 = Fixed::parse_decimal("0.355028053887817239260063186004183176397979174", p).unwrap();
    let c2 = Fixed::parse_decimal("0.258819403792806798405183560189203963479091138", p).unwrap();
    let z = Fixed::from_f64(-x, p);
    let z3 = z.mul(&z).mul(&z);
    let mut tf = Fixed::one(p);
    let mut tg = z.clone();
    let mut f = tf.clone();
    let mut g = tg.clone();
    for k in 0..200i64 {
        tf = tf.mul(&z3).div_int((3 * k + 2) * (3 * k + 3));
        tg = tg.mul(&z3).div_int((3 * k + 3) * (3 * k + 4));
        f = f.add(&tf);
        g = g.add(&tg);
    }
    c1.mul(&f).sub(&c2.mul(&g)).to_f64()
}

#[test]
fn airy_matches_maclaurin() {
    let o = oracle();
    assert!(close(airy_maclaurin(1.0), AI_M1, 1e-15));
    for &x in &[0.5, 1.0, 2.0] {
        let a = o.airy(x).unwrap().value;
        let m = airy_maclaurin(x);
        assert!((a - m).abs() <= 1e-12 * m.abs(), "x={x}");
    }
}

#[test]
fn airy_derivative_matches_difference() {
    let o = oracle();
    for &x in &[0.7, 2.0, 9.0, 40.0] {
        let h = 1e-6;
        let fd = (o.airy(x + h).unwrap().value - o.airy(x - h).unwrap().value) / (2.0 * h);
        let d = o.airy_pair(x).unwrap().dai.value;
        assert!((fd - d).abs() <= 1e-7 * d.abs().max(1.0), "x={x}: {d} vs {fd}");
    }
}

#[test]
fn roots_of_oracle_functions() {
    let o = oracle();
    let a1 = refine_root(|x| Ok(o.airy(x)?.value), 2.0, 3.0, 1e-12).unwrap();
    assert!((a1 - A1).abs() < 1e-11);
    let j01 = refine_root(|x| Ok(o.j(0.0, x)?.value), 2.0, 3.0, 1e-12).unwrap();
    assert!((j01 - J01).abs() < 1e-11);
}

#[test]
fn oscillatory_integrals_by_quadrature() {
    // truncated at T = 1e4; the tail of sin²/(t+1)² is below 1/T
    let t_max = 1e4;
    let pts: Vec<f64> = (0..)
        .map(|k| k as f64 * PI)
        .take_while(|&t| t < t_max)
        .chain(std::iter::once(t_max))
        .collect();
    let s2 = quad_panels(|t| t.sin().powi(2) / (t + 1.0).powi(2), &pts, 1e-10).unwrap();
    assert!(s2.value + 1.0 / t_max < 0.5);
    let s1 = quad_panels(|t| t.sin().abs() / (t + 2.0).powi(2), &pts, 1e-10).unwrap();
    assert!(s1.value + 1.0 / (t_max + 2.0) < 1.0 / PI);
}
