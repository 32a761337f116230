//! Closed-form estimates of the zeros of Ai(−x) and J_ν(x) with certified
//! brackets, and oracle refinement of the true zeros.

use std::f64::consts::PI;

use crate::bounds::{BoundName, BoundReport};
use crate::error::{domain, Error, Result};
use crate::oracle::fixed::{self, Fixed};
use crate::oracle::{refine_root, Oracle, J_X_MAX};
use crate::order::Order;

/// Largest Airy zero index the refinement scan will look for.
pub const AIRY_S_MAX: usize = 50;
const SCAN_STEP: f64 = 0.05;
const ROOT_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroFamily {
    Airy,
    Bessel,
}

impl ZeroFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            ZeroFamily::Airy => "airy",
            ZeroFamily::Bessel => "bessel",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryZeroMode {
    Full,
    Simplified,
}

/// An enclosure of the `s`-th positive zero.
///
/// Two-sided estimates cover `[center − half_width, center + half_width]`,
/// one-sided ones `[center, center + half_width]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZeroEstimate {
    pub family: ZeroFamily,
    pub s: usize,
    pub nu: Option<f64>,
    pub center: f64,
    pub half_width: f64,
    pub one_sided: bool,
}

impl ZeroEstimate {
    pub fn lo(&self) -> f64 {
        if self.one_sided {
            self.center
        } else {
            self.center - self.half_width
        }
    }

    pub fn hi(&self) -> f64 {
        self.center + self.half_width
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo() <= x && x <= self.hi()
    }
}

/// m = (12s − 3)π.
pub fn zero_phase(s: usize) -> f64 {
    (12.0 * s as f64 - 3.0) * PI
}

fn full_center(m: f64) -> f64 {
    16f64.powf(-2.0 / 3.0) * (m + (m * m + 40.0).sqrt()).powf(2.0 / 3.0)
}

fn simplified_center(m: f64) -> f64 {
    0.25 * (m * m + 20.0).cbrt()
}

fn cube_tail(m: f64) -> f64 {
    m.powi(3) * (m * m + 40.0).powf(1.0 / 6.0)
}

pub fn airy_zero_estimate(s: usize, mode: AiryZeroMode) -> Result<ZeroEstimate> {
    if s == 0 {
        return Err(domain("airy_zero_estimate", "index must be >= 1"));
    }
    let m = zero_phase(s);
    let (center, half_width) = match mode {
        AiryZeroMode::Full => (full_center(m), 1280.0 * PI / (9.0 * cube_tail(m))),
        AiryZeroMode::Simplified => (simplified_center(m), 456.0 / cube_tail(m)),
    };
    Ok(ZeroEstimate {
        family: ZeroFamily::Airy,
        s,
        nu: None,
        center,
        half_width,
        one_sided: false,
    })
}

/// The first `n` positive zeros of Ai(−x), by scanning for sign changes.
pub fn refine_airy_zeros(n: usize, oracle: &Oracle) -> Result<Vec<f64>> {
    if n > AIRY_S_MAX {
        return Err(domain(
            "refine_airy_zero",
            format!("index {n} exceeds the scan cap {AIRY_S_MAX}"),
        ));
    }
    let f = |x: f64| Ok(oracle.airy(x)?.value);
    scan_zeros(f, SCAN_STEP, SCAN_STEP, 60.0, n, "Ai(-x)")
}

pub fn refine_airy_zero(s: usize, oracle: &Oracle) -> Result<f64> {
    if s == 0 {
        return Err(domain("refine_airy_zero", "index must be >= 1"));
    }
    Ok(refine_airy_zeros(s, oracle)?[s - 1])
}

/// The first `n` positive zeros of J_ν, for ν > 0 (ν = 0 allowed too).
pub fn refine_bessel_zeros(order: &Order, n: usize, oracle: &Oracle) -> Result<Vec<f64>> {
    let nu = order.nu();
    if !(nu >= 0.0) {
        return Err(domain("refine_bessel_zero", format!("order must be >= 0, got {nu}")));
    }
    // J_ν has no zeros in (0, ν]
    let start = nu.max(SCAN_STEP);
    let f = |x: f64| Ok(oracle.j(nu, x)?.value);
    scan_zeros(f, start, SCAN_STEP, J_X_MAX, n, "J_nu")
}

pub fn refine_bessel_zero(order: &Order, s: usize, oracle: &Oracle) -> Result<f64> {
    if s == 0 {
        return Err(domain("refine_bessel_zero", "index must be >= 1"));
    }
    Ok(refine_bessel_zeros(order, s, oracle)?[s - 1])
}

fn scan_zeros<F>(mut f: F, start: f64, step: f64, cap: f64, n: usize, what: &str) -> Result<Vec<f64>>
where
    F: FnMut(f64) -> Result<f64>,
{
    let mut out = Vec::with_capacity(n);
    let mut a = start;
    let mut fa = f(a)?;
    let mut i = 1usize;
    while out.len() < n {
        let b = start + i as f64 * step;
        if b > cap {
            return Err(Error::ScanFailure(format!(
                "only {} zeros of {what} found below {cap}",
                out.len()
            )));
        }
        let fb = f(b)?;
        if fb == 0.0 {
            out.push(b);
        } else if fa != 0.0 && fa.signum() != fb.signum() {
            out.push(refine_root(&mut f, a, b, ROOT_TOL)?);
        }
        a = b;
        fa = fb;
        i += 1;
    }
    Ok(out)
}

/// One-sided enclosure j_{ν,s} ∈ [ν + 2^{−1/3}a_sν^{1/3}, that + (3·2^{−2/3}a_s²/10)ν^{−1/3}],
/// with a_s the refined Airy zero.
pub fn bessel_first_zeros_estimate(order: &Order, s: usize, oracle: &Oracle) -> Result<ZeroEstimate> {
    let nu = order.nu();
    if !(nu > 0.0) {
        return Err(domain(
            "bessel_first_zeros_estimate",
            format!("order must be positive, got {nu}"),
        ));
    }
    let a = refine_airy_zero(s, oracle)?;
    Ok(bessel_zero_bracket(nu, s, a))
}

/// The same enclosure for a given Airy zero `a_s`.
pub fn bessel_zero_bracket(nu: f64, s: usize, a_s: f64) -> ZeroEstimate {
    let c = nu.cbrt();
    ZeroEstimate {
        family: ZeroFamily::Bessel,
        s,
        nu: Some(nu),
        center: nu + a_s * c / 2f64.cbrt(),
        half_width: 0.3 * 2f64.powf(-2.0 / 3.0) * a_s * a_s / c,
        one_sided: true,
    }
}

/// a_s < 16^{−2/3}(m + √(m² + 40))^{2/3}; informational only.
pub fn conjecture_check(s: usize, oracle: &Oracle) -> Result<BoundReport> {
    let a = refine_airy_zero(s, oracle)?;
    let rhs = full_center(zero_phase(s));
    Ok(BoundReport::new(
        BoundName::Conjecture,
        0.0,
        s as f64,
        a,
        rhs,
        1e-11,
        true,
    ))
}

/// 0 < (1/4)(m²+20)^{1/3} − 16^{−2/3}(m+√(m²+40))^{2/3} < 25/(3m³(m²+40)^{1/6}).
///
/// The gap is a difference of nearly equal numbers and sits within a few parts
/// in 10⁵ of its upper bound, so both sides are computed in 200-bit fixed point.
pub fn center_gap_chain(s: usize) -> [BoundReport; 2] {
    let (gap, bound) = gap_fixed(s);
    let err = 1e-30;
    [
        BoundReport::new(BoundName::ZeroGap, 0.0, s as f64, 0.0, gap, err, true),
        BoundReport::new(BoundName::ZeroGap, 0.0, s as f64, gap, bound, err, true),
    ]
}

fn gap_fixed(s: usize) -> (f64, f64) {
    const P: u32 = 200;
    let pow = |y: &Fixed, a: i64, b: i64| fixed::exp(&fixed::ln(y).mul_int(a).div_int(b));
    let m = fixed::pi(P).mul_int(12 * s as i64 - 3);
    let m2 = m.mul(&m);
    let m2_20 = m2.add(&Fixed::from_int(20, P));
    let m2_40 = m2.add(&Fixed::from_int(40, P));
    let simplified = pow(&m2_20, 1, 3).div_int(4);
    let root = pow(&m2_40, 1, 2);
    let full = pow(&m.add(&root), 2, 3).div(&pow(&Fixed::from_int(16, P), 2, 3));
    let tail = m2.mul(&m).mul(&pow(&m2_40, 1, 6)).mul_int(3);
    let bound = Fixed::from_int(25, P).div(&tail);
    (simplified.sub(&full).to_f64(), bound.to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;

    const A1: f64 = 2.338_107_410_459_767_038_489_197_252_446_735_440_638_540_15;
    const A2: f64 = 4.087_949_444_130_970_616_636_988_701_457_391_060_224_764_7;
    const A10: f64 = 12.828_776_752_865_757_200_406_729_407_241_824_477_386_415_6;
    const A50: f64 = 38.021_008_677_255_254_433_132_468_290_748_644_840_663_195_6;
    const J01: f64 = 2.404_825_557_695_772_768_621_631_879_326_454_643_124_244_91;
    const J51: f64 = 8.771_483_815_959_954_019_122_867_133_400_560_562_981_077_02;
    const J20_2: f64 = 29.961_603_791_625_156_059_904_389_125_910_385_038_730_297_7;

    #[test]
    fn refined_airy_zeros_match_references() {
        let o = Oracle::default();
        let z = refine_airy_zeros(50, &o).unwrap();
        assert!((z[0] - A1).abs() < 1e-10);
        assert!((z[1] - A2).abs() < 1e-10);
        assert!((z[9] - A10).abs() < 1e-10);
        assert!((z[49] - A50).abs() < 1e-10);
        assert!(refine_airy_zero(51, &o).is_err());
    }

    #[test]
    fn refined_bessel_zeros_match_references() {
        let o = Oracle::default();
        assert!((refine_bessel_zero(&Order::new(0.0).unwrap(), 1, &o).unwrap() - J01).abs() < 1e-10);
        assert!((refine_bessel_zero(&Order::new(5.0).unwrap(), 1, &o).unwrap() - J51).abs() < 1e-10);
        assert!((refine_bessel_zero(&Order::new(20.0).unwrap(), 2, &o).unwrap() - J20_2).abs() < 1e-10);
    }

    #[test]
    fn first_airy_estimate() {
        let e = airy_zero_estimate(1, AiryZeroMode::Full).unwrap();
        let m = 9.0 * PI;
        let c = 16f64.powf(-2.0 / 3.0) * (m + (81.0 * PI * PI + 40.0).sqrt()).powf(2.0 / 3.0);
        assert_eq!(e.center, c);
        assert!((e.center - 2.338_107_410).abs() < 0.00122);
        assert!(e.contains(A1));
        let s = airy_zero_estimate(1, AiryZeroMode::Simplified).unwrap();
        assert_eq!(s.center, 0.25 * (81.0 * PI * PI + 20.0).cbrt());
        assert!(s.contains(A1));
        assert!(airy_zero_estimate(0, AiryZeroMode::Full).is_err());
    }

    #[test]
    fn tenth_airy_bracket() {
        assert!(airy_zero_estimate(10, AiryZeroMode::Full).unwrap().contains(A10));
        assert!(airy_zero_estimate(10, AiryZeroMode::Simplified).unwrap().contains(A10));
    }

    #[test]
    fn half_order_bracket_contains_pi() {
        let e = bessel_zero_bracket(0.5, 1, A1);
        assert!((e.lo() - 1.973).abs() < 1e-3, "{}", e.lo());
        assert!((e.hi() - 3.275).abs() < 1e-3, "{}", e.hi());
        assert!(e.contains(PI));
    }

    #[test]
    fn bessel_brackets_contain_zeros() {
        let o = Oracle::default();
        let e = bessel_first_zeros_estimate(&Order::new(5.0).unwrap(), 1, &o).unwrap();
        assert!(e.one_sided && e.contains(J51));
        let e = bessel_first_zeros_estimate(&Order::new(20.0).unwrap(), 2, &o).unwrap();
        assert!(e.contains(J20_2));
        assert!(bessel_first_zeros_estimate(&Order::new(0.0).unwrap(), 1, &o).is_err());
    }

    #[test]
    fn conjecture_and_gap_chain() {
        let o = Oracle::default();
        for s in [1, 5, 50] {
            assert!(conjecture_check(s, &o).unwrap().holds, "s={s}");
        }
        for s in 1..=50 {
            let [a, b] = center_gap_chain(s);
            assert!(a.holds && b.holds, "s={s}");
        }
    }
}
