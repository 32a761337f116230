//! Closed-form approximations of J_ν(x) and Ai(−x), each paired with an
//! explicit bound on its error.
//!
//! A symmetric error term t·θ with |θ| ≤ 1 becomes `half_width = |t|`. The
//! one-sided θ² terms of the expansion in inverse powers of x are widened to
//! symmetric half-widths here; [`crate::zeros`] keeps one-sidedness where it
//! matters.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, precondition, Result};
use crate::oracle::{self, Oracle};
use crate::order::Order;

/// Which approximation produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Classic,
    Olver,
    SharpLow,
    SharpHigh,
    Simplified,
    Transition,
    AiryClassic,
    AirySharp,
    AirySimplified,
}

impl Method {
    pub const ALL: [Method; 9] = [
        Method::Classic,
        Method::Olver,
        Method::SharpLow,
        Method::SharpHigh,
        Method::Simplified,
        Method::Transition,
        Method::AiryClassic,
        Method::AirySharp,
        Method::AirySimplified,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Classic => "classic",
            Method::Olver => "olver",
            Method::SharpLow => "sharp_low",
            Method::SharpHigh => "sharp_high",
            Method::Simplified => "simplified",
            Method::Transition => "transition",
            Method::AiryClassic => "airy_classic",
            Method::AirySharp => "airy_sharp",
            Method::AirySimplified => "airy_simplified",
        }
    }

    pub fn is_airy(self) -> bool {
        matches!(self, Method::AiryClassic | Method::AirySharp | Method::AirySimplified)
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| format!("unknown method '{s}'"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Oscillatory,
    Transition,
    Monotonicity,
}

impl Region {
    /// Rough location of (ν, x) relative to the turning point x = ν.
    pub fn classify(nu: f64, x: f64) -> Region {
        if nu.abs() <= 0.5 || x > nu + 3.0 * nu.cbrt() {
            Region::Oscillatory
        } else if x >= nu {
            Region::Transition
        } else {
            Region::Monotonicity
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Region::Oscillatory => "oscillatory",
            Region::Transition => "transition",
            Region::Monotonicity => "monotonicity",
        }
    }
}

/// An approximate value with a certified bound on `|truth − value|`.
///
/// `rounding` estimates the floating-point error in evaluating `value`
/// itself; it is not part of the certified bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ApproxValue {
    pub value: f64,
    pub half_width: f64,
    pub rounding: f64,
    pub method: Method,
    pub region: Region,
    /// Evaluation point (differs from the input only for the transition form).
    pub x: f64,
}

impl ApproxValue {
    pub fn lo(&self) -> f64 {
        self.value - self.half_width
    }

    pub fn hi(&self) -> f64 {
        self.value + self.half_width
    }

    /// `true` if `truth ± truth_err` is compatible with the certified interval.
    pub fn certifies(&self, truth: f64, truth_err: f64) -> bool {
        (truth - self.value).abs() <= self.half_width + self.rounding + truth_err
    }
}

/// Rounding estimate for `amp · cos(phase)` evaluated in double precision.
fn cos_rounding(amp: f64, phase: f64) -> f64 {
    8.0 * f64::EPSILON * amp.abs() * (1.0 + phase.abs())
}

fn check_x(op: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(op, format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// √(2/(πx)) cos(x − ω_ν) with error c μ x^{−3/2}.
pub fn classic_oscillatory(order: &Order, x: f64) -> Result<ApproxValue> {
    check_x("classic_oscillatory", x)?;
    let nu = order.nu();
    let mu = order.mu();
    let c = if order.is_low() {
        (2.0 / PI).powf(1.5)
    } else if nu > 0.5 {
        if x >= mu.sqrt() {
            SQRT_2 / 2.0
        } else {
            1.25
        }
    } else {
        return Err(domain(
            "classic_oscillatory",
            format!("order must be >= -1/2, got {nu}"),
        ));
    };
    let amp = (2.0 / (PI * x)).sqrt();
    let phase = x - order.omega();
    Ok(ApproxValue {
        value: amp * phase.cos(),
        half_width: c * mu * x.powf(-1.5),
        rounding: cos_rounding(amp, phase),
        method: Method::Classic,
        region: Region::classify(nu, x),
        x,
    })
}

/// Sign attached to each coefficient of the inverse-power expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OlverSigns {
    /// Every coefficient enters with a plus sign.
    Uniform,
    /// σ_{2i} = (−1)^i, σ_{2i+1} = (−1)^{i+1}, the Hankel pattern.
    Alternating,
}

impl OlverSigns {
    fn even(self, i: usize) -> f64 {
        match self {
            OlverSigns::Uniform => 1.0,
            OlverSigns::Alternating => {
                if i.is_multiple_of(2) {
                    1.0
                } else {
                    -1.0
                }
            }
        }
    }

    fn odd(self, i: usize) -> f64 {
        match self {
            OlverSigns::Uniform => 1.0,
            OlverSigns::Alternating => -self.even(i),
        }
    }
}

/// Convention used by [`olver_expansion`]; [`calibrate_olver_signs`] confirms it.
pub const OLVER_SIGNS: OlverSigns = OlverSigns::Alternating;

/// a_i(ν) = (1/2−ν)_i (1/2+ν)_i / (2^i i!) for i = 0..=n.
pub fn olver_coefficients(nu: f64, n: usize) -> Vec<f64> {
    let mut a = Vec::with_capacity(n + 1);
    a.push(1.0);
    for i in 1..=n {
        let k = (i - 1) as f64;
        let prev = a[i - 1];
        a.push(prev * (0.5 - nu + k) * (0.5 + nu + k) / (2.0 * i as f64));
    }
    a
}

pub fn olver_expansion(order: &Order, x: f64, l1: usize, l2: usize) -> Result<ApproxValue> {
    olver_expansion_with(OLVER_SIGNS, order, x, l1, l2)
}

pub fn olver_expansion_with(signs: OlverSigns, order: &Order, x: f64, l1: usize, l2: usize) -> Result<ApproxValue> {
    check_x("olver_expansion", x)?;
    let nu = order.nu();
    if !(nu >= 0.0) {
        return Err(domain("olver_expansion", format!("order must be >= 0, got {nu}")));
    }
    if (l1 as f64) < (nu / 2.0 - 0.25).max(1.0) || (l2 as f64) < (nu / 2.0 - 0.75).max(1.0) {
        return Err(precondition(
            "olver_expansion",
            format!("l1 = {l1}, l2 = {l2} too small for order {nu}"),
        ));
    }
    let a = olver_coefficients(nu, (2 * l1).max(2 * l2 + 1));
    let mut p = 0.0;
    let mut p_abs = 0.0;
    for i in 0..l1 {
        let t = signs.even(i) * a[2 * i] / x.powi(2 * i as i32);
        p += t;
        p_abs += t.abs();
    }
    let mut q = 0.0;
    let mut q_abs = 0.0;
    for i in 0..l2 {
        let t = signs.odd(i) * a[2 * i + 1] / x.powi(2 * i as i32 + 1);
        q += t;
        q_abs += t.abs();
    }
    let amp = (2.0 / (PI * x)).sqrt();
    let phase = x - order.omega();
    let tail = a[2 * l1].abs() / x.powi(2 * l1 as i32) + a[2 * l2 + 1].abs() / x.powi(2 * l2 as i32 + 1);
    Ok(ApproxValue {
        value: amp * (phase.cos() * p - phase.sin() * q),
        half_width: amp * tail,
        rounding: cos_rounding(amp, phase) * (p_abs + q_abs),
        method: Method::Olver,
        region: Region::classify(nu, x),
        x,
    })
}

/// Picks the first sign convention whose expansion at ν = 0, x = 20,
/// l1 = l2 = 3 lands inside its own certified width around the oracle value.
pub fn calibrate_olver_signs(oracle: &Oracle) -> Result<Option<OlverSigns>> {
    let order = Order::new(0.0)?;
    let truth = oracle.j(0.0, 20.0)?;
    for signs in [OlverSigns::Uniform, OlverSigns::Alternating] {
        let a = olver_expansion_with(signs, &order, 20.0, 3, 3)?;
        if (a.value - truth.value).abs() <= a.half_width {
            return Ok(Some(signs));
        }
    }
    Ok(None)
}

/// Phase 𝓑(x) and local frequency b(x) = √(x² − ν² + 1/4)/x.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseValue {
    pub big_b: f64,
    pub b: f64,
}

pub fn phase_b(order: &Order, x: f64) -> Result<PhaseValue> {
    check_x("phase_b", x)?;
    let mu = order.mu();
    let rmu = mu.sqrt();
    if order.is_low() {
        let r = (x * x + mu).sqrt();
        let big_b = if mu == 0.0 { x } else { r + rmu * (x / (rmu + r)).ln() };
        Ok(PhaseValue { big_b, b: r / x })
    } else {
        if x <= rmu {
            return Err(domain("phase_b", format!("x = {x} must exceed sqrt(mu) = {rmu}")));
        }
        let r = (x * x - mu).sqrt();
        Ok(PhaseValue {
            big_b: r + rmu * (rmu / x).asin(),
            b: r / x,
        })
    }
}

/// Amplitude–phase form √(2/π)(x² ∓ μ)^{−1/4} cos(𝓑(x) − ω_ν).
pub fn sharper_oscillatory(order: &Order, x: f64) -> Result<ApproxValue> {
    check_x("sharper_oscillatory", x)?;
    let nu = order.nu();
    let mu = order.mu();
    let root_2pi = (2.0 * PI).sqrt();
    let (w, half_width, method) = if order.is_low() {
        let w = x * x + mu;
        (w, mu / ((2.0 * PI * x).sqrt() * w.powf(1.5)), Method::SharpLow)
    } else if nu > 0.5 {
        let lim = mu.max(mu.sqrt());
        if x <= lim {
            return Err(domain(
                "sharper_oscillatory",
                format!("x = {x} must exceed max(mu, sqrt(mu)) = {lim}"),
            ));
        }
        let w = x * x - mu;
        (w, 13.0 * mu / (12.0 * root_2pi * w.powf(1.75)), Method::SharpHigh)
    } else {
        return Err(domain(
            "sharper_oscillatory",
            format!("order must be >= -1/2, got {nu}"),
        ));
    };
    let amp = (2.0 / PI).sqrt() * w.powf(-0.25);
    let phase = phase_b(order, x)?.big_b - order.omega();
    Ok(ApproxValue {
        value: amp * phase.cos(),
        half_width,
        rounding: cos_rounding(amp, phase),
        method,
        region: Region::classify(nu, x),
        x,
    })
}

/// √(2/π) cos(x − μ/(2x) − ω_ν)/(x² + μ)^{1/4}, for |ν| ≤ 1/2.
pub fn simplified_oscillatory(order: &Order, x: f64) -> Result<ApproxValue> {
    check_x("simplified_oscillatory", x)?;
    if !order.is_low() {
        return Err(domain(
            "simplified_oscillatory",
            format!("order must satisfy |nu| <= 1/2, got {}", order.nu()),
        ));
    }
    let mu = order.mu();
    let q = (x * x + mu).powf(0.25);
    let amp = (2.0 / PI).sqrt() / q;
    let phase = x - mu / (2.0 * x) - order.omega();
    Ok(ApproxValue {
        value: amp * phase.cos(),
        half_width: 25.0 * mu / (24.0 * (2.0 * PI).sqrt() * x.powi(3) * q),
        rounding: cos_rounding(amp, phase),
        method: Method::Simplified,
        region: Region::Oscillatory,
        x,
    })
}

/// Ai(0) = 3^{−2/3}/Γ(2/3).
pub fn airy_at_origin() -> f64 {
    3f64.powf(-2.0 / 3.0) / oracle::gamma(2.0 / 3.0).expect("gamma(2/3)")
}

/// Airy form near the turning point, at x = ν + ν^{1/3} z.
pub fn transition(order: &Order, z: f64, oracle: &Oracle) -> Result<ApproxValue> {
    let nu = order.nu();
    if !(nu >= 0.5) {
        return Err(domain("transition", format!("order must be >= 1/2, got {nu}")));
    }
    if !(z >= 0.0) || !z.is_finite() {
        return Err(domain("transition", format!("z must be >= 0, got {z}")));
    }
    let c = 2f64.cbrt();
    let arg = c * z;
    let (ai, ai_err) = if arg == 0.0 {
        (airy_at_origin(), 4.0 * f64::EPSILON)
    } else {
        let r = oracle.airy(arg)?;
        (r.value, r.abs_err_estimate)
    };
    let nu23 = nu.powf(2.0 / 3.0);
    let s = (nu23 + z).sqrt();
    let value = c * ai / s;
    Ok(ApproxValue {
        value,
        half_width: 23.0 * z.powf(2.25).max(1.0) / (2.0 * nu23 * s),
        rounding: c * ai_err / s + 4.0 * f64::EPSILON * value.abs(),
        method: Method::Transition,
        region: Region::Transition,
        x: nu + nu.cbrt() * z,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AiryMode {
    Classic,
    Sharp,
    Simplified,
}

impl AiryMode {
    pub fn method(self) -> Method {
        match self {
            AiryMode::Classic => Method::AiryClassic,
            AiryMode::Sharp => Method::AirySharp,
            AiryMode::Simplified => Method::AirySimplified,
        }
    }
}

/// Approximations of Ai(−x) for x > 0.
pub fn airy_approx(x: f64, mode: AiryMode) -> Result<ApproxValue> {
    check_x("airy_approx", x)?;
    let rpi = PI.sqrt();
    let x32 = x * x.sqrt();
    let (value, half_width, rounding) = match mode {
        AiryMode::Classic => {
            let amp = 1.0 / (rpi * x.powf(0.25));
            let phase = 2.0 * x32 / 3.0 - FRAC_PI_4;
            (
                amp * phase.cos(),
                5.0 / (6.0 * 3f64.sqrt() * PI.powf(1.5) * x.powf(1.75)),
                cos_rounding(amp, phase),
            )
        }
        AiryMode::Sharp | AiryMode::Simplified => {
            let w = 16.0 * x * x * x + 5.0;
            let amp = 2.0 * x.sqrt() / (rpi * w.powf(0.25));
            let (phase, hw) = if mode == AiryMode::Sharp {
                let s = w.sqrt();
                let r5 = 5f64.sqrt();
                (
                    s / 6.0 - r5 / 6.0 * ((s + r5) / (4.0 * x32)).ln() - FRAC_PI_4,
                    10.0 * 3f64.sqrt() / (rpi * x.powf(0.25) * w.powf(1.5)),
                )
            } else {
                (
                    2.0 * x32 / 3.0 - 5.0 / (48.0 * x32) - FRAC_PI_4,
                    5.0 / (9.0 * rpi * x.powi(4) * w.powf(0.25)),
                )
            };
            (amp * phase.cos(), hw, cos_rounding(amp, phase))
        }
    };
    Ok(ApproxValue {
        value,
        half_width,
        rounding,
        method: mode.method(),
        region: Region::Oscillatory,
        x,
    })
}

/// Smallest admissible truncation orders for the inverse-power expansion.
pub fn olver_min_orders(nu: f64) -> (usize, usize) {
    let l1 = (nu / 2.0 - 0.25).max(1.0).ceil() as usize;
    let l2 = (nu / 2.0 - 0.75).max(1.0).ceil() as usize;
    (l1, l2)
}

/// Every Bessel approximation that applies at (ν, x), in tie-break order.
pub fn applicable(order: &Order, x: f64, oracle: &Oracle) -> Vec<ApproxValue> {
    let nu = order.nu();
    let mut out = Vec::new();
    if let Ok(a) = sharper_oscillatory(order, x) {
        out.push(a);
    }
    if let Ok(a) = simplified_oscillatory(order, x) {
        out.push(a);
    }
    if nu >= 0.0 {
        let (l1, l2) = olver_min_orders(nu);
        if let Ok(a) = olver_expansion(order, x, l1, l2) {
            out.push(a);
        }
    }
    if let Ok(a) = classic_oscillatory(order, x) {
        out.push(a);
    }
    if nu >= 0.5 && x >= nu {
        let z = (x - nu) / nu.cbrt();
        if let Ok(a) = transition(order, z, oracle) {
            out.push(a);
        }
    }
    out
}

/// The applicable approximation with the smallest half-width. The
/// inverse-power expansion is used at its smallest admissible orders.
pub fn best_approx(order: &Order, x: f64, oracle: &Oracle) -> Result<ApproxValue> {
    check_x("best_approx", x)?;
    let mut best: Option<ApproxValue> = None;
    for a in applicable(order, x, oracle) {
        if best.is_none_or(|b| a.half_width < b.half_width) {
            best = Some(a);
        }
    }
    best.ok_or_else(|| domain("best_approx", format!("no method applies to order {}", order.nu())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ord(nu: f64) -> Order {
        Order::new(nu).unwrap()
    }

    fn assert_certified(a: &ApproxValue, o: &Oracle, nu: f64) {
        let t = o.j(nu, a.x).unwrap();
        assert!(
            a.certifies(t.value, t.abs_err_estimate),
            "{} nu={nu} x={}: |{} - {}| > {}",
            a.method,
            a.x,
            a.value,
            t.value,
            a.half_width
        );
    }

    #[test]
    fn half_order_is_exact_everywhere() {
        let o = Oracle::default();
        for &x in &[0.3, 3.0, 41.0] {
            let exact = (2.0 / (PI * x)).sqrt() * x.sin();
            for a in [
                classic_oscillatory(&ord(0.5), x).unwrap(),
                sharper_oscillatory(&ord(0.5), x).unwrap(),
                simplified_oscillatory(&ord(0.5), x).unwrap(),
                olver_expansion(&ord(0.5), x, 1, 1).unwrap(),
            ] {
                assert_eq!(a.half_width, 0.0);
                assert!((a.value - exact).abs() < 1e-13, "{}", a.method);
                assert!((a.value - o.j(0.5, x).unwrap().value).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn classic_constant_table() {
        let o = Oracle::default();
        let a = classic_oscillatory(&ord(0.0), 10.0).unwrap();
        assert!((a.half_width - (2.0 / PI).powf(1.5) * 0.25 * 10f64.powf(-1.5)).abs() < 1e-17);
        assert_certified(&a, &o, 0.0);
        let b = classic_oscillatory(&ord(3.0), 2.0).unwrap();
        assert!((b.half_width - 1.25 * 8.75 * 2f64.powf(-1.5)).abs() < 1e-14);
        assert_certified(&b, &o, 3.0);
        let c = classic_oscillatory(&ord(3.0), 3.0).unwrap();
        assert!((c.half_width - SQRT_2 / 2.0 * 8.75 * 3f64.powf(-1.5)).abs() < 1e-14);
        assert!(classic_oscillatory(&ord(0.0), 0.0).is_err());
        assert!(classic_oscillatory(&ord(-0.75), 1.0).is_err());
    }

    #[test]
    fn olver_coefficients_basics() {
        let a = olver_coefficients(0.0, 3);
        assert_eq!(a[0], 1.0);
        assert_eq!(a[1], 0.125);
        let b = olver_coefficients(0.5, 6);
        assert!(b[1..].iter().all(|&v| v == 0.0));
        let nu = 1.7;
        assert!((olver_coefficients(nu, 1)[1] - (0.25 - nu * nu) / 2.0).abs() < 1e-15);
    }

    #[test]
    fn olver_sign_calibration() {
        let o = Oracle::default();
        assert_eq!(calibrate_olver_signs(&o).unwrap(), Some(OlverSigns::Alternating));
        let printed = olver_expansion_with(OlverSigns::Uniform, &ord(0.0), 20.0, 3, 3).unwrap();
        let t = o.j(0.0, 20.0).unwrap().value;
        assert!((printed.value - t).abs() > printed.half_width);
        let a = olver_expansion(&ord(0.0), 10.0, 2, 2).unwrap();
        assert_certified(&a, &o, 0.0);
    }

    #[test]
    fn olver_rejects_small_orders() {
        assert!(olver_expansion(&ord(0.0), 5.0, 0, 1).is_err());
        assert!(olver_expansion(&ord(6.0), 5.0, 2, 3).is_err());
        assert!(olver_expansion(&ord(6.0), 5.0, 3, 3).is_ok());
        assert_eq!(olver_min_orders(6.0), (3, 3));
    }

    #[test]
    fn phase_derivative_matches_frequency() {
        let h = 1e-4;
        for &(nu, x) in &[(0.0, 1.0), (2.0, 4.0), (1.0 / 3.0, 0.2), (10.0, 30.0)] {
            let o = ord(nu);
            let fd = (phase_b(&o, x + h).unwrap().big_b - phase_b(&o, x - h).unwrap().big_b) / (2.0 * h);
            assert!((fd - phase_b(&o, x).unwrap().b).abs() < 1e-6, "nu={nu} x={x}");
        }
        let p = phase_b(&ord(0.0), 1.0).unwrap();
        assert!((p.big_b - (1.25f64.sqrt() + 0.5 * (1.0 / (0.5 + 1.25f64.sqrt())).ln())).abs() < 1e-15);
        assert_eq!(phase_b(&ord(0.5), 2.5).unwrap(), PhaseValue { big_b: 2.5, b: 1.0 });
        assert!(phase_b(&ord(2.0), 1.9).is_err());
    }

    #[test]
    fn sharper_examples() {
        let o = Oracle::default();
        let a = sharper_oscillatory(&ord(0.0), 2.0).unwrap();
        assert!((a.half_width - 0.25 / ((4.0 * PI).sqrt() * 4.25f64.powf(1.5))).abs() < 1e-17);
        assert_certified(&a, &o, 0.0);
        let b = sharper_oscillatory(&ord(2.0), 5.0).unwrap();
        let hw = 13.0 * 3.75 / (12.0 * (2.0 * PI).sqrt() * 21.25f64.powf(1.75));
        assert!((b.half_width - hw).abs() < 1e-16);
        assert_eq!(b.method, Method::SharpHigh);
        assert_certified(&b, &o, 2.0);
        assert!(sharper_oscillatory(&ord(2.0), 3.7).is_err());
        // μ = 3/4 < √μ: the phase needs x > √μ
        assert!(sharper_oscillatory(&ord(1.0), 0.8).is_err());
    }

    #[test]
    fn simplified_examples() {
        let o = Oracle::default();
        assert_certified(&simplified_oscillatory(&ord(0.0), 5.0).unwrap(), &o, 0.0);
        assert_certified(&simplified_oscillatory(&ord(1.0 / 3.0), 1.0).unwrap(), &o, 1.0 / 3.0);
        assert!(simplified_oscillatory(&ord(0.75), 1.0).is_err());
    }

    #[test]
    fn width_ordering_low_orders() {
        for &nu in &[0.0, 0.2, 1.0 / 3.0, -0.4] {
            let mut x = 5.0;
            while x < 200.0 {
                let s = sharper_oscillatory(&ord(nu), x).unwrap().half_width;
                let m = simplified_oscillatory(&ord(nu), x).unwrap().half_width;
                let c = classic_oscillatory(&ord(nu), x).unwrap().half_width;
                assert!(s < m && m < c, "nu={nu} x={x}");
                x *= 1.3;
            }
        }
    }

    #[test]
    fn transition_examples() {
        let o = Oracle::default();
        let a = transition(&ord(10.0), 0.0, &o).unwrap();
        assert_eq!(a.x, 10.0);
        assert!((a.half_width - 23.0 / (2.0 * 10f64.powf(2.0 / 3.0) * 10f64.cbrt())).abs() < 1e-14);
        assert_certified(&a, &o, 10.0);
        let b = transition(&ord(25.0), 1.0, &o).unwrap();
        assert_certified(&b, &o, 25.0);
        let gamma = 2.338_107_410_459_767 / 2f64.cbrt();
        let g = transition(&ord(5.0), gamma, &o).unwrap();
        assert!(g.value.abs() < 1e-12);
        assert!(transition(&ord(5.0), -0.1, &o).is_err());
        assert!(transition(&ord(0.25), 1.0, &o).is_err());
    }

    #[test]
    fn airy_examples() {
        let o = Oracle::default();
        let a1 = 2.338_107_410_459_767;
        let s = airy_approx(a1, AiryMode::Sharp).unwrap();
        assert!(s.value.abs() <= s.half_width);
        let c = airy_approx(10.0, AiryMode::Classic).unwrap();
        let hw = 5.0 / (6.0 * 3f64.sqrt() * PI.powf(1.5) * 10f64.powf(1.75));
        assert!((c.half_width - hw).abs() < 1e-18);
        assert!(c.certifies(o.airy(10.0).unwrap().value, 0.0));
        let m = airy_approx(4.0, AiryMode::Simplified).unwrap();
        assert!((m.half_width - 5.0 / (9.0 * PI.sqrt() * 256.0 * 1029f64.powf(0.25))).abs() < 1e-18);
        assert!(m.certifies(o.airy(4.0).unwrap().value, 0.0));
        assert!(airy_approx(10.0, AiryMode::Sharp).unwrap().half_width < 1e-5);
        assert!(airy_approx(0.0, AiryMode::Classic).is_err());
    }

    #[test]
    fn airy_widths_decrease() {
        for mode in [AiryMode::Classic, AiryMode::Sharp, AiryMode::Simplified] {
            let mut prev = f64::INFINITY;
            for i in 0..1000 {
                let x = 1.0 + 99.0 * i as f64 / 999.0;
                let hw = airy_approx(x, mode).unwrap().half_width;
                assert!(hw < prev, "{mode:?} x={x}");
                prev = hw;
            }
        }
    }

    #[test]
    fn best_approx_choices() {
        let o = Oracle::default();
        assert_eq!(best_approx(&ord(0.5), 3.0, &o).unwrap().half_width, 0.0);
        assert_eq!(best_approx(&ord(0.0), 50.0, &o).unwrap().method, Method::SharpLow);
        let b = best_approx(&ord(10.0), 10.5, &o).unwrap();
        let t = transition(&ord(10.0), 0.5 / 10f64.cbrt(), &o).unwrap();
        assert!(b.half_width <= t.half_width);
        assert_certified(&b, &o, 10.0);
    }

    #[test]
    fn method_tags_round_trip() {
        for m in Method::ALL {
            assert_eq!(m.as_str().parse::<Method>().unwrap(), m);
        }
        assert!("bogus".parse::<Method>().is_err());
    }
}
