//! Inequalities for J_ν, J′_ν and Ai(−x), each evaluated with oracle values
//! into a [`BoundReport`].
//!
//! A strict inequality holds only if its margin exceeds the combined error
//! estimate of the values involved; a non-strict one holds if the margin is
//! no worse than minus that estimate.

mod sonin;

use std::f64::consts::{FRAC_2_PI, PI};
use std::fmt;
use std::str::FromStr;

pub use sonin::{monotone_violations, sonin_eval, sonin_series, szego_limit, SoninSample, SoninVariant};

use crate::error::{domain, Error, Result};
use crate::oracle::gamma::ln_gamma_fixed;
use crate::oracle::{self, quad_panels, refine_root, Oracle};
use crate::order::Order;
use crate::zeros;

/// α in J_ν(ν) = 2^{1/3}/(3^{2/3} Γ(2/3) (ν + θ²α)^{1/3}).
pub const ALPHA: f64 = 0.094_349_80;
/// c in the Airy envelope (x + c)^{1/4} Ai(−x) < 9/14.
pub fn airy_c() -> f64 {
    15f64.cbrt() * 2f64.powf(-4.0 / 3.0)
}

/// Which inequality a report belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundName {
    Watson,
    LogDerivative,
    LogDerivativeChain,
    MonotonicFirst,
    MonotonicSecond,
    OrderEqualsArgument,
    EnvelopeLow,
    EnvelopeHigh,
    Derivative,
    PsiPositive,
    AiryEnvelope,
    AiryMaxUpper,
    AiryMaxLower,
    WronskianKernel,
    LeftmostMax,
    NearFirstZero,
    NearFirstZeroPositive,
    IntegralSq,
    IntegralAbs,
    Conjecture,
    ZeroGap,
}

impl BoundName {
    pub const ALL: [BoundName; 21] = [
        BoundName::Watson,
        BoundName::LogDerivative,
        BoundName::LogDerivativeChain,
        BoundName::MonotonicFirst,
        BoundName::MonotonicSecond,
        BoundName::OrderEqualsArgument,
        BoundName::EnvelopeLow,
        BoundName::EnvelopeHigh,
        BoundName::Derivative,
        BoundName::PsiPositive,
        BoundName::AiryEnvelope,
        BoundName::AiryMaxUpper,
        BoundName::AiryMaxLower,
        BoundName::WronskianKernel,
        BoundName::LeftmostMax,
        BoundName::NearFirstZero,
        BoundName::NearFirstZeroPositive,
        BoundName::IntegralSq,
        BoundName::IntegralAbs,
        BoundName::Conjecture,
        BoundName::ZeroGap,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            BoundName::Watson => "watson",
            BoundName::LogDerivative => "log_derivative",
            BoundName::LogDerivativeChain => "log_derivative_chain",
            BoundName::MonotonicFirst => "monotonic_first",
            BoundName::MonotonicSecond => "monotonic_second",
            BoundName::OrderEqualsArgument => "order_equals_argument",
            BoundName::EnvelopeLow => "envelope_low",
            BoundName::EnvelopeHigh => "envelope_high",
            BoundName::Derivative => "derivative",
            BoundName::PsiPositive => "psi_positive",
            BoundName::AiryEnvelope => "airy_envelope",
            BoundName::AiryMaxUpper => "airy_max_upper",
            BoundName::AiryMaxLower => "airy_max_lower",
            BoundName::WronskianKernel => "wronskian_kernel",
            BoundName::LeftmostMax => "leftmost_max",
            BoundName::NearFirstZero => "near_first_zero",
            BoundName::NearFirstZeroPositive => "near_first_zero_positive",
            BoundName::IntegralSq => "integral_sq",
            BoundName::IntegralAbs => "integral_abs",
            BoundName::Conjecture => "conjecture",
            BoundName::ZeroGap => "zero_gap",
        }
    }
}

impl fmt::Display for BoundName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        BoundName::ALL
            .into_iter()
            .find(|b| b.as_str() == s)
            .ok_or_else(|| format!("unknown bound '{s}'"))
    }
}

/// One instance of `lhs < rhs` (or `lhs ≤ rhs`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub name: BoundName,
    pub nu: f64,
    pub x: f64,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// Error estimate of `lhs` and `rhs` combined.
    pub err: f64,
    pub strict: bool,
    pub holds: bool,
}

impl BoundReport {
    pub fn new(name: BoundName, nu: f64, x: f64, lhs: f64, rhs: f64, err: f64, strict: bool) -> Self {
        let margin = rhs - lhs;
        // rounding of the closed-form side
        let err = err + 8.0 * f64::EPSILON * lhs.abs().max(rhs.abs());
        let holds = lhs.is_finite() && rhs.is_finite() && if strict { margin > err } else { margin >= -err };
        Self {
            name,
            nu,
            x,
            lhs,
            rhs,
            margin,
            err,
            strict,
            holds,
        }
    }
}

fn check_x(op: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain(op, format!("x must be positive, got {x}")));
    }
    Ok(())
}

/// ln Γ(z) in double precision.
fn ln_gamma(z: f64) -> Result<f64> {
    Ok(ln_gamma_fixed(z, 120)?.to_f64())
}

/// J_ν(x) ≤ |x|^ν / (2^ν Γ(ν+1)).
pub fn bound_watson(order: &Order, x: f64, oracle: &Oracle) -> Result<BoundReport> {
    check_x("bound_watson", x)?;
    let nu = order.nu();
    let j = oracle.j(nu, x)?;
    let rhs = (nu * (x / 2.0).ln() - ln_gamma(nu + 1.0)?).exp();
    Ok(BoundReport::new(
        BoundName::Watson,
        nu,
        x,
        j.value,
        rhs,
        j.abs_err_estimate,
        false,
    ))
}

/// |x² − μ|^{1/4}|J_ν(x)| < √(2/π) for ν > 1/2, and the Szegő bound
/// |J_ν(x)| ≤ √(2/(πx)) for |ν| ≤ 1/2. Both are reported normalized to 1.
pub fn bound_envelope(order: &Order, x: f64, oracle: &Oracle) -> Result<BoundReport> {
    check_x("bound_envelope", x)?;
    let nu = order.nu();
    let j = oracle.j(nu, x)?;
    if order.is_low() {
        let k = (PI * x / 2.0).sqrt();
        Ok(BoundReport::new(
            BoundName::EnvelopeLow,
            nu,
            x,
            k * j.value.abs(),
            1.0,
            k * j.abs_err_estimate,
            false,
        ))
    } else if nu > 0.5 {
        let d = (x * x - order.mu()).abs();
        if d <= 4.0 * f64::EPSILON * order.mu() {
            return Err(domain("bound_envelope", "x = sqrt(mu) is the trivial case"));
        }
        let k = d.powf(0.25) * (PI / 2.0).sqrt();
        Ok(BoundReport::new(
            BoundName::EnvelopeHigh,
            nu,
            x,
            k * j.value.abs(),
            1.0,
            k * j.abs_err_estimate,
            true,
        ))
    } else {
        Err(domain("bound_envelope", format!("order must be >= -1/2, got {nu}")))
    }
}

/// ψ(x) = 4(x²−ν²)³ − 3x⁴ − 10x²ν² + ν⁴.
pub fn psi(nu: f64, x: f64) -> f64 {
    let d = x * x - nu * nu;
    4.0 * d * d * d - 3.0 * x.powi(4) - 10.0 * x * x * nu * nu + nu.powi(4)
}

/// Smallest x covered by the derivative bound.
pub fn derivative_threshold(nu: f64) -> f64 {
    nu + (7f64.sqrt() - 1.0) / 2f64.powf(2.0 / 3.0) * nu.cbrt()
}

/// ψ ≥ 0 at x, as a report with lhs = 0 and rhs = ψ(x).
pub fn psi_report(order: &Order, x: f64) -> BoundReport {
    let nu = order.nu();
    let v = psi(nu, x);
    let scale = 4.0 * (x * x + nu * nu).powi(3);
    BoundReport::new(
        BoundName::PsiPositive,
        nu,
        x,
        0.0,
        v,
        16.0 * f64::EPSILON * scale,
        false,
    )
}

/// x ψ^{1/4}/(x² − ν²) |J′_ν(x)| < 2/√π above the threshold, with J′ from
/// the three-term recurrence.
pub fn bound_derivative(order: &Order, x: f64, oracle: &Oracle) -> Result<BoundReport> {
    let nu = order.nu();
    if !(nu >= 0.5) {
        return Err(domain("bound_derivative", format!("order must be >= 1/2, got {nu}")));
    }
    let th = derivative_threshold(nu);
    if !(x >= th) {
        return Err(domain(
            "bound_derivative",
            format!("x = {x} is below the threshold {th}"),
        ));
    }
    let dj = oracle.j_prime(nu, x)?;
    let k = x * psi(nu, x).max(0.0).powf(0.25) / (x * x - nu * nu);
    Ok(BoundReport::new(
        BoundName::Derivative,
        nu,
        x,
        k * dj.value.abs(),
        2.0 / PI.sqrt(),
        k * dj.abs_err_estimate,
        true,
    ))
}

/// 2^{1/3}/(3^{2/3} Γ(2/3)).
fn k_airy() -> f64 {
    2f64.cbrt() / (3f64.powf(2.0 / 3.0) * oracle::gamma(2.0 / 3.0).expect("gamma(2/3)"))
}

/// J_ν(tν) against J_ν(ν) t^ν exp(ν²(1−t²)/(2ν+1)) (≤) and against
/// 2^{1/3} x^ν exp((ν² − x²)/(2ν+1)) / (3^{2/3} Γ(2/3) ν^{ν+1/3}) (<).
pub fn bound_monotonic(order: &Order, t: f64, oracle: &Oracle) -> Result<[BoundReport; 2]> {
    let nu = order.nu();
    if !(nu > 0.0) {
        return Err(domain("bound_monotonic", format!("order must be positive, got {nu}")));
    }
    if !(t > 0.0 && t <= 1.0) {
        return Err(domain("bound_monotonic", format!("t must lie in (0, 1], got {t}")));
    }
    let x = t * nu;
    let lhs = oracle.j(nu, x)?;
    let at_nu = oracle.j(nu, nu)?;
    let growth = (nu * t.ln() + nu * nu * (1.0 - t * t) / (2.0 * nu + 1.0)).exp();
    let first = BoundReport::new(
        BoundName::MonotonicFirst,
        nu,
        x,
        lhs.value,
        at_nu.value * growth,
        lhs.abs_err_estimate + at_nu.abs_err_estimate * growth,
        false,
    );
    let second = BoundReport::new(
        BoundName::MonotonicSecond,
        nu,
        x,
        lhs.value,
        k_airy() * growth / nu.cbrt(),
        lhs.abs_err_estimate,
        true,
    );
    Ok([first, second])
}

/// The one-sided bracket K/(ν+α)^{1/3} < J_ν(ν) ≤ K/ν^{1/3} as two reports.
pub fn order_equals_argument(order: &Order, oracle: &Oracle) -> Result<[BoundReport; 2]> {
    let nu = order.nu();
    if !(nu > 0.0) {
        return Err(domain(
            "order_equals_argument",
            format!("order must be positive, got {nu}"),
        ));
    }
    let j = oracle.j(nu, nu)?;
    let k = k_airy();
    Ok([
        BoundReport::new(
            BoundName::OrderEqualsArgument,
            nu,
            nu,
            k / (nu + ALPHA).cbrt(),
            j.value,
            j.abs_err_estimate,
            true,
        ),
        BoundReport::new(
            BoundName::OrderEqualsArgument,
            nu,
            nu,
            j.value,
            k / nu.cbrt(),
            j.abs_err_estimate,
            false,
        ),
    ])
}

/// With t = 𝒥′_ν/𝒥_ν for 𝒥_ν = x^{−ν}J_ν: the chain
/// t ≥ (√((2ν+1)² − 4x²) − 2ν − 1)/(2x) ≥ −2x/(2ν+1) on 0 < x ≤ ν + 1/2.
pub fn bound_log_derivative(order: &Order, x: f64, oracle: &Oracle) -> Result<[BoundReport; 2]> {
    check_x("bound_log_derivative", x)?;
    let nu = order.nu();
    if !(nu >= -0.5) || x > nu + 0.5 {
        return Err(domain(
            "bound_log_derivative",
            format!("need nu >= -1/2 and x <= nu + 1/2, got nu = {nu}, x = {x}"),
        ));
    }
    let p = oracle.pair(nu, x)?;
    // J_ν > 0 on (0, x] exactly when x lies below the first zero
    if !(p.j.value > p.j.abs_err_estimate) {
        return Err(Error::ZeroCrossing { nu, x });
    }
    let t = p.dj.value / p.j.value - nu / x;
    let t_err = (p.dj.abs_err_estimate + (p.dj.value / p.j.value).abs() * p.j.abs_err_estimate) / p.j.value;
    let s = 2.0 * nu + 1.0;
    let middle = ((s * s - 4.0 * x * x).sqrt() - s) / (2.0 * x);
    let lower = -2.0 * x / s;
    Ok([
        BoundReport::new(BoundName::LogDerivative, nu, x, middle, t, t_err, false),
        BoundReport::new(BoundName::LogDerivativeChain, nu, x, lower, middle, 0.0, false),
    ])
}

/// f(x) = (x + c)^{1/4} Ai(−x) and its derivative.
pub fn airy_envelope_fn(x: f64, oracle: &Oracle) -> Result<(f64, f64, f64)> {
    let c = airy_c();
    let a = oracle.airy_pair(x)?;
    let w = (x + c).powf(0.25);
    let f = w * a.ai.value;
    let df = 0.25 * a.ai.value / (w * w * w) + w * a.dai.value;
    Ok((f, df, w * a.ai.abs_err_estimate))
}

/// (x + c)^{1/4} Ai(−x) < 9/14 for x ≥ 0.
pub fn bound_airy_envelope(x: f64, oracle: &Oracle) -> Result<BoundReport> {
    if !(x >= 0.0) {
        return Err(domain("bound_airy_envelope", format!("x must be >= 0, got {x}")));
    }
    let (f, err) = if x == 0.0 {
        (airy_c().powf(0.25) * crate::approx::airy_at_origin(), 1e-15)
    } else {
        let (f, _, e) = airy_envelope_fn(x, oracle)?;
        (f, e)
    };
    Ok(BoundReport::new(
        BoundName::AiryEnvelope,
        0.0,
        x,
        f,
        9.0 / 14.0,
        err,
        true,
    ))
}

/// Local maximum of a sampled function, located by a + to − sign change of
/// its derivative and refined on the derivative.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalMax {
    pub x: f64,
    pub value: f64,
}

/// Local maxima of (x + c)^{1/4} Ai(−x) on (0, hi], scanning the derivative
/// sign with the given step.
pub fn airy_envelope_maxima(hi: f64, step: f64, oracle: &Oracle) -> Result<Vec<LocalMax>> {
    let mut out = Vec::new();
    let n = (hi / step).floor() as usize;
    let mut prev_x = step;
    let mut prev_d = airy_envelope_fn(prev_x, oracle)?.1;
    for i in 2..=n {
        let x = i as f64 * step;
        let d = airy_envelope_fn(x, oracle)?.1;
        if prev_d > 0.0 && d <= 0.0 {
            let xm = refine_root(|s| Ok(airy_envelope_fn(s, oracle)?.1), prev_x, x, 1e-11)?;
            out.push(LocalMax {
                x: xm,
                value: airy_envelope_fn(xm, oracle)?.0,
            });
        }
        prev_x = x;
        prev_d = d;
    }
    Ok(out)
}

/// Each local maximum value lies in (1/√π, 9/14): two reports per maximum.
pub fn airy_maxima_reports(maxima: &[LocalMax]) -> Vec<BoundReport> {
    let lo = 1.0 / PI.sqrt();
    let mut out = Vec::with_capacity(2 * maxima.len());
    for m in maxima {
        out.push(BoundReport::new(
            BoundName::AiryMaxUpper,
            0.0,
            m.x,
            m.value,
            9.0 / 14.0,
            1e-13,
            true,
        ));
        out.push(BoundReport::new(
            BoundName::AiryMaxLower,
            0.0,
            m.x,
            lo,
            m.value,
            1e-13,
            true,
        ));
    }
    out
}

/// √(x₁x₂)|J_{−ν}(x₁)J_ν(x₂) − J_{−ν}(x₂)J_ν(x₁)| ≤ (2/π) sin πν.
pub fn bound_wronskian_kernel(nu: f64, x1: f64, x2: f64, oracle: &Oracle) -> Result<BoundReport> {
    if !(0.0..=0.5).contains(&nu) {
        return Err(domain(
            "bound_wronskian_kernel",
            format!("order must lie in [0, 1/2], got {nu}"),
        ));
    }
    let (k, err) = wronskian_kernel(nu, x1, x2, oracle)?;
    let rhs = FRAC_2_PI * (PI * nu).sin();
    Ok(BoundReport::new(
        BoundName::WronskianKernel,
        nu,
        x1,
        k.abs(),
        rhs,
        err,
        false,
    ))
}

/// The signed kernel √(x₁x₂)(J_{−ν}(x₁)J_ν(x₂) − J_{−ν}(x₂)J_ν(x₁)) and its error.
pub fn wronskian_kernel(nu: f64, x1: f64, x2: f64, oracle: &Oracle) -> Result<(f64, f64)> {
    check_x("wronskian_kernel", x1)?;
    check_x("wronskian_kernel", x2)?;
    let a1 = oracle.j(-nu, x1)?;
    let b1 = oracle.j(nu, x1)?;
    let a2 = oracle.j(-nu, x2)?;
    let b2 = oracle.j(nu, x2)?;
    let r = (x1 * x2).sqrt();
    let k = r * (a1.value * b2.value - a2.value * b1.value);
    let err = r
        * (a1.abs_err_estimate * b2.value.abs()
            + b2.abs_err_estimate * a1.value.abs()
            + a2.abs_err_estimate * b1.value.abs()
            + b1.abs_err_estimate * a2.value.abs());
    Ok((k, err))
}

/// 𝓗_ν(x) = |x² − μ|^{1/4} J_ν(x) and its derivative, off x = √μ.
pub fn h_fn(order: &Order, x: f64, oracle: &Oracle) -> Result<(f64, f64)> {
    let nu = order.nu();
    let p = oracle.pair(nu, x)?;
    let d = x * x - order.mu();
    let w = d.abs().powf(0.25);
    let h = w * p.j.value;
    let dh = d.signum() * 0.5 * x * p.j.value / (w * w * w) + w * p.dj.value;
    Ok((h, dh))
}

/// The first positive maximum ξ of 𝓗_ν satisfies ξ > ν√(1 − (2ν)^{−2/3}).
pub fn leftmost_max_check(order: &Order, oracle: &Oracle) -> Result<BoundReport> {
    let nu = order.nu();
    if !(nu >= 5.0 / 3.0 - 1e-12) {
        return Err(domain("leftmost_max_check", format!("order must be >= 5/3, got {nu}")));
    }
    let xi = first_h_maximum(order, oracle, 1e-3)?;
    let lhs = nu * (1.0 - (2.0 * nu).powf(-2.0 / 3.0)).sqrt();
    Ok(BoundReport::new(BoundName::LeftmostMax, nu, xi, lhs, xi, 1e-10, true))
}

/// First point where 𝓗′_ν changes sign from + to −, scanning with `step`.
pub fn first_h_maximum(order: &Order, oracle: &Oracle, step: f64) -> Result<f64> {
    let root_mu = order.mu().sqrt();
    let limit = root_mu + 5.0;
    let mut prev_x = step;
    let mut prev_d = h_fn(order, prev_x, oracle)?.1;
    let mut i = 2usize;
    loop {
        let x = i as f64 * step;
        if x > limit {
            return Err(Error::ScanFailure(format!(
                "no maximum of H_nu below {limit} for order {}",
                order.nu()
            )));
        }
        if (x - root_mu).abs() < 1e-12 {
            i += 1;
            continue;
        }
        let d = h_fn(order, x, oracle)?.1;
        if prev_d > 0.0 && d <= 0.0 {
            return refine_root(|s| Ok(h_fn(order, s, oracle)?.1), prev_x, x, 1e-11);
        }
        prev_x = x;
        prev_d = d;
        i += 1;
    }
}

/// γ = 2^{−1/3} a₁ with a₁ the refined first zero of Ai(−x).
pub fn gamma_const(oracle: &Oracle) -> Result<f64> {
    Ok(zeros::refine_airy_zero(1, oracle)? / 2f64.cbrt())
}

/// 0 < J_ν(ν + γν^{1/3}) < 7/(6ν) for ν ≥ 1/2, as two reports.
pub fn bound_near_first_zero(order: &Order, oracle: &Oracle) -> Result<[BoundReport; 2]> {
    let nu = order.nu();
    if !(nu >= 0.5) {
        return Err(domain(
            "bound_near_first_zero",
            format!("order must be >= 1/2, got {nu}"),
        ));
    }
    let x = nu + gamma_const(oracle)? * nu.cbrt();
    let j = oracle.j(nu, x)?;
    Ok([
        BoundReport::new(
            BoundName::NearFirstZero,
            nu,
            x,
            j.value,
            7.0 / (6.0 * nu),
            j.abs_err_estimate,
            true,
        ),
        BoundReport::new(
            BoundName::NearFirstZeroPositive,
            nu,
            x,
            0.0,
            j.value,
            j.abs_err_estimate,
            true,
        ),
    ])
}

/// Truncation point: K full periods with Kπ ≥ 10⁶.
const INTEGRAL_PERIODS: usize = 318_310;

/// ∫₀^∞ sin²t/(t+x)² dt < 1/(2x) and ∫₀^∞ |sin t|/(t+x)² dt < 2/(πx).
///
/// Both integrals are taken over [0, Kπ] panel by panel. The remainder over
/// [Kπ, ∞) is bounded by summing the per-period mass, π/2 and 2, against the
/// period's largest weight 1/(x + kπ)², and comparing the sum with an integral.
pub fn lemma_integral_check(x: f64) -> Result<[BoundReport; 2]> {
    check_x("lemma_integral_check", x)?;
    let t_max = INTEGRAL_PERIODS as f64 * PI;
    let pts: Vec<f64> = (0..=INTEGRAL_PERIODS).map(|k| k as f64 * PI).collect();
    let tol = 1e-11 / x.max(1.0);
    let sq = quad_panels(|t| (t.sin() / (t + x)).powi(2), &pts, tol)?;
    let ab = quad_panels(|t| t.sin().abs() / ((t + x) * (t + x)), &pts, tol)?;
    let u = x + t_max;
    let tail_sq = PI / 2.0 / (u * u) + 0.5 / u;
    let tail_abs = 2.0 / (u * u) + 2.0 / (PI * u);
    Ok([
        BoundReport::new(
            BoundName::IntegralSq,
            0.0,
            x,
            sq.value + tail_sq,
            0.5 / x,
            sq.abs_err + 1e-15,
            true,
        ),
        BoundReport::new(
            BoundName::IntegralAbs,
            0.0,
            x,
            ab.value + tail_abs,
            FRAC_2_PI / x,
            ab.abs_err + 1e-15,
            true,
        ),
    ])
}
