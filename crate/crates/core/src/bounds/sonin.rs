//! Sonin functions S = g² + g′²/weight for three normal forms g″ + … = 0.
//! Where the weight's derivative has a fixed sign, S is monotone and majorizes g².

use std::f64::consts::PI;

use super::{airy_c, airy_envelope_fn, h_fn};
use crate::approx::airy_at_origin;
use crate::error::{domain, Result};
use crate::oracle::{self, Oracle};
use crate::order::Order;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoninVariant {
    /// x y² + x²/(x² − ν² + 1/4) ((√x y)′)², for |ν| ≤ 1/2; nondecreasing.
    Szego,
    /// 𝓗² + 4x²(x²−μ)²/(4(x²−μ)³ + (6x²−μ)μ) 𝓗′², for ν > 1/2, x > √μ; nondecreasing.
    Envelope,
    /// f² + f′²/(x + 5/(16(c+x)²)) with f = (x+c)^{1/4} Ai(−x); nonincreasing for x ≥ 0.
    Airy,
}

impl SoninVariant {
    pub fn as_str(self) -> &'static str {
        match self {
            SoninVariant::Szego => "szego",
            SoninVariant::Envelope => "envelope",
            SoninVariant::Airy => "airy",
        }
    }

    /// Direction of monotonicity on the variant's domain.
    pub fn increasing(self) -> bool {
        !matches!(self, SoninVariant::Airy)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SoninSample {
    pub x: f64,
    pub s: f64,
    pub variant: SoninVariant,
}

pub fn sonin_eval(variant: SoninVariant, order: &Order, x: f64, oracle: &Oracle) -> Result<SoninSample> {
    let s = match variant {
        SoninVariant::Szego => {
            if !order.is_low() || !(x > 0.0) {
                return Err(domain("sonin_eval", "szego variant needs |nu| <= 1/2 and x > 0"));
            }
            let p = oracle.pair(order.nu(), x)?;
            let y = p.j.value;
            let rx = x.sqrt();
            let dg = y / (2.0 * rx) + rx * p.dj.value;
            x * y * y + x * x / (x * x - order.shift()) * dg * dg
        }
        SoninVariant::Envelope => {
            let mu = order.mu();
            if !(order.nu() > 0.5) || !(x > mu.sqrt()) {
                return Err(domain("sonin_eval", "envelope variant needs nu > 1/2 and x > sqrt(mu)"));
            }
            let (h, dh) = h_fn(order, x, oracle)?;
            let d = x * x - mu;
            let w = 4.0 * x * x * d * d / (4.0 * d * d * d + (6.0 * x * x - mu) * mu);
            h * h + w * dh * dh
        }
        SoninVariant::Airy => {
            if !(x >= 0.0) {
                return Err(domain("sonin_eval", "airy variant is implemented for x >= 0"));
            }
            let c = airy_c();
            let (f, df) = if x == 0.0 {
                // Ai′(0) = −1/(3^{1/3} Γ(1/3)), so d/dx Ai(−x) at 0 is its negative
                let dai = 1.0 / (3f64.cbrt() * oracle::gamma(1.0 / 3.0)?);
                let w = c.powf(0.25);
                let ai = airy_at_origin();
                (w * ai, 0.25 * ai / (w * w * w) + w * dai)
            } else {
                let (f, df, _) = airy_envelope_fn(x, oracle)?;
                (f, df)
            };
            f * f + df * df / (x + 5.0 / (16.0 * (c + x) * (c + x)))
        }
    };
    Ok(SoninSample { x, s, variant })
}

pub fn sonin_series(variant: SoninVariant, order: &Order, xs: &[f64], oracle: &Oracle) -> Result<Vec<SoninSample>> {
    xs.iter().map(|&x| sonin_eval(variant, order, x, oracle)).collect()
}

/// Indices `i` where the step from sample `i` to `i + 1` goes the wrong way
/// by more than `slack`.
pub fn monotone_violations(samples: &[SoninSample], increasing: bool, slack: f64) -> Vec<usize> {
    samples
        .windows(2)
        .enumerate()
        .filter(|(_, w)| {
            if increasing {
                w[1].s < w[0].s - slack
            } else {
                w[1].s > w[0].s + slack
            }
        })
        .map(|(i, _)| i)
        .collect()
}

/// Limit of the Szegő variant for J_ν as x → ∞.
pub fn szego_limit() -> f64 {
    2.0 / PI
}
