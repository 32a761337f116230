//! Ground-truth evaluation of J_ν, J′_ν and Ai(−x) by power series carried in
//! big-integer fixed point, plus the root finder and quadrature used to check
//! everything else against it.

pub mod fixed;
pub mod gamma;
mod quad;
mod roots;
pub mod series;

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

pub use quad::{quad, quad_panels, QuadResult};
pub use roots::refine_root;
pub use series::{BesselPair, SeriesEvaluator};

use crate::error::{domain, Result};
use crate::order::{EvalResult, Order, PrecisionCtx};

/// Largest argument accepted by the public J_ν entry points.
pub const J_X_MAX: f64 = 200.0;
/// Largest argument accepted by the Ai(−x) entry points.
pub const AIRY_X_MAX: f64 = 120.0;

/// Γ(z) rounded to double. The internal evaluation carries 200 bits.
pub fn gamma(z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 64.0) {
        return Err(domain("gamma", format!("argument must lie in (0, 64), got {z}")));
    }
    Ok(gamma::gamma_fixed(z, 200)?.to_f64())
}

/// ζ = 2x^{3/2}/3, the Bessel argument behind Ai(−x).
#[inline]
pub fn airy_zeta(x: f64) -> f64 {
    2.0 * x * x.sqrt() / 3.0
}

/// Ai(−x) together with its x-derivative d/dx[Ai(−x)] = −Ai′(−x).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryPair {
    pub ai: EvalResult,
    pub dai: EvalResult,
}

/// Series oracle that keeps one evaluator per order, so ln Γ(ν+1) is computed
/// once per order rather than once per point.
#[derive(Debug)]
pub struct Oracle {
    ctx: PrecisionCtx,
    cache: Mutex<HashMap<u64, Arc<SeriesEvaluator>>>,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new(PrecisionCtx::default())
    }
}

impl Clone for Oracle {
    fn clone(&self) -> Self {
        Self::new(self.ctx)
    }
}

impl Oracle {
    pub fn new(ctx: PrecisionCtx) -> Self {
        Self {
            ctx,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn ctx(&self) -> PrecisionCtx {
        self.ctx
    }

    fn evaluator(&self, nu: f64, x: f64) -> Result<Arc<SeriesEvaluator>> {
        let key = (nu + 0.0).to_bits();
        let mut cache = self.cache.lock().expect("oracle cache poisoned");
        if let Some(ev) = cache.get(&key) {
            if ev.x_cap() >= x {
                return Ok(Arc::clone(ev));
            }
        }
        let ev = Arc::new(SeriesEvaluator::new(nu, x.max(J_X_MAX), self.ctx)?);
        cache.insert(key, Arc::clone(&ev));
        Ok(ev)
    }

    /// J_ν(x) and J′_ν(x) from one series pass, without the public argument cap.
    pub(crate) fn pair_uncapped(&self, nu: f64, x: f64) -> Result<BesselPair> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(domain("bessel_j_ref", format!("x must be positive, got {x}")));
        }
        self.evaluator(nu, x)?.eval(x)
    }

    /// J_ν(x) and J′_ν(x) from one series pass.
    pub fn pair(&self, nu: f64, x: f64) -> Result<BesselPair> {
        if !(nu >= -0.5) {
            return Err(domain("bessel_j_ref", format!("order must be >= -1/2, got {nu}")));
        }
        if x > J_X_MAX {
            return Err(domain("bessel_j_ref", format!("x must be <= {J_X_MAX}, got {x}")));
        }
        self.pair_uncapped(nu, x)
    }

    pub fn j(&self, nu: f64, x: f64) -> Result<EvalResult> {
        Ok(self.pair(nu, x)?.j)
    }

    /// J′_ν(x) = (J_{ν−1}(x) − J_{ν+1}(x)) / 2, for ν ≥ 1/2.
    pub fn j_prime(&self, nu: f64, x: f64) -> Result<EvalResult> {
        if !(nu >= 0.5) {
            return Err(domain("bessel_j_prime_ref", format!("order must be >= 1/2, got {nu}")));
        }
        let lo = self.j(nu - 1.0, x)?;
        let hi = self.j(nu + 1.0, x)?;
        let value = 0.5 * (lo.value - hi.value);
        Ok(EvalResult {
            value,
            abs_err_estimate: 0.5 * (lo.abs_err_estimate + hi.abs_err_estimate) + value.abs() * f64::EPSILON,
        })
    }

    /// Ai(−x) = (√x/3)(J_{−1/3}(ζ) + J_{1/3}(ζ)) and its x-derivative.
    pub fn airy_pair(&self, x: f64) -> Result<AiryPair> {
        if !(x > 0.0) || !(x <= AIRY_X_MAX) {
            return Err(domain(
                "airy_ai_neg_ref",
                format!("x must lie in (0, {AIRY_X_MAX}], got {x}"),
            ));
        }
        let zeta = airy_zeta(x);
        let m = self.pair_uncapped(-1.0 / 3.0, zeta)?;
        let p = self.pair_uncapped(1.0 / 3.0, zeta)?;
        let rx = x.sqrt();
        let sum = m.j.value + p.j.value;
        let dsum = m.dj.value + p.dj.value;
        let ai = rx / 3.0 * sum;
        let dai = sum / (6.0 * rx) + x / 3.0 * dsum;
        // ζ carries one rounding, which moves J by |J′| ζ ε
        let zeta_err = zeta * f64::EPSILON * (m.dj.value.abs() + p.dj.value.abs());
        let ai_err = rx / 3.0 * (m.j.abs_err_estimate + p.j.abs_err_estimate + zeta_err) + ai.abs() * f64::EPSILON;
        let dai_err = (m.j.abs_err_estimate + p.j.abs_err_estimate + zeta_err) / (6.0 * rx)
            + x / 3.0 * (m.dj.abs_err_estimate + p.dj.abs_err_estimate + zeta_err * zeta)
            + dai.abs() * f64::EPSILON;
        Ok(AiryPair {
            ai: EvalResult {
                value: ai,
                abs_err_estimate: ai_err,
            },
            dai: EvalResult {
                value: dai,
                abs_err_estimate: dai_err,
            },
        })
    }

    pub fn airy(&self, x: f64) -> Result<EvalResult> {
        Ok(self.airy_pair(x)?.ai)
    }
}

/// J_ν(x) for ν ≥ −1/2 and 0 < x ≤ 200.
pub fn bessel_j_ref(order: &Order, x: f64, ctx: PrecisionCtx) -> Result<EvalResult> {
    Oracle::new(ctx).j(order.nu(), x)
}

/// J′_ν(x) via the recurrence (J_{ν−1} − J_{ν+1})/2, for ν ≥ 1/2.
pub fn bessel_j_prime_ref(order: &Order, x: f64, ctx: PrecisionCtx) -> Result<EvalResult> {
    Oracle::new(ctx).j_prime(order.nu(), x)
}

/// Ai(−x) for 0 < x ≤ 120.
pub fn airy_ai_neg_ref(x: f64, ctx: PrecisionCtx) -> Result<EvalResult> {
    Oracle::new(ctx).airy(x)
}

#[cfg(test)]
mod tests;
