use std::f64::consts::{FRAC_PI_2, FRAC_PI_4};

use crate::error::{domain, Result};

/// Bessel order ν together with the two derived quantities every error term
/// is written in: μ = |ν² − 1/4| and the phase shift ω_ν = πν/2 + π/4.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Order {
    nu: f64,
    mu: f64,
    omega: f64,
}

impl Order {
    pub fn new(nu: f64) -> Result<Self> {
        if !nu.is_finite() {
            return Err(domain("Order::new", format!("order must be finite, got {nu}")));
        }
        Ok(Self {
            nu,
            mu: (nu * nu - 0.25).abs(),
            omega: FRAC_PI_2 * nu + FRAC_PI_4,
        })
    }

    #[inline]
    pub fn nu(&self) -> f64 {
        self.nu
    }

    #[inline]
    pub fn mu(&self) -> f64 {
        self.mu
    }

    #[inline]
    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// `true` for |ν| ≤ 1/2, where ν² − 1/4 ≤ 0 and J_ν has no monotonicity region.
    #[inline]
    pub fn is_low(&self) -> bool {
        self.nu.abs() <= 0.5
    }

    /// Coefficient of the normal form f'' + (1 − (ν² − 1/4)/x²) f = 0 as signed
    /// ν² − 1/4 (so x² − `shift()` is x² − ν² + 1/4).
    #[inline]
    pub fn shift(&self) -> f64 {
        self.nu * self.nu - 0.25
    }
}

/// Working-precision request passed by value to the oracle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionCtx {
    /// Floor on the decimal digits carried by the fixed-point series.
    pub working_digits: u32,
    /// Requested relative error of returned values.
    pub target_rel_err: f64,
    /// Refuse evaluations whose precision rule asks for more digits than this.
    pub max_digits: u32,
}

impl PrecisionCtx {
    pub const MIN_DIGITS: u32 = 20;
    pub const MIN_REL_ERR: f64 = 1e-14;

    pub fn new(working_digits: u32, target_rel_err: f64) -> Result<Self> {
        if working_digits < Self::MIN_DIGITS {
            return Err(domain(
                "PrecisionCtx::new",
                format!("working_digits must be >= {}, got {working_digits}", Self::MIN_DIGITS),
            ));
        }
        if !(target_rel_err >= Self::MIN_REL_ERR) {
            return Err(domain(
                "PrecisionCtx::new",
                format!(
                    "target_rel_err must be >= {:e}, got {target_rel_err:e}",
                    Self::MIN_REL_ERR
                ),
            ));
        }
        Ok(Self {
            working_digits,
            target_rel_err,
            max_digits: 1200,
        })
    }

    pub fn with_max_digits(mut self, cap: u32) -> Self {
        self.max_digits = cap;
        self
    }
}

impl Default for PrecisionCtx {
    fn default() -> Self {
        Self {
            working_digits: 40,
            target_rel_err: Self::MIN_REL_ERR,
            max_digits: 1200,
        }
    }
}

/// An oracle value with the oracle's own accuracy estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub abs_err_estimate: f64,
}
