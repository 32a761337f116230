//! Power-series evaluation of J_ν(x) and J′_ν(x) in fixed point.
//!
//! J_ν(x) = (x/2)^ν / Γ(ν+1) · Σ_j t_j,   t_j = (−x²/4)^j / (j! (ν+1)_j)
//! J′_ν(x) = (x/2)^ν / Γ(ν+1) · Σ_j (2j+ν) t_j / x
//!
//! The partial sums reach about e^x before cancelling down to O(1), so the
//! sum is carried with ⌈0.45 x⌉ + 40 decimal digits (plus the decimal size of
//! the prefactor when it exceeds one). The prefactor is applied as
//! 2^k · e^r with r ∈ [0, ln 2) so tiny values keep full relative accuracy.

use std::f64::consts::{LN_10, LN_2};

use num_bigint::BigInt;
use num_traits::One;

use super::fixed::{self, decompose, ldexp, Fixed};
use super::gamma::ln_gamma_fixed;
use crate::error::{domain, Error, Result};
use crate::order::{EvalResult, PrecisionCtx};

/// Decimal digits the series needs at argument `x` for order `nu`.
pub fn required_digits(nu: f64, x: f64) -> u32 {
    let cancellation = (0.45 * x).ceil();
    let prefactor = (nu * (x / 2.0).log10()).max(0.0).ceil();
    (cancellation + 40.0 + prefactor) as u32
}

fn bits_for_digits(d: u32) -> u32 {
    (d as f64 * LN_10 / LN_2).ceil() as u32 + 32
}

/// Exact dyadic pair `(a, q)` with `v = a / 2^q`.
fn dyadic(v: f64) -> (BigInt, u32) {
    let (mant, exp) = decompose(v);
    if exp >= 0 {
        (BigInt::from(mant) << exp as usize, 0)
    } else {
        (BigInt::from(mant), (-exp) as u32)
    }
}

/// J_ν and J′_ν from one pass over the series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselPair {
    pub j: EvalResult,
    pub dj: EvalResult,
    pub digits: u32,
}

/// Series evaluator for one order, holding ln Γ(ν+1) at the precision needed
/// for the largest argument it will be asked about.
#[derive(Debug, Clone)]
pub struct SeriesEvaluator {
    nu: f64,
    x_cap: f64,
    ctx: PrecisionCtx,
    ln_gamma: Fixed,
}

impl SeriesEvaluator {
    pub fn new(nu: f64, x_cap: f64, ctx: PrecisionCtx) -> Result<Self> {
        if !(nu > -1.0) || !nu.is_finite() {
            return Err(domain("bessel series", format!("order must be > -1, got {nu}")));
        }
        if !(x_cap > 0.0) || !x_cap.is_finite() {
            return Err(domain(
                "bessel series",
                format!("argument cap must be positive, got {x_cap}"),
            ));
        }
        let digits = required_digits(nu, x_cap).max(ctx.working_digits);
        if digits > ctx.max_digits {
            return Err(Error::PrecisionInfeasible {
                required: digits,
                cap: ctx.max_digits,
            });
        }
        let ln_gamma = ln_gamma_fixed(nu + 1.0, bits_for_digits(digits) + 16)?;
        Ok(Self {
            nu,
            x_cap,
            ctx,
            ln_gamma,
        })
    }

    pub fn nu(&self) -> f64 {
        self.nu
    }

    pub fn x_cap(&self) -> f64 {
        self.x_cap
    }

    pub fn eval(&self, x: f64) -> Result<BesselPair> {
        if !(x > 0.0) || !x.is_finite() {
            return Err(domain("bessel series", format!("argument must be positive, got {x}")));
        }
        if x > self.x_cap {
            return Err(domain(
                "bessel series",
                format!("argument {x} exceeds evaluator cap {}", self.x_cap),
            ));
        }
        let digits = required_digits(self.nu, x).max(self.ctx.working_digits);
        let p = bits_for_digits(digits);

        let (nu_a, nu_q) = dyadic(self.nu);
        let (x_a, x_q) = dyadic(x);
        let one_q = BigInt::one() << nu_q as usize;
        // multiplier for t_j: x^2/4 * 2^q / (j (a + j 2^q)), powers of two applied as a shift
        let num = &x_a * &x_a;
        let two_shift = nu_q as i64 - 2 * x_q as i64 - 2;

        let mut t = Fixed::one(p);
        let mut s0 = t.clone();
        let mut s1 = t.mul_big(&nu_a).shl(-(nu_q as i64));
        let mut abs_sum = t.clone();
        let mut j: i64 = 0;
        loop {
            j += 1;
            let den = (&nu_a + &one_q * j) * j;
            t = t.mul_big(&num).shl(two_shift).div_big(&den).neg();
            if t.is_zero() {
                break;
            }
            let weight = &one_q * (2 * j) + &nu_a;
            s0 = s0.add(&t);
            s1 = s1.add(&t.mul_big(&weight).shl(-(nu_q as i64)));
            abs_sum = abs_sum.add(&t.abs());
            if j > 200_000 {
                return Err(Error::NonConvergence {
                    op: "bessel series",
                    iterations: j as usize,
                });
            }
        }

        // log prefactor L = ν ln(x/2) − ln Γ(ν+1) = k ln 2 + r
        let ln_gamma = self.ln_gamma.with_prec(p);
        let x_fixed = Fixed::from_f64(x, p);
        let log_pref = if self.nu == 0.0 {
            ln_gamma.neg()
        } else {
            let ln_half_x = fixed::ln(&x_fixed.shl(-1));
            Fixed::from_f64(self.nu, p).mul(&ln_half_x).sub(&ln_gamma)
        };
        let ln2 = fixed::ln2(p);
        let k = (log_pref.to_f64() / LN_2).floor() as i64;
        let r = log_pref.sub(&ln2.mul_int(k));
        let scale = fixed::exp(&r);

        let j_val = ldexp(scale.mul(&s0).to_f64(), k);
        let dj_val = ldexp(scale.mul(&s1).div(&x_fixed).to_f64(), k);

        // truncation error of the fixed-point recurrence, relative to 2^-p
        let n_terms = (j + 2) as f64;
        let sum_err = ldexp(n_terms * (n_terms * abs_sum.to_f64() + 4.0), -(p as i64));
        let scale_f = ldexp(scale.to_f64(), k);
        let weight_max = 2.0 * n_terms + self.nu.abs();
        let j_err = scale_f * sum_err + j_val.abs() * f64::EPSILON;
        let dj_err = scale_f * sum_err * weight_max / x + dj_val.abs() * f64::EPSILON;

        Ok(BesselPair {
            j: EvalResult {
                value: j_val,
                abs_err_estimate: j_err,
            },
            dj: EvalResult {
                value: dj_val,
                abs_err_estimate: dj_err,
            },
            digits,
        })
    }
}

/// Leading behaviour at the origin: J_ν(0) = 1 for ν = 0 and 0 for ν > 0.
pub fn value_at_origin(nu: f64) -> Option<f64> {
    if nu == 0.0 {
        Some(1.0)
    } else if nu > 0.0 {
        Some(0.0)
    } else {
        None
    }
}
