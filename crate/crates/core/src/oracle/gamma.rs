//! High-precision log-gamma by the Stirling series after an upward argument
//! shift, Γ(z) = Γ(z + k) / (z (z+1) ⋯ (z+k−1)).
//!
//! The Bernoulli coefficients come from the tangent numbers, which are
//! generated with integer-only arithmetic:
//! B_{2n} / (2n(2n−1)) = (−1)^{n−1} T_n / ((2n−1) 4^n (4^n − 1)).

use std::f64::consts::{LN_10, LN_2, PI};

use num_bigint::BigInt;
use num_traits::One;

use super::fixed::{self, decompose, Fixed};
use crate::error::{domain, Error, Result};

/// Minimum upward shift applied to the argument.
const MIN_SHIFT: u64 = 30;

/// Tangent numbers T_1..=T_n (T_1 = 1, T_2 = 2, T_3 = 16, ...).
pub(crate) fn tangent_numbers(n: usize) -> Vec<BigInt> {
    let mut t = vec![BigInt::from(0); n + 1];
    if n == 0 {
        return t;
    }
    t[1] = BigInt::one();
    for k in 2..=n {
        t[k] = &t[k - 1] * (k as u64 - 1);
    }
    for k in 2..=n {
        for j in k..=n {
            t[j] = &t[j - 1] * (j as u64 - k as u64) + &t[j] * (j as u64 - k as u64 + 2);
        }
    }
    t
}

/// Number of Stirling correction terms needed at argument `w` for `p` bits, or
/// `None` if the asymptotic series bottoms out before reaching that accuracy.
fn stirling_terms(w: f64, p: u32) -> Option<usize> {
    let target = -(p as f64) * LN_2 - 8.0;
    let mut log_term = -(12f64.ln()) - w.ln();
    let mut n = 1usize;
    while log_term > target {
        let nn = n as f64;
        let step = (2.0 * nn * (2.0 * nn - 1.0) / (4.0 * PI * PI)).ln() - 2.0 * w.ln();
        if step >= 0.0 {
            return None;
        }
        log_term += step;
        n += 1;
    }
    Some(n)
}

/// ln Γ(w) for w large enough that the Stirling series reaches `p` bits.
fn ln_gamma_stirling(w: &Fixed, wf: f64) -> Result<Fixed> {
    let p = w.prec();
    let n_terms = stirling_terms(wf, p).ok_or(Error::NonConvergence {
        op: "ln_gamma",
        iterations: 0,
    })?;
    let half = Fixed::one(p).shl(-1);
    let ln_w = fixed::ln(w);
    let ln_2pi = fixed::ln2(p).add(&fixed::ln(&fixed::pi(p)));
    let mut sum = w.sub(&half).mul(&ln_w).sub(w).add(&ln_2pi.shl(-1));

    let tangent = tangent_numbers(n_terms);
    let w_inv = Fixed::one(p).div(w);
    let w_inv2 = w_inv.mul(&w_inv);
    let mut w_pow = w_inv.clone();
    for (n, t_n) in tangent.iter().enumerate().skip(1) {
        let four_n = BigInt::one() << (2 * n);
        let den = (&four_n - 1u32) * &four_n * (2 * n as u64 - 1);
        let coeff = Fixed::from_big(t_n, p).div_big(&den);
        let term = coeff.mul(&w_pow);
        sum = if n % 2 == 1 { sum.add(&term) } else { sum.sub(&term) };
        w_pow = w_pow.mul(&w_inv2);
    }
    Ok(sum)
}

/// ln Γ(z) for z > 0 carried to `p` fractional bits. The argument is taken as
/// the exact dyadic rational represented by the double.
pub fn ln_gamma_fixed(z: f64, p: u32) -> Result<Fixed> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(domain("ln_gamma", format!("argument must be positive, got {z}")));
    }
    let g = p + 32;
    let digits = g as f64 * LN_2 / LN_10;
    let target_w = (2.0 * digits).ceil().max(MIN_SHIFT as f64);
    let shift = ((target_w - z.floor()).max(0.0) as u64).max(MIN_SHIFT);

    // z = a / 2^q exactly, z + i = (a + i 2^q) / 2^q
    let (mant, exp) = decompose(z);
    let (a, q) = if exp >= 0 {
        (BigInt::from(mant) << exp as usize, 0u32)
    } else {
        (BigInt::from(mant), (-exp) as u32)
    };
    let step = BigInt::one() << q as usize;
    let mut prod = BigInt::one();
    let mut cur = a.clone();
    for _ in 0..shift {
        prod *= &cur;
        cur += &step;
    }
    let ln_prod = fixed::ln(&Fixed::from_big(&prod, g)).sub(&fixed::ln2(g).mul_int((shift as i64) * q as i64));

    let w = Fixed::from_raw(cur << (g as usize), g).shl(-(q as i64));
    let wf = z + shift as f64;
    let lg = ln_gamma_stirling(&w, wf)?;
    Ok(lg.sub(&ln_prod).with_prec(p))
}

/// Γ(z) carried to `p` bits.
pub fn gamma_fixed(z: f64, p: u32) -> Result<Fixed> {
    let g = p + 32;
    let lg = ln_gamma_fixed(z, g)?;
    Ok(fixed::exp(&lg).with_prec(p))
}
