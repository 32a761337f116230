//! Binary fixed-point numbers backed by an arbitrary-size integer.
//!
//! A [`Fixed`] holds `m / 2^p` for an integer mantissa `m` and a fraction
//! width `p` chosen by the caller. Addition and subtraction are exact, the
//! product and quotient truncate to `p` fractional bits. The absolute
//! resolution is therefore uniform, which is what an alternating power series
//! with heavy cancellation needs: the partial sums may be huge while the
//! result is small, and every intermediate is held to the same absolute grid.

use std::cmp::Ordering;
use std::f64::consts::LN_2;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fixed {
    m: BigInt,
    p: u32,
}

/// Exact decomposition `x = mant * 2^exp` of a finite double.
pub(crate) fn decompose(x: f64) -> (i64, i32) {
    if x == 0.0 {
        return (0, 0);
    }
    let bits = x.to_bits();
    let sign = if bits >> 63 == 0 { 1i64 } else { -1i64 };
    let raw_exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = (bits & ((1u64 << 52) - 1)) as i64;
    let (mut mant, mut exp) = if raw_exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1i64 << 52), raw_exp - 1075)
    };
    while mant & 1 == 0 {
        mant >>= 1;
        exp += 1;
    }
    (sign * mant, exp)
}

/// `v * 2^k` without intermediate overflow or underflow.
pub(crate) fn ldexp(mut v: f64, mut k: i64) -> f64 {
    while k > 1000 {
        v *= 2f64.powi(1000);
        k -= 1000;
    }
    while k < -1000 {
        v *= 2f64.powi(-1000);
        k += 1000;
    }
    v * 2f64.powi(k as i32)
}

fn shift(m: &BigInt, by: i64) -> BigInt {
    match by.cmp(&0) {
        Ordering::Greater => m << (by as usize),
        Ordering::Less => m >> ((-by) as usize),
        Ordering::Equal => m.clone(),
    }
}

impl Fixed {
    pub fn zero(p: u32) -> Self {
        Self { m: BigInt::zero(), p }
    }

    pub fn one(p: u32) -> Self {
        Self {
            m: BigInt::one() << p as usize,
            p,
        }
    }

    pub fn from_int(i: i64, p: u32) -> Self {
        Self {
            m: BigInt::from(i) << p as usize,
            p,
        }
    }

    pub fn from_big(i: &BigInt, p: u32) -> Self {
        Self { m: i << p as usize, p }
    }

    /// Wraps a raw mantissa already scaled by `2^p`.
    pub fn from_raw(m: BigInt, p: u32) -> Self {
        Self { m, p }
    }

    /// Exact when `x` has no bits below `2^-p`, otherwise truncated.
    pub fn from_f64(x: f64, p: u32) -> Self {
        let (mant, exp) = decompose(x);
        Self {
            m: shift(&BigInt::from(mant), p as i64 + exp as i64),
            p,
        }
    }

    pub fn prec(&self) -> u32 {
        self.p
    }

    pub fn raw(&self) -> &BigInt {
        &self.m
    }

    pub fn is_zero(&self) -> bool {
        self.m.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.m.sign() == Sign::Minus
    }

    pub fn with_prec(&self, p: u32) -> Self {
        Self {
            m: shift(&self.m, p as i64 - self.p as i64),
            p,
        }
    }

    pub fn abs(&self) -> Self {
        Self {
            m: self.m.abs(),
            p: self.p,
        }
    }

    pub fn neg(&self) -> Self {
        Self { m: -&self.m, p: self.p }
    }

    pub fn add(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Self {
            m: &self.m + &o.m,
            p: self.p,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Self {
            m: &self.m - &o.m,
            p: self.p,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        Self {
            m: (&self.m * &o.m) >> self.p as usize,
            p: self.p,
        }
    }

    pub fn div(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        assert!(!o.m.is_zero(), "fixed-point division by zero");
        Self {
            m: (&self.m << self.p as usize).div_floor(&o.m),
            p: self.p,
        }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        Self {
            m: &self.m * k,
            p: self.p,
        }
    }

    pub fn div_int(&self, k: i64) -> Self {
        assert!(k != 0, "fixed-point division by zero");
        Self {
            m: self.m.div_floor(&BigInt::from(k)),
            p: self.p,
        }
    }

    pub fn mul_big(&self, k: &BigInt) -> Self {
        Self {
            m: &self.m * k,
            p: self.p,
        }
    }

    pub fn div_big(&self, k: &BigInt) -> Self {
        Self {
            m: self.m.div_floor(k),
            p: self.p,
        }
    }

    /// Multiplies by `2^k`; a negative `k` truncates.
    pub fn shl(&self, k: i64) -> Self {
        Self {
            m: shift(&self.m, k),
            p: self.p,
        }
    }

    /// Position of the leading bit relative to the binary point, i.e. the
    /// `e` with `2^e <= |self| < 2^(e+1)`. `None` for zero.
    pub fn log2_floor(&self) -> Option<i64> {
        if self.m.is_zero() {
            None
        } else {
            Some(self.m.bits() as i64 - 1 - self.p as i64)
        }
    }

    /// Nearest double (to within one unit in the last place).
    pub fn to_f64(&self) -> f64 {
        if self.m.is_zero() {
            return 0.0;
        }
        let nbits = self.m.bits() as i64;
        let drop = (nbits - 64).max(0);
        let top = (&self.m >> drop as usize).to_i128().expect("64-bit window");
        ldexp(top as f64, drop - self.p as i64)
    }

    /// Parses a plain decimal literal such as `-1.25e-3`, truncating to `p` bits.
    pub fn parse_decimal(s: &str, p: u32) -> Option<Self> {
        let s = s.trim();
        let (mantissa, exp10) = match s.find(['e', 'E']) {
            Some(i) => (&s[..i], s[i + 1..].parse::<i64>().ok()?),
            None => (s, 0),
        };
        let (neg, body) = match mantissa.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
        };
        let (int_part, frac_part) = match body.find('.') {
            Some(i) => (&body[..i], &body[i + 1..]),
            None => (body, ""),
        };
        let digits: String = format!("{int_part}{frac_part}");
        let mut n: BigInt = digits.parse().ok()?;
        if neg {
            n = -n;
        }
        let scale = exp10 - frac_part.len() as i64;
        let ten = BigInt::from(10);
        let m = if scale >= 0 {
            (n * num_traits::pow(ten, scale as usize)) << p as usize
        } else {
            (n << p as usize).div_floor(&num_traits::pow(ten, (-scale) as usize))
        };
        Some(Self { m, p })
    }
}

impl PartialOrd for Fixed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        debug_assert_eq!(self.p, other.p);
        Some(self.m.cmp(&other.m))
    }
}

/// ln 2 = 2 atanh(1/3).
pub fn ln2(p: u32) -> Fixed {
    let g = p + 16;
    let mut x = Fixed::one(g).div_int(3);
    let mut sum = x.clone();
    let mut k = 1i64;
    loop {
        x = x.div_int(9);
        if x.is_zero() {
            break;
        }
        sum = sum.add(&x.div_int(2 * k + 1));
        k += 1;
    }
    sum.mul_int(2).with_prec(p)
}

fn atan_inv(n: i64, g: u32) -> Fixed {
    let mut x = Fixed::one(g).div_int(n);
    let mut sum = x.clone();
    let n2 = n * n;
    let mut k = 1i64;
    loop {
        x = x.div_int(n2);
        if x.is_zero() {
            break;
        }
        let term = x.div_int(2 * k + 1);
        sum = if k % 2 == 1 { sum.sub(&term) } else { sum.add(&term) };
        k += 1;
    }
    sum
}

/// π by Machin's formula.
pub fn pi(p: u32) -> Fixed {
    let g = p + 16;
    atan_inv(5, g)
        .mul_int(16)
        .sub(&atan_inv(239, g).mul_int(4))
        .with_prec(p)
}

/// e^x. Results below `2^-p` lose relative accuracy; callers that need a
/// tiny exponential split off the power of two themselves.
pub fn exp(x: &Fixed) -> Fixed {
    let p = x.prec();
    let xf = x.to_f64();
    assert!(xf.abs() < 1e7, "exp argument out of range: {xf}");
    let halvings = ((p as f64).sqrt() / 2.0) as u32 + 4;
    let g = p + 32 + halvings;
    let k = (xf / LN_2).round() as i64;
    let r = x.with_prec(g).sub(&ln2(g).mul_int(k)).shl(-(halvings as i64));

    let mut sum = Fixed::one(g);
    let mut term = Fixed::one(g);
    let mut n = 1i64;
    loop {
        term = term.mul(&r).div_int(n);
        if term.is_zero() {
            break;
        }
        sum = sum.add(&term);
        n += 1;
    }
    for _ in 0..halvings {
        sum = sum.mul(&sum);
    }
    sum.shl(k).with_prec(p)
}

/// Natural logarithm of a positive fixed-point number.
pub fn ln(y: &Fixed) -> Fixed {
    assert!(!y.is_negative() && !y.is_zero(), "ln of non-positive value");
    let p = y.prec();
    let g = p + 32;
    let e = y.log2_floor().expect("nonzero");
    // y = yn * 2^e with yn in [1, 2)
    let yn = Fixed::from_raw(shift(&y.raw().clone(), g as i64 - p as i64 - e), g);
    let mut z = Fixed::from_f64(yn.to_f64().ln(), g);
    let tiny = BigInt::one() << 16usize;
    // Halley step for exp(z) = yn: cubic convergence from a 53-bit start
    for _ in 0..12 {
        let ez = exp(&z);
        let d = yn.sub(&ez).mul_int(2).div(&yn.add(&ez));
        z = z.add(&d);
        if d.raw().abs() <= tiny {
            break;
        }
    }
    z.add(&ln2(g).mul_int(e)).with_prec(p)
}
