use crate::error::{Error, Result};

const MAX_ITER: usize = 200;

/// Root of `f` inside a sign-changing bracket: bisection down to width `tol`,
/// then one secant step between the final endpoints.
pub fn refine_root<F>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: FnMut(f64) -> Result<f64>,
{
    let (mut a, mut b) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut fa = f(a)?;
    let mut fb = f(b)?;
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange {
            lo: a,
            hi: b,
            flo: fa,
            fhi: fb,
        });
    }
    let mut iter = 0;
    while b - a > tol {
        iter += 1;
        if iter > MAX_ITER {
            return Err(Error::NonConvergence {
                op: "refine_root",
                iterations: iter,
            });
        }
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
            fb = fm;
        }
    }
    let secant = a - fa * (b - a) / (fb - fa);
    Ok(if secant.is_finite() {
        secant.clamp(a, b)
    } else {
        0.5 * (a + b)
    })
}
