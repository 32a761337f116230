//! Adaptive Gauss–Kronrod (7, 15) quadrature.

#![allow(clippy::excessive_precision)]

use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

const MAX_DEPTH: u32 = 50;
const MAX_EVALS: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadResult {
    pub value: f64,
    pub abs_err: f64,
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut kron = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for (i, (&x, &w)) in XGK.iter().zip(WGK.iter()).take(7).enumerate() {
        let fl = f(c - h * x);
        let fr = f(c + h * x);
        kron += w * (fl + fr);
        if i % 2 == 1 {
            gauss += WG[i / 2] * (fl + fr);
        }
    }
    (kron * h, ((kron - gauss) * h).abs())
}

fn adapt<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64, depth: u32, evals: &mut usize) -> Result<QuadResult> {
    *evals += 15;
    if *evals > MAX_EVALS {
        return Err(Error::NonConvergence {
            op: "quad",
            iterations: *evals,
        });
    }
    let (v, e) = gk15(f, a, b);
    // below a few ulps of the panel value the estimate is pure rounding
    if e <= tol.max(4.0 * f64::EPSILON * v.abs()) || (b - a).abs() < 1e-14 * a.abs().max(b.abs()).max(1.0) {
        return Ok(QuadResult { value: v, abs_err: e });
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NonConvergence {
            op: "quad",
            iterations: depth as usize,
        });
    }
    let m = 0.5 * (a + b);
    let l = adapt(f, a, m, 0.5 * tol, depth + 1, evals)?;
    let r = adapt(f, m, b, 0.5 * tol, depth + 1, evals)?;
    Ok(QuadResult {
        value: l.value + r.value,
        abs_err: l.abs_err + r.abs_err,
    })
}

/// ∫_a^b f with estimated absolute error at most `tol`.
pub fn quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, tol: f64) -> Result<QuadResult> {
    let mut evals = 0;
    adapt(&f, a, b, tol, 0, &mut evals)
}

/// Integral over consecutive panels `[p_i, p_{i+1}]`, for integrands that are
/// only piecewise smooth. The tolerance is shared evenly between panels.
pub fn quad_panels<F: Fn(f64) -> f64>(f: F, points: &[f64], tol: f64) -> Result<QuadResult> {
    if points.len() < 2 {
        return Ok(QuadResult {
            value: 0.0,
            abs_err: 0.0,
        });
    }
    let per = tol / (points.len() - 1) as f64;
    let mut value = 0.0;
    let mut abs_err = 0.0;
    let mut comp = 0.0;
    for w in points.windows(2) {
        let mut evals = 0;
        let r = adapt(&f, w[0], w[1], per, 0, &mut evals)?;
        // Kahan summation keeps hundreds of thousands of panels exact enough
        let y = r.value - comp;
        let t = value + y;
        comp = (t - value) - y;
        value = t;
        abs_err += r.abs_err;
    }
    Ok(QuadResult { value, abs_err })
}
