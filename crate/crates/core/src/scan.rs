//! Grid sweeps that compare approximations and bounds against the oracle, and
//! the sup experiment for x^{3/2}|J_ν(x) − √(2/(πx))cos(x − ω_ν)|.
//!
//! Sweeps run in grid order and are deterministic.

use std::f64::consts::PI;

use crate::approx::{self, AiryMode, ApproxValue, Method};
use crate::bounds::{self, BoundName, BoundReport};
use crate::error::{precondition, Error, Result};
use crate::oracle::{Oracle, J_X_MAX};
use crate::order::Order;

/// Default truncation orders for the inverse-power expansion in sweeps.
pub const OLVER_SWEEP_ORDERS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

impl Spacing {
    pub fn as_str(self) -> &'static str {
        match self {
            Spacing::Linear => "linear",
            Spacing::Log => "log",
        }
    }
}

impl std::str::FromStr for Spacing {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "linear" => Ok(Spacing::Linear),
            "log" => Ok(Spacing::Log),
            _ => Err(format!("unknown spacing '{s}'")),
        }
    }
}

/// A product grid of orders and abscissae.
///
/// Linear grids cover `[lo, hi]` including both ends. Log grids cover
/// `(lo, hi]`: `lo` itself is excluded. For the transition form the abscissae
/// are the scaled variable z rather than x.
#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    pub nu_values: Vec<f64>,
    pub x_range: (f64, f64),
    pub x_points: usize,
    pub spacing: Spacing,
}

impl GridSpec {
    pub fn new(nu_values: Vec<f64>, x_range: (f64, f64), x_points: usize, spacing: Spacing) -> Result<Self> {
        let (lo, hi) = x_range;
        if x_points < 2 {
            return Err(precondition("grid", "need at least two x points"));
        }
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(precondition("grid", format!("bad x range ({lo}, {hi})")));
        }
        if spacing == Spacing::Log && !(lo > 0.0) {
            return Err(precondition("grid", "log spacing needs lo > 0"));
        }
        if lo < 0.0 {
            return Err(precondition("grid", "x range must be nonnegative"));
        }
        if let Some(nu) = nu_values.iter().find(|nu| !(**nu >= -0.5) || !nu.is_finite()) {
            return Err(precondition("grid", format!("order {nu} outside the oracle domain")));
        }
        Ok(Self {
            nu_values,
            x_range,
            x_points,
            spacing,
        })
    }

    pub fn points(&self) -> Vec<f64> {
        let (lo, hi) = self.x_range;
        let n = self.x_points;
        match self.spacing {
            Spacing::Linear => (0..n)
                .map(|i| {
                    if i + 1 == n {
                        hi
                    } else {
                        lo + (hi - lo) * i as f64 / (n - 1) as f64
                    }
                })
                .collect(),
            Spacing::Log => {
                let r = (hi / lo).ln();
                (1..=n)
                    .map(|i| {
                        if i == n {
                            hi
                        } else {
                            lo * (r * i as f64 / n as f64).exp()
                        }
                    })
                    .collect()
            }
        }
    }
}

/// One compared point, in the shape of an output CSV row.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanRow {
    pub subject: String,
    pub nu: f64,
    pub x: f64,
    pub value: f64,
    pub oracle: f64,
    pub half_width: f64,
    pub ratio: f64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub tag: String,
    pub nu: f64,
    pub x: f64,
    pub excess: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ScanReport {
    pub total: usize,
    pub skipped: usize,
    pub violations: Vec<Violation>,
    /// For approximations, the largest (|error| − slack)/half_width.
    pub max_ratio: f64,
    pub rows: Vec<ScanRow>,
}

impl ScanReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn push_approx(&mut self, a: &ApproxValue, nu: f64, truth: f64, truth_err: f64, slack: f64) {
        let diff = (truth - a.value).abs();
        let allowed = a.rounding + truth_err + slack;
        let over = (diff - allowed).max(0.0);
        let ratio = if over == 0.0 {
            0.0
        } else if a.half_width > 0.0 {
            over / a.half_width
        } else {
            f64::INFINITY
        };
        let holds = ratio <= 1.0;
        if !holds {
            self.violations.push(Violation {
                tag: a.method.as_str().to_string(),
                nu,
                x: a.x,
                excess: over - a.half_width,
            });
        }
        self.max_ratio = self.max_ratio.max(ratio);
        self.total += 1;
        self.rows.push(ScanRow {
            subject: a.method.as_str().to_string(),
            nu,
            x: a.x,
            value: a.value,
            oracle: truth,
            half_width: a.half_width,
            ratio,
            holds,
        });
    }

    /// Bound rows carry lhs as `value`, rhs as `oracle`, the error estimate as
    /// `half_width`, and lhs/rhs as `ratio` (capped at 1 for reports that hold).
    pub fn push_bound(&mut self, r: &BoundReport) {
        if !r.holds {
            self.violations.push(Violation {
                tag: r.name.as_str().to_string(),
                nu: r.nu,
                x: r.x,
                excess: -r.margin,
            });
        }
        let ratio = if !r.holds {
            f64::INFINITY
        } else if r.rhs > 0.0 {
            (r.lhs / r.rhs).clamp(0.0, 1.0)
        } else {
            0.0
        };
        self.total += 1;
        self.rows.push(ScanRow {
            subject: r.name.as_str().to_string(),
            nu: r.nu,
            x: r.x,
            value: r.lhs,
            oracle: r.rhs,
            half_width: r.err,
            ratio,
            holds: r.holds,
        });
    }
}

/// Evaluate one approximation at a grid point. The abscissa is z for the
/// transition form and x otherwise.
pub fn approx_at(method: Method, order: &Order, t: f64, oracle: &Oracle) -> Result<ApproxValue> {
    match method {
        Method::Classic => approx::classic_oscillatory(order, t),
        Method::Olver => {
            let (l1, l2) = approx::olver_min_orders(order.nu());
            approx::olver_expansion(order, t, l1.max(OLVER_SWEEP_ORDERS), l2.max(OLVER_SWEEP_ORDERS))
        }
        Method::SharpLow | Method::SharpHigh => {
            let a = approx::sharper_oscillatory(order, t)?;
            if a.method != method {
                return Err(crate::error::domain(
                    "approx_at",
                    format!("{} does not apply to order {}", method, order.nu()),
                ));
            }
            Ok(a)
        }
        Method::Simplified => approx::simplified_oscillatory(order, t),
        Method::Transition => approx::transition(order, t, oracle),
        Method::AiryClassic => approx::airy_approx(t, AiryMode::Classic),
        Method::AirySharp => approx::airy_approx(t, AiryMode::Sharp),
        Method::AirySimplified => approx::airy_approx(t, AiryMode::Simplified),
    }
}

fn is_skippable(e: &Error) -> bool {
    matches!(e, Error::Domain { .. } | Error::ZeroCrossing { .. })
}

pub fn verify_approx_grid(method: Method, grid: &GridSpec, oracle: &Oracle) -> Result<ScanReport> {
    verify_approx_grid_with(method, grid, 0.0, oracle)
}

/// As [`verify_approx_grid`], with an extra absolute `slack` allowed on top of
/// the oracle and rounding error estimates. Airy methods ignore the orders
/// and report ν = 0.
pub fn verify_approx_grid_with(method: Method, grid: &GridSpec, slack: f64, oracle: &Oracle) -> Result<ScanReport> {
    let mut rep = ScanReport::default();
    let xs = grid.points();
    let nus: Vec<f64> = if method.is_airy() {
        vec![0.0]
    } else {
        grid.nu_values.clone()
    };
    for &nu in &nus {
        let order = Order::new(nu)?;
        for &t in &xs {
            let a = match approx_at(method, &order, t, oracle) {
                Ok(a) => a,
                Err(e) if is_skippable(&e) => {
                    rep.skipped += 1;
                    continue;
                }
                Err(e) => return Err(e),
            };
            let truth = if method.is_airy() {
                oracle.airy(a.x)?
            } else {
                if a.x > J_X_MAX {
                    rep.skipped += 1;
                    continue;
                }
                oracle.j(nu, a.x)?
            };
            rep.push_approx(&a, nu, truth.value, truth.abs_err_estimate, slack);
        }
    }
    if rep.total == 0 {
        return Err(Error::EmptyGrid(format!("no admissible points for {method}")));
    }
    Ok(rep)
}

/// The reports of one bound at one point.
///
/// How `x` is read depends on the bound: monotonic bounds take it as
/// t ∈ (0, 1]; the Wronskian kernel takes it as x₁ with `x2` as x₂; the Airy
/// maxima bounds scan (0, x] with a step of 10⁻³; the zero conjecture and the
/// zero gap chain take it as the index s. Order-only bounds ignore `x`, and
/// Airy and integral bounds ignore the order.
pub fn bounds_at(
    bound: BoundName,
    order: &Order,
    x: f64,
    x2: Option<f64>,
    oracle: &Oracle,
) -> Result<Vec<BoundReport>> {
    use BoundName as B;
    Ok(match bound {
        B::Watson => vec![bounds::bound_watson(order, x, oracle)?],
        B::EnvelopeLow | B::EnvelopeHigh => vec![bounds::bound_envelope(order, x, oracle)?],
        B::Derivative | B::PsiPositive => {
            vec![
                bounds::bound_derivative(order, x, oracle)?,
                bounds::psi_report(order, x),
            ]
        }
        B::LogDerivative | B::LogDerivativeChain => bounds::bound_log_derivative(order, x, oracle)?.to_vec(),
        B::MonotonicFirst | B::MonotonicSecond => bounds::bound_monotonic(order, x, oracle)?.to_vec(),
        B::OrderEqualsArgument => bounds::order_equals_argument(order, oracle)?.to_vec(),
        B::LeftmostMax => vec![bounds::leftmost_max_check(order, oracle)?],
        B::NearFirstZero | B::NearFirstZeroPositive => bounds::bound_near_first_zero(order, oracle)?.to_vec(),
        B::AiryEnvelope => vec![bounds::bound_airy_envelope(x, oracle)?],
        B::AiryMaxUpper | B::AiryMaxLower => {
            bounds::airy_maxima_reports(&bounds::airy_envelope_maxima(x, 1e-3, oracle)?)
        }
        B::WronskianKernel => {
            let x2 = x2.ok_or_else(|| precondition("bounds_at", "the Wronskian kernel needs a second abscissa"))?;
            vec![bounds::bound_wronskian_kernel(order.nu(), x, x2, oracle)?]
        }
        B::IntegralSq | B::IntegralAbs => bounds::lemma_integral_check(x)?.to_vec(),
        B::Conjecture | B::ZeroGap => {
            if !(x >= 1.0 && x.fract() == 0.0) {
                return Err(precondition(
                    "bounds_at",
                    format!("{bound} needs a positive integer index, got {x}"),
                ));
            }
            let s = x as usize;
            if bound == B::Conjecture {
                vec![crate::zeros::conjecture_check(s, oracle)?]
            } else {
                crate::zeros::center_gap_chain(s).to_vec()
            }
        }
    })
}

/// Evaluate a bound over a grid, reading each point as [`bounds_at`] does.
/// Order-only bounds run once per order, Airy and integral bounds once per
/// abscissa, the Airy maxima once with the upper end of the range, and the
/// Wronskian kernel on every pair of abscissae. Points outside a bound's
/// domain are skipped.
pub fn verify_bounds_grid(bound: BoundName, grid: &GridSpec, oracle: &Oracle) -> Result<ScanReport> {
    use BoundName as B;
    if matches!(bound, B::Conjecture | B::ZeroGap) {
        return Err(precondition(
            "verify_bounds_grid",
            format!("{bound} is indexed by s, not a grid"),
        ));
    }
    let xs = grid.points();
    let mut points: Vec<(f64, f64, Option<f64>)> = Vec::new();
    match bound {
        B::OrderEqualsArgument | B::LeftmostMax | B::NearFirstZero | B::NearFirstZeroPositive => {
            points.extend(grid.nu_values.iter().map(|&nu| (nu, 0.0, None)));
        }
        B::AiryEnvelope | B::IntegralSq | B::IntegralAbs => points.extend(xs.iter().map(|&x| (0.0, x, None))),
        B::AiryMaxUpper | B::AiryMaxLower => points.push((0.0, grid.x_range.1, None)),
        B::WronskianKernel => {
            for &nu in &grid.nu_values {
                for &x1 in &xs {
                    points.extend(xs.iter().map(|&x2| (nu, x1, Some(x2))));
                }
            }
        }
        _ => {
            for &nu in &grid.nu_values {
                points.extend(xs.iter().map(|&x| (nu, x, None)));
            }
        }
    }
    let mut rep = ScanReport::default();
    for (nu, x, x2) in points {
        match bounds_at(bound, &Order::new(nu)?, x, x2, oracle) {
            Ok(v) => v.iter().for_each(|b| rep.push_bound(b)),
            Err(e) if is_skippable(&e) => rep.skipped += 1,
            Err(e) => return Err(e),
        }
    }
    if rep.total == 0 {
        return Err(Error::EmptyGrid(format!("no admissible points for {bound}")));
    }
    Ok(rep)
}

/// A located supremum of a sampled function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SupResult {
    pub nu: f64,
    pub sup_value: f64,
    pub argmax_x: f64,
    /// `sup_value / μ`; NaN when μ = 0.
    pub normalized: f64,
}

const GOLDEN_ITERS: usize = 80;
const POLISH_CANDIDATES: usize = 5;

/// Maximum of `f` over the samples `xs`, polished by golden-section search
/// between the neighbours of the best few local maxima. Never returns less
/// than the best sample.
pub fn sup_scan<F>(f: F, xs: &[f64]) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let vals: Vec<f64> = xs.iter().map(|&x| f(x)).collect::<Result<_>>()?;
    let mut best = (f64::NEG_INFINITY, f64::NAN);
    for (i, &v) in vals.iter().enumerate() {
        if v > best.0 {
            best = (v, xs[i]);
        }
    }
    let mut peaks: Vec<usize> = (0..vals.len())
        .filter(|&i| {
            let left = i == 0 || vals[i - 1] <= vals[i];
            let right = i + 1 == vals.len() || vals[i + 1] <= vals[i];
            left && right
        })
        .collect();
    peaks.sort_by(|&a, &b| vals[b].total_cmp(&vals[a]).then(a.cmp(&b)));
    for &i in peaks.iter().take(POLISH_CANDIDATES) {
        let lo = xs[i.saturating_sub(1)];
        let hi = xs[(i + 1).min(xs.len() - 1)];
        let (x, v) = golden_max(&f, lo, hi)?;
        if v > best.0 {
            best = (v, x);
        }
    }
    Ok(best)
}

fn golden_max<F>(f: &F, mut a: f64, mut b: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<f64>,
{
    let g = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - g * (b - a);
    let mut d = a + g * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    for _ in 0..GOLDEN_ITERS {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d)?;
        }
    }
    Ok(if fc >= fd { (c, fc) } else { (d, fd) })
}

/// x^{3/2}|J_ν(x) − √(2/(πx))cos(x − ω_ν)|.
pub fn olenko_remainder(order: &Order, x: f64, oracle: &Oracle) -> Result<f64> {
    let j = oracle.j(order.nu(), x)?.value;
    let main = (2.0 / (PI * x)).sqrt() * (x - order.omega()).cos();
    Ok(x * x.sqrt() * (j - main).abs())
}

/// Estimate of sup over (0, x_max] of [`olenko_remainder`] from `coarse`
/// equally spaced samples with golden-section polish.
pub fn olenko_sup(order: &Order, x_max: f64, coarse: usize, oracle: &Oracle) -> Result<SupResult> {
    if !(x_max > 0.0 && x_max <= J_X_MAX) {
        return Err(precondition(
            "olenko_sup",
            format!("x_max must lie in (0, {J_X_MAX}], got {x_max}"),
        ));
    }
    if coarse < 2 {
        return Err(precondition("olenko_sup", "need at least two coarse points"));
    }
    let xs: Vec<f64> = (1..=coarse).map(|i| x_max * i as f64 / coarse as f64).collect();
    let (sup_value, argmax_x) = sup_scan(|x| olenko_remainder(order, x, oracle), &xs)?;
    let mu = order.mu();
    Ok(SupResult {
        nu: order.nu(),
        sup_value,
        argmax_x,
        normalized: if mu > 0.0 { sup_value / mu } else { f64::NAN },
    })
}

/// Sup of the normalized envelope √(π/2)|x² − μ|^{1/4}|J_ν(x)| over
/// `points` log-spaced abscissae in (lo, hi], for ν > 1/2.
pub fn envelope_sup(order: &Order, lo: f64, hi: f64, points: usize, oracle: &Oracle) -> Result<SupResult> {
    let grid = GridSpec::new(vec![order.nu()], (lo, hi), points, Spacing::Log)?;
    let root_mu = order.mu().sqrt();
    let xs: Vec<f64> = grid
        .points()
        .into_iter()
        .filter(|x| (x - root_mu).abs() > 1e-9)
        .collect();
    let (sup_value, argmax_x) = sup_scan(|x| Ok(bounds::bound_envelope(order, x, oracle)?.lhs), &xs)?;
    Ok(SupResult {
        nu: order.nu(),
        sup_value,
        argmax_x,
        normalized: sup_value,
    })
}
