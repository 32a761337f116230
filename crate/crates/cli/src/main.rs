mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use besselcert::approx::{self, Method};
use besselcert::bounds::BoundName;
use besselcert::oracle::Oracle;
use besselcert::scan::{self, GridSpec, ScanReport, ScanRow, Spacing};
use besselcert::zeros::{self, AiryZeroMode, ZeroEstimate};
use besselcert::Order;
use clap::{Parser, Subcommand, ValueEnum};

use output::Format;

/// Certified Bessel and Airy approximations, bounds and zeros.
#[derive(Parser, Debug)]
#[command(name = "besselcert", version)]
struct Cli {
    /// Write rows here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value = "csv")]
    format: Format,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Oracle value of J_nu(x), or of Ai(-x) with --airy.
    Eval {
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        airy: bool,
    },
    /// An approximation against the oracle; the narrowest one if no method is given.
    Approx {
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<f64>,
        #[arg(long)]
        x: f64,
        #[arg(long)]
        method: Option<Method>,
    },
    /// The reports of one inequality at one point.
    Bounds {
        #[arg(long)]
        name: BoundName,
        #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
        nu: f64,
        #[arg(long)]
        x: Option<f64>,
        /// Second abscissa for the Wronskian kernel.
        #[arg(long)]
        x2: Option<f64>,
    },
    /// A zero estimate with its bracket and the refined zero.
    Zeros {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        nu: Option<f64>,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
    },
    /// Sweep a method or a bound over a grid, one row per point.
    Scan {
        #[arg(long, conflicts_with = "bound", required_unless_present = "bound")]
        method: Option<Method>,
        #[arg(long)]
        bound: Option<BoundName>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0")]
        nu_list: Vec<f64>,
        #[arg(long)]
        x_lo: f64,
        #[arg(long)]
        x_hi: f64,
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long, default_value = "log")]
        spacing: Spacing,
    },
    /// Sup of x^{3/2}|J_nu(x) - sqrt(2/(pi x)) cos(x - omega)|; oracle column holds mu,
    /// ratio holds sup/mu.
    Sup {
        #[arg(long)]
        nu: f64,
        #[arg(long, default_value_t = 150.0)]
        x_max: f64,
        #[arg(long, default_value_t = 3000)]
        coarse: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Family {
    Airy,
    Bessel,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Simplified,
}

fn usage(msg: impl Into<String>) -> besselcert::Error {
    besselcert::Error::Precondition {
        op: "besselcert",
        detail: msg.into(),
    }
}

fn eval_row(subject: &str, nu: f64, x: f64, r: besselcert::EvalResult) -> ScanRow {
    ScanRow {
        subject: subject.into(),
        nu,
        x,
        value: r.value,
        oracle: r.value,
        half_width: r.abs_err_estimate,
        ratio: 0.0,
        holds: true,
    }
}

fn zero_row(subject: &str, nu: f64, est: &ZeroEstimate, truth: f64) -> ScanRow {
    let d = truth - est.center;
    let ratio = if est.one_sided && d < 0.0 {
        f64::INFINITY
    } else if est.half_width > 0.0 {
        d.abs() / est.half_width
    } else if d == 0.0 {
        0.0
    } else {
        f64::INFINITY
    };
    ScanRow {
        subject: subject.into(),
        nu,
        x: est.s as f64,
        value: est.center,
        oracle: truth,
        half_width: est.half_width,
        ratio,
        holds: est.contains(truth),
    }
}

fn run(cmd: Cmd, oracle: &Oracle) -> besselcert::Result<Vec<ScanRow>> {
    Ok(match cmd {
        Cmd::Eval { nu, x, airy } => {
            if airy {
                vec![eval_row("airy", 0.0, x, oracle.airy(x)?)]
            } else {
                let nu = nu.ok_or_else(|| usage("--nu is required unless --airy is given"))?;
                vec![eval_row("bessel_j", nu, x, oracle.j(nu, x)?)]
            }
        }
        Cmd::Approx { nu, x, method } => {
            let airy = method.is_some_and(Method::is_airy);
            let nu = match nu {
                Some(nu) => nu,
                None if airy => 0.0,
                None => return Err(usage("--nu is required for Bessel methods")),
            };
            let order = Order::new(nu)?;
            let a = match method {
                None => approx::best_approx(&order, x, oracle)?,
                Some(Method::Transition) => scan::approx_at(Method::Transition, &order, (x - nu) / nu.cbrt(), oracle)?,
                Some(m) => scan::approx_at(m, &order, x, oracle)?,
            };
            let truth = if airy { oracle.airy(a.x)? } else { oracle.j(nu, a.x)? };
            let mut rep = ScanReport::default();
            rep.push_approx(
                &a,
                if airy { 0.0 } else { nu },
                truth.value,
                truth.abs_err_estimate,
                0.0,
            );
            rep.rows
        }
        Cmd::Bounds { name, nu, x, x2 } => {
            use BoundName as B;
            let order_only = matches!(
                name,
                B::OrderEqualsArgument | B::LeftmostMax | B::NearFirstZero | B::NearFirstZeroPositive
            );
            let x = match x {
                Some(x) => x,
                None if order_only => 0.0,
                None => return Err(usage(format!("--x is required for {name}"))),
            };
            let mut rep = ScanReport::default();
            for r in scan::bounds_at(name, &Order::new(nu)?, x, x2, oracle)? {
                rep.push_bound(&r);
            }
            rep.rows
        }
        Cmd::Zeros { family, s, nu, mode } => match family {
            Family::Airy => {
                let (m, tag) = match mode {
                    Mode::Full => (AiryZeroMode::Full, "airy_zero_full"),
                    Mode::Simplified => (AiryZeroMode::Simplified, "airy_zero_simplified"),
                };
                let est = zeros::airy_zero_estimate(s, m)?;
                vec![zero_row(tag, 0.0, &est, zeros::refine_airy_zero(s, oracle)?)]
            }
            Family::Bessel => {
                let nu = nu.ok_or_else(|| usage("--nu is required for Bessel zeros"))?;
                let order = Order::new(nu)?;
                let est = zeros::bessel_first_zeros_estimate(&order, s, oracle)?;
                vec![zero_row(
                    "bessel_zero",
                    nu,
                    &est,
                    zeros::refine_bessel_zero(&order, s, oracle)?,
                )]
            }
        },
        Cmd::Scan {
            method,
            bound,
            nu_list,
            x_lo,
            x_hi,
            points,
            spacing,
        } => {
            let grid = GridSpec::new(nu_list, (x_lo, x_hi), points, spacing)?;
            let rep = match (method, bound) {
                (Some(m), _) => scan::verify_approx_grid(m, &grid, oracle)?,
                (None, Some(b)) => scan::verify_bounds_grid(b, &grid, oracle)?,
                (None, None) => return Err(usage("one of --method or --bound is required")),
            };
            rep.rows
        }
        Cmd::Sup { nu, x_max, coarse } => {
            let order = Order::new(nu)?;
            let r = scan::olenko_sup(&order, x_max, coarse, oracle)?;
            vec![ScanRow {
                subject: "sup".into(),
                nu,
                x: r.argmax_x,
                value: r.sup_value,
                oracle: order.mu(),
                half_width: 0.0,
                ratio: r.normalized,
                holds: true,
            }]
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let rows = match run(cli.cmd, &Oracle::default()) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let written = match &cli.out {
        Some(p) => File::create(p).and_then(|f| {
            let mut w = BufWriter::new(f);
            output::write_rows(&mut w, &rows, cli.format)?;
            w.flush()
        }),
        None => output::write_rows(io::stdout().lock(), &rows, cli.format),
    };
    match written {
        Ok(()) => {}
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    ExitCode::from(status(&rows))
}

/// 1 if any row is uncertified or violated, else 0.
fn status(rows: &[ScanRow]) -> u8 {
    u8::from(rows.iter().any(|r| r.ratio > 1.0 || !r.holds))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(ratio: f64, holds: bool) -> ScanRow {
        ScanRow {
            subject: "t".into(),
            nu: 0.0,
            x: 1.0,
            value: 0.0,
            oracle: 0.0,
            half_width: 1.0,
            ratio,
            holds,
        }
    }

    #[test]
    fn exit_status_follows_rows() {
        assert_eq!(status(&[]), 0);
        assert_eq!(status(&[row(0.5, true), row(1.0, true)]), 0);
        assert_eq!(status(&[row(0.5, true), row(1.5, true)]), 1);
        assert_eq!(status(&[row(0.0, false)]), 1);
        assert_eq!(status(&[row(f64::INFINITY, false)]), 1);
    }
}
