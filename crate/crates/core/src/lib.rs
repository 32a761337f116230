//! Certified approximations of the Bessel function J_ν(x) and the Airy
//! function Ai(−x), with every error term made explicit and checked against a
//! high-precision series oracle.

// `!(x > 0.0)` is used on purpose so that NaN is rejected too
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod approx;
pub mod bounds;
pub mod error;
pub mod oracle;
pub mod order;
pub mod scan;
pub mod zeros;

pub use error::{Error, Result};
pub use order::{EvalResult, Order, PrecisionCtx};
