//! Arbitrary-precision real and complex scalars, elementary functions and
//! certified series truncation. Everything else in the crate sits on this
//! layer.

mod complex;
mod context;
mod elementary;
mod real;
pub mod series;

pub use complex::BigComplex;
pub use context::PrecisionContext;
pub use elementary::{cot, cot_real, coth, coth_real, elementary, log, Elementary};
pub use real::{const_pi, BigReal};

/// Default floor on `Im z` for half-plane evaluations.
pub const DELTA_MIN: f64 = 1e-3;
