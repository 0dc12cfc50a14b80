//! Two-sided evaluation of the registered identities.

mod eval;
mod params;
mod registry;
mod sums;
mod transform;

pub use eval::{entry21_series, evaluate_side, verify, Side};
pub use params::{parse_rational, parse_real_expr, EisensteinParams, Matrix2};
pub use registry::{registry, IdentityId, IdentitySpec, ParamSpec};
pub use sums::{cot_coth_series, cubic_series, lambert_sum, paired_series, pfd_partial_sum, POLE_GUARD};
pub use transform::{
    bernoulli_kernel, euler_residual, frac, g_closed_form, h_coefficients, lambda, thm_hh_sides, transform_a,
    transform_h, transform_h_poly, transformed_characteristics, verify_thm_h,
};
