//! Eisenstein series, Lambert series and Eichler integrals on the upper
//! half-plane.

mod eichler;
mod forms;
mod qseries;

pub use eichler::{
    check_period_relation, eichler_g, period_polynomial, ramanujan_upper_roots, razar_weil_polynomial, razar_weil_rhs,
    zeta_from_eichler, zeta_from_eichler_derivative, EichlerZeta, PeriodPolynomial,
};
pub use forms::{
    check_modularity, check_quasimodular_e2, eisenstein_e, lambert_f, lambert_f_derivative, lambert_f_qexpansion,
    HPoint,
};
pub use qseries::{eisenstein_qseries, lambert_qseries, sigma, sigma_table, QSeries};
