//! Ramanujan, period and generalized Ramanujan polynomials, and numerically
//! certified root location.

mod families;
mod report;
mod scan;
mod solver;

pub use families::{
    bernoulli_product, full_period_poly, generalized_r, generalized_r_poly, pm_odd_over_z, pm_poly,
    ramanujan_is_self_inversive, ramanujan_poly,
};
pub use report::{unimodularity_report, RootClass, UnimodularityReport};
pub use scan::{
    conjecture_jobs, family_report, generalized_report, nonprincipal_characters, Family, PairOutcome, PairReport,
};
pub use solver::{find_roots, find_roots_rational, find_roots_refined, ComplexPoly, RootCertificate};
