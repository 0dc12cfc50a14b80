use rug::Rational;

use crate::error::{Error, Result};
use crate::numerics::series::{boosted_context, GeometricEnvelope, SeriesValue};
use crate::numerics::{const_pi, BigComplex, BigReal, PrecisionContext, DELTA_MIN};
use crate::report::{scaled_tolerance, VerificationReport};
use crate::zeta::zeta_negative_odd;

use super::qseries::{check_weight, sigma_table_numeric};

/// A point of the upper half-plane with `Im z >= floor`.
#[derive(Debug, Clone)]
pub struct HPoint(BigComplex);

impl HPoint {
    /// Uses the default floor [`DELTA_MIN`].
    pub fn new(z: BigComplex) -> Result<Self> {
        Self::with_floor(z, DELTA_MIN)
    }

    pub fn with_floor(z: BigComplex, floor: f64) -> Result<Self> {
        let BigComplex { re, im } = z;
        Ok(HPoint(BigComplex::upper_half_plane(re, im, floor)?))
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionContext) -> Result<Self> {
        Self::new(BigComplex::from_f64(re, im, ctx))
    }

    pub fn z(&self) -> &BigComplex {
        &self.0
    }

    pub fn into_inner(self) -> BigComplex {
        self.0
    }

    /// `-1/z`, checked against the same floor.
    pub fn neg_inv(&self) -> Result<HPoint> {
        HPoint::new(-self.0.recip())
    }

    pub fn translate(&self, n: i64) -> HPoint {
        HPoint(&self.0 + n)
    }

    /// `log10 |e^{2πiz}|`.
    pub fn log10_q(&self) -> f64 {
        -2.0 * std::f64::consts::PI * self.0.im.to_f64() * std::f64::consts::LOG10_E
    }
}

/// `F_a(z) = Σ n^{-a} q^n / (1 - q^n)`, summed in Lambert form.
pub fn lambert_f(a: i64, z: &HPoint, ctx: &PrecisionContext) -> Result<SeriesValue<BigComplex>> {
    let lq = z.log10_q();
    let power = -a as f64;
    let env = GeometricEnvelope::lambert(lq, power)?;
    let wctx = boosted_context(power, lq, ctx)?;
    let q = z.z().q(&wctx);
    let mut qn = BigComplex::one(&wctx);
    env.sum(&wctx, BigComplex::zero(&wctx), |n| {
        qn *= &q;
        let c = BigReal::from_i64(n as i64, &wctx).powi(-a);
        let denom = BigComplex::one(&wctx) - &qn;
        Ok((&qn / &denom).scale(&c))
    })
}

/// `F_a(z) = Σ σ_{-a}(n) q^n`, summed as a q-expansion.
pub fn lambert_f_qexpansion(a: i64, z: &HPoint, ctx: &PrecisionContext) -> Result<SeriesValue<BigComplex>> {
    let lq = z.log10_q();
    // σ_{-a}(n) <= n^{max(-a, 0) + 1}
    let power = (-a).max(0) as f64 + 1.0;
    let env = GeometricEnvelope::new(0.0, power, lq)?;
    let wctx = boosted_context(power, lq, ctx)?;
    let k = env.terms_needed(wctx.log10_epsilon(), wctx.max_terms())?;
    let sig = sigma_table_numeric(-a, k + 1, &wctx);
    let q = z.z().q(&wctx);
    let mut qn = BigComplex::one(&wctx);
    env.sum(&wctx, BigComplex::zero(&wctx), |n| {
        qn *= &q;
        Ok(qn.scale(&sig[n]))
    })
}

/// `d/dz F_a(z) = 2πi Σ n^{1-a} q^n / (1 - q^n)^2`.
pub fn lambert_f_derivative(a: i64, z: &HPoint, ctx: &PrecisionContext) -> Result<SeriesValue<BigComplex>> {
    let lq = z.log10_q();
    let power = (1 - a) as f64;
    let qabs = 10f64.powf(lq);
    let env = GeometricEnvelope::new(-2.0 * (1.0 - qabs).log10(), power, lq)?;
    let wctx = boosted_context(power, lq, ctx)?;
    let q = z.z().q(&wctx);
    let mut qn = BigComplex::one(&wctx);
    let s = env.sum(&wctx, BigComplex::zero(&wctx), |n| {
        qn *= &q;
        let c = BigReal::from_i64(n as i64, &wctx).powi(1 - a);
        let denom = (BigComplex::one(&wctx) - &qn).square();
        Ok((&qn / &denom).scale(&c))
    })?;
    Ok(s.map(|v| v * BigComplex::two_pi_i(&wctx)))
}

/// Normalized Eisenstein series `E_k = 1 + (2/ζ(1-k)) Σ σ_{k-1}(n) q^n`.
pub fn eisenstein_e(k: u32, z: &HPoint, ctx: &PrecisionContext) -> Result<SeriesValue<BigComplex>> {
    check_weight(k)?;
    let c: Rational = Rational::from(2) / zeta_negative_odd(k / 2)?;
    let lq = z.log10_q();
    // σ_{k-1}(n) <= n^k
    let power = f64::from(k);
    let log10_c = c.to_f64().abs().log10();
    let env = GeometricEnvelope::new(log10_c, power, lq)?;
    let wctx = boosted_context(power, lq, ctx)?;
    let wctx = PrecisionContext::with_max_terms(
        wctx.target_digits(),
        wctx.guard_digits() + log10_c.max(0.0).ceil() as u32,
        wctx.max_terms(),
    )?;
    let n_terms = env.terms_needed(wctx.log10_epsilon(), wctx.max_terms())?;
    let sig = sigma_table_numeric(i64::from(k) - 1, n_terms + 1, &wctx);
    let q = z.z().q(&wctx);
    let mut qn = BigComplex::one(&wctx);
    let s = env.sum(&wctx, BigComplex::zero(&wctx), |n| {
        qn *= &q;
        Ok(qn.scale(&sig[n]))
    })?;
    let c = BigReal::from_rational(&c, &wctx);
    Ok(s.map(|v| v.scale(&c) + 1))
}

fn point_param(z: &HPoint) -> (String, String) {
    ("z".into(), z.z().to_string_digits(20))
}

/// `E_k(z) = z^{-k} E_k(-1/z)` for even `k >= 4`.
pub fn check_modularity(k: u32, z: &HPoint, ctx: &PrecisionContext) -> Result<VerificationReport> {
    check_weight(k)?;
    if k < 4 {
        return Err(Error::Domain(
            "weight 2 is only quasimodular; use check_quasimodular_e2".into(),
        ));
    }
    let w = z.neg_inv()?;
    let lhs = eisenstein_e(k, z, ctx)?;
    let rhs = eisenstein_e(k, &w, ctx)?;
    let rhs_value = z.z().powi(-i64::from(k)) * &rhs.value;
    let tol = scaled_tolerance(&lhs.value, &rhs_value, ctx);
    Ok(VerificationReport::new(
        "modularity",
        vec![("k".into(), k.to_string()), point_param(z)],
        lhs.value,
        rhs_value,
        tol,
        lhs.terms + rhs.terms,
    ))
}

/// `E_2(z) = z^{-2} E_2(-1/z) - 6/(πiz)`.
pub fn check_quasimodular_e2(z: &HPoint, ctx: &PrecisionContext) -> Result<VerificationReport> {
    let w = z.neg_inv()?;
    let lhs = eisenstein_e(2, z, ctx)?;
    let rhs = eisenstein_e(2, &w, ctx)?;
    let pi_i_z = BigComplex::new(BigReal::zero(ctx), const_pi(ctx)) * z.z();
    let rhs_value = z.z().powi(-2) * &rhs.value - BigComplex::from_i64(6, ctx) / pi_i_z;
    let tol = scaled_tolerance(&lhs.value, &rhs_value, ctx);
    Ok(VerificationReport::new(
        "quasimodular_e2",
        vec![point_param(z)],
        lhs.value,
        rhs_value,
        tol,
        lhs.terms + rhs.terms,
    ))
}
