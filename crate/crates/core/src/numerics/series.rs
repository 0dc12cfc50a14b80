//! Truncation rules with certified tail bounds.
//!
//! Bounds are tracked as base-10 logarithms in `f64`, so they stay
//! meaningful at any working precision.

use std::ops::AddAssign;

use crate::error::{Error, Result};
use crate::exact::bernoulli;

use super::{BigComplex, BigReal, PrecisionContext};

/// A summed series together with its truncation certificate.
#[derive(Debug, Clone)]
pub struct SeriesValue<T> {
    pub value: T,
    pub terms: usize,
    /// `log10` of an upper bound on the neglected tail.
    pub log10_tail: f64,
}

impl<T> SeriesValue<T> {
    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> SeriesValue<U> {
        SeriesValue {
            value: f(self.value),
            terms: self.terms,
            log10_tail: self.log10_tail,
        }
    }
}

/// Envelope `|t_m| <= scale * m^power * ratio^m` valid for every `m >= 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricEnvelope {
    log10_scale: f64,
    power: f64,
    log10_ratio: f64,
}

impl GeometricEnvelope {
    pub fn new(log10_scale: f64, power: f64, log10_ratio: f64) -> Result<Self> {
        if !(log10_ratio < 0.0) || !log10_scale.is_finite() || !power.is_finite() {
            return Err(Error::Precision(format!(
                "series envelope is not geometric (log10 ratio {log10_ratio})"
            )));
        }
        Ok(GeometricEnvelope {
            log10_scale,
            power,
            log10_ratio,
        })
    }

    /// Envelope of `m^power / (e^{2αm} - 1)` for `α > 0`, using
    /// `1/(e^{2αm} - 1) <= e^{-2αm} / (1 - e^{-2α})`.
    pub fn exponential(alpha: f64, power: f64) -> Result<Self> {
        let ratio = (-2.0 * alpha).exp();
        Self::new(-(1.0 - ratio).log10(), power, -2.0 * alpha * std::f64::consts::LOG10_E)
    }

    /// Envelope of `m^power |q|^m / (1 - |q|^m)` given `log10 |q|`.
    pub fn lambert(log10_q: f64, power: f64) -> Result<Self> {
        let q = 10f64.powf(log10_q);
        Self::new(-(1.0 - q).log10(), power, log10_q)
    }

    pub fn scaled(mut self, log10_factor: f64) -> Self {
        self.log10_scale += log10_factor;
        self
    }

    /// `log10` of a bound on `sum_{m > k} |t_m|`; `+inf` while the envelope
    /// is not yet contracting.
    pub fn log10_tail(&self, k: usize) -> f64 {
        let m = (k + 1) as f64;
        let first = self.log10_scale + self.power * m.log10() + m * self.log10_ratio;
        let rho = self.power.max(0.0) * ((m + 1.0) / m).log10() + self.log10_ratio;
        if rho >= 0.0 {
            return f64::INFINITY;
        }
        first - (1.0 - 10f64.powf(rho)).log10()
    }

    /// Smallest `k` whose tail bound is below `10^log10_eps`.
    pub fn terms_needed(&self, log10_eps: f64, max_terms: usize) -> Result<usize> {
        let ok = |k: usize| self.log10_tail(k) < log10_eps;
        if ok(0) {
            return Ok(0);
        }
        let mut hi = 1usize;
        while !ok(hi) {
            if hi >= max_terms {
                return Err(Error::Precision(format!(
                    "series needs more than max_terms = {max_terms} terms"
                )));
            }
            hi = (hi * 2).min(max_terms);
        }
        let mut lo = hi / 2;
        while hi - lo > 1 {
            let mid = (lo + hi) / 2;
            if ok(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(hi)
    }

    /// Sums `term(1) + ... + term(K)` with `K` chosen so the certified tail is
    /// below `10^-working`.
    pub fn sum<T, F>(&self, ctx: &PrecisionContext, mut acc: T, mut term: F) -> Result<SeriesValue<T>>
    where
        T: AddAssign<T>,
        F: FnMut(usize) -> Result<T>,
    {
        let k = self.terms_needed(ctx.log10_epsilon(), ctx.max_terms())?;
        for m in 1..=k {
            acc += term(m)?;
        }
        Ok(SeriesValue {
            value: acc,
            terms: k,
            log10_tail: self.log10_tail(k),
        })
    }
}

/// Context with enough extra guard digits that the largest term of
/// `n^power 10^{n log10_ratio}` cannot eat the target accuracy.
pub fn boosted_context(power: f64, log10_q: f64, ctx: &PrecisionContext) -> Result<PrecisionContext> {
    // n^power |q|^n peaks at n = power / (-ln |q|)
    let peak_n = if power > 0.0 {
        (power / (-log10_q * std::f64::consts::LN_10)).max(1.0)
    } else {
        1.0
    };
    let top = power.max(0.0) * peak_n.log10() + peak_n * log10_q;
    let extra = top.max(0.0).ceil() as u32 + 2;
    PrecisionContext::with_max_terms(ctx.target_digits(), ctx.guard_digits() + extra, ctx.max_terms())
}

/// `sum_{m >= 1} m^power / (e^{2am} - 1)` for `a > 0`, truncated by
/// [`GeometricEnvelope::exponential`].
pub fn exponential_sum(a: &BigReal, power: i64, ctx: &PrecisionContext) -> Result<SeriesValue<BigReal>> {
    if !a.is_positive() {
        return Err(Error::Domain("exponential sum needs a positive rate".into()));
    }
    let env = GeometricEnvelope::exponential(a.to_f64(), power as f64)?;
    let step = (a * 2).exp();
    let mut e = BigReal::one(ctx);
    env.sum(ctx, BigReal::zero(ctx), |m| {
        e *= &step;
        let num = BigReal::from_i64(m as i64, ctx).powi(power);
        Ok(num / (&e - 1))
    })
}

/// One summand `weight / (m + shift)` of a partial-fraction series.
#[derive(Debug, Clone)]
pub struct PartialFraction {
    pub weight: BigComplex,
    pub shift: BigComplex,
}

impl PartialFraction {
    pub fn new(weight: BigComplex, shift: BigComplex) -> Self {
        PartialFraction { weight, shift }
    }

    pub fn real(weight: BigReal, shift: BigReal) -> Self {
        PartialFraction {
            weight: weight.into(),
            shift: shift.into(),
        }
    }
}

/// `sum_{m >= 1} sum_i w_i / (m + c_i)` for weights summing to zero.
///
/// The head is summed directly; the tail from `N` on uses Euler-Maclaurin
/// with the antiderivative `-sum_i w_i log(N + c_i)` and a remainder bound
/// `2 zeta(2p) (2p-1)! / (2π)^{2p} * sum_i |w_i| / (N - |c_i|)^{2p}`.
pub fn sum_partial_fractions(parts: &[PartialFraction], ctx: &PrecisionContext) -> Result<SeriesValue<BigComplex>> {
    let mut total_w = BigComplex::zero(ctx);
    let mut abs_w = 0.0f64;
    let mut cmax = 0.0f64;
    for p in parts {
        total_w += &p.weight;
        abs_w += 10f64.powf(p.weight.log10_abs());
        cmax = cmax.max(10f64.powf(p.shift.log10_abs()));
    }
    if parts.is_empty() {
        return Ok(SeriesValue {
            value: BigComplex::zero(ctx),
            terms: 0,
            log10_tail: f64::NEG_INFINITY,
        });
    }
    if total_w.log10_abs() > abs_w.log10() + ctx.log10_epsilon() + 2.0 {
        return Err(Error::Validation(
            "partial-fraction weights do not sum to zero; series diverges".into(),
        ));
    }

    let digits = f64::from(ctx.working_digits());
    let n_start = (cmax.ceil() + (digits / 2.0).ceil() + 10.0) as usize;
    if n_start > ctx.max_terms() {
        return Err(Error::Precision(format!("partial-fraction head needs {n_start} terms")));
    }

    let mut acc = BigComplex::zero(ctx);
    for m in 1..n_start {
        let mm = BigReal::from_i64(m as i64, ctx);
        for p in parts {
            let den = &p.shift + &mm;
            if den.log10_abs() < ctx.log10_epsilon() {
                return Err(Error::Pole(format!("partial fraction pole at m = {m}")));
            }
            acc += &p.weight / &den;
        }
    }

    let nn = BigReal::from_i64(n_start as i64, ctx);
    let shifted: Vec<BigComplex> = parts.iter().map(|p| &p.shift + &nn).collect();
    // integral and half end-point term
    for (p, s) in parts.iter().zip(&shifted) {
        acc -= &p.weight * &s.ln_unchecked();
        acc += &(&p.weight / s) / 2;
    }

    let gap = n_start as f64 - cmax;
    let log10_2pi = (2.0 * std::f64::consts::PI).log10();
    let mut log_fact = 0.0f64; // log10 (2p-1)!
    let inv_sq: Vec<BigComplex> = shifted.iter().map(|s| s.square().recip()).collect();
    let mut powers: Vec<BigComplex> = inv_sq.clone();
    let mut prev_bound = f64::INFINITY;
    let mut j = 1usize;
    loop {
        // term B_{2j}/(2j) * sum_i w_i (N + c_i)^{-2j}
        let b = bernoulli(2 * j)?;
        let coeff = BigReal::from_rational(&b, ctx) / (2 * j as i64);
        let mut s = BigComplex::zero(ctx);
        for (p, pw) in parts.iter().zip(&powers) {
            s += &p.weight * pw;
        }
        acc += &s * &coeff;

        // remainder after j terms uses p = j + 1 in the bound
        let p2 = 2.0 * (j + 1) as f64;
        log_fact += ((2 * j) as f64).log10() + ((2 * j + 1) as f64).log10();
        let bound = (4.0f64).log10() + log_fact - p2 * log10_2pi + abs_w.log10() - p2 * gap.log10();
        if bound < ctx.log10_epsilon() {
            return Ok(SeriesValue {
                value: acc,
                terms: n_start - 1 + j,
                log10_tail: bound,
            });
        }
        if bound > prev_bound || j > 10 * ctx.working_digits() as usize {
            return Err(Error::Precision("Euler-Maclaurin tail failed to converge".into()));
        }
        prev_bound = bound;
        for (pw, q) in powers.iter_mut().zip(&inv_sq) {
            *pw *= q;
        }
        j += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::const_pi;

    #[test]
    fn envelope_terms_for_exponential_sum() {
        // sum 1/(e^{2πm} - 1): ratio e^{-2π} ~ 10^{-2.73}
        let env = GeometricEnvelope::exponential(std::f64::consts::PI, 0.0).unwrap();
        let k = env.terms_needed(-60.0, 1000).unwrap();
        assert!((20..=23).contains(&k), "k = {k}");
        assert!(env.log10_tail(k) < -60.0);
        assert!(env.log10_tail(k - 1) >= -60.0);
    }

    #[test]
    fn envelope_respects_max_terms() {
        let env = GeometricEnvelope::exponential(1e-4, 0.0).unwrap();
        assert!(matches!(env.terms_needed(-60.0, 100), Err(Error::Precision(_))));
    }

    #[test]
    fn exponential_sum_matches_direct_terms() {
        let ctx = PrecisionContext::digits(30).unwrap();
        let pi = const_pi(&ctx);
        let v = exponential_sum(&pi, -3, &ctx).unwrap();
        let mut direct = BigReal::zero(&ctx);
        for m in 1..40i64 {
            let mm = BigReal::from_i64(m, &ctx);
            direct += mm.powi(-3) / ((&pi * (2 * m)).exp() - 1);
        }
        assert!((v.value - direct).log10_abs() < -38.0);
        assert!(exponential_sum(&BigReal::zero(&ctx), 1, &ctx).is_err());
    }

    #[test]
    fn partial_fractions_telescoping_sum() {
        // sum 1/m - 1/(m+1) = 1
        let ctx = PrecisionContext::digits(40).unwrap();
        let parts = vec![
            PartialFraction::real(BigReal::one(&ctx), BigReal::zero(&ctx)),
            PartialFraction::real(-BigReal::one(&ctx), BigReal::one(&ctx)),
        ];
        let v = sum_partial_fractions(&parts, &ctx).unwrap();
        assert!((v.value - 1).log10_abs() < -48.0);
    }

    #[test]
    fn partial_fractions_zeta_two_difference() {
        // sum 1/m^2 ... via 1/(m - 1/2) - 1/(m + 1/2) = 4 sum 1/(4m^2 - 1)... = 2
        // sum_{m>=1} [1/(m-1/2) - 1/(m+1/2)] = 1/(1/2) = 2
        let ctx = PrecisionContext::digits(40).unwrap();
        let half = BigReal::from_f64(0.5, &ctx);
        let parts = vec![
            PartialFraction::real(BigReal::one(&ctx), -half.clone()),
            PartialFraction::real(-BigReal::one(&ctx), half),
        ];
        let v = sum_partial_fractions(&parts, &ctx).unwrap();
        assert!((v.value - 2).log10_abs() < -48.0);
    }

    #[test]
    fn partial_fractions_complex_poles() {
        // sum_{m>=1} [m/(m^2+1) - 1/m] relates to digamma; check against
        // the classical value  sum 1/(m(m^2+1)) = -Re ψ(1+i) - γ ... use
        // pi*coth(pi): sum_{m>=1} 1/(m^2+1) = (π coth π - 1)/2
        // written as (i/2)[1/(m+i) - 1/(m-i)]
        let ctx = PrecisionContext::digits(40).unwrap();
        let i = BigComplex::i(&ctx);
        let half_i = &i / 2;
        let parts = vec![
            PartialFraction::new(half_i.clone(), i.clone()),
            PartialFraction::new(-half_i, -i),
        ];
        let v = sum_partial_fractions(&parts, &ctx).unwrap();
        let pi = const_pi(&ctx);
        let expected = (&pi * &BigReal(pi.0.clone().coth()) - 1) / 2;
        assert!((v.value - &expected).log10_abs() < -48.0);
    }

    #[test]
    fn partial_fractions_reject_divergent_input() {
        let ctx = PrecisionContext::digits(20).unwrap();
        let parts = vec![PartialFraction::real(BigReal::one(&ctx), BigReal::zero(&ctx))];
        assert!(sum_partial_fractions(&parts, &ctx).is_err());
    }
}
