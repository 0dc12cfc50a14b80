//! Riemann zeta at integer arguments.

use rug::{Integer, Rational};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{bernoulli, factorial};
use crate::numerics::series::exponential_sum;
use crate::numerics::{const_pi, BigReal, PrecisionContext};

/// `ζ(2n) = rational_part · π^{2n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZetaEvenValue {
    pub n: u32,
    pub rational_part: Rational,
}

impl ZetaEvenValue {
    pub fn value(&self, ctx: &PrecisionContext) -> BigReal {
        const_pi(ctx).powi(2 * i64::from(self.n)) * BigReal::from_rational(&self.rational_part, ctx)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaMethod {
    Ramanujan,
    Oracle,
}

#[derive(Debug, Clone)]
pub struct ZetaOddValue {
    pub s: u32,
    pub value: BigReal,
    pub method: ZetaMethod,
    /// Decimal digits backed by the certified truncation bounds.
    pub achieved_digits: u32,
}

/// `(-1)^{n-1} B_{2n} 2^{2n-1} / (2n)!`.
pub fn zeta_even(n: u32) -> Result<ZetaEvenValue> {
    if n == 0 {
        return Err(Error::Domain("zeta_even needs n >= 1".into()));
    }
    let b = bernoulli(2 * n as usize)?;
    let mut r = b * Integer::from(Integer::u_pow_u(2, 2 * n - 1)) / factorial(2 * u64::from(n));
    if n.is_multiple_of(2) {
        r = -r;
    }
    Ok(ZetaEvenValue { n, rational_part: r })
}

/// `ζ(1 - 2n) = -B_{2n} / (2n)`.
pub fn zeta_negative_odd(n: u32) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("zeta_negative_odd needs n >= 1".into()));
    }
    Ok(-bernoulli(2 * n as usize)? / Integer::from(2 * n))
}

/// Exact `ζ(s)` for `s <= 0`.
pub fn zeta_nonpositive(s: i64) -> Result<Rational> {
    match s {
        0 => Ok(Rational::from((-1, 2))),
        s if s > 0 => Err(Error::Domain(format!("zeta_nonpositive called with s = {s}"))),
        s if s % 2 == 0 => Ok(Rational::new()),
        s => zeta_negative_odd(((1 - s) / 2) as u32),
    }
}

/// `Σ_{k=0}^{n+1} (-1)^k B_{2k} B_{2n+2-2k} / ((2k)! (2n+2-2k)!) · α^{n+1-k} β^k`
/// as exact coefficients of `α^{n+1-k} β^k`, indexed by `k`.
pub fn bernoulli_pair_coefficients(n: u32) -> Result<Vec<Rational>> {
    (0..=n + 1)
        .map(|k| {
            let a = bernoulli(2 * k as usize)? / factorial(2 * u64::from(k));
            let b = bernoulli((2 * n + 2 - 2 * k) as usize)? / factorial(u64::from(2 * n + 2 - 2 * k));
            let v = a * b;
            Ok(if k % 2 == 1 { -v } else { v })
        })
        .collect()
}

/// Rational `c_n` with `ζ(4n+3) = c_n π^{4n+3} - 2 Σ k^{-4n-3}/(e^{2πk} - 1)`.
pub fn lerch_coefficient(n: u32) -> Result<Rational> {
    let coeffs = bernoulli_pair_coefficients(2 * n + 1)?;
    let sum: Rational = coeffs.into_iter().fold(Rational::new(), |acc, c| acc - c);
    Ok(sum * Integer::from(Integer::u_pow_u(2, 4 * n + 2)))
}

/// `ζ(s)` for odd `s >= 3` from rapidly convergent exponential sums.
///
/// `s ≡ 3 (mod 4)` uses `α = β = π`; `s ≡ 1 (mod 4)` uses `α = π/2, β = 2π`
/// and solves for `ζ(s)`.
pub fn zeta_odd_fast(s: u32, ctx: &PrecisionContext) -> Result<ZetaOddValue> {
    check_odd(s)?;
    let pi = const_pi(ctx);
    let (value, log10_err) = if s % 4 == 3 {
        let n = (s - 3) / 4;
        let c = BigReal::from_rational(&lerch_coefficient(n)?, ctx);
        let tail = exponential_sum(&pi, -i64::from(s), ctx)?;
        (
            c * pi.powi(i64::from(s)) - tail.value * 2,
            tail.log10_tail + 2f64.log10(),
        )
    } else {
        let n = (s - 1) / 2;
        let alpha = &pi / 2;
        let beta = &pi * 2;
        let rhs = ramanujan_rhs(n, &alpha, &beta, ctx)?;
        let sa = exponential_sum(&alpha, -i64::from(s), ctx)?;
        let sb = exponential_sum(&beta, -i64::from(s), ctx)?;
        let an = alpha.powi(-i64::from(n));
        let bn = (-&beta).powi(-i64::from(n));
        let coeff = (&an - &bn) / 2;
        let v = (rhs - &an * &sa.value + &bn * &sb.value) / &coeff;
        let err = 10f64.powf(an.log10_abs() + sa.log10_tail) + 10f64.powf(bn.log10_abs() + sb.log10_tail);
        (v, err.log10() - coeff.log10_abs())
    };
    Ok(ZetaOddValue {
        s,
        value,
        method: ZetaMethod::Ramanujan,
        achieved_digits: achieved(log10_err, ctx),
    })
}

/// `2^{2n} Σ_{k=0}^{n+1} (-1)^{k-1} B_{2k} B_{2n+2-2k}/((2k)!(2n+2-2k)!) α^{n+1-k} β^k`.
pub fn ramanujan_rhs(n: u32, alpha: &BigReal, beta: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    let coeffs = bernoulli_pair_coefficients(n)?;
    let mut acc = BigReal::zero(ctx);
    for (k, c) in coeffs.iter().enumerate() {
        let k = k as i64;
        acc -= BigReal::from_rational(c, ctx) * alpha.powi(i64::from(n) + 1 - k) * beta.powi(k);
    }
    Ok(acc * BigReal::from_i64(4, ctx).powi(i64::from(n)))
}

fn check_odd(s: u32) -> Result<()> {
    if s < 3 || s.is_multiple_of(2) {
        return Err(Error::Domain(format!("expected an odd integer s >= 3, got {s}")));
    }
    Ok(())
}

fn achieved(log10_err: f64, ctx: &PrecisionContext) -> u32 {
    let rounding = f64::from(ctx.working_digits()) - 3.0;
    let d = (-log10_err).min(rounding).floor();
    if d.is_finite() && d > 0.0 {
        d as u32
    } else {
        0
    }
}

/// Direct Dirichlet series with an Euler-Maclaurin tail, run at two head
/// lengths; the reported accuracy is bounded by their agreement.
pub fn zeta_odd_oracle(s: u32, ctx: &PrecisionContext) -> Result<ZetaOddValue> {
    check_odd(s)?;
    let d = f64::from(ctx.working_digits());
    let n1 = (d / 2.0).ceil() as usize + 10;
    let (v1, e1) = euler_maclaurin_zeta(s, n1, ctx)?;
    let (v2, e2) = euler_maclaurin_zeta(s, n1 + 7, ctx)?;
    let diff = (&v1 - &v2).log10_abs();
    let log10_err = diff.max(e1).max(e2);
    let achieved_digits = achieved(log10_err, ctx);
    if achieved_digits < ctx.target_digits() {
        return Err(Error::Precision(format!(
            "zeta oracle reached only {achieved_digits} digits for s = {s}"
        )));
    }
    Ok(ZetaOddValue {
        s,
        value: v2,
        method: ZetaMethod::Oracle,
        achieved_digits,
    })
}

/// `Σ_{m<N} m^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + Σ_j B_{2j}/(2j)! (s)_{2j-1} N^{1-s-2j}`,
/// stopping once the next correction falls below `10^-working`.
fn euler_maclaurin_zeta(s: u32, n: usize, ctx: &PrecisionContext) -> Result<(BigReal, f64)> {
    if n > ctx.max_terms() {
        return Err(Error::Precision(format!("oracle head of {n} terms exceeds max_terms")));
    }
    let s64 = i64::from(s);
    let mut acc = BigReal::zero(ctx);
    for m in 1..n {
        acc += BigReal::from_i64(m as i64, ctx).powi(-s64);
    }
    let nn = BigReal::from_i64(n as i64, ctx);
    let n_pow = nn.powi(1 - s64);
    acc += &n_pow / (s64 - 1);
    acc += nn.powi(-s64) / 2;

    let inv_n2 = nn.square().recip();
    // rising factorial (s)_{2j-1} times N^{1-s-2j}, updated incrementally
    let mut rising = Rational::from(s);
    let mut npow = &n_pow * &inv_n2;
    let eps = ctx.log10_epsilon();
    let mut prev = f64::INFINITY;
    for j in 1.. {
        let b = bernoulli(2 * j)? / factorial(2 * j as u64);
        let term = BigReal::from_rational(&Rational::from(&b * &rising), ctx) * &npow;
        let mag = term.log10_abs();
        acc += term;
        // next correction bounds the remainder for this alternating-sign asymptotic tail
        let sj = Integer::from(s64 + 2 * j as i64 - 1) * Integer::from(s64 + 2 * j as i64);
        rising *= sj;
        npow *= &inv_n2;
        let next = bernoulli(2 * j + 2)? / factorial(2 * j as u64 + 2);
        let next_mag = BigReal::from_rational(&Rational::from(&next * &rising), ctx).log10_abs() + npow.log10_abs();
        if next_mag < eps {
            return Ok((acc, next_mag));
        }
        if next_mag > prev && next_mag > mag {
            return Err(Error::Precision(
                "Euler-Maclaurin corrections stopped decreasing".into(),
            ));
        }
        prev = next_mag;
    }
    unreachable!()
}

/// `ζ(s)` at any integer `s != 1`.
pub fn zeta_at_integer(s: i64, ctx: &PrecisionContext) -> Result<BigReal> {
    match s {
        1 => Err(Error::Pole("zeta has a pole at s = 1".into())),
        s if s <= 0 => Ok(BigReal::from_rational(&zeta_nonpositive(s)?, ctx)),
        s if s % 2 == 0 => Ok(zeta_even((s / 2) as u32)?.value(ctx)),
        s => Ok(zeta_odd_fast(s as u32, ctx)?.value),
    }
}
