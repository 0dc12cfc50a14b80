//! The general transformation formula for `H(z, -m, r1, r2)` under
//! `z -> Vz`, and its `r1 = r2 = 0`, `V = S` specialization.

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::exact::{bernoulli, bernoulli_poly, factorial, LaurentPoly};
use crate::modular::{lambert_f, HPoint};
use crate::numerics::series::{boosted_context, GeometricEnvelope, SeriesValue};
use crate::numerics::{const_pi, log, BigComplex, BigReal, PrecisionContext};
use crate::report::{scaled_tolerance, VerificationReport};
use crate::zeta::{zeta_at_integer, zeta_even};

use super::params::Matrix2;

/// `{x} = x - floor(x)`.
pub fn frac(x: &Rational) -> Rational {
    let f = x.clone().floor();
    Rational::from(x - &f)
}

/// Characteristic function of the integers.
pub fn lambda(x: &Rational) -> bool {
    *x.denom() == 1
}

/// `A(z, -m, r1, r2) = Σ_{n > -r1} Σ_{k >= 1} k^{-m-1} e^{2πik((n + r1)z + r2)}`.
///
/// The `n`-sum is geometric, leaving
/// `Σ_k k^{-m-1} e^{2πikr2} x^k / (1 - q^k)` with `x = e^{2πi t0 z}` and
/// `t0 ∈ (0, 1]` the smallest admissible `n + r1`.
pub fn transform_a(
    z: &HPoint,
    m: i64,
    r1: &Rational,
    r2: &Rational,
    ctx: &PrecisionContext,
) -> Result<SeriesValue<BigComplex>> {
    let n0 = Integer::from((-r1.clone()).floor_ref()) + 1;
    let t0 = Rational::from(&n0 + r1);
    let lq = z.log10_q();
    let lx = lq * t0.to_f64();
    let power = (-m - 1) as f64;
    let qabs = 10f64.powf(lq);
    let env = GeometricEnvelope::new(-(1.0 - qabs).log10(), power, lx)?;
    let wctx = boosted_context(power, lx, ctx)?;
    let two_pi_i = BigComplex::two_pi_i(&wctx);
    let zz = z.z().with_bits(wctx.bits());
    let q = (&zz * &two_pi_i).exp();
    let x = (&(&zz * &BigReal::from_rational(&t0, &wctx)) * &two_pi_i).exp();
    let phase = (&two_pi_i * &BigReal::from_rational(r2, &wctx)).exp();
    let step = &x * &phase;
    let mut qk = BigComplex::one(&wctx);
    let mut num = BigComplex::one(&wctx);
    env.sum(&wctx, BigComplex::zero(&wctx), |k| {
        qk *= &q;
        num *= &step;
        let c = BigReal::from_i64(k as i64, &wctx).powi(-m - 1);
        let denom = BigComplex::one(&wctx) - &qk;
        Ok((&num / &denom).scale(&c))
    })
}

/// `H(z, -m, r1, r2) = A(z, -m, r1, r2) + (-1)^m A(z, -m, -r1, -r2)`.
pub fn transform_h(
    z: &HPoint,
    m: i64,
    r1: &Rational,
    r2: &Rational,
    ctx: &PrecisionContext,
) -> Result<SeriesValue<BigComplex>> {
    let a = transform_a(z, m, r1, r2, ctx)?;
    let b = transform_a(z, m, &Rational::from(-r1), &Rational::from(-r2), ctx)?;
    let value = if m % 2 == 0 {
        a.value + b.value
    } else {
        a.value - b.value
    };
    Ok(SeriesValue {
        value,
        terms: a.terms + b.terms,
        log10_tail: a.log10_tail.max(b.log10_tail),
    })
}

/// `R1 = a r1 + c r2`, `R2 = b r1 + d r2`.
pub fn transformed_characteristics(v: &Matrix2, r1: &Rational, r2: &Rational) -> (Rational, Rational) {
    let big_r1 = Rational::from(r1 * v.a) + Rational::from(r2 * v.c);
    let big_r2 = Rational::from(r1 * v.b) + Rational::from(r2 * v.d);
    (big_r1, big_r2)
}

/// `h(z, -m, r1, r2)` as a Laurent polynomial in `u = cz + d`: the
/// coefficient of `u^{k-1}` is
/// `Σ_j (-1)^{k-1} B_k((j - {R1})/c) B_{m+2-k}({(jd + ρ)/c}) / (k! (m+2-k)!)`.
pub fn h_coefficients(m: i64, r1: &Rational, r2: &Rational, v: &Matrix2) -> Result<LaurentPoly> {
    if m + 2 < 0 {
        return Ok(LaurentPoly::zero());
    }
    let top = (m + 2) as usize;
    let (big_r1, big_r2) = transformed_characteristics(v, r1, r2);
    let f1 = frac(&big_r1);
    let rho = Rational::from(&frac(&big_r2) * v.c) - Rational::from(&f1 * v.d);
    let mut out = LaurentPoly::zero();
    for k in 0..=top {
        let mut acc = Rational::new();
        for j in 1..=v.c {
            let x1 = (Rational::from(j) - &f1) / v.c;
            let x2 = frac(&((Rational::from(j * v.d) + &rho) / v.c));
            acc += bernoulli_poly(k, &x1)? * bernoulli_poly(top - k, &x2)?;
        }
        acc /= factorial(k as u64) * factorial((top - k) as u64);
        if k % 2 == 0 {
            acc = -acc;
        }
        out = &out + &LaurentPoly::monomial(acc, k as i64 - 1);
    }
    Ok(out)
}

fn eval_laurent(p: &LaurentPoly, u: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
    let (Some(lo), Some(hi)) = (p.min_exponent(), p.max_exponent()) else {
        return BigComplex::zero(ctx);
    };
    let mut acc = BigComplex::zero(ctx);
    for e in (lo..=hi).rev() {
        acc = &acc * u + &BigComplex::from_rational(&p.coeff(e), ctx);
    }
    &acc * &u.powi(lo)
}

/// Numerical value of `h(z, -m, r1, r2)`.
pub fn transform_h_poly(
    z: &BigComplex,
    m: i64,
    r1: &Rational,
    r2: &Rational,
    v: &Matrix2,
    ctx: &PrecisionContext,
) -> Result<BigComplex> {
    let p = h_coefficients(m, r1, r2, v)?;
    Ok(eval_laurent(&p, &v.automorphy(z), ctx))
}

/// `Σ_{k=0}^{m+2} B_k(1)/k! · B_{m+2-k}/(m+2-k)! · (-z)^{k-1}` as a Laurent
/// polynomial in `z`.
pub fn bernoulli_kernel(m: i64) -> Result<LaurentPoly> {
    if m + 2 < 0 {
        return Ok(LaurentPoly::zero());
    }
    let top = (m + 2) as usize;
    let mut out = LaurentPoly::zero();
    for k in 0..=top {
        let bk1 = if k == 1 { Rational::from((1, 2)) } else { bernoulli(k)? };
        let mut c = bk1 * bernoulli(top - k)? / (factorial(k as u64) * factorial((top - k) as u64));
        // (-z)^{k-1}
        if k % 2 == 0 {
            c = -c;
        }
        out = &out + &LaurentPoly::monomial(c, k as i64 - 1);
    }
    Ok(out)
}

/// Rational residual of the `m = 2n - 1` specialization with
/// `ζ(2n) = c π^{2n}`: `c (1 + z^{2n-1}) + (-4)^n · kernel(z)`, which should
/// vanish identically.
pub fn euler_residual(n: u32) -> Result<LaurentPoly> {
    if n == 0 {
        return Err(Error::Domain("euler_residual needs n >= 1".into()));
    }
    let c = zeta_even(n)?.rational_part;
    let lhs = &LaurentPoly::monomial(c.clone(), 0) + &LaurentPoly::monomial(c, 2 * i64::from(n) - 1);
    let mut scale = Rational::from(Integer::from(Integer::u_pow_u(4, n)));
    if n % 2 == 1 {
        scale = -scale;
    }
    let kernel = bernoulli_kernel(2 * i64::from(n) - 1)?.scale(&scale);
    Ok(&lhs + &kernel)
}

/// `g(z, -m)` for `r1 = r2 = 0`, `V = S`: `πi - log z` at `m = 0`, else
/// `(1 - (-z)^m) ζ(m + 1)`.
pub fn g_closed_form(z: &BigComplex, m: i64, ctx: &PrecisionContext) -> Result<BigComplex> {
    if m == 0 {
        let pi_i = BigComplex::new(BigReal::zero(ctx), const_pi(ctx));
        return Ok(&pi_i - &log(z, ctx)?);
    }
    let zeta = zeta_at_integer(m + 1, ctx)?;
    let factor = BigComplex::one(ctx) - (-z).powi(m);
    Ok(factor.scale(&zeta))
}

/// Both sides of the `r1 = r2 = 0`, `V = S` specialization,
/// `z^m (1 + (-1)^m) F_{m+1}(-1/z)` and
/// `(1 + (-1)^m) F_{m+1}(z) + g(z, -m) + (2πi)^{m+1} kernel(z)`.
pub fn thm_hh_sides(z: &HPoint, m: i64, ctx: &PrecisionContext) -> Result<(BigComplex, BigComplex, usize)> {
    let w = z.neg_inv()?;
    let zz = z.z();
    let even = m % 2 == 0;
    let (fl, fr, terms) = if even {
        let fl = lambert_f(m + 1, &w, ctx)?;
        let fr = lambert_f(m + 1, z, ctx)?;
        let t = fl.terms + fr.terms;
        (
            fl.value * BigComplex::from_i64(2, ctx),
            fr.value * BigComplex::from_i64(2, ctx),
            t,
        )
    } else {
        (BigComplex::zero(ctx), BigComplex::zero(ctx), 0)
    };
    let lhs = &zz.powi(m) * &fl;
    let kernel = eval_laurent(&bernoulli_kernel(m)?, zz, ctx);
    let rhs = &(&fr + &g_closed_form(zz, m, ctx)?) + &(&BigComplex::two_pi_i(ctx).powi(m + 1) * &kernel);
    Ok((lhs, rhs, terms))
}

/// Checks `(cz + d)^m H(Vz, -m, r1, r2) = H(z, -m, R1, R2) + g + (2πi)^{m+1} h`.
///
/// Supported: `r1 = r2 = 0` with `V = S` (closed-form `g`), or `r1` and `R1`
/// both non-integers (`g = 0`).
pub fn verify_thm_h(
    z: &HPoint,
    m: i64,
    r1: &Rational,
    r2: &Rational,
    v: &Matrix2,
    ctx: &PrecisionContext,
) -> Result<VerificationReport> {
    let (big_r1, big_r2) = transformed_characteristics(v, r1, r2);
    let zero_case = *r1 == 0 && *r2 == 0 && v.is_s();
    if !zero_case && (lambda(r1) || lambda(&big_r1)) {
        return Err(Error::Unsupported(format!(
            "g(z,-m,r1,r2) with an integer among r1 = {r1}, R1 = {big_r1} needs the general limit; only r1 = r2 = 0 with V = S is covered"
        )));
    }
    let vz = HPoint::new(v.act(z.z()))?;
    let left = transform_h(&vz, m, r1, r2, ctx)?;
    let right = transform_h(z, m, &big_r1, &big_r2, ctx)?;
    let lhs = &v.automorphy(z.z()).powi(m) * &left.value;
    let g = if zero_case {
        g_closed_form(z.z(), m, ctx)?
    } else {
        BigComplex::zero(ctx)
    };
    let h = transform_h_poly(z.z(), m, r1, r2, v, ctx)?;
    let rhs = &(&right.value + &g) + &(&BigComplex::two_pi_i(ctx).powi(m + 1) * &h);
    let tol = scaled_tolerance(&lhs, &rhs, ctx);
    let params = vec![
        ("z".to_string(), z.z().to_string_digits(20)),
        ("m".to_string(), m.to_string()),
        ("r1".to_string(), r1.to_string()),
        ("r2".to_string(), r2.to_string()),
        ("matrix".to_string(), v.to_string()),
    ];
    Ok(VerificationReport::new(
        "thm_h_26",
        params,
        lhs,
        rhs,
        tol,
        left.terms + right.terms,
    ))
}
