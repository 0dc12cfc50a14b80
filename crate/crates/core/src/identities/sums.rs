use crate::error::{Error, Result};
use crate::numerics::series::{
    exponential_sum, sum_partial_fractions, GeometricEnvelope, PartialFraction, SeriesValue,
};
use crate::numerics::{const_pi, BigComplex, BigReal, PrecisionContext};

/// Distance below which a denominator counts as a pole.
pub const POLE_GUARD: f64 = 1e-6;

/// `S(a, s) = Σ_{m >= 1} m^{-s} / (e^{2am} - 1)`.
pub fn lambert_sum(a: &BigReal, s: i64, ctx: &PrecisionContext) -> Result<SeriesValue<BigReal>> {
    exponential_sum(a, -s, ctx)
}

/// `Σ_{m >= 1} f(m) / (e^{2am} - 1)` given `|f(m)| <= 10^log10_bound · m^power`
/// for every `m >= m0`.
pub(crate) fn damped_sum<F>(
    a: &BigReal,
    log10_bound: f64,
    power: f64,
    m0: usize,
    ctx: &PrecisionContext,
    mut f: F,
) -> Result<SeriesValue<BigReal>>
where
    F: FnMut(i64) -> Result<BigReal>,
{
    if !a.is_positive() {
        return Err(Error::Domain("damped sum needs a positive rate".into()));
    }
    let env = GeometricEnvelope::exponential(a.to_f64(), power)?.scaled(log10_bound);
    let k = env.terms_needed(ctx.log10_epsilon(), ctx.max_terms())?.max(m0);
    let step = (a * 2).exp();
    let mut e = BigReal::one(ctx);
    let mut acc = BigReal::zero(ctx);
    for m in 1..=k {
        e *= &step;
        acc += f(m as i64)? / (&e - 1);
    }
    Ok(SeriesValue {
        value: acc,
        terms: k,
        log10_tail: env.log10_tail(k),
    })
}

/// `sqrt(v)` as a complex number for either sign of `v`.
fn csqrt(v: &BigReal, ctx: &PrecisionContext) -> BigComplex {
    if v.is_sign_negative() {
        BigComplex::new(BigReal::zero(ctx), (-v).sqrt())
    } else {
        BigComplex::from_real(v.sqrt())
    }
}

/// `Σ_m weight · m / (m^2 - c)` split as `weight/2 · (1/(m - √c) + 1/(m + √c))`.
fn quadratic_parts(weight: &BigReal, c: &BigReal, ctx: &PrecisionContext) -> [PartialFraction; 2] {
    let r = csqrt(c, ctx);
    let w = BigComplex::from_real(weight / 2);
    [PartialFraction::new(w.clone(), -&r), PartialFraction::new(w, r)]
}

/// Rejects `m^2 = c` for an integer `m >= 1`, up to [`POLE_GUARD`].
fn guard_square(c: &BigReal, what: &str) -> Result<()> {
    if c.to_f64() <= 0.0 {
        return Ok(());
    }
    let root = c.sqrt().to_f64().round().max(1.0) as i64;
    if (c - root * root).abs().to_f64() < POLE_GUARD {
        return Err(Error::Pole(format!("{what}: denominator vanishes at m = {root}")));
    }
    Ok(())
}

/// `Σ_{m >= 1} {mα coth(mα)/(w + m²α) + mβ coth(mβ)/(w - m²β)}` for real `w`
/// away from `-m²α` and `m²β`.
pub fn cot_coth_series(
    alpha: &BigReal,
    beta: &BigReal,
    w: &BigReal,
    ctx: &PrecisionContext,
) -> Result<SeriesValue<BigReal>> {
    guard_square(&(-(w / alpha)), "w + m^2 alpha")?;
    guard_square(&(w / beta), "w - m^2 beta")?;
    // mα/(w + m²α) = m/(m² + w/α); mβ/(w - m²β) = -m/(m² - w/β)
    let half = BigReal::one(ctx);
    let mut parts = Vec::with_capacity(4);
    parts.extend(quadratic_parts(&half, &(-(w / alpha)), ctx));
    parts.extend(quadratic_parts(&(-half), &(w / beta), ctx));
    let rational = sum_partial_fractions(&parts, ctx)?;
    let wa = w.abs();
    let m0a = (2.0 * wa.to_f64() / alpha.to_f64()).sqrt().ceil() as usize + 1;
    let m0b = (2.0 * wa.to_f64() / beta.to_f64()).sqrt().ceil() as usize + 1;
    let ea = damped_sum(alpha, 4f64.log10(), 0.0, m0a, ctx, |m| {
        let mm = BigReal::from_i64(m, ctx);
        Ok(&mm * alpha * 2 / (w + mm.square() * alpha))
    })?;
    let eb = damped_sum(beta, 4f64.log10(), 0.0, m0b, ctx, |m| {
        let mm = BigReal::from_i64(m, ctx);
        Ok(&mm * beta * 2 / (w - mm.square() * beta))
    })?;
    Ok(SeriesValue {
        value: rational.value.re + ea.value + eb.value,
        terms: rational.terms + ea.terms + eb.terms,
        log10_tail: rational.log10_tail.max(ea.log10_tail).max(eb.log10_tail),
    })
}

fn check_xy(x: &BigReal, y: &BigReal) -> Result<()> {
    if !x.is_positive() || !y.is_positive() {
        return Err(Error::Domain("x and y must be positive".into()));
    }
    guard_square(&x.square(), "n^2 - x^2")
}

/// `Σ_{n >= 1} {n coth(πnx/y)/(n² + y²) - n coth(πny/x)/(n² - x²)}`.
pub fn paired_series(x: &BigReal, y: &BigReal, ctx: &PrecisionContext) -> Result<SeriesValue<BigReal>> {
    check_xy(x, y)?;
    let one = BigReal::one(ctx);
    let mut parts = Vec::with_capacity(4);
    parts.extend(quadratic_parts(&one, &(-y.square()), ctx));
    parts.extend(quadratic_parts(&(-one), &x.square(), ctx));
    let rational = sum_partial_fractions(&parts, ctx)?;
    let (ey, ex) = coth_corrections(
        x,
        y,
        ctx,
        |m, ctx| {
            let mm = BigReal::from_i64(m, ctx);
            Ok(&mm * 2 / (mm.square() + y.square()))
        },
        |m, ctx| {
            let mm = BigReal::from_i64(m, ctx);
            Ok(&mm * 2 / (mm.square() - x.square()))
        },
    )?;
    Ok(SeriesValue {
        value: rational.value.re + ey.value - ex.value,
        terms: rational.terms + ey.terms + ex.terms,
        log10_tail: rational.log10_tail.max(ey.log10_tail).max(ex.log10_tail),
    })
}

/// `Σ_{m >= 1} {y² coth(πmx/y)/(m(m² + y²)) + x² coth(πmy/x)/(m(m² - x²))}`.
pub fn cubic_series(x: &BigReal, y: &BigReal, ctx: &PrecisionContext) -> Result<SeriesValue<BigReal>> {
    check_xy(x, y)?;
    // y²/(m(m²+y²)) = 1/m - m/(m²+y²); x²/(m(m²-x²)) = m/(m²-x²) - 1/m
    let one = BigReal::one(ctx);
    let mut parts = Vec::with_capacity(4);
    parts.extend(quadratic_parts(&(-one.clone()), &(-y.square()), ctx));
    parts.extend(quadratic_parts(&one, &x.square(), ctx));
    let rational = sum_partial_fractions(&parts, ctx)?;
    let (ey, ex) = coth_corrections(
        x,
        y,
        ctx,
        |m, ctx| {
            let mm = BigReal::from_i64(m, ctx);
            Ok(y.square() * 2 / (&mm * (mm.square() + y.square())))
        },
        |m, ctx| {
            let mm = BigReal::from_i64(m, ctx);
            Ok(x.square() * 2 / (&mm * (mm.square() - x.square())))
        },
    )?;
    Ok(SeriesValue {
        value: rational.value.re + ey.value + ex.value,
        terms: rational.terms + ey.terms + ex.terms,
        log10_tail: rational.log10_tail.max(ey.log10_tail).max(ex.log10_tail),
    })
}

/// Exponential parts `Σ f(m)/(e^{2πmx/y} - 1)` and `Σ g(m)/(e^{2πmy/x} - 1)`
/// of the `coth = 1 + 2/(e^{2u} - 1)` split; both weights are at most 4 in
/// absolute value once `m² >= 2x²`.
fn coth_corrections(
    x: &BigReal,
    y: &BigReal,
    ctx: &PrecisionContext,
    mut f: impl FnMut(i64, &PrecisionContext) -> Result<BigReal>,
    mut g: impl FnMut(i64, &PrecisionContext) -> Result<BigReal>,
) -> Result<(SeriesValue<BigReal>, SeriesValue<BigReal>)> {
    let pi = const_pi(ctx);
    let m0 = (2f64.sqrt() * x.to_f64()).ceil() as usize + 1;
    let ey = damped_sum(&(&pi * x / y), 4f64.log10(), 0.0, 1, ctx, |m| f(m, ctx))?;
    let ex = damped_sum(&(&pi * y / x), 4f64.log10(), 0.0, m0, ctx, |m| g(m, ctx))?;
    Ok((ey, ex))
}

/// `1 + 2πxy Σ_{n <= N} {...}` summed directly with paired terms.
pub fn pfd_partial_sum(x: &BigReal, y: &BigReal, n_terms: usize, ctx: &PrecisionContext) -> Result<BigReal> {
    check_xy(x, y)?;
    let pi = const_pi(ctx);
    let mut acc = BigReal::zero(ctx);
    for n in 1..=n_terms as i64 {
        let nn = BigReal::from_i64(n, ctx);
        let a = crate::numerics::coth_real(&(&pi * &nn * x / y), ctx)?;
        let b = crate::numerics::coth_real(&(&pi * &nn * y / x), ctx)?;
        acc += &nn * a / (nn.square() + y.square()) - &nn * b / (nn.square() - x.square());
    }
    Ok(acc * &pi * x * y * 2 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn direct<F: Fn(i64) -> BigReal>(n: i64, f: F, ctx: &PrecisionContext) -> BigReal {
        let mut acc = BigReal::zero(ctx);
        for m in 1..=n {
            acc += f(m);
        }
        acc
    }

    #[test]
    fn cubic_series_matches_direct_summation() {
        // terms decay like m^-3, so a long direct sum pins ~8 digits
        let ctx = PrecisionContext::digits(20).unwrap();
        let x = BigReal::parse("0.3", &ctx).unwrap();
        let y = BigReal::parse("0.7", &ctx).unwrap();
        let pi = const_pi(&ctx);
        let s = cubic_series(&x, &y, &ctx).unwrap().value;
        let d = direct(
            20000,
            |m| {
                let mm = BigReal::from_i64(m, &ctx);
                let a = crate::numerics::coth_real(&(&pi * &mm * &x / &y), &ctx).unwrap();
                let b = crate::numerics::coth_real(&(&pi * &mm * &y / &x), &ctx).unwrap();
                y.square() * a / (&mm * (mm.square() + y.square()))
                    + x.square() * b / (&mm * (mm.square() - x.square()))
            },
            &ctx,
        );
        assert!((s - d).abs().to_f64() < 1e-8);
    }

    #[test]
    fn poles_are_rejected() {
        let ctx = PrecisionContext::digits(20).unwrap();
        let one = BigReal::one(&ctx);
        let two = BigReal::from_i64(2, &ctx);
        assert!(matches!(paired_series(&two, &one, &ctx), Err(Error::Pole(_))));
        // w = 4 β hits m = 2
        assert!(matches!(
            cot_coth_series(&one, &one, &BigReal::from_i64(4, &ctx), &ctx),
            Err(Error::Pole(_))
        ));
    }
}
