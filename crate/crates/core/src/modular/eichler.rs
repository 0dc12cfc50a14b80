use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::exact::{factorial, RationalPoly};
use crate::numerics::series::SeriesValue;
use crate::numerics::{const_pi, BigComplex, BigReal, PrecisionContext};
use crate::polyroots::{bernoulli_product, find_roots_rational, ramanujan_poly, ComplexPoly};
use crate::report::{scaled_tolerance, VerificationReport};
use crate::zeta::{zeta_at_integer, zeta_even, zeta_negative_odd, zeta_nonpositive, zeta_odd_fast};

use super::forms::{lambert_f, lambert_f_derivative, HPoint};

/// Eichler integral `G_{2m+1}(z) = ζ(-1-2m)/2 · (2πiz)^{2m+1}/(2m+1)! + F_{2m+1}(z)`.
pub fn eichler_g(m: u32, z: &HPoint, ctx: &PrecisionContext) -> Result<SeriesValue<BigComplex>> {
    if m == 0 {
        return Err(Error::Domain("Eichler integral needs m >= 1".into()));
    }
    let c = zeta_negative_odd(m + 1)? / Integer::from(2) / factorial(2 * u64::from(m) + 1);
    let poly = (BigComplex::two_pi_i(ctx) * z.z()).powi(2 * i64::from(m) + 1) * &BigReal::from_rational(&c, ctx);
    let f = lambert_f(2 * i64::from(m) + 1, z, ctx)?;
    Ok(f.map(|v| v + poly))
}

/// A polynomial `ζ(2m+1) · zeta_part(z) + (2πi)^{2m+1} · pi_part(z)` with
/// rational coefficient polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PeriodPolynomial {
    pub m: u32,
    pub zeta_part: RationalPoly,
    pub pi_part: RationalPoly,
}

impl PeriodPolynomial {
    pub fn eval(&self, z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
        let zeta = BigComplex::from_real(zeta_odd_fast(2 * self.m + 1, ctx)?.value);
        let pi = BigComplex::two_pi_i(ctx).powi(2 * i64::from(self.m) + 1);
        let a = ComplexPoly::from_rational(&self.zeta_part, ctx).eval(z);
        let b = ComplexPoly::from_rational(&self.pi_part, ctx).eval(z);
        Ok(zeta * a + pi * b)
    }
}

/// `(ζ(2m+1)/2)(1 - z^{2m}) - ((2πi)^{2m+1}/2) Σ_{n=1}^{m} B_{2n} B_{2m-2n+2} z^{2n-1} / ((2n)! (2m-2n+2)!)`.
pub fn period_polynomial(m: u32) -> Result<PeriodPolynomial> {
    if m == 0 {
        return Err(Error::Domain("period polynomial needs m >= 1".into()));
    }
    let half = Rational::from((1, 2));
    let zeta_part = &RationalPoly::constant(half.clone()) - &RationalPoly::monomial(half.clone(), 2 * m as usize);
    let mut pi = vec![Rational::new(); 2 * m as usize];
    for n in 1..=m {
        pi[2 * n as usize - 1] = -(bernoulli_product(m, n)? * &half);
    }
    Ok(PeriodPolynomial {
        m,
        zeta_part,
        pi_part: RationalPoly::new(pi),
    })
}

/// `-Σ_{j=0}^{k-2} (2πi)^j ζ(k-1-j) ζ(-j) z^j / j!`, kept symbolic in
/// `ζ(k-1)` and `(2πi)^{k-1}`.
///
/// `ζ(2r) = c π^{2r}` is rewritten as `c (2πi)^{2r} / (-4)^r`. At `j = k-2`
/// the product `ζ(1) ζ(2-k)` is read as its finite limit `ζ'(2-k)`, with
/// `ζ'(-2m) = (-1)^m (2m)! ζ(2m+1) / (2 (2π)^{2m})`.
pub fn razar_weil_polynomial(k: u32) -> Result<PeriodPolynomial> {
    check_rw_weight(k)?;
    let m = (k - 2) / 2;
    let top = (k - 2) as usize;
    let mut zeta = vec![Rational::new(); top + 1];
    let mut pi = vec![Rational::new(); top + 1];
    for j in 0..=top {
        let jf = factorial(j as u64);
        if j == top {
            // ζ'(-2m) (2πi)^{2m} = (2m)! ζ(2m+1) / 2
            let lim = Rational::from(factorial(2 * u64::from(m))) / Integer::from(2);
            zeta[j] -= lim / &jf;
            continue;
        }
        let zj = zeta_nonpositive(-(j as i64))?;
        if zj == 0 {
            continue;
        }
        let s = (k as usize) - 1 - j;
        if j == 0 {
            // ζ(k-1) stays symbolic
            zeta[0] -= zj;
            continue;
        }
        if s % 2 == 1 {
            return Err(Error::Unsupported(format!("odd zeta value ζ({s}) in a middle term")));
        }
        let r = (s / 2) as u32;
        let mut c = zeta_even(r)?.rational_part;
        c /= Integer::from(Integer::u_pow_u(4, r));
        if r % 2 == 1 {
            c = -c;
        }
        pi[j] -= c * zj / jf;
    }
    Ok(PeriodPolynomial {
        m,
        zeta_part: RationalPoly::new(zeta),
        pi_part: RationalPoly::new(pi),
    })
}

fn check_rw_weight(k: u32) -> Result<()> {
    if k < 4 || k % 2 == 1 {
        return Err(Error::Domain(format!("weight must be even and at least 4, got {k}")));
    }
    Ok(())
}

/// Numerical evaluation of the Razar–Weil right side, term by term.
pub fn razar_weil_rhs(k: u32, z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    check_rw_weight(k)?;
    let m = i64::from((k - 2) / 2);
    let top = i64::from(k) - 2;
    let tpi = BigComplex::two_pi_i(ctx);
    let mut acc = BigComplex::zero(ctx);
    for j in 0..=top {
        let pair = if j == top {
            // ζ'(-2m)
            let num = BigReal::from_integer(&factorial(2 * m as u64), ctx) * zeta_at_integer(2 * m + 1, ctx)?;
            let den = (const_pi(ctx) * 2).powi(2 * m) * 2;
            let v = num / den;
            if m % 2 == 1 {
                -v
            } else {
                v
            }
        } else {
            let zj = zeta_nonpositive(-j)?;
            if zj == 0 {
                continue;
            }
            zeta_at_integer(i64::from(k) - 1 - j, ctx)? * BigReal::from_rational(&zj, ctx)
        };
        let fact = BigReal::from_integer(&factorial(j as u64), ctx);
        let term = (tpi.powi(j) * z.powi(j)).scale(&(pair / fact));
        acc -= term;
    }
    Ok(acc)
}

/// `z^{2m} G(-1/z) - G(z)` against [`period_polynomial`].
pub fn check_period_relation(m: u32, z: &HPoint, ctx: &PrecisionContext) -> Result<VerificationReport> {
    let w = z.neg_inv()?;
    let gz = eichler_g(m, z, ctx)?;
    let gw = eichler_g(m, &w, ctx)?;
    let lhs = z.z().powi(2 * i64::from(m)) * &gw.value - &gz.value;
    let rhs = period_polynomial(m)?.eval(z.z(), ctx)?;
    let tol = scaled_tolerance(&lhs, &rhs, ctx);
    Ok(VerificationReport::new(
        "period_relation",
        vec![("m".into(), m.to_string()), ("z".into(), z.z().to_string_digits(20))],
        lhs,
        rhs,
        tol,
        gz.terms + gw.terms,
    ))
}

/// Odd zeta value recovered from Eichler integrals at a root of `R_{2m+1}`.
#[derive(Debug, Clone)]
pub struct EichlerZeta {
    pub value: BigReal,
    /// The root used, projected onto the unit circle.
    pub alpha: BigComplex,
    /// Imaginary part of the raw quotient; zero in exact arithmetic.
    pub imaginary_part: BigReal,
    pub terms: usize,
}

/// Nonreal roots of `R_{2m+1}` in the upper half-plane, on the unit circle.
pub fn ramanujan_upper_roots(m: u32, ctx: &PrecisionContext) -> Result<Vec<BigComplex>> {
    let roots = find_roots_rational(&ramanujan_poly(m)?, ctx)?;
    Ok(roots
        .into_iter()
        .filter(|r| !r.is_real && r.root.im.is_positive())
        .map(|r| {
            let a = r.root.abs();
            BigComplex::new(&r.root.re / &a, &r.root.im / &a)
        })
        .collect())
}

const CONDITION_FLOOR: f64 = 1e-3;

/// `ζ(2m+1)/2 = (F(α) - α^{2m} F(-1/α)) / (α^{2m} - 1)` at the upper root `α`
/// of `R_{2m+1}` that maximizes `|α^{2m} - 1|`.
pub fn zeta_from_eichler(m: u32, ctx: &PrecisionContext) -> Result<EichlerZeta> {
    let roots = ramanujan_upper_roots(m, ctx)?;
    let two_m = 2 * i64::from(m);
    let best = roots
        .into_iter()
        .map(|a| {
            let d = (a.powi(two_m) - 1).abs();
            (a, d)
        })
        .max_by(|x, y| x.1.partial_cmp(&y.1).unwrap_or(std::cmp::Ordering::Equal));
    let Some((alpha, dist)) = best else {
        return Err(Error::NoSuchRoot(format!("R_{} has no nonreal roots", 2 * m + 1)));
    };
    if dist.to_f64() < CONDITION_FLOOR {
        return Err(Error::IllConditioned(format!(
            "every nonreal root of R_{} has α^{} = 1 (best |α^{} - 1| = {})",
            2 * m + 1,
            two_m,
            two_m,
            dist.to_sci_string(3)
        )));
    }
    let a = HPoint::new(alpha.clone())?;
    let w = a.neg_inv()?;
    let fa = lambert_f(two_m + 1, &a, ctx)?;
    let fw = lambert_f(two_m + 1, &w, ctx)?;
    let a2m = alpha.powi(two_m);
    let q = (&fa.value - &(&a2m * &fw.value)) / (&a2m - 1) * 2;
    Ok(EichlerZeta {
        value: q.re,
        alpha,
        imaginary_part: q.im,
        terms: fa.terms + fw.terms,
    })
}

/// The same relation differentiated at the root, usable where `α^{2m} = 1`:
/// `ζ(2m+1) = -(D(α) + (2πi)^{2m+1} R'(α)/(2α)) / (m α^{2m-1})` with
/// `D(α) = 2m α^{2m-1} F(-1/α) + α^{2m-2} F'(-1/α) - F'(α)`.
pub fn zeta_from_eichler_derivative(m: u32, ctx: &PrecisionContext) -> Result<EichlerZeta> {
    let roots = ramanujan_upper_roots(m, ctx)?;
    let alpha = roots
        .into_iter()
        .max_by(|x, y| x.im.partial_cmp(&y.im).unwrap_or(std::cmp::Ordering::Equal))
        .ok_or_else(|| Error::NoSuchRoot(format!("R_{} has no nonreal roots", 2 * m + 1)))?;
    let two_m = 2 * i64::from(m);
    let a = HPoint::new(alpha.clone())?;
    let w = a.neg_inv()?;
    let fw = lambert_f(two_m + 1, &w, ctx)?;
    let dfa = lambert_f_derivative(two_m + 1, &a, ctx)?;
    let dfw = lambert_f_derivative(two_m + 1, &w, ctx)?;
    let d = alpha.powi(two_m - 1) * &fw.value * two_m + alpha.powi(two_m - 2) * &dfw.value - &dfa.value;
    let rprime = ComplexPoly::from_rational(&ramanujan_poly(m)?.derivative(), ctx).eval(&alpha);
    let corr = BigComplex::two_pi_i(ctx).powi(two_m + 1) * rprime / (&alpha * 2);
    let q = -(d + corr) / (alpha.powi(two_m - 1) * i64::from(m));
    Ok(EichlerZeta {
        value: q.re,
        alpha,
        imaginary_part: q.im,
        terms: fw.terms + dfa.terms + dfw.terms,
    })
}
