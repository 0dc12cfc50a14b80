use rug::Rational;

use crate::error::{Error, Result};
use crate::exact::{
    bernoulli, binomial, factorial, generalized_bernoulli, DirichletCharacter, LaurentPoly, RationalPoly,
};
use crate::numerics::{BigComplex, PrecisionContext};
use crate::zeta::zeta_odd_fast;

use super::ComplexPoly;

/// `B_{2n} B_{2m-2n+2} / ((2n)! (2m-2n+2)!)`.
pub fn bernoulli_product(m: u32, n: u32) -> Result<Rational> {
    let a = bernoulli(2 * n as usize)? / factorial(2 * u64::from(n));
    let b = bernoulli((2 * m + 2 - 2 * n) as usize)? / factorial(u64::from(2 * m + 2 - 2 * n));
    Ok(a * b)
}

/// `R_{2m+1}(z) = Σ_{n=0}^{m+1} B_{2n} B_{2m-2n+2} z^{2n} / ((2n)! (2m-2n+2)!)`.
pub fn ramanujan_poly(m: u32) -> Result<RationalPoly> {
    let mut c = vec![Rational::new(); 2 * m as usize + 3];
    for n in 0..=m + 1 {
        c[2 * n as usize] = bernoulli_product(m, n)?;
    }
    Ok(RationalPoly::new(c))
}

/// `R_{2m+1}(z) + ζ(2m+1)/(2πi)^{2m+1} (z^{2m+1} - z)`, of degree `2m+2`.
pub fn full_period_poly(m: u32, ctx: &PrecisionContext) -> Result<ComplexPoly> {
    if m == 0 {
        return Err(Error::Domain("full period polynomial needs m >= 1".into()));
    }
    let r = ramanujan_poly(m)?;
    let mut c: Vec<BigComplex> = r.coeffs().iter().map(|x| BigComplex::from_rational(x, ctx)).collect();
    let zeta = zeta_odd_fast(2 * m + 1, ctx)?.value;
    let t = BigComplex::from_real(zeta) / BigComplex::two_pi_i(ctx).powi(2 * i64::from(m) + 1);
    c[2 * m as usize + 1] += &t;
    c[1] -= &t;
    Ok(ComplexPoly::new(c))
}

/// `p_m(z) = ζ(2m+1)/2 (1 - z^{2m}) - (2πi)^{2m+1}/2 Σ_{n=1}^{m} B_{2n} B_{2m-2n+2} z^{2n-1} / ((2n)! (2m-2n+2)!)`.
pub fn pm_poly(m: u32, ctx: &PrecisionContext) -> Result<ComplexPoly> {
    if m == 0 {
        return Err(Error::Domain("p_m needs m >= 1".into()));
    }
    let half_zeta = BigComplex::from_real(zeta_odd_fast(2 * m + 1, ctx)?.value / 2);
    let mut c = vec![BigComplex::zero(ctx); 2 * m as usize + 1];
    c[0] = half_zeta.clone();
    c[2 * m as usize] = -half_zeta;
    c.iter_mut().zip(odd_part(m, ctx)?).for_each(|(a, b)| *a += b);
    Ok(ComplexPoly::new(c))
}

/// Odd part of `p_m`, as coefficients indexed by degree.
fn odd_part(m: u32, ctx: &PrecisionContext) -> Result<Vec<BigComplex>> {
    let scale = BigComplex::two_pi_i(ctx).powi(2 * i64::from(m) + 1) / 2;
    let mut c = vec![BigComplex::zero(ctx); 2 * m as usize + 1];
    for n in 1..=m {
        let b = BigComplex::from_rational(&bernoulli_product(m, n)?, ctx);
        c[2 * n as usize - 1] = -(&scale * &b);
    }
    Ok(c)
}

/// `p_m^-(z) / z`, an even polynomial of degree `2m - 2`.
pub fn pm_odd_over_z(m: u32, ctx: &PrecisionContext) -> Result<ComplexPoly> {
    if m == 0 {
        return Err(Error::Domain("p_m needs m >= 1".into()));
    }
    let mut c = odd_part(m, ctx)?;
    c.remove(0);
    Ok(ComplexPoly::new(c))
}

/// `((z - 1)/M)^e` for `e >= 0`.
fn shifted_power(e: u32, modulus: &Rational) -> RationalPoly {
    let mut scale = Rational::from(1);
    for _ in 0..e {
        scale /= modulus;
    }
    let mut c = Vec::with_capacity(e as usize + 1);
    for j in 0..=e {
        let mut v = Rational::from(binomial(u64::from(e), u64::from(j)));
        if (e - j) % 2 == 1 {
            v = -v;
        }
        c.push(v);
    }
    RationalPoly::new(c).scale(&scale)
}

/// Generalized Ramanujan polynomial
/// `Σ_{s=0}^{k} (B_{s,χ}/s!)(B_{k-s,ψ}/(k-s)!) ((z-1)/M)^{k-s-1} (1 - z^{s-1})`,
/// expanded exactly.
///
/// The `s = k` term is reduced with `(1 - z^{k-1})/(z - 1) = -(1 + ... + z^{k-2})`.
/// With principal characters the result can keep a `z^{-1}` term; for two
/// nonprincipal characters any surviving negative power is an error.
pub fn generalized_r(
    k: u32,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    modulus_m: u64,
) -> Result<LaurentPoly> {
    if k < 2 {
        return Err(Error::Domain("generalized Ramanujan polynomial needs k >= 2".into()));
    }
    if modulus_m == 0 {
        return Err(Error::Domain("M must be positive".into()));
    }
    let mm = Rational::from(modulus_m);
    let one = Rational::from(1);
    let mut total = LaurentPoly::zero();
    for s in 0..=k {
        let bc = generalized_bernoulli(s as usize, chi)? / factorial(u64::from(s));
        let bp = generalized_bernoulli((k - s) as usize, psi)? / factorial(u64::from(k - s));
        let w = bc * bp;
        if w == 0 || s == 1 {
            continue;
        }
        let term = if s == k {
            // M (1 - z^{k-1})/(z - 1)
            let geo = RationalPoly::new(vec![Rational::from(-1); (k - 1) as usize]);
            LaurentPoly::from_poly(geo.scale(&mm))
        } else {
            let pow = LaurentPoly::from_poly(shifted_power(k - s - 1, &mm));
            let factor = if s == 0 {
                // 1 - z^{-1}
                &LaurentPoly::monomial(one.clone(), 0) + &LaurentPoly::monomial(Rational::from(-1), -1)
            } else {
                &LaurentPoly::monomial(one.clone(), 0) + &LaurentPoly::monomial(Rational::from(-1), i64::from(s) - 1)
            };
            &pow * &factor
        };
        total = &total + &term.scale(&w);
    }
    if !chi.is_principal() && !psi.is_principal() && total.min_exponent().is_some_and(|e| e < 0) {
        return Err(Error::NotAPolynomial(format!(
            "negative powers survive for k = {k} (lowest exponent {})",
            total.min_exponent().unwrap_or(0)
        )));
    }
    Ok(total)
}

/// Same as [`generalized_r`] but as an ordinary polynomial.
pub fn generalized_r_poly(
    k: u32,
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    modulus_m: u64,
) -> Result<RationalPoly> {
    generalized_r(k, chi, psi, modulus_m)?
        .to_poly()
        .ok_or_else(|| Error::NotAPolynomial(format!("generalized polynomial for k = {k} has negative powers")))
}

/// Palindrome test `z^{2m+2} R_{2m+1}(1/z) = R_{2m+1}(z)`.
pub fn ramanujan_is_self_inversive(m: u32) -> Result<bool> {
    let r = ramanujan_poly(m)?;
    Ok(r.reciprocity_sign() == Some(1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn small_ramanujan_polynomials() {
        assert_eq!(
            ramanujan_poly(0).unwrap(),
            RationalPoly::new(vec![q(1, 12), q(0, 1), q(1, 12)])
        );
        assert_eq!(
            ramanujan_poly(1).unwrap(),
            RationalPoly::new(vec![q(-1, 720), q(0, 1), q(1, 144), q(0, 1), q(-1, 720)])
        );
        for m in 0..8 {
            let r = ramanujan_poly(m).unwrap();
            assert!(r.coeffs().iter().enumerate().all(|(i, c)| i % 2 == 0 || *c == 0));
        }
    }

    #[test]
    fn self_inversive() {
        for m in 0..=20 {
            assert!(ramanujan_is_self_inversive(m).unwrap(), "m = {m}");
        }
    }

    #[test]
    fn degrees() {
        let ctx = PrecisionContext::digits(30).unwrap();
        for m in 1..4u32 {
            assert_eq!(full_period_poly(m, &ctx).unwrap().degree(), Some(2 * m as usize + 2));
            assert_eq!(pm_poly(m, &ctx).unwrap().degree(), Some(2 * m as usize));
        }
        assert_eq!(pm_odd_over_z(3, &ctx).unwrap().degree(), Some(4));
    }

    #[test]
    fn generalized_reduces_to_ramanujan() {
        let one = DirichletCharacter::principal(1);
        for k in 2..=6u32 {
            let g = generalized_r(2 * k, &one, &one, 1).unwrap();
            let r = LaurentPoly::from_poly(ramanujan_poly(k - 1).unwrap()).shift(-1);
            assert_eq!(g, r, "k = {k}");
        }
    }

    #[test]
    fn shifted_power_expands() {
        assert_eq!(
            shifted_power(2, &q(2, 1)),
            RationalPoly::new(vec![q(1, 4), q(-1, 2), q(1, 4)])
        );
    }

    #[test]
    fn nonprincipal_pair_is_polynomial() {
        let chi4 = DirichletCharacter::quadratic(-4, 4).unwrap();
        let chi3 = DirichletCharacter::quadratic(-3, 3).unwrap();
        let p = generalized_r(4, &chi4, &chi3, 3).unwrap();
        assert!(p.min_exponent().unwrap_or(0) >= 0);
    }
}
