use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::Rational;

use crate::error::{Error, Result};

use super::{const_pi, BigReal, PrecisionContext};

/// Arbitrary-precision complex number in rectangular form.
#[derive(Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let im = BigReal(rug::Float::new(re.precision_bits()));
        BigComplex { re, im }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        BigComplex::new(BigReal::zero(ctx), BigReal::zero(ctx))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        BigComplex::new(BigReal::one(ctx), BigReal::zero(ctx))
    }

    pub fn i(ctx: &PrecisionContext) -> Self {
        BigComplex::new(BigReal::zero(ctx), BigReal::one(ctx))
    }

    pub fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        BigComplex::from_real(BigReal::from_i64(v, ctx))
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionContext) -> Self {
        BigComplex::new(BigReal::from_f64(re, ctx), BigReal::from_f64(im, ctx))
    }

    pub fn from_rational(v: &Rational, ctx: &PrecisionContext) -> Self {
        BigComplex::from_real(BigReal::from_rational(v, ctx))
    }

    /// `2πi` at the context precision.
    pub fn two_pi_i(ctx: &PrecisionContext) -> Self {
        BigComplex::new(BigReal::zero(ctx), const_pi(ctx) * 2)
    }

    /// A point of the upper half-plane; rejects `Im z < delta_min`.
    pub fn upper_half_plane(re: BigReal, im: BigReal, delta_min: f64) -> Result<Self> {
        if !(im.to_f64() >= delta_min) {
            return Err(Error::Domain(format!(
                "Im z = {} is below the half-plane floor {delta_min}",
                im.to_sci_string(6)
            )));
        }
        Ok(BigComplex { re, im })
    }

    /// Parses `a`, `a+bi`, `a-bi`, `bi` or `i` (decimal literals).
    pub fn parse(s: &str, ctx: &PrecisionContext) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Validation(format!("cannot parse complex '{s}'"));
        if t.is_empty() {
            return Err(bad());
        }
        if !t.ends_with('i') {
            return Ok(BigComplex::from_real(BigReal::parse(&t, ctx)?));
        }
        let body = &t[..t.len() - 1];
        // split at the last sign that is not part of an exponent
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            if (bytes[idx] == b'+' || bytes[idx] == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        let parse_im = |p: &str| -> Result<BigReal> {
            match p {
                "" | "+" => Ok(BigReal::one(ctx)),
                "-" => Ok(-BigReal::one(ctx)),
                _ => BigReal::parse(p, ctx).map_err(|_| bad()),
            }
        };
        match split {
            Some(idx) => {
                let re = BigReal::parse(&body[..idx], ctx).map_err(|_| bad())?;
                let im = parse_im(&body[idx..])?;
                Ok(BigComplex::new(re, im))
            }
            None => Ok(BigComplex::new(BigReal::zero(ctx), parse_im(body)?)),
        }
    }

    pub fn precision_bits(&self) -> u32 {
        self.re.precision_bits().max(self.im.precision_bits())
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        BigComplex::new(self.re.with_bits(bits), self.im.with_bits(bits))
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn norm_sqr(&self) -> BigReal {
        self.re.square() + self.im.square()
    }

    pub fn abs(&self) -> BigReal {
        self.re.hypot(&self.im)
    }

    pub fn arg(&self) -> BigReal {
        self.im.atan2(&self.re)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        BigComplex::new(&self.re / &n, -(&self.im / &n))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Integer power by repeated squaring; negative exponents invert.
    pub fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 { self.recip() } else { self.clone() };
        let mut n = e.unsigned_abs();
        let mut acc = BigComplex::from_real(BigReal(rug::Float::with_val(self.precision_bits(), 1)));
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = base.square();
            }
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let m = self.re.exp();
        BigComplex::new(&m * self.im.cos(), &m * self.im.sin())
    }

    /// Principal logarithm; the caller guarantees a nonzero argument.
    pub fn ln_unchecked(&self) -> Self {
        BigComplex::new(self.abs().ln(), self.arg())
    }

    /// `e^{2πi z}`.
    pub fn q(&self, ctx: &PrecisionContext) -> Self {
        (&BigComplex::two_pi_i(ctx) * self).exp()
    }

    pub fn log10_abs(&self) -> f64 {
        let a = self.re.log10_abs();
        let b = self.im.log10_abs();
        let hi = a.max(b);
        if hi == f64::NEG_INFINITY {
            return hi;
        }
        hi + 0.5 * (1.0 + 10f64.powf(2.0 * (a.min(b) - hi))).log10()
    }

    pub fn to_string_digits(&self, digits: usize) -> String {
        let re = self.re.to_sci_string(digits);
        let im = self.im.to_sci_string(digits);
        if im.starts_with('-') {
            format!("{re}{im}i")
        } else {
            format!("{re}+{im}i")
        }
    }
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BigComplex({})",
            self.to_string_digits(self.re.precision_digits() as usize)
        )
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(self.re.precision_digits() as usize);
        f.write_str(&self.to_string_digits(digits))
    }
}

impl From<BigReal> for BigComplex {
    fn from(re: BigReal) -> Self {
        BigComplex::from_real(re)
    }
}

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-self.re, -self.im)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

impl Add<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigComplex) -> BigComplex {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        BigComplex::new(re, im)
    }
}

impl Div<&BigComplex> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigComplex) -> BigComplex {
        let n = rhs.norm_sqr();
        let re = (&self.re * &rhs.re + &self.im * &rhs.im) / &n;
        let im = (&self.im * &rhs.re - &self.re * &rhs.im) / &n;
        BigComplex::new(re, im)
    }
}

macro_rules! forward_owned {
    ($Trait:ident, $method:ident) => {
        impl $Trait<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                $Trait::$method(&self, &rhs)
            }
        }
        impl $Trait<&BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: &BigComplex) -> BigComplex {
                $Trait::$method(&self, rhs)
            }
        }
        impl $Trait<BigComplex> for &BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: BigComplex) -> BigComplex {
                $Trait::$method(self, &rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Add<&BigReal> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &BigReal) -> BigComplex {
        BigComplex::new(&self.re + rhs, self.im.clone())
    }
}

impl Sub<&BigReal> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &BigReal) -> BigComplex {
        BigComplex::new(&self.re - rhs, self.im.clone())
    }
}

impl Mul<&BigReal> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &BigReal) -> BigComplex {
        self.scale(rhs)
    }
}

impl Div<&BigReal> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &BigReal) -> BigComplex {
        BigComplex::new(&self.re / rhs, &self.im / rhs)
    }
}

impl Add<i64> for &BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: i64) -> BigComplex {
        BigComplex::new(&self.re + rhs, self.im.clone())
    }
}

impl Sub<i64> for &BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: i64) -> BigComplex {
        BigComplex::new(&self.re - rhs, self.im.clone())
    }
}

impl Mul<i64> for &BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: i64) -> BigComplex {
        BigComplex::new(&self.re * rhs, &self.im * rhs)
    }
}

impl Div<i64> for &BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: i64) -> BigComplex {
        BigComplex::new(&self.re / rhs, &self.im / rhs)
    }
}

macro_rules! forward_scalar_owned {
    ($Trait:ident, $method:ident, $Rhs:ty) => {
        impl $Trait<$Rhs> for BigComplex {
            type Output = BigComplex;
            fn $method(self, rhs: $Rhs) -> BigComplex {
                $Trait::$method(&self, rhs)
            }
        }
    };
}

forward_scalar_owned!(Add, add, &BigReal);
forward_scalar_owned!(Sub, sub, &BigReal);
forward_scalar_owned!(Mul, mul, &BigReal);
forward_scalar_owned!(Div, div, &BigReal);
forward_scalar_owned!(Add, add, i64);
forward_scalar_owned!(Sub, sub, i64);
forward_scalar_owned!(Mul, mul, i64);
forward_scalar_owned!(Div, div, i64);

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: &BigComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl AddAssign<BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: BigComplex) {
        self.re += rhs.re;
        self.im += rhs.im;
    }
}

impl SubAssign<&BigComplex> for BigComplex {
    fn sub_assign(&mut self, rhs: &BigComplex) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl SubAssign<BigComplex> for BigComplex {
    fn sub_assign(&mut self, rhs: BigComplex) {
        self.re -= rhs.re;
        self.im -= rhs.im;
    }
}

impl MulAssign<&BigComplex> for BigComplex {
    fn mul_assign(&mut self, rhs: &BigComplex) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let ctx = PrecisionContext::digits(20).unwrap();
        let z = BigComplex::parse("0.5+1i", &ctx).unwrap();
        assert_eq!(z.re.to_f64(), 0.5);
        assert_eq!(z.im.to_f64(), 1.0);
        let z = BigComplex::parse("i", &ctx).unwrap();
        assert_eq!(z.im.to_f64(), 1.0);
        let z = BigComplex::parse("-2.5e-1-3i", &ctx).unwrap();
        assert_eq!((z.re.to_f64(), z.im.to_f64()), (-0.25, -3.0));
        let z = BigComplex::parse("2", &ctx).unwrap();
        assert!(z.im.is_zero());
        assert!(BigComplex::parse("x+i", &ctx).is_err());
    }

    #[test]
    fn powi_matches_repeated_products() {
        let ctx = PrecisionContext::digits(30).unwrap();
        let z = BigComplex::from_f64(0.3, 0.8, &ctx);
        let cube = &(&z * &z) * &z;
        let diff = (z.powi(3) - cube).abs();
        assert!(diff.log10_abs() < -35.0);
        let inv = &z.powi(-2) * &z.powi(2);
        assert!((inv - 1).abs().log10_abs() < -35.0);
    }

    #[test]
    fn half_plane_floor() {
        let ctx = PrecisionContext::digits(20).unwrap();
        let lo = BigReal::from_f64(1e-4, &ctx);
        assert!(BigComplex::upper_half_plane(BigReal::zero(&ctx), lo, 1e-3).is_err());
    }
}
