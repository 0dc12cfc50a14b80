use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::error::{Error, Result};

use super::PrecisionContext;

/// Arbitrary-precision real number.
///
/// Thin wrapper over an MPFR float; the precision travels with the value and
/// binary operations run at the larger of the two operand precisions.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct BigReal(pub(crate) Float);

impl BigReal {
    pub fn from_float(f: Float) -> Self {
        BigReal(f)
    }

    pub fn as_float(&self) -> &Float {
        &self.0
    }

    pub fn into_float(self) -> Float {
        self.0
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        BigReal(Float::new(ctx.bits()))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.bits(), v))
    }

    pub fn from_f64(v: f64, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.bits(), v))
    }

    pub fn from_integer(v: &Integer, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.bits(), v))
    }

    pub fn from_rational(v: &Rational, ctx: &PrecisionContext) -> Self {
        BigReal(Float::with_val(ctx.bits(), v))
    }

    /// Parses a plain decimal literal such as `"-1.25e-3"`.
    pub fn parse(s: &str, ctx: &PrecisionContext) -> Result<Self> {
        let parsed = Float::parse(s.trim()).map_err(|e| Error::Validation(format!("cannot parse real '{s}': {e}")))?;
        Ok(BigReal(Float::with_val(ctx.bits(), parsed)))
    }

    /// `10^e` at the context precision.
    pub fn pow10(e: i64, ctx: &PrecisionContext) -> Self {
        let ten = Float::with_val(ctx.bits(), 10);
        BigReal(Float::with_val(ctx.bits(), ten.pow(e)))
    }

    pub fn pi(ctx: &PrecisionContext) -> Self {
        const_pi(ctx)
    }

    pub fn precision_bits(&self) -> u32 {
        self.0.prec()
    }

    pub fn precision_digits(&self) -> u32 {
        (f64::from(self.0.prec()) / std::f64::consts::LOG2_10).floor() as u32
    }

    /// Copy at a different binary precision (rounded or zero-extended).
    pub fn with_bits(&self, bits: u32) -> Self {
        BigReal(Float::with_val(bits, &self.0))
    }

    fn prec(&self) -> u32 {
        self.0.prec()
    }

    fn map(&self, f: impl FnOnce(Float) -> Float) -> Self {
        BigReal(f(self.0.clone()))
    }

    pub fn abs(&self) -> Self {
        self.map(Float::abs)
    }

    pub fn sqrt(&self) -> Self {
        self.map(Float::sqrt)
    }

    pub fn exp(&self) -> Self {
        self.map(Float::exp)
    }

    pub fn ln(&self) -> Self {
        self.map(Float::ln)
    }

    pub fn log10(&self) -> Self {
        self.map(Float::log10)
    }

    pub fn sin(&self) -> Self {
        self.map(Float::sin)
    }

    pub fn cos(&self) -> Self {
        self.map(Float::cos)
    }

    pub fn sinh(&self) -> Self {
        self.map(Float::sinh)
    }

    pub fn cosh(&self) -> Self {
        self.map(Float::cosh)
    }

    pub fn atan(&self) -> Self {
        self.map(Float::atan)
    }

    pub fn atan2(&self, x: &BigReal) -> Self {
        let p = self.prec().max(x.prec());
        BigReal(Float::with_val(p, self.0.atan2_ref(&x.0)))
    }

    pub fn hypot(&self, other: &BigReal) -> Self {
        let p = self.prec().max(other.prec());
        BigReal(Float::with_val(p, self.0.hypot_ref(&other.0)))
    }

    pub fn powi(&self, e: i64) -> Self {
        BigReal(Float::with_val(self.prec(), (&self.0).pow(e)))
    }

    pub fn pow(&self, e: &BigReal) -> Self {
        let p = self.prec().max(e.prec());
        BigReal(Float::with_val(p, (&self.0).pow(&e.0)))
    }

    pub fn recip(&self) -> Self {
        self.map(Float::recip)
    }

    pub fn square(&self) -> Self {
        self.map(Float::square)
    }

    pub fn floor(&self) -> Self {
        self.map(Float::floor)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_finite(&self) -> bool {
        self.0.is_finite()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_sign_positive() && !self.0.is_zero()
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// `log10 |x|` as an f64 (`-inf` for zero); safe far outside f64 range.
    pub fn log10_abs(&self) -> f64 {
        if self.0.is_zero() {
            return f64::NEG_INFINITY;
        }
        let (m, e) = self.0.to_f64_exp();
        m.abs().log10() + f64::from(e) * std::f64::consts::LOG10_2
    }

    /// Nearest integer, if the value fits in an i64.
    pub fn round_to_i64(&self) -> Option<i64> {
        self.0.to_integer().and_then(|i| i.to_i64())
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.0.to_rational()
    }

    pub fn max(self, other: BigReal) -> BigReal {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn min(self, other: BigReal) -> BigReal {
        if other < self {
            other
        } else {
            self
        }
    }

    /// Scientific notation with `digits` significant digits, e.g. `1.202e0`.
    pub fn to_sci_string(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let s = self.0.to_string_radix(10, Some(digits.max(1)));
        normalize_exponent(&s)
    }

    /// Fixed-point rendering with `digits` significant digits where possible.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        if self.0.is_zero() {
            return "0".into();
        }
        let sci = self.0.to_string_radix(10, Some(digits.max(1)));
        let (mantissa, exp) = match sci.split_once('e') {
            Some((m, e)) => (m.to_string(), e.parse::<i64>().unwrap_or(0)),
            None => (sci.clone(), 0),
        };
        let negative = mantissa.starts_with('-');
        let unsigned = mantissa.trim_start_matches(['-', '+']);
        let int_len = unsigned.find('.').unwrap_or(unsigned.len()) as i64;
        let body: String = unsigned.chars().filter(|c| c.is_ascii_digit()).collect();
        if !(-30..=60).contains(&exp) {
            return normalize_exponent(&sci);
        }
        // value = 0.body * 10^point
        let point = exp + int_len;
        let out = if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), body)
        } else if point as usize >= body.len() {
            format!("{}{}", body, "0".repeat(point as usize - body.len()))
        } else {
            format!("{}.{}", &body[..point as usize], &body[point as usize..])
        };
        if negative {
            format!("-{out}")
        } else {
            out
        }
    }
}

fn normalize_exponent(s: &str) -> String {
    match s.split_once('e') {
        Some((m, e)) => {
            let e: i64 = e.parse().unwrap_or(0);
            format!("{m}e{e}")
        }
        None => s.to_string(),
    }
}

/// π to the working precision of `ctx`.
pub fn const_pi(ctx: &PrecisionContext) -> BigReal {
    BigReal(Float::with_val(ctx.bits(), Constant::Pi))
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BigReal({})", self.to_sci_string(self.precision_digits() as usize))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(self.precision_digits() as usize);
        f.write_str(&self.to_sci_string(digits))
    }
}

impl PartialEq<i64> for BigReal {
    fn eq(&self, other: &i64) -> bool {
        self.0 == *other
    }
}

impl PartialOrd<i64> for BigReal {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.0.partial_cmp(other)
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0)
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(-self.0.clone())
    }
}

macro_rules! real_binop {
    ($Trait:ident, $method:ident, $Assign:ident, $assign:ident) => {
        impl $Trait<&BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                let p = self.0.prec().max(rhs.0.prec());
                BigReal(Float::with_val(p, $Trait::$method(&self.0, &rhs.0)))
            }
        }
        impl $Trait<BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                $Trait::$method(&self, &rhs)
            }
        }
        impl $Trait<&BigReal> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                $Trait::$method(&self, rhs)
            }
        }
        impl $Trait<BigReal> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                $Trait::$method(self, &rhs)
            }
        }
        impl $Trait<i64> for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                BigReal(Float::with_val(self.0.prec(), $Trait::$method(&self.0, rhs)))
            }
        }
        impl $Trait<i64> for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: i64) -> BigReal {
                $Trait::$method(&self, rhs)
            }
        }
        impl $Assign<&BigReal> for BigReal {
            fn $assign(&mut self, rhs: &BigReal) {
                *self = $Trait::$method(&*self, rhs);
            }
        }
        impl $Assign<BigReal> for BigReal {
            fn $assign(&mut self, rhs: BigReal) {
                *self = $Trait::$method(&*self, &rhs);
            }
        }
    };
}

real_binop!(Add, add, AddAssign, add_assign);
real_binop!(Sub, sub, SubAssign, sub_assign);
real_binop!(Mul, mul, MulAssign, mul_assign);
real_binop!(Div, div, DivAssign, div_assign);

impl std::iter::Sum for BigReal {
    fn sum<I: Iterator<Item = BigReal>>(mut iter: I) -> BigReal {
        let first = iter.next().expect("sum of an empty BigReal iterator");
        iter.fold(first, |acc, x| acc + x)
    }
}
