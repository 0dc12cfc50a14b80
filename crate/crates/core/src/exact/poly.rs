use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::Rational;

/// Dense polynomial over `Q`, coefficients in ascending degree order with no
/// trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPoly {
    coeffs: Vec<Rational>,
}

impl RationalPoly {
    pub fn zero() -> Self {
        RationalPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::from(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c z^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::new(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| *c == 0) {
            coeffs.pop();
        }
        RationalPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coeffs.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| Rational::from(c * k as u64))
                .collect(),
        )
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|c| Rational::from(c * s)).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.clone().recip()),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead = d.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Rational::new(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = Rational::from(&r[k + dd] / &lead);
            if c != 0 {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[k + j] -= Rational::from(&c * dc);
                }
            }
            q[k] = c;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's square-free decomposition: monic `(f_i, i)` with
    /// `self = lc * prod f_i^i`, omitting trivial factors.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let fp = f.derivative();
        let a0 = f.gcd(&fp);
        let mut b = f.div_rem(&a0).0;
        let mut c = fp.div_rem(&a0).0;
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_rem(&a).0;
            c = d.div_rem(&a).0;
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// `z^deg p(1/z)`.
    pub fn reverse(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `Some(+1)` if palindromic, `Some(-1)` if anti-palindromic.
    pub fn reciprocity_sign(&self) -> Option<i8> {
        let r = self.reverse();
        if r.degree() != self.degree() {
            return None;
        }
        if r == *self {
            Some(1)
        } else if r == -self.clone() {
            Some(-1)
        } else {
            None
        }
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: &RationalPoly) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        RationalPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&RationalPoly> for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: &RationalPoly) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut v = vec![Rational::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += Rational::from(a * b);
            }
        }
        RationalPoly::new(v)
    }
}

impl Neg for RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<RationalPoly> for RationalPoly {
            type Output = RationalPoly;
            fn $m(self, rhs: RationalPoly) -> RationalPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// `z^low * poly(z)`, a rational Laurent polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    low: i64,
    poly: RationalPoly,
}

impl LaurentPoly {
    /// Normalized so the lowest stored coefficient is nonzero.
    pub fn new(low: i64, poly: RationalPoly) -> Self {
        let skip = poly.coeffs.iter().take_while(|c| **c == 0).count();
        if skip == poly.coeffs.len() {
            return LaurentPoly {
                low: 0,
                poly: RationalPoly::zero(),
            };
        }
        LaurentPoly {
            low: low + skip as i64,
            poly: RationalPoly::new(poly.coeffs[skip..].to_vec()),
        }
    }

    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            poly: RationalPoly::zero(),
        }
    }

    /// `c z^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::new(k, RationalPoly::constant(c))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_exponent(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.poly.degree().map(|d| self.low + d as i64)
    }

    pub fn coeff(&self, k: i64) -> Rational {
        if k < self.low {
            return Rational::new();
        }
        self.poly.coeff((k - self.low) as usize)
    }

    /// The same function viewed as an ordinary polynomial, if it has no
    /// negative powers.
    pub fn to_poly(&self) -> Option<RationalPoly> {
        if self.is_zero() {
            return Some(RationalPoly::zero());
        }
        if self.low < 0 {
            return None;
        }
        let mut v = vec![Rational::new(); self.low as usize];
        v.extend(self.poly.coeffs.iter().cloned());
        Some(RationalPoly::new(v))
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.low + k, self.poly.clone())
    }

    /// The numerator polynomial `z^{-min} * self`, which has the same nonzero
    /// roots.
    pub fn numerator(&self) -> RationalPoly {
        self.poly.clone()
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let lift = |p: &LaurentPoly| RationalPoly::monomial(Rational::from(1), (p.low - low) as usize) * p.poly.clone();
        LaurentPoly::new(low, &lift(self) + &lift(rhs))
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::new(self.low + rhs.low, &self.poly * &rhs.poly)
    }
}

impl LaurentPoly {
    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(self.low, self.poly.scale(s))
    }

    /// Lifts an ordinary polynomial.
    pub fn from_poly(p: RationalPoly) -> Self {
        Self::new(0, p)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate().rev() {
            if *c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let e = self.low + k as i64;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoly {
        RationalPoly::from_i64(c)
    }

    #[test]
    fn arithmetic_and_eval() {
        let a = p(&[1, 1]);
        let b = p(&[-1, 1]);
        assert_eq!(&a * &b, p(&[-1, 0, 1]));
        assert_eq!(&a + &b, p(&[0, 2]));
        assert_eq!(&a - &a, RationalPoly::zero());
        assert_eq!(p(&[1, 2, 3]).eval(&Rational::from(2)), 17);
        assert_eq!(p(&[1, 2, 3]).derivative(), p(&[2, 6]));
    }

    #[test]
    fn division_reconstructs_dividend() {
        let f = p(&[5, -3, 0, 2, 7]);
        let g = p(&[1, 0, 3]);
        let (q, r) = f.div_rem(&g);
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&q * &g) + &r, f);
    }

    #[test]
    fn squarefree_of_repeated_roots() {
        // (z - 1)^2 (z + 2)^3 (z^2 + 1)
        let a = p(&[-1, 1]);
        let b = p(&[2, 1]);
        let c = p(&[1, 0, 1]);
        let f = &(&(&a * &a) * &(&(&b * &b) * &b)) * &c.scale(&Rational::from(3));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(c, 1), (a, 2), (b, 3)]);
    }

    #[test]
    fn reciprocity() {
        assert_eq!(p(&[1, 3, 3, 1]).reciprocity_sign(), Some(1));
        assert_eq!(p(&[1, 0, -1]).reciprocity_sign(), Some(-1));
        assert_eq!(p(&[1, 2]).reciprocity_sign(), None);
    }

    #[test]
    fn laurent_normalization() {
        let l = LaurentPoly::new(-2, p(&[0, 0, 1, 2]));
        assert_eq!(l.min_exponent(), Some(0));
        assert_eq!(l.to_poly(), Some(p(&[1, 2])));
        let m = LaurentPoly::monomial(Rational::from(4), -1);
        let s = &l + &m;
        assert_eq!(s.min_exponent(), Some(-1));
        assert_eq!(s.to_poly(), None);
        assert_eq!(s.numerator(), p(&[4, 1, 2]));
        assert_eq!(s.coeff(-1), 4);
        assert_eq!(s.shift(1).to_poly(), Some(p(&[4, 1, 2])));
    }
}
