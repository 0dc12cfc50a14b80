use std::ops::{Add, Mul};

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numerics::{BigComplex, BigReal, PrecisionContext};
use crate::zeta::zeta_negative_odd;

/// `σ_k(n) = Σ_{d | n} d^k`, exactly.
pub fn sigma(k: i64, n: u64) -> Result<Rational> {
    if n == 0 {
        return Err(Error::Domain("sigma needs n >= 1".into()));
    }
    let mut s = Rational::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            s += power(d, k);
            let e = n / d;
            if e != d {
                s += power(e, k);
            }
        }
        d += 1;
    }
    Ok(s)
}

fn power(d: u64, k: i64) -> Rational {
    let p = Integer::from(Integer::u_pow_u(d as u32, k.unsigned_abs() as u32));
    if k >= 0 {
        Rational::from(p)
    } else {
        Rational::from((Integer::from(1), p))
    }
}

/// `[0, σ_k(1), ..., σ_k(len - 1)]` by a divisor sieve.
pub fn sigma_table(k: i64, len: usize) -> Vec<Rational> {
    let mut t = vec![Rational::new(); len];
    for d in 1..len {
        let p = power(d as u64, k);
        for j in (d..len).step_by(d) {
            t[j] += &p;
        }
    }
    t
}

/// Floating-point divisor sieve, for long evaluations.
pub(crate) fn sigma_table_numeric(k: i64, len: usize, ctx: &PrecisionContext) -> Vec<BigReal> {
    let mut t = vec![BigReal::zero(ctx); len];
    for d in 1..len {
        let p = BigReal::from_i64(d as i64, ctx).powi(k);
        for j in (d..len).step_by(d) {
            t[j] += &p;
        }
    }
    t
}

/// Truncated `Σ_{n < len} a(n) q^n`; coefficients beyond `len` are unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeries {
    coeffs: Vec<Rational>,
}

impl QSeries {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        QSeries { coeffs }
    }

    /// Number of known coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Option<&Rational> {
        self.coeffs.get(n)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        QSeries::new(self.coeffs.iter().map(|a| Rational::from(a * c)).collect())
    }

    /// `D = q d/dq = (2πi)^{-1} d/dz`.
    pub fn derivative(&self) -> Self {
        QSeries::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, a)| Rational::from(a * n as u64))
                .collect(),
        )
    }

    pub fn derivative_n(&self, k: u32) -> Self {
        (0..k).fold(self.clone(), |s, _| s.derivative())
    }

    /// Partial sum at `z`; no tail estimate.
    pub fn eval(&self, z: &BigComplex, ctx: &PrecisionContext) -> BigComplex {
        let q = z.q(ctx);
        let mut qn = BigComplex::one(ctx);
        let mut acc = BigComplex::zero(ctx);
        for a in &self.coeffs {
            if *a != 0 {
                acc += &qn * &BigComplex::from_rational(a, ctx);
            }
            qn *= &q;
        }
        acc
    }
}

impl Add for &QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let n = self.len().min(rhs.len());
        QSeries::new(
            (0..n)
                .map(|i| Rational::from(&self.coeffs[i] + &rhs.coeffs[i]))
                .collect(),
        )
    }
}

impl Mul for &QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let n = self.len().min(rhs.len());
        let mut c = vec![Rational::new(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(n - i).enumerate() {
                c[i + j] += Rational::from(a * b);
            }
        }
        QSeries::new(c)
    }
}

/// `E_k = 1 + (2/ζ(1-k)) Σ σ_{k-1}(n) q^n`, truncated to `len` coefficients.
pub fn eisenstein_qseries(k: u32, len: usize) -> Result<QSeries> {
    check_weight(k)?;
    let c = Rational::from(2) / zeta_negative_odd(k / 2)?;
    let mut coeffs = sigma_table(i64::from(k) - 1, len);
    for a in coeffs.iter_mut() {
        *a *= &c;
    }
    if let Some(a) = coeffs.first_mut() {
        *a = Rational::from(1);
    }
    Ok(QSeries::new(coeffs))
}

/// `F_a = Σ σ_{-a}(n) q^n`, truncated to `len` coefficients.
pub fn lambert_qseries(a: i64, len: usize) -> QSeries {
    QSeries::new(sigma_table(-a, len))
}

pub(crate) fn check_weight(k: u32) -> Result<()> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::Domain(format!("weight must be even and at least 2, got {k}")));
    }
    Ok(())
}
