use std::fmt;

use rug::{Integer, Rational};

use crate::error::{Error, Result};
use crate::numerics::{const_pi, BigComplex, BigReal, PrecisionContext};

/// `V = [[a, b], [c, d]]` in SL2(Z) with `c > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Matrix2 {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Matrix2 {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        if a * d - b * c != 1 {
            return Err(Error::Validation(format!(
                "matrix [{a},{b};{c},{d}] has determinant {} != 1",
                a * d - b * c
            )));
        }
        if c <= 0 {
            return Err(Error::Validation(format!("matrix [{a},{b};{c},{d}] needs c > 0")));
        }
        Ok(Matrix2 { a, b, c, d })
    }

    /// `z -> -1/z`.
    pub fn s() -> Self {
        Matrix2 {
            a: 0,
            b: -1,
            c: 1,
            d: 0,
        }
    }

    pub fn is_s(&self) -> bool {
        *self == Self::s()
    }

    /// Parses `a,b,c,d`.
    pub fn parse(s: &str) -> Result<Self> {
        let v: Vec<i64> = s
            .split(',')
            .map(|t| t.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::Validation(format!("cannot parse matrix '{s}' (expected a,b,c,d)")))?;
        match v[..] {
            [a, b, c, d] => Self::new(a, b, c, d),
            _ => Err(Error::Validation(format!("matrix '{s}' needs exactly four entries"))),
        }
    }

    /// `(az + b)/(cz + d)`.
    pub fn act(&self, z: &BigComplex) -> BigComplex {
        (z * self.a + self.b) / (z * self.c + self.d)
    }

    /// `cz + d`.
    pub fn automorphy(&self, z: &BigComplex) -> BigComplex {
        z * self.c + self.d
    }
}

impl fmt::Display for Matrix2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.a, self.b, self.c, self.d)
    }
}

/// Parameters shared by the identity registry. Unused fields are ignored
/// by identities that do not list them in their schema.
#[derive(Debug, Clone, Default)]
pub struct EisensteinParams {
    pub alpha: Option<BigReal>,
    pub beta: Option<BigReal>,
    pub n: Option<i64>,
    pub m: Option<i64>,
    pub w: Option<BigReal>,
    pub x: Option<BigReal>,
    pub y: Option<BigReal>,
    pub z: Option<BigComplex>,
    pub r1: Option<Rational>,
    pub r2: Option<Rational>,
    pub matrix: Option<Matrix2>,
}

impl EisensteinParams {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn alpha(mut self, v: BigReal) -> Self {
        self.alpha = Some(v);
        self
    }

    pub fn beta(mut self, v: BigReal) -> Self {
        self.beta = Some(v);
        self
    }

    pub fn n(mut self, v: i64) -> Self {
        self.n = Some(v);
        self
    }

    pub fn m(mut self, v: i64) -> Self {
        self.m = Some(v);
        self
    }

    pub fn w(mut self, v: BigReal) -> Self {
        self.w = Some(v);
        self
    }

    pub fn x(mut self, v: BigReal) -> Self {
        self.x = Some(v);
        self
    }

    pub fn y(mut self, v: BigReal) -> Self {
        self.y = Some(v);
        self
    }

    pub fn z(mut self, v: BigComplex) -> Self {
        self.z = Some(v);
        self
    }

    pub fn r1(mut self, v: Rational) -> Self {
        self.r1 = Some(v);
        self
    }

    pub fn r2(mut self, v: Rational) -> Self {
        self.r2 = Some(v);
        self
    }

    pub fn matrix(mut self, v: Matrix2) -> Self {
        self.matrix = Some(v);
        self
    }

    /// `(α, β)` with `αβ = π²`: a missing one is solved for, both missing
    /// means `α = β = π`, both present are checked.
    pub fn alpha_beta(&self, ctx: &PrecisionContext) -> Result<(BigReal, BigReal)> {
        let pi2 = const_pi(ctx).square();
        let (a, b) = match (&self.alpha, &self.beta) {
            (None, None) => (const_pi(ctx), const_pi(ctx)),
            (Some(a), None) => (a.clone(), &pi2 / a),
            (None, Some(b)) => (&pi2 / b, b.clone()),
            (Some(a), Some(b)) => {
                let gap = (a * b - &pi2).abs() / &pi2;
                if gap.log10_abs() > -f64::from(ctx.target_digits()) {
                    return Err(Error::Validation(format!(
                        "alpha * beta must equal pi^2 (relative gap {})",
                        gap.to_sci_string(3)
                    )));
                }
                (a.clone(), b.clone())
            }
        };
        if !a.is_positive() || !b.is_positive() {
            return Err(Error::Domain("alpha and beta must be positive".into()));
        }
        Ok((a, b))
    }
}

/// Parses a real expression: a product/quotient of decimal literals,
/// `pi` and `pi^k`, e.g. `pi/2`, `2*pi`, `pi^2/3`, `-1/3`.
pub fn parse_real_expr(s: &str, ctx: &PrecisionContext) -> Result<BigReal> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Validation(format!("cannot parse real expression '{s}'"));
    if t.is_empty() {
        return Err(bad());
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.as_str()),
    };
    let mut acc = BigReal::one(ctx);
    let mut op = '*';
    let mut start = 0;
    let chars: Vec<char> = body.chars().collect();
    for i in 0..=chars.len() {
        if i < chars.len() && chars[i] != '*' && chars[i] != '/' {
            continue;
        }
        let tok: String = chars[start..i].iter().collect();
        let v = parse_factor(&tok, ctx).ok_or_else(bad)?;
        acc = if op == '*' { acc * v } else { acc / v };
        if i < chars.len() {
            op = chars[i];
        }
        start = i + 1;
    }
    Ok(if neg { -acc } else { acc })
}

fn parse_factor(tok: &str, ctx: &PrecisionContext) -> Option<BigReal> {
    let lower = tok.to_ascii_lowercase();
    if let Some(rest) = lower.strip_prefix("pi") {
        let e = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')?.parse::<i64>().ok()?
        };
        return Some(const_pi(ctx).powi(e));
    }
    if tok.is_empty() {
        return None;
    }
    BigReal::parse(tok, ctx).ok()
}

/// Parses an exact rational `p/q` or a terminating decimal.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Validation(format!("cannot parse rational '{s}'"));
    if let Some((p, q)) = t.split_once('/') {
        let p: Integer = p.trim().parse().map_err(|_| bad())?;
        let q: Integer = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Rational::from((p, q)));
    }
    let (neg, body) = match t.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, t),
    };
    let (ip, fp) = body.split_once('.').unwrap_or((body, ""));
    if ip.is_empty() && fp.is_empty() || !ip.chars().chain(fp.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let digits = format!("{ip}{fp}");
    let num: Integer = digits.parse().map_err(|_| bad())?;
    let den = Integer::from(Integer::u_pow_u(10, fp.len() as u32));
    let r = Rational::from((num, den));
    Ok(if neg { -r } else { r })
}
