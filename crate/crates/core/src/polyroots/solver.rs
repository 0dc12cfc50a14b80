use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exact::RationalPoly;
use crate::numerics::{BigComplex, BigReal, PrecisionContext};

/// Dense complex polynomial, ascending coefficients, nonzero leading term.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<BigComplex>,
}

impl ComplexPoly {
    pub fn new(mut coeffs: Vec<BigComplex>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ComplexPoly { coeffs }
    }

    pub fn from_rational(p: &RationalPoly, ctx: &PrecisionContext) -> Self {
        Self::new(p.coeffs().iter().map(|c| BigComplex::from_rational(c, ctx)).collect())
    }

    pub fn coeffs(&self) -> &[BigComplex] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigComplex> {
        self.coeffs.last()
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        ComplexPoly {
            coeffs: self.coeffs.iter().map(|c| c.with_bits(bits)).collect(),
        }
    }

    pub fn eval(&self, z: &BigComplex) -> BigComplex {
        let mut acc = BigComplex::from_real(BigReal::from_float(rug::Float::new(z.precision_bits())));
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// `(p(z), p'(z))` by a joint Horner pass.
    pub fn eval_with_derivative(&self, z: &BigComplex) -> (BigComplex, BigComplex) {
        let zero = BigComplex::from_real(BigReal::from_float(rug::Float::new(z.precision_bits())));
        let mut p = zero.clone();
        let mut dp = zero;
        for c in self.coeffs.iter().rev() {
            dp = &(&dp * z) + &p;
            p = &(&p * z) + c;
        }
        (p, dp)
    }

    /// `Σ |c_i| |z|^i`, the scale used for relative residuals.
    pub fn abs_eval(&self, z: &BigComplex) -> BigReal {
        let r = z.abs();
        let mut acc = BigReal::from_float(rug::Float::new(z.precision_bits()));
        for c in self.coeffs.iter().rev() {
            acc = &acc * &r + c.abs();
        }
        acc
    }

    /// Divides through by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                ComplexPoly {
                    coeffs: self.coeffs.iter().map(|c| c * &inv).collect(),
                }
            }
        }
    }

    /// True when the monic form has real coefficients up to `10^log10_tol`
    /// relative error.
    pub fn is_real_up_to_scale(&self, log10_tol: f64) -> bool {
        let m = self.monic();
        m.coeffs
            .iter()
            .all(|c| c.im.log10_abs() <= log10_tol + c.abs().log10_abs().max(0.0))
    }

    /// `lead · Π (z - r_i)` expanded.
    pub fn from_roots(lead: &BigComplex, roots: &[BigComplex]) -> Self {
        let mut coeffs = vec![lead.clone()];
        for r in roots {
            let mut next = vec![
                BigComplex::from_real(BigReal::from_float(rug::Float::new(lead.precision_bits())));
                coeffs.len() + 1
            ];
            for (i, c) in coeffs.iter().enumerate() {
                next[i + 1] += c;
                next[i] -= &(c * r);
            }
            coeffs = next;
        }
        ComplexPoly { coeffs }
    }
}

/// A located root with its numerical certificate.
#[derive(Debug, Clone)]
pub struct RootCertificate {
    pub root: BigComplex,
    /// `|p(r)| / Σ|c_i||r|^i` at the refinement precision.
    pub residual: BigReal,
    pub is_real: bool,
    /// `||r| - 1|`.
    pub unit_circle_distance: BigReal,
    pub multiplicity: usize,
    /// Residual below `10^-(target/2)`.
    pub valid: bool,
}

/// All roots of `p` by Aberth-Ehrlich iteration at working precision, then
/// Newton refinement at doubled precision.
pub fn find_roots(p: &ComplexPoly, ctx: &PrecisionContext) -> Result<Vec<RootCertificate>> {
    find_roots_refined(p, None, ctx)
}

/// As [`find_roots`], refining against `refine` (the same polynomial with
/// coefficients computed at `ctx.doubled()`) when supplied.
pub fn find_roots_refined(
    p: &ComplexPoly,
    refine: Option<&ComplexPoly>,
    ctx: &PrecisionContext,
) -> Result<Vec<RootCertificate>> {
    let deg = p
        .degree()
        .ok_or_else(|| Error::Validation("cannot solve the zero polynomial".into()))?;
    if deg == 0 {
        return Err(Error::Validation("polynomial has degree 0".into()));
    }
    let fine_ctx = ctx.doubled();
    let fine = match refine {
        Some(r) => r.with_bits(fine_ctx.bits()),
        None => p.with_bits(fine_ctx.bits()),
    };
    let zeros = p.coeffs.iter().take_while(|c| c.is_zero()).count();
    let reduced = ComplexPoly {
        coeffs: p.coeffs[zeros..].to_vec(),
    };
    let fine_reduced = ComplexPoly {
        coeffs: fine.coeffs[zeros..].to_vec(),
    };

    let mut roots: Vec<BigComplex> = vec![BigComplex::zero(&fine_ctx); zeros];
    if reduced.degree().unwrap_or(0) > 0 {
        let approx = aberth(&reduced.monic(), ctx)?;
        for z in approx {
            roots.push(newton_refine(&fine_reduced, z.with_bits(fine_ctx.bits()), &fine_ctx));
        }
    }

    let real_poly = fine.is_real_up_to_scale(-f64::from(ctx.working_digits()) + 5.0);
    let real_threshold = -f64::from(ctx.target_digits()) / 2.0;
    let mut out = Vec::with_capacity(deg);
    for (i, r) in roots.into_iter().enumerate() {
        let mut root = r;
        let mut is_real = i < zeros;
        if !is_real && real_poly && root.im.log10_abs() < real_threshold {
            if let Some(x) = real_newton(&fine.monic(), &root.re, &fine_ctx) {
                root = BigComplex::from_real(x);
                is_real = true;
            }
        }
        out.push(certify(&fine, root, is_real, 1, ctx));
    }
    sort_roots(&mut out);
    Ok(out)
}

/// Roots of a rational polynomial with exact square-free splitting, so
/// repeated roots are solved as simple roots and tagged with multiplicity.
pub fn find_roots_rational(p: &RationalPoly, ctx: &PrecisionContext) -> Result<Vec<RootCertificate>> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::Validation("polynomial has degree < 1".into()));
    }
    let fine_ctx = ctx.doubled();
    let mut out = Vec::new();
    for (factor, mult) in p.squarefree_decomposition() {
        let coarse = ComplexPoly::from_rational(&factor, ctx);
        let fine = ComplexPoly::from_rational(&factor, &fine_ctx);
        for mut c in find_roots_refined(&coarse, Some(&fine), ctx)? {
            c.multiplicity = mult;
            out.push(c);
        }
    }
    sort_roots(&mut out);
    Ok(out)
}

fn certify(
    p: &ComplexPoly,
    root: BigComplex,
    is_real: bool,
    multiplicity: usize,
    ctx: &PrecisionContext,
) -> RootCertificate {
    let num = p.eval(&root).abs();
    let den = p.abs_eval(&root);
    let residual = if den.is_zero() { num } else { num / den };
    let valid = residual.log10_abs() < -f64::from(ctx.target_digits()) / 2.0;
    let unit_circle_distance = (root.abs() - 1).abs();
    RootCertificate {
        root,
        residual,
        is_real,
        unit_circle_distance,
        multiplicity,
        valid,
    }
}

fn sort_roots(roots: &mut [RootCertificate]) {
    roots.sort_by(|a, b| {
        a.root
            .re
            .partial_cmp(&b.root.re)
            .unwrap_or(Ordering::Equal)
            .then(a.root.im.partial_cmp(&b.root.im).unwrap_or(Ordering::Equal))
    });
}

fn aberth(p: &ComplexPoly, ctx: &PrecisionContext) -> Result<Vec<BigComplex>> {
    let n = p.degree().expect("nonzero polynomial");
    if n == 1 {
        return Ok(vec![-(&p.coeffs[0] / &p.coeffs[1])]);
    }
    // start on a circle of radius |c_0|^{1/n}, angles offset off the axes
    let radius = 10f64.powf(p.coeffs[0].log10_abs() / n as f64).clamp(1e-3, 1e3);
    let mut z: Vec<BigComplex> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4;
            BigComplex::from_f64(radius * theta.cos(), radius * theta.sin(), ctx)
        })
        .collect();
    let mut done = vec![false; n];
    let eps = -f64::from(ctx.working_digits()) + 4.0;
    let max_iter = 500 + 50 * n;
    for _ in 0..max_iter {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (v, dv) = p.eval_with_derivative(&z[i]);
            if v.is_zero() {
                done[i] = true;
                continue;
            }
            let ratio = &v / &dv;
            let mut s = BigComplex::zero(ctx);
            for (j, zj) in z.iter().enumerate() {
                if j != i {
                    s += (&z[i] - zj).recip();
                }
            }
            let denom = &BigComplex::one(ctx) - &(&ratio * &s);
            let w = &ratio / &denom;
            if !w.re.is_finite() || !w.im.is_finite() {
                return Err(Error::Convergence("Aberth step is not finite".into()));
            }
            let scale = z[i].log10_abs().max(0.0);
            z[i] -= &w;
            if w.log10_abs() < eps + scale {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(Error::Convergence(format!(
        "Aberth iteration exceeded {max_iter} sweeps"
    )))
}

fn newton_refine(p: &ComplexPoly, mut z: BigComplex, ctx: &PrecisionContext) -> BigComplex {
    let eps = -f64::from(ctx.working_digits()) + 4.0;
    for _ in 0..60 {
        let (v, dv) = p.eval_with_derivative(&z);
        if dv.is_zero() || v.is_zero() {
            break;
        }
        let step = &v / &dv;
        z -= &step;
        if step.log10_abs() < eps + z.log10_abs().max(0.0) {
            break;
        }
    }
    z
}

/// Newton on the real axis for a real polynomial; `None` if it does not
/// settle to a root.
fn real_newton(p: &ComplexPoly, start: &BigReal, ctx: &PrecisionContext) -> Option<BigReal> {
    let coeffs: Vec<BigReal> = p.coeffs.iter().map(|c| c.re.clone()).collect();
    let mut x = start.clone();
    let eps = -f64::from(ctx.working_digits()) + 4.0;
    for _ in 0..80 {
        let mut v = BigReal::zero(ctx);
        let mut dv = BigReal::zero(ctx);
        for c in coeffs.iter().rev() {
            dv = &dv * &x + &v;
            v = &v * &x + c;
        }
        if v.is_zero() {
            return Some(x);
        }
        if dv.is_zero() {
            return None;
        }
        let step = &v / &dv;
        x -= &step;
        if step.log10_abs() < eps + x.log10_abs().max(0.0) {
            let r = BigComplex::from_real(x.clone());
            let res = p.eval(&r).abs().log10_abs() - p.abs_eval(&r).log10_abs();
            return (res < -f64::from(ctx.target_digits()) / 2.0).then_some(x);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Rational;

    fn ctx() -> PrecisionContext {
        PrecisionContext::digits(50).unwrap()
    }

    #[test]
    fn roots_of_one_plus_z_squared() {
        let c = ctx();
        let p = RationalPoly::new(vec![Rational::from((1, 12)), Rational::new(), Rational::from((1, 12))]);
        let roots = find_roots_rational(&p, &c).unwrap();
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(!r.is_real);
            assert!(r.valid);
            assert!(r.unit_circle_distance.log10_abs() < -40.0);
            assert!((r.root.im.abs() - 1).log10_abs() < -40.0);
        }
    }

    #[test]
    fn roots_of_unity() {
        let c = ctx();
        for n in [3usize, 7, 12] {
            let mut coeffs = vec![0i64; n + 1];
            coeffs[0] = -1;
            coeffs[n] = 1;
            let roots = find_roots_rational(&RationalPoly::from_i64(&coeffs), &c).unwrap();
            assert_eq!(roots.len(), n);
            for r in &roots {
                assert!(r.unit_circle_distance.log10_abs() < -45.0);
                let back = r.root.powi(n as i64) - 1;
                assert!(back.log10_abs() < -45.0);
            }
            assert_eq!(
                roots.iter().filter(|r| r.is_real).count(),
                if n % 2 == 0 { 2 } else { 1 }
            );
        }
    }

    #[test]
    fn quartic_real_roots_pair_up() {
        // z^4 - 5 z^2 + 1: roots ±sqrt((5 ± sqrt 21)/2)
        let c = ctx();
        let roots = find_roots_rational(&RationalPoly::from_i64(&[1, 0, -5, 0, 1]), &c).unwrap();
        assert!(roots.iter().all(|r| r.is_real));
        let big = roots.last().unwrap().root.re.clone();
        let expected = ((BigReal::from_i64(21, &c).sqrt() + 5) / 2).sqrt();
        assert!((big - expected).log10_abs() < -45.0);
        let prod = &roots[0].root * &roots[1].root;
        assert!((prod - 1).log10_abs() < -45.0);
    }

    #[test]
    fn repeated_roots_carry_multiplicity() {
        let c = ctx();
        // (z - 1)^2 (z + 2)
        let p = RationalPoly::from_i64(&[2, -3, 0, 1]);
        let roots = find_roots_rational(&p, &c).unwrap();
        assert_eq!(roots.len(), 2);
        assert_eq!(roots[0].multiplicity, 1);
        assert_eq!(roots[1].multiplicity, 2);
        assert!((roots[1].root.re.clone() - 1).log10_abs() < -45.0);
    }

    #[test]
    fn reconstruction_from_roots() {
        let c = ctx();
        let p = ComplexPoly::new(vec![
            BigComplex::from_f64(1.0, 2.0, &c),
            BigComplex::from_f64(-3.0, 0.5, &c),
            BigComplex::from_f64(0.0, 1.0, &c),
            BigComplex::from_f64(2.0, 0.0, &c),
        ]);
        let roots = find_roots(&p, &c).unwrap();
        let rs: Vec<BigComplex> = roots.iter().map(|r| r.root.clone()).collect();
        let q = ComplexPoly::from_roots(p.leading().unwrap(), &rs);
        for (a, b) in p.coeffs().iter().zip(q.coeffs()) {
            assert!((a - b).log10_abs() < -25.0);
        }
    }

    #[test]
    fn zero_polynomial_is_rejected() {
        assert!(find_roots(&ComplexPoly::new(vec![]), &ctx()).is_err());
    }
}
