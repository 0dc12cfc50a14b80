use crate::error::{Error, Result};

use super::{const_pi, BigComplex, BigReal, PrecisionContext};

/// Elementary function selector for [`elementary`].
#[derive(Debug, Clone, PartialEq)]
pub enum Elementary {
    Exp,
    /// Principal branch.
    Log,
    Cot,
    Coth,
    /// `arg^exponent` on the principal branch of `log arg`.
    Power(BigComplex),
}

/// Evaluates an elementary function at a complex argument.
///
/// Poles and branch points closer than `10^-working` are rejected with
/// [`Error::Domain`]. `coth` is cross-checked against `1 + 2/(e^{2x} - 1)`.
pub fn elementary(tag: &Elementary, arg: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let arg = arg.with_bits(arg.precision_bits().max(ctx.bits()));
    match tag {
        Elementary::Exp => Ok(arg.exp()),
        Elementary::Log => log(&arg, ctx),
        Elementary::Cot => cot(&arg, ctx),
        Elementary::Coth => coth(&arg, ctx),
        Elementary::Power(w) => {
            if w.im.is_zero() {
                if let Some(k) = w.re.round_to_i64() {
                    if w.re == k && (k >= 0 || !arg.is_zero()) {
                        return Ok(arg.powi(k));
                    }
                }
            }
            let l = log(&arg, ctx)?;
            Ok((w * &l).exp())
        }
    }
}

fn near_zero(x: &BigComplex, ctx: &PrecisionContext) -> bool {
    x.log10_abs() < ctx.log10_epsilon()
}

pub fn log(z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    if near_zero(z, ctx) {
        return Err(Error::Domain("log at the branch point 0".into()));
    }
    Ok(z.ln_unchecked())
}

pub fn cot(z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let pi = const_pi(ctx);
    let k = (&z.re / &pi).round_to_i64().unwrap_or(0);
    let offset = z - &(&pi * k);
    if near_zero(&offset, ctx) {
        return Err(Error::Domain(format!("cot pole at {k}π")));
    }
    // cot(x+iy) = (sin 2x - i sinh 2y) / (cosh 2y - cos 2x)
    let two_x = &z.re * 2;
    let two_y = &z.im * 2;
    let den = two_y.cosh() - two_x.cos();
    Ok(BigComplex::new(two_x.sin() / &den, -(two_y.sinh() / &den)))
}

pub fn coth(z: &BigComplex, ctx: &PrecisionContext) -> Result<BigComplex> {
    let pi = const_pi(ctx);
    let k = (&z.im / &pi).round_to_i64().unwrap_or(0);
    let offset = BigComplex::new(z.re.clone(), &z.im - &(&pi * k));
    if near_zero(&offset, ctx) {
        return Err(Error::Domain(format!("coth pole at {k}πi")));
    }
    // coth(x+iy) = (sinh 2x - i sin 2y) / (cosh 2x - cos 2y)
    let two_x = &z.re * 2;
    let two_y = &z.im * 2;
    let den = two_x.cosh() - two_y.cos();
    let value = BigComplex::new(two_x.sinh() / &den, -(two_y.sin() / &den));

    let check = if z.re.is_sign_negative() {
        -coth_via_exp(&(-z))
    } else {
        coth_via_exp(z)
    };
    let scale = value.log10_abs().max(0.0);
    if (&value - &check).log10_abs() > scale - f64::from(ctx.working_digits()) + 3.0 {
        return Err(Error::Precision(format!(
            "coth cross-check failed at {}",
            z.to_string_digits(12)
        )));
    }
    Ok(value)
}

/// `1 + 2/(e^{2x} - 1)`.
fn coth_via_exp(z: &BigComplex) -> BigComplex {
    let e = (z * 2).exp() - 1;
    let two = BigComplex::from_real(BigReal(rug::Float::with_val(z.precision_bits(), 2)));
    (&two / &e) + 1
}

/// Real cotangent with the same pole guard as [`cot`].
pub fn cot_real(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    let pi = const_pi(ctx);
    let k = (x / &pi).round_to_i64().unwrap_or(0);
    if (x - &(&pi * k)).log10_abs() < ctx.log10_epsilon() {
        return Err(Error::Domain(format!("cot pole at {k}π")));
    }
    Ok(BigReal(x.0.clone().cot()))
}

/// Real hyperbolic cotangent; pole at 0.
pub fn coth_real(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    if x.log10_abs() < ctx.log10_epsilon() {
        return Err(Error::Domain("coth pole at 0".into()));
    }
    Ok(BigReal(x.0.clone().coth()))
}
