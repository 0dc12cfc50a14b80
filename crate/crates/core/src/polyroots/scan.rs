use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exact::{real_nonprincipal_characters, DirichletCharacter};
use crate::numerics::{BigReal, PrecisionContext};

use super::families::{full_period_poly, generalized_r, pm_odd_over_z, pm_poly, ramanujan_poly};
use super::report::{unimodularity_report, RootClass, UnimodularityReport};
use super::solver::{find_roots_rational, find_roots_refined};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `R_{2m+1}`; only the nonreal roots must be unimodular.
    Ramanujan,
    /// `R_{2m+1}(z) + ζ(2m+1)/(2πi)^{2m+1} (z^{2m+1} - z)`.
    Full,
    Pm,
    PmOdd,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Ramanujan, Family::Full, Family::Pm, Family::PmOdd];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Ramanujan => "ramanujan",
            Family::Full => "full",
            Family::Pm => "pm",
            Family::PmOdd => "pm_odd",
        }
    }

    pub fn class(&self) -> RootClass {
        match self {
            Family::Ramanujan => RootClass::Nonreal,
            _ => RootClass::All,
        }
    }

    /// Default unit-circle tolerance, `log10`.
    pub fn default_log10_tolerance(&self) -> i64 {
        match self {
            Family::Ramanujan => -30,
            _ => -25,
        }
    }

    pub fn poly_id(&self, m: u32) -> String {
        match self {
            Family::Ramanujan => format!("R_{}", 2 * m + 1),
            Family::Full => format!("full_period_{m}"),
            Family::Pm => format!("p_{m}"),
            Family::PmOdd => format!("p_{m}_odd_over_z"),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Validation(format!("unknown polynomial family '{s}'")))
    }
}

/// Solves one member of `family` and reports against `10^log10_tol`.
pub fn family_report(family: Family, m: u32, log10_tol: i64, ctx: &PrecisionContext) -> Result<UnimodularityReport> {
    let tol = BigReal::pow10(log10_tol, ctx);
    let id = family.poly_id(m);
    if family == Family::Ramanujan {
        let p = ramanujan_poly(m)?;
        let deg = p.degree().unwrap_or(0);
        let roots = find_roots_rational(&p, ctx)?;
        return Ok(unimodularity_report(id, deg, roots, family.class(), tol));
    }
    if m == 0 {
        return Err(Error::Domain(format!("family {family} needs m >= 1")));
    }
    let fine = ctx.doubled();
    let build = |c: &PrecisionContext| match family {
        Family::Full => full_period_poly(m, c),
        Family::Pm => pm_poly(m, c),
        _ => pm_odd_over_z(m, c),
    };
    let p = build(ctx)?;
    let refine = build(&fine)?;
    let deg = p.degree().unwrap_or(0);
    // p_1^-(z)/z is a nonzero constant.
    if deg == 0 {
        return Ok(unimodularity_report(id, 0, Vec::new(), family.class(), tol));
    }
    let roots = find_roots_refined(&p, Some(&refine), ctx)?;
    Ok(unimodularity_report(id, deg, roots, family.class(), tol))
}

/// Outcome for one `(χ, ψ, k)` of the generalized family.
#[derive(Debug, Clone)]
pub enum PairOutcome {
    /// The polynomial vanishes identically.
    Zero,
    /// Nonzero constant: no roots to test.
    Constant,
    Report(UnimodularityReport),
    Failed(Error),
}

#[derive(Debug, Clone)]
pub struct PairReport {
    pub chi: DirichletCharacter,
    pub psi: DirichletCharacter,
    pub k: u32,
    pub modulus_m: u64,
    pub outcome: PairOutcome,
}

impl PairReport {
    /// A root off the circle, or a construction failure.
    pub fn flagged(&self) -> bool {
        match &self.outcome {
            PairOutcome::Report(r) => !r.verdict,
            PairOutcome::Failed(_) => true,
            _ => false,
        }
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let mut v = json!({
            "chi": { "modulus": self.chi.modulus(), "values": self.chi.values() },
            "psi": { "modulus": self.psi.modulus(), "values": self.psi.values() },
            "k": self.k,
            "M": self.modulus_m,
            "flagged": self.flagged(),
        });
        match &self.outcome {
            PairOutcome::Zero => v["outcome"] = json!("zero"),
            PairOutcome::Constant => v["outcome"] = json!("constant"),
            PairOutcome::Report(r) => {
                v["outcome"] = json!("report");
                v["report"] = r.to_json(digits);
            }
            PairOutcome::Failed(e) => {
                v["outcome"] = json!("error");
                v["error"] = json!(e.to_string());
            }
        }
        v
    }
}

/// Root report for the generalized polynomial of `(χ, ψ, k, M)`, over all
/// roots; the numerator is used so a leftover `z^{-1}` does not matter.
pub fn generalized_report(
    chi: &DirichletCharacter,
    psi: &DirichletCharacter,
    k: u32,
    modulus_m: u64,
    log10_tol: i64,
    ctx: &PrecisionContext,
) -> PairReport {
    let outcome = match generalized_r(k, chi, psi, modulus_m) {
        Err(e) => PairOutcome::Failed(e),
        Ok(p) if p.is_zero() => PairOutcome::Zero,
        Ok(p) => {
            let num = p.numerator();
            match num.degree() {
                Some(0) | None => PairOutcome::Constant,
                Some(deg) => match find_roots_rational(&num, ctx) {
                    Ok(roots) => {
                        let id = format!("R_{k}(chi mod {}, psi mod {})", chi.modulus(), psi.modulus());
                        PairOutcome::Report(unimodularity_report(
                            id,
                            deg,
                            roots,
                            RootClass::All,
                            BigReal::pow10(log10_tol, ctx),
                        ))
                    }
                    Err(e) => PairOutcome::Failed(e),
                },
            }
        }
    };
    PairReport {
        chi: chi.clone(),
        psi: psi.clone(),
        k,
        modulus_m,
        outcome,
    }
}

/// Every real nonprincipal character with modulus in `2..=max_modulus`,
/// ordered by modulus.
pub fn nonprincipal_characters(max_modulus: u64) -> Vec<DirichletCharacter> {
    (2..=max_modulus).flat_map(real_nonprincipal_characters).collect()
}

/// All `(χ, ψ, k)` jobs of the conjecture sweep, with `M` = modulus of ψ.
pub fn conjecture_jobs(
    max_modulus: u64,
    k_range: std::ops::RangeInclusive<u32>,
) -> Vec<(DirichletCharacter, DirichletCharacter, u32)> {
    let chars = nonprincipal_characters(max_modulus);
    let mut jobs = Vec::new();
    for chi in &chars {
        for psi in &chars {
            for k in k_range.clone() {
                jobs.push((chi.clone(), psi.clone(), k));
            }
        }
    }
    jobs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.as_str().parse::<Family>().unwrap(), f);
        }
        assert!("bogus".parse::<Family>().is_err());
    }

    #[test]
    fn small_family_reports() {
        let ctx = PrecisionContext::digits(30).unwrap();
        let r = family_report(Family::Ramanujan, 3, -20, &ctx).unwrap();
        assert_eq!(r.num_real, 4);
        assert!(r.verdict);
        for f in [Family::Full, Family::Pm, Family::PmOdd] {
            assert!(family_report(f, 2, -20, &ctx).unwrap().verdict, "{f}");
        }
    }

    #[test]
    fn character_count() {
        assert_eq!(nonprincipal_characters(12).len(), 14);
    }

    #[test]
    fn mod4_mod3_pair() {
        let ctx = PrecisionContext::digits(30).unwrap();
        let chi = real_nonprincipal_characters(4).remove(0);
        let psi = real_nonprincipal_characters(3).remove(0);
        let r = generalized_report(&chi, &psi, 4, 3, -20, &ctx);
        assert!(matches!(r.outcome, PairOutcome::Report(_) | PairOutcome::Zero));
        assert!(!r.flagged());
    }
}
