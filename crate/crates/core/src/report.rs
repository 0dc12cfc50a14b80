use serde_json::{json, Value};

use crate::numerics::{BigComplex, BigReal, PrecisionContext};

/// Outcome of a two-sided numerical check.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub id: String,
    /// Parameter names and rendered values, in schema order.
    pub params: Vec<(String, String)>,
    pub lhs: BigComplex,
    pub rhs: BigComplex,
    /// `|lhs - rhs|`, or `|(rhs - lhs) - expected|` when an expected
    /// discrepancy is the pass criterion.
    pub abs_residual: BigReal,
    pub tolerance: BigReal,
    pub passed: bool,
    pub terms_used: usize,
    /// Known nonzero value of `rhs - lhs`, when the identity is false as
    /// written.
    pub expected_discrepancy: Option<BigComplex>,
    /// Whether `passed` compares against `expected_discrepancy` instead of 0.
    pub discrepancy_criterion: bool,
    pub note: Option<String>,
}

impl VerificationReport {
    /// `passed ⇔ |lhs - rhs| < tolerance`.
    pub fn new(
        id: impl Into<String>,
        params: Vec<(String, String)>,
        lhs: BigComplex,
        rhs: BigComplex,
        tolerance: BigReal,
        terms_used: usize,
    ) -> Self {
        let abs_residual = (&lhs - &rhs).abs();
        let passed = abs_residual < tolerance;
        VerificationReport {
            id: id.into(),
            params,
            lhs,
            rhs,
            abs_residual,
            tolerance,
            passed,
            terms_used,
            expected_discrepancy: None,
            discrepancy_criterion: false,
            note: None,
        }
    }

    /// `passed ⇔ |(rhs - lhs) - expected| < tolerance`.
    pub fn with_expected_discrepancy(
        id: impl Into<String>,
        params: Vec<(String, String)>,
        lhs: BigComplex,
        rhs: BigComplex,
        expected: BigComplex,
        tolerance: BigReal,
        terms_used: usize,
    ) -> Self {
        let abs_residual = (&(&rhs - &lhs) - &expected).abs();
        let passed = abs_residual < tolerance;
        VerificationReport {
            id: id.into(),
            params,
            lhs,
            rhs,
            abs_residual,
            tolerance,
            passed,
            terms_used,
            expected_discrepancy: Some(expected),
            discrepancy_criterion: true,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Attaches a predicted `rhs - lhs` without changing the pass criterion.
    pub fn with_predicted_discrepancy(mut self, predicted: BigComplex) -> Self {
        self.expected_discrepancy = Some(predicted);
        self
    }

    /// `rhs - lhs`.
    pub fn signed_residual(&self) -> BigComplex {
        &self.rhs - &self.lhs
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let params: serde_json::Map<String, Value> = self
            .params
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let mut v = json!({
            "id": self.id,
            "params": params,
            "lhs": self.lhs.to_string_digits(digits),
            "rhs": self.rhs.to_string_digits(digits),
            "residual": self.abs_residual.to_sci_string(6),
            "tolerance": self.tolerance.to_sci_string(3),
            "passed": self.passed,
            "terms_used": self.terms_used,
        });
        if let Some(e) = &self.expected_discrepancy {
            v["expected_discrepancy"] = Value::String(e.to_string_digits(digits));
            v["criterion"] = Value::String(
                if self.discrepancy_criterion {
                    "discrepancy"
                } else {
                    "equality"
                }
                .into(),
            );
        }
        if let Some(n) = &self.note {
            v["note"] = Value::String(n.clone());
        }
        v
    }
}

/// `10^-target · max(1, |lhs|, |rhs|)`.
pub fn scaled_tolerance(lhs: &BigComplex, rhs: &BigComplex, ctx: &PrecisionContext) -> BigReal {
    let scale = lhs.log10_abs().max(rhs.log10_abs()).max(0.0);
    let tol = ctx.tolerance();
    if scale > 0.0 {
        tol * lhs.abs().max(rhs.abs())
    } else {
        tol
    }
}
