use serde_json::{json, Value};

use crate::numerics::BigReal;

use super::RootCertificate;

/// Which roots must lie on the unit circle for the verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootClass {
    Nonreal,
    All,
}

#[derive(Debug, Clone)]
pub struct UnimodularityReport {
    pub poly_id: String,
    pub degree: usize,
    pub roots: Vec<RootCertificate>,
    /// Counted with multiplicity.
    pub num_real: usize,
    pub max_unit_distance_nonreal: Option<BigReal>,
    /// Largest `||r| - 1|` over the class the verdict is about.
    pub max_unit_distance: Option<BigReal>,
    pub class: RootClass,
    pub tolerance: BigReal,
    pub all_certified: bool,
    pub verdict: bool,
}

fn max_of<'a>(it: impl Iterator<Item = &'a BigReal>) -> Option<BigReal> {
    it.fold(None, |acc: Option<BigReal>, d| match acc {
        Some(a) if a >= *d => Some(a),
        _ => Some(d.clone()),
    })
}

/// Builds the report; `verdict` holds iff every root in `class` is within
/// `tolerance` of the unit circle.
pub fn unimodularity_report(
    poly_id: impl Into<String>,
    degree: usize,
    roots: Vec<RootCertificate>,
    class: RootClass,
    tolerance: BigReal,
) -> UnimodularityReport {
    let num_real = roots.iter().filter(|r| r.is_real).map(|r| r.multiplicity).sum();
    let max_unit_distance_nonreal = max_of(roots.iter().filter(|r| !r.is_real).map(|r| &r.unit_circle_distance));
    let relevant: Vec<&RootCertificate> = roots.iter().filter(|r| class == RootClass::All || !r.is_real).collect();
    let max_unit_distance = max_of(relevant.iter().map(|r| &r.unit_circle_distance));
    let verdict = relevant.iter().all(|r| r.unit_circle_distance < tolerance);
    let all_certified = roots.iter().all(|r| r.valid);
    UnimodularityReport {
        poly_id: poly_id.into(),
        degree,
        roots,
        num_real,
        max_unit_distance_nonreal,
        max_unit_distance,
        class,
        tolerance,
        all_certified,
        verdict,
    }
}

impl UnimodularityReport {
    pub fn largest_real_root(&self) -> Option<BigReal> {
        max_of(self.roots.iter().filter(|r| r.is_real).map(|r| &r.root.re))
    }

    pub fn to_json(&self, digits: usize) -> Value {
        let roots: Vec<Value> = self
            .roots
            .iter()
            .map(|r| {
                let mut v = json!({
                    "re": r.root.re.to_sci_string(digits),
                    "im": r.root.im.to_sci_string(digits),
                    "residual": r.residual.to_sci_string(4),
                    "on_circle": r.unit_circle_distance < self.tolerance,
                });
                if r.multiplicity > 1 {
                    v["multiplicity"] = json!(r.multiplicity);
                }
                v
            })
            .collect();
        json!({
            "schema": 1,
            "poly_id": self.poly_id,
            "degree": self.degree,
            "roots": roots,
            "num_real": self.num_real,
            "max_unit_distance": self.max_unit_distance.as_ref().map(|d| d.to_sci_string(4)),
            "all_certified": self.all_certified,
            "verdict": self.verdict,
        })
    }
}
