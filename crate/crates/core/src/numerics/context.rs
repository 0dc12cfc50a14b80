use crate::error::{Error, Result};

use super::BigReal;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

/// Digit budget shared by every floating evaluation.
///
/// All series and elementary functions are evaluated at the *working*
/// precision `target_digits + guard_digits`; only `target_digits` are
/// claimed in reported comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    target_digits: u32,
    guard_digits: u32,
    max_terms: usize,
}

impl PrecisionContext {
    pub const MIN_DIGITS: u32 = 10;
    pub const DEFAULT_MAX_TERMS: usize = 2_000_000;

    pub fn new(target_digits: u32, guard_digits: u32) -> Result<Self> {
        Self::with_max_terms(target_digits, guard_digits, Self::DEFAULT_MAX_TERMS)
    }

    pub fn with_max_terms(target_digits: u32, guard_digits: u32, max_terms: usize) -> Result<Self> {
        if target_digits < Self::MIN_DIGITS {
            return Err(Error::Validation(format!(
                "target_digits must be >= {}, got {target_digits}",
                Self::MIN_DIGITS
            )));
        }
        if guard_digits < Self::MIN_DIGITS {
            return Err(Error::Validation(format!(
                "guard_digits must be >= {}, got {guard_digits}",
                Self::MIN_DIGITS
            )));
        }
        if max_terms == 0 {
            return Err(Error::Validation("max_terms must be >= 1".into()));
        }
        Ok(PrecisionContext {
            target_digits,
            guard_digits,
            max_terms,
        })
    }

    /// `target` digits with the default guard of 10 digits.
    pub fn digits(target_digits: u32) -> Result<Self> {
        Self::new(target_digits, Self::MIN_DIGITS)
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn max_terms(&self) -> usize {
        self.max_terms
    }

    pub fn set_max_terms(mut self, max_terms: usize) -> Result<Self> {
        if max_terms == 0 {
            return Err(Error::Validation("max_terms must be >= 1".into()));
        }
        self.max_terms = max_terms;
        Ok(self)
    }

    pub fn working_digits(&self) -> u32 {
        self.target_digits + self.guard_digits
    }

    /// Binary precision backing the working digits (a few spare bits on top).
    pub fn bits(&self) -> u32 {
        (f64::from(self.working_digits()) * LOG2_10).ceil() as u32 + 8
    }

    /// Same target with the guard doubled; used for stability checks.
    pub fn with_doubled_guard(&self) -> Self {
        PrecisionContext {
            guard_digits: self.guard_digits * 2,
            ..*self
        }
    }

    /// Context whose working precision is twice this one's (root refinement).
    pub fn doubled(&self) -> Self {
        PrecisionContext {
            target_digits: self.target_digits,
            guard_digits: self.guard_digits + self.working_digits(),
            max_terms: self.max_terms,
        }
    }

    /// `10^-working`: the truncation budget of every series.
    pub fn epsilon(&self) -> BigReal {
        BigReal::pow10(-(self.working_digits() as i64), self)
    }

    /// `10^-target`: the default pass tolerance.
    pub fn tolerance(&self) -> BigReal {
        BigReal::pow10(-(self.target_digits as i64), self)
    }

    pub(crate) fn log10_epsilon(&self) -> f64 {
        -f64::from(self.working_digits())
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            target_digits: 50,
            guard_digits: 10,
            max_terms: Self::DEFAULT_MAX_TERMS,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_small_budgets() {
        assert!(PrecisionContext::new(9, 10).is_err());
        assert!(PrecisionContext::new(10, 9).is_err());
        assert!(PrecisionContext::with_max_terms(10, 10, 0).is_err());
        assert!(PrecisionContext::new(10, 10).is_ok());
    }

    #[test]
    fn working_is_target_plus_guard() {
        let ctx = PrecisionContext::new(50, 10).unwrap();
        assert_eq!(ctx.working_digits(), 60);
        assert!(f64::from(ctx.bits()) >= 60.0 * LOG2_10);
        assert_eq!(ctx.doubled().working_digits(), 120);
        assert_eq!(ctx.with_doubled_guard().working_digits(), 70);
    }
}
