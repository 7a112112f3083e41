//! Resource guards shared by the counting and verification routines.

use num_bigint::BigUint;
use num_traits::Pow;

use crate::error::{Error, Result};

/// Default cap on map evaluations (brute force) or backtracking leaves.
pub const DEFAULT_MAX_EVALUATIONS: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_evaluations: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_evaluations: DEFAULT_MAX_EVALUATIONS,
        }
    }
}

impl Limits {
    pub fn new(max_evaluations: u64) -> Result<Self> {
        if max_evaluations == 0 {
            return Err(Error::InvalidArgument("guard must be positive".into()));
        }
        Ok(Limits { max_evaluations })
    }

    /// Fails unless `base^exp` is within the evaluation budget.
    pub(crate) fn check_power(&self, base: usize, exp: usize, what: &str) -> Result<()> {
        let work: BigUint = Pow::pow(BigUint::from(base), exp);
        if work > BigUint::from(self.max_evaluations) {
            return Err(Error::InstanceTooLarge(format!(
                "{what}: {base}^{exp} evaluations exceeds guard {}",
                self.max_evaluations
            )));
        }
        Ok(())
    }
}
