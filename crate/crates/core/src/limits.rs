use crate::error::{Error, Result};

/// Default cap on `d` for d-partition enumeration.
pub const DEFAULT_MAX_D: u64 = 12;

/// Hard cap: reachable residues are tracked in a 64-bit mask.
pub const MASK_MAX_D: u64 = 64;

/// Runtime limits shared by the enumeration-heavy operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_d: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_d: DEFAULT_MAX_D,
        }
    }
}

impl Limits {
    pub fn with_max_d(max_d: u64) -> Self {
        Self { max_d }
    }

    pub(crate) fn check(&self, d: u64) -> Result<()> {
        if d == 0 {
            return Err(Error::ZeroDenominator);
        }
        let max = self.max_d.min(MASK_MAX_D);
        if d > max {
            return Err(Error::LimitExceeded { d, max });
        }
        Ok(())
    }
}
