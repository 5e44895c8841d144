//! Element-count ceilings for enumerations.

use crate::error::{Error, Result};

/// Environment variable overriding the default ceiling.
pub const BUDGET_ENV: &str = "FCTOOL_BUDGET";

/// Default ceiling when the environment does not set one.
pub const DEFAULT_BUDGET: usize = 5_000_000;

/// A ceiling on the number of objects an enumeration may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of objects.
    pub limit: usize,
}

impl Budget {
    /// A budget with an explicit limit.
    pub fn new(limit: usize) -> Self {
        Budget { limit }
    }

    /// Reads `FCTOOL_BUDGET`, falling back to [`DEFAULT_BUDGET`].
    pub fn from_env() -> Self {
        let limit = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Budget { limit }
    }

    /// Fails once `count` exceeds the limit.
    pub fn check(&self, count: usize) -> Result<()> {
        if count > self.limit {
            Err(Error::Budget { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::from_env()
    }
}
