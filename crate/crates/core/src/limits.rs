use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Size caps for the exponential oracles. Past a cap an operation returns
/// [`Error::CapExceeded`] instead of running.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest order for which the full family of maximum stable sets (and
    /// the family of maximum matchings) is enumerated.
    pub omega_cap: usize,
    /// Largest order for which the stability number alone is computed.
    pub alpha_cap: usize,
    /// Largest order for blossom / flower / posy searches.
    pub structure_cap: usize,
    /// Step budget for a single alternating-structure search.
    pub search_budget: u64,
}

impl Limits {
    pub const MAX_OMEGA: usize = 24;
    pub const MAX_ALPHA: usize = 48;
    pub const MAX_STRUCTURE: usize = 32;

    /// Overrides the enumeration cap, keeping the others at least as large.
    pub fn with_omega_cap(cap: usize) -> Result<Limits> {
        if cap > Self::MAX_OMEGA {
            return Err(Error::Precondition(format!(
                "cap {cap} exceeds the library maximum {}",
                Self::MAX_OMEGA
            )));
        }
        let d = Limits::default();
        Ok(Limits {
            omega_cap: cap,
            alpha_cap: d.alpha_cap.max(cap),
            structure_cap: d.structure_cap.max(cap),
            search_budget: d.search_budget,
        })
    }

    pub(crate) fn check(&self, what: &'static str, n: usize, cap: usize) -> Result<()> {
        if n > cap {
            Err(Error::CapExceeded { what, n, cap })
        } else {
            Ok(())
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            omega_cap: 16,
            alpha_cap: 20,
            structure_cap: 20,
            search_budget: 50_000_000,
        }
    }
}
