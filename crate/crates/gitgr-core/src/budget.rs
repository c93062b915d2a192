use crate::error::{Error, Result};

/// Cap on the number of items an enumeration may walk.
///
/// Each enumerating operation states what it counts against the cap (subsets,
/// candidate pairs, tableau-chain transitions, monomial products) and refuses
/// up front with [`Error::Resource`] instead of running long.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_items: u64,
}

impl EnumBudget {
    pub const DEFAULT_MAX_ITEMS: u64 = 1_000_000;

    pub const fn new(max_items: u64) -> Self {
        EnumBudget { max_items }
    }

    pub const fn unlimited() -> Self {
        EnumBudget { max_items: u64::MAX }
    }

    pub fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > u128::from(self.max_items) {
            Err(Error::Resource { what, needed, cap: self.max_items })
        } else {
            Ok(())
        }
    }
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget::new(Self::DEFAULT_MAX_ITEMS)
    }
}
