//! Work accounting for the diagram-sized computations.

use thiserror::Error;

/// Default bound on DP cells and diagram states.
pub const DEFAULT_WORK_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("work limit exceeded: needed more than {limit} states (requested {requested})")]
pub struct WorkLimitExceeded {
    pub limit: u64,
    pub requested: u64,
}

/// A running tally of states spent against a fixed limit.
#[derive(Debug, Clone)]
pub struct WorkBudget {
    limit: u64,
    spent: u64,
}

impl WorkBudget {
    pub fn new(limit: u64) -> Self {
        Self { limit, spent: 0 }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn spent(&self) -> u64 {
        self.spent
    }

    /// Charges `amount` states; fails without charging when that would pass the limit.
    pub fn charge(&mut self, amount: u64) -> Result<(), WorkLimitExceeded> {
        let requested = self.spent.saturating_add(amount);
        if requested > self.limit {
            return Err(WorkLimitExceeded {
                limit: self.limit,
                requested,
            });
        }
        self.spent = requested;
        Ok(())
    }
}

impl Default for WorkBudget {
    fn default() -> Self {
        Self::new(DEFAULT_WORK_LIMIT)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn charge_stops_at_limit() {
        let mut b = WorkBudget::new(10);
        b.charge(4).unwrap();
        b.charge(6).unwrap();
        let err = b.charge(1).unwrap_err();
        assert_eq!(err.limit, 10);
        assert_eq!(err.requested, 11);
        assert_eq!(b.spent(), 10);
    }

    #[test]
    fn unlimited_saturates() {
        let mut b = WorkBudget::unlimited();
        b.charge(u64::MAX).unwrap();
        b.charge(1).unwrap();
        assert_eq!(b.spent(), u64::MAX);
    }
}
