//! The existential player's red-index book: a strictly order-preserving
//! partial map from green tints to red indices, kept "widely spaced" so
//! later rounds can always insert between existing values.
//!
//! The source inequality reads `rho(i) - rho(j) >= 3^(k-r)` for `i < j`
//! while also calling the map order preserving; the literal pair of
//! conditions is internally tense, so the implementation uses
//! `|rho(j) - rho(i)| >= 3^(k-r)` with `rho` strictly increasing and
//! records the discrepancy rather than silently normalizing.

use crate::strategies::StrategyError;
use std::collections::BTreeMap;

/// The book: tint -> red index, plus the round bookkeeping that fixes the
/// current gap requirement 3^(k-r).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoBook {
    rho: BTreeMap<i64, u32>,
    /// Number of red indices available: values range over 0..pool.
    pool: u32,
    /// Total rounds k.
    rounds: u32,
    /// Rounds already played (r).
    round: u32,
}

impl RhoBook {
    pub fn new(pool: u32, rounds: u32) -> Self {
        RhoBook { rho: BTreeMap::new(), pool, rounds, round: 0 }
    }

    /// Start the next round; the gap requirement shrinks by a factor 3.
    pub fn advance_round(&mut self) {
        self.round += 1;
    }

    pub fn round(&self) -> u32 {
        self.round
    }

    /// Required spacing 3^(k-r) for insertions made during this round.
    pub fn gap(&self) -> u32 {
        3u32.pow(self.rounds.saturating_sub(self.round))
    }

    pub fn get(&self, tint: i64) -> Option<u32> {
        self.rho.get(&tint).copied()
    }

    pub fn contains(&self, tint: i64) -> bool {
        self.rho.contains_key(&tint)
    }

    pub fn entries(&self) -> impl Iterator<Item = (i64, u32)> + '_ {
        self.rho.iter().map(|(&t, &v)| (t, v))
    }

    /// Insert a tint, choosing the midpoint of the admissible interval
    /// (rounded down); midpoint selection maximizes remaining slack and is
    /// deterministic. Errors when the pool cannot host the spacing.
    pub fn insert(&mut self, tint: i64) -> Result<u32, StrategyError> {
        if let Some(v) = self.get(tint) {
            return Ok(v);
        }
        let gap = self.gap();
        let pred = self.rho.range(..tint).next_back().map(|(_, &v)| v);
        let succ = self.rho.range(tint..).next().map(|(_, &v)| v);
        let lo = match pred {
            Some(p) => p + gap,
            None => 0,
        };
        let hi = match succ {
            Some(s) => {
                if s < gap {
                    return Err(StrategyError::NoRedAvailable { tint, gap, pool: self.pool });
                }
                s - gap
            }
            None => self.pool - 1,
        };
        if lo > hi || hi >= self.pool {
            return Err(StrategyError::NoRedAvailable { tint, gap, pool: self.pool });
        }
        let v = (lo + hi) / 2;
        self.rho.insert(tint, v);
        Ok(v)
    }

    /// Check the order-preservation and spacing invariants. Spacing is
    /// checked at the current round's gap (earlier insertions were made
    /// under larger gaps, so this is the binding requirement).
    pub fn check_invariants(&self) -> Result<(), StrategyError> {
        let gap = self.gap();
        let entries: Vec<(i64, u32)> = self.entries().collect();
        for w in entries.windows(2) {
            let ((i, vi), (j, vj)) = (w[0], w[1]);
            if vi >= vj {
                return Err(StrategyError::Invariant {
                    trace: format!("order broken: rho({i})={vi} >= rho({j})={vj}"),
                });
            }
            if vj - vi < gap {
                return Err(StrategyError::Invariant {
                    trace: format!(
                        "gap broken: rho({j})-rho({i}) = {} < {gap}",
                        vj - vi
                    ),
                });
            }
        }
        Ok(())
    }
}
