//! Scripted player strategies, executed against exhaustive adversaries to
//! validate that the described strategies actually win or survive at
//! finite scale.
//!
//! - [`rho`]: the existential player's order-preserving red-index book
//!   with the 3^(k-r) gap law.
//! - [`board`]: the ordered survival board, the scripted existential
//!   response to cylindrifier demands, and the exhaustive universal tree.
//! - [`cone`]: the universal player's cone-bombardment script against the
//!   finite rainbow structure, with a certificate-building replay.
//! - [`partition`]: the existential player's partition-matching book for
//!   pebble games between split complex algebras.

pub mod board;
pub mod cone;
pub mod partition;
pub mod rho;

use thiserror::Error;

/// Errors raised by scripted strategies. `NoRedAvailable` signals that a
/// finite red-index pool cannot host the required spacing (the truncation
/// is too small, not a strategy failure); `NoMatch` signals unsatisfiable
/// matching constraints; `Invariant` reports a broken book invariant with
/// a replayable trace.
#[derive(Debug, Error)]
pub enum StrategyError {
    #[error("no red index available for tint {tint} (gap {gap}, pool {pool})")]
    NoRedAvailable { tint: i64, gap: u32, pool: u32 },
    #[error("no matching response: {0}")]
    NoMatch(String),
    #[error("book invariant violated: {trace}")]
    Invariant { trace: String },
    #[error("illegal move: {0}")]
    IllegalMove(String),
}
