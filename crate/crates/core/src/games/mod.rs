//! Witness games on atom structures: move semantics for the standard and
//! node-reusing atomic games, hypernetwork games with transformation and
//! amalgamation moves, an exhaustive memoized solver, Lyndon-condition
//! batteries, and Ehrenfeucht–Fraïssé pebble games.

pub mod ca_game;
pub mod ef;
pub mod hyper_game;
pub mod ra_game;

use serde::{Deserialize, Serialize};

/// Outcome of solving a game at fixed budgets.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum Verdict {
    ExistsWins,
    ForallWins,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::ExistsWins => write!(f, "ExistsWins"),
            Verdict::ForallWins => write!(f, "ForallWins"),
            Verdict::Unknown => write!(f, "Unknown"),
        }
    }
}

/// Game variant selector.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum GameVariant {
    /// Standard atomic game: node budget m, networks only ever grow.
    G,
    /// Node-reusing atomic game: as G, but the witness may overwrite an
    /// existing node outside the demanded face.
    BoldG,
    /// Hypernetwork game with transformation and amalgamation moves.
    H,
    /// Hypernetwork game with node reuse.
    BoldH,
}

/// Budgets limiting the exhaustive solver. All limits are deterministic
/// structural counts (search nodes, response fan-out), never wall-clock.
#[derive(Clone, Copy, Debug, Serialize, Deserialize)]
pub struct SolveBudget {
    /// Maximum solver positions expanded.
    pub max_positions: usize,
    /// Maximum distinct responses enumerated per demand.
    pub max_responses: usize,
}

impl Default for SolveBudget {
    fn default() -> Self {
        SolveBudget { max_positions: 2_000_000, max_responses: 200_000 }
    }
}

/// A strategy tree certifying a win for the universal player: at each node
/// the chosen demand, and one subtree per (canonically deduplicated)
/// response of the existential player. A node with an empty response list
/// is a terminal win.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct ForallCert<D> {
    pub demand: D,
    /// Children in canonical response order; the key is the canonical label
    /// vector of the response position.
    pub children: Vec<(Vec<u16>, ForallCert<D>)>,
}

impl<D> ForallCert<D> {
    pub fn depth(&self) -> usize {
        1 + self
            .children
            .iter()
            .map(|(_, c)| c.depth())
            .max()
            .unwrap_or(0)
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|(_, c)| c.node_count()).sum::<usize>()
    }
}

/// Solver outcome with optional certificate and diagnostics.
#[derive(Clone, Debug)]
pub struct SolveResult<D> {
    pub verdict: Verdict,
    pub certificate: Option<ForallCert<D>>,
    pub notes: Vec<String>,
}

impl<D> SolveResult<D> {
    pub fn unknown(note: impl Into<String>) -> Self {
        SolveResult { verdict: Verdict::Unknown, certificate: None, notes: vec![note.into()] }
    }
}
