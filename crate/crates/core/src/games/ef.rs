//! Ehrenfeucht–Fraïssé pebble games between finite binary structures.
//!
//! Exact back-and-forth solution: the universal player picks a pebble pair
//! (fresh or already on the board) and places one of its pebbles on an
//! element of either structure; the existential player must place the
//! partner so that the pebbled correspondence stays a partial isomorphism.

use crate::games::Verdict;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

/// A finite structure with one irreflexive symmetric binary relation.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct EfStructure {
    pub size: usize,
    /// adj[x * size + y]
    pub adj: Vec<bool>,
}

impl EfStructure {
    pub fn complete_graph(n: usize) -> Self {
        let mut adj = vec![false; n * n];
        for x in 0..n {
            for y in 0..n {
                adj[x * n + y] = x != y;
            }
        }
        EfStructure { size: n, adj }
    }

    pub fn empty_graph(n: usize) -> Self {
        EfStructure { size: n, adj: vec![false; n * n] }
    }

    pub fn edge(&self, x: usize, y: usize) -> bool {
        self.adj[x * self.size + y]
    }
}

/// Whether extending `pairs` with (a, b) keeps a partial isomorphism.
fn compatible(left: &EfStructure, right: &EfStructure, pairs: &[(u8, u8)], a: u8, b: u8) -> bool {
    for &(x, y) in pairs {
        if (x == a) != (y == b) {
            return false;
        }
        if left.edge(x as usize, a as usize) != right.edge(y as usize, b as usize) {
            return false;
        }
    }
    true
}

type Memo = HashMap<(Vec<(u8, u8)>, u32), bool>;

/// true iff the existential player survives `rounds` more rounds from the
/// given pebbled position (`pairs` sorted, at most `pebbles` pairs).
fn exists_wins(
    left: &EfStructure,
    right: &EfStructure,
    pebbles: usize,
    pairs: &[(u8, u8)],
    rounds: u32,
    memo: &mut Memo,
) -> bool {
    if rounds == 0 {
        return true;
    }
    let key = (pairs.to_vec(), rounds);
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut result = true;
    // Universal moves: choose the remaining pair set (either all pairs, or
    // all pairs minus one relocated pebble pair), a side, and an element.
    let mut bases: Vec<Vec<(u8, u8)>> = Vec::new();
    if pairs.len() < pebbles {
        bases.push(pairs.to_vec());
    }
    for drop in 0..pairs.len() {
        let mut rest = pairs.to_vec();
        rest.remove(drop);
        bases.push(rest);
    }
    bases.sort();
    bases.dedup();
    'forall: for base in &bases {
        for a in 0..left.size as u8 {
            // Universal plays a on the left; existential answers on the right.
            let mut survives = false;
            for b in 0..right.size as u8 {
                if compatible(left, right, base, a, b) {
                    let mut next = base.clone();
                    next.push((a, b));
                    next.sort();
                    if exists_wins(left, right, pebbles, &next, rounds - 1, memo) {
                        survives = true;
                        break;
                    }
                }
            }
            if !survives {
                result = false;
                break 'forall;
            }
        }
        for b in 0..right.size as u8 {
            let mut survives = false;
            for a in 0..left.size as u8 {
                if compatible(left, right, base, a, b) {
                    let mut next = base.clone();
                    next.push((a, b));
                    next.sort();
                    if exists_wins(left, right, pebbles, &next, rounds - 1, memo) {
                        survives = true;
                        break;
                    }
                }
            }
            if !survives {
                result = false;
                break 'forall;
            }
        }
    }
    memo.insert(key, result);
    result
}

/// Solve the p-pebble r-round game.
pub fn ef_solve(left: &EfStructure, right: &EfStructure, pebbles: usize, rounds: u32) -> Verdict {
    let mut memo = Memo::new();
    if exists_wins(left, right, pebbles, &[], rounds, &mut memo) {
        Verdict::ExistsWins
    } else {
        Verdict::ForallWins
    }
}
