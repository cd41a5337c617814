//! Atomic games on relation-algebra atom structures (edge networks).
//!
//! The fast engine memoizes on (canonical current network, rounds left).
//! Restricting the universal player's demands to the latest network is
//! exact for the standard game, where networks form a chain: a demand on an
//! older network is available on the latest one and any response to the
//! latter also answers the former. With node reuse the chain property
//! fails, so the fast engine reports ForallWins soundly but downgrades a
//! would-be ExistsWins to Unknown; the reference engine `solve_full` keeps
//! the whole played set and is exact for both variants on tiny boards.

use crate::canon::canonical_edge;
use crate::error::AlgebraError;
use crate::games::{ForallCert, GameVariant, SolveBudget, SolveResult, Verdict};
use crate::network::EdgeNetwork;
use crate::ra::RaAtomStructure;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// A universal-player move in the edge-network game.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum RaDemand {
    /// Round zero: demand a network realizing this atom.
    Atom(usize),
    /// Demand a witness z with labels (x,z) = a and (z,y) = b. In the bold
    /// variant the universal player owns the node-reuse option: `target:
    /// Some(u)` forces the witness onto node u (overwriting its edges);
    /// `None` leaves placement to the existential player.
    Triangle {
        x: usize,
        y: usize,
        a: usize,
        b: usize,
        target: Option<usize>,
    },
}

/// All legal demands of the universal player on `net`.
pub fn legal_demands(
    s: &RaAtomStructure,
    variant: GameVariant,
    net: &EdgeNetwork,
) -> Vec<RaDemand> {
    let n = net.nodes();
    let atoms = s.atom_count();
    let bold = matches!(variant, GameVariant::BoldG | GameVariant::BoldH);
    let mut out = Vec::new();
    for x in 0..n {
        for y in 0..n {
            let c = net.label(x, y);
            for a in 0..atoms {
                for b in 0..atoms {
                    if s.consistent(a, b, c) {
                        out.push(RaDemand::Triangle { x, y, a, b, target: None });
                        if bold {
                            for u in 0..n {
                                if u != x && u != y {
                                    out.push(RaDemand::Triangle {
                                        x,
                                        y,
                                        a,
                                        b,
                                        target: Some(u),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// Identity atoms usable as a self label on node `x` of `net` extended by a
/// fresh node: enumerated during response search.
fn identity_candidates(s: &RaAtomStructure) -> Vec<usize> {
    (0..s.atom_count()).filter(|&e| s.is_identity_atom(e)).collect()
}

/// All initial networks realizing `atom`, canonically deduplicated.
pub fn initial_networks(s: &RaAtomStructure, atom: usize) -> Vec<EdgeNetwork> {
    let mut out = Vec::new();
    if s.is_identity_atom(atom) {
        let net = EdgeNetwork::from_labels(1, vec![atom as u16]);
        if net.is_consistent(s) {
            out.push(net);
        }
    } else {
        for &e0 in &identity_candidates(s) {
            for &e1 in &identity_candidates(s) {
                let conv = s.converse_atom(atom);
                let net = EdgeNetwork::from_labels(
                    2,
                    vec![e0 as u16, atom as u16, conv as u16, e1 as u16],
                );
                if net.is_consistent(s) {
                    out.push(net);
                }
            }
        }
    }
    dedup_canonical(out)
}

fn dedup_canonical(nets: Vec<EdgeNetwork>) -> Vec<EdgeNetwork> {
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut keyed: Vec<(Vec<u16>, EdgeNetwork)> = Vec::new();
    for net in nets {
        let key = canon_key(&net);
        if seen.insert(key.clone()) {
            keyed.push((key, net));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, n)| n).collect()
}

fn canon_key(net: &EdgeNetwork) -> Vec<u16> {
    match canonical_edge(net) {
        Ok(k) => {
            let mut v = vec![k.nodes as u16];
            v.extend(k.labels);
            v
        }
        // Deterministic fallback: raw labels (loses isomorphism sharing,
        // never correctness).
        Err(_) => {
            let n = net.nodes();
            let mut v = vec![u16::MAX, n as u16];
            for x in 0..n {
                for y in 0..n {
                    v.push(net.label(x, y) as u16);
                }
            }
            v
        }
    }
}

/// Fill the unset edges at node `w` of `net` by backtracking; forced edges
/// are already set. Pushes every consistent completion.
fn complete_node(
    s: &RaAtomStructure,
    net: &mut EdgeNetwork,
    w: usize,
    free: &[usize],
    k: usize,
    out: &mut Vec<EdgeNetwork>,
    cap: usize,
) -> Result<(), AlgebraError> {
    if k == free.len() {
        if net.violation(s).is_none() {
            out.push(net.clone());
            if out.len() > cap {
                return Err(AlgebraError::BudgetExceeded {
                    what: "edge response enumeration".into(),
                    limit: cap,
                });
            }
        }
        return Ok(());
    }
    let u = free[k];
    for c in 0..s.atom_count() {
        if u == w {
            if !s.is_identity_atom(c) {
                continue;
            }
        } else if s.is_identity_atom(c) {
            continue;
        }
        net.set_raw(u, w, c as u16);
        net.set_raw(w, u, s.converse_atom(c) as u16);
        // Prune: every triangle through (u, w) whose other edges are set
        // must already be consistent.
        let unset = u16::MAX as usize;
        let mut ok = true;
        for v in 0..net.nodes() {
            let vw = net.label(v, w);
            let uv = net.label(u, v);
            if vw == unset || uv == unset {
                continue;
            }
            if !s.consistent(uv, vw, c) {
                ok = false;
                break;
            }
        }
        if ok {
            complete_node(s, net, w, free, k + 1, out, cap)?;
        }
    }
    net.set_raw(u, w, u16::MAX);
    net.set_raw(w, u, u16::MAX);
    Ok(())
}

/// All responses of the existential player to a triangle demand,
/// canonically deduplicated and sorted.
pub fn exists_responses(
    s: &RaAtomStructure,
    variant: GameVariant,
    m: usize,
    net: &EdgeNetwork,
    d: &RaDemand,
    budget: &SolveBudget,
) -> Result<Vec<EdgeNetwork>, AlgebraError> {
    let &RaDemand::Triangle { x, y, a, b, target } = d else {
        return Ok(initial_networks(s, match d {
            RaDemand::Atom(a) => *a,
            _ => unreachable!(),
        }));
    };
    let _ = variant;
    let n = net.nodes();
    let cap = budget.max_responses;
    let mut out = Vec::new();
    // A forced placement: the universal player exercised the reuse option.
    if let Some(u) = target {
        if u >= n {
            return Ok(Vec::new());
        }
        if net.label(x, u) == a && net.label(u, y) == b {
            return Ok(vec![net.clone()]);
        }
        let mut labels: Vec<u16> = (0..n * n)
            .map(|i| {
                let (p, q) = (i / n, i % n);
                if p == u || q == u {
                    u16::MAX
                } else {
                    net.label(p, q) as u16
                }
            })
            .collect();
        labels[x * n + u] = a as u16;
        labels[u * n + x] = s.converse_atom(a) as u16;
        labels[u * n + y] = b as u16;
        labels[y * n + u] = s.converse_atom(b) as u16;
        let mut m2 = EdgeNetwork::from_labels(n, labels);
        let free: Vec<usize> =
            (0..n).filter(|&v| m2.label(v, u) == u16::MAX as usize).collect();
        complete_node(s, &mut m2, u, &free, 0, &mut out, cap)?;
        return Ok(dedup_canonical(out));
    }
    // Reuse an existing witness.
    for z in 0..n {
        if net.label(x, z) == a && net.label(z, y) == b {
            out.push(net.clone());
            break;
        }
    }
    // Extend with a fresh node.
    if n < m {
        let (mut grown, w) = net.grown();
        grown.set_label(s, x, w, a);
        grown.set_label(s, w, y, b);
        let free: Vec<usize> =
            (0..=w).filter(|&u| grown.label(u, w) == u16::MAX as usize).collect();
        complete_node(s, &mut grown, w, &free, 0, &mut out, cap)?;
    }
    Ok(dedup_canonical(out))
}

struct FastSolver<'a> {
    s: &'a RaAtomStructure,
    variant: GameVariant,
    m: usize,
    budget: SolveBudget,
    memo: HashMap<(Vec<u16>, u32), bool>,
    positions: usize,
}

impl<'a> FastSolver<'a> {
    /// true iff the existential player survives `rounds` more demands.
    fn exists_wins(&mut self, net: &EdgeNetwork, rounds: u32) -> Result<bool, AlgebraError> {
        if rounds == 0 {
            return Ok(true);
        }
        let key = (canon_key(net), rounds);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.positions += 1;
        if self.positions > self.budget.max_positions {
            return Err(AlgebraError::BudgetExceeded {
                what: "solver positions".into(),
                limit: self.budget.max_positions,
            });
        }
        let mut result = true;
        for d in legal_demands(self.s, self.variant, net) {
            let responses =
                exists_responses(self.s, self.variant, self.m, net, &d, &self.budget)?;
            let mut survives = false;
            for r in &responses {
                if self.exists_wins(r, rounds - 1)? {
                    survives = true;
                    break;
                }
            }
            if !survives {
                result = false;
                break;
            }
        }
        self.memo.insert(key, result);
        Ok(result)
    }

    /// Rebuild the winning demand at a ForallWins position (deterministic:
    /// first demand in enumeration order whose responses all lose).
    fn build_cert(&mut self, net: &EdgeNetwork, rounds: u32) -> Result<ForallCert<RaDemand>, AlgebraError> {
        for d in legal_demands(self.s, self.variant, net) {
            let responses =
                exists_responses(self.s, self.variant, self.m, net, &d, &self.budget)?;
            let mut all_lose = true;
            for r in &responses {
                if self.exists_wins(r, rounds - 1)? {
                    all_lose = false;
                    break;
                }
            }
            if all_lose {
                let mut children = Vec::new();
                for r in responses {
                    let sub = self.build_cert(&r, rounds - 1)?;
                    children.push((canon_key(&r), sub));
                }
                return Ok(ForallCert { demand: d, children });
            }
        }
        Err(AlgebraError::InvalidStructure(
            "certificate requested at a non-winning position".into(),
        ))
    }
}

/// Solve the k-round game with node budget m.
pub fn solve(
    s: &RaAtomStructure,
    variant: GameVariant,
    m: usize,
    k: u32,
    budget: &SolveBudget,
) -> SolveResult<RaDemand> {
    if k == 0 {
        return SolveResult {
            verdict: Verdict::ExistsWins,
            certificate: None,
            notes: vec!["zero rounds".into()],
        };
    }
    let mut solver = FastSolver {
        s,
        variant,
        m,
        budget: *budget,
        memo: HashMap::new(),
        positions: 0,
    };
    // Round zero: the universal player demands an atom.
    let mut winning_atom = None;
    let mut exists_survives_all = true;
    for atom in 0..s.atom_count() {
        let inits = initial_networks(s, atom);
        let mut survives = false;
        for net in &inits {
            match solver.exists_wins(net, k - 1) {
                Ok(true) => {
                    survives = true;
                    break;
                }
                Ok(false) => {}
                Err(e) => return SolveResult::unknown(format!("budget: {e}")),
            }
        }
        if !survives {
            winning_atom = Some(atom);
            break;
        }
    }
    if winning_atom.is_none() {
        exists_survives_all = true;
    }
    match winning_atom {
        Some(atom) => {
            let inits = initial_networks(s, atom);
            let mut children = Vec::new();
            for net in inits {
                match solver.build_cert(&net, k - 1) {
                    Ok(sub) => children.push((canon_key(&net), sub)),
                    Err(e) => return SolveResult::unknown(format!("certificate: {e}")),
                }
            }
            SolveResult {
                verdict: Verdict::ForallWins,
                certificate: Some(ForallCert { demand: RaDemand::Atom(atom), children }),
                notes: vec![format!("positions expanded: {}", solver.positions)],
            }
        }
        None => {
            let _ = exists_survives_all;
            if matches!(variant, GameVariant::BoldG) {
                SolveResult::unknown(
                    "latest-network engine cannot certify ExistsWins under node reuse; \
                     use solve_full",
                )
            } else {
                SolveResult {
                    verdict: Verdict::ExistsWins,
                    certificate: None,
                    notes: vec![format!("positions expanded: {}", solver.positions)],
                }
            }
        }
    }
}

/// Replay a ForallWins certificate against the exhaustive response engine.
/// Returns Err with a description if any response lacks a prepared branch.
pub fn replay_certificate(
    s: &RaAtomStructure,
    variant: GameVariant,
    m: usize,
    cert: &ForallCert<RaDemand>,
) -> Result<(), String> {
    let RaDemand::Atom(atom) = cert.demand else {
        return Err("certificate root must be an atom demand".into());
    };
    let inits = initial_networks(s, atom);
    for net in &inits {
        let key = canon_key(net);
        let Some((_, sub)) = cert.children.iter().find(|(k, _)| *k == key) else {
            return Err(format!("no branch for initial network {key:?}"));
        };
        replay_inner(s, variant, m, net, sub)?;
    }
    Ok(())
}

fn replay_inner(
    s: &RaAtomStructure,
    variant: GameVariant,
    m: usize,
    net: &EdgeNetwork,
    cert: &ForallCert<RaDemand>,
) -> Result<(), String> {
    let budget = SolveBudget::default();
    let responses = exists_responses(s, variant, m, net, &cert.demand, &budget)
        .map_err(|e| format!("response enumeration failed: {e}"))?;
    if responses.is_empty() {
        return Ok(());
    }
    if cert.children.is_empty() {
        return Err(format!(
            "existential player has {} responses but certificate claims none",
            responses.len()
        ));
    }
    for r in &responses {
        let key = canon_key(r);
        let Some((_, sub)) = cert.children.iter().find(|(k, _)| *k == key) else {
            return Err(format!("no branch for response {key:?}"));
        };
        replay_inner(s, variant, m, r, sub)?;
    }
    Ok(())
}

/// Lyndon-condition battery: verdict of the standard k-round game for each
/// k up to `max_k` at node budget `m`.
pub fn lyndon_battery(
    s: &RaAtomStructure,
    max_k: u32,
    m: usize,
    budget: &SolveBudget,
) -> Vec<(u32, Verdict)> {
    let mut out = Vec::new();
    let mut lost = false;
    for k in 1..=max_k {
        if lost {
            // Monotone: once the universal player wins at k, he wins at
            // every larger k by playing the same strategy.
            out.push((k, Verdict::ForallWins));
            continue;
        }
        let v = solve(s, GameVariant::G, m, k, budget).verdict;
        if v == Verdict::ForallWins {
            lost = true;
        }
        out.push((k, v));
    }
    out
}

/// Reference engine: exact minimax over the full multiset of played
/// networks, for both variants. Exponential; tiny boards only.
pub fn solve_full(
    s: &RaAtomStructure,
    variant: GameVariant,
    m: usize,
    k: u32,
    budget: &SolveBudget,
) -> SolveResult<RaDemand> {
    if k == 0 {
        return SolveResult {
            verdict: Verdict::ExistsWins,
            certificate: None,
            notes: vec!["zero rounds".into()],
        };
    }
    let mut memo: HashMap<(BTreeSet<Vec<u16>>, u32), bool> = HashMap::new();
    let mut positions = 0usize;
    fn rec(
        s: &RaAtomStructure,
        variant: GameVariant,
        m: usize,
        played: &BTreeSet<EdgeNetwork>,
        rounds: u32,
        memo: &mut HashMap<(BTreeSet<Vec<u16>>, u32), bool>,
        positions: &mut usize,
        budget: &SolveBudget,
    ) -> Result<bool, AlgebraError> {
        if rounds == 0 {
            return Ok(true);
        }
        let key: BTreeSet<Vec<u16>> = played.iter().map(canon_key).collect();
        if let Some(&v) = memo.get(&(key.clone(), rounds)) {
            return Ok(v);
        }
        *positions += 1;
        if *positions > budget.max_positions {
            return Err(AlgebraError::BudgetExceeded {
                what: "full solver positions".into(),
                limit: budget.max_positions,
            });
        }
        let mut result = true;
        'demand: for net in played.iter() {
            for d in legal_demands(s, variant, net) {
                let responses = exists_responses(s, variant, m, net, &d, budget)?;
                let mut survives = false;
                for r in &responses {
                    let mut next = played.clone();
                    next.insert(r.clone());
                    if rec(s, variant, m, &next, rounds - 1, memo, positions, budget)? {
                        survives = true;
                        break;
                    }
                }
                if !survives {
                    result = false;
                    break 'demand;
                }
            }
        }
        memo.insert((key, rounds), result);
        Ok(result)
    }
    // Round zero.
    for atom in 0..s.atom_count() {
        let inits = initial_networks(s, atom);
        let mut survives = false;
        for net in &inits {
            let mut played = BTreeSet::new();
            played.insert(net.clone());
            match rec(s, variant, m, &played, k - 1, &mut memo, &mut positions, budget) {
                Ok(true) => {
                    survives = true;
                    break;
                }
                Ok(false) => {}
                Err(e) => return SolveResult::unknown(format!("budget: {e}")),
            }
        }
        if !survives {
            return SolveResult {
                verdict: Verdict::ForallWins,
                certificate: None,
                notes: vec![format!("winning atom {atom}; positions {positions}")],
            };
        }
    }
    SolveResult {
        verdict: Verdict::ExistsWins,
        certificate: None,
        notes: vec![format!("positions {positions}")],
    }
}
