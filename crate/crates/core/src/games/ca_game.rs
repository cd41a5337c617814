//! Atomic games on cylindric atom structures (atomic networks).
//!
//! Same engine shape as the edge-network solver: memoization on the
//! canonical current network and rounds remaining. Exact for the standard
//! game; with node reuse, ForallWins verdicts are sound and a would-be
//! ExistsWins is downgraded to Unknown (the chain property justifying the
//! latest-network reduction fails under overwrites).
//!
//! The universal player's demands can be ordered by a caller-supplied
//! priority; ordering affects only search effort and certificate shape,
//! never the verdict, because a win requires one demand defeating every
//! response and survival requires surviving every demand.

use crate::ca::CaAtomStructure;
use crate::canon::canonical_atomic;
use crate::error::AlgebraError;
use crate::games::{ForallCert, GameVariant, SolveBudget, SolveResult, Verdict};
use crate::network::{enumerate_completions, networks_for_atom, AtomicNetwork, CaContext};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap};

/// A universal-player move in the atomic-network game.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum CaDemand {
    /// Round zero: demand a network realizing this atom.
    Atom(usize),
    /// Cylindrifier demand: a witness z with M(face[i -> z]) = a. In the
    /// bold variants the universal player additionally owns the node-reuse
    /// option: `target: Some(u)` forces the witness onto node u,
    /// overwriting u's other edges; `None` leaves the placement to the
    /// existential player (fresh node or a matching existing one).
    Cyl {
        face: Vec<usize>,
        i: usize,
        a: usize,
        target: Option<usize>,
    },
}

/// Priority for demand ordering: lower values are tried first. The default
/// orders lexicographically. Must be a pure function for reproducibility.
pub type DemandPriority<'p> = &'p dyn Fn(&CaAtomStructure, &AtomicNetwork, &CaDemand) -> i64;

/// All legal cylindrifier demands on `net`, sorted by priority. In the
/// bold variants this includes the forced-placement demands for every
/// overwritable node.
pub fn legal_demands(
    s: &CaAtomStructure,
    variant: GameVariant,
    net: &AtomicNetwork,
    priority: Option<DemandPriority<'_>>,
) -> Vec<CaDemand> {
    let dim = s.dim();
    let count = net.nodes().pow(dim as u32);
    let bold = matches!(variant, GameVariant::BoldG | GameVariant::BoldH);
    let mut keyed: Vec<(i64, CaDemand)> = Vec::new();
    for r in 0..count {
        let face = net.unrank(r);
        let label = net.label_at(r);
        for i in 0..dim {
            for a in 0..s.atom_count() {
                // N(x) <= c_i a, i.e. the label lies in the c_i class of a.
                if !s.related(i, label, a) {
                    continue;
                }
                let mut targets: Vec<Option<usize>> = vec![None];
                if bold {
                    for u in 0..net.nodes() {
                        let elsewhere =
                            face.iter().enumerate().any(|(j, &v)| j != i && v == u);
                        if !elsewhere {
                            targets.push(Some(u));
                        }
                    }
                }
                for target in targets {
                    let d = CaDemand::Cyl { face: face.clone(), i, a, target };
                    let p = match priority {
                        Some(f) => f(s, net, &d),
                        None => 0,
                    };
                    keyed.push((p, d));
                }
            }
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    keyed.into_iter().map(|(_, d)| d).collect()
}

fn canon_key(net: &AtomicNetwork) -> Vec<u16> {
    match canonical_atomic(net) {
        Ok(k) => {
            let mut v = vec![k.nodes as u16];
            v.extend(k.labels);
            v
        }
        Err(_) => {
            let mut v = vec![u16::MAX, net.nodes() as u16];
            v.extend_from_slice(net.labels());
            v
        }
    }
}

fn dedup_canonical(nets: Vec<AtomicNetwork>) -> Vec<AtomicNetwork> {
    let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
    let mut keyed: Vec<(Vec<u16>, AtomicNetwork)> = Vec::new();
    for net in nets {
        let key = canon_key(&net);
        if seen.insert(key.clone()) {
            keyed.push((key, net));
        }
    }
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, n)| n).collect()
}

/// All responses of the existential player to a cylindrifier demand.
pub fn exists_responses(
    ctx: &CaContext<'_>,
    variant: GameVariant,
    m: usize,
    net: &AtomicNetwork,
    d: &CaDemand,
    budget: &SolveBudget,
) -> Result<Vec<AtomicNetwork>, AlgebraError> {
    let s = ctx.s;
    let dim = s.dim();
    let CaDemand::Cyl { face, i, a, target } = d else {
        let CaDemand::Atom(atom) = d else { unreachable!() };
        return networks_for_atom(ctx, *atom, budget.max_responses);
    };
    let (i, a) = (*i, *a);
    let n = net.nodes();
    let mut out = Vec::new();
    // A forced placement: the universal player exercised the reuse option
    // and named the node that must host the witness.
    if let Some(u) = *target {
        if u >= n {
            return Ok(Vec::new());
        }
        let count = n.pow(dim as u32);
        let mut t = face.clone();
        t[i] = u;
        if net.label(&t) == a {
            return Ok(vec![net.clone()]);
        }
        let mut partial: Vec<Option<u16>> = vec![None; count];
        for r in 0..count {
            let tup = net.unrank(r);
            if !tup.contains(&u) {
                partial[r] = Some(net.label_at(r) as u16);
            }
        }
        partial[net.rank(&t)] = Some(a as u16);
        let filled = enumerate_completions(ctx, n, &partial, budget.max_responses)?;
        return Ok(dedup_canonical(filled));
    }
    // Reuse an existing witness.
    for z in 0..n {
        let mut t = face.clone();
        t[i] = z;
        if net.label(&t) == a {
            out.push(net.clone());
            break;
        }
    }
    // Extend with a fresh node.
    if n < m {
        let n2 = n + 1;
        let count = n2.pow(dim as u32);
        let probe = AtomicNetwork::from_labels(n2, dim, vec![0; count]);
        let mut partial: Vec<Option<u16>> = vec![None; count];
        let old_count = n.pow(dim as u32);
        for r in 0..old_count {
            let t = net.unrank(r);
            partial[probe.rank(&t)] = Some(net.label_at(r) as u16);
        }
        let mut t = face.clone();
        t[i] = n;
        partial[probe.rank(&t)] = Some(a as u16);
        out.extend(enumerate_completions(ctx, n2, &partial, budget.max_responses)?);
    }
    let _ = variant;
    Ok(dedup_canonical(out))
}

struct FastSolver<'a, 'p> {
    ctx: &'a CaContext<'a>,
    variant: GameVariant,
    m: usize,
    budget: SolveBudget,
    priority: Option<DemandPriority<'p>>,
    memo: HashMap<(Vec<u16>, u32), bool>,
    positions: usize,
}

impl FastSolver<'_, '_> {
    fn exists_wins(&mut self, net: &AtomicNetwork, rounds: u32) -> Result<bool, AlgebraError> {
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
        for d in legal_demands(self.ctx.s, self.variant, net, self.priority) {
            let responses =
                exists_responses(self.ctx, self.variant, self.m, net, &d, &self.budget)?;
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

    fn build_cert(
        &mut self,
        net: &AtomicNetwork,
        rounds: u32,
    ) -> Result<ForallCert<CaDemand>, AlgebraError> {
        for d in legal_demands(self.ctx.s, self.variant, net, self.priority) {
            let responses =
                exists_responses(self.ctx, self.variant, self.m, net, &d, &self.budget)?;
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

/// Solve the k-round game with node budget m. `atom_order` optionally
/// reorders the round-zero atom demands (search effort only).
pub fn solve(
    s: &CaAtomStructure,
    variant: GameVariant,
    m: usize,
    k: u32,
    budget: &SolveBudget,
    priority: Option<DemandPriority<'_>>,
    atom_order: Option<&[usize]>,
) -> SolveResult<CaDemand> {
    if k == 0 {
        return SolveResult {
            verdict: Verdict::ExistsWins,
            certificate: None,
            notes: vec!["zero rounds".into()],
        };
    }
    let ctx = CaContext::new(s);
    let mut solver = FastSolver {
        ctx: &ctx,
        variant,
        m,
        budget: *budget,
        priority,
        memo: HashMap::new(),
        positions: 0,
    };
    let default_order: Vec<usize> = (0..s.atom_count()).collect();
    let order: &[usize] = atom_order.unwrap_or(&default_order);
    let mut winning_atom = None;
    for &atom in order {
        let inits = match networks_for_atom(&ctx, atom, budget.max_responses) {
            Ok(v) => dedup_canonical(v),
            Err(e) => return SolveResult::unknown(format!("initial networks: {e}")),
        };
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
    match winning_atom {
        Some(atom) => {
            let inits = match networks_for_atom(&ctx, atom, budget.max_responses) {
                Ok(v) => dedup_canonical(v),
                Err(e) => return SolveResult::unknown(format!("initial networks: {e}")),
            };
            let mut children = Vec::new();
            for net in inits {
                match solver.build_cert(&net, k - 1) {
                    Ok(sub) => children.push((canon_key(&net), sub)),
                    Err(e) => return SolveResult::unknown(format!("certificate: {e}")),
                }
            }
            SolveResult {
                verdict: Verdict::ForallWins,
                certificate: Some(ForallCert { demand: CaDemand::Atom(atom), children }),
                notes: vec![format!("positions expanded: {}", solver.positions)],
            }
        }
        None => {
            if matches!(variant, GameVariant::BoldG) {
                SolveResult::unknown(
                    "latest-network engine cannot certify ExistsWins under node reuse",
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
pub fn replay_certificate(
    s: &CaAtomStructure,
    variant: GameVariant,
    m: usize,
    cert: &ForallCert<CaDemand>,
    budget: &SolveBudget,
) -> Result<(), String> {
    let ctx = CaContext::new(s);
    let CaDemand::Atom(atom) = cert.demand else {
        return Err("certificate root must be an atom demand".into());
    };
    let inits = networks_for_atom(&ctx, atom, budget.max_responses)
        .map(dedup_canonical)
        .map_err(|e| format!("initial networks: {e}"))?;
    for net in &inits {
        let key = canon_key(net);
        let Some((_, sub)) = cert.children.iter().find(|(k, _)| *k == key) else {
            return Err(format!("no branch for an initial network ({} nodes)", net.nodes()));
        };
        replay_inner(&ctx, variant, m, net, sub, budget)?;
    }
    Ok(())
}

fn replay_inner(
    ctx: &CaContext<'_>,
    variant: GameVariant,
    m: usize,
    net: &AtomicNetwork,
    cert: &ForallCert<CaDemand>,
    budget: &SolveBudget,
) -> Result<(), String> {
    let responses = exists_responses(ctx, variant, m, net, &cert.demand, budget)
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
            return Err("no branch for a response".into());
        };
        replay_inner(ctx, variant, m, r, sub, budget)?;
    }
    Ok(())
}

/// Lyndon-condition battery over the standard game.
pub fn lyndon_battery(
    s: &CaAtomStructure,
    max_k: u32,
    m: usize,
    budget: &SolveBudget,
) -> Vec<(u32, Verdict)> {
    let mut out = Vec::new();
    let mut lost = false;
    for k in 1..=max_k {
        if lost {
            out.push((k, Verdict::ForallWins));
            continue;
        }
        let v = solve(s, GameVariant::G, m, k, budget, None, None).verdict;
        if v == Verdict::ForallWins {
            lost = true;
        }
        out.push((k, v));
    }
    out
}
