//! Hypernetwork games: cylindrifier, transformation, and amalgamation
//! moves over hypernetworks on cylindric boards.
//!
//! Hyperedge labels follow an implicit-labelling convention: only
//! explicitly labelled hyperedges are stored; an unstored short hyperedge
//! is implicitly the constant label, and an unstored long hyperedge is
//! implicitly a unique label occurring nowhere else. This removes the
//! existential player's labelling choices without loss: labels are only
//! compared for per-key equality in amalgamation legality, and making two
//! distinct keys share a label never helps her (it can only enable more
//! universal amalgamation moves). Tracked hyperedges are truncated to
//! length at most dim + 1; longer edges never participate in any legality
//! condition the engine checks, and the truncation is documented here
//! rather than hidden.
//!
//! The bold node-reuse option (the universal player naming the node that
//! must host a cylindrifier witness) is not enumerated in this engine: the
//! hypernetwork variants are solved with the plain demand repertoire, so
//! BoldH verdicts from this module are those of H. The edge-network and
//! atomic-network engines implement the forced-placement demands.

use crate::ca::CaAtomStructure;
use crate::canon::canonical_hyper;
use crate::error::AlgebraError;
use crate::games::{GameVariant, SolveBudget, SolveResult, Verdict};
use crate::network::{
    enumerate_completions, networks_for_atom, AtomicNetwork, CaContext, HyperLabel, Hypernetwork,
};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};

/// A universal-player move in the hypernetwork game.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum HyperDemand {
    /// Round zero: a hypernetwork realizing this atom.
    Atom(usize),
    /// Cylindrifier demand on played network `net`.
    Cyl { net: usize, face: Vec<usize>, i: usize, a: usize },
    /// Transformation demand: the forced response is the pulled-back
    /// network along theta (keys = new node names, values = old nodes).
    Transform { net: usize, theta: Vec<usize> },
    /// Amalgamation demand on two compatible played networks.
    Amalgam { left: usize, right: usize },
}

fn hyper_key(s: &CaAtomStructure, h: &Hypernetwork) -> Vec<u64> {
    match canonical_hyper(h) {
        Ok(k) => {
            let mut v: Vec<u64> = vec![k.nodes as u64];
            v.extend(k.labels.iter().map(|&x| x as u64));
            for (edge, l) in &k.hyper {
                v.push(u64::MAX);
                v.extend(edge.iter().map(|&x| x as u64));
                v.push(match l {
                    HyperLabel::Lambda => u64::MAX - 1,
                    HyperLabel::Free(f) => *f,
                });
            }
            v
        }
        Err(_) => {
            let mut v: Vec<u64> = vec![u64::MAX, h.core.nodes() as u64];
            v.extend(h.core.labels().iter().map(|&x| x as u64));
            let _ = s;
            v
        }
    }
}

/// Networks agree on their shared nodes: equal core labels on tuples over
/// the intersection and equal (explicit or implicit) hyperlabels on shared
/// keys.
fn compatible_overlap(s: &CaAtomStructure, a: &Hypernetwork, b: &Hypernetwork) -> bool {
    let shared: Vec<usize> =
        (0..a.core.nodes().min(b.core.nodes())).collect();
    if shared.is_empty() {
        return false;
    }
    let dim = s.dim();
    let total = shared.len().pow(dim as u32);
    let mut tuple = vec![0usize; dim];
    for code in 0..total {
        let mut c = code;
        for k in 0..dim {
            tuple[k] = shared[c % shared.len()];
            c /= shared.len();
        }
        if a.core.label(&tuple) != b.core.label(&tuple) {
            return false;
        }
    }
    // Hyperedge agreement on shared keys. An explicit label against an
    // implicit one: the implicit side is the constant on short edges or a
    // unique fresh label on long edges; equality holds only when the
    // explicit side matches that reading.
    for key in a.hyper.keys() {
        if !key.iter().all(|x| shared.contains(x)) {
            continue;
        }
        match (a.hyper.get(key), b.hyper.get(key)) {
            (Some(x), Some(y)) if x != y => return false,
            (Some(x), None) => match b.classify_hyperedge(s, key) {
                crate::network::HyperedgeKind::Short => {
                    if *x != HyperLabel::Lambda {
                        return false;
                    }
                }
                crate::network::HyperedgeKind::Long => return false,
            },
            _ => {}
        }
    }
    for key in b.hyper.keys() {
        if key.iter().all(|x| shared.contains(x)) && !a.hyper.contains_key(key) {
            match a.classify_hyperedge(s, key) {
                crate::network::HyperedgeKind::Short => {
                    if b.hyper[key] != HyperLabel::Lambda {
                        return false;
                    }
                }
                crate::network::HyperedgeKind::Long => return false,
            }
        }
    }
    true
}

/// All legal demands over the played list.
pub fn legal_demands(
    s: &CaAtomStructure,
    played: &[Hypernetwork],
    m: usize,
) -> Vec<HyperDemand> {
    let dim = s.dim();
    let mut out = Vec::new();
    for (ni, h) in played.iter().enumerate() {
        let net = &h.core;
        let count = net.nodes().pow(dim as u32);
        for r in 0..count {
            let face = net.unrank(r);
            let label = net.label_at(r);
            for i in 0..dim {
                for a in 0..s.atom_count() {
                    if s.related(i, label, a) {
                        out.push(HyperDemand::Cyl { net: ni, face: face.clone(), i, a });
                    }
                }
            }
        }
        // Transformations: all maps from initial segments of size <= m into
        // the network's nodes.
        let n = net.nodes();
        for len in 1..=m.min(n + 1) {
            let total = n.pow(len as u32);
            if total > 4096 {
                break;
            }
            for code in 0..total {
                let mut theta = Vec::with_capacity(len);
                let mut c = code;
                for _ in 0..len {
                    theta.push(c % n);
                    c /= n;
                }
                out.push(HyperDemand::Transform { net: ni, theta });
            }
        }
    }
    for a in 0..played.len() {
        for b in 0..played.len() {
            if a != b && compatible_overlap(s, &played[a], &played[b]) {
                out.push(HyperDemand::Amalgam { left: a, right: b });
            }
        }
    }
    out.sort();
    out
}

/// Responses of the existential player.
pub fn exists_responses(
    ctx: &CaContext<'_>,
    variant: GameVariant,
    m: usize,
    played: &[Hypernetwork],
    d: &HyperDemand,
    budget: &SolveBudget,
) -> Result<Vec<Hypernetwork>, AlgebraError> {
    let s = ctx.s;
    match d {
        HyperDemand::Atom(atom) => Ok(networks_for_atom(ctx, *atom, budget.max_responses)?
            .into_iter()
            .map(Hypernetwork::new)
            .collect()),
        HyperDemand::Cyl { net, face, i, a } => {
            let h = &played[*net];
            let core_responses = crate::games::ca_game::exists_responses(
                ctx,
                variant,
                m,
                &h.core,
                &crate::games::ca_game::CaDemand::Cyl { face: face.clone(), i: *i, a: *a, target: None },
                budget,
            )?;
            Ok(core_responses
                .into_iter()
                .map(|core| {
                    let mut out = Hypernetwork::new(core);
                    // Inherited explicit labels on keys whose nodes survive.
                    for (key, l) in &h.hyper {
                        if key.iter().all(|&x| x < out.core.nodes()) {
                            out.set_label(s, key, *l);
                        }
                    }
                    out
                })
                .collect())
        }
        HyperDemand::Transform { net, theta } => {
            let h = &played[*net];
            let map: BTreeMap<usize, usize> =
                theta.iter().enumerate().map(|(k, &v)| (k, v)).collect();
            Ok(vec![h.apply_map(s, &map)?])
        }
        HyperDemand::Amalgam { left, right } => {
            let a = &played[*left];
            let b = &played[*right];
            let nodes = a.core.nodes().max(b.core.nodes());
            if nodes > m {
                return Ok(Vec::new());
            }
            let dim = s.dim();
            let count = nodes.pow(dim as u32);
            let probe = AtomicNetwork::from_labels(nodes, dim, vec![0; count]);
            let mut partial: Vec<Option<u16>> = vec![None; count];
            for r in 0..count {
                let t = probe.unrank(r);
                if t.iter().all(|&x| x < a.core.nodes()) {
                    partial[r] = Some(a.core.label(&t) as u16);
                }
                if t.iter().all(|&x| x < b.core.nodes()) {
                    let lb = b.core.label(&t) as u16;
                    if let Some(la) = partial[r] {
                        if la != lb {
                            return Ok(Vec::new());
                        }
                    }
                    partial[r] = Some(lb);
                }
            }
            let cores = enumerate_completions(ctx, nodes, &partial, budget.max_responses)?;
            Ok(cores
                .into_iter()
                .map(|core| {
                    let mut out = Hypernetwork::new(core);
                    for (key, l) in a.hyper.iter().chain(b.hyper.iter()) {
                        if key.iter().all(|&x| x < out.core.nodes()) {
                            out.set_label(s, key, *l);
                        }
                    }
                    out
                })
                .filter(|h| h.is_lambda_neat(s))
                .collect())
        }
    }
}

/// Exact minimax over the played multiset. Exponential; tiny budgets only.
pub fn solve(
    s: &CaAtomStructure,
    variant: GameVariant,
    m: usize,
    k: u32,
    budget: &SolveBudget,
) -> SolveResult<HyperDemand> {
    if k == 0 {
        return SolveResult {
            verdict: Verdict::ExistsWins,
            certificate: None,
            notes: vec!["zero rounds".into()],
        };
    }
    let ctx = CaContext::new(s);
    let mut memo: HashMap<(BTreeSet<Vec<u64>>, u32), bool> = HashMap::new();
    let mut positions = 0usize;

    fn rec(
        ctx: &CaContext<'_>,
        variant: GameVariant,
        m: usize,
        played: &[Hypernetwork],
        rounds: u32,
        memo: &mut HashMap<(BTreeSet<Vec<u64>>, u32), bool>,
        positions: &mut usize,
        budget: &SolveBudget,
    ) -> Result<bool, AlgebraError> {
        if rounds == 0 {
            return Ok(true);
        }
        let s = ctx.s;
        let key: BTreeSet<Vec<u64>> = played.iter().map(|h| hyper_key(s, h)).collect();
        if let Some(&v) = memo.get(&(key.clone(), rounds)) {
            return Ok(v);
        }
        *positions += 1;
        if *positions > budget.max_positions {
            return Err(AlgebraError::BudgetExceeded {
                what: "hyper solver positions".into(),
                limit: budget.max_positions,
            });
        }
        let mut result = true;
        for d in legal_demands(s, played, m) {
            let responses = exists_responses(ctx, variant, m, played, &d, budget)?;
            let mut survives = false;
            for r in responses {
                let mut next = played.to_vec();
                next.push(r);
                if rec(ctx, variant, m, &next, rounds - 1, memo, positions, budget)? {
                    survives = true;
                    break;
                }
            }
            if !survives {
                result = false;
                break;
            }
        }
        memo.insert((key, rounds), result);
        Ok(result)
    }

    for atom in 0..s.atom_count() {
        let inits = match exists_responses(&ctx, variant, m, &[], &HyperDemand::Atom(atom), budget)
        {
            Ok(v) => v,
            Err(e) => return SolveResult::unknown(format!("initial networks: {e}")),
        };
        let mut survives = false;
        for h in inits {
            match rec(&ctx, variant, m, &[h], k - 1, &mut memo, &mut positions, budget) {
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
