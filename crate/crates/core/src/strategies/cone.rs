//! The universal player's scripted cone bombardment against the finite
//! rainbow structure: open with a cone over a full-shade white base, then
//! demand further cones with strictly new green tints over the same base.
//! With one more tint than there are red indices, the forced reds between
//! distinct-tint apexes cannot chain on the apex clique and the
//! existential player's response set empties.

use crate::atom::{CaAtomName, EdgeColour, GraphAtom, Shade};
use crate::ca::CaAtomStructure;
use crate::games::ca_game::{self, CaDemand};
use crate::games::{ForallCert, GameVariant, SolveBudget};
use crate::network::{networks_for_atom, AtomicNetwork, CaContext};
use crate::strategies::StrategyError;
use std::collections::BTreeMap;

/// The cone coloured graph: base edge (0,1) white full-shade, apex 2 with
/// a tinted green toward 0 and the plain apex green toward 1.
fn cone_graph(tint: i64) -> GraphAtom {
    let mut edges = BTreeMap::new();
    edges.insert((0u8, 1u8), EdgeColour::White(0, Shade::Full));
    edges.insert((0u8, 2u8), EdgeColour::Green(tint));
    edges.insert((1u8, 2u8), EdgeColour::TintGreen(1));
    GraphAtom { coord_class: vec![0, 1, 2], edges }
}

fn cone_atom(s: &CaAtomStructure, tint: i64) -> Result<usize, StrategyError> {
    s.atom_index(&CaAtomName::Graph(cone_graph(tint)))
        .ok_or_else(|| StrategyError::NoMatch(format!("no cone atom with tint {tint}")))
}

/// The scripted move stream: the opening cone atom followed by cylindrifier
/// demands for cones with tints 2, 3, ... over the same base, one per
/// round. The stream carries `tints` demands in total (opening included).
pub fn forall_cone_strategy(
    s: &CaAtomStructure,
    tints: i64,
) -> Result<Vec<CaDemand>, StrategyError> {
    if s.dim() != 3 {
        return Err(StrategyError::IllegalMove("cone script needs dimension 3".into()));
    }
    let mut out = vec![CaDemand::Atom(cone_atom(s, 1)?)];
    for t in 2..=tints {
        out.push(CaDemand::Cyl { face: vec![0, 1, 0], i: 2, a: cone_atom(s, t)?, target: None });
    }
    Ok(out)
}

/// Replay the cone script against the exhaustive response engine,
/// building a certificate: at every position the scripted demand is
/// played and every existential response is recursed into; a position
/// with no responses is a win leaf. Errors if the script runs out of
/// demands while responses remain.
pub fn replay_cone_strategy(
    s: &CaAtomStructure,
    m: usize,
    tints: i64,
    budget: &SolveBudget,
) -> Result<ForallCert<CaDemand>, StrategyError> {
    let script = forall_cone_strategy(s, tints)?;
    let ctx = CaContext::new(s);
    let CaDemand::Atom(atom) = script[0] else { unreachable!() };
    let inits = networks_for_atom(&ctx, atom, budget.max_responses)
        .map_err(|e| StrategyError::NoMatch(format!("opening networks: {e}")))?;
    if inits.is_empty() {
        return Err(StrategyError::NoMatch("opening atom has no networks".into()));
    }
    let mut children = Vec::new();
    for net in inits {
        let sub = replay_rec(&ctx, m, &script, 1, &net, budget)?;
        children.push((net_key(&net), sub));
    }
    Ok(ForallCert { demand: script[0].clone(), children })
}

fn net_key(net: &AtomicNetwork) -> Vec<u16> {
    match crate::canon::canonical_atomic(net) {
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

fn replay_rec(
    ctx: &CaContext<'_>,
    m: usize,
    script: &[CaDemand],
    step: usize,
    net: &AtomicNetwork,
    budget: &SolveBudget,
) -> Result<ForallCert<CaDemand>, StrategyError> {
    let Some(demand) = script.get(step) else {
        return Err(StrategyError::NoMatch(
            "script exhausted with the existential player still alive".into(),
        ));
    };
    let responses = ca_game::exists_responses(ctx, GameVariant::BoldG, m, net, demand, budget)
        .map_err(|e| StrategyError::NoMatch(format!("response enumeration: {e}")))?;
    let mut children = Vec::new();
    for r in responses {
        let sub = replay_rec(ctx, m, script, step + 1, &r, budget)?;
        children.push((net_key(&r), sub));
    }
    Ok(ForallCert { demand: demand.clone(), children })
}

/// A demand priority that tries cone demands with high tints first, so
/// the general solver walks the scripted attack before anything else.
pub fn cone_priority(s: &CaAtomStructure, _net: &AtomicNetwork, d: &CaDemand) -> i64 {
    match d {
        CaDemand::Cyl { a, target: None, face, i } if *i == 2 && face[..2] == [0, 1] => {
            if let CaAtomName::Graph(g) = s.name(*a) {
                if g.class_count() == 3 {
                    if let Some(EdgeColour::Green(t)) = g.edges.get(&(0, 2)).copied() {
                        if g.edges.get(&(1, 2)).copied() == Some(EdgeColour::TintGreen(1))
                            && g.edges.get(&(0, 1)).copied()
                                == Some(EdgeColour::White(0, Shade::Full))
                        {
                            return -t;
                        }
                    }
                }
            }
            0
        }
        _ => 0,
    }
}

/// An atom order that puts the opening cone atom first.
pub fn cone_atom_order(s: &CaAtomStructure) -> Vec<usize> {
    let mut order: Vec<usize> = (0..s.atom_count()).collect();
    if let Ok(first) = cone_atom(s, 1) {
        order.retain(|&a| a != first);
        order.insert(0, first);
    }
    order
}
