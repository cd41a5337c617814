//! Canonical forms of networks up to node renaming.
//!
//! The canonical key of a network is the lexicographically least label
//! vector over all node permutations. To keep this cheap, nodes are first
//! split by iterated colour refinement; only permutations respecting the
//! refined colour classes are enumerated, which is exact because nodes in
//! different classes can never be exchanged by an automorphism-compatible
//! relabelling that produces the same key... candidates from different
//! classes produce different sorted signatures, so the least vector is
//! attained within class-respecting permutations of some ordering of the
//! classes; classes are ordered by their (canonical) colour signatures.

use crate::error::AlgebraError;
use crate::network::{AtomicNetwork, EdgeNetwork, HyperLabel, Hypernetwork};
use std::collections::BTreeMap;

/// Maximum number of class-respecting permutations tried.
const PERM_BUDGET: usize = 40_320;

/// A canonical key: node count plus the minimal relabelled label vector,
/// plus (for hypernetworks) the relabelled hyperedge map.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonKey {
    pub nodes: usize,
    pub labels: Vec<u16>,
    pub hyper: Vec<(Vec<u16>, HyperLabel)>,
}

// ---------------------------------------------------------------------------
// Colour refinement
// ---------------------------------------------------------------------------

/// Iterated refinement: start from per-node local signatures and refine by
/// neighbourhood colour multisets until stable. `sig` computes a node's
/// signature given current colours. Returns stable colours (dense ids
/// ordered by signature history).
fn refine<F>(nodes: usize, mut sig: F) -> Vec<usize>
where
    F: FnMut(usize, &[usize]) -> Vec<u64>,
{
    let mut colours = vec![0usize; nodes];
    loop {
        let mut keyed: Vec<(Vec<u64>, usize)> = (0..nodes)
            .map(|x| {
                let mut k = sig(x, &colours);
                k.insert(0, colours[x] as u64);
                (k, x)
            })
            .collect();
        keyed.sort();
        let mut next = vec![0usize; nodes];
        let mut c = 0usize;
        for w in 0..keyed.len() {
            if w > 0 && keyed[w].0 != keyed[w - 1].0 {
                c += 1;
            }
            next[keyed[w].1] = c;
        }
        if next == colours {
            return colours;
        }
        colours = next;
    }
}

/// Enumerate class-respecting permutations and fold the minimal key.
/// `classes[c]` lists the nodes of colour c, classes in canonical order.
fn minimise<K: Ord + Clone>(
    classes: &[Vec<usize>],
    nodes: usize,
    eval: &mut dyn FnMut(&[usize]) -> K,
) -> Result<K, AlgebraError> {
    let total: usize = classes
        .iter()
        .map(|c| (1..=c.len()).product::<usize>())
        .try_fold(1usize, |a, f: usize| a.checked_mul(f))
        .ok_or(AlgebraError::BudgetExceeded { what: "canonical permutations".into(), limit: PERM_BUDGET })?;
    if total > PERM_BUDGET {
        return Err(AlgebraError::BudgetExceeded {
            what: "canonical permutations".into(),
            limit: PERM_BUDGET,
        });
    }
    // perm[old_node] = new name; names assigned class by class.
    let mut perm = vec![usize::MAX; nodes];
    let mut best: Option<K> = None;
    fn rec<K: Ord + Clone>(
        classes: &[Vec<usize>],
        ci: usize,
        base: usize,
        _used: &mut Vec<bool>,
        perm: &mut Vec<usize>,
        eval: &mut dyn FnMut(&[usize]) -> K,
        best: &mut Option<K>,
    ) {
        if ci == classes.len() {
            let k = eval(perm);
            if best.as_ref().map_or(true, |b| k < *b) {
                *best = Some(k);
            }
            return;
        }
        let cell = &classes[ci];
        // assign new names base..base+cell.len() to cell members in every order
        fn assign<K: Ord + Clone>(
            cell: &[usize],
            slot: usize,
            base: usize,
            used: &mut Vec<bool>,
            perm: &mut Vec<usize>,
            classes: &[Vec<usize>],
            ci: usize,
            eval: &mut dyn FnMut(&[usize]) -> K,
            best: &mut Option<K>,
        ) {
            if slot == cell.len() {
                rec(classes, ci + 1, base + cell.len(), used, perm, eval, best);
                return;
            }
            for (idx, &x) in cell.iter().enumerate() {
                if used[idx] {
                    continue;
                }
                used[idx] = true;
                perm[x] = base + slot;
                assign(cell, slot + 1, base, used, perm, classes, ci, eval, best);
                perm[x] = usize::MAX;
                used[idx] = false;
            }
        }
        let mut used = vec![false; cell.len()];
        assign(cell, 0, base, &mut used, perm, classes, ci, eval, best);
        let _ = used;
    }
    rec(classes, 0, 0, &mut vec![], &mut perm, eval, &mut best);
    best.ok_or(AlgebraError::InvalidStructure("empty permutation search".into()))
}

/// Group nodes into colour classes ordered by a canonical class signature.
fn classes_of<F>(nodes: usize, colours: &[usize], class_sig: F) -> Vec<Vec<usize>>
where
    F: Fn(usize) -> Vec<u64>,
{
    let mut by_colour: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for x in 0..nodes {
        by_colour.entry(colours[x]).or_default().push(x);
    }
    let mut cells: Vec<(Vec<u64>, Vec<usize>)> = by_colour
        .into_values()
        .map(|cell| (class_sig(cell[0]), cell))
        .collect();
    cells.sort();
    cells.into_iter().map(|(_, c)| c).collect()
}

// ---------------------------------------------------------------------------
// Edge networks
// ---------------------------------------------------------------------------

pub fn canonical_edge(net: &EdgeNetwork) -> Result<CanonKey, AlgebraError> {
    let n = net.nodes();
    let colours = refine(n, |x, cols| {
        let mut sig: Vec<u64> = (0..n)
            .filter(|&y| y != x)
            .map(|y| {
                (cols[y] as u64) << 32 | (net.label(x, y) as u64) << 16 | net.label(y, x) as u64
            })
            .collect();
        sig.sort();
        sig.insert(0, net.label(x, x) as u64);
        sig
    });
    let class_sig = |x: usize| {
        let mut sig: Vec<u64> = (0..n)
            .filter(|&y| y != x)
            .map(|y| {
                (colours[y] as u64) << 32
                    | (net.label(x, y) as u64) << 16
                    | net.label(y, x) as u64
            })
            .collect();
        sig.sort();
        sig.insert(0, net.label(x, x) as u64);
        sig
    };
    let classes = classes_of(n, &colours, class_sig);
    let labels = minimise(&classes, n, &mut |perm: &[usize]| {
        // inverse: node with new name k
        let mut inv = vec![0usize; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut v = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                v.push(net.label(inv[a], inv[b]) as u16);
            }
        }
        v
    })?;
    Ok(CanonKey { nodes: n, labels, hyper: Vec::new() })
}

// ---------------------------------------------------------------------------
// Atomic networks
// ---------------------------------------------------------------------------

fn atomic_node_sig(net: &AtomicNetwork, x: usize, cols: &[usize]) -> Vec<u64> {
    let dim = net.dim();
    let count = net.nodes().pow(dim as u32);
    let mut sig: Vec<u64> = Vec::new();
    for r in 0..count {
        let t = net.unrank(r);
        if !t.contains(&x) {
            continue;
        }
        let mut h: u64 = 0;
        for &c in &t {
            let tag = if c == x { u32::MAX as u64 } else { cols[c] as u64 };
            h = h.wrapping_mul(0x100000001b3).wrapping_add(tag + 1);
        }
        h = h.wrapping_mul(0x100000001b3).wrapping_add(net.label_at(r) as u64);
        sig.push(h);
    }
    sig.sort();
    sig
}

pub fn canonical_atomic(net: &AtomicNetwork) -> Result<CanonKey, AlgebraError> {
    let n = net.nodes();
    let colours = refine(n, |x, cols| atomic_node_sig(net, x, cols));
    let class_sig = |x: usize| atomic_node_sig(net, x, &colours);
    let classes = classes_of(n, &colours, class_sig);
    let dim = net.dim();
    let count = n.pow(dim as u32);
    let labels = minimise(&classes, n, &mut |perm: &[usize]| {
        let mut inv = vec![0usize; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut v = Vec::with_capacity(count);
        let mut t = vec![0usize; dim];
        for r in 0..count {
            let mut rr = r;
            for k in (0..dim).rev() {
                t[k] = inv[rr % n];
                rr /= n;
            }
            v.push(net.label(&t) as u16);
        }
        v
    })?;
    Ok(CanonKey { nodes: n, labels, hyper: Vec::new() })
}

// ---------------------------------------------------------------------------
// Hypernetworks
// ---------------------------------------------------------------------------

pub fn canonical_hyper(net: &Hypernetwork) -> Result<CanonKey, AlgebraError> {
    let core = &net.core;
    let n = core.nodes();
    // Include hyperedge incidence in the refinement signature.
    let hyper: Vec<(&Vec<usize>, HyperLabel)> =
        net.hyper.iter().map(|(k, &l)| (k, l)).collect();
    let colours = refine(n, |x, cols| {
        let mut sig = atomic_node_sig(core, x, cols);
        for (key, l) in &hyper {
            if !key.contains(&x) {
                continue;
            }
            let mut h: u64 = 0xbeef;
            for &c in key.iter() {
                let tag = if c == x { u32::MAX as u64 } else { cols[c] as u64 };
                h = h.wrapping_mul(0x100000001b3).wrapping_add(tag + 1);
            }
            h = h.wrapping_mul(31).wrapping_add(match l {
                HyperLabel::Lambda => 0,
                HyperLabel::Free(_) => 1,
            });
            sig.push(h);
        }
        sig.sort();
        sig
    });
    let class_sig = |x: usize| {
        let mut s = atomic_node_sig(core, x, &colours);
        s.insert(0, 0x517e);
        s
    };
    let classes = classes_of(n, &colours, class_sig);
    let dim = core.dim();
    let count = n.pow(dim as u32);
    let key = minimise(&classes, n, &mut |perm: &[usize]| {
        let mut inv = vec![0usize; n];
        for (old, &new) in perm.iter().enumerate() {
            inv[new] = old;
        }
        let mut v = Vec::with_capacity(count);
        let mut t = vec![0usize; dim];
        for r in 0..count {
            let mut rr = r;
            for k in (0..dim).rev() {
                t[k] = inv[rr % n];
                rr /= n;
            }
            v.push(core.label(&t) as u16);
        }
        // Relabel hyperedges; renumber Free labels by first occurrence in
        // sorted key order.
        let mut edges: Vec<(Vec<u16>, HyperLabel)> = net
            .hyper
            .iter()
            .map(|(k, &l)| (k.iter().map(|&x| perm[x] as u16).collect(), l))
            .collect();
        edges.sort();
        let mut rename: BTreeMap<u64, u64> = BTreeMap::new();
        for (_, l) in edges.iter_mut() {
            if let HyperLabel::Free(f) = l {
                let next = rename.len() as u64;
                let id = *rename.entry(*f).or_insert(next);
                *l = HyperLabel::Free(id);
            }
        }
        (v, edges)
    })?;
    Ok(CanonKey { nodes: n, labels: key.0, hyper: key.1 })
}
