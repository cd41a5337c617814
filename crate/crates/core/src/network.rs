//! Atomic networks over atom structures, and hypernetworks.
//!
//! An edge network (relation-algebra case) labels ordered node pairs with
//! atoms, coherently with converse, identity on the diagonal, and triangle
//! consistency. An atomic network (cylindric case) labels every dim-tuple of
//! nodes with an atom such that (i) a label lies below d_ij iff the tuple
//! repeats at i, j and (ii) tuples that agree off i carry c_i-related labels.

use crate::atomset::AtomSet;
use crate::ca::{CaAtomStructure, CylRelation};
use crate::error::AlgebraError;
use crate::ra::RaAtomStructure;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// Edge networks (relation-algebra boards)
// ---------------------------------------------------------------------------

/// A complete edge-labelled network over a relation-algebra atom structure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct EdgeNetwork {
    nodes: usize,
    /// labels[x * nodes + y] = atom index of the edge x -> y.
    labels: Vec<u16>,
}

impl EdgeNetwork {
    /// Initial network realizing a single atom: one node when `atom` is an
    /// identity atom, otherwise two nodes with the given edge label.
    pub fn for_atom(s: &RaAtomStructure, atom: usize, identity_atom: usize) -> Result<Self, AlgebraError> {
        if !s.is_identity_atom(identity_atom) {
            return Err(AlgebraError::InvalidStructure(format!(
                "atom {identity_atom} is not an identity atom"
            )));
        }
        if s.is_identity_atom(atom) {
            Ok(EdgeNetwork { nodes: 1, labels: vec![atom as u16] })
        } else {
            let conv = s.converse_atom(atom);
            Ok(EdgeNetwork {
                nodes: 2,
                labels: vec![
                    identity_atom as u16,
                    atom as u16,
                    conv as u16,
                    identity_atom as u16,
                ],
            })
        }
    }

    pub fn from_labels(nodes: usize, labels: Vec<u16>) -> Self {
        assert_eq!(labels.len(), nodes * nodes);
        EdgeNetwork { nodes, labels }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn label(&self, x: usize, y: usize) -> usize {
        self.labels[x * self.nodes + y] as usize
    }

    /// Set the label x -> y and its converse mirror y -> x.
    pub fn set_label(&mut self, s: &RaAtomStructure, x: usize, y: usize, atom: usize) {
        self.labels[x * self.nodes + y] = atom as u16;
        if x != y {
            self.labels[y * self.nodes + x] = s.converse_atom(atom) as u16;
        }
    }

    /// Set one directed slot without touching the mirror; used by search
    /// code that tracks unset slots with a sentinel value.
    pub fn set_raw(&mut self, x: usize, y: usize, v: u16) {
        self.labels[x * self.nodes + y] = v;
    }

    /// Grow by one fresh node with unset (placeholder) labels; the caller
    /// must assign all new edges before consistency checks.
    pub fn grown(&self) -> (EdgeNetwork, usize) {
        let n = self.nodes + 1;
        let mut labels = vec![u16::MAX; n * n];
        for x in 0..self.nodes {
            for y in 0..self.nodes {
                labels[x * n + y] = self.labels[x * self.nodes + y];
            }
        }
        (EdgeNetwork { nodes: n, labels }, n - 1)
    }

    /// First violation of network consistency, if any.
    pub fn violation(&self, s: &RaAtomStructure) -> Option<String> {
        let n = self.nodes;
        for x in 0..n {
            if !s.is_identity_atom(self.label(x, x)) {
                return Some(format!("node {x} has non-identity self label"));
            }
            for y in 0..n {
                if s.converse_atom(self.label(x, y)) != self.label(y, x) {
                    return Some(format!("edge ({x},{y}) breaks converse coherence"));
                }
                if x != y && s.is_identity_atom(self.label(x, y)) {
                    return Some(format!("edge ({x},{y}) carries an identity atom"));
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (a, b, c) = (self.label(x, y), self.label(y, z), self.label(x, z));
                    if !s.consistent(a, b, c) {
                        return Some(format!("triangle ({x},{y},{z}) labels ({a},{b},{c}) forbidden"));
                    }
                }
            }
        }
        None
    }

    pub fn is_consistent(&self, s: &RaAtomStructure) -> bool {
        self.violation(s).is_none()
    }

    /// Node equivalence classes: singletons here, since nodes with an
    /// identity edge between them would violate consistency. Provided for
    /// hyperedge classification symmetry with the cylindric case.
    pub fn node_class(&self, x: usize) -> usize {
        x
    }
}

// ---------------------------------------------------------------------------
// Atomic networks (cylindric boards)
// ---------------------------------------------------------------------------

/// A complete atomic network over a cylindric atom structure.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct AtomicNetwork {
    nodes: usize,
    dim: usize,
    /// labels[rank(tuple)] with rank = big-endian positional encoding.
    labels: Vec<u16>,
}

impl AtomicNetwork {
    pub fn from_labels(nodes: usize, dim: usize, labels: Vec<u16>) -> Self {
        assert_eq!(labels.len(), nodes.pow(dim as u32));
        AtomicNetwork { nodes, dim, labels }
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self, tuple: &[usize]) -> usize {
        debug_assert_eq!(tuple.len(), self.dim);
        tuple.iter().fold(0, |acc, &x| acc * self.nodes + x)
    }

    pub fn unrank(&self, mut r: usize) -> Vec<usize> {
        let mut t = vec![0; self.dim];
        for k in (0..self.dim).rev() {
            t[k] = r % self.nodes;
            r /= self.nodes;
        }
        t
    }

    pub fn label(&self, tuple: &[usize]) -> usize {
        self.labels[self.rank(tuple)] as usize
    }

    pub fn label_at(&self, rank: usize) -> usize {
        self.labels[rank] as usize
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    /// First violation of the two network conditions, if any.
    pub fn violation(&self, s: &CaAtomStructure) -> Option<String> {
        let count = self.labels.len();
        for r in 0..count {
            let t = self.unrank(r);
            let a = self.labels[r] as usize;
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let below = s.diagonal(i, j).contains(a);
                    if below != (t[i] == t[j]) {
                        return Some(format!(
                            "tuple {t:?} label {a} disagrees with d_{i}{j} membership"
                        ));
                    }
                }
            }
            for i in 0..self.dim {
                for w in 0..self.nodes {
                    if w == t[i] {
                        continue;
                    }
                    let mut t2 = t.clone();
                    t2[i] = w;
                    let b = self.label(&t2);
                    if !s.related(i, a, b) {
                        return Some(format!(
                            "tuples {t:?} and {t2:?} are not c_{i}-related"
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn is_consistent(&self, s: &CaAtomStructure) -> bool {
        self.violation(s).is_none()
    }

    /// Node equivalence ~: x ~ y iff some tuple starting (x, y, ...) is
    /// labelled below d_01.
    pub fn nodes_equivalent(&self, s: &CaAtomStructure, x: usize, y: usize) -> bool {
        let mut t = vec![0; self.dim];
        t[0] = x;
        t[1] = y;
        self.any_completion_below_d01(s, &mut t, 2)
    }

    fn any_completion_below_d01(&self, s: &CaAtomStructure, t: &mut Vec<usize>, k: usize) -> bool {
        if k == self.dim {
            return s.diagonal(0, 1).contains(self.label(t));
        }
        for w in 0..self.nodes {
            t[k] = w;
            if self.any_completion_below_d01(s, t, k + 1) {
                return true;
            }
        }
        false
    }

    /// Whether every z-completion agrees with `nodes_equivalent` (the "for
    /// some, equivalently for all" reading); used by tests.
    pub fn nodes_equivalent_all(&self, s: &CaAtomStructure, x: usize, y: usize) -> bool {
        let mut t = vec![0; self.dim];
        t[0] = x;
        t[1] = y;
        self.all_completions_below_d01(s, &mut t, 2)
    }

    fn all_completions_below_d01(&self, s: &CaAtomStructure, t: &mut Vec<usize>, k: usize) -> bool {
        if k == self.dim {
            return s.diagonal(0, 1).contains(self.label(t));
        }
        for w in 0..self.nodes {
            t[k] = w;
            if !self.all_completions_below_d01(s, t, k + 1) {
                return false;
            }
        }
        true
    }

    /// ~-class representative (least equivalent node) per node.
    pub fn class_reps(&self, s: &CaAtomStructure) -> Vec<usize> {
        let mut reps = vec![usize::MAX; self.nodes];
        for x in 0..self.nodes {
            for y in 0..=x {
                if self.nodes_equivalent(s, y, x) {
                    reps[x] = y;
                    break;
                }
            }
        }
        reps
    }
}

// ---------------------------------------------------------------------------
// Completion enumeration (the exists player's response search)
// ---------------------------------------------------------------------------

/// Precomputed lookup tables for completion search over one structure.
pub struct CaContext<'a> {
    pub s: &'a CaAtomStructure,
    /// For partition relations: class member lists per dimension.
    class_members: Vec<Option<Vec<Vec<u16>>>>,
    /// For partition relations: class member bitsets per dimension.
    class_sets: Vec<Option<Vec<AtomSet>>>,
    /// For explicit relations: cache of {b : a c_i b and b c_i a} per (i, a).
    sym_cache: std::cell::RefCell<BTreeMap<(usize, usize), AtomSet>>,
    /// Allowed atoms per diagonal pattern (pattern[i*dim+j] = coords equal).
    pattern_cache: std::cell::RefCell<BTreeMap<Vec<bool>, AtomSet>>,
}

impl<'a> CaContext<'a> {
    pub fn new(s: &'a CaAtomStructure) -> Self {
        let n = s.atom_count();
        let mut class_members = Vec::new();
        let mut class_sets = Vec::new();
        for i in 0..s.dim() {
            match s.cyl_relation(i) {
                CylRelation::Partition(p) => {
                    let classes = p.iter().copied().max().map(|m| m as usize + 1).unwrap_or(0);
                    let mut members = vec![Vec::new(); classes];
                    for a in 0..n {
                        members[p[a] as usize].push(a as u16);
                    }
                    let sets = members
                        .iter()
                        .map(|m| AtomSet::from_iter(n, m.iter().map(|&a| a as usize)))
                        .collect();
                    class_members.push(Some(members));
                    class_sets.push(Some(sets));
                }
                CylRelation::Explicit(_) => {
                    class_members.push(None);
                    class_sets.push(None);
                }
            }
        }
        CaContext {
            s,
            class_members,
            class_sets,
            sym_cache: Default::default(),
            pattern_cache: Default::default(),
        }
    }

    /// Atoms b with both a c_i b and b c_i a: the legal labels for a tuple
    /// that agrees with an a-labelled tuple everywhere off coordinate i.
    fn sym_related(&self, i: usize, a: usize) -> AtomSet {
        if let (Some(sets), CylRelation::Partition(p)) =
            (&self.class_sets[i], self.s.cyl_relation(i))
        {
            return sets[p[a] as usize].clone();
        }
        if let Some(cached) = self.sym_cache.borrow().get(&(i, a)) {
            return cached.clone();
        }
        let n = self.s.atom_count();
        let set = AtomSet::from_iter(
            n,
            (0..n).filter(|&b| self.s.related(i, a, b) && self.s.related(i, b, a)),
        );
        self.sym_cache.borrow_mut().insert((i, a), set.clone());
        set
    }

    /// Atoms in the c_i-class of `a` (partition relations only).
    pub fn class_of(&self, i: usize, a: usize) -> Option<&[u16]> {
        match (&self.class_members[i], self.s.cyl_relation(i)) {
            (Some(members), CylRelation::Partition(p)) => {
                Some(&members[p[a] as usize])
            }
            _ => None,
        }
    }

    fn pattern_allowed(&self, tuple: &[usize]) -> AtomSet {
        let dim = self.s.dim();
        let key: Vec<bool> = (0..dim)
            .flat_map(|i| (0..dim).map(move |j| tuple[i] == tuple[j]))
            .collect();
        if let Some(cached) = self.pattern_cache.borrow().get(&key) {
            return cached.clone();
        }
        let n = self.s.atom_count();
        let mut allowed = AtomSet::full(n);
        for i in 0..dim {
            for j in 0..dim {
                if tuple[i] == tuple[j] {
                    allowed = allowed.intersect(self.s.diagonal(i, j));
                } else {
                    allowed = allowed.minus(self.s.diagonal(i, j));
                }
            }
        }
        self.pattern_cache.borrow_mut().insert(key, allowed.clone());
        allowed
    }
}

/// Enumerate all consistent total labelings extending `partial` (entries
/// `None` are free), up to `limit` solutions. Errors with `BudgetExceeded`
/// when more than `limit` solutions exist or the search visits too many
/// nodes.
pub fn enumerate_completions(
    ctx: &CaContext<'_>,
    nodes: usize,
    partial: &[Option<u16>],
    limit: usize,
) -> Result<Vec<AtomicNetwork>, AlgebraError> {
    let s = ctx.s;
    let dim = s.dim();
    let count = nodes.pow(dim as u32);
    assert_eq!(partial.len(), count);
    let probe = AtomicNetwork::from_labels(nodes, dim, vec![0; count]);

    // Neighbour lists: tuples reachable by changing one coordinate, with the
    // coordinate that moved (needed to pick the right c_i relation).
    let mut neighbours: Vec<Vec<(usize, usize)>> = vec![Vec::new(); count];
    for r in 0..count {
        let t = probe.unrank(r);
        for i in 0..dim {
            for w in 0..nodes {
                if w == t[i] {
                    continue;
                }
                let mut t2 = t.clone();
                t2[i] = w;
                neighbours[r].push((i, probe.rank(&t2)));
            }
        }
    }

    // Forward-checked domains: every free tuple starts from its diagonal
    // pattern and is narrowed by each fixed neighbour.
    let mut domains: Vec<Option<AtomSet>> = Vec::with_capacity(count);
    for r in 0..count {
        if partial[r].is_some() {
            domains.push(None);
        } else {
            domains.push(Some(ctx.pattern_allowed(&probe.unrank(r))));
        }
    }
    for r in 0..count {
        let Some(a) = partial[r] else { continue };
        if !ctx.pattern_allowed(&probe.unrank(r)).contains(a as usize) {
            return Ok(Vec::new());
        }
        for &(i, r2) in &neighbours[r] {
            match (&mut domains[r2], partial[r2]) {
                (Some(dom), _) => {
                    *dom = dom.intersect(&ctx.sym_related(i, a as usize));
                    if dom.is_empty() {
                        return Ok(Vec::new());
                    }
                }
                (None, Some(b)) => {
                    if !s.related(i, a as usize, b as usize)
                        || !s.related(i, b as usize, a as usize)
                    {
                        return Ok(Vec::new());
                    }
                }
                (None, None) => unreachable!(),
            }
        }
    }

    let mut labels: Vec<u16> = partial.iter().map(|p| p.unwrap_or(u16::MAX)).collect();
    let mut out = Vec::new();
    let mut visited: usize = 0;
    let node_budget = limit.saturating_mul(4096).max(1 << 22);
    search(
        ctx, &probe, nodes, &neighbours, &mut domains, &mut labels, &mut out, limit, &mut visited,
        node_budget,
    )?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn search(
    ctx: &CaContext<'_>,
    probe: &AtomicNetwork,
    nodes: usize,
    neighbours: &[Vec<(usize, usize)>],
    domains: &mut Vec<Option<AtomSet>>,
    labels: &mut Vec<u16>,
    out: &mut Vec<AtomicNetwork>,
    limit: usize,
    visited: &mut usize,
    node_budget: usize,
) -> Result<(), AlgebraError> {
    // Most-constrained free tuple first; ties broken by rank so the
    // enumeration order is deterministic.
    let mut pick: Option<(usize, usize)> = None;
    for (r, dom) in domains.iter().enumerate() {
        if let Some(dom) = dom {
            let size = dom.len();
            if pick.map_or(true, |(_, best)| size < best) {
                pick = Some((r, size));
            }
        }
    }
    let Some((r, _)) = pick else {
        out.push(AtomicNetwork::from_labels(nodes, probe.dim(), labels.clone()));
        if out.len() > limit {
            return Err(AlgebraError::BudgetExceeded {
                what: "completion enumeration".into(),
                limit,
            });
        }
        return Ok(());
    };
    *visited += 1;
    if *visited > node_budget {
        return Err(AlgebraError::BudgetExceeded {
            what: "completion search nodes".into(),
            limit: node_budget,
        });
    }
    let my_domain = domains[r].take().expect("picked tuple has a domain");
    'cand: for a in my_domain.iter() {
        // Narrow each free neighbour's domain; restore on backtrack.
        let mut saved: Vec<(usize, AtomSet)> = Vec::new();
        for &(i, r2) in &neighbours[r] {
            if let Some(dom) = &mut domains[r2] {
                let narrowed = dom.intersect(&ctx.sym_related(i, a));
                if narrowed.is_empty() {
                    for (rs, old) in saved {
                        domains[rs] = Some(old);
                    }
                    continue 'cand;
                }
                saved.push((r2, std::mem::replace(dom, narrowed)));
            }
        }
        labels[r] = a as u16;
        let res = search(
            ctx, probe, nodes, neighbours, domains, labels, out, limit, visited, node_budget,
        );
        labels[r] = u16::MAX;
        for (rs, old) in saved {
            domains[rs] = Some(old);
        }
        res?;
    }
    domains[r] = Some(my_domain);
    Ok(())
}

/// All consistent initial networks realizing `atom`: node count is the
/// number of coordinate classes forced by the diagonals, the base tuple is
/// fixed, and the rest is completed by search.
pub fn networks_for_atom(
    ctx: &CaContext<'_>,
    atom: usize,
    limit: usize,
) -> Result<Vec<AtomicNetwork>, AlgebraError> {
    let s = ctx.s;
    let dim = s.dim();
    // Coordinate classes from diagonal membership.
    let mut class = vec![usize::MAX; dim];
    let mut next = 0;
    for i in 0..dim {
        if class[i] != usize::MAX {
            continue;
        }
        class[i] = next;
        for j in (i + 1)..dim {
            if s.diagonal(i, j).contains(atom) {
                class[j] = next;
            }
        }
        next += 1;
    }
    let nodes = next;
    let count = nodes.pow(dim as u32);
    let probe = AtomicNetwork::from_labels(nodes, dim, vec![0; count]);
    let mut partial = vec![None; count];
    partial[probe.rank(&class)] = Some(atom as u16);
    enumerate_completions(ctx, nodes, &partial, limit)
}

// ---------------------------------------------------------------------------
// Hypernetworks
// ---------------------------------------------------------------------------

/// Label of a hyperedge: the constant label or a free symbol.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum HyperLabel {
    /// The designated constant lambda.
    Lambda,
    /// A non-constant label, canonicalized by first occurrence.
    Free(u64),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum HyperedgeKind {
    Short,
    Long,
}

/// A hypernetwork over a cylindric board: an atomic network plus labels on
/// finite node sequences, invariant under the node equivalence ~ (enforced
/// by keying on ~-class representatives).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hypernetwork {
    pub core: AtomicNetwork,
    /// Keyed by the sequence of ~-class representatives.
    pub hyper: BTreeMap<Vec<usize>, HyperLabel>,
}

impl Hypernetwork {
    pub fn new(core: AtomicNetwork) -> Self {
        Hypernetwork { core, hyper: BTreeMap::new() }
    }

    /// Canonical key of a hyperedge under ~-invariance.
    pub fn edge_key(&self, s: &CaAtomStructure, edge: &[usize]) -> Vec<usize> {
        let reps = self.core.class_reps(s);
        edge.iter().map(|&x| reps[x]).collect()
    }

    pub fn label(&self, s: &CaAtomStructure, edge: &[usize]) -> Option<HyperLabel> {
        self.hyper.get(&self.edge_key(s, edge)).copied()
    }

    pub fn set_label(&mut self, s: &CaAtomStructure, edge: &[usize], l: HyperLabel) {
        let key = self.edge_key(s, edge);
        self.hyper.insert(key, l);
    }

    /// A hyperedge is short when its coordinates touch at most dim many
    /// ~-classes (then dim witness nodes diagonal-linked to every coordinate
    /// exist); otherwise it is long.
    pub fn classify_hyperedge(&self, s: &CaAtomStructure, edge: &[usize]) -> HyperedgeKind {
        let reps = self.core.class_reps(s);
        let classes: std::collections::BTreeSet<usize> =
            edge.iter().map(|&x| reps[x]).collect();
        if classes.len() <= s.dim() {
            HyperedgeKind::Short
        } else {
            HyperedgeKind::Long
        }
    }

    /// Whether every short labelled hyperedge carries the constant label.
    pub fn is_lambda_neat(&self, s: &CaAtomStructure) -> bool {
        self.hyper.iter().all(|(key, l)| {
            match self.classify_hyperedge(s, key) {
                HyperedgeKind::Short => *l == HyperLabel::Lambda,
                HyperedgeKind::Long => true,
            }
        })
    }

    /// The transformed hypernetwork N theta: node x of the result behaves
    /// like node theta(x) of N. `theta` must map the result's nodes into
    /// N's nodes and be surjective onto a support of N.
    pub fn apply_map(&self, s: &CaAtomStructure, theta: &BTreeMap<usize, usize>) -> Result<Hypernetwork, AlgebraError> {
        let new_nodes = theta.keys().copied().max().map(|m| m + 1).unwrap_or(0);
        if theta.len() != new_nodes {
            return Err(AlgebraError::InvalidStructure(
                "transformation domain must be an initial segment of node names".into(),
            ));
        }
        for &v in theta.values() {
            if v >= self.core.nodes() {
                return Err(AlgebraError::InvalidStructure(
                    "transformation maps outside the network".into(),
                ));
            }
        }
        let dim = self.core.dim();
        let count = new_nodes.pow(dim as u32);
        let probe = AtomicNetwork::from_labels(new_nodes, dim, vec![0; count.max(1)]);
        let mut labels = vec![0u16; count];
        for r in 0..count {
            let t = probe.unrank(r);
            let mapped: Vec<usize> = t.iter().map(|&x| theta[&x]).collect();
            labels[r] = self.core.label(&mapped) as u16;
        }
        let core = AtomicNetwork::from_labels(new_nodes, dim, labels);
        let mut out = Hypernetwork::new(core);
        // Transport hyperedge labels along theta.
        let keys: Vec<Vec<usize>> = self.hyper.keys().cloned().collect();
        let reps = out.core.class_reps(s);
        let _ = reps;
        let mut inverse: BTreeMap<usize, usize> = BTreeMap::new();
        for (&x, &v) in theta {
            inverse.entry(v).or_insert(x);
        }
        for key in keys {
            if let Some(mapped_key) = key
                .iter()
                .map(|x| inverse.get(x).copied())
                .collect::<Option<Vec<usize>>>()
            {
                let l = self.hyper[&key];
                out.set_label(s, &mapped_key, l);
            }
        }
        Ok(out)
    }
}
