//! Ground-truth brute-force machinery: tiny-algebra enumeration,
//! representation search on small bases, and Ramsey colouring search.
//!
//! The census enumerates symmetric structures with a single identity atom;
//! structures with several identity atoms or non-symmetric converse are out
//! of census scope (documented budget restriction). Representation search
//! looks for complete atomic square representations and never claims
//! non-representability: `Exhausted` only says no representation exists on
//! the searched base sizes, and `Budget` says the search was cut short.

use crate::atom::AtomName;
use crate::axioms::check_ra_axioms;
use crate::error::AlgebraError;
use crate::ra::RaAtomStructure;
use std::collections::BTreeSet;

/// A candidate square representation: a base and an edge labelling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepresentationCandidate {
    pub base: usize,
    /// labels[x * base + y] = atom of the edge (x, y).
    pub labels: Vec<u16>,
}

/// Outcome of the representation search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepresentOutcome {
    /// A verified complete atomic square representation.
    Found(RepresentationCandidate),
    /// The full search space up to the base bound contains none.
    Exhausted,
    /// The search was cut off before completion; no conclusion.
    Budget,
}

/// All canonical triple multisets over `k` non-identity atoms (symmetric
/// structures close the Peircean transforms into plain permutations, so a
/// sorted triple is a canonical representative).
fn triple_multisets(k: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 1..=k {
        for b in a..=k {
            for c in b..=k {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Enumerate, up to isomorphism, the symmetric single-identity atom
/// structures with at most `max_atoms` atoms whose complex algebra passes
/// the axiom battery.
pub fn enumerate_small_ra(max_atoms: usize) -> Result<Vec<RaAtomStructure>, AlgebraError> {
    if max_atoms > 4 {
        return Err(AlgebraError::BudgetExceeded {
            what: "census atom bound".into(),
            limit: 4,
        });
    }
    let mut out = Vec::new();
    for total in 1..=max_atoms {
        let k = (total - 1) as u32; // non-identity atoms
        let multisets = triple_multisets(k);
        let m = multisets.len();
        let mut seen_canonical: BTreeSet<BTreeSet<[u32; 3]>> = BTreeSet::new();
        for mask in 0..(1u64 << m) {
            let forbidden: Vec<[u32; 3]> = (0..m)
                .filter(|&t| mask >> t & 1 == 1)
                .map(|t| multisets[t])
                .collect();
            // Canonical form under permutations of the non-identity atoms.
            let canon = canonical_forbidden(k, &forbidden);
            if !seen_canonical.insert(canon) {
                continue;
            }
            let mut names = vec![AtomName::Id];
            for i in 0..k {
                names.push(AtomName::Named(format!("a{i}")));
            }
            let converse: Vec<u32> = (0..total as u32).collect();
            let mut all_forbidden: Vec<[u32; 3]> = forbidden;
            for x in 0..total as u32 {
                for y in 0..total as u32 {
                    if x != y {
                        all_forbidden.push([0, x, y]);
                    }
                }
            }
            // Identity law on atoms also requires (x, x, Id) consistent for
            // every atom x; that holds because we never forbid triples
            // containing the identity except the (Id, x, y) family.
            let s = RaAtomStructure::new(names, [0usize], converse, all_forbidden)?;
            if check_ra_axioms(&s).passed {
                out.push(s);
            }
        }
    }
    Ok(out)
}

/// Least forbidden set over all permutations of the non-identity atoms.
fn canonical_forbidden(k: u32, forbidden: &[[u32; 3]]) -> BTreeSet<[u32; 3]> {
    let mut perm: Vec<u32> = (1..=k).collect();
    let mut best: Option<BTreeSet<[u32; 3]>> = None;
    permute(&mut perm, 0, &mut |p| {
        let mapped: BTreeSet<[u32; 3]> = forbidden
            .iter()
            .map(|t| {
                let mut m = [p[t[0] as usize - 1], p[t[1] as usize - 1], p[t[2] as usize - 1]];
                m.sort_unstable();
                m
            })
            .collect();
        if best.as_ref().map_or(true, |b| mapped < *b) {
            best = Some(mapped);
        }
    });
    best.unwrap_or_default()
}

fn permute(v: &mut Vec<u32>, k: usize, f: &mut impl FnMut(&[u32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}

/// Search for a complete atomic square representation on bases up to
/// `max_base`. `Found` results are re-verified before being returned.
pub fn brute_force_represent(
    s: &RaAtomStructure,
    max_base: usize,
    node_budget: usize,
) -> RepresentOutcome {
    if max_base > 8 {
        return RepresentOutcome::Budget;
    }
    let mut visited = 0usize;
    for base in 1..=max_base {
        match search_base(s, base, &mut visited, node_budget) {
            Some(cand) => {
                debug_assert!(verify_representation(s, &cand));
                return RepresentOutcome::Found(cand);
            }
            None => {
                if visited > node_budget {
                    return RepresentOutcome::Budget;
                }
            }
        }
    }
    RepresentOutcome::Exhausted
}

/// Whether `cand` is a complete atomic square representation of `s`:
/// consistent, saturated (every consistent triple over every edge has a
/// witness), and realizing every atom.
pub fn verify_representation(s: &RaAtomStructure, cand: &RepresentationCandidate) -> bool {
    let b = cand.base;
    let lab = |x: usize, y: usize| cand.labels[x * b + y] as usize;
    for x in 0..b {
        if !s.is_identity_atom(lab(x, x)) {
            return false;
        }
        for y in 0..b {
            if s.converse_atom(lab(x, y)) != lab(y, x) {
                return false;
            }
            if x != y && s.is_identity_atom(lab(x, y)) {
                return false;
            }
            for z in 0..b {
                if !s.consistent(lab(x, z), lab(z, y), lab(x, y)) {
                    return false;
                }
            }
        }
    }
    // Saturation: every consistent factorization of every edge is witnessed.
    let n = s.atom_count();
    for x in 0..b {
        for y in 0..b {
            for a in 0..n {
                for c in 0..n {
                    if !s.consistent(a, c, lab(x, y)) {
                        continue;
                    }
                    if !(0..b).any(|z| lab(x, z) == a && lab(z, y) == c) {
                        return false;
                    }
                }
            }
        }
    }
    // Every atom realized.
    for a in 0..n {
        if !(0..b).any(|x| (0..b).any(|y| lab(x, y) == a)) {
            return false;
        }
    }
    true
}

fn search_base(
    s: &RaAtomStructure,
    base: usize,
    visited: &mut usize,
    node_budget: usize,
) -> Option<RepresentationCandidate> {
    // Assign edges (x, y) with x <= y in lex order; diagonal edges get
    // identity atoms, off-diagonal edges non-identity atoms; converse
    // mirrors derived. Triangle consistency pruned per assignment.
    let slots: Vec<(usize, usize)> = (0..base)
        .flat_map(|x| (x..base).map(move |y| (x, y)))
        .collect();
    let mut labels = vec![u16::MAX; base * base];
    rec_assign(s, base, &slots, 0, &mut labels, visited, node_budget)
}

fn rec_assign(
    s: &RaAtomStructure,
    base: usize,
    slots: &[(usize, usize)],
    k: usize,
    labels: &mut Vec<u16>,
    visited: &mut usize,
    node_budget: usize,
) -> Option<RepresentationCandidate> {
    if *visited > node_budget {
        return None;
    }
    if k == slots.len() {
        let cand = RepresentationCandidate { base, labels: labels.clone() };
        if verify_representation(s, &cand) {
            return Some(cand);
        }
        return None;
    }
    *visited += 1;
    let (x, y) = slots[k];
    for a in 0..s.atom_count() {
        if (x == y) != s.is_identity_atom(a) {
            continue;
        }
        labels[x * base + y] = a as u16;
        labels[y * base + x] = s.converse_atom(a) as u16;
        // Triangle check against fully assigned triangles through (x, y).
        let unset = u16::MAX;
        let ok = (0..base).all(|z| {
            let xz = labels[x * base + z];
            let zy = labels[z * base + y];
            if xz == unset || zy == unset {
                return true;
            }
            s.consistent(xz as usize, zy as usize, a)
        });
        if ok {
            if let Some(c) = rec_assign(s, base, slots, k + 1, labels, visited, node_budget) {
                return Some(c);
            }
        }
        labels[x * base + y] = u16::MAX;
        labels[y * base + x] = u16::MAX;
    }
    None
}

/// Whether an `r`-colouring of the edges of the complete graph on `g`
/// nodes without a monochromatic triangle exists.
pub fn ramsey_colouring_exists(g: usize, r: usize) -> Result<bool, AlgebraError> {
    if g > 16 || r > 3 {
        return Err(AlgebraError::BudgetExceeded {
            what: "ramsey search parameters".into(),
            limit: 16,
        });
    }
    if r == 0 {
        return Ok(g < 2);
    }
    let slots: Vec<(usize, usize)> = (0..g)
        .flat_map(|x| (x + 1..g).map(move |y| (x, y)))
        .collect();
    let mut colour = vec![usize::MAX; g * g];
    fn rec(
        g: usize,
        r: usize,
        slots: &[(usize, usize)],
        k: usize,
        colour: &mut Vec<usize>,
    ) -> bool {
        if k == slots.len() {
            return true;
        }
        let (x, y) = slots[k];
        for c in 0..r {
            let ok = (0..g).all(|z| {
                if z == x || z == y {
                    return true;
                }
                let xz = colour[x.min(z) * g + x.max(z)];
                let zy = colour[y.min(z) * g + y.max(z)];
                !(xz == c && zy == c)
            });
            if ok {
                colour[x * g + y] = c;
                if rec(g, r, slots, k + 1, colour) {
                    return true;
                }
                colour[x * g + y] = usize::MAX;
            }
        }
        false
    }
    Ok(rec(g, r, &slots, 0, &mut colour))
}
