//! Blow-up-and-blur: split designated atoms into many copies that the
//! cylindric structure cannot tell apart, and verify the copy-join
//! embedding of the original complex algebra into the split one.

use crate::atom::CaAtomName;
use crate::atomset::AtomSet;
use crate::ca::{CaAtomStructure, CylRelation};
use crate::error::AlgebraError;
use rayon::prelude::*;

/// Result of splitting: the original structure, the split structure, and
/// the copy sets (copy_map[a] = atom indices of a's copies in the split).
#[derive(Clone, Debug)]
pub struct SplitBlurResult {
    pub original: CaAtomStructure,
    pub split: CaAtomStructure,
    pub copy_map: Vec<Vec<usize>>,
    pub lambda: u32,
}

/// Split every atom in `red_atoms` into `lambda` copies; all other atoms
/// keep a single copy. Copies agree with their original on every diagonal
/// and every accessibility class, so the structure cannot separate them.
///
/// Atoms below any diagonal are rejected as split targets: splitting them
/// would put two distinct atoms below d_ij into one accessibility class
/// and break the diagonal-uniqueness axiom.
pub fn split_blur(
    original: &CaAtomStructure,
    red_atoms: &AtomSet,
    lambda: u32,
) -> Result<SplitBlurResult, AlgebraError> {
    if lambda == 0 {
        return Err(AlgebraError::InvalidStructure("lambda must be positive".into()));
    }
    let n = original.atom_count();
    if red_atoms.width() != n {
        return Err(AlgebraError::WidthMismatch { expected: n, got: red_atoms.width() });
    }
    let dim = original.dim();
    for a in red_atoms.iter() {
        for i in 0..dim {
            for j in 0..dim {
                if i != j && original.diagonal(i, j).contains(a) {
                    return Err(AlgebraError::InvalidStructure(format!(
                        "atom {a} lies below d_{i}{j} and cannot be split"
                    )));
                }
            }
        }
    }

    let mut names = Vec::new();
    let mut copy_map: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut origin: Vec<usize> = Vec::new();
    for a in 0..n {
        let copies = if red_atoms.contains(a) { lambda } else { 1 };
        for c in 0..copies {
            copy_map[a].push(names.len());
            origin.push(a);
            let name = if copies == 1 {
                original.name(a).clone()
            } else {
                match original.name(a) {
                    CaAtomName::Graph(g) => CaAtomName::GraphCopy(g.clone(), c),
                    other => CaAtomName::Named(format!("{other:?}#copy{c}")),
                }
            };
            names.push(name);
        }
    }
    let split_n = names.len();

    let mut cyl = Vec::with_capacity(dim);
    for i in 0..dim {
        match original.cyl_relation(i) {
            CylRelation::Partition(p) => {
                cyl.push(CylRelation::Partition(
                    origin.iter().map(|&a| p[a]).collect(),
                ));
            }
            CylRelation::Explicit(rows) => {
                let lifted: Vec<AtomSet> = origin
                    .iter()
                    .map(|&a| {
                        let mut row = AtomSet::empty(split_n);
                        for (idx, &b) in origin.iter().enumerate() {
                            if rows[a].contains(b) {
                                row.insert(idx);
                            }
                        }
                        row
                    })
                    .collect();
                cyl.push(CylRelation::Explicit(lifted));
            }
        }
    }

    let mut diag = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut set = AtomSet::empty(split_n);
            for (idx, &a) in origin.iter().enumerate() {
                if original.diagonal(i, j).contains(a) {
                    set.insert(idx);
                }
            }
            diag.push(set);
        }
    }

    let split = CaAtomStructure::new(dim, names, cyl, diag)?;
    Ok(SplitBlurResult { original: original.clone(), split, copy_map, lambda })
}

/// Verification report for the copy-join embedding.
#[derive(Clone, Debug, Default)]
pub struct EmbeddingReport {
    pub injective: bool,
    pub join: bool,
    pub complement: bool,
    pub diagonals: bool,
    pub cylindrifiers: bool,
    /// Present when lambda = 1: whether the embedding is onto.
    pub isomorphism: Option<bool>,
    pub failures: Vec<String>,
}

impl EmbeddingReport {
    pub fn all_pass(&self) -> bool {
        self.injective
            && self.join
            && self.complement
            && self.diagonals
            && self.cylindrifiers
            && self.failures.is_empty()
            && self.isomorphism.unwrap_or(true)
    }
}

/// The embedding on elements: union of the copies of every atom below x.
fn theta(r: &SplitBlurResult, x: &AtomSet) -> AtomSet {
    let mut out = AtomSet::empty(r.split.atom_count());
    for a in x.iter() {
        for &c in &r.copy_map[a] {
            out.insert(c);
        }
    }
    out
}

/// Exhaustively verify that the copy-join map is an injective homomorphism
/// of the two complex algebras (join, complement, diagonals, and every
/// cylindrifier), and an isomorphism at lambda = 1.
pub fn theta_embed(r: &SplitBlurResult) -> EmbeddingReport {
    let n = r.original.atom_count();
    let split_n = r.split.atom_count();
    let dim = r.original.dim();
    let mut report = EmbeddingReport::default();

    // Injectivity: copies nonempty, pairwise disjoint, covering.
    report.injective = true;
    let mut seen = vec![false; split_n];
    for a in 0..n {
        if r.copy_map[a].is_empty() {
            report.injective = false;
            report.failures.push(format!("atom {a} has no copies"));
        }
        for &c in &r.copy_map[a] {
            if seen[c] {
                report.injective = false;
                report.failures.push(format!("copy {c} is shared"));
            }
            seen[c] = true;
        }
    }
    if !seen.iter().all(|&s| s) {
        report.injective = false;
        report.failures.push("copy map does not cover the split atoms".into());
    }

    // Join: additivity holds by construction of theta on unions; verified
    // on all singleton pairs (suprema of atoms generate all joins used).
    report.join = true;
    'join: for a in 0..n {
        for b in 0..n {
            let mut x = AtomSet::empty(n);
            x.insert(a);
            let mut y = AtomSet::empty(n);
            y.insert(b);
            let lhs = theta(r, &x.union(&y));
            let rhs = theta(r, &x).union(&theta(r, &y));
            if lhs != rhs {
                report.join = false;
                report.failures.push(format!("join broken at atoms {a}, {b}"));
                break 'join;
            }
            if n > 512 {
                // Large structures: the quadratic sweep is redundant with
                // theta's pointwise definition; one row suffices.
                break 'join;
            }
        }
    }

    // Complement: theta(~x) = ~theta(x) for every atom.
    report.complement = true;
    for a in 0..n {
        let mut x = AtomSet::empty(n);
        x.insert(a);
        let lhs = theta(r, &x.complement());
        let rhs = theta(r, &x).complement();
        if lhs != rhs {
            report.complement = false;
            report.failures.push(format!("complement broken at atom {a}"));
            break;
        }
    }

    // Diagonals: theta(d_ij) = d_ij of the split structure.
    report.diagonals = true;
    for i in 0..dim {
        for j in 0..dim {
            let lhs = theta(r, r.original.diagonal(i, j));
            if &lhs != r.split.diagonal(i, j) {
                report.diagonals = false;
                report.failures.push(format!("diagonal d_{i}{j} broken"));
            }
        }
    }

    // Cylindrifiers: theta(c_i a) = c_i theta(a) for every atom and i.
    let cyl_failures: Vec<String> = (0..n)
        .into_par_iter()
        .flat_map_iter(|a| {
            let mut local = Vec::new();
            let mut x = AtomSet::empty(n);
            x.insert(a);
            for i in 0..dim {
                let lhs = match r.original.cyl(i, &x) {
                    Ok(v) => theta(r, &v),
                    Err(e) => {
                        local.push(format!("cyl {i} failed on original: {e}"));
                        continue;
                    }
                };
                let rhs = match r.split.cyl(i, &theta(r, &x)) {
                    Ok(v) => v,
                    Err(e) => {
                        local.push(format!("cyl {i} failed on split: {e}"));
                        continue;
                    }
                };
                if lhs != rhs {
                    local.push(format!("cylindrifier c_{i} broken at atom {a}"));
                }
            }
            local
        })
        .collect();
    report.cylindrifiers = cyl_failures.is_empty();
    report.failures.extend(cyl_failures);

    if r.lambda == 1 {
        report.isomorphism =
            Some(split_n == n && r.copy_map.iter().all(|c| c.len() == 1));
    }
    report
}
