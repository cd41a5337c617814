//! Relation-algebra atom structures and their complex algebras.
//!
//! A finite atom structure is given by its atom list, the set of identity
//! atoms, the converse bijection, and the forbidden triples. A triple
//! (a, b, c) describes a triangle with label(x,y) = a, label(y,z) = b,
//! label(x,z) = c; it is consistent iff it is not forbidden, i.e. iff
//! c <= a;b holds in the complex algebra. The forbidden set is kept closed
//! under the six Peircean transforms.

use crate::atom::AtomName;
use crate::atomset::AtomSet;
use crate::error::AlgebraError;
use std::collections::BTreeSet;

/// Finite relation-algebra atom structure with Peirce-closed forbidden triples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaAtomStructure {
    names: Vec<AtomName>,
    identity: AtomSet,
    converse: Vec<u32>,
    forbidden: BTreeSet<[u32; 3]>,
}

/// The six Peircean transforms of a triangle triple, derived from the six
/// orderings of the triangle's nodes.
pub fn peircean_transforms(conv: impl Fn(u32) -> u32, t: [u32; 3]) -> [[u32; 3]; 6] {
    let [a, b, c] = t;
    [
        [a, b, c],
        [b, conv(c), conv(a)],
        [conv(c), a, conv(b)],
        [conv(a), c, b],
        [c, conv(b), a],
        [conv(b), conv(a), conv(c)],
    ]
}

impl RaAtomStructure {
    /// Build a structure, validating shapes and closing the forbidden set
    /// under the Peircean transforms.
    pub fn new(
        names: Vec<AtomName>,
        identity: impl IntoIterator<Item = usize>,
        converse: Vec<u32>,
        forbidden: impl IntoIterator<Item = [u32; 3]>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::InvalidStructure("no atoms".into()));
        }
        if converse.len() != n {
            return Err(AlgebraError::InvalidStructure(
                "converse map length differs from atom count".into(),
            ));
        }
        for (i, &c) in converse.iter().enumerate() {
            if c as usize >= n {
                return Err(AlgebraError::InvalidStructure(format!(
                    "converse of atom {i} out of range"
                )));
            }
            if converse[c as usize] as usize != i {
                return Err(AlgebraError::InvalidStructure(format!(
                    "converse is not an involution at atom {i}"
                )));
            }
        }
        let mut id = AtomSet::empty(n);
        for e in identity {
            if e >= n {
                return Err(AlgebraError::InvalidStructure(format!(
                    "identity atom {e} out of range"
                )));
            }
            id.insert(e);
        }
        if id.is_empty() {
            return Err(AlgebraError::InvalidStructure("empty identity set".into()));
        }
        let conv = |a: u32| converse[a as usize];
        let mut closed = BTreeSet::new();
        for t in forbidden {
            for x in t {
                if x as usize >= n {
                    return Err(AlgebraError::InvalidStructure(format!(
                        "forbidden triple atom {x} out of range"
                    )));
                }
            }
            for tt in peircean_transforms(conv, t) {
                closed.insert(tt);
            }
        }
        Ok(RaAtomStructure {
            names,
            identity: id,
            converse,
            forbidden: closed,
        })
    }

    pub fn atom_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[AtomName] {
        &self.names
    }

    pub fn name(&self, atom: usize) -> &AtomName {
        &self.names[atom]
    }

    /// Index of a named atom, if present.
    pub fn atom_index(&self, name: &AtomName) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The set of identity atoms (1' as an element).
    pub fn identity(&self) -> &AtomSet {
        &self.identity
    }

    pub fn is_identity_atom(&self, atom: usize) -> bool {
        self.identity.contains(atom)
    }

    pub fn converse_atom(&self, atom: usize) -> usize {
        self.converse[atom] as usize
    }

    /// Whether the triangle (a, b, c) (meaning c <= a;b) is consistent.
    pub fn consistent(&self, a: usize, b: usize, c: usize) -> bool {
        !self.forbidden.contains(&[a as u32, b as u32, c as u32])
    }

    /// The Peirce-closed forbidden set.
    pub fn forbidden(&self) -> &BTreeSet<[u32; 3]> {
        &self.forbidden
    }

    /// Canonical representative of a forbidden triple's Peircean orbit: the
    /// lexicographically least transform.
    pub fn canonical_triple(&self, t: [u32; 3]) -> [u32; 3] {
        let conv = |a: u32| self.converse[a as usize];
        *peircean_transforms(conv, t).iter().min().unwrap()
    }

    /// Canonical representatives of all forbidden orbits, sorted.
    pub fn forbidden_representatives(&self) -> Vec<[u32; 3]> {
        let reps: BTreeSet<[u32; 3]> = self
            .forbidden
            .iter()
            .map(|&t| self.canonical_triple(t))
            .collect();
        reps.into_iter().collect()
    }

    fn check_width(&self, x: &AtomSet) -> Result<(), AlgebraError> {
        if x.width() != self.atom_count() {
            return Err(AlgebraError::WidthMismatch {
                expected: self.atom_count(),
                got: x.width(),
            });
        }
        Ok(())
    }

    /// Relative composition x;y in the complex algebra.
    pub fn compose(&self, x: &AtomSet, y: &AtomSet) -> Result<AtomSet, AlgebraError> {
        self.check_width(x)?;
        self.check_width(y)?;
        let n = self.atom_count();
        let mut out = AtomSet::empty(n);
        for a in x.iter() {
            for b in y.iter() {
                for c in 0..n {
                    if !out.contains(c) && self.consistent(a, b, c) {
                        out.insert(c);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Converse x˘ in the complex algebra.
    pub fn converse(&self, x: &AtomSet) -> Result<AtomSet, AlgebraError> {
        self.check_width(x)?;
        let mut out = AtomSet::empty(self.atom_count());
        for a in x.iter() {
            out.insert(self.converse_atom(a));
        }
        Ok(out)
    }

    /// Generate the subalgebra of the complex algebra generated by
    /// `generators` (always containing 0, 1, and 1'). Errors with
    /// `BudgetExceeded` if the closure would exceed `max_elements`.
    pub fn sg_generate(
        &self,
        generators: &[AtomSet],
        max_elements: usize,
    ) -> Result<Vec<AtomSet>, AlgebraError> {
        for g in generators {
            self.check_width(g)?;
        }
        let n = self.atom_count();
        let mut elems: BTreeSet<AtomSet> = BTreeSet::new();
        elems.insert(AtomSet::empty(n));
        elems.insert(AtomSet::full(n));
        elems.insert(self.identity.clone());
        for g in generators {
            elems.insert(g.clone());
        }
        loop {
            let snapshot: Vec<AtomSet> = elems.iter().cloned().collect();
            let before = elems.len();
            for x in &snapshot {
                elems.insert(x.complement());
                elems.insert(self.converse(x)?);
                for y in &snapshot {
                    elems.insert(x.union(y));
                    elems.insert(x.intersect(y));
                    elems.insert(self.compose(x, y)?);
                }
                if elems.len() > max_elements {
                    return Err(AlgebraError::BudgetExceeded {
                        what: "subalgebra closure".into(),
                        limit: max_elements,
                    });
                }
            }
            if elems.len() == before {
                return Ok(elems.into_iter().collect());
            }
        }
    }
}

/// Whether `sub` (a set of elements, all of the same width) is dense in the
/// complex algebra: every nonzero element bounds a nonzero member of `sub`.
/// In a finite atomic algebra this holds iff every atom belongs to `sub`.
pub fn is_dense(atom_count: usize, sub: &[AtomSet]) -> bool {
    // A nonzero x bounds some atom a; any nonzero s <= a equals a, so density
    // forces every atom into sub, and conversely atoms witness density.
    (0..atom_count).all(|a| {
        let s = AtomSet::singleton(atom_count, a);
        sub.iter().any(|e| *e == s)
    })
}

/// Whether `sub` is a complete subalgebra: closed under joins of arbitrary
/// subsets of itself. In the finite setting it suffices to check that the
/// join of every subset of sub's minimal nonzero members stays in sub, which
/// reduces to closure under pairwise joins.
pub fn is_complete(sub: &[AtomSet]) -> bool {
    let set: BTreeSet<&AtomSet> = sub.iter().collect();
    for x in sub {
        for y in sub {
            if !set.contains(&x.union(y)) {
                return false;
            }
        }
    }
    true
}
