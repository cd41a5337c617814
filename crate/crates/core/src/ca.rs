//! Cylindric-algebra atom structures and their complex algebras.
//!
//! A finite n-dimensional atom structure is given by its atom list, for each
//! i < n an accessibility relation (dual to the cylindrifier c_i), and for
//! each pair i, j < n a diagonal atom set D_ij (dual to d_ij). Well-formed
//! structures have equivalence accessibility relations, stored as partitions;
//! an explicit (possibly ill-behaved) relation representation is also
//! supported so the axiom batteries can examine broken inputs.

use crate::atom::CaAtomName;
use crate::atomset::AtomSet;
use crate::error::AlgebraError;

/// Accessibility relation for one cylindrifier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CylRelation {
    /// Equivalence relation, as a class id per atom. Atoms are related iff
    /// they share a class.
    Partition(Vec<u32>),
    /// Arbitrary relation: per atom, the set of accessible atoms. Used for
    /// file input and deliberately broken structures.
    Explicit(Vec<AtomSet>),
}

/// Finite cylindric-algebra atom structure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaAtomStructure {
    dim: usize,
    names: Vec<CaAtomName>,
    cyl: Vec<CylRelation>,
    /// Diagonal atom sets, indexed i * dim + j for all i, j < dim.
    diag: Vec<AtomSet>,
}

impl CaAtomStructure {
    pub fn new(
        dim: usize,
        names: Vec<CaAtomName>,
        cyl: Vec<CylRelation>,
        diag: Vec<AtomSet>,
    ) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::InvalidStructure("no atoms".into()));
        }
        if dim < 2 {
            return Err(AlgebraError::InvalidStructure(
                "dimension must be at least 2".into(),
            ));
        }
        if cyl.len() != dim {
            return Err(AlgebraError::InvalidStructure(
                "need one accessibility relation per dimension".into(),
            ));
        }
        for c in &cyl {
            match c {
                CylRelation::Partition(p) => {
                    if p.len() != n {
                        return Err(AlgebraError::InvalidStructure(
                            "partition length differs from atom count".into(),
                        ));
                    }
                }
                CylRelation::Explicit(rows) => {
                    if rows.len() != n || rows.iter().any(|r| r.width() != n) {
                        return Err(AlgebraError::InvalidStructure(
                            "explicit relation has wrong shape".into(),
                        ));
                    }
                }
            }
        }
        if diag.len() != dim * dim || diag.iter().any(|d| d.width() != n) {
            return Err(AlgebraError::InvalidStructure(
                "diagonal table has wrong shape".into(),
            ));
        }
        Ok(CaAtomStructure { dim, names, cyl, diag })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn atom_count(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[CaAtomName] {
        &self.names
    }

    pub fn name(&self, atom: usize) -> &CaAtomName {
        &self.names[atom]
    }

    pub fn atom_index(&self, name: &CaAtomName) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn cyl_relation(&self, i: usize) -> &CylRelation {
        &self.cyl[i]
    }

    /// Diagonal element d_ij.
    pub fn diagonal(&self, i: usize, j: usize) -> &AtomSet {
        &self.diag[i * self.dim + j]
    }

    /// Whether atoms a and b are c_i-related (a <= c_i b).
    pub fn related(&self, i: usize, a: usize, b: usize) -> bool {
        match &self.cyl[i] {
            CylRelation::Partition(p) => p[a] == p[b],
            CylRelation::Explicit(rows) => rows[b].contains(a),
        }
    }

    /// c_i of a single atom.
    pub fn cyl_atom(&self, i: usize, a: usize) -> AtomSet {
        let n = self.atom_count();
        match &self.cyl[i] {
            CylRelation::Partition(p) => {
                AtomSet::from_iter(n, (0..n).filter(|&b| p[b] == p[a]))
            }
            CylRelation::Explicit(rows) => rows[a].clone(),
        }
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

    fn check_dim(&self, i: usize) -> Result<(), AlgebraError> {
        if i >= self.dim {
            return Err(AlgebraError::DimensionOutOfRange { index: i, dim: self.dim });
        }
        Ok(())
    }

    /// Cylindrifier c_i applied to an element (complete additivity).
    pub fn cyl(&self, i: usize, x: &AtomSet) -> Result<AtomSet, AlgebraError> {
        self.check_dim(i)?;
        self.check_width(x)?;
        let n = self.atom_count();
        let mut out = AtomSet::empty(n);
        match &self.cyl[i] {
            CylRelation::Partition(p) => {
                let mut classes = std::collections::BTreeSet::new();
                for a in x.iter() {
                    classes.insert(p[a]);
                }
                for b in 0..n {
                    if classes.contains(&p[b]) {
                        out.insert(b);
                    }
                }
            }
            CylRelation::Explicit(rows) => {
                for a in x.iter() {
                    out.union_with(&rows[a]);
                }
            }
        }
        Ok(out)
    }

    /// Substitution s_i^j x = x when i = j, else c_j(d_ij . x).
    pub fn subst(&self, i: usize, j: usize, x: &AtomSet) -> Result<AtomSet, AlgebraError> {
        self.check_dim(i)?;
        self.check_dim(j)?;
        self.check_width(x)?;
        if i == j {
            return Ok(x.clone());
        }
        self.cyl(j, &self.diagonal(i, j).intersect(x))
    }

    /// Generalized transposition-style substitution
    /// ls(i,j) x = s^l_i s^i_j s^j_l x for a spare index l distinct from i, j.
    pub fn swap_subst(
        &self,
        l: usize,
        i: usize,
        j: usize,
        x: &AtomSet,
    ) -> Result<AtomSet, AlgebraError> {
        // In the s_i^j = c_j(d_ij . x) convention ("copy coordinate i into
        // coordinate j"), the word s^l_i s^i_j s^j_l reads, right to left:
        // copy l into j, copy j into i, copy i into l. On set duals this
        // swaps coordinates i and j of any element not depending on l.
        let step1 = self.subst(l, j, x)?; // s^j_l
        let step2 = self.subst(j, i, &step1)?; // s^i_j
        self.subst(i, l, &step2) // s^l_i
    }

    /// Generate the subalgebra of the complex algebra generated by
    /// `generators` (always containing 0, 1, and all diagonals). Errors with
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
        let mut elems: std::collections::BTreeSet<AtomSet> = std::collections::BTreeSet::new();
        elems.insert(AtomSet::empty(n));
        elems.insert(AtomSet::full(n));
        for i in 0..self.dim {
            for j in 0..self.dim {
                elems.insert(self.diagonal(i, j).clone());
            }
        }
        for g in generators {
            elems.insert(g.clone());
        }
        loop {
            let snapshot: Vec<AtomSet> = elems.iter().cloned().collect();
            let before = elems.len();
            for x in &snapshot {
                elems.insert(x.complement());
                for i in 0..self.dim {
                    elems.insert(self.cyl(i, x)?);
                }
                for y in &snapshot {
                    elems.insert(x.union(y));
                    elems.insert(x.intersect(y));
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

    /// The full n-dimensional set-algebra dual over a base of size `base`:
    /// atoms are the point tuples in base^dim.
    pub fn full_set_dual(dim: usize, base: usize) -> Result<Self, AlgebraError> {
        if base == 0 || base > 6 || dim < 2 || dim > 5 {
            return Err(AlgebraError::Unsupported(
                "full set dual supported for 2 <= dim <= 5, 1 <= base <= 6".into(),
            ));
        }
        let count = base.pow(dim as u32);
        let mut tuples = Vec::with_capacity(count);
        let mut cur = vec![0u8; dim];
        loop {
            tuples.push(cur.clone());
            let mut k = dim;
            loop {
                if k == 0 {
                    break;
                }
                k -= 1;
                cur[k] += 1;
                if (cur[k] as usize) < base {
                    break;
                }
                cur[k] = 0;
                if k == 0 {
                    break;
                }
            }
            if cur.iter().all(|&c| c == 0) {
                break;
            }
        }
        assert_eq!(tuples.len(), count);
        let names: Vec<CaAtomName> = tuples.iter().cloned().map(CaAtomName::Tuple).collect();
        let mut cyl = Vec::new();
        for i in 0..dim {
            // Two tuples are c_i-related iff they agree off coordinate i.
            let mut keys: Vec<Vec<u8>> = Vec::with_capacity(count);
            for t in &tuples {
                let mut k = t.clone();
                k.remove(i);
                keys.push(k);
            }
            let mut sorted: Vec<Vec<u8>> = keys.clone();
            sorted.sort();
            sorted.dedup();
            let classes = keys
                .iter()
                .map(|k| sorted.binary_search(k).unwrap() as u32)
                .collect();
            cyl.push(CylRelation::Partition(classes));
        }
        let mut diag = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                diag.push(AtomSet::from_iter(
                    count,
                    (0..count).filter(|&a| tuples[a][i] == tuples[a][j]),
                ));
            }
        }
        CaAtomStructure::new(dim, names, cyl, diag)
    }
}
