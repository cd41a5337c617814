//! Neat reducts and relation-algebra reducts of cylindric atom structures.
//!
//! The neat reduct Nr_k of an m-dimensional algebra consists of the elements
//! fixed by every c_i with i >= k. In a finite atomic algebra these are
//! exactly the unions of classes of E, the join of the accessibility
//! relations for i >= k, so the reduct is the complex algebra of the
//! quotient atom structure whose atoms are E-classes.

use crate::atom::{AtomName, CaAtomName};
use crate::atomset::AtomSet;
use crate::ca::{CaAtomStructure, CylRelation};
use crate::error::AlgebraError;
use crate::ra::RaAtomStructure;

/// Union-find over atom indices.
struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, a: usize) -> usize {
        if self.0[a] != a {
            let r = self.find(self.0[a]);
            self.0[a] = r;
        }
        self.0[a]
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Classes of the join of the accessibility relations for i in `dims`.
/// Returns (class id per atom, class member sets), classes ordered by least
/// member.
fn joined_classes(s: &CaAtomStructure, dims: impl Iterator<Item = usize>) -> (Vec<usize>, Vec<AtomSet>) {
    let n = s.atom_count();
    let mut dsu = Dsu::new(n);
    for i in dims {
        match s.cyl_relation(i) {
            CylRelation::Partition(p) => {
                let mut first: std::collections::BTreeMap<u32, usize> = Default::default();
                for a in 0..n {
                    if let Some(&f) = first.get(&p[a]) {
                        dsu.union(f, a);
                    } else {
                        first.insert(p[a], a);
                    }
                }
            }
            CylRelation::Explicit(rows) => {
                for (a, row) in rows.iter().enumerate() {
                    for b in row.iter() {
                        dsu.union(a, b);
                    }
                }
            }
        }
    }
    let mut roots: Vec<usize> = (0..n).map(|a| dsu.find(a)).collect();
    let mut order: Vec<usize> = roots.clone();
    order.sort_unstable();
    order.dedup();
    let mut members: Vec<AtomSet> = order.iter().map(|_| AtomSet::empty(n)).collect();
    for a in 0..n {
        let c = order.binary_search(&roots[a]).unwrap();
        roots[a] = c;
        members[c].insert(a);
    }
    (roots, members)
}

/// Result of a neat reduct: the quotient structure plus the member set of
/// each quotient atom in the original structure.
#[derive(Clone, Debug)]
pub struct NeatReduct {
    pub structure: CaAtomStructure,
    pub class_members: Vec<AtomSet>,
}

/// Neat reduct Nr_k of `s`, for 2 <= k <= dim. For k = dim this is a copy.
pub fn neat_reduct(s: &CaAtomStructure, k: usize) -> Result<NeatReduct, AlgebraError> {
    let m = s.dim();
    if k < 2 || k > m {
        return Err(AlgebraError::Unsupported(format!(
            "neat reduct target dimension {k} must satisfy 2 <= k <= {m}"
        )));
    }
    let (class_of, members) = joined_classes(s, k..m);
    let nc = members.len();
    if nc > 8192 {
        return Err(AlgebraError::BudgetExceeded {
            what: "neat reduct class count".into(),
            limit: 8192,
        });
    }
    let names: Vec<CaAtomName> = members
        .iter()
        .map(|mset| s.name(mset.min_member().unwrap()).clone())
        .collect();
    // Induced accessibility: classes related iff some members are. For
    // well-formed input this is an equivalence (checked); otherwise it is
    // kept as an explicit relation.
    let mut cyl = Vec::new();
    for i in 0..k {
        let mut rows: Vec<AtomSet> = (0..nc).map(|_| AtomSet::empty(nc)).collect();
        for a in 0..s.atom_count() {
            for b in a..s.atom_count() {
                if class_of[a] == class_of[b] && a != b {
                    continue;
                }
                if s.related(i, a, b) {
                    rows[class_of[b]].insert(class_of[a]);
                }
                if s.related(i, b, a) {
                    rows[class_of[a]].insert(class_of[b]);
                }
            }
        }
        for c in 0..nc {
            rows[c].insert(c);
        }
        cyl.push(relation_to_partition_if_possible(rows));
    }
    // Induced diagonals; classes must be homogeneous for D_ij.
    let mut diag = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let d = s.diagonal(i, j);
            let mut out = AtomSet::empty(nc);
            for (c, mset) in members.iter().enumerate() {
                let inside = mset.iter().filter(|&a| d.contains(a)).count();
                if inside == mset.len() {
                    out.insert(c);
                } else if inside != 0 {
                    return Err(AlgebraError::InvalidStructure(format!(
                        "neat reduct class {c} is not homogeneous for d_{i}{j}"
                    )));
                }
            }
            diag.push(out);
        }
    }
    let structure = CaAtomStructure::new(k, names, cyl, diag)?;
    Ok(NeatReduct { structure, class_members: members })
}

/// Collapse an explicit relation to a partition when it is an equivalence.
fn relation_to_partition_if_possible(rows: Vec<AtomSet>) -> CylRelation {
    let n = rows.len();
    // rows[b] = set of a with a <= c_i b. Equivalence iff symmetric and
    // transitive (reflexivity was forced above).
    let mut equivalence = true;
    'outer: for b in 0..n {
        for a in rows[b].iter().collect::<Vec<_>>() {
            if !rows[a].contains(b) || !rows[a].is_subset(&rows[b]) {
                equivalence = false;
                break 'outer;
            }
        }
    }
    if !equivalence {
        return CylRelation::Explicit(rows);
    }
    let mut class = vec![u32::MAX; n];
    let mut next = 0u32;
    for b in 0..n {
        if class[b] == u32::MAX {
            for a in rows[b].iter() {
                class[a] = next;
            }
            next += 1;
        }
    }
    CylRelation::Partition(class)
}

/// Result of a relation-algebra reduct: the derived RA atom structure plus
/// the member set of each RA atom in the original CA structure.
#[derive(Clone, Debug)]
pub struct RaReduct {
    pub structure: RaAtomStructure,
    pub class_members: Vec<AtomSet>,
}

/// Relation-algebra reduct of an atom structure of dimension >= 3: the
/// universe is Nr_2, composition is x;y = c_2(s_2^1 x . s_2^0 y), converse
/// is the 0,1 coordinate swap through the spare index 2, and 1' = d_01.
///
/// For dimension exactly 3 the result may fail associativity; the axiom
/// battery reports that rather than this function.
pub fn ra_reduct(s: &CaAtomStructure) -> Result<RaReduct, AlgebraError> {
    if s.dim() < 3 {
        return Err(AlgebraError::Unsupported(
            "relation-algebra reduct needs dimension >= 3".into(),
        ));
    }
    let (_class_of, members) = joined_classes(s, 2..s.dim());
    let nc = members.len();
    if nc > 2048 {
        return Err(AlgebraError::BudgetExceeded {
            what: "ra reduct class count".into(),
            limit: 2048,
        });
    }

    // Helper: express a (necessarily class-closed) element as a class set.
    let to_classes = |x: &AtomSet| -> Result<AtomSet, AlgebraError> {
        let mut out = AtomSet::empty(nc);
        for (c, mset) in members.iter().enumerate() {
            if mset.is_subset(x) {
                out.insert(c);
            } else if mset.intersects(x) {
                return Err(AlgebraError::InvalidStructure(
                    "reduct operation result is not a union of Nr_2 classes".into(),
                ));
            }
        }
        Ok(out)
    };

    // Composition table between class atoms.
    let compose_classes = |a: usize, b: usize| -> Result<AtomSet, AlgebraError> {
        let x = s.subst(2, 1, &members[a])?; // s_2^1 x
        let y = s.subst(2, 0, &members[b])?; // s_2^0 y
        to_classes(&s.cyl(2, &x.intersect(&y))?)
    };

    // Converse and identity.
    let mut converse = Vec::with_capacity(nc);
    for c in 0..nc {
        let conv = s.swap_subst(2, 0, 1, &members[c])?;
        let cc = to_classes(&conv)?;
        if cc.len() != 1 {
            return Err(AlgebraError::InvalidStructure(format!(
                "converse of reduct atom {c} is not an atom"
            )));
        }
        converse.push(cc.min_member().unwrap() as u32);
    }
    let d01 = to_classes(s.diagonal(0, 1))?;

    let mut forbidden = Vec::new();
    for a in 0..nc {
        for b in 0..nc {
            let ab = compose_classes(a, b)?;
            for c in 0..nc {
                if !ab.contains(c) {
                    forbidden.push([a as u32, b as u32, c as u32]);
                }
            }
        }
    }
    // The Peircean closure in RaAtomStructure::new must not change the set;
    // verify by building and comparing sizes.
    let names: Vec<AtomName> = members
        .iter()
        .map(|mset| AtomName::Named(format!("[{}]", mset.min_member().unwrap())))
        .collect();
    let before = forbidden.len();
    let structure = RaAtomStructure::new(names, d01.iter(), converse, forbidden.iter().copied())?;
    if structure.forbidden().len() != before {
        return Err(AlgebraError::InvalidStructure(
            "reduct forbidden set is not closed under the Peircean transforms".into(),
        ));
    }
    Ok(RaReduct { structure, class_members: members })
}
