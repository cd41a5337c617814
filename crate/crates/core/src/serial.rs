//! Versioned JSON documents for atom structures.
//!
//! A structure file is a single self-describing JSON document with a format
//! marker, a `kind` tag (`ra` or `ca`), and the structure data. Saving is
//! canonical: forbidden triples are stored as the lexicographically least
//! representative of their Peircean orbit, atom sets as ascending index
//! lists, and the output carries a trailing newline — so save → load → save
//! is byte-identical.

use crate::atom::{AtomName, CaAtomName};
use crate::atomset::AtomSet;
use crate::ca::{CaAtomStructure, CylRelation};
use crate::error::AlgebraError;
use crate::ra::RaAtomStructure;
use serde::{Deserialize, Serialize};

/// Format marker carried by every structure file.
pub const FORMAT: &str = "cylra-structure/1";

/// On-disk form of one cylindrifier's accessibility relation.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CylDto {
    /// Equivalence relation: class id per atom.
    Partition(Vec<u32>),
    /// Arbitrary relation: accessible atom indices per atom, ascending.
    Explicit(Vec<Vec<usize>>),
}

/// Relation-algebra payload.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RaDto {
    pub atoms: Vec<AtomName>,
    /// Identity atom indices, ascending.
    pub identity: Vec<usize>,
    /// Converse atom index per atom.
    pub converse: Vec<u32>,
    /// Forbidden triples (a, b, c) meaning c is not below a;b — one
    /// canonical representative per Peircean orbit; the loader closes them.
    pub forbidden: Vec<[u32; 3]>,
}

/// Cylindric-algebra payload.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CaDto {
    pub dim: usize,
    pub atoms: Vec<CaAtomName>,
    /// Accessibility relation per dimension.
    pub cyl: Vec<CylDto>,
    /// Diagonal atom sets d_ij in row-major (i * dim + j) order, each an
    /// ascending index list.
    pub diagonals: Vec<Vec<usize>>,
}

/// Structure payload, tagged by kind.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum StructureBody {
    Ra(RaDto),
    Ca(CaDto),
}

/// A complete structure file.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct StructureFile {
    pub format: String,
    #[serde(flatten)]
    pub body: StructureBody,
}

/// A structure loaded from a file, validated by the normal constructors.
#[derive(Clone, Debug)]
pub enum LoadedStructure {
    Ra(RaAtomStructure),
    Ca(CaAtomStructure),
}

fn set_to_indices(s: &AtomSet) -> Vec<usize> {
    s.iter().collect()
}

fn indices_to_set(width: usize, xs: &[usize], what: &str) -> Result<AtomSet, AlgebraError> {
    let mut out = AtomSet::empty(width);
    for &x in xs {
        if x >= width {
            return Err(AlgebraError::InvalidStructure(format!(
                "{what}: atom index {x} out of range (atom count {width})"
            )));
        }
        out.insert(x);
    }
    Ok(out)
}

impl StructureFile {
    pub fn from_ra(s: &RaAtomStructure) -> Self {
        StructureFile {
            format: FORMAT.into(),
            body: StructureBody::Ra(RaDto {
                atoms: s.names().to_vec(),
                identity: set_to_indices(s.identity()),
                converse: (0..s.atom_count()).map(|a| s.converse_atom(a) as u32).collect(),
                forbidden: s.forbidden_representatives(),
            }),
        }
    }

    pub fn from_ca(s: &CaAtomStructure) -> Self {
        let cyl = (0..s.dim())
            .map(|i| match s.cyl_relation(i) {
                CylRelation::Partition(p) => CylDto::Partition(p.clone()),
                CylRelation::Explicit(rows) => {
                    CylDto::Explicit(rows.iter().map(set_to_indices).collect())
                }
            })
            .collect();
        let mut diagonals = Vec::with_capacity(s.dim() * s.dim());
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                diagonals.push(set_to_indices(s.diagonal(i, j)));
            }
        }
        StructureFile {
            format: FORMAT.into(),
            body: StructureBody::Ca(CaDto { dim: s.dim(), atoms: s.names().to_vec(), cyl, diagonals }),
        }
    }

    /// Validate and build the in-memory structure via the normal
    /// constructors, so a loaded file satisfies the same invariants as a
    /// generated structure.
    pub fn load(&self) -> Result<LoadedStructure, AlgebraError> {
        if self.format != FORMAT {
            return Err(AlgebraError::InvalidStructure(format!(
                "unsupported format marker {:?} (expected {FORMAT:?})",
                self.format
            )));
        }
        match &self.body {
            StructureBody::Ra(dto) => {
                let s = RaAtomStructure::new(
                    dto.atoms.clone(),
                    dto.identity.iter().copied(),
                    dto.converse.clone(),
                    dto.forbidden.iter().copied(),
                )?;
                Ok(LoadedStructure::Ra(s))
            }
            StructureBody::Ca(dto) => {
                let n = dto.atoms.len();
                let mut cyl = Vec::with_capacity(dto.cyl.len());
                for c in &dto.cyl {
                    cyl.push(match c {
                        CylDto::Partition(p) => CylRelation::Partition(p.clone()),
                        CylDto::Explicit(rows) => {
                            if rows.len() != n {
                                return Err(AlgebraError::InvalidStructure(format!(
                                    "explicit relation has {} rows for {n} atoms",
                                    rows.len()
                                )));
                            }
                            let mut sets = Vec::with_capacity(rows.len());
                            for r in rows {
                                sets.push(indices_to_set(n, r, "explicit relation row")?);
                            }
                            CylRelation::Explicit(sets)
                        }
                    });
                }
                let mut diag = Vec::with_capacity(dto.diagonals.len());
                for d in &dto.diagonals {
                    diag.push(indices_to_set(n, d, "diagonal")?);
                }
                let s = CaAtomStructure::new(dto.dim, dto.atoms.clone(), cyl, diag)?;
                Ok(LoadedStructure::Ca(s))
            }
        }
    }

    /// Canonical pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("structure files serialize");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, AlgebraError> {
        serde_json::from_str(text)
            .map_err(|e| AlgebraError::InvalidStructure(format!("structure file parse: {e}")))
    }
}
