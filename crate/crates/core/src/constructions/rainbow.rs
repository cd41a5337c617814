//! The finite rainbow family at dimension 3: atoms are surjections from
//! the coordinate set onto consistent coloured graphs, with cylindric
//! accessibility given by agreement off a coordinate and diagonals by
//! coordinate coincidence.

use crate::atom::{CaAtomName, EdgeColour, GraphAtom};
use crate::atomset::AtomSet;
use crate::ca::{CaAtomStructure, CylRelation};
use crate::constructions::rainbow_rules::RainbowPalette;
use crate::error::AlgebraError;
use std::collections::BTreeMap;

/// Parameters: dimension (only 3 supported for exhaustive work) and the
/// number of tinted-green superscripts. The red index set has size n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RainbowParams {
    pub n: usize,
    pub green_count: i64,
}

impl RainbowParams {
    pub fn standard(n: usize) -> Self {
        // The paper-scale instance pits n+1 greens against n reds.
        RainbowParams { n, green_count: n as i64 + 1 }
    }
}

/// Generate the rainbow atom structure at dimension 3.
pub fn rainbow_finite(p: RainbowParams) -> Result<CaAtomStructure, AlgebraError> {
    if p.n != 3 {
        return Err(AlgebraError::Unsupported(
            "rainbow generation is implemented for dimension 3 only".into(),
        ));
    }
    if p.green_count < 1 {
        return Err(AlgebraError::InvalidStructure(
            "need at least one green tint".into(),
        ));
    }
    let palette = RainbowPalette { green_count: p.green_count, red_count: p.n as u32 };
    let colours = palette.colours();

    let mut graphs: Vec<GraphAtom> = Vec::new();
    // One kernel class: no edges.
    graphs.push(GraphAtom { coord_class: vec![0, 0, 0], edges: BTreeMap::new() });
    // Two kernel classes: one edge, any colour.
    for pattern in [[0u8, 0, 1], [0, 1, 0], [0, 1, 1]] {
        for &c in &colours {
            let mut edges = BTreeMap::new();
            edges.insert((0u8, 1u8), c);
            graphs.push(GraphAtom { coord_class: pattern.to_vec(), edges });
        }
    }
    // Three kernel classes: a consistent triangle.
    for &c01 in &colours {
        for &c02 in &colours {
            for &c12 in &colours {
                if palette.triangle_consistent(c01, c02, c12) {
                    let mut edges = BTreeMap::new();
                    edges.insert((0u8, 1u8), c01);
                    edges.insert((0u8, 2u8), c02);
                    edges.insert((1u8, 2u8), c12);
                    graphs.push(GraphAtom { coord_class: vec![0, 1, 2], edges });
                }
            }
        }
    }

    let n_atoms = graphs.len();
    let dim = 3usize;

    // Accessibility: a =_i b iff the graphs agree on the coordinates other
    // than i (same coincidence pattern and same directed colour).
    let mut cyl = Vec::with_capacity(dim);
    for i in 0..dim {
        let mut keys: BTreeMap<(bool, Option<EdgeColour>), u32> = BTreeMap::new();
        let mut part = Vec::with_capacity(n_atoms);
        let others: Vec<usize> = (0..dim).filter(|&j| j != i).collect();
        let (j, k) = (others[0], others[1]);
        for g in &graphs {
            let cj = g.coord_class[j];
            let ck = g.coord_class[k];
            let key = if cj == ck {
                (true, None)
            } else {
                (false, Some(g.edge(cj, ck)))
            };
            let next = keys.len() as u32;
            let id = *keys.entry(key).or_insert(next);
            part.push(id);
        }
        cyl.push(CylRelation::Partition(part));
    }

    let mut diag = Vec::with_capacity(dim * dim);
    for i in 0..dim {
        for j in 0..dim {
            let mut set = AtomSet::empty(n_atoms);
            for (idx, g) in graphs.iter().enumerate() {
                if g.coord_class[i] == g.coord_class[j] {
                    set.insert(idx);
                }
            }
            diag.push(set);
        }
    }

    let names: Vec<CaAtomName> = graphs.into_iter().map(CaAtomName::Graph).collect();
    CaAtomStructure::new(dim, names, cyl, diag)
}
