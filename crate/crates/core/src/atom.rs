//! Structured atom identifiers.
//!
//! Atoms are identified by structured tags (colour kind plus integer indices)
//! rather than opaque strings, so strategy code can pattern-match on them.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// Atom identifier for relation-algebra atom structures.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum AtomName {
    /// The identity atom 1'.
    Id,
    /// Green atom g_0^index.
    Green { index: u32 },
    /// Red atom r_index.
    Red { index: u32 },
    /// Copy `copy` of the split red r^copy(index).
    RedCopy { index: u32, copy: u32 },
    /// Yellow atom y(index).
    Yellow { index: u32 },
    /// Blue atom b(index).
    Blue { index: u32 },
    /// Escape hatch for structures loaded from files or enumerated abstractly.
    Named(String),
}

impl fmt::Display for AtomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AtomName::Id => write!(f, "1'"),
            AtomName::Green { index } => write!(f, "g0^{index}"),
            AtomName::Red { index } => write!(f, "r({index})"),
            AtomName::RedCopy { index, copy } => write!(f, "r^{copy}({index})"),
            AtomName::Yellow { index } => write!(f, "y({index})"),
            AtomName::Blue { index } => write!(f, "b({index})"),
            AtomName::Named(s) => write!(f, "{s}"),
        }
    }
}

/// Yellow shade carried by a white edge: the set of cone tints the underlying
/// (n-1)-tuple admits, truncated to the palette {empty, singleton, full}.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum Shade {
    /// No cone tint admitted.
    Empty,
    /// Exactly one admitted tint.
    Tint(i64),
    /// Every tint admitted.
    Full,
}

impl Shade {
    /// Whether a cone with tint `t` may be based on a tuple with this shade.
    pub fn admits(&self, t: i64) -> bool {
        match self {
            Shade::Empty => false,
            Shade::Tint(s) => *s == t,
            Shade::Full => true,
        }
    }
}

/// Edge colour of a rainbow coloured graph.
///
/// Reds are ordered pairs (the red index set is a complete irreflexive graph);
/// the stored label is oriented from the lower endpoint to the higher one and
/// `mirror` gives the opposite orientation. All other colours are symmetric.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum EdgeColour {
    /// g_i for 1 <= i <= n-2: the edge from a cone apex to the i-th base node.
    TintGreen(u8),
    /// g_0^t: the edge from a cone apex to the 0-th base node, carrying tint t.
    Green(i64),
    /// w_i with the fused yellow shade of the pair.
    White(u8, Shade),
    /// r_{a,b} with a != b, oriented.
    Red(u32, u32),
}

impl EdgeColour {
    pub fn is_green(&self) -> bool {
        matches!(self, EdgeColour::TintGreen(_) | EdgeColour::Green(_))
    }

    pub fn is_red(&self) -> bool {
        matches!(self, EdgeColour::Red(_, _))
    }

    /// The same colour seen from the opposite endpoint.
    pub fn mirror(&self) -> EdgeColour {
        match *self {
            EdgeColour::Red(a, b) => EdgeColour::Red(b, a),
            c => c,
        }
    }
}

/// A coloured-graph atom of a rainbow cylindric atom structure: a surjection
/// from the coordinate set onto a coloured graph, stored as the kernel
/// partition plus edge labels between kernel classes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct GraphAtom {
    /// Kernel class of each coordinate, normalized so class ids appear in
    /// order of first occurrence (e.g. [0,0,1]).
    pub coord_class: Vec<u8>,
    /// Edge label for each class pair (a,b) with a < b, oriented a -> b.
    /// Serialized as an entry list because JSON keys must be strings.
    #[serde(with = "edge_map")]
    pub edges: BTreeMap<(u8, u8), EdgeColour>,
}

mod edge_map {
    use super::EdgeColour;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};
    use std::collections::BTreeMap;

    pub fn serialize<S: Serializer>(
        m: &BTreeMap<(u8, u8), EdgeColour>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        m.iter().map(|(&(a, b), &c)| (a, b, c)).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> Result<BTreeMap<(u8, u8), EdgeColour>, D::Error> {
        let entries = Vec::<(u8, u8, EdgeColour)>::deserialize(d)?;
        Ok(entries.into_iter().map(|(a, b, c)| ((a, b), c)).collect())
    }
}

impl GraphAtom {
    /// Number of distinct kernel classes (graph nodes).
    pub fn class_count(&self) -> usize {
        self.coord_class.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Edge label between two distinct classes, oriented a -> b.
    pub fn edge(&self, a: u8, b: u8) -> EdgeColour {
        debug_assert_ne!(a, b);
        if a < b {
            self.edges[&(a, b)]
        } else {
            self.edges[&(b, a)].mirror()
        }
    }
}

/// Atom identifier for cylindric-algebra atom structures.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub enum CaAtomName {
    /// A point tuple of a full set-algebra dual over a small base.
    Tuple(Vec<u8>),
    /// A rainbow coloured-graph atom.
    Graph(GraphAtom),
    /// Copy `1` of a split (blown-up) coloured-graph atom.
    GraphCopy(GraphAtom, u32),
    /// Escape hatch for structures loaded from files.
    Named(String),
}
