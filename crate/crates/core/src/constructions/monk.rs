//! The Monk-style family: greens that may never form a triangle, reds that
//! may never form a monochromatic triangle. When greens outnumber what the
//! red palette can triangle-freely colour, a pigeonhole defeats the
//! existential player.

use crate::atom::AtomName;
use crate::error::AlgebraError;
use crate::ra::RaAtomStructure;

/// Parameters: number of greens and number of reds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonkParams {
    pub greens: u32,
    pub reds: u32,
}

/// Atoms: Id, g_0^i for i < greens, r_j for 1 <= j <= reds; all
/// self-converse. Forbidden triples: permutations of (Id, x, y) for x != y,
/// monochromatic red triangles (r_j, r_j, r_j), and every all-green triple.
pub fn monk_ra(p: MonkParams) -> Result<RaAtomStructure, AlgebraError> {
    if p.greens == 0 || p.reds == 0 {
        return Err(AlgebraError::InvalidStructure(
            "need at least one green and one red".into(),
        ));
    }
    let mut names = vec![AtomName::Id];
    for i in 0..p.greens {
        names.push(AtomName::Green { index: i });
    }
    for j in 1..=p.reds {
        names.push(AtomName::Red { index: j });
    }
    let n = names.len();
    let converse: Vec<u32> = (0..n as u32).collect();
    let green = |i: u32| 1 + i;
    let red = |j: u32| 1 + p.greens + (j - 1);

    let mut forbidden: Vec<[u32; 3]> = Vec::new();
    // Identity is a two-sided unit: Id;x contains only x.
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            if x != y {
                forbidden.push([0, x, y]);
            }
        }
    }
    for j in 1..=p.reds {
        forbidden.push([red(j), red(j), red(j)]);
    }
    for i in 0..p.greens {
        for i2 in 0..p.greens {
            for i3 in 0..p.greens {
                forbidden.push([green(i), green(i2), green(i3)]);
            }
        }
    }
    RaAtomStructure::new(names, [0usize], converse, forbidden)
}
