//! The split family: a base algebra with reds, yellows, and blues whose
//! red atom r(0) is split into alpha copies, all copies inheriting the
//! original's forbidden patterns.

use crate::atom::AtomName;
use crate::error::AlgebraError;
use crate::ra::RaAtomStructure;

/// Parameters: index bound (truncating the countable index set) and the
/// number of parts r(0) is split into.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitParams {
    pub index_bound: u32,
    pub alpha: u32,
}

/// Atoms: Id, r^k(0) for k < alpha, r(i) for 1 <= i < index_bound, y(i)
/// and b(i) for i < index_bound; all self-converse. Forbidden triples:
/// permutations of (Id, x, y) for x != y; (y(i), y(i), y(j)) and
/// (b(i), b(i), b(j)) for i <= j; (r(i), r(i), r(j)) for 0 < i <= j;
/// (r^k(0), r^l(0), r(j)) for 0 < j; (r^k(0), r^l(0), r^m(0)).
pub fn split_ra(p: SplitParams) -> Result<RaAtomStructure, AlgebraError> {
    if p.index_bound == 0 || p.alpha == 0 {
        return Err(AlgebraError::InvalidStructure(
            "index bound and alpha must be positive".into(),
        ));
    }
    let mut names = vec![AtomName::Id];
    for k in 0..p.alpha {
        names.push(AtomName::RedCopy { index: 0, copy: k });
    }
    for i in 1..p.index_bound {
        names.push(AtomName::Red { index: i });
    }
    for i in 0..p.index_bound {
        names.push(AtomName::Yellow { index: i });
    }
    for i in 0..p.index_bound {
        names.push(AtomName::Blue { index: i });
    }
    let n = names.len();
    let converse: Vec<u32> = (0..n as u32).collect();
    let red0 = |k: u32| 1 + k;
    let red = |i: u32| p.alpha + i; // valid for 1 <= i < index_bound
    let yellow = |i: u32| p.alpha + (p.index_bound - 1) + 1 + i;
    let blue = |i: u32| yellow(i) + p.index_bound;

    let mut forbidden: Vec<[u32; 3]> = Vec::new();
    for x in 0..n as u32 {
        for y in 0..n as u32 {
            if x != y {
                forbidden.push([0, x, y]);
            }
        }
    }
    for i in 0..p.index_bound {
        for j in i..p.index_bound {
            forbidden.push([yellow(i), yellow(i), yellow(j)]);
            forbidden.push([blue(i), blue(i), blue(j)]);
        }
    }
    for i in 1..p.index_bound {
        for j in i..p.index_bound {
            forbidden.push([red(i), red(i), red(j)]);
        }
    }
    for k in 0..p.alpha {
        for l in 0..p.alpha {
            for j in 1..p.index_bound {
                forbidden.push([red0(k), red0(l), red(j)]);
            }
            for m in 0..p.alpha {
                forbidden.push([red0(k), red0(l), red0(m)]);
            }
        }
    }
    RaAtomStructure::new(names, [0usize], converse, forbidden)
}
