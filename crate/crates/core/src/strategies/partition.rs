//! The existential player's partition-matching book for pebble games
//! between complex algebras of two split structures that differ only in
//! how many parts the designated split atom was divided into.
//!
//! Pebbled elements are atom sets. Atoms outside the split element must be
//! pebbled identically on both sides; the copies of the split element are
//! partitioned by their membership signature across the pebbles in play,
//! and matching cells must have equal size or both be at least the number
//! of rounds remaining (the finite analogue of the source's "p_i is
//! finite iff q_i is finite and, in this case, |p_i| = |q_i|", with large
//! cells standing in for the infinite ones).

use crate::atom::AtomName;
use crate::atomset::AtomSet;
use crate::ra::RaAtomStructure;
use crate::strategies::StrategyError;

/// The book: the two structures' split-copy atom indices and the pebble
/// pairs played so far.
#[derive(Clone, Debug)]
pub struct PartitionBook<'a> {
    left: &'a RaAtomStructure,
    right: &'a RaAtomStructure,
    left_copies: Vec<usize>,
    right_copies: Vec<usize>,
    /// Pebble pairs (left element, right element).
    pairs: Vec<(AtomSet, AtomSet)>,
}

fn split_copies(s: &RaAtomStructure) -> Vec<usize> {
    (0..s.atom_count())
        .filter(|&a| matches!(s.name(a), AtomName::RedCopy { .. }))
        .collect()
}

/// Map a non-copy atom of one structure to the same-named atom of the
/// other.
fn mirror_atom(from: &RaAtomStructure, to: &RaAtomStructure, a: usize) -> Option<usize> {
    to.atom_index(from.name(a))
}

impl<'a> PartitionBook<'a> {
    /// An empty book over the two structures. Both must carry their split
    /// copies as `RedCopy` atoms and agree on all other atom names.
    pub fn new(left: &'a RaAtomStructure, right: &'a RaAtomStructure) -> Result<Self, StrategyError> {
        let left_copies = split_copies(left);
        let right_copies = split_copies(right);
        for a in 0..left.atom_count() {
            if !matches!(left.name(a), AtomName::RedCopy { .. })
                && mirror_atom(left, right, a).is_none()
            {
                return Err(StrategyError::NoMatch(format!(
                    "atom {} of the left structure has no right counterpart",
                    left.name(a)
                )));
            }
        }
        Ok(PartitionBook { left, right, left_copies, right_copies, pairs: Vec::new() })
    }

    pub fn pairs(&self) -> &[(AtomSet, AtomSet)] {
        &self.pairs
    }

    /// Membership signature of a copy atom across one side's pebbles.
    fn signature(pebbles: &[AtomSet], atom: usize) -> Vec<bool> {
        pebbles.iter().map(|p| p.contains(atom)).collect()
    }

    /// Check the matched-atom law and the cell-cardinality law with
    /// threshold `t` (rounds remaining).
    pub fn check_invariants(&self, t: usize) -> Result<(), StrategyError> {
        for (l, r) in &self.pairs {
            for a in 0..self.left.atom_count() {
                if self.left_copies.contains(&a) {
                    continue;
                }
                let b = mirror_atom(self.left, self.right, a).unwrap();
                if l.contains(a) != r.contains(b) {
                    return Err(StrategyError::Invariant {
                        trace: format!(
                            "matched-atom law broken at {}",
                            self.left.name(a)
                        ),
                    });
                }
            }
        }
        let lefts: Vec<AtomSet> = self.pairs.iter().map(|(l, _)| l.clone()).collect();
        let rights: Vec<AtomSet> = self.pairs.iter().map(|(_, r)| r.clone()).collect();
        let mut cells: std::collections::BTreeMap<Vec<bool>, (usize, usize)> = Default::default();
        for &a in &self.left_copies {
            cells.entry(Self::signature(&lefts, a)).or_default().0 += 1;
        }
        for &b in &self.right_copies {
            cells.entry(Self::signature(&rights, b)).or_default().1 += 1;
        }
        for (sig, (p, q)) in cells {
            if p != q && (p < t || q < t) {
                return Err(StrategyError::Invariant {
                    trace: format!("cell {sig:?} has sizes {p} vs {q} below threshold {t}"),
                });
            }
        }
        Ok(())
    }
}

/// The scripted response to a universal pebble placement. `on_left` says
/// which side the universal player played on; `element` is the played
/// atom set; `remaining` is the number of rounds left after this one.
/// Returns the partner element and the updated book.
pub fn exists_ef_partition_move<'a>(
    book: &PartitionBook<'a>,
    on_left: bool,
    element: &AtomSet,
    remaining: usize,
) -> Result<(AtomSet, PartitionBook<'a>), StrategyError> {
    let (src, dst, src_copies, dst_copies) = if on_left {
        (book.left, book.right, &book.left_copies, &book.right_copies)
    } else {
        (book.right, book.left, &book.right_copies, &book.left_copies)
    };
    let mut partner = AtomSet::empty(dst.atom_count());
    // Non-copy atoms mirror identically.
    for a in 0..src.atom_count() {
        if src_copies.contains(&a) {
            continue;
        }
        if element.contains(a) {
            let b = mirror_atom(src, dst, a).ok_or_else(|| {
                StrategyError::NoMatch(format!("no counterpart for {}", src.name(a)))
            })?;
            partner.insert(b);
        }
    }
    // Copies: solve the cardinality constraints cell by cell.
    let src_pebbles: Vec<&AtomSet> = book
        .pairs
        .iter()
        .map(|(l, r)| if on_left { l } else { r })
        .collect();
    let dst_pebbles: Vec<&AtomSet> = book
        .pairs
        .iter()
        .map(|(l, r)| if on_left { r } else { l })
        .collect();
    let sig_of = |pebbles: &[&AtomSet], atom: usize| -> Vec<bool> {
        pebbles.iter().map(|p| p.contains(atom)).collect()
    };
    let mut cells: std::collections::BTreeMap<Vec<bool>, (Vec<usize>, Vec<usize>)> =
        Default::default();
    for &a in src_copies {
        cells.entry(sig_of(&src_pebbles, a)).or_default().0.push(a);
    }
    for &b in dst_copies {
        cells.entry(sig_of(&dst_pebbles, b)).or_default().1.push(b);
    }
    let t = remaining;
    for (sig, (src_cell, dst_cell)) in cells {
        let k = src_cell.iter().filter(|&&a| element.contains(a)).count();
        let out = src_cell.len() - k;
        let size = dst_cell.len();
        // Choose k' so that k' matches k and size-k' matches out, where
        // "matches" means equal or both >= t.
        let matches = |a: usize, b: usize| a == b || (a >= t && b >= t);
        let candidate = if k < t {
            k
        } else if out < t {
            size.checked_sub(out).ok_or_else(|| {
                StrategyError::NoMatch(format!("cell {sig:?} too small: {size} < {out}"))
            })?
        } else {
            k.min(size.saturating_sub(t)).max(t)
        };
        if candidate > size || !matches(k, candidate) || !matches(out, size - candidate) {
            return Err(StrategyError::NoMatch(format!(
                "cell {sig:?}: cannot split {size} copies to match ({k}, {out}) at threshold {t}"
            )));
        }
        for &b in dst_cell.iter().take(candidate) {
            partner.insert(b);
        }
    }
    let mut next = book.clone();
    let pair = if on_left {
        (element.clone(), partner.clone())
    } else {
        (partner.clone(), element.clone())
    };
    next.pairs.push(pair);
    next.check_invariants(t)?;
    Ok((partner, next))
}
