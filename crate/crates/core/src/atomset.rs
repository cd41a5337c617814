//! Fixed-width bitsets over atom indices.
//!
//! Elements of a finite complex algebra are sets of atoms; all Boolean
//! operations reduce to word-wise bit operations. The width (number of atoms)
//! is fixed per algebra and every operation checks it.

use serde::{Deserialize, Serialize};
use std::fmt;

/// A subset of the atoms of a fixed atom structure, as a bitset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AtomSet {
    /// Number of atoms of the ambient structure.
    width: u32,
    /// Bit i set iff atom i is a member; trailing bits always zero.
    words: Vec<u64>,
}

impl AtomSet {
    /// The empty set over `width` atoms.
    pub fn empty(width: usize) -> Self {
        AtomSet {
            width: width as u32,
            words: vec![0; width.div_ceil(64)],
        }
    }

    /// The full set over `width` atoms.
    pub fn full(width: usize) -> Self {
        let mut s = Self::empty(width);
        for i in 0..width {
            s.insert(i);
        }
        s
    }

    /// Singleton {atom}.
    pub fn singleton(width: usize, atom: usize) -> Self {
        let mut s = Self::empty(width);
        s.insert(atom);
        s
    }

    /// Build from an iterator of atom indices.
    pub fn from_iter(width: usize, atoms: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(width);
        for a in atoms {
            s.insert(a);
        }
        s
    }

    /// Number of atoms of the ambient structure.
    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn insert(&mut self, atom: usize) {
        debug_assert!(atom < self.width as usize);
        self.words[atom / 64] |= 1u64 << (atom % 64);
    }

    pub fn remove(&mut self, atom: usize) {
        debug_assert!(atom < self.width as usize);
        self.words[atom / 64] &= !(1u64 << (atom % 64));
    }

    pub fn contains(&self, atom: usize) -> bool {
        debug_assert!(atom < self.width as usize);
        self.words[atom / 64] & (1u64 << (atom % 64)) != 0
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Index of the least member, if any. (Named to avoid clashing with
    /// `Ord::min`, which method resolution would otherwise prefer.)
    pub fn min_member(&self) -> Option<usize> {
        for (wi, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(wi * 64 + w.trailing_zeros() as usize);
            }
        }
        None
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    None
                } else {
                    let b = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    fn check_width(&self, other: &Self) {
        assert_eq!(
            self.width, other.width,
            "atom set width mismatch ({} vs {})",
            self.width, other.width
        );
    }

    pub fn union(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
        out
    }

    pub fn complement(&self) -> Self {
        let mut out = self.clone();
        for w in out.words.iter_mut() {
            *w = !*w;
        }
        out.clear_tail();
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.check_width(other);
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
        out
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &Self) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    fn clear_tail(&mut self) {
        let used = self.width as usize % 64;
        if used != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << used) - 1;
            }
        }
    }
}

impl fmt::Debug for AtomSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
