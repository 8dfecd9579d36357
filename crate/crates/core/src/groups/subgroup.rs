use alloc::vec::Vec;
use core::cmp::Ordering;

use super::Elem;
use crate::bitset::BitSet;

/// A subgroup of an ambient [`FiniteGroup`](super::FiniteGroup), stored as
/// its sorted element indices. Ordering is lexicographic on that list.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subgroup {
    elems: Vec<Elem>,
    bits: BitSet,
}

impl Subgroup {
    pub(crate) fn from_sorted(elems: Vec<Elem>, capacity: usize) -> Self {
        let bits = BitSet::from_indices(capacity, elems.iter().map(|&e| e as usize));
        Subgroup { elems, bits }
    }

    pub(crate) fn from_bits(bits: BitSet) -> Self {
        Subgroup {
            elems: bits.iter().map(|e| e as Elem).collect(),
            bits,
        }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elems.len() == 1
    }

    #[inline]
    pub fn contains(&self, e: Elem) -> bool {
        self.bits.contains(e as usize)
    }

    pub fn elements(&self) -> &[Elem] {
        &self.elems
    }

    pub fn bits(&self) -> &BitSet {
        &self.bits
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elems.len() <= other.elems.len() && self.bits.is_subset(&other.bits)
    }

    /// Position of `e` in the sorted element list.
    #[inline]
    pub fn position(&self, e: Elem) -> Option<usize> {
        self.elems.binary_search(&e).ok()
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits(self.bits.intersection(&other.bits))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems.cmp(&other.elems)
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
