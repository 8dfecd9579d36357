//! Permutation-group engine.
//!
//! A [`FiniteGroup`] enumerates all of its elements up front and sorts them
//! lexicographically by image list, so the identity is always element `0`
//! and every derived structure is canonically ordered. Algorithms take a
//! `within: &Subgroup` argument wherever they are applied to a subgroup of
//! the ambient group rather than the whole group.

mod aut;
mod lattice;
mod structure;
mod subgroup;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

pub use aut::{AutGroup, AutSubgroup};
pub use lattice::Lattice;
pub use structure::{p_part, Subnormality};
pub use subgroup::Subgroup;

use crate::bitset::BitSet;
use crate::cache::LatticeCache;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Index of an element in its group's canonical element list.
pub type Elem = u32;

/// Products are tabulated up to this order and computed on demand above it.
const TABLE_LIMIT: usize = 2048;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Limits {
    /// Largest group order `generate` will enumerate.
    pub max_elements: usize,
    /// Largest order whose full subgroup lattice may be enumerated.
    pub max_lattice_order: usize,
    /// Largest subgroup order whose automorphism group may be enumerated.
    pub max_aut_base: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_elements: 10_000,
            max_lattice_order: 400,
            max_aut_base: 64,
        }
    }
}

pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Elem>,
    elements: Vec<Perm>,
    table: Option<Vec<Elem>>,
    inverses: Vec<Elem>,
    orders: Vec<u32>,
    limits: Limits,
    cache: Option<Arc<dyn LatticeCache>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl FiniteGroup {
    /// Enumerates the group generated by `gens`.
    pub fn generate(gens: &[Perm], limits: Limits) -> Result<Self> {
        let first = gens.first().ok_or(Error::EmptyGenerators)?;
        let degree = first.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let identity = Perm::identity(degree);
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = x.then(g);
                if !seen.contains(&y) {
                    if seen.len() >= limits.max_elements {
                        return Err(Error::CapExceeded {
                            what: "group order",
                            limit: limits.max_elements,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut group = Self::from_sorted_elements(seen.into_iter().collect(), limits);
        group.generators = gens
            .iter()
            .map(|g| group.index_of(g).expect("generator lies in its closure"))
            .collect();
        Ok(group)
    }

    /// `elements` must be sorted, duplicate-free and closed under products.
    pub(crate) fn from_sorted_elements(elements: Vec<Perm>, limits: Limits) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let n = elements.len();
        let degree = elements[0].degree();
        let mut group = FiniteGroup {
            degree,
            generators: Vec::new(),
            elements,
            table: None,
            inverses: Vec::new(),
            orders: Vec::new(),
            limits,
            cache: None,
        };
        if n <= TABLE_LIMIT {
            let mut table = Vec::with_capacity(n * n);
            for a in &group.elements {
                for b in &group.elements {
                    table.push(group.index_of(&a.then(b)).expect("closed under products"));
                }
            }
            group.table = Some(table);
        }
        group.inverses = (0..n)
            .map(|i| {
                group
                    .index_of(&group.elements[i].inverse())
                    .expect("closed under inverses")
            })
            .collect();
        group.orders = (0..n as Elem)
            .map(|a| {
                let mut k = 1;
                let mut x = a;
                while x != 0 {
                    x = group.mul(x, a);
                    k += 1;
                }
                k
            })
            .collect();
        if group.generators.is_empty() {
            group.generators = group.generating_set(&group.whole());
        }
        group
    }

    pub fn with_cache(mut self, cache: Arc<dyn LatticeCache>) -> Self {
        self.cache = Some(cache);
        self
    }

    pub(crate) fn cache(&self) -> Option<&Arc<dyn LatticeCache>> {
        self.cache.as_ref()
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn perm(&self, a: Elem) -> &Perm {
        &self.elements[a as usize]
    }

    pub fn index_of(&self, p: &Perm) -> Option<Elem> {
        self.elements.binary_search(p).ok().map(|i| i as Elem)
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.table {
            Some(t) => t[a as usize * self.elements.len() + b as usize],
            None => self
                .index_of(&self.perm(a).then(self.perm(b)))
                .expect("closed under products"),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverses[a as usize]
    }

    /// `x^g = g^-1 x g`.
    #[inline]
    pub fn conj(&self, x: Elem, g: Elem) -> Elem {
        self.mul(self.mul(self.inv(g), x), g)
    }

    pub fn pow(&self, a: Elem, k: u32) -> Elem {
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    pub fn element_order(&self, a: Elem) -> u32 {
        self.orders[a as usize]
    }

    /// Product of a word, left to right.
    pub fn product(&self, word: &[Elem]) -> Elem {
        word.iter().fold(0, |acc, &g| self.mul(acc, g))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_sorted((0..self.order() as Elem).collect(), self.order())
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_sorted(alloc::vec![0], self.order())
    }

    /// Subgroup generated by `gens`.
    pub fn closure(&self, gens: impl IntoIterator<Item = Elem>) -> Subgroup {
        let gens: Vec<Elem> = gens.into_iter().filter(|&g| g != 0).collect();
        let mut bits = BitSet::new(self.order());
        bits.insert(0);
        let mut queue = alloc::vec![0 as Elem];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if bits.insert(y as usize) {
                    queue.push(y);
                }
            }
        }
        Subgroup::from_bits(bits)
    }

    /// Subgroup generated by a subgroup and extra elements.
    pub fn join_with(&self, h: &Subgroup, extra: &[Elem]) -> Subgroup {
        if extra.iter().all(|&e| h.contains(e)) {
            return h.clone();
        }
        let mut gens = self.generating_set(h);
        gens.extend_from_slice(extra);
        self.closure(gens)
    }

    pub fn join(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        if b.is_subgroup_of(a) {
            return a.clone();
        }
        if a.is_subgroup_of(b) {
            return b.clone();
        }
        let mut gens = self.generating_set(a);
        gens.extend(self.generating_set(b));
        self.closure(gens)
    }

    /// Validates that `elems` is a subgroup.
    pub fn subgroup_from_elements(
        &self,
        elems: impl IntoIterator<Item = Elem>,
    ) -> Result<Subgroup> {
        let bits = BitSet::from_indices(self.order(), elems.into_iter().map(|e| e as usize));
        self.subgroup_from_bits(bits)
    }

    pub fn subgroup_from_bits(&self, bits: BitSet) -> Result<Subgroup> {
        if !bits.contains(0) {
            return Err(Error::NotSubgroup(alloc::string::String::from(
                "identity missing",
            )));
        }
        let elems: Vec<Elem> = bits.iter().map(|e| e as Elem).collect();
        for &a in &elems {
            if !bits.contains(self.inv(a) as usize) {
                return Err(Error::NotSubgroup(alloc::format!(
                    "inverse of {} missing",
                    self.perm(a)
                )));
            }
            for &b in &elems {
                if !bits.contains(self.mul(a, b) as usize) {
                    return Err(Error::NotSubgroup(alloc::format!(
                        "product {}·{} missing",
                        self.perm(a),
                        self.perm(b)
                    )));
                }
            }
        }
        Ok(Subgroup::from_bits(bits))
    }

    /// Subgroup generated by permutations, which must be group elements.
    pub fn subgroup_generated_by(&self, gens: &[Perm]) -> Result<Subgroup> {
        let mut idx = Vec::with_capacity(gens.len());
        for g in gens {
            let g = if g.degree() < self.degree {
                g.padded(self.degree)?
            } else {
                g.clone()
            };
            idx.push(
                self.index_of(&g)
                    .ok_or_else(|| Error::NotAnElement(alloc::format!("{g}")))?,
            );
        }
        Ok(self.closure(idx))
    }

    /// Small generating set of `h`, preferring elements of large order.
    pub fn generating_set(&self, h: &Subgroup) -> Vec<Elem> {
        let mut candidates: Vec<Elem> = h.elements().iter().copied().filter(|&e| e != 0).collect();
        candidates.sort_by_key(|&e| (core::cmp::Reverse(self.element_order(e)), e));
        let mut gens = Vec::new();
        let mut current = self.trivial();
        for e in candidates {
            if current.order() == h.order() {
                break;
            }
            if !current.contains(e) {
                gens.push(e);
                current = self.closure(gens.iter().copied());
            }
        }
        gens
    }
}
