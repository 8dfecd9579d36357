use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Elem, FiniteGroup, Subgroup};
use crate::bitset::BitSet;
use crate::cache;
use crate::error::{Error, Result};

/// All subgroups of some group, in canonical order, with lookup by element set.
#[derive(Clone, Debug)]
pub struct Lattice {
    subgroups: Vec<Subgroup>,
    lookup: BTreeMap<BitSet, usize>,
}

impl Lattice {
    pub fn new(mut subgroups: Vec<Subgroup>) -> Self {
        subgroups.sort();
        subgroups.dedup();
        let lookup = subgroups
            .iter()
            .enumerate()
            .map(|(i, h)| (h.bits().clone(), i))
            .collect();
        Lattice { subgroups, lookup }
    }

    pub fn len(&self) -> usize {
        self.subgroups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subgroups.is_empty()
    }

    pub fn get(&self, i: usize) -> &Subgroup {
        &self.subgroups[i]
    }

    pub fn subgroups(&self) -> &[Subgroup] {
        &self.subgroups
    }

    pub fn id(&self, h: &Subgroup) -> Option<usize> {
        self.lookup.get(h.bits()).copied()
    }

    pub fn id_of_bits(&self, bits: &BitSet) -> Option<usize> {
        self.lookup.get(bits).copied()
    }

    /// The sub-lattice of subgroups contained in `top`.
    pub fn below(&self, top: &Subgroup) -> Lattice {
        Lattice::new(
            self.subgroups
                .iter()
                .filter(|h| h.is_subgroup_of(top))
                .cloned()
                .collect(),
        )
    }

    /// Ids of the subgroups contained in subgroup `i`, including `i`.
    pub fn ids_below(&self, i: usize) -> Vec<usize> {
        let top = &self.subgroups[i];
        (0..self.subgroups.len())
            .filter(|&j| self.subgroups[j].is_subgroup_of(top))
            .collect()
    }
}

impl FiniteGroup {
    /// Every subgroup of `within`, each exactly once, in canonical order.
    ///
    /// Each subgroup is generated by its cyclic subgroups, so starting from
    /// the cyclic ones and repeatedly joining one more cyclic subgroup
    /// reaches all of them.
    pub fn all_subgroups(&self, within: &Subgroup) -> Result<Vec<Subgroup>> {
        if within.order() > self.limits.max_lattice_order {
            return Err(Error::CapExceeded {
                what: "subgroup lattice order",
                limit: self.limits.max_lattice_order,
            });
        }
        let key = self.cache().map(|_| {
            let perms: Vec<_> = within.elements().iter().map(|&e| self.perm(e)).collect();
            cache::key_for(b"lattice", &perms)
        });
        if let (Some(store), Some(key)) = (self.cache(), key.as_ref()) {
            if let Some(found) = store
                .load(key)
                .and_then(|bytes| self.decode_lattice(within, &bytes))
            {
                return Ok(found);
            }
        }
        let subgroups = self.enumerate_subgroups(within);
        if let (Some(store), Some(key)) = (self.cache(), key.as_ref()) {
            let lists: Vec<Vec<u32>> = subgroups
                .iter()
                .map(|h| {
                    h.elements()
                        .iter()
                        .map(|&e| within.position(e).expect("subgroup of within") as u32)
                        .collect()
                })
                .collect();
            store.store(key, &cache::encode_lists(&lists));
        }
        Ok(subgroups)
    }

    pub fn lattice(&self, within: &Subgroup) -> Result<Lattice> {
        Ok(Lattice::new(self.all_subgroups(within)?))
    }

    fn decode_lattice(&self, within: &Subgroup, bytes: &[u8]) -> Option<Vec<Subgroup>> {
        let lists = cache::decode_lists(bytes)?;
        let mut out = Vec::with_capacity(lists.len());
        for list in lists {
            let mut elems = Vec::with_capacity(list.len());
            for pos in list {
                elems.push(*within.elements().get(pos as usize)?);
            }
            if !elems.windows(2).all(|w| w[0] < w[1]) || elems.first() != Some(&0) {
                return None;
            }
            out.push(Subgroup::from_sorted(elems, self.order()));
        }
        out.windows(2).all(|w| w[0] < w[1]).then_some(out)
    }

    fn enumerate_subgroups(&self, within: &Subgroup) -> Vec<Subgroup> {
        let mut cyclic: BTreeMap<BitSet, Elem> = BTreeMap::new();
        for &e in within.elements() {
            let c = self.closure([e]);
            cyclic.entry(c.bits().clone()).or_insert(e);
        }
        let cyclic: Vec<(Subgroup, Elem)> = cyclic
            .into_iter()
            .map(|(bits, e)| (Subgroup::from_bits(bits), e))
            .collect();

        let mut found: BTreeMap<BitSet, Vec<Elem>> = BTreeMap::new();
        let mut queue: Vec<(Subgroup, Vec<Elem>)> = Vec::new();
        for (c, e) in &cyclic {
            let gens = if *e == 0 { Vec::new() } else { alloc::vec![*e] };
            if found.insert(c.bits().clone(), gens.clone()).is_none() {
                queue.push((c.clone(), gens));
            }
        }
        while let Some((h, gens)) = queue.pop() {
            for (c, e) in &cyclic {
                if c.is_subgroup_of(&h) {
                    continue;
                }
                let mut next_gens = gens.clone();
                next_gens.push(*e);
                let j = self.closure(next_gens.iter().copied());
                if !found.contains_key(j.bits()) {
                    found.insert(j.bits().clone(), next_gens.clone());
                    queue.push((j, next_gens));
                }
            }
        }
        let mut out: Vec<Subgroup> = found.into_keys().map(Subgroup::from_bits).collect();
        out.sort();
        out
    }
}
