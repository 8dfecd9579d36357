use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Elem, FiniteGroup, Subgroup};
use crate::cache;
use crate::error::{Error, Result};
use crate::perm::Perm;

/// `Aut(X)` for a subgroup `X`, as a permutation group on the positions of
/// `X`'s sorted element list. An automorphism `a` sends the element at
/// position `i` to the element at position `a(i)`.
#[derive(Debug)]
pub struct AutGroup {
    base: Subgroup,
    group: FiniteGroup,
}

impl AutGroup {
    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// The automorphism as an element of `Aut(X)`, if `auto` is one.
    pub fn element(&self, auto: &Perm) -> Option<Elem> {
        self.group.index_of(auto)
    }

    /// Subgroup of `Aut(X)` generated by the given automorphisms.
    pub fn generated_by<'a>(&self, autos: impl IntoIterator<Item = &'a Perm>) -> Option<Subgroup> {
        let mut gens = Vec::new();
        for a in autos {
            gens.push(self.element(a)?);
        }
        Some(self.group.closure(gens))
    }

    pub fn all(&self) -> Subgroup {
        self.group.whole()
    }

    pub fn identity_only(&self) -> Subgroup {
        self.group.trivial()
    }

    /// `K·Inn(X)`, a subgroup since `Inn(X)` is normal.
    pub fn with_inner(&self, k: &Subgroup, inner: &Subgroup) -> Subgroup {
        self.group.join(k, inner)
    }
}

/// A subgroup `K ≤ Aut(X)`. `Full` and `Trivial` need no enumeration of
/// `Aut(X)`, so they work for subgroups of any size.
#[derive(Clone, Debug)]
pub enum AutSubgroup {
    Full,
    Trivial,
    Explicit {
        aut: Arc<AutGroup>,
        members: Subgroup,
    },
}

impl AutSubgroup {
    pub fn contains(&self, auto: &Perm) -> bool {
        match self {
            AutSubgroup::Full => true,
            AutSubgroup::Trivial => auto.is_identity(),
            AutSubgroup::Explicit { aut, members } => {
                aut.element(auto).is_some_and(|e| members.contains(e))
            }
        }
    }

    /// The same subgroup, as an explicit subgroup of `aut`.
    pub fn resolve(&self, aut: &Arc<AutGroup>) -> Subgroup {
        match self {
            AutSubgroup::Full => aut.all(),
            AutSubgroup::Trivial => aut.identity_only(),
            AutSubgroup::Explicit { members, .. } => members.clone(),
        }
    }

    pub fn explicit(aut: &Arc<AutGroup>, members: Subgroup) -> Self {
        AutSubgroup::Explicit {
            aut: aut.clone(),
            members,
        }
    }
}

impl FiniteGroup {
    /// Every automorphism of `x`, found by backtracking over images of a
    /// generating set and keeping the assignments that extend to
    /// bijective homomorphisms.
    pub fn aut_group(&self, x: &Subgroup) -> Result<AutGroup> {
        if x.order() > self.limits().max_aut_base {
            return Err(Error::CapExceeded {
                what: "automorphism base order",
                limit: self.limits().max_aut_base,
            });
        }
        let key = self.cache().map(|_| {
            let perms: Vec<_> = x.elements().iter().map(|&e| self.perm(e)).collect();
            cache::key_for(b"aut", &perms)
        });
        let mut perms: Option<Vec<Perm>> = None;
        if let (Some(store), Some(key)) = (self.cache(), key.as_ref()) {
            perms = store
                .load(key)
                .and_then(|b| cache::decode_lists(&b))
                .and_then(|lists| {
                    let perms = lists
                        .into_iter()
                        .map(|l| {
                            Perm::from_images(l)
                                .ok()
                                .filter(|p| p.degree() == x.order())
                        })
                        .collect::<Option<Vec<_>>>()?;
                    (!perms.is_empty() && perms.windows(2).all(|w| w[0] < w[1])).then_some(perms)
                });
        }
        let perms = match perms {
            Some(p) => p,
            None => {
                let found = self.enumerate_automorphisms(x)?;
                if let (Some(store), Some(key)) = (self.cache(), key.as_ref()) {
                    let lists: Vec<Vec<u32>> = found.iter().map(|p| p.images().to_vec()).collect();
                    store.store(key, &cache::encode_lists(&lists));
                }
                found
            }
        };
        let mut group = FiniteGroup::from_sorted_elements(perms, self.limits());
        if let Some(c) = self.cache() {
            group = group.with_cache(c.clone());
        }
        Ok(AutGroup {
            base: x.clone(),
            group,
        })
    }

    /// `Inn(X)` as a subgroup of `aut`.
    pub fn inn_group(&self, aut: &AutGroup) -> Subgroup {
        let x = aut.base();
        let gens = self.generating_set(x).into_iter().map(|g| {
            aut.element(&self.conjugation_on(x, g))
                .expect("inner maps are automorphisms")
        });
        aut.group().closure(gens)
    }

    fn enumerate_automorphisms(&self, x: &Subgroup) -> Result<Vec<Perm>> {
        let gens = self.generating_set(x);
        let mut found = BTreeSet::new();
        let mut images = Vec::with_capacity(gens.len());
        self.extend_assignment(x, &gens, &mut images, &mut found)?;
        Ok(found.into_iter().collect())
    }

    fn extend_assignment(
        &self,
        x: &Subgroup,
        gens: &[Elem],
        images: &mut Vec<Elem>,
        found: &mut BTreeSet<Perm>,
    ) -> Result<()> {
        let level = images.len();
        if level == gens.len() {
            if let Some(map) = self.extend_to_hom(x, gens, images) {
                if map.len() == x.order() {
                    let positions = map
                        .iter()
                        .map(|&e| x.position(e).expect("images lie in X") as u32)
                        .collect();
                    found.insert(Perm::from_images(positions)?);
                    if found.len() > self.limits().max_elements {
                        return Err(Error::CapExceeded {
                            what: "automorphism group order",
                            limit: self.limits().max_elements,
                        });
                    }
                }
            }
            return Ok(());
        }
        let target_order = self.element_order(gens[level]);
        for &y in x.elements() {
            if self.element_order(y) != target_order {
                continue;
            }
            images.push(y);
            if self.extend_to_hom(x, &gens[..=level], images).is_some() {
                self.extend_assignment(x, gens, images, found)?;
            }
            images.pop();
        }
        Ok(())
    }

    /// Extends `gens[i] -> images[i]` along the Cayley graph of `<gens>`.
    /// Returns the images of the elements of `<gens>` (in sorted order) if
    /// the assignment is a well-defined injective homomorphism.
    fn extend_to_hom(&self, x: &Subgroup, gens: &[Elem], images: &[Elem]) -> Option<Vec<Elem>> {
        const UNSET: Elem = Elem::MAX;
        let mut map = alloc::vec![UNSET; x.order()];
        let mut used = crate::bitset::BitSet::new(x.order());
        map[0] = 0;
        used.insert(0);
        let mut queue = alloc::vec![0 as Elem];
        while let Some(a) = queue.pop() {
            let fa = map[x.position(a)?];
            for (&g, &img) in gens.iter().zip(images) {
                let b = self.mul(a, g);
                let fb = self.mul(fa, img);
                let pb = x.position(b)?;
                if map[pb] == UNSET {
                    if !used.insert(x.position(fb)?) {
                        return None;
                    }
                    map[pb] = fb;
                    queue.push(b);
                } else if map[pb] != fb {
                    return None;
                }
            }
        }
        let domain: Vec<Elem> = x
            .elements()
            .iter()
            .zip(&map)
            .filter(|(_, &m)| m != UNSET)
            .map(|(_, &m)| m)
            .collect();
        Some(domain)
    }
}
