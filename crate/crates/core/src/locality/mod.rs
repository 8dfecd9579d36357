//! Objective partial groups inside an ambient finite group.
//!
//! A [`Locality`] is given by an element set `L`, a base `p`-subgroup `S`
//! and a set `Δ` of subgroups of `S` (the objects). A word
//! `w = (g_1, …, g_n)` over `L` lies in the domain `D` iff there are
//! `P_0, …, P_n ∈ Δ` with `P_{i-1}^{g_i} = P_i`. Taking
//! `S_w = {s ∈ S : s^{g_1⋯g_i} ∈ S for all i}`, this happens iff `S_w` and
//! all of its successive conjugates are objects, since `Δ` is closed under
//! overgroups. The product of a word is its product in the ambient group,
//! inversion is group inversion, and the unit is the identity.
//!
//! Restrictions `H|_Γ` are localities of the same shape with a smaller
//! element set, a smaller base `R` and objects `Γ`.

mod partial;
mod restrict;
mod verify;

pub use partial::PartialSubgroup;
pub use restrict::k_subnormal_in_k_inn;
pub use verify::{AxiomCheck, AxiomReport, WordFragment};

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup, Lattice, Subgroup};

#[derive(Clone, Debug)]
pub struct Locality {
    group: Arc<FiniteGroup>,
    p: u32,
    elements: BitSet,
    base: Subgroup,
    lattice: Lattice,
    objects: BitSet,
    s_f: Vec<Option<Subgroup>>,
    /// First `f` whose `S_f` came out as a non-subgroup (possible only for
    /// data built with [`Locality::from_raw`]).
    malformed_s_f: Option<Elem>,
    /// Every subgroup of the base is an object, so `D` is all words over `L`.
    all_objects: bool,
}

impl PartialEq for Locality {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.elements == other.elements
            && self.base == other.base
            && self.objects == other.objects
    }
}

impl Eq for Locality {}

impl Locality {
    /// `L_Δ(G) = {g ∈ G : S ∩ S^{g⁻¹} ∈ Δ}`. `Δ` must be closed under
    /// overgroups in `S` and under `G`-conjugation inside `S`.
    pub fn build_group_locality(
        group: &Arc<FiniteGroup>,
        s: &Subgroup,
        p: u32,
        delta: &[Subgroup],
    ) -> Result<Self> {
        if !group.is_sylow(s, &group.whole(), p) {
            return Err(Error::NotSylow);
        }
        let lattice = group.lattice(s)?;
        let objects = object_bits(&lattice, delta)?;
        for i in objects.iter() {
            let pi = lattice.get(i);
            for j in 0..lattice.len() {
                if !objects.contains(j) && pi.is_subgroup_of(lattice.get(j)) {
                    return Err(Error::DeltaNotClosed(format!(
                        "overgroup of order {} of an object of order {} is missing",
                        lattice.get(j).order(),
                        pi.order()
                    )));
                }
            }
            for g in 0..group.order() as Elem {
                let c = group.conjugate_subgroup(pi, g);
                if let Some(j) = lattice.id(&c) {
                    if !objects.contains(j) {
                        return Err(Error::DeltaNotClosed(format!(
                            "{} conjugates an object of order {} out of Δ",
                            group.perm(g),
                            pi.order()
                        )));
                    }
                }
            }
        }
        let mut elements = BitSet::new(group.order());
        for g in 0..group.order() as Elem {
            let sg = s_cap_conjugate(group, s, g);
            if objects.contains(lattice.id(&sg).expect("S ∩ S^g ≤ S")) {
                elements.insert(g as usize);
            }
        }
        Ok(Self::assemble(
            group.clone(),
            p,
            elements,
            s.clone(),
            lattice,
            objects,
        ))
    }

    /// A locality-shaped structure with no closure checks, for feeding
    /// arbitrary data to the verifier.
    pub fn from_raw(
        group: &Arc<FiniteGroup>,
        p: u32,
        elements: BitSet,
        base: &Subgroup,
        objects: &[Subgroup],
    ) -> Result<Self> {
        let lattice = group.lattice(base)?;
        let objects = object_bits(&lattice, objects)?;
        Ok(Self::assemble(
            group.clone(),
            p,
            elements,
            base.clone(),
            lattice,
            objects,
        ))
    }

    pub(crate) fn assemble(
        group: Arc<FiniteGroup>,
        p: u32,
        elements: BitSet,
        base: Subgroup,
        lattice: Lattice,
        objects: BitSet,
    ) -> Self {
        let mut l = Locality {
            group,
            p,
            elements,
            base,
            lattice,
            objects,
            s_f: Vec::new(),
            malformed_s_f: None,
            all_objects: false,
        };
        l.all_objects = l.objects.count() == l.lattice.len();
        let mut table = Vec::with_capacity(l.group.order());
        for f in 0..l.group.order() as Elem {
            if !l.contains(f) {
                table.push(None);
                continue;
            }
            let elems = l.compute_s_f(f);
            let sub = match l.group.subgroup_from_elements(elems.iter().copied()) {
                Ok(sub) => sub,
                Err(_) => {
                    l.malformed_s_f.get_or_insert(f);
                    l.group.closure(elems)
                }
            };
            table.push(Some(sub));
        }
        l.s_f = table;
        l
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn size(&self) -> usize {
        self.elements.count()
    }

    pub fn elements(&self) -> &BitSet {
        &self.elements
    }

    pub fn element_list(&self) -> Vec<Elem> {
        self.elements.iter().map(|e| e as Elem).collect()
    }

    pub fn contains(&self, f: Elem) -> bool {
        self.elements.contains(f as usize)
    }

    /// The base `p`-subgroup (`S`, or `R` for a restriction).
    pub fn base(&self) -> &Subgroup {
        &self.base
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn objects(&self) -> Vec<Subgroup> {
        self.objects
            .iter()
            .map(|i| self.lattice.get(i).clone())
            .collect()
    }

    pub fn is_object(&self, p: &Subgroup) -> bool {
        self.lattice.id(p).is_some_and(|i| self.objects.contains(i))
    }

    pub fn unit(&self) -> Elem {
        self.group.identity()
    }

    pub fn inv(&self, f: Elem) -> Elem {
        self.group.inv(f)
    }

    /// `Π(w)`.
    pub fn product(&self, word: &[Elem]) -> Elem {
        self.group.product(word)
    }

    /// `S_w`, the elements of the base conjugated into the base by every
    /// prefix of `w`.
    pub fn s_w(&self, word: &[Elem]) -> Subgroup {
        let g = &*self.group;
        let elems = self
            .base
            .elements()
            .iter()
            .copied()
            .filter(|&s| {
                let mut x = s;
                word.iter().all(|&f| {
                    x = g.conj(x, f);
                    self.base.contains(x)
                })
            })
            .collect::<Vec<_>>();
        g.subgroup_from_elements(elems).expect("S_w is a subgroup")
    }

    /// `w ∈ D`.
    pub fn in_domain(&self, word: &[Elem]) -> bool {
        if !word.iter().all(|&f| self.contains(f)) {
            return false;
        }
        if self.all_objects {
            return true;
        }
        let mut current = self.s_w(word);
        if !self.is_object(&current) {
            return false;
        }
        for &f in word {
            current = self.group.conjugate_subgroup(&current, f);
            if !self.is_object(&current) {
                return false;
            }
        }
        true
    }

    /// `S_f = {s ∈ S : (f⁻¹, s, f) ∈ D and s^f ∈ S}`.
    ///
    /// # Panics
    /// If `f ∉ L`.
    pub fn s_f(&self, f: Elem) -> &Subgroup {
        self.s_f[f as usize]
            .as_ref()
            .expect("S_f is defined for f ∈ L")
    }

    pub(crate) fn malformed_s_f(&self) -> Option<Elem> {
        self.malformed_s_f
    }

    fn compute_s_f(&self, f: Elem) -> Vec<Elem> {
        let g = &*self.group;
        let fi = g.inv(f);
        self.base
            .elements()
            .iter()
            .copied()
            .filter(|&s| self.base.contains(g.conj(s, f)) && self.in_domain(&[fi, s, f]))
            .collect()
    }

    /// `N_L(P) = {f ∈ L : P ≤ S_f, P^f = P}`.
    pub fn normalizer(&self, p: &Subgroup) -> Subgroup {
        self.transporter(p, p)
    }

    /// `N_L(P, Q) = {f ∈ L : P ≤ S_f, P^f ≤ Q}` as a sorted list.
    pub fn transporter_set(&self, p: &Subgroup, q: &Subgroup) -> Vec<Elem> {
        let g = &*self.group;
        self.elements
            .iter()
            .map(|f| f as Elem)
            .filter(|&f| {
                p.elements().iter().all(|&x| q.contains(g.conj(x, f)))
                    && p.is_subgroup_of(self.s_f(f))
            })
            .collect()
    }

    fn transporter(&self, p: &Subgroup, q: &Subgroup) -> Subgroup {
        let elems = self.transporter_set(p, q);
        Subgroup::from_sorted(elems, self.group.order())
    }

    /// The whole element set as a partial subgroup.
    pub fn whole(&self) -> PartialSubgroup {
        PartialSubgroup::from_bits(self.elements.clone())
    }
}

fn object_bits(lattice: &Lattice, delta: &[Subgroup]) -> Result<BitSet> {
    let mut objects = BitSet::new(lattice.len());
    for d in delta {
        let id = lattice.id(d).ok_or_else(|| {
            Error::NotSubgroup(format!(
                "object of order {} is not a subgroup of the base",
                d.order()
            ))
        })?;
        objects.insert(id);
    }
    Ok(objects)
}

/// `S ∩ S^{g⁻¹} = {s ∈ S : s^g ∈ S}`.
pub(crate) fn s_cap_conjugate(group: &FiniteGroup, s: &Subgroup, g: Elem) -> Subgroup {
    let elems = s
        .elements()
        .iter()
        .copied()
        .filter(|&x| s.contains(group.conj(x, g)))
        .collect();
    Subgroup::from_sorted(elems, group.order())
}


#[cfg(test)]
mod tests {
    use super::testing::*;
    use super::*;
    use crate::groups::testing as gt;

    #[test]
    fn p_group_with_single_object() {
        let g = Arc::new(gt::d8());
        let s = g.whole();
        let l = Locality::build_group_locality(&g, &s, 2, std::slice::from_ref(&s)).unwrap();
        assert_eq!(l.size(), 8);
        assert_eq!(*l.s_f(3), s);
    }

    #[test]
    fn s4_locality_is_whole_group() {
        let (_, l) = s4_locality();
        assert_eq!(l.size(), 24);
        assert!(l.is_object(&l.group().trivial()));
    }

    #[test]
    fn large_objects_give_smaller_locality() {
        let (f, _) = s4_locality();
        let big: Vec<Subgroup> = f
            .lattice()
            .subgroups()
            .iter()
            .filter(|h| h.order() >= 4)
            .cloned()
            .collect();
        // any two Sylow 2-subgroups of S4 meet in the Klein four group
        let l = Locality::build_group_locality(f.group(), f.s(), 2, &big).unwrap();
        assert_eq!(l.size(), 24);
        let only_s = [f.s().clone()];
        let l = Locality::build_group_locality(f.group(), f.s(), 2, &only_s).unwrap();
        assert_eq!(l.size(), 8);
    }

    #[test]
    fn s_f_matches_intersection() {
        let (f, l) = s4_locality();
        let g = l.group().clone();
        for x in l.element_list() {
            assert_eq!(*l.s_f(x), s_cap_conjugate(&g, f.s(), x));
        }
        assert_eq!(l.s_f(l.unit()), f.s());
    }

    #[test]
    fn delta_must_be_overgroup_closed() {
        let (f, _) = s4_locality();
        let only_trivial = [f.group().trivial()];
        let err = Locality::build_group_locality(f.group(), f.s(), 2, &only_trivial);
        assert!(matches!(err, Err(Error::DeltaNotClosed(_))));
    }

    #[test]
    fn domain_with_all_objects_is_every_word() {
        let (_, l) = s4_locality();
        assert!(l.in_domain(&[1, 5, 7, 23]));
        assert!(l.in_domain(&[]));
    }
}
