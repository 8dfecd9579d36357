//! Fusion systems over a finite `p`-group, stored extensionally.
//!
//! For every subgroup `P ≤ S` the system keeps `Hom_F(P, S)` as a set of
//! image tables: a morphism on `P` is the list of images of `P`'s sorted
//! elements. `Hom_F(P, Q)` is the subset whose image lies in `Q`. Two
//! systems are equal iff they live over the same subgroup and have the
//! same hom-sets.
//!
//! Definitions delegated to the standard literature on fusion systems
//! (Aschbacher–Kessar–Oliver, Part I) are pinned here:
//!
//! * saturated: every fully normalized subgroup is fully automized and
//!   receptive (I.2.2, I.2.5);
//! * `Q ⊴ F`: `Q ⊴ S` and every morphism `φ: P → S` extends to
//!   `PQ → S` mapping `Q` onto itself (I.4.1); `O_p(F)` is the largest such;
//! * weakly normal `E ⊴ F` over `T`: `E` saturated, `T` strongly closed,
//!   `α E α⁻¹ = E` for `α ∈ Aut_F(T)`, and every `φ ∈ Hom_F(P, T)` factors as
//!   an `E`-morphism followed by some `α ∈ Aut_F(T)` (I.6.1);
//! * normal: weakly normal, and each `α ∈ Aut_E(T)` extends to some
//!   `ᾱ ∈ Aut_F(T·C_S(T))` with `[ᾱ, C_S(T)] ≤ Z(T)` (I.6.1).

mod closure;
mod index;
mod normality;
mod saturation;
mod subsystems;

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::groups::{Elem, FiniteGroup, Lattice, Subgroup};
use crate::perm::Perm;

/// Images of a domain subgroup's sorted elements.
pub type Morphism = Vec<Elem>;

#[derive(Clone, Debug)]
pub struct FusionSystem {
    group: Arc<FiniteGroup>,
    p: u32,
    lattice: Lattice,
    top: usize,
    homs: Vec<BTreeSet<Morphism>>,
}

impl PartialEq for FusionSystem {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.s() == other.s() && self.homs == other.homs
    }
}

impl Eq for FusionSystem {}

impl FusionSystem {
    pub(crate) fn from_parts(
        group: Arc<FiniteGroup>,
        p: u32,
        lattice: Lattice,
        homs: Vec<BTreeSet<Morphism>>,
    ) -> Self {
        let top = (0..lattice.len())
            .max_by_key(|&i| (lattice.get(i).order(), core::cmp::Reverse(i)))
            .expect("lattice contains the whole group");
        FusionSystem {
            group,
            p,
            lattice,
            top,
            homs,
        }
    }

    /// `F_S(H)` for `S ∈ Syl_p(H)`: morphisms are the conjugations `c_h|_P`
    /// with `P^h ≤ S`.
    pub fn of_group(
        group: &Arc<FiniteGroup>,
        within: &Subgroup,
        s: &Subgroup,
        p: u32,
    ) -> Result<Self> {
        if !group.is_sylow(s, within, p) {
            return Err(Error::NotSylow);
        }
        let lattice = group.lattice(s)?;
        let mut homs = alloc::vec![BTreeSet::new(); lattice.len()];
        for (i, sub) in lattice.subgroups().iter().enumerate() {
            for &h in within.elements() {
                let images: Morphism = sub.elements().iter().map(|&x| group.conj(x, h)).collect();
                if images.iter().all(|&y| s.contains(y)) {
                    homs[i].insert(images);
                }
            }
        }
        Ok(Self::from_parts(group.clone(), p, lattice, homs))
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    /// The underlying `p`-group.
    pub fn s(&self) -> &Subgroup {
        self.lattice.get(self.top)
    }

    pub fn s_id(&self) -> usize {
        self.top
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn subgroup(&self, id: usize) -> &Subgroup {
        self.lattice.get(id)
    }

    pub fn id(&self, h: &Subgroup) -> Option<usize> {
        self.lattice.id(h)
    }

    /// `Hom_F(P, S)`.
    pub fn homs(&self, id: usize) -> &BTreeSet<Morphism> {
        &self.homs[id]
    }

    pub fn morphism_count(&self) -> usize {
        self.homs.iter().map(|h| h.len()).sum()
    }

    pub fn contains(&self, domain: &Subgroup, m: &Morphism) -> bool {
        self.id(domain).is_some_and(|i| self.homs[i].contains(m))
    }

    pub fn image_bits(&self, m: &Morphism) -> BitSet {
        BitSet::from_indices(self.group.order(), m.iter().map(|&e| e as usize))
    }

    pub fn image_id(&self, m: &Morphism) -> usize {
        self.lattice
            .id_of_bits(&self.image_bits(m))
            .expect("images of morphisms are subgroups of S")
    }

    /// `m|_Q` for `Q ≤ P`.
    pub fn restrict(&self, from: usize, m: &Morphism, to: usize) -> Morphism {
        restrict_to(self.subgroup(from), m, self.subgroup(to))
    }

    /// `a` followed by `b`, where `b` is defined on the image of `a`.
    pub fn compose(&self, a: &Morphism, b_domain: usize, b: &Morphism) -> Morphism {
        let q = self.subgroup(b_domain);
        a.iter()
            .map(|&y| b[q.position(y).expect("composable morphisms")])
            .collect()
    }

    /// Inverse of the isomorphism `m: P → Pm`, returned with its domain id.
    pub fn inverse(&self, from: usize, m: &Morphism) -> (usize, Morphism) {
        let img = self.image_id(m);
        let q = self.subgroup(img);
        let mut inv = alloc::vec![0; m.len()];
        for (x, &y) in self.subgroup(from).elements().iter().zip(m) {
            inv[q.position(y).expect("image in Q")] = *x;
        }
        (img, inv)
    }

    /// `Aut_F(P)` as morphisms.
    pub fn automorphisms(&self, id: usize) -> impl Iterator<Item = &Morphism> + '_ {
        let p = self.subgroup(id);
        self.homs[id]
            .iter()
            .filter(move |m| m.iter().all(|&y| p.contains(y)))
    }

    /// An automorphism of `P` as a permutation of `P`'s positions.
    pub fn to_perm(&self, id: usize, m: &Morphism) -> Perm {
        morphism_to_perm(self.subgroup(id), m)
    }

    pub fn from_perm(&self, id: usize, perm: &Perm) -> Morphism {
        let p = self.subgroup(id);
        perm.images()
            .iter()
            .map(|&i| p.elements()[i as usize])
            .collect()
    }

    /// `Aut_F(P)` as a permutation group on `P`'s positions.
    pub fn aut_f(&self, id: usize) -> FiniteGroup {
        let mut perms: Vec<Perm> = self
            .automorphisms(id)
            .map(|m| self.to_perm(id, m))
            .collect();
        perms.sort();
        FiniteGroup::from_sorted_elements(perms, self.group.limits())
    }

    /// `c_g|_P` for `g` normalizing `P`, or any `g` with `P^g ≤ S`.
    pub fn conjugation(&self, id: usize, g: Elem) -> Morphism {
        self.subgroup(id)
            .elements()
            .iter()
            .map(|&x| self.group.conj(x, g))
            .collect()
    }

    /// Images of `P` under `F`-morphisms: the `F`-conjugacy class.
    pub fn conjugates(&self, id: usize) -> BTreeSet<usize> {
        self.homs[id].iter().map(|m| self.image_id(m)).collect()
    }

    pub fn n_s(&self, id: usize) -> Subgroup {
        self.group.normalizer(self.s(), self.subgroup(id))
    }

    pub fn c_s(&self, id: usize) -> Subgroup {
        self.group.centralizer(self.s(), self.subgroup(id))
    }

    /// Is there `ψ ∈ Hom_F(Q, S)` with `ψ|_P = m` satisfying `extra`?
    pub fn extends(
        &self,
        p_id: usize,
        m: &Morphism,
        q_id: usize,
        mut extra: impl FnMut(&Morphism) -> bool,
    ) -> bool {
        let p = self.subgroup(p_id);
        let q = self.subgroup(q_id);
        let positions: Vec<usize> = p
            .elements()
            .iter()
            .map(|&x| q.position(x).expect("P ≤ Q"))
            .collect();
        self.homs[q_id]
            .iter()
            .any(|psi| positions.iter().zip(m).all(|(&i, &y)| psi[i] == y) && extra(psi))
    }

    /// Checks the fusion-system axioms on the stored hom-sets: injective
    /// homomorphisms, `Hom_S` included, closed under restriction,
    /// composition and inverses of isomorphisms.
    pub fn axiom_failure(&self) -> Option<alloc::string::String> {
        use alloc::format;
        let g = &*self.group;
        for (i, set) in self.homs.iter().enumerate() {
            let p = self.subgroup(i);
            for m in set {
                if m.len() != p.order() || !m.iter().all(|&y| self.s().contains(y)) {
                    return Some(format!("morphism on subgroup {i} has wrong shape"));
                }
                for (a, &x) in p.elements().iter().enumerate() {
                    for (b, &y) in p.elements().iter().enumerate() {
                        let xy = p.position(g.mul(x, y)).expect("closed");
                        if m[xy] != g.mul(m[a], m[b]) {
                            return Some(format!("morphism on subgroup {i} is not a homomorphism"));
                        }
                    }
                }
                let img = self.image_bits(m);
                if img.count() != p.order() || self.lattice.id_of_bits(&img).is_none() {
                    return Some(format!("morphism on subgroup {i} is not injective"));
                }
                let (j, inv) = self.inverse(i, m);
                if !self.homs[j].contains(&inv) {
                    return Some(format!("inverse of a morphism on subgroup {i} missing"));
                }
                for k in self.lattice.ids_below(i) {
                    if !self.homs[k].contains(&self.restrict(i, m, k)) {
                        return Some(format!("restriction of a morphism on {i} to {k} missing"));
                    }
                }
                for b in &self.homs[j] {
                    if !set.contains(&self.compose(m, j, b)) {
                        return Some(format!("composite through subgroup {j} missing"));
                    }
                }
            }
            for &s in self.s().elements() {
                let c = self.conjugation(i, s);
                if !set.contains(&c) {
                    return Some(format!("conjugation by an element of S missing on {i}"));
                }
            }
        }
        None
    }
}

pub(crate) fn restrict_to(from: &Subgroup, m: &Morphism, to: &Subgroup) -> Morphism {
    to.elements()
        .iter()
        .map(|&x| m[from.position(x).expect("restriction to a subgroup")])
        .collect()
}

pub(crate) fn morphism_to_perm(p: &Subgroup, m: &Morphism) -> Perm {
    let images = m
        .iter()
        .map(|&y| p.position(y).expect("automorphism of P") as u32)
        .collect();
    Perm::from_images(images).expect("automorphisms are bijections")
}
