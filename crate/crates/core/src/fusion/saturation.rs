use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FusionSystem, Morphism};
use crate::groups::{p_part, AutSubgroup, Elem, Subgroup};
use crate::perm::Perm;

impl FusionSystem {
    /// `N_S^K(X) = {s ∈ N_S(X) : c_s|_X ∈ K}`.
    pub fn n_s_k(&self, x: usize, k: &AutSubgroup) -> Subgroup {
        self.group().k_normalizer(self.s(), self.subgroup(x), k)
    }

    /// `|N_S^{K^φ}(Xφ)|` for `φ: X → S`, where `K^φ = φ⁻¹Kφ`: an element
    /// `s ∈ N_S(Xφ)` counts iff `φ c_s φ⁻¹ ∈ K`.
    fn transported_k_count(&self, x: usize, phi: &Morphism, k: &AutSubgroup) -> usize {
        let g = self.group();
        let _ = x;
        let y = self.image_id(phi);
        let ys = self.subgroup(y);
        let mut back = alloc::vec![0u32; phi.len()];
        for (i, &img) in phi.iter().enumerate() {
            back[ys.position(img).expect("image")] = i as u32;
        }
        let n = g.normalizer(self.s(), ys);
        n.elements()
            .iter()
            .filter(|&&s| {
                let images: Vec<u32> = phi
                    .iter()
                    .map(|&img| back[ys.position(g.conj(img, s)).expect("normalizes")])
                    .collect();
                k.contains(&Perm::from_images(images).expect("bijection"))
            })
            .count()
    }

    /// `|N_S^K(X)| ≥ |N_S^{K^φ}(Xφ)|` for every `φ ∈ Hom_F(X, S)`.
    pub fn is_fully_k_normalized(&self, x: usize, k: &AutSubgroup) -> bool {
        let own = self.n_s_k(x, k).order();
        self.homs(x)
            .iter()
            .all(|phi| self.transported_k_count(x, phi, k) <= own)
    }

    pub fn is_fully_normalized(&self, id: usize) -> bool {
        let own = self.n_s(id).order();
        self.conjugates(id)
            .into_iter()
            .all(|q| self.n_s(q).order() <= own)
    }

    pub fn is_fully_centralized(&self, id: usize) -> bool {
        let own = self.c_s(id).order();
        self.conjugates(id)
            .into_iter()
            .all(|q| self.c_s(q).order() <= own)
    }

    /// First conjugate, in canonical order, maximizing `|N_S(·)|`.
    pub fn fully_normalized_rep(&self, id: usize) -> usize {
        let mut best = (0, usize::MAX);
        for q in self.conjugates(id) {
            let n = self.n_s(q).order();
            if n > best.0 {
                best = (n, q);
            }
        }
        best.1
    }

    /// `Aut_S(P)` as permutations of `P`'s positions.
    pub fn aut_s(&self, id: usize) -> BTreeSet<Perm> {
        let p = self.subgroup(id);
        self.n_s(id)
            .elements()
            .iter()
            .map(|&s| self.group().conjugation_on(p, s))
            .collect()
    }

    pub fn is_fully_automized(&self, id: usize) -> bool {
        let aut_f = self.automorphisms(id).count();
        self.aut_s(id).len() == p_part(aut_f, self.p())
    }

    /// `N_φ = {g ∈ N_S(Q) : φ⁻¹ c_g φ ∈ Aut_S(P)}` for `φ: Q → P`.
    pub fn n_phi(&self, q: usize, phi: &Morphism, aut_s_p: &BTreeSet<Perm>) -> Subgroup {
        let g = self.group();
        let qs = self.subgroup(q);
        let p = self.image_id(phi);
        let ps = self.subgroup(p);
        let mut back = alloc::vec![0usize; phi.len()];
        for (i, &y) in phi.iter().enumerate() {
            back[ps.position(y).expect("image")] = i;
        }
        let elems: Vec<Elem> = g
            .normalizer(self.s(), qs)
            .elements()
            .iter()
            .copied()
            .filter(|&s| {
                // y ↦ ((y φ⁻¹)^s) φ on positions of P
                let images: Vec<u32> = (0..ps.order())
                    .map(|j| {
                        let x = qs.elements()[back[j]];
                        let moved = qs.position(g.conj(x, s)).expect("normalizes Q");
                        ps.position(phi[moved]).expect("image") as u32
                    })
                    .collect();
                aut_s_p.contains(&Perm::from_images(images).expect("bijection"))
            })
            .collect();
        g.subgroup_from_elements(elems).expect("N_φ is a subgroup")
    }

    /// Receptive: every isomorphism onto `P` extends to its `N_φ`.
    pub fn receptive_failure(&self, id: usize) -> Option<String> {
        let aut_s_p = self.aut_s(id);
        for q in self.conjugates(id) {
            for phi in self.homs(q).iter().filter(|m| self.image_id(m) == id) {
                let n_phi = self.n_phi(q, phi, &aut_s_p);
                let nid = self.id(&n_phi).expect("N_φ ≤ S");
                if !self.extends(q, phi, nid, |_| true) {
                    return Some(format!(
                        "isomorphism onto subgroup {id} (order {}) from subgroup {q} does not extend to N_φ of order {}",
                        self.subgroup(id).order(),
                        n_phi.order()
                    ));
                }
            }
        }
        None
    }

    /// First violated saturation axiom, if any.
    pub fn saturation_failure(&self) -> Option<String> {
        for id in 0..self.lattice().len() {
            if !self.is_fully_normalized(id) {
                continue;
            }
            if !self.is_fully_automized(id) {
                return Some(format!(
                    "fully normalized subgroup {id} (order {}) is not fully automized: |Aut_S| = {}, |Aut_F| = {}",
                    self.subgroup(id).order(),
                    self.aut_s(id).len(),
                    self.automorphisms(id).count()
                ));
            }
            if let Some(w) = self.receptive_failure(id) {
                return Some(w);
            }
        }
        None
    }

    pub fn is_saturated(&self) -> bool {
        self.saturation_failure().is_none()
    }
}
