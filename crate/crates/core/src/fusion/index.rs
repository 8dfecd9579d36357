use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FusionSystem, Morphism};
use crate::groups::{Elem, Subgroup};

impl FusionSystem {
    /// `O^p(Aut_F(P))`, generated by the `p'`-elements of `Aut_F(P)`.
    pub fn op_prime_automorphisms(&self, id: usize) -> Vec<Morphism> {
        let aut = self.aut_f(id);
        let p = self.p();
        let gens = (0..aut.order() as Elem).filter(|&a| !aut.element_order(a).is_multiple_of(p));
        let sub = aut.closure(gens);
        sub.elements()
            .iter()
            .map(|&a| self.from_perm(id, aut.perm(a)))
            .collect()
    }

    /// `hyp(F) = ⟨x⁻¹(xα) : P ≤ S, x ∈ P, α ∈ O^p(Aut_F(P))⟩`.
    pub fn hyperfocal(&self) -> Subgroup {
        let g = self.group();
        let mut gens = BTreeSet::new();
        for id in 0..self.lattice().len() {
            let p = self.subgroup(id);
            for alpha in self.op_prime_automorphisms(id) {
                for (&x, &y) in p.elements().iter().zip(&alpha) {
                    gens.insert(g.mul(g.inv(x), y));
                }
            }
        }
        g.closure(gens)
    }

    /// Why `sub` is not of `p`-power index in `self`, if it is not:
    /// its Sylow must contain `hyp(F)` and `Aut_E(P) ≥ O^p(Aut_F(P))`
    /// for every `P` in it.
    pub fn p_power_index_failure(&self, sub: &FusionSystem) -> Option<String> {
        let hyp = self.hyperfocal();
        if !hyp.is_subgroup_of(sub.s()) {
            return Some(format!(
                "hyp(F) of order {} is not contained in T of order {}",
                hyp.order(),
                sub.s().order()
            ));
        }
        for (eid, p) in sub.lattice().subgroups().iter().enumerate() {
            let fid = self.id(p).expect("subgroup of S");
            let have: BTreeSet<&Morphism> = sub.automorphisms(eid).collect();
            if !self
                .op_prime_automorphisms(fid)
                .iter()
                .all(|a| have.contains(a))
            {
                return Some(format!(
                    "Aut_E of a subgroup of order {} misses part of O^p(Aut_F)",
                    p.order()
                ));
            }
        }
        None
    }

    pub fn has_p_power_index(&self, sub: &FusionSystem) -> bool {
        self.p_power_index_failure(sub).is_none()
    }
}
