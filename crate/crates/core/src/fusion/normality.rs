use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{FusionSystem, Morphism};

impl FusionSystem {
    /// `self` lives over a subgroup of `other`'s `S` and each of its
    /// morphisms is a morphism of `other`.
    pub fn is_subsystem_of(&self, other: &FusionSystem) -> bool {
        self.p() == other.p()
            && self.s().is_subgroup_of(other.s())
            && self.lattice().subgroups().iter().enumerate().all(|(i, p)| {
                other
                    .id(p)
                    .is_some_and(|j| self.homs(i).iter().all(|m| other.homs(j).contains(m)))
            })
    }

    /// Why `e` is not weakly normal in `self`, if it is not.
    pub fn weakly_normal_failure(&self, e: &FusionSystem) -> Option<String> {
        if !e.is_subsystem_of(self) {
            return Some(String::from("E is not a subsystem of F"));
        }
        let t = e.s();
        if !self.is_strongly_closed(t) {
            return Some(format!(
                "T of order {} is not strongly closed in F",
                t.order()
            ));
        }
        if let Some(w) = e.saturation_failure() {
            return Some(format!("E is not saturated: {w}"));
        }
        let tid = self.id(t).expect("T ≤ S");
        let aut_t: Vec<&Morphism> = self.automorphisms(tid).collect();
        for (eid, p) in e.lattice().subgroups().iter().enumerate() {
            // invariance: φ^α = α⁻¹|_{Pα} φ α stays in E
            for alpha in &aut_t {
                let (_, alpha_inv) = self.inverse(tid, alpha);
                let pa: Morphism = self.restrict(tid, alpha, self.id(p).expect("P ≤ S"));
                let pa_id = e.image_id(&pa);
                let back = self.restrict(tid, &alpha_inv, self.id(e.subgroup(pa_id)).expect("≤ S"));
                for phi in e.homs(eid) {
                    let conj: Morphism = back
                        .iter()
                        .map(|&x| {
                            let y = phi[p.position(x).expect("in P")];
                            alpha[t.position(y).expect("in T")]
                        })
                        .collect();
                    if !e.homs(pa_id).contains(&conj) {
                        return Some(format!(
                            "E is not Aut_F(T)-invariant on a subgroup of order {}",
                            p.order()
                        ));
                    }
                }
            }
            // Frattini: each φ ∈ Hom_F(P, T) is an E-morphism followed by some α
            let fid = self.id(p).expect("P ≤ S");
            for phi in self
                .homs(fid)
                .iter()
                .filter(|m| m.iter().all(|&y| t.contains(y)))
            {
                let factors = aut_t.iter().any(|alpha| {
                    let (_, inv) = self.inverse(tid, alpha);
                    let m: Morphism = phi
                        .iter()
                        .map(|&y| inv[t.position(y).expect("in T")])
                        .collect();
                    e.homs(eid).contains(&m)
                });
                if !factors {
                    return Some(format!(
                        "Frattini factorization fails on a subgroup of order {}",
                        p.order()
                    ));
                }
            }
        }
        None
    }

    pub fn is_weakly_normal(&self, e: &FusionSystem) -> bool {
        self.weakly_normal_failure(e).is_none()
    }

    /// Why `e` is not normal in `self`, if it is not.
    pub fn normal_failure(&self, e: &FusionSystem) -> Option<String> {
        if let Some(w) = self.weakly_normal_failure(e) {
            return Some(w);
        }
        let g = self.group();
        let t = e.s();
        let tid = self.id(t).expect("T ≤ S");
        let c = g.centralizer(self.s(), t);
        let z = g.center(t);
        let tc = g.join(t, &c);
        let tcid = self.id(&tc).expect("T·C_S(T) ≤ S");
        let etid = e.s_id();
        for alpha in e.automorphisms(etid) {
            let ok = self.extends(tid, alpha, tcid, |bar| {
                c.elements().iter().all(|&x| {
                    let y = bar[tc.position(x).expect("in TC")];
                    z.contains(g.mul(g.inv(x), y))
                })
            });
            if !ok {
                return Some(String::from(
                    "an automorphism in Aut_E(T) has no extension to T·C_S(T) acting trivially on C_S(T) modulo Z(T)",
                ));
            }
        }
        None
    }

    pub fn is_normal_subsystem(&self, e: &FusionSystem) -> bool {
        self.normal_failure(e).is_none()
    }
}
