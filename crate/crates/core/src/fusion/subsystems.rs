use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{FusionSystem, Morphism};
use crate::error::{Error, Result};
use crate::groups::{AutSubgroup, Subgroup};

impl FusionSystem {
    /// The subsystem over `top ≤ S` whose morphisms are those of `self`
    /// between subgroups of `top` that satisfy `keep`.
    pub(crate) fn filtered(
        &self,
        top: &Subgroup,
        mut keep: impl FnMut(usize, &Morphism) -> bool,
    ) -> FusionSystem {
        let lattice = self.lattice().below(top);
        let homs = lattice
            .subgroups()
            .iter()
            .map(|p| {
                let pid = self.id(p).expect("subgroup of S");
                self.homs(pid)
                    .iter()
                    .filter(|m| m.iter().all(|&y| top.contains(y)) && keep(pid, m))
                    .cloned()
                    .collect::<BTreeSet<_>>()
            })
            .collect();
        FusionSystem::from_parts(self.group().clone(), self.p(), lattice, homs)
    }

    /// `N_F^K(X)` over `N_S^K(X)`: morphisms `φ: P → N_S^K(X)` that extend
    /// to some `ψ ∈ Hom_F(PX, S)` with `Xψ = X` and `ψ|_X ∈ K`.
    pub fn k_normalizer_system(&self, x: usize, k: &AutSubgroup) -> FusionSystem {
        let g = self.group().clone();
        let xs = self.subgroup(x).clone();
        let top = self.n_s_k(x, k);
        self.filtered(&top, |pid, phi| {
            let px = g.join(self.subgroup(pid), &xs);
            let pxid = self.id(&px).expect("PX ≤ S");
            self.extends(pid, phi, pxid, |psi| {
                let on_x = self.restrict(pxid, psi, x);
                on_x.iter().all(|&y| xs.contains(y)) && k.contains(&self.to_perm(x, &on_x))
            })
        })
    }

    pub fn normalizer_system(&self, x: usize) -> FusionSystem {
        self.k_normalizer_system(x, &AutSubgroup::Full)
    }

    pub fn centralizer_system(&self, x: usize) -> FusionSystem {
        self.k_normalizer_system(x, &AutSubgroup::Trivial)
    }

    /// No element of `T` is `F`-conjugate to an element outside `T`.
    pub fn is_strongly_closed(&self, t: &Subgroup) -> bool {
        self.lattice()
            .subgroups()
            .iter()
            .enumerate()
            .filter(|(_, p)| p.is_subgroup_of(t))
            .all(|(i, _)| {
                self.homs(i)
                    .iter()
                    .all(|m| m.iter().all(|&y| t.contains(y)))
            })
    }

    /// `C_S(Q) ≤ Q` for every `F`-conjugate `Q` of `P`.
    pub fn is_centric(&self, id: usize) -> bool {
        self.conjugates(id)
            .into_iter()
            .all(|q| self.c_s(q).is_subgroup_of(self.subgroup(q)))
    }

    pub fn centric_set(&self) -> Vec<usize> {
        (0..self.lattice().len())
            .filter(|&i| self.is_centric(i))
            .collect()
    }

    /// `Q ⊴ F`: `Q ⊴ S` and every morphism on `P` extends to `PQ` with
    /// `Q` mapped onto itself.
    pub fn is_normal_subgroup(&self, q: usize) -> bool {
        let g = self.group();
        let qs = self.subgroup(q);
        if !g.is_normal(qs, self.s()) {
            return false;
        }
        (0..self.lattice().len()).all(|pid| {
            let pq = g.join(self.subgroup(pid), qs);
            let pqid = self.id(&pq).expect("PQ ≤ S");
            self.homs(pid).iter().all(|phi| {
                self.extends(pid, phi, pqid, |psi| {
                    self.restrict(pqid, psi, q).iter().all(|&y| qs.contains(y))
                })
            })
        })
    }

    /// `O_p(F)`, the largest subgroup normal in `F`.
    pub fn op(&self) -> usize {
        let mut ids: Vec<usize> = (0..self.lattice().len()).collect();
        ids.sort_by_key(|&i| core::cmp::Reverse(self.subgroup(i).order()));
        ids.into_iter()
            .find(|&i| self.is_normal_subgroup(i))
            .expect("the trivial subgroup is normal")
    }

    /// `P` is subcentric iff `O_p(N_F(Q))` is centric for a fully
    /// normalized conjugate `Q` of `P`.
    pub fn is_subcentric(&self, id: usize) -> bool {
        let q = self.fully_normalized_rep(id);
        let n = self.normalizer_system(q);
        let o = n.subgroup(n.op()).clone();
        self.is_centric(self.id(&o).expect("O_p(N_F(Q)) ≤ S"))
    }

    /// `F^s`, defined for saturated systems only.
    pub fn subcentric_set(&self) -> Result<Vec<usize>> {
        if let Some(w) = self.saturation_failure() {
            return Err(Error::NotSaturated(w));
        }
        let mut verdict: Vec<Option<bool>> = alloc::vec![None; self.lattice().len()];
        for i in 0..self.lattice().len() {
            if verdict[i].is_none() {
                let v = self.is_subcentric(i);
                for q in self.conjugates(i) {
                    verdict[q] = Some(v);
                }
            }
        }
        Ok((0..verdict.len())
            .filter(|&i| verdict[i] == Some(true))
            .collect())
    }
}
