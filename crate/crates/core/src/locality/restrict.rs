use alloc::format;
use alloc::vec::Vec;

use super::{Locality, PartialSubgroup};
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::groups::{AutSubgroup, FiniteGroup, Subgroup};

impl Locality {
    /// `H|_Γ = {f ∈ H : S_f ∩ R ∈ Γ}` for `R = H ∩ S`, as a locality over
    /// `R` with objects `Γ`.
    ///
    /// Checks that `Γ` is a set of subgroups of `R` closed under overgroups
    /// and `H`-conjugation, that `⟨P, X⟩ ∈ Δ` for `P ∈ Γ` (Q1), and that
    /// `N_H(P_1, P_2) ⊆ N_L(⟨P_1, X⟩, ⟨P_2, X⟩)` for `P_1, P_2 ∈ Γ` (Q2).
    pub fn restrict(
        &self,
        h: &PartialSubgroup,
        gamma: &[Subgroup],
        x: &Subgroup,
    ) -> Result<Locality> {
        let g = self.group().clone();
        let r = self.base_part(h)?;
        let lattice = self.lattice().below(&r);
        let mut objects = BitSet::new(lattice.len());
        for p in gamma {
            let id = lattice.id(p).ok_or_else(|| {
                Error::GammaNotClosed(format!(
                    "member of order {} is not contained in R",
                    p.order()
                ))
            })?;
            objects.insert(id);
        }
        for i in objects.iter() {
            let pi = lattice.get(i);
            if let Some(j) = (0..lattice.len())
                .find(|&j| !objects.contains(j) && pi.is_subgroup_of(lattice.get(j)))
            {
                return Err(Error::GammaNotClosed(format!(
                    "overgroup of order {} of a member of order {} is missing",
                    lattice.get(j).order(),
                    pi.order()
                )));
            }
            for f in h.element_list() {
                if !pi.is_subgroup_of(self.s_f(f)) {
                    continue;
                }
                let c = g.conjugate_subgroup(pi, f);
                if c.is_subgroup_of(&r) && !lattice.id(&c).is_some_and(|j| objects.contains(j)) {
                    return Err(Error::GammaNotClosed(format!(
                        "{} conjugates a member of order {} out of Γ",
                        g.perm(f),
                        pi.order()
                    )));
                }
            }
        }
        let gamma: Vec<&Subgroup> = objects.iter().map(|i| lattice.get(i)).collect();
        let with_x: Vec<Subgroup> = gamma.iter().map(|p| g.join(p, x)).collect();
        for (p, px) in gamma.iter().zip(&with_x) {
            if !self.is_object(px) {
                return Err(Error::Q1Violated(format!(
                    "⟨P, X⟩ of order {} for P of order {} is not an object",
                    px.order(),
                    p.order()
                )));
            }
        }
        for (p1, p1x) in gamma.iter().zip(&with_x) {
            for (p2, p2x) in gamma.iter().zip(&with_x) {
                for f in h.element_list() {
                    let moves = p1.is_subgroup_of(self.s_f(f))
                        && p1.elements().iter().all(|&y| p2.contains(g.conj(y, f)));
                    if !moves {
                        continue;
                    }
                    let extends = p1x.is_subgroup_of(self.s_f(f))
                        && p1x.elements().iter().all(|&y| p2x.contains(g.conj(y, f)));
                    if !extends {
                        return Err(Error::Q2Violated(format!(
                            "{} maps P_1 (order {}) into P_2 (order {}) but not ⟨P_1, X⟩ into ⟨P_2, X⟩",
                            g.perm(f),
                            p1.order(),
                            p2.order()
                        )));
                    }
                }
            }
        }
        let mut elements = BitSet::new(g.order());
        for f in h.element_list() {
            let cap = self.s_f(f).intersection(&r);
            if lattice.id(&cap).is_some_and(|j| objects.contains(j)) {
                elements.insert(f as usize);
            }
        }
        Ok(Locality::assemble(
            g,
            self.p(),
            elements,
            r,
            lattice,
            objects,
        ))
    }

    /// `bN_L^K(X) = N_L^K(X)|_{N_F^K(X)^s}`, defined when `X` is fully
    /// `K`-normalized in `f` and `K` is subnormal in `K·Inn(X)`.
    pub fn restricted_k_normalizer(
        &self,
        f: &FusionSystem,
        x: &Subgroup,
        k: &AutSubgroup,
    ) -> Result<(Locality, FusionSystem)> {
        let xid = f
            .id(x)
            .ok_or_else(|| Error::NotSubgroup(format!("X of order {} is not in S", x.order())))?;
        if !f.is_fully_k_normalized(xid, k) {
            return Err(Error::NotFullyKNormalized);
        }
        if !k_subnormal_in_k_inn(self.group(), k) {
            return Err(Error::KNotSubnormal);
        }
        let n = f.k_normalizer_system(xid, k);
        let gamma: Vec<Subgroup> = n
            .subcentric_set()?
            .into_iter()
            .map(|i| n.subgroup(i).clone())
            .collect();
        let h = self.k_normalizer_partial(x, k)?;
        Ok((self.restrict(&h, &gamma, x)?, n))
    }

    /// `bN_L(X)`.
    pub fn restricted_normalizer(
        &self,
        f: &FusionSystem,
        x: &Subgroup,
    ) -> Result<(Locality, FusionSystem)> {
        self.restricted_k_normalizer(f, x, &AutSubgroup::Full)
    }

    /// `bC_L(X)`.
    pub fn restricted_centralizer(
        &self,
        f: &FusionSystem,
        x: &Subgroup,
    ) -> Result<(Locality, FusionSystem)> {
        self.restricted_k_normalizer(f, x, &AutSubgroup::Trivial)
    }
}

/// `K ⊴⊴ K·Inn(X)`. Automatic for `K = Aut(X)` and `K = 1`.
pub fn k_subnormal_in_k_inn(group: &FiniteGroup, k: &AutSubgroup) -> bool {
    match k {
        AutSubgroup::Full | AutSubgroup::Trivial => true,
        AutSubgroup::Explicit { aut, members } => {
            let kinn = aut.with_inner(members, &group.inn_group(aut));
            aut.group().is_subnormal(members, &kinn)
        }
    }
}
