use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::Locality;
use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::fusion::{FusionSystem, Morphism};
use crate::groups::{AutSubgroup, Elem, Subgroup};

/// A subset of a locality's elements, closed under inversion and under
/// products of words in the domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PartialSubgroup {
    elements: BitSet,
}

impl PartialSubgroup {
    pub(crate) fn from_bits(elements: BitSet) -> Self {
        PartialSubgroup { elements }
    }

    pub fn elements(&self) -> &BitSet {
        &self.elements
    }

    pub fn element_list(&self) -> Vec<Elem> {
        self.elements.iter().map(|e| e as Elem).collect()
    }

    pub fn size(&self) -> usize {
        self.elements.count()
    }

    pub fn contains(&self, f: Elem) -> bool {
        self.elements.contains(f as usize)
    }
}

impl Locality {
    /// Why `h` is not a partial subgroup, if it is not. Closure under
    /// products of length-two words suffices: longer products reduce to
    /// them by splicing.
    pub fn partial_subgroup_failure(&self, h: &BitSet) -> Option<String> {
        let g = &**self.group();
        if !h.is_subset(self.elements()) {
            return Some(String::from("subset is not contained in L"));
        }
        if !h.contains(self.unit() as usize) {
            return Some(String::from("unit missing"));
        }
        for f in h.iter() {
            let f = f as Elem;
            if !h.contains(g.inv(f) as usize) {
                return Some(format!("inverse of {} missing", g.perm(f)));
            }
            for x in h.iter() {
                let x = x as Elem;
                if self.in_domain(&[f, x]) && !h.contains(g.mul(f, x) as usize) {
                    return Some(format!("product of ({}, {}) missing", g.perm(f), g.perm(x)));
                }
            }
        }
        None
    }

    pub fn partial_subgroup(
        &self,
        elems: impl IntoIterator<Item = Elem>,
    ) -> Result<PartialSubgroup> {
        let bits =
            BitSet::from_indices(self.group().order(), elems.into_iter().map(|e| e as usize));
        match self.partial_subgroup_failure(&bits) {
            None => Ok(PartialSubgroup::from_bits(bits)),
            Some(w) => Err(Error::NotPartialSubgroup(w)),
        }
    }

    /// Why `n` is not partial normal, if it is not: some `n^f` with
    /// `(f⁻¹, n, f) ∈ D` falls outside `n`.
    pub fn partial_normal_failure(&self, n: &PartialSubgroup) -> Option<String> {
        if let Some(w) = self.partial_subgroup_failure(n.elements()) {
            return Some(w);
        }
        let g = &**self.group();
        for f in self.element_list() {
            let fi = g.inv(f);
            for x in n.element_list() {
                if self.in_domain(&[fi, x, f]) && !n.contains(g.conj(x, f)) {
                    return Some(format!(
                        "conjugate of {} by {} leaves the subgroup",
                        g.perm(x),
                        g.perm(f)
                    ));
                }
            }
        }
        None
    }

    pub fn is_partial_normal(&self, n: &PartialSubgroup) -> bool {
        self.partial_normal_failure(n).is_none()
    }

    /// `H ∩ S` for the base `S`.
    pub fn base_part(&self, h: &PartialSubgroup) -> Result<Subgroup> {
        let bits = h.elements().intersection(self.base().bits());
        self.group().subgroup_from_bits(bits)
    }

    /// `N_L^K(X) = {f ∈ N_L(X) : c_f|_X ∈ K}`.
    pub fn k_normalizer_partial(&self, x: &Subgroup, k: &AutSubgroup) -> Result<PartialSubgroup> {
        let g = &**self.group();
        let elems: Vec<Elem> = self
            .transporter_set(x, x)
            .into_iter()
            .filter(|&f| k.contains(&g.conjugation_on(x, f)))
            .collect();
        self.partial_subgroup(elems)
    }

    /// `{Π(n, x) : n ∈ N, x ∈ X, (n, x) ∈ D}`.
    pub fn product_partial(&self, n: &PartialSubgroup, x: &Subgroup) -> Result<PartialSubgroup> {
        let g = &**self.group();
        let mut elems = BTreeSet::new();
        for a in n.element_list() {
            for &b in x.elements() {
                if self.in_domain(&[a, b]) {
                    elems.insert(g.mul(a, b));
                }
            }
        }
        self.partial_subgroup(elems)
    }

    /// `F_R(H)` for `R = H ∩ S`, generated by the conjugation maps
    /// `c_f : {s ∈ S_f ∩ R : s^f ∈ R} → R` for `f ∈ H`.
    pub fn fusion_of_partial(&self, h: &PartialSubgroup) -> Result<FusionSystem> {
        let g = &**self.group();
        let r = self.base_part(h)?;
        let mut gens: BTreeSet<(Subgroup, Morphism)> = BTreeSet::new();
        for f in h.element_list() {
            let q: Vec<Elem> = self
                .s_f(f)
                .elements()
                .iter()
                .copied()
                .filter(|&s| r.contains(s) && r.contains(g.conj(s, f)))
                .collect();
            let q = g.subgroup_from_elements(q)?;
            let images = q.elements().iter().map(|&s| g.conj(s, f)).collect();
            gens.insert((q, images));
        }
        let gens: Vec<_> = gens.into_iter().collect();
        FusionSystem::close_generated(self.group(), &r, self.p(), &gens)
    }

    /// `F_S(L)`.
    pub fn fusion(&self) -> Result<FusionSystem> {
        self.fusion_of_partial(&self.whole())
    }

    /// `F_{TX}(NX)`.
    pub fn product_fusion(&self, n: &PartialSubgroup, x: &Subgroup) -> Result<FusionSystem> {
        self.fusion_of_partial(&self.product_partial(n, x)?)
    }

    /// The partial normal subgroup `N` with `N ∩ S = T` and `F_T(N) = E`,
    /// searched among the sets `L ∩ H` for `H` normal in the ambient group.
    pub fn find_normal_for(&self, e: &FusionSystem) -> Result<PartialSubgroup> {
        let g = &**self.group();
        let mut found: BTreeSet<PartialSubgroup> = BTreeSet::new();
        for h in g.normal_subgroups(&g.whole()) {
            let bits = h.bits().intersection(self.elements());
            let n = PartialSubgroup::from_bits(bits);
            if found.contains(&n) || self.partial_normal_failure(&n).is_some() {
                continue;
            }
            if self.base_part(&n).ok().as_ref() != Some(e.s()) {
                continue;
            }
            if self.fusion_of_partial(&n)? == *e {
                found.insert(n);
            }
        }
        let mut it = found.into_iter();
        match (it.next(), it.next()) {
            (Some(n), None) => Ok(n),
            (None, _) => Err(Error::NotFound(format!(
                "no partial normal subgroup realizes the subsystem over a subgroup of order {}",
                e.s().order()
            ))),
            (Some(_), Some(_)) => Err(Error::NotUnique(String::from(
                "two partial normal subgroups realize the same subsystem",
            ))),
        }
    }
}
