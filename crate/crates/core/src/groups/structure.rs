use alloc::vec::Vec;

use super::{AutSubgroup, Elem, FiniteGroup, Subgroup};
use crate::bitset::BitSet;
use crate::perm::Perm;

/// The largest power of `p` dividing `n`.
pub fn p_part(mut n: usize, p: u32) -> usize {
    let p = p as usize;
    let mut out = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        out *= p;
    }
    out
}

/// Result of a subnormality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subnormality {
    /// `H = H_0 ⊴ H_1 ⊴ … ⊴ H_n = G` when `H` is subnormal.
    pub chain: Option<Vec<Subgroup>>,
}

impl Subnormality {
    pub fn holds(&self) -> bool {
        self.chain.is_some()
    }
}

impl FiniteGroup {
    pub fn is_p_group(&self, h: &Subgroup, p: u32) -> bool {
        p_part(h.order(), p) == h.order()
    }

    pub fn conjugate_subgroup(&self, h: &Subgroup, g: Elem) -> Subgroup {
        let bits = BitSet::from_indices(
            self.order(),
            h.elements().iter().map(|&x| self.conj(x, g) as usize),
        );
        Subgroup::from_bits(bits)
    }

    /// `N_within(X) = {g : X^g = X}`.
    pub fn normalizer(&self, within: &Subgroup, x: &Subgroup) -> Subgroup {
        let gens = self.generating_set(x);
        let elems = within
            .elements()
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&a| x.contains(self.conj(a, g))));
        Subgroup::from_sorted(elems.collect(), self.order())
    }

    /// `C_within(X) = {g : x^g = x for all x in X}`.
    pub fn centralizer(&self, within: &Subgroup, x: &Subgroup) -> Subgroup {
        let gens = self.generating_set(x);
        let elems = within
            .elements()
            .iter()
            .copied()
            .filter(|&g| gens.iter().all(|&a| self.mul(a, g) == self.mul(g, a)));
        Subgroup::from_sorted(elems.collect(), self.order())
    }

    pub fn center(&self, h: &Subgroup) -> Subgroup {
        self.centralizer(h, h)
    }

    pub fn is_normal(&self, h: &Subgroup, within: &Subgroup) -> bool {
        let hg = self.generating_set(h);
        self.generating_set(within)
            .iter()
            .all(|&g| hg.iter().all(|&a| h.contains(self.conj(a, g))))
    }

    /// Smallest normal subgroup of `within` containing `h`.
    pub fn normal_closure(&self, h: &Subgroup, within: &Subgroup) -> Subgroup {
        let hg = self.generating_set(h);
        let mut gens: Vec<Elem> = Vec::new();
        for &g in within.elements() {
            for &a in &hg {
                gens.push(self.conj(a, g));
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.closure(gens)
    }

    /// Every normal subgroup of `within`: joins of normal closures of
    /// single elements.
    pub fn normal_subgroups(&self, within: &Subgroup) -> Vec<Subgroup> {
        let mut found = alloc::collections::BTreeSet::new();
        let mut atoms = alloc::collections::BTreeSet::new();
        for &g in within.elements() {
            atoms.insert(self.normal_closure(&self.closure([g]), within));
        }
        let atoms: Vec<Subgroup> = atoms.into_iter().collect();
        let mut frontier: Vec<Subgroup> = atoms.clone();
        found.extend(atoms.iter().cloned());
        while let Some(n) = frontier.pop() {
            for a in &atoms {
                if a.is_subgroup_of(&n) {
                    continue;
                }
                let j = self.join(&n, a);
                if found.insert(j.clone()) {
                    frontier.push(j);
                }
            }
        }
        found.into_iter().collect()
    }

    /// A Sylow `p`-subgroup of `within`, grown one factor of `p` at a time
    /// inside successive normalizers. Deterministic.
    pub fn sylow(&self, within: &Subgroup, p: u32) -> Subgroup {
        let target = p_part(within.order(), p);
        let mut current = self.trivial();
        while current.order() < target {
            let n = self.normalizer(within, &current);
            let g = n
                .elements()
                .iter()
                .copied()
                .find(|&g| !current.contains(g) && current.contains(self.pow(g, p)))
                .expect("a non-Sylow p-subgroup grows inside its normalizer");
            current = self.join_with(&current, &[g]);
        }
        current
    }

    pub fn is_sylow(&self, candidate: &Subgroup, within: &Subgroup, p: u32) -> bool {
        candidate.is_subgroup_of(within)
            && self.is_p_group(candidate, p)
            && candidate.order() == p_part(within.order(), p)
    }

    /// `O_p(within)`: the intersection of all Sylow `p`-subgroups.
    pub fn core_op(&self, within: &Subgroup, p: u32) -> Subgroup {
        let sylow = self.sylow(within, p);
        let mut bits = sylow.bits().clone();
        for &g in within.elements() {
            if bits.count() == 1 {
                break;
            }
            bits.intersect_with(self.conjugate_subgroup(&sylow, g).bits());
        }
        Subgroup::from_bits(bits)
    }

    /// `C(O_p(H)) <= O_p(H)`.
    pub fn is_characteristic_p(&self, within: &Subgroup, p: u32) -> bool {
        let op = self.core_op(within, p);
        self.centralizer(within, &op).is_subgroup_of(&op)
    }

    /// Subnormality via iterated normal closures: `H` is subnormal in `G`
    /// iff `H = G`, or `H^G < G` and `H` is subnormal in `H^G`.
    pub fn subnormality(&self, h: &Subgroup, within: &Subgroup) -> Subnormality {
        if !h.is_subgroup_of(within) {
            return Subnormality { chain: None };
        }
        let mut chain = alloc::vec![within.clone()];
        let mut current = within.clone();
        while current != *h {
            let next = self.normal_closure(h, &current);
            if next == current {
                return Subnormality { chain: None };
            }
            chain.push(next.clone());
            current = next;
        }
        chain.reverse();
        Subnormality { chain: Some(chain) }
    }

    pub fn is_subnormal(&self, h: &Subgroup, within: &Subgroup) -> bool {
        self.subnormality(h, within).holds()
    }

    /// Automorphism of `X` induced by conjugation with `g`, on positions of `X`.
    pub fn conjugation_on(&self, x: &Subgroup, g: Elem) -> Perm {
        let images = x
            .elements()
            .iter()
            .map(|&a| x.position(self.conj(a, g)).expect("g normalizes X") as u32)
            .collect();
        Perm::from_images(images).expect("conjugation is a bijection")
    }

    /// `N^K_within(X) = {g in N(X) : c_g|_X in K}`.
    pub fn k_normalizer(&self, within: &Subgroup, x: &Subgroup, k: &AutSubgroup) -> Subgroup {
        let n = self.normalizer(within, x);
        let elems = n
            .elements()
            .iter()
            .copied()
            .filter(|&g| k.contains(&self.conjugation_on(x, g)))
            .collect();
        Subgroup::from_sorted(elems, self.order())
    }

    /// The set product `AB`, which must be a subgroup.
    pub fn product_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Option<Subgroup> {
        let mut bits = BitSet::new(self.order());
        for &x in a.elements() {
            for &y in b.elements() {
                bits.insert(self.mul(x, y) as usize);
            }
        }
        self.subgroup_from_bits(bits).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;

    #[test]
    fn normal_subgroup_counts() {
        let g = s4();
        assert_eq!(g.normal_subgroups(&g.whole()).len(), 4);
        let q = sl23();
        assert_eq!(q.normal_subgroups(&q.whole()).len(), 4);
        let d = d8();
        assert_eq!(d.normal_subgroups(&d.whole()).len(), 6);
    }

    #[test]
    fn sylow_examples() {
        let g = s4();
        let s = g.sylow(&g.whole(), 2);
        assert_eq!(s.order(), 8);
        assert!(g.is_sylow(&s, &g.whole(), 2));
        let s3 = s3();
        assert_eq!(s3.sylow(&s3.whole(), 3).order(), 3);
        let c2 = group(2, &[&[&[0, 1]]]);
        assert!(c2.sylow(&c2.whole(), 3).is_trivial());
    }

    #[test]
    fn core_op_examples() {
        let d = d8();
        assert_eq!(d.core_op(&d.whole(), 2), d.whole());
        let g = s4();
        let v = sub(&g, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert_eq!(g.core_op(&g.whole(), 2), v);
        let s3 = s3();
        assert!(s3.core_op(&s3.whole(), 2).is_trivial());
    }

    #[test]
    fn characteristic_p_examples() {
        let t = group(1, &[&[]]);
        assert!(t.is_characteristic_p(&t.whole(), 2));
        let g = s4();
        assert!(g.is_characteristic_p(&g.whole(), 2));
        let c6 = group(6, &[&[&[0, 1, 2, 3, 4, 5]]]);
        assert!(!c6.is_characteristic_p(&c6.whole(), 2));
    }

    #[test]
    fn normalizer_centralizer_examples() {
        let g = s4();
        assert_eq!(g.normalizer(&g.whole(), &g.whole()), g.whole());
        assert_eq!(g.centralizer(&g.whole(), &g.trivial()), g.whole());
        let t = sub(&g, &[&[&[0, 1]]]);
        assert_eq!(g.centralizer(&g.whole(), &t).order(), 4);
    }

    #[test]
    fn subnormality_examples() {
        let g = s4();
        let whole = g.whole();
        let sn = g.subnormality(&whole, &whole);
        assert_eq!(sn.chain.unwrap().len(), 1);
        let d = sub(&g, &[&[&[0, 1], &[2, 3]]]);
        let chain = g.subnormality(&d, &whole).chain.unwrap();
        assert_eq!(chain.first(), Some(&d));
        assert!(chain.iter().any(|h| h.order() == 4));
        for w in chain.windows(2) {
            assert!(g.is_normal(&w[0], &w[1]));
        }
        let t = sub(&g, &[&[&[0, 1]]]);
        assert!(!g.is_subnormal(&t, &whole));
    }

    #[test]
    fn k_normalizer_of_klein_four() {
        let g = s4();
        let v = sub(&g, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        assert_eq!(
            g.k_normalizer(&g.whole(), &v, &AutSubgroup::Full),
            g.whole()
        );
        assert_eq!(g.k_normalizer(&g.whole(), &v, &AutSubgroup::Trivial), v);
    }
}
