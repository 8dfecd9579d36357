use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{restrict_to, FusionSystem, Morphism};
use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Lattice, Subgroup};

const MAX_MORPHISMS: usize = 2_000_000;

impl FusionSystem {
    /// Smallest fusion system over `s` containing `Inn(S)` and `generators`.
    pub fn close_generated(
        group: &Arc<FiniteGroup>,
        s: &Subgroup,
        p: u32,
        generators: &[(Subgroup, Morphism)],
    ) -> Result<Self> {
        let lattice = group.lattice(s)?;
        Self::close_in(group, p, lattice, generators)
    }

    /// Inner fusion system `F_S(S)`.
    pub fn inner(group: &Arc<FiniteGroup>, s: &Subgroup, p: u32) -> Result<Self> {
        Self::close_generated(group, s, p, &[])
    }

    pub(crate) fn close_in(
        group: &Arc<FiniteGroup>,
        p: u32,
        lattice: Lattice,
        generators: &[(Subgroup, Morphism)],
    ) -> Result<Self> {
        let empty = alloc::vec![BTreeSet::new(); lattice.len()];
        let shell = FusionSystem::from_parts(group.clone(), p, lattice, empty);
        let mut closer = Closer::new(&shell);
        let s = shell.s().clone();
        for &x in s.elements() {
            closer.push(shell.s_id(), shell.conjugation(shell.s_id(), x))?;
        }
        for (domain, m) in generators {
            let id = validate_generator(&shell, domain, m)?;
            closer.push(id, m.clone())?;
        }
        closer.run()?;
        let homs = closer.homs;
        Ok(FusionSystem { homs, ..shell })
    }
}

fn validate_generator(shell: &FusionSystem, domain: &Subgroup, m: &Morphism) -> Result<usize> {
    let id = shell.id(domain).ok_or_else(|| {
        Error::NotSubgroup(format!(
            "generator domain of order {} is not in S",
            domain.order()
        ))
    })?;
    let g = shell.group();
    if m.len() != domain.order() || !m.iter().all(|&y| shell.s().contains(y)) {
        return Err(Error::NotMorphism(format!(
            "generator on subgroup {id} leaves S"
        )));
    }
    for (a, &x) in domain.elements().iter().enumerate() {
        for (b, &y) in domain.elements().iter().enumerate() {
            let xy = domain.position(g.mul(x, y)).expect("domain is a subgroup");
            if m[xy] != g.mul(m[a], m[b]) {
                return Err(Error::NotMorphism(format!("generator on subgroup {id}")));
            }
        }
    }
    if shell.image_bits(m).count() != m.len() {
        return Err(Error::NotMorphism(format!(
            "generator on subgroup {id} is not injective"
        )));
    }
    Ok(id)
}

/// Worklist closure under restriction, inverses and composition.
///
/// Every stored morphism is eventually processed. Composites are formed
/// when the later of the two factors is processed: a processed `φ` is
/// composed with everything already defined on its image and with
/// everything already mapping onto its domain.
struct Closer<'a> {
    system: &'a FusionSystem,
    homs: Vec<BTreeSet<Morphism>>,
    onto: Vec<Vec<(usize, Morphism)>>,
    below: Vec<Vec<usize>>,
    queue: Vec<(usize, Morphism)>,
    total: usize,
}

impl<'a> Closer<'a> {
    fn new(system: &'a FusionSystem) -> Self {
        let n = system.lattice().len();
        Closer {
            system,
            homs: alloc::vec![BTreeSet::new(); n],
            onto: alloc::vec![Vec::new(); n],
            below: (0..n).map(|i| system.lattice().ids_below(i)).collect(),
            queue: Vec::new(),
            total: 0,
        }
    }

    fn push(&mut self, id: usize, m: Morphism) -> Result<()> {
        if self.homs[id].contains(&m) {
            return Ok(());
        }
        self.total += 1;
        if self.total > MAX_MORPHISMS {
            return Err(Error::CapExceeded {
                what: "fusion system morphism count",
                limit: MAX_MORPHISMS,
            });
        }
        let img = self.system.image_id(&m);
        self.homs[id].insert(m.clone());
        self.onto[img].push((id, m.clone()));
        self.queue.push((id, m));
        Ok(())
    }

    fn run(&mut self) -> Result<()> {
        let sys = self.system;
        while let Some((id, m)) = self.queue.pop() {
            let domain = sys.subgroup(id);
            for k in self.below[id].clone() {
                if k != id {
                    let r = restrict_to(domain, &m, sys.subgroup(k));
                    self.push(k, r)?;
                }
            }
            let (img, inv) = sys.inverse(id, &m);
            self.push(img, inv)?;
            let after: Vec<Morphism> = self.homs[img].iter().cloned().collect();
            for b in after {
                let c = sys.compose(&m, img, &b);
                self.push(id, c)?;
            }
            let before = self.onto[id].clone();
            for (src, a) in before {
                let c = sys.compose(&a, id, &m);
                self.push(src, c)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::testing::*;
    use super::*;
    use crate::groups::testing as gt;

    #[test]
    fn no_generators_gives_inner_system() {
        let g = Arc::new(gt::d8());
        let s = g.whole();
        let f = FusionSystem::inner(&g, &s, 2).unwrap();
        let direct = FusionSystem::of_group(&g, &g.whole(), &s, 2).unwrap();
        assert_eq!(f, direct);
        assert!(f.axiom_failure().is_none());
    }

    #[test]
    fn closing_group_conjugations_reproduces_group_fusion() {
        let f = s4_system();
        let g = f.group().clone();
        let s = f.s().clone();
        let gens: Vec<(Subgroup, Morphism)> = f
            .lattice()
            .subgroups()
            .iter()
            .enumerate()
            .flat_map(|(i, p)| f.homs(i).iter().map(move |m| (p.clone(), m.clone())))
            .collect();
        let closed = FusionSystem::close_generated(&g, &s, 2, &gens).unwrap();
        assert_eq!(closed, f);
        // the automizer of S together with Aut_F(V) already generates everything
        let v = klein_in(&f);
        let mut few: Vec<(Subgroup, Morphism)> = f
            .automorphisms(v)
            .map(|m| (f.subgroup(v).clone(), m.clone()))
            .collect();
        few.extend(
            f.automorphisms(f.s_id())
                .map(|m| (f.s().clone(), m.clone())),
        );
        let closed = FusionSystem::close_generated(&g, &s, 2, &few).unwrap();
        assert_eq!(closed, f);
    }

    #[test]
    fn single_automorphism_restricts_to_invariant_subgroups() {
        // S = V ≤ S4 with the order-2 automorphism induced by (0 1).
        let g = Arc::new(gt::s4());
        let v = gt::sub(&g, &[&[&[0, 1], &[2, 3]], &[&[0, 2], &[1, 3]]]);
        let t = g.index_of(&gt::cyc(4, &[&[0, 1]])).unwrap();
        let m: Morphism = v.elements().iter().map(|&x| g.conj(x, t)).collect();
        let inner = FusionSystem::inner(&g, &v, 2).unwrap();
        let closed = FusionSystem::close_generated(&g, &v, 2, &[(v.clone(), m.clone())]).unwrap();
        assert!(closed.axiom_failure().is_none());
        assert_eq!(closed.automorphisms(closed.s_id()).count(), 2);
        let mut normalized = 0;
        for k in closed.lattice().ids_below(closed.s_id()) {
            let r = closed.restrict(closed.s_id(), &m, k);
            assert!(closed.homs(k).contains(&r));
            if closed.image_id(&r) == k {
                normalized += 1;
            }
        }
        // 1, <(0 1)(2 3)> and V itself
        assert_eq!(normalized, 3);
        assert!(closed.morphism_count() > inner.morphism_count());
    }

    #[test]
    fn rejects_non_morphisms() {
        let g = Arc::new(gt::d8());
        let s = g.whole();
        let c = gt::sub(&g, &[&[&[0, 1, 2, 3]]]);
        let bad: Morphism = alloc::vec![0; c.order()];
        assert!(matches!(
            FusionSystem::close_generated(&g, &s, 2, &[(c, bad)]),
            Err(Error::NotMorphism(_))
        ));
    }
}
