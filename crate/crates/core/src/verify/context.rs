use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::fusion::FusionSystem;
use crate::groups::{AutGroup, AutSubgroup, Elem, FiniteGroup, Subgroup};
use crate::locality::{AxiomReport, Locality, PartialSubgroup, WordFragment};
use crate::perm::Perm;

/// A subgroup `K ≤ Aut(X)` with the label used in instance descriptors.
#[derive(Clone, Debug)]
pub struct KChoice {
    pub label: String,
    pub k: AutSubgroup,
}

impl KChoice {
    pub fn new(label: &str, k: AutSubgroup) -> Self {
        KChoice {
            label: label.to_string(),
            k,
        }
    }

    /// Neither all of `Aut(X)` nor the identity alone.
    pub fn is_proper(&self) -> bool {
        matches!(&self.k, AutSubgroup::Explicit { aut, members } if members.order() != 1 && members.order() != aut.order())
    }
}

/// Memo key for a `(X, K)` pair.
pub(crate) type PairKey = (usize, u8, Vec<Elem>);

pub(crate) fn pair_key(x: usize, k: &AutSubgroup) -> PairKey {
    match k {
        AutSubgroup::Full => (x, 0, Vec::new()),
        AutSubgroup::Trivial => (x, 1, Vec::new()),
        AutSubgroup::Explicit { members, .. } => (x, 2, members.elements().to_vec()),
    }
}

pub(crate) type Restricted = Result<Arc<(Locality, FusionSystem)>>;

/// Everything one corpus entry needs: `G`, `S`, `F = F_S(G)`, the normal
/// subgroup `H` with `T = S ∩ H` and `E = F_T(H)`, the subcentric locality
/// `L` (or why it was rejected) and the partial normal subgroup `N`.
pub struct EntryContext {
    pub name: String,
    pub group: Arc<FiniteGroup>,
    pub p: u32,
    pub s: Subgroup,
    pub h: Subgroup,
    pub t: Subgroup,
    pub f: FusionSystem,
    pub e: FusionSystem,
    pub fragment: WordFragment,
    /// `Ok` with the verification report when accepted, `Err` with the
    /// failing axiom otherwise.
    pub locality: core::result::Result<(Locality, AxiomReport), String>,
    /// `None` when the locality was rejected.
    pub normal: Option<Result<PartialSubgroup>>,
    pub(crate) restricted: RefCell<BTreeMap<PairKey, Restricted>>,
    pub(crate) products: RefCell<BTreeMap<usize, Result<Arc<FusionSystem>>>>,
    pub(crate) auts: RefCell<BTreeMap<Subgroup, Result<Arc<AutGroup>>>>,
}

impl EntryContext {
    pub fn new(
        name: &str,
        group: Arc<FiniteGroup>,
        p: u32,
        h: Subgroup,
        fragment: WordFragment,
    ) -> Result<Self> {
        Self::build(name, group, p, h, fragment, true)
    }

    /// Like [`EntryContext::new`], but skips the locality when
    /// `with_locality` is false (only the group-level checks can then run).
    pub fn build(
        name: &str,
        group: Arc<FiniteGroup>,
        p: u32,
        h: Subgroup,
        fragment: WordFragment,
        with_locality: bool,
    ) -> Result<Self> {
        if !group.is_normal(&h, &group.whole()) {
            return Err(Error::InvalidEntry(format!(
                "{name}: the declared subgroup is not normal"
            )));
        }
        let s = group.sylow(&group.whole(), p);
        let t = s.intersection(&h);
        let f = FusionSystem::of_group(&group, &group.whole(), &s, p)?;
        let e = FusionSystem::of_group(&group, &h, &t, p)?;
        let locality = if with_locality {
            build_locality(&f, fragment)
        } else {
            Err(String::from("locality not requested"))
        };
        let normal = locality.as_ref().ok().map(|(l, _)| l.find_normal_for(&e));
        Ok(EntryContext {
            name: name.to_string(),
            group,
            p,
            s,
            h,
            t,
            f,
            e,
            fragment,
            locality,
            normal,
            restricted: RefCell::new(BTreeMap::new()),
            products: RefCell::new(BTreeMap::new()),
            auts: RefCell::new(BTreeMap::new()),
        })
    }

    pub fn accepted(&self) -> Option<&Locality> {
        self.locality.as_ref().ok().map(|(l, _)| l)
    }

    pub fn is_characteristic_p(&self) -> bool {
        self.group.is_characteristic_p(&self.group.whole(), self.p)
    }

    pub fn aut(&self, x: &Subgroup) -> Result<Arc<AutGroup>> {
        self.auts
            .borrow_mut()
            .entry(x.clone())
            .or_insert_with(|| self.group.aut_group(x).map(Arc::new))
            .clone()
    }

    /// `Aut_G(X)` as a subgroup of `Aut(X)`.
    pub fn aut_g(&self, x: &Subgroup, aut: &AutGroup) -> Subgroup {
        let n = self.group.normalizer(&self.group.whole(), x);
        let autos: Vec<Perm> = self
            .group
            .generating_set(&n)
            .into_iter()
            .map(|g| self.group.conjugation_on(x, g))
            .collect();
        aut.generated_by(autos.iter())
            .expect("conjugations are automorphisms")
    }

    /// The default choices of `K`: every subgroup of `Aut(X)` when
    /// `|Aut(X)| ≤ 24`, otherwise `Aut(X)`, `1`, `Inn(X)` and `Aut_G(X)`.
    /// Each subgroup appears once; for `Aut(X) = 1` that is `id`.
    pub fn default_k_choices(&self, x: &Subgroup) -> Vec<KChoice> {
        let mut out = alloc::vec![
            KChoice::new("aut", AutSubgroup::Full),
            KChoice::new("id", AutSubgroup::Trivial)
        ];
        let Ok(aut) = self.aut(x) else {
            return out;
        };
        if aut.order() == 1 {
            out.remove(0);
            return out;
        }
        let inn = self.group.inn_group(&aut);
        let aut_g = self.aut_g(x, &aut);
        let mut named: Vec<(String, Subgroup)> = alloc::vec![
            (String::from("aut"), aut.all()),
            (String::from("id"), aut.identity_only()),
            (String::from("inn"), inn),
            (String::from("autF"), aut_g),
        ];
        if aut.order() <= 24 {
            if let Ok(all) = aut.group().all_subgroups(&aut.all()) {
                for (i, k) in all.into_iter().enumerate() {
                    named.push((format!("sub{i}"), k));
                }
            }
        }
        let mut seen: Vec<Subgroup> = alloc::vec![aut.all(), aut.identity_only()];
        for (label, k) in named.into_iter().skip(2) {
            if seen.contains(&k) {
                continue;
            }
            seen.push(k.clone());
            out.push(KChoice::new(&label, AutSubgroup::explicit(&aut, k)));
        }
        out
    }

    /// `bN_L^K(X)` with `N_F^K(X)`, memoized.
    pub(crate) fn restricted(&self, x: usize, k: &AutSubgroup) -> Restricted {
        let l = self.accepted().expect("accepted locality");
        self.restricted
            .borrow_mut()
            .entry(pair_key(x, k))
            .or_insert_with(|| {
                l.restricted_k_normalizer(&self.f, self.f.subgroup(x), k)
                    .map(Arc::new)
            })
            .clone()
    }

    /// `EX = F_{TX}(NX)`, memoized.
    pub(crate) fn product(&self, x: usize) -> Result<Arc<FusionSystem>> {
        let l = self.accepted().expect("accepted locality");
        let n = match self.normal.as_ref().expect("accepted locality") {
            Ok(n) => n,
            Err(e) => return Err(e.clone()),
        };
        self.products
            .borrow_mut()
            .entry(x)
            .or_insert_with(|| l.product_fusion(n, self.f.subgroup(x)).map(Arc::new))
            .clone()
    }
}

fn build_locality(
    f: &FusionSystem,
    fragment: WordFragment,
) -> core::result::Result<(Locality, AxiomReport), String> {
    let delta: Vec<Subgroup> = f
        .subcentric_set()
        .map_err(|e| format!("{e}"))?
        .into_iter()
        .map(|i| f.subgroup(i).clone())
        .collect();
    let l = Locality::build_group_locality(f.group(), f.s(), f.p(), &delta)
        .map_err(|e| format!("{e}"))?;
    let report = l.verify_subcentric_locality(f, fragment);
    match report.failure() {
        None => Ok((l, report)),
        Some(c) => Err(format!(
            "{}: {}",
            c.axiom,
            c.witness.as_deref().unwrap_or("failed")
        )),
    }
}
