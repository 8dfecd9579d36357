use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::context::{EntryContext, KChoice};
use super::{SkipReason, Statement, VerificationReport};
use crate::fusion::FusionSystem;
use crate::groups::{AutSubgroup, FiniteGroup, Subgroup};
use crate::locality::{k_subnormal_in_k_inn, PartialSubgroup};

/// `X=<gens>` with the cycle notation of a generating set.
pub(crate) fn describe(group: &FiniteGroup, x: &Subgroup) -> String {
    let gens: Vec<String> = group
        .generating_set(x)
        .into_iter()
        .map(|g| format!("{}", group.perm(g)))
        .collect();
    format!("X=<{}>", gens.join(";"))
}

fn instance(group: &FiniteGroup, x: &Subgroup, k: &KChoice) -> String {
    format!("{} K={}", describe(group, x), k.label)
}

/// Lemma 2.2(a): for `G` of characteristic `p`, every `H` with
/// `C_G(X) ≤ H ≤ N_G(X)` and `H ⊴⊴ HX` is of characteristic `p`.
pub fn check_char_p_normalizer_a(ctx: &EntryContext, x: &Subgroup) -> VerificationReport {
    let g = &*ctx.group;
    let report = VerificationReport::new(&ctx.name, Statement::Lemma22a, describe(g, x));
    if !ctx.is_characteristic_p() {
        return report.skip(
            SkipReason::NotCharacteristicP,
            "G is not of characteristic p",
        );
    }
    let c = g.centralizer(&g.whole(), x);
    let n = g.normalizer(&g.whole(), x);
    let lattice = match g.all_subgroups(&n) {
        Ok(l) => l,
        Err(e) => return report.skip(SkipReason::CapExceeded, format!("{e}")),
    };
    let (mut checked, mut not_subnormal) = (0u64, 0u64);
    for h in lattice.iter().filter(|h| c.is_subgroup_of(h)) {
        let hx = g.join(h, x);
        if !g.is_subnormal(h, &hx) {
            not_subnormal += 1;
            continue;
        }
        checked += 1;
        if !g.is_characteristic_p(h, ctx.p) {
            return report.stat("checked", checked).fail(format!(
                "H of order {} generated by {} is not of characteristic p",
                h.order(),
                describe(g, h)
            ));
        }
    }
    report
        .stat("checked", checked)
        .stat("not_subnormal", not_subnormal)
}

/// Lemma 2.2(b): `N_G^K(X)` is of characteristic `p` when
/// `K ⊴⊴ K·Inn(X)`; also checks `N_G^{K·Inn(X)}(X) = N_G^K(X)·X`.
pub fn check_char_p_normalizer_b(
    ctx: &EntryContext,
    x: &Subgroup,
    k: &KChoice,
) -> VerificationReport {
    let g = &*ctx.group;
    let report = VerificationReport::new(&ctx.name, Statement::Lemma22b, instance(g, x, k));
    if !ctx.is_characteristic_p() {
        return report.skip(
            SkipReason::NotCharacteristicP,
            "G is not of characteristic p",
        );
    }
    if !k_subnormal_in_k_inn(g, &k.k) {
        return report.skip(SkipReason::KNotSubnormal, "K is not subnormal in K·Inn(X)");
    }
    let whole = g.whole();
    let nk = g.k_normalizer(&whole, x, &k.k);
    let report = report.stat("order", nk.order() as u64);
    if !g.is_characteristic_p(&nk, ctx.p) {
        return report.fail(format!(
            "N_G^K(X) of order {} is not of characteristic p",
            nk.order()
        ));
    }
    let k_inn = match &k.k {
        AutSubgroup::Full => AutSubgroup::Full,
        other => {
            let aut = match ctx.aut(x) {
                Ok(a) => a,
                Err(e) => return report.skip(SkipReason::CapExceeded, format!("{e}")),
            };
            let members = other.resolve(&aut);
            AutSubgroup::explicit(&aut, aut.with_inner(&members, &g.inn_group(&aut)))
        }
    };
    let left = g.k_normalizer(&whole, x, &k_inn);
    match g.product_subgroup(&nk, x) {
        Some(right) if right == left => report.stat("identity", 1),
        _ => report.fail(format!(
            "N_G^(K·Inn(X))(X) has order {} but N_G^K(X)·X does not match",
            left.order()
        )),
    }
}

fn x_id(ctx: &EntryContext, x: &Subgroup) -> usize {
    ctx.f.id(x).expect("X is a subgroup of S")
}

fn rejected(report: VerificationReport, ctx: &EntryContext) -> Option<VerificationReport> {
    match &ctx.locality {
        Ok(_) => None,
        Err(why) => Some(report.skip(SkipReason::EntryRejected, why.clone())),
    }
}

/// Lemma 2.1: `(bN_L^K(X), N_F^K(X)^s, N_S^K(X))` is a subcentric locality
/// over `N_F^K(X)`.
pub fn check_restricted_subcentric(
    ctx: &EntryContext,
    x: &Subgroup,
    k: &KChoice,
) -> VerificationReport {
    let g = &*ctx.group;
    let report = VerificationReport::new(&ctx.name, Statement::Lemma21, instance(g, x, k));
    if let Some(r) = rejected(report.clone(), ctx) {
        return r;
    }
    let xid = x_id(ctx, x);
    if !ctx.f.is_fully_k_normalized(xid, &k.k) {
        return report.skip(
            SkipReason::NotFullyKNormalized,
            "X is not fully K-normalized in F",
        );
    }
    if !k_subnormal_in_k_inn(g, &k.k) {
        return report.skip(SkipReason::KNotSubnormal, "K is not subnormal in K·Inn(X)");
    }
    let restricted = match ctx.restricted(xid, &k.k) {
        Ok(r) => r,
        Err(e) => return report.fail(format!("bN_L^K(X) could not be formed: {e}")),
    };
    let (bn, nfk) = &*restricted;
    let report = report
        .stat("elements", bn.size() as u64)
        .stat("objects", bn.objects().len() as u64);
    if *bn.base() != ctx.f.n_s_k(xid, &k.k) {
        return report.fail("the base of bN_L^K(X) is not N_S^K(X)");
    }
    let axioms = bn.verify_subcentric_locality(nfk, ctx.fragment);
    let report = report.stat("cases", axioms.cases());
    match axioms.failure() {
        None => report,
        Some(c) => report.fail(format!(
            "{}: {}",
            c.axiom,
            c.witness.as_deref().unwrap_or("failed")
        )),
    }
}

/// Lemma 3.1: `X` fully `K`-normalized in `F` stays so in `EX`.
pub fn check_fully_k_normalized_transfer(
    ctx: &EntryContext,
    x: &Subgroup,
    k: &KChoice,
) -> VerificationReport {
    let g = &*ctx.group;
    let report = VerificationReport::new(&ctx.name, Statement::Lemma31, instance(g, x, k));
    if let Some(r) = rejected(report.clone(), ctx) {
        return r;
    }
    let xid = x_id(ctx, x);
    if !ctx.f.is_fully_k_normalized(xid, &k.k) {
        return report.skip(
            SkipReason::NotFullyKNormalized,
            "X is not fully K-normalized in F",
        );
    }
    let ex = match ctx.product(xid) {
        Ok(ex) => ex,
        Err(e) => return report.fail(format!("EX could not be formed: {e}")),
    };
    let ex_x = ex.id(x).expect("X ≤ TX");
    let report = report
        .stat("conjugates", ex.conjugates(ex_x).len() as u64)
        .stat("tx_order", ex.s().order() as u64);
    if ex.is_fully_k_normalized(ex_x, &k.k) {
        report
    } else {
        report.fail(format!(
            "X is not fully K-normalized in EX over a subgroup of order {}",
            ex.s().order()
        ))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// `K ⊴⊴ K·Inn(X)`.
    Direct,
    /// `K` replaced by `K ∩ Aut_F(X)`.
    Reduced,
}

/// The six conclusions of the main theorem for one `(X, K)`, each `None`
/// when it holds or a witness when it does not.
#[derive(Clone, Debug)]
pub struct TheoremConditions {
    pub branch: Branch,
    /// (i) `M = N ∩ bN_L^K(X)` is partial normal in `bN_L^K(X)`.
    pub partial_normal: Option<String>,
    /// (ii) `M ∩ S = M ∩ N_S^K(X) = N_T^K(X)`.
    pub intersection: Option<String>,
    /// (iii) `E_0 = F_{N_T^K(X)}(M)` is normal in `N_F^K(X)`.
    pub normal: Option<String>,
    /// (iv) `E_0 ⊆ E`.
    pub contained: Option<String>,
    /// (v) `E_0` is a subsystem of `N_{EX}^K(X)` of `p`-power index, and
    /// the criterion `O^p(Aut_{N_{EX}^K(X)}(T_0)) ≤ Aut_{E_0}(T_0)` agrees.
    pub p_power_index: Option<String>,
    /// (vi) `E_0` is saturated.
    pub saturated: Option<String>,
    /// `E_0 = E` as hom-sets.
    pub equals_e: bool,
    pub m_size: usize,
    pub t0_order: usize,
    pub e0: FusionSystem,
}

impl TheoremConditions {
    fn failures(&self, which: &[usize]) -> Vec<String> {
        let all = [
            &self.partial_normal,
            &self.intersection,
            &self.normal,
            &self.contained,
            &self.p_power_index,
            &self.saturated,
        ];
        const NAMES: [&str; 6] = ["i", "ii", "iii", "iv", "v", "vi"];
        which
            .iter()
            .filter_map(|&i| all[i].as_ref().map(|w| format!("({}) {}", NAMES[i], w)))
            .collect()
    }
}

/// Why [`theorem_conditions`] produced no conditions.
#[derive(Clone, Debug)]
pub enum Prep {
    /// A hypothesis fails.
    Skip(SkipReason, String),
    /// A structure the conditions need could not be built.
    Broken(String),
}

/// `K ∩ Aut_F(X)` as an explicit subgroup of `Aut(X)`.
fn reduce(ctx: &EntryContext, x: &Subgroup, k: &AutSubgroup) -> Option<AutSubgroup> {
    let aut = ctx.aut(x).ok()?;
    let aut_f = ctx.aut_g(x, &aut);
    let members = k.resolve(&aut).intersection(&aut_f);
    Some(AutSubgroup::explicit(&aut, members))
}

/// Evaluates conditions (i)–(vi) of the main theorem for `(X, K)`.
pub fn theorem_conditions(
    ctx: &EntryContext,
    x: &Subgroup,
    k: &AutSubgroup,
) -> Result<TheoremConditions, Prep> {
    let g = &*ctx.group;
    if let Err(why) = &ctx.locality {
        return Err(Prep::Skip(SkipReason::EntryRejected, why.clone()));
    }
    let xid = x_id(ctx, x);
    if !ctx.f.is_fully_k_normalized(xid, k) {
        return Err(Prep::Skip(
            SkipReason::NotFullyKNormalized,
            String::from("X is not fully K-normalized in F"),
        ));
    }
    let (branch, k) = if k_subnormal_in_k_inn(g, k) {
        (Branch::Direct, k.clone())
    } else {
        match reduce(ctx, x, k) {
            Some(k0) if k_subnormal_in_k_inn(g, &k0) => (Branch::Reduced, k0),
            _ => {
                return Err(Prep::Skip(
                    SkipReason::KNotSubnormal,
                    String::from(
                        "neither K nor K ∩ Aut_F(X) is subnormal in its product with Inn(X)",
                    ),
                ))
            }
        }
    };
    let n = match ctx.normal.as_ref().expect("accepted locality") {
        Ok(n) => n,
        Err(e) => {
            return Err(Prep::Broken(format!(
                "no partial normal subgroup for E: {e}"
            )))
        }
    };
    let restricted = ctx
        .restricted(xid, &k)
        .map_err(|e| Prep::Broken(format!("bN_L^K(X) could not be formed: {e}")))?;
    let (bn, nfk) = &*restricted;
    let m = PartialSubgroup::from_bits(n.elements().intersection(bn.elements()));
    let t0 = g.k_normalizer(&ctx.t, x, &k);

    let partial_normal = bn.partial_normal_failure(&m);

    let m_s = g
        .subgroup_from_bits(m.elements().intersection(ctx.s.bits()))
        .ok();
    let m_base = g
        .subgroup_from_bits(m.elements().intersection(bn.base().bits()))
        .ok();
    let intersection = if m_s.as_ref() != Some(&t0) {
        Some(format!(
            "M ∩ S differs from N_T^K(X) of order {}",
            t0.order()
        ))
    } else if m_base.as_ref() != Some(&t0) {
        Some(format!(
            "M ∩ N_S^K(X) differs from N_T^K(X) of order {}",
            t0.order()
        ))
    } else {
        None
    };

    let e0 = bn
        .fusion_of_partial(&m)
        .map_err(|e| Prep::Broken(format!("F(M) could not be formed: {e}")))?;

    let normal = nfk.normal_failure(&e0);
    let contained =
        (!e0.is_subsystem_of(&ctx.e)).then(|| String::from("E_0 has a morphism outside E"));

    let ex = ctx
        .product(xid)
        .map_err(|e| Prep::Broken(format!("EX could not be formed: {e}")))?;
    let p_power_index = p_power_index_condition(&ex, x, &k, &e0, &t0);
    let saturated = e0.saturation_failure();
    let equals_e = e0 == ctx.e;
    Ok(TheoremConditions {
        e0,
        branch,
        partial_normal,
        intersection,
        normal,
        contained,
        p_power_index,
        saturated,
        equals_e,
        m_size: m.size(),
        t0_order: t0.order(),
    })
}

fn p_power_index_condition(
    ex: &Arc<FusionSystem>,
    x: &Subgroup,
    k: &AutSubgroup,
    e0: &FusionSystem,
    t0: &Subgroup,
) -> Option<String> {
    let ex_x = ex.id(x).expect("X ≤ TX");
    let nex = ex.k_normalizer_system(ex_x, k);
    if e0.s() != t0 {
        return Some(String::from("E_0 does not live over N_T^K(X)"));
    }
    if !e0.is_subsystem_of(&nex) {
        return Some(String::from("E_0 is not a subsystem of N_EX^K(X)"));
    }
    let index = nex.p_power_index_failure(e0);
    let t0_id = nex.id(t0).expect("T_0 ≤ N_S^K(X)");
    let e0_t0 = e0.id(t0).expect("T_0 is E_0's Sylow");
    let have: Vec<_> = e0.automorphisms(e0_t0).collect();
    let criterion = nex
        .op_prime_automorphisms(t0_id)
        .iter()
        .all(|a| have.contains(&a));
    match (index, criterion) {
        (None, true) => None,
        (Some(w), false) => Some(w),
        (None, false) => Some(String::from(
            "p-power index holds but O^p(Aut_N(T_0)) ≤ Aut_E0(T_0) does not",
        )),
        (Some(w), true) => Some(format!("{w}; yet O^p(Aut_N(T_0)) ≤ Aut_E0(T_0) holds")),
    }
}

/// Theorem 3.2: part (a) checks conditions (iii)–(vi), part (b) checks
/// (i), (ii), (v) and (vi); both identify `E_0` with `N_E^K(X)` via (v)
/// and (vi).
pub fn check_main_theorem(
    ctx: &EntryContext,
    x: &Subgroup,
    k: &KChoice,
    statement: Statement,
) -> VerificationReport {
    let g = &*ctx.group;
    let report = VerificationReport::new(&ctx.name, statement, instance(g, x, k));
    let which: &[usize] = match statement {
        Statement::Theorem32a => &[2, 3, 4, 5],
        _ => &[0, 1, 4, 5],
    };
    match theorem_conditions(ctx, x, &k.k) {
        Err(Prep::Skip(reason, note)) => report.skip(reason, note),
        Err(Prep::Broken(w)) => report.fail(w),
        Ok(c) => {
            let report = report
                .stat("reduced_branch", (c.branch == Branch::Reduced) as u64)
                .stat("m_size", c.m_size as u64)
                .stat("t0_order", c.t0_order as u64);
            let failures = c.failures(which);
            if failures.is_empty() {
                report
            } else {
                report.fail(failures.join("; "))
            }
        }
    }
}

/// Corollary 3.3: the main theorem with `K = Aut(X)` when `X` is fully
/// normalized and with `K = 1` when `X` is fully centralized. For `X = 1`
/// part (a) also requires `E_0 = E`.
pub fn check_corollary(
    ctx: &EntryContext,
    x: &Subgroup,
    statement: Statement,
) -> VerificationReport {
    let g = &*ctx.group;
    let report = VerificationReport::new(&ctx.name, statement, describe(g, x));
    if let Some(r) = rejected(report.clone(), ctx) {
        return r;
    }
    let xid = x_id(ctx, x);
    let cases = [
        (
            "normalizer",
            ctx.f.is_fully_normalized(xid),
            AutSubgroup::Full,
        ),
        (
            "centralizer",
            ctx.f.is_fully_centralized(xid),
            AutSubgroup::Trivial,
        ),
    ];
    if !cases.iter().any(|c| c.1) {
        return report.skip(
            SkipReason::NotFullyNormalized,
            "X is neither fully normalized nor fully centralized",
        );
    }
    let which: &[usize] = match statement {
        Statement::Corollary33a => &[2, 3, 4, 5],
        _ => &[0, 1, 4, 5],
    };
    let mut report = report;
    let mut failures = Vec::new();
    for (name, applies, k) in cases {
        if !applies {
            continue;
        }
        report = report.stat(name, 1);
        match theorem_conditions(ctx, x, &k) {
            Err(Prep::Skip(_, note)) => failures.push(format!("{name}: unexpected skip: {note}")),
            Err(Prep::Broken(w)) => failures.push(format!("{name}: {w}")),
            Ok(c) => {
                for f in c.failures(which) {
                    failures.push(format!("{name}: {f}"));
                }
                if statement == Statement::Corollary33a && x.is_trivial() && !c.equals_e {
                    failures.push(format!("{name}: E_0 differs from E for X = 1"));
                }
            }
        }
    }
    if failures.is_empty() {
        report
    } else {
        report.fail(failures.join("; "))
    }
}
