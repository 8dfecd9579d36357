use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::checks::{self, describe};
use super::context::{EntryContext, KChoice};
use super::{SkipReason, Statement, VerificationReport};
use crate::cache::LatticeCache;
use crate::error::{Error, Result};
use crate::groups::{AutSubgroup, Elem, FiniteGroup, Limits, Subgroup};
use crate::locality::WordFragment;
use crate::perm::Perm;

/// A descriptor for `K ≤ Aut(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KSpec {
    Aut,
    Inn,
    Id,
    /// Generated by conjugation with these elements of `G`.
    Gens(Vec<Perm>),
}

impl KSpec {
    pub fn label(&self) -> String {
        match self {
            KSpec::Aut => String::from("aut"),
            KSpec::Inn => String::from("inn"),
            KSpec::Id => String::from("id"),
            KSpec::Gens(gens) => {
                let g: Vec<String> = gens.iter().map(|p| format!("{p}")).collect();
                format!("gens:{}", g.join(";"))
            }
        }
    }
}

/// One corpus entry: `G = ⟨generators⟩`, `H = ⟨normal⟩ ⊴ G`, and optionally
/// fixed choices of `X` and `K` (otherwise all are swept).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EntrySpec {
    pub name: String,
    pub p: u32,
    pub generators: Vec<Perm>,
    pub normal: Vec<Perm>,
    pub xs: Vec<Vec<Perm>>,
    pub ks: Vec<KSpec>,
}

#[derive(Clone, Default)]
pub struct SuiteConfig {
    pub limits: Limits,
    pub fragment: WordFragment,
    /// `None` runs every statement.
    pub statements: Option<BTreeSet<Statement>>,
    pub cache: Option<Arc<dyn LatticeCache>>,
}

impl SuiteConfig {
    fn wants(&self, s: Statement) -> bool {
        self.statements.as_ref().is_none_or(|set| set.contains(&s))
    }

    fn wants_locality(&self) -> bool {
        Statement::ALL
            .iter()
            .any(|&s| !matches!(s, Statement::Lemma22a | Statement::Lemma22b) && self.wants(s))
    }
}

/// The group, `H`, and the explicit `X` list of an entry, validated.
pub(crate) struct Prepared {
    pub group: Arc<FiniteGroup>,
    pub h: Subgroup,
    pub xs: Vec<Subgroup>,
}

pub(crate) fn prepare(spec: &EntrySpec, config: &SuiteConfig) -> Result<Prepared> {
    let invalid = |what: String| Error::InvalidEntry(format!("{}: {what}", spec.name));
    let mut group = FiniteGroup::generate(&spec.generators, config.limits)
        .map_err(|e| invalid(format!("{e}")))?;
    if let Some(c) = &config.cache {
        group = group.with_cache(c.clone());
    }
    let h = if spec.normal.is_empty() {
        group.trivial()
    } else {
        group
            .subgroup_generated_by(&spec.normal)
            .map_err(|e| invalid(format!("{e}")))?
    };
    if !group.is_normal(&h, &group.whole()) {
        return Err(invalid(String::from("the declared subgroup is not normal")));
    }
    let mut xs = Vec::new();
    for gens in &spec.xs {
        let x = if gens.is_empty() {
            group.trivial()
        } else {
            group
                .subgroup_generated_by(gens)
                .map_err(|e| invalid(format!("{e}")))?
        };
        if !group.is_p_group(&x, spec.p) {
            return Err(invalid(format!(
                "X of order {} is not a p-subgroup",
                x.order()
            )));
        }
        xs.push(x);
    }
    Ok(Prepared {
        group: Arc::new(group),
        h,
        xs,
    })
}

/// The first `g` with `x^g ≤ s`, and `x^g`.
fn conjugate_into(group: &FiniteGroup, x: &Subgroup, s: &Subgroup) -> (Subgroup, Elem) {
    (0..group.order() as Elem)
        .map(|g| (group.conjugate_subgroup(x, g), g))
        .find(|(y, _)| y.is_subgroup_of(s))
        .expect("Sylow's theorem")
}

/// Every `p`-subgroup of `G`: the distinct conjugates of subgroups of `S`.
fn all_p_subgroups(ctx: &EntryContext) -> Vec<Subgroup> {
    let g = &*ctx.group;
    let mut out = BTreeSet::new();
    for x in ctx.f.lattice().subgroups() {
        for a in 0..g.order() as u32 {
            out.insert(g.conjugate_subgroup(x, a));
        }
    }
    out.into_iter().collect()
}

/// `K` for `x`. Generators in `spec` act on the entry's `X`, and `x` is
/// that `X` conjugated by `conj`.
fn k_choices(
    ctx: &EntryContext,
    spec: &EntrySpec,
    x: &Subgroup,
    conj: Elem,
) -> core::result::Result<Vec<KChoice>, String> {
    if spec.ks.is_empty() {
        return Ok(ctx.default_k_choices(x));
    }
    let g = &*ctx.group;
    let mut out = Vec::new();
    for k in &spec.ks {
        let label = k.label();
        let choice = match k {
            KSpec::Aut => KChoice::new(&label, AutSubgroup::Full),
            KSpec::Id => KChoice::new(&label, AutSubgroup::Trivial),
            KSpec::Inn | KSpec::Gens(_) => {
                let aut = ctx.aut(x).map_err(|e| format!("{e}"))?;
                let members = match k {
                    KSpec::Inn => g.inn_group(&aut),
                    KSpec::Gens(gens) => {
                        let n = g.normalizer(&g.whole(), x);
                        let mut autos = Vec::new();
                        for p in gens {
                            let e = g
                                .index_of(p)
                                .or_else(|| p.padded(g.degree()).ok().and_then(|p| g.index_of(&p)));
                            match e.map(|e| g.conj(e, conj)).filter(|&e| n.contains(e)) {
                                Some(e) => autos.push(g.conjugation_on(x, e)),
                                None => return Err(format!("{p} does not normalize X")),
                            }
                        }
                        aut.generated_by(autos.iter())
                            .expect("conjugations are automorphisms")
                    }
                    _ => unreachable!(),
                };
                KChoice::new(&label, AutSubgroup::explicit(&aut, members))
            }
        };
        out.push(choice);
    }
    Ok(out)
}

fn setup_report(ctx: &EntryContext) -> VerificationReport {
    let report = VerificationReport::new(
        &ctx.name,
        Statement::Setup,
        format!("p={} |G|={}", ctx.p, ctx.group.order()),
    )
    .stat("order", ctx.group.order() as u64)
    .stat("sylow_order", ctx.s.order() as u64)
    .stat("morphisms", ctx.f.morphism_count() as u64);
    if let Some(w) = ctx.f.saturation_failure() {
        return report.fail(format!("F_S(G) is not saturated: {w}"));
    }
    let (l, axioms) = match &ctx.locality {
        Ok(pair) => pair,
        Err(why) => return report.skip(SkipReason::EntryRejected, why.clone()),
    };
    let report = report
        .stat("locality_elements", l.size() as u64)
        .stat("objects", l.objects().len() as u64)
        .stat("axiom_cases", axioms.cases());
    match ctx.normal.as_ref() {
        Some(Ok(n)) => report.stat("normal_elements", n.size() as u64),
        Some(Err(e)) => report.fail(format!("no partial normal subgroup for E: {e}")),
        None => report,
    }
}

/// Runs every selected statement on one entry. Reports are sorted by key.
pub fn run_entry(spec: &EntrySpec, config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let prepared = prepare(spec, config)?;
    let ctx = EntryContext::build(
        &spec.name,
        prepared.group,
        spec.p,
        prepared.h,
        config.fragment,
        config.wants_locality(),
    )?;
    let g = &*ctx.group;
    let mut out = Vec::new();
    if config.wants(Statement::Setup) {
        out.push(setup_report(&ctx));
    }

    let per_k =
        |statement: Statement, x: &Subgroup, conj: Elem, out: &mut Vec<VerificationReport>| {
            let choices = match k_choices(&ctx, spec, x, conj) {
                Ok(c) => c,
                Err(why) => {
                    out.push(
                        VerificationReport::new(&ctx.name, statement, describe(g, x))
                            .skip(SkipReason::KNotAutomorphisms, why),
                    );
                    return;
                }
            };
            for k in &choices {
                out.push(match statement {
                    Statement::Lemma21 => checks::check_restricted_subcentric(&ctx, x, k),
                    Statement::Lemma22b => checks::check_char_p_normalizer_b(&ctx, x, k),
                    Statement::Lemma31 => checks::check_fully_k_normalized_transfer(&ctx, x, k),
                    s => checks::check_main_theorem(&ctx, x, k, s),
                });
            }
        };

    if config.wants(Statement::Lemma22a) || config.wants(Statement::Lemma22b) {
        let xs = if !prepared.xs.is_empty() {
            prepared.xs.clone()
        } else if ctx.is_characteristic_p() {
            all_p_subgroups(&ctx)
        } else {
            alloc::vec![g.trivial()]
        };
        for x in &xs {
            if config.wants(Statement::Lemma22a) {
                out.push(checks::check_char_p_normalizer_a(&ctx, x));
            }
            if config.wants(Statement::Lemma22b) {
                per_k(Statement::Lemma22b, x, 0, &mut out);
            }
        }
    }

    let xs: Vec<(Subgroup, Elem)> = if prepared.xs.is_empty() {
        ctx.f
            .lattice()
            .subgroups()
            .iter()
            .map(|x| (x.clone(), 0))
            .collect()
    } else {
        let mut seen = BTreeSet::new();
        prepared
            .xs
            .iter()
            .map(|x| conjugate_into(g, x, &ctx.s))
            .filter(|(y, _)| seen.insert(y.clone()))
            .collect()
    };
    for (x, conj) in &xs {
        for s in [
            Statement::Lemma21,
            Statement::Lemma31,
            Statement::Theorem32a,
            Statement::Theorem32b,
        ] {
            if config.wants(s) {
                per_k(s, x, *conj, &mut out);
            }
        }
        for s in [Statement::Corollary33a, Statement::Corollary33b] {
            if config.wants(s) {
                out.push(checks::check_corollary(&ctx, x, s));
            }
        }
    }
    out.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(out)
}

/// Runs every entry in order and sorts all reports by
/// `(entry, statement, instance)`.
pub fn run_suite(specs: &[EntrySpec], config: &SuiteConfig) -> Result<Vec<VerificationReport>> {
    let mut out = Vec::new();
    for spec in specs {
        out.extend(run_entry(spec, config)?);
    }
    out.sort_by(|a, b| a.key().cmp(&b.key()));
    Ok(out)
}
