//! Acceptance criteria, one line each. Run with
//! `cargo test -p plocal --test acceptance`.

#[path = "../../core/tests/support/oracle.rs"]
mod oracle;

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use plocal::{parse_corpus, run, CorpusEntry, RunConfig, DEFAULT_CORPUS, EXTENDED_CORPUS};
use plocal_core::verify::{Outcome, SkipReason, Statement, VerificationReport};
use plocal_core::{FiniteGroup, Limits};

const AXIOM_LIMIT: Duration = Duration::from_secs(5 * 60);
const LEMMA22_LIMIT: Duration = Duration::from_secs(10 * 60);
const THEOREM_LIMIT: Duration = Duration::from_secs(15 * 60);
const MAX_LEMMA22_ORDER: usize = 48;
const MAX_ORACLE_ORDER: usize = 24;

struct Line {
    ok: bool,
    text: String,
}

fn line(ok: bool, text: String) -> Line {
    Line { ok, text }
}

struct Run {
    entries: Vec<CorpusEntry>,
    reports: Vec<VerificationReport>,
    elapsed: Duration,
}

fn run_corpus(text: &str) -> Run {
    let started = Instant::now();
    let out = run(&RunConfig::default(), text).expect("corpus runs");
    Run {
        entries: parse_corpus(text, Limits::default()).unwrap(),
        reports: out.reports,
        elapsed: started.elapsed(),
    }
}

fn of(reports: &[VerificationReport], s: Statement) -> impl Iterator<Item = &VerificationReport> {
    reports.iter().filter(move |r| r.statement == s)
}

fn fails(reports: &[VerificationReport], s: Statement) -> usize {
    of(reports, s).filter(|r| r.outcome.is_fail()).count()
}

fn passes(reports: &[VerificationReport], s: Statement) -> usize {
    of(reports, s)
        .filter(|r| r.outcome == Outcome::Pass)
        .count()
}

fn is_trivial_x(r: &VerificationReport) -> bool {
    r.instance.starts_with("X=<>")
}

fn k_label(r: &VerificationReport) -> &str {
    r.instance.rsplit_once(" K=").map_or("", |(_, k)| k)
}

fn group_of(e: &CorpusEntry) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::generate(&e.generators, Limits::default()).unwrap())
}

fn axiom_soundness(default: &Run) -> Line {
    let setup: Vec<_> = of(&default.reports, Statement::Setup).collect();
    let accepted = setup.iter().filter(|r| r.outcome == Outcome::Pass).count();
    let rejected_with_witness = setup
        .iter()
        .filter(|r| {
            r.outcome == Outcome::Skipped(SkipReason::EntryRejected)
                && r.note.as_deref().is_some_and(|n| !n.is_empty())
        })
        .count();
    let ok = setup.len() == default.entries.len()
        && accepted + rejected_with_witness == setup.len()
        && accepted >= 3
        && default.elapsed <= AXIOM_LIMIT;
    line(
        ok,
        format!(
            "axiom soundness: {accepted}/{} default entries accepted (need >= 3), {rejected_with_witness} rejected with witness, {:.1} s (limit {} s)",
            setup.len(),
            default.elapsed.as_secs_f64(),
            AXIOM_LIMIT.as_secs()
        ),
    )
}

/// Expected Lemma 2.2(b) instance count for an entry: every `p`-subgroup
/// `X`, and every subgroup of `Aut(X)` when `|Aut(X)| <= 24`.
fn expected_lemma22b(g: &FiniteGroup, p: u32) -> Option<usize> {
    let mut total = 0;
    for x in g.all_subgroups(&g.whole()).ok()? {
        if !g.is_p_group(&x, p) {
            continue;
        }
        let aut = g.aut_group(&x).ok()?;
        if aut.order() > 24 {
            return None;
        }
        total += aut.group().all_subgroups(&aut.all()).ok()?.len();
    }
    Some(total)
}

fn lemma22(runs: &[&Run], elapsed: Duration) -> Line {
    let (mut entries, mut cases, mut identities, mut failures, mut coverage_gaps) =
        (0, 0, 0, 0, Vec::new());
    for run in runs {
        for e in &run.entries {
            let g = group_of(e);
            if g.order() > MAX_LEMMA22_ORDER || !g.is_characteristic_p(&g.whole(), e.p) {
                continue;
            }
            entries += 1;
            let mine: Vec<_> = run
                .reports
                .iter()
                .filter(|r| r.entry == e.name)
                .cloned()
                .collect();
            failures += fails(&mine, Statement::Lemma22a) + fails(&mine, Statement::Lemma22b);
            cases += passes(&mine, Statement::Lemma22a) + passes(&mine, Statement::Lemma22b);
            let b: Vec<_> = of(&mine, Statement::Lemma22b).collect();
            let held = b
                .iter()
                .filter(|r| r.stats.get("identity") == Some(&1))
                .count();
            identities += held;
            let bad_skip = b.iter().any(
                |r| matches!(r.outcome, Outcome::Skipped(s) if s != SkipReason::KNotSubnormal),
            );
            let b_pass = b.iter().filter(|r| r.outcome == Outcome::Pass).count();
            if expected_lemma22b(&g, e.p) != Some(b.len()) || bad_skip || held != b_pass {
                coverage_gaps.push(e.name.clone());
            }
        }
    }
    let ok = entries > 0 && failures == 0 && coverage_gaps.is_empty() && elapsed <= LEMMA22_LIMIT;
    line(
        ok,
        format!(
            "Lemma 2.2 exhaustive: {cases} passing cases over {entries} characteristic-p entries, {failures} failures, identity N_G^(K·Inn(X))(X) = N_G^K(X)·X held {identities} times, coverage gaps {:?}, {:.1} s (limit {} s)",
            coverage_gaps,
            elapsed.as_secs_f64(),
            LEMMA22_LIMIT.as_secs()
        ),
    )
}

fn lemma21(all: &[VerificationReport]) -> Line {
    let nondegenerate = of(all, Statement::Lemma21)
        .filter(|r| r.outcome == Outcome::Pass && !is_trivial_x(r))
        .count();
    let failures = fails(all, Statement::Lemma21);
    line(
        nondegenerate >= 5 && failures == 0,
        format!("Lemma 2.1: {nondegenerate} non-degenerate restricted localities verified (need >= 5), {failures} failures"),
    )
}

fn lemma31(all: &[VerificationReport]) -> Line {
    let reports: Vec<_> = of(all, Statement::Lemma31).collect();
    let failures = reports.iter().filter(|r| r.outcome.is_fail()).count();
    let pass = reports
        .iter()
        .filter(|r| r.outcome == Outcome::Pass)
        .count();
    let proper = reports
        .iter()
        .filter(|r| r.outcome == Outcome::Pass && !matches!(k_label(r), "aut" | "id"))
        .count();
    let unexpected_skips = reports
        .iter()
        .filter(|r| {
            matches!(r.outcome, Outcome::Skipped(s) if s != SkipReason::NotFullyKNormalized && s != SkipReason::EntryRejected)
        })
        .count();
    line(
        failures == 0 && proper >= 3 && unexpected_skips == 0,
        format!("Lemma 3.1: {pass} fully K-normalized pairs pass, {proper} with K other than Aut(X) and 1 (need >= 3), {failures} failures"),
    )
}

fn theorem(all: &[VerificationReport], elapsed: Duration) -> Line {
    let mut per_entry: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for r in all
        .iter()
        .filter(|r| matches!(r.statement, Statement::Theorem32a | Statement::Theorem32b))
    {
        let c = per_entry.entry(&r.entry).or_default();
        match r.outcome {
            Outcome::Pass => c.0 += 1,
            Outcome::Fail => c.1 += 1,
            Outcome::Skipped(
                SkipReason::NotFullyKNormalized
                | SkipReason::KNotSubnormal
                | SkipReason::EntryRejected,
            ) => {}
            Outcome::Skipped(_) => c.2 += 1,
        }
    }
    let clean: Vec<&str> = per_entry
        .iter()
        .filter(|(_, c)| c.0 > 0 && c.1 == 0 && c.2 == 0)
        .map(|(n, _)| *n)
        .collect();
    let failures: usize = per_entry.values().map(|c| c.1).sum();
    let reduced = all
        .iter()
        .filter(|r| {
            r.statement == Statement::Theorem32a && r.stats.get("reduced_branch") == Some(&1)
        })
        .count();
    let instances = passes(all, Statement::Theorem32a);
    let ok =
        clean.contains(&"s4-a4") && clean.len() >= 2 && failures == 0 && elapsed <= THEOREM_LIMIT;
    line(
        ok,
        format!(
            "Theorem 3.2: conditions (i)-(vi) hold on every admissible (X, K) for {} pairs {:?}, {instances} instances, cross-check agreed in all of them, {reduced} via K ∩ Aut_F(X), {failures} failures, {:.1} s (limit {} s)",
            clean.len(),
            clean,
            elapsed.as_secs_f64(),
            THEOREM_LIMIT.as_secs()
        ),
    )
}

fn corollary(all: &[VerificationReport]) -> Line {
    let reports: Vec<_> = all
        .iter()
        .filter(|r| {
            matches!(
                r.statement,
                Statement::Corollary33a | Statement::Corollary33b
            )
        })
        .collect();
    let failures = reports.iter().filter(|r| r.outcome.is_fail()).count();
    let normalizer = reports
        .iter()
        .filter(|r| r.outcome == Outcome::Pass && r.stats.contains_key("normalizer"))
        .count();
    let centralizer = reports
        .iter()
        .filter(|r| r.outcome == Outcome::Pass && r.stats.contains_key("centralizer"))
        .count();
    let accepted: Vec<&str> = of(all, Statement::Setup)
        .filter(|r| r.outcome == Outcome::Pass)
        .map(|r| r.entry.as_str())
        .collect();
    let trivial_ok = accepted.iter().all(|e| {
        reports.iter().any(|r| {
            r.entry == *e
                && r.statement == Statement::Corollary33a
                && is_trivial_x(r)
                && r.outcome == Outcome::Pass
        })
    });
    let unexpected_skips = reports
        .iter()
        .filter(|r| {
            matches!(r.outcome, Outcome::Skipped(s) if s != SkipReason::NotFullyNormalized && s != SkipReason::EntryRejected)
        })
        .count();
    line(
        failures == 0 && normalizer > 0 && centralizer > 0 && trivial_ok && unexpected_skips == 0,
        format!(
            "Corollary 3.3: {normalizer} normalizer and {centralizer} centralizer cases pass, X = 1 gives E_0 = E on all {} accepted entries: {trivial_ok}, {failures} failures",
            accepted.len()
        ),
    )
}

fn oracles() -> Line {
    let started = Instant::now();
    let groups = oracle::catalogue();
    let mut comparisons = 0;
    let mut mismatch = None;
    for (name, g) in &groups {
        if g.order() > MAX_ORACLE_ORDER {
            continue;
        }
        match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| oracle::compare(name, g))) {
            Ok(n) => comparisons += n,
            Err(_) => {
                mismatch = Some(name.clone());
                break;
            }
        }
    }
    line(
        mismatch.is_none(),
        format!(
            "oracle equivalence: subgroups, subnormality, Sylow and O_p agree on {} groups of order <= {MAX_ORACLE_ORDER} ({comparisons} comparisons, first mismatch {:?}), {:.1} s",
            groups.len(),
            mismatch,
            started.elapsed().as_secs_f64()
        ),
    )
}

fn determinism() -> Line {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for p in &paths {
        let config = RunConfig {
            report: Some(p.clone()),
            ..Default::default()
        };
        run(&config, DEFAULT_CORPUS).unwrap();
    }
    let a = std::fs::read(&paths[0]).unwrap();
    let b = std::fs::read(&paths[1]).unwrap();
    line(
        a == b,
        format!(
            "determinism: two default runs wrote byte-identical reports ({} bytes)",
            a.len()
        ),
    )
}

fn main() -> ExitCode {
    let default = run_corpus(DEFAULT_CORPUS);
    let extended = run_corpus(EXTENDED_CORPUS);
    let all: Vec<VerificationReport> = default
        .reports
        .iter()
        .chain(&extended.reports)
        .cloned()
        .collect();
    let total = default.elapsed + extended.elapsed;
    let lines = [
        axiom_soundness(&default),
        lemma22(&[&default, &extended], total),
        lemma21(&all),
        lemma31(&all),
        theorem(&all, total),
        corollary(&all),
        oracles(),
        determinism(),
    ];
    let mut ok = true;
    for (i, l) in lines.iter().enumerate() {
        println!(
            "[{}] {}. {}",
            if l.ok { "PASS" } else { "FAIL" },
            i + 1,
            l.text
        );
        ok &= l.ok;
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
