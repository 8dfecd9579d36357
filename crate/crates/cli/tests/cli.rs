use std::process::Command;

use plocal::report::to_json;
use plocal::{execute, parse_corpus, run, CliError, RunConfig, DEFAULT_CORPUS};
use plocal_core::verify::{Outcome, SkipReason, Statement};
use plocal_core::Limits;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_plocal"))
}

#[test]
fn default_corpus_exits_zero_and_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let out = bin()
        .arg("--report")
        .arg(&report)
        .arg("--cache-dir")
        .arg(dir.path().join("cache"))
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.contains("Theorem-3.2a"));
    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let arr = json.as_array().unwrap();
    assert!(!arr.is_empty());
    for r in arr {
        for key in ["entry", "statement", "instance", "outcome", "stats"] {
            assert!(r.get(key).is_some(), "missing {key}");
        }
    }
}

#[test]
fn statement_filter() {
    let config = RunConfig {
        statements: Some([Statement::Lemma22b].into()),
        ..Default::default()
    };
    let out = run(&config, DEFAULT_CORPUS).unwrap();
    assert!(!out.reports.is_empty());
    assert!(out
        .reports
        .iter()
        .all(|r| r.statement == Statement::Lemma22b));

    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.json");
    let status = bin()
        .args(["--statement", "Lemma-2.2b", "--no-cache", "--report"])
        .arg(&report)
        .status()
        .unwrap();
    assert!(status.success());
    let text = std::fs::read_to_string(&report).unwrap();
    assert!(text.contains("Lemma-2.2b") && !text.contains("Theorem-3.2a"));
}

#[test]
fn cache_never_changes_outcomes() {
    let dir = tempfile::tempdir().unwrap();
    let cached = RunConfig {
        cache_dir: Some(dir.path().join("cache")),
        ..Default::default()
    };
    let cold = run(&cached, DEFAULT_CORPUS).unwrap();
    let warm = run(&cached, DEFAULT_CORPUS).unwrap();
    let none = run(&RunConfig::default(), DEFAULT_CORPUS).unwrap();
    assert!(warm.cache.as_ref().unwrap().hits() > 0);
    assert_eq!(warm.cache.as_ref().unwrap().misses(), 0);
    assert_eq!(to_json(&cold.reports), to_json(&none.reports));
    assert_eq!(to_json(&warm.reports), to_json(&none.reports));
}

#[test]
fn garbage_in_cache_is_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let config = RunConfig {
        cache_dir: Some(cache.clone()),
        ..Default::default()
    };
    let first = run(&config, DEFAULT_CORPUS).unwrap();
    for f in std::fs::read_dir(&cache).unwrap() {
        std::fs::write(f.unwrap().path(), b"not a lattice").unwrap();
    }
    let second = run(&config, DEFAULT_CORPUS).unwrap();
    assert_eq!(to_json(&first.reports), to_json(&second.reports));
}

#[test]
fn reports_are_deterministic_across_thread_counts() {
    let one = run(
        &RunConfig {
            jobs: 1,
            ..Default::default()
        },
        DEFAULT_CORPUS,
    )
    .unwrap();
    let many = run(
        &RunConfig {
            jobs: 4,
            ..Default::default()
        },
        DEFAULT_CORPUS,
    )
    .unwrap();
    assert_eq!(to_json(&one.reports), to_json(&many.reports));
}

#[test]
fn unreadable_cache_dir_is_an_io_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("not-a-dir");
    std::fs::write(&file, b"x").unwrap();
    let config = RunConfig {
        cache_dir: Some(file.clone()),
        ..Default::default()
    };
    match run(&config, DEFAULT_CORPUS) {
        Err(CliError::Io { path, .. }) => assert_eq!(path, file),
        other => panic!(
            "expected an IO error, got {:?}",
            other.map(|o| o.reports.len())
        ),
    }
    let status = bin()
        .arg("--cache-dir")
        .arg(&file)
        .arg("--report")
        .arg(dir.path().join("r.json"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(2));
}

#[test]
fn parse_and_config_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("bad.txt");
    std::fs::write(
        &corpus,
        "group s4 p=2 gens=(0 1 2 3);(0 1)\nnormal gens=(0 1)\n",
    )
    .unwrap();
    let out = bin()
        .arg("--corpus")
        .arg(&corpus)
        .arg("--no-cache")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not normal"));

    std::fs::write(&corpus, "group s4 p=2 gens=(0 1 2 3);(0 1\n").unwrap();
    let out = bin()
        .arg("--corpus")
        .arg(&corpus)
        .arg("--no-cache")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1, column"));

    let out = bin()
        .args(["--statement", "Lemma-9.9", "--no-cache"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin().args(["--max-elements", "0"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = bin()
        .arg("--corpus")
        .arg(dir.path().join("missing.txt"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn element_cap_rejects_large_groups() {
    let config = RunConfig {
        limits: Limits {
            max_elements: 10,
            ..Limits::default()
        },
        ..Default::default()
    };
    assert!(run(&config, DEFAULT_CORPUS).is_err());
}

#[test]
fn rejected_entry_carries_reasons() {
    let text = "group s3-p2 p=2 gens=(0 1 2);(0 1)\nnormal gens=(0 1 2);(0 1)\n";
    let entries = parse_corpus(text, Limits::default()).unwrap();
    let out = execute(&RunConfig::default(), &entries).unwrap();
    let setup = out
        .reports
        .iter()
        .find(|r| r.statement == Statement::Setup)
        .unwrap();
    assert_eq!(setup.outcome, Outcome::Skipped(SkipReason::EntryRejected));
    assert!(setup.note.as_deref().unwrap().contains("characteristic p"));
    for r in out
        .reports
        .iter()
        .filter(|r| r.statement == Statement::Theorem32a)
    {
        assert_eq!(r.outcome, Outcome::Skipped(SkipReason::EntryRejected));
        assert!(r.note.is_some());
    }
}

#[test]
fn failures_flip_the_summary() {
    // a report with a failing outcome flips the summary
    let mut r = plocal_core::verify::VerificationReport::new("e", Statement::Lemma21, "X=<>");
    r = r.fail("witness");
    let summary = plocal::Summary::of(&[r]);
    assert!(summary.failed());
    assert!(summary.to_string().contains("FAIL e Lemma-2.1"));
}

#[test]
fn default_corpus_covers_every_statement() {
    let out = run(&RunConfig::default(), DEFAULT_CORPUS).unwrap();
    for s in Statement::ALL
        .into_iter()
        .filter(|&s| s != Statement::Setup)
    {
        for entry in ["s4-a4", "d8", "s3-p3", "sl23-q8"] {
            assert!(
                out.reports
                    .iter()
                    .any(|r| r.statement == s && r.entry == entry),
                "{s} never ran on {entry}"
            );
        }
        let nondegenerate = out
            .reports
            .iter()
            .filter(|r| {
                r.statement == s && r.outcome == Outcome::Pass && !r.instance.starts_with("X=<>")
            })
            .count();
        assert!(nondegenerate >= 3, "{s}: {nondegenerate}");
    }
    assert!(!out.summary.failed());
}
