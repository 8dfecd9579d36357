use std::collections::BTreeMap;
use std::fmt;

use plocal_core::verify::{Outcome, Statement, VerificationReport};

/// The canonical JSON body: a pretty-printed array in report order.
pub fn to_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub counts: BTreeMap<Statement, Counts>,
    /// `entry statement instance: witness` for every failure.
    pub failures: Vec<String>,
}

impl Summary {
    pub fn of(reports: &[VerificationReport]) -> Self {
        let mut s = Summary::default();
        for r in reports {
            let c = s.counts.entry(r.statement).or_default();
            match r.outcome {
                Outcome::Pass => c.pass += 1,
                Outcome::Fail => {
                    c.fail += 1;
                    s.failures.push(format!(
                        "{} {} {}: {}",
                        r.entry,
                        r.statement,
                        r.instance,
                        r.witness.as_deref().unwrap_or("")
                    ));
                }
                Outcome::Skipped(_) => c.skipped += 1,
            }
        }
        s
    }

    pub fn failed(&self) -> bool {
        !self.failures.is_empty()
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "{:<16} {:>6} {:>6} {:>8}",
            "statement", "pass", "fail", "skipped"
        )?;
        for (s, c) in &self.counts {
            writeln!(
                f,
                "{:<16} {:>6} {:>6} {:>8}",
                s.id(),
                c.pass,
                c.fail,
                c.skipped
            )?;
        }
        for line in &self.failures {
            writeln!(f, "FAIL {line}")?;
        }
        Ok(())
    }
}
