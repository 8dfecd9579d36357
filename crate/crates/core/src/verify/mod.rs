//! Statement checkers over concrete corpus entries.
//!
//! Each checker takes validated structures (a group, its fusion system, a
//! subcentric locality, a partial normal subgroup) and reports whether a
//! statement's conclusion holds for one instance. A failed precondition
//! gives a skip with a reason, never a failure.

mod checks;
mod context;
mod suite;

pub use checks::{
    check_char_p_normalizer_a, check_char_p_normalizer_b, check_corollary,
    check_fully_k_normalized_transfer, check_main_theorem, check_restricted_subcentric,
    theorem_conditions, Branch, Prep, TheoremConditions,
};
pub use context::{EntryContext, KChoice};
pub use suite::{run_entry, run_suite, EntrySpec, KSpec, SuiteConfig};

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use core::fmt;

/// The checked statements. `Setup` covers saturation of `F_S(G)`, the
/// subcentric locality, and the partial normal subgroup for `E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Statement {
    #[cfg_attr(feature = "serde", serde(rename = "Setup"))]
    Setup,
    #[cfg_attr(feature = "serde", serde(rename = "Lemma-2.1"))]
    Lemma21,
    #[cfg_attr(feature = "serde", serde(rename = "Lemma-2.2a"))]
    Lemma22a,
    #[cfg_attr(feature = "serde", serde(rename = "Lemma-2.2b"))]
    Lemma22b,
    #[cfg_attr(feature = "serde", serde(rename = "Lemma-3.1"))]
    Lemma31,
    #[cfg_attr(feature = "serde", serde(rename = "Theorem-3.2a"))]
    Theorem32a,
    #[cfg_attr(feature = "serde", serde(rename = "Theorem-3.2b"))]
    Theorem32b,
    #[cfg_attr(feature = "serde", serde(rename = "Corollary-3.3a"))]
    Corollary33a,
    #[cfg_attr(feature = "serde", serde(rename = "Corollary-3.3b"))]
    Corollary33b,
}

impl Statement {
    pub const ALL: [Statement; 9] = [
        Statement::Setup,
        Statement::Lemma21,
        Statement::Lemma22a,
        Statement::Lemma22b,
        Statement::Lemma31,
        Statement::Theorem32a,
        Statement::Theorem32b,
        Statement::Corollary33a,
        Statement::Corollary33b,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Setup => "Setup",
            Statement::Lemma21 => "Lemma-2.1",
            Statement::Lemma22a => "Lemma-2.2a",
            Statement::Lemma22b => "Lemma-2.2b",
            Statement::Lemma31 => "Lemma-3.1",
            Statement::Theorem32a => "Theorem-3.2a",
            Statement::Theorem32b => "Theorem-3.2b",
            Statement::Corollary33a => "Corollary-3.3a",
            Statement::Corollary33b => "Corollary-3.3b",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|s| s.id() == id)
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum SkipReason {
    /// The entry's group does not give a subcentric locality.
    EntryRejected,
    NotCharacteristicP,
    NotFullyKNormalized,
    /// Neither `X` nor its `K`-variant satisfies the subnormality hypothesis.
    KNotSubnormal,
    /// `X` is neither fully normalized nor fully centralized.
    NotFullyNormalized,
    /// A `K` given by conjugating elements that do not normalize `X`.
    KNotAutomorphisms,
    /// `Aut(X)` too large to enumerate.
    CapExceeded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(
    feature = "serde",
    serde(rename_all = "kebab-case", tag = "status", content = "reason")
)]
pub enum Outcome {
    Pass,
    Fail,
    Skipped(SkipReason),
}

impl Outcome {
    pub fn is_fail(self) -> bool {
        self == Outcome::Fail
    }
}

/// Outcome of one statement on one instance. A failure always carries a
/// witness.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VerificationReport {
    pub entry: String,
    pub statement: Statement,
    pub instance: String,
    pub outcome: Outcome,
    #[cfg_attr(
        feature = "serde",
        serde(skip_serializing_if = "Option::is_none", default)
    )]
    pub witness: Option<String>,
    /// Details of a skip.
    #[cfg_attr(
        feature = "serde",
        serde(skip_serializing_if = "Option::is_none", default)
    )]
    pub note: Option<String>,
    pub stats: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn new(entry: &str, statement: Statement, instance: impl Into<String>) -> Self {
        VerificationReport {
            entry: entry.to_string(),
            statement,
            instance: instance.into(),
            outcome: Outcome::Pass,
            witness: None,
            note: None,
            stats: BTreeMap::new(),
        }
    }

    pub fn stat(mut self, key: &str, value: u64) -> Self {
        self.stats.insert(key.to_string(), value);
        self
    }

    pub fn fail(mut self, witness: impl Into<String>) -> Self {
        self.outcome = Outcome::Fail;
        self.witness = Some(witness.into());
        self
    }

    pub fn skip(mut self, reason: SkipReason, detail: impl Into<String>) -> Self {
        self.outcome = Outcome::Skipped(reason);
        self.note = Some(detail.into());
        self
    }

    /// Sort key for the canonical report order.
    pub fn key(&self) -> (&str, &'static str, &str) {
        (&self.entry, self.statement.id(), &self.instance)
    }
}
