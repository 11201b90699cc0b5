//! Shared result types for identity checkers and theorem checkers.
//!
//! Every checker in this crate is exhaustive, so a failed property always
//! has a concrete witness: the first offending tuple in scan order, rendered
//! as `label=element-name` strings. Checkers never panic on mathematically
//! bad input — a violated identity is a reportable result, not an error —
//! which is what lets deliberately corrupted structures flow through the
//! same code paths in negative tests.
//!
//! [`CheckReport`] collects named property results (the identity suites).
//! [`TheoremVerdict`] is for implication-shaped statements: it records which
//! hypotheses hold and, when they all do, whether the conclusion held. A
//! verdict with true hypotheses and a false conclusion is flagged
//! [`VerdictFlag::CounterexampleToTheorem`] — for the proved theorems this
//! flags an implementation bug, loudly.

use alloc::string::String;
use alloc::vec::Vec;

use crate::group::FiniteGroup;

/// Outcome of one named property check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The property's precondition (e.g. an abelian carrier) does not hold.
    NotApplicable,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::NotApplicable => "not_applicable",
        }
    }
}

/// One property line: a stable name, a status, and (on failure) the first
/// counterexample in canonical element names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyCheck {
    pub property: String,
    pub status: CheckStatus,
    pub witness: Option<Vec<String>>,
}

/// An ordered list of property checks produced by one checker run.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub checks: Vec<PropertyCheck>,
}

impl CheckReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, property: &str) {
        self.checks.push(PropertyCheck {
            property: property.into(),
            status: CheckStatus::Pass,
            witness: None,
        });
    }

    pub fn fail(&mut self, property: &str, witness: Vec<String>) {
        self.checks.push(PropertyCheck {
            property: property.into(),
            status: CheckStatus::Fail,
            witness: Some(witness),
        });
    }

    pub fn not_applicable(&mut self, property: &str) {
        self.checks.push(PropertyCheck {
            property: property.into(),
            status: CheckStatus::NotApplicable,
            witness: None,
        });
    }

    /// Record `property` as passed, or failed with the given witness.
    pub fn record(&mut self, property: &str, outcome: Result<(), Vec<String>>) {
        match outcome {
            Ok(()) => self.pass(property),
            Err(witness) => self.fail(property, witness),
        }
    }

    /// True when no check failed (not-applicable entries do not count
    /// against a report).
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PropertyCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    /// Append all entries of `other`, preserving order.
    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }
}

/// Severity flag on a theorem verdict.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VerdictFlag {
    /// Hypotheses held and the conclusion held.
    Ok,
    /// Hypotheses held but the conclusion failed. For statements that are
    /// proved in general this means the implementation is wrong, not the
    /// mathematics; treat it as a loud bug diagnostic.
    CounterexampleToTheorem,
    /// Some hypothesis failed; the structure is outside the statement's
    /// scope. Any recorded conclusion value is informational only.
    NotApplicable,
}

impl VerdictFlag {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictFlag::Ok => "ok",
            VerdictFlag::CounterexampleToTheorem => "counterexample_to_theorem",
            VerdictFlag::NotApplicable => "not_applicable",
        }
    }
}

/// Outcome of checking one implication-shaped statement on one structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremVerdict {
    /// Stable name of the statement being checked.
    pub theorem: String,
    /// Named hypotheses in statement order, each with whether it held.
    pub hypotheses: Vec<(String, bool)>,
    /// Whether the conclusion held; `None` when it was not evaluated.
    pub conclusion: Option<bool>,
    /// First counterexample to the conclusion, when it failed.
    pub witness: Option<Vec<String>>,
    pub flag: VerdictFlag,
}

impl TheoremVerdict {
    /// Build a verdict from hypothesis results and a conclusion outcome.
    /// `conclusion` is `Some(Ok(()))` / `Some(Err(witness))` when evaluated,
    /// `None` when skipped.
    pub fn new(
        theorem: &str,
        hypotheses: Vec<(String, bool)>,
        conclusion: Option<Result<(), Vec<String>>>,
    ) -> Self {
        let hypotheses_hold = hypotheses.iter().all(|(_, ok)| *ok);
        let (conclusion_value, witness) = match &conclusion {
            None => (None, None),
            Some(Ok(())) => (Some(true), None),
            Some(Err(w)) => (Some(false), Some(w.clone())),
        };
        let flag = if !hypotheses_hold {
            VerdictFlag::NotApplicable
        } else if conclusion_value == Some(false) {
            VerdictFlag::CounterexampleToTheorem
        } else {
            VerdictFlag::Ok
        };
        TheoremVerdict {
            theorem: theorem.into(),
            hypotheses,
            conclusion: conclusion_value,
            witness,
            flag,
        }
    }

    pub fn hypotheses_hold(&self) -> bool {
        self.hypotheses.iter().all(|(_, ok)| *ok)
    }
}

/// Render one witness coordinate as `label=element-name`.
pub fn witness_entry(label: &str, group: &FiniteGroup, index: usize) -> String {
    let mut s = String::new();
    s.push_str(label);
    s.push('=');
    s.push_str(group.element_name(index));
    s
}
