//! Verification records and their aggregation.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::corpus::Scope;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum RecordOutcome {
    Verified,
    /// Some hypothesis was unmet, so the statement was not evaluated.
    Vacuous,
    Violation,
}

/// One evaluated (theorem, annotation combination).
#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub annotations: BTreeMap<String, String>,
    pub hypotheses: BTreeMap<String, bool>,
    pub outcome: RecordOutcome,
    /// A violation reached only because a dropped hypothesis was false.
    pub expected: bool,
    pub witness: Value,
    pub counterexample: Value,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct CaseCounts {
    pub verified: usize,
    pub vacuous: usize,
    pub violation: usize,
    pub expected_violation: usize,
}

impl CaseCounts {
    pub fn add(&mut self, other: &CaseCounts) {
        self.verified += other.verified;
        self.vacuous += other.vacuous;
        self.violation += other.violation;
        self.expected_violation += other.expected_violation;
    }

    pub fn total(&self) -> usize {
        self.verified + self.vacuous + self.violation
    }

    pub fn unexpected(&self) -> usize {
        self.violation - self.expected_violation
    }
}

/// A JSON-lines report record.
#[derive(Debug, Clone, Serialize)]
pub struct ReportRecord {
    pub theorem: String,
    pub recipe: String,
    /// The corpus line, for replay.
    pub entry: String,
    pub scope: Scope,
    pub annotations: BTreeMap<String, String>,
    pub hypotheses: BTreeMap<String, bool>,
    pub outcome: RecordOutcome,
    pub expected: bool,
    pub dropped: Vec<String>,
    pub cases: CaseCounts,
    pub witness: Value,
    pub counterexample: Value,
    /// Seed of the annotation subsample, when one was taken.
    pub sample_seed: Option<u64>,
    pub millis: Option<u64>,
}

impl ReportRecord {
    pub fn is_unexpected_violation(&self) -> bool {
        self.outcome == RecordOutcome::Violation && !self.expected
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

/// Metadata shared by the records of one work unit.
#[derive(Debug, Clone)]
pub struct UnitInfo {
    pub theorem: String,
    pub recipe: String,
    pub entry: String,
    pub scope: Scope,
    pub dropped: Vec<String>,
    pub sample_seed: Option<u64>,
    pub millis: Option<u64>,
}

fn record(info: &UnitInfo, rep: &CaseResult, outcome: RecordOutcome, expected: bool, cases: CaseCounts) -> ReportRecord {
    ReportRecord {
        theorem: info.theorem.clone(),
        recipe: info.recipe.clone(),
        entry: info.entry.clone(),
        scope: info.scope,
        annotations: rep.annotations.clone(),
        hypotheses: rep.hypotheses.clone(),
        outcome,
        expected,
        dropped: info.dropped.clone(),
        cases,
        witness: rep.witness.clone(),
        counterexample: rep.counterexample.clone(),
        sample_seed: info.sample_seed,
        millis: info.millis,
    }
}

pub fn count(cases: &[CaseResult]) -> CaseCounts {
    let mut c = CaseCounts::default();
    for case in cases {
        match case.outcome {
            RecordOutcome::Verified => c.verified += 1,
            RecordOutcome::Vacuous => c.vacuous += 1,
            RecordOutcome::Violation => {
                c.violation += 1;
                if case.expected {
                    c.expected_violation += 1;
                }
            }
        }
    }
    c
}

/// One record per unit: the first unexpected violation if any, else the first
/// expected violation, else the first verified case, else the first vacuous one.
pub fn aggregate(info: &UnitInfo, cases: &[CaseResult]) -> Option<ReportRecord> {
    let counts = count(cases);
    let pick = cases
        .iter()
        .find(|c| c.outcome == RecordOutcome::Violation && !c.expected)
        .or_else(|| cases.iter().find(|c| c.outcome == RecordOutcome::Violation))
        .or_else(|| cases.iter().find(|c| c.outcome == RecordOutcome::Verified))
        .or_else(|| cases.first())?;
    Some(record(info, pick, pick.outcome, pick.expected, counts))
}

/// One record per case.
pub fn per_case(info: &UnitInfo, cases: &[CaseResult]) -> Vec<ReportRecord> {
    cases
        .iter()
        .map(|c| record(info, c, c.outcome, c.expected, count(std::slice::from_ref(c))))
        .collect()
}

/// Case totals per theorem, in registry order.
pub fn summarize(records: &[ReportRecord]) -> Vec<(String, CaseCounts, usize)> {
    let mut out: Vec<(String, CaseCounts, usize)> = Vec::new();
    for r in records {
        match out.iter_mut().find(|(id, _, _)| *id == r.theorem) {
            Some((_, c, n)) => {
                c.add(&r.cases);
                *n += 1;
            }
            None => out.push((r.theorem.clone(), r.cases, 1)),
        }
    }
    out
}
