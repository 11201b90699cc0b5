//! Rendering of check reports, theorem verdicts, and enumeration results,
//! in both human-readable and JSON form. All output is deterministic:
//! JSON objects built here use either fixed struct field order or sorted
//! maps, never hash order.

use bracoid_core::report::{CheckReport, PropertyCheck, TheoremVerdict};
use bracoid_core::CheckStatus;
use serde_json::{json, Value};

pub fn check_json(check: &PropertyCheck) -> Value {
    json!({
        "property": check.property,
        "status": check.status.as_str(),
        "witness": check.witness,
    })
}

pub fn report_json(report: &CheckReport) -> Value {
    Value::Array(report.checks.iter().map(check_json).collect())
}

pub fn verdict_json(verdict: &TheoremVerdict) -> Value {
    let hypotheses: serde_json::Map<String, Value> = verdict
        .hypotheses
        .iter()
        .map(|(name, held)| (name.clone(), Value::Bool(*held)))
        .collect();
    json!({
        "theorem": verdict.theorem,
        "hypotheses": hypotheses,
        "conclusion": verdict.conclusion,
        "witness": verdict.witness,
        "flag": verdict.flag.as_str(),
    })
}

pub fn verdicts_json(verdicts: &[TheoremVerdict]) -> Value {
    Value::Array(verdicts.iter().map(verdict_json).collect())
}

pub fn print_report_human(report: &CheckReport) {
    for check in &report.checks {
        let tag = match check.status {
            CheckStatus::Pass => "pass          ",
            CheckStatus::Fail => "FAIL          ",
            CheckStatus::NotApplicable => "not_applicable",
        };
        match &check.witness {
            Some(witness) => println!("  {tag}  {}  [{}]", check.property, witness.join(", ")),
            None => println!("  {tag}  {}", check.property),
        }
    }
}

pub fn print_verdict_human(verdict: &TheoremVerdict) {
    println!("theorem {}: {}", verdict.theorem, verdict.flag.as_str());
    for (name, held) in &verdict.hypotheses {
        println!("  hypothesis {name}: {}", if *held { "holds" } else { "fails" });
    }
    match verdict.conclusion {
        Some(true) => println!("  conclusion: holds"),
        Some(false) => println!("  conclusion: FAILS"),
        None => println!("  conclusion: not evaluated"),
    }
    if let Some(witness) = &verdict.witness {
        println!("  witness: [{}]", witness.join(", "));
    }
}

/// One pass/fail trailer line for a report, and the exit code it implies.
pub fn report_outcome(report: &CheckReport) -> (String, u8) {
    let failures = report.checks.iter().filter(|c| c.status == CheckStatus::Fail).count();
    if failures == 0 {
        (format!("result: PASS ({} checks)", report.checks.len()), 0)
    } else {
        (format!("result: FAIL ({} of {} checks)", failures, report.checks.len()), 1)
    }
}
