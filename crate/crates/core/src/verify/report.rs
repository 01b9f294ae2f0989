//! Running the table over instances and rendering the results.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Result;

use super::table::{check_theorem, lookup, Arity};
use super::{Instance, THEOREMS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// Carries the violating elements.
    Fail(String),
    /// Carries the reason the clause was not evaluated.
    Skip(String),
}

impl Outcome {
    pub fn status(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail(_) => "fail",
            Outcome::Skip(_) => "skip",
        }
    }
}

/// One (theorem, instance) evaluation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub theorem: &'static str,
    pub instance: usize,
    pub context: String,
    pub mu: String,
    pub eta: String,
    pub theta: Option<String>,
    pub status: &'static str,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub id: &'static str,
    pub statement: &'static str,
    /// Instances on which the clause was evaluated.
    pub checked: usize,
    /// `(instance index, witness)`
    pub failures: Vec<(usize, String)>,
    /// Skip counts by reason.
    pub skipped: BTreeMap<String, usize>,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn skip_count(&self) -> usize {
        self.skipped.values().sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuiteReport {
    pub theorems: Vec<TheoremReport>,
    pub records: Vec<CheckRecord>,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.theorems.iter().map(|t| t.failures.len()).sum()
    }

    pub fn checked(&self) -> usize {
        self.theorems.iter().map(|t| t.checked).sum()
    }

    pub fn skipped(&self) -> usize {
        self.theorems.iter().map(|t| t.skip_count()).sum()
    }

    pub fn get(&self, id: &str) -> Option<&TheoremReport> {
        self.theorems.iter().find(|t| t.id == id)
    }
}

/// Applies each requested theorem to every instance of its arity. Reports
/// follow table order, then instance index. Unknown ids are an error.
pub fn run_suite(instances: &[Instance], ids: &[&str], gated: bool) -> Result<SuiteReport> {
    let mut wanted = Vec::new();
    for id in ids {
        let th = lookup(id)?;
        if !wanted.contains(&th.id) {
            wanted.push(th.id);
        }
    }
    let mut report = SuiteReport::default();
    for th in THEOREMS.iter().filter(|t| wanted.contains(&t.id)) {
        let mut tr = TheoremReport {
            id: th.id,
            statement: th.statement,
            checked: 0,
            failures: Vec::new(),
            skipped: BTreeMap::new(),
        };
        let fits = |i: &&Instance| match th.arity {
            Arity::Single => i.theta.is_none(),
            Arity::Pair => i.theta.is_some(),
        };
        for inst in instances.iter().filter(fits) {
            let outcome = check_theorem(th.id, inst, gated)?;
            match &outcome {
                Outcome::Pass => tr.checked += 1,
                Outcome::Fail(w) => {
                    tr.checked += 1;
                    tr.failures.push((inst.index, w.clone()));
                }
                Outcome::Skip(why) => *tr.skipped.entry(why.clone()).or_default() += 1,
            }
            let lr = inst.lring();
            report.records.push(CheckRecord {
                theorem: th.id,
                instance: inst.index,
                context: inst.ctx.label.clone(),
                mu: lr.format(lr.mu()),
                eta: lr.format(&inst.eta),
                theta: inst.theta.as_ref().map(|t| lr.format(t)),
                status: outcome.status(),
                detail: match outcome {
                    Outcome::Pass => None,
                    Outcome::Fail(s) | Outcome::Skip(s) => Some(s),
                },
            });
        }
        report.theorems.push(tr);
    }
    Ok(report)
}

/// Human-readable summary: one line per theorem, failures listed beneath.
pub fn render_text(report: &SuiteReport, instances: &[Instance]) -> String {
    let mut out = String::new();
    for t in &report.theorems {
        out.push_str(&format!(
            "{:<10} {:<4} checked {:>6}  failed {:>4}  skipped {:>6}  {}\n",
            t.id,
            if t.passed() { "PASS" } else { "FAIL" },
            t.checked,
            t.failures.len(),
            t.skip_count(),
            t.statement
        ));
        for (i, w) in &t.failures {
            let what = instances
                .iter()
                .find(|x| x.index == *i)
                .map(|x| x.describe())
                .unwrap_or_else(|| format!("#{i}"));
            out.push_str(&format!("    fail {what}: {w}\n"));
        }
        for (why, n) in &t.skipped {
            out.push_str(&format!("    skip {n}: {why}\n"));
        }
    }
    out.push_str(&format!(
        "total: {} checked, {} failed, {} skipped\n",
        report.checked(),
        report.failures(),
        report.skipped()
    ));
    out
}

/// One JSON object per line, one line per (theorem, instance).
pub fn render_jsonl(report: &SuiteReport) -> String {
    let mut out = String::new();
    for r in &report.records {
        out.push_str(&serde_json::to_string(r).expect("records serialize"));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{generate_instances, theorem_ids, GenParams, Sampling};

    fn small() -> Vec<Instance> {
        generate_instances(&GenParams {
            rings: vec!["Z4".into()],
            lattices: vec!["chain3".into()],
            ..GenParams::default()
        })
        .unwrap()
    }

    #[test]
    fn empty_id_list() {
        let r = run_suite(&small(), &[], true).unwrap();
        assert!(r.theorems.is_empty() && r.records.is_empty());
    }

    #[test]
    fn full_table_on_z4_chain3() {
        let insts = small();
        let ids = theorem_ids();
        let r = run_suite(&insts, &ids, true).unwrap();
        assert_eq!(r.failures(), 0, "{}", render_text(&r, &insts));
        assert_eq!(r.theorems.len(), ids.len());
    }

    #[test]
    fn deterministic_output() {
        let p = GenParams {
            sampling: Sampling::Sampled { seed: 7, limit: 40 },
            ..GenParams::default()
        };
        let render = || {
            let insts = generate_instances(&p).unwrap();
            let r = run_suite(&insts, &["T2.13", "T2.25"], true).unwrap();
            (render_text(&r, &insts), render_jsonl(&r))
        };
        assert_eq!(render(), render());
    }

    #[test]
    fn ordering_follows_table() {
        let r = run_suite(&small(), &["T2.13", "T2.4", "T2.13"], true).unwrap();
        let ids: Vec<_> = r.theorems.iter().map(|t| t.id).collect();
        assert_eq!(ids, ["T2.4", "T2.13"]);
        assert!(run_suite(&small(), &["nope"], true).is_err());
    }
}
