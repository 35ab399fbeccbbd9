use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::thread;

use serde::Serialize;

use crate::config::{RunEntry, SuiteConfig};
use crate::report::{Check, Outcome, Target, VerificationReport};
use crate::verify::{verify, Instance, RunOptions, Theorem};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub not_applicable: usize,
    pub error: usize,
    /// Failures or errors in exploratory runs, not counted against the exit status.
    pub exploratory_failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub reports: Vec<VerificationReport>,
    pub summary: Summary,
}

impl SuiteReport {
    /// Any applicable, non-exploratory check failed.
    pub fn failed(&self) -> bool {
        self.reports.iter().any(|r| !r.exploratory && r.verdict.is_failure())
    }

    pub fn to_text(&self) -> String {
        let mut out: String = self.reports.iter().map(VerificationReport::to_text).collect();
        let s = &self.summary;
        out.push_str(&format!(
            "summary: {} pass, {} fail, {} not-applicable, {} error, {} exploratory failures\n",
            s.pass, s.fail, s.not_applicable, s.error, s.exploratory_failures
        ));
        out
    }
}

fn run_entry(entry: &RunEntry, cfg: &SuiteConfig) -> Vec<VerificationReport> {
    let opts = RunOptions { timings: cfg.timings };
    let mut reports: Vec<VerificationReport> = match Instance::load(&entry.group, entry.prime, cfg.limits.clone()) {
        Ok(inst) => entry
            .theorems
            .iter()
            .flat_map(|&th| verify(th, &inst, entry.t.as_deref(), opts))
            .collect(),
        Err(e) => entry
            .theorems
            .iter()
            .map(|&th| load_failure(entry, th, &e.to_string(), cfg))
            .collect(),
    };
    for r in &mut reports {
        r.exploratory = entry.exploratory;
    }
    reports
}

fn load_failure(entry: &RunEntry, th: Theorem, message: &str, cfg: &SuiteConfig) -> VerificationReport {
    VerificationReport {
        target: Target {
            group: entry.group.clone(),
            prime: entry.prime,
            theorem: th.id().to_string(),
            t: entry.t.clone(),
        },
        hypotheses: Vec::<Check>::new(),
        steps: vec![crate::report::Step {
            name: "load group".into(),
            passed: false,
            detail: message.to_string(),
        }],
        verdict: Outcome::Error,
        strength: None,
        timing_ms: None,
        config: cfg.limits.clone(),
        exploratory: false,
    }
}

/// Runs every entry, in parallel across entries; reports keep the config
/// order.
pub fn run_suite(cfg: &SuiteConfig) -> SuiteReport {
    let slots: Vec<Mutex<Vec<VerificationReport>>> = cfg.runs.iter().map(|_| Mutex::new(Vec::new())).collect();
    let next = AtomicUsize::new(0);
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(cfg.runs.len().max(1));
    thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(entry) = cfg.runs.get(i) else { break };
                *slots[i].lock().expect("no worker panics while holding a slot") = run_entry(entry, cfg);
            });
        }
    });
    let reports: Vec<VerificationReport> = slots
        .into_iter()
        .flat_map(|m| m.into_inner().expect("workers finished"))
        .collect();
    let mut summary = Summary::default();
    for r in &reports {
        if r.exploratory && r.verdict.is_failure() {
            summary.exploratory_failures += 1;
            continue;
        }
        match r.verdict {
            Outcome::Pass => summary.pass += 1,
            Outcome::Fail => summary.fail += 1,
            Outcome::NotApplicable => summary.not_applicable += 1,
            Outcome::Error => summary.error += 1,
        }
    }
    SuiteReport { reports, summary }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::config::parse;

    #[test]
    fn empty_suite() {
        let r = run_suite(&parse("").unwrap());
        assert!(r.reports.is_empty());
        assert!(!r.failed());
    }

    #[test]
    fn ordered_and_deterministic() {
        let text =
            "[run]\ngroup = sym5\nprime = 2\ntheorem = P3.4, T4.12\n[run]\ngroup = sym4\nprime = 2\ntheorem = P3.4\n";
        let cfg = parse(text).unwrap();
        let a = run_suite(&cfg);
        let b = run_suite(&cfg);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        let ids: Vec<(&str, &str)> = a
            .reports
            .iter()
            .map(|r| (r.target.group.as_str(), r.target.theorem.as_str()))
            .collect();
        assert_eq!(ids, [("sym5", "P3.4"), ("sym5", "T4.12"), ("sym4", "P3.4")]);
        assert_eq!(a.reports[0].verdict, Outcome::NotApplicable);
        assert_eq!(a.reports[1].verdict, Outcome::Pass);
        assert!(!a.failed());
        assert!(a.reports.iter().all(|r| r.timing_ms.is_none()));
    }

    #[test]
    fn caps_surface_as_errors() {
        let cfg = parse("max_order = 100\n[run]\ngroup = sym5\nprime = 2\ntheorem = P3.1\n").unwrap();
        let r = run_suite(&cfg);
        assert_eq!(r.reports[0].verdict, Outcome::Error);
        assert!(r.reports[0].steps[0].detail.contains("max_order"));
        assert!(r.failed());
    }
}
