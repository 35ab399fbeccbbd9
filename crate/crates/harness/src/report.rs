use std::collections::HashSet;
use std::fmt::Write as _;

use pcomplex::homology::HomologyProfile;
use pcomplex::permcore::Group;
use pcomplex::posetlab::{
    check_certificate, check_retraction, ContractionCertificate, GPoset, RetractionCertificate, Verdict,
};
use pcomplex::{Limits, Result};
use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Target {
    pub group: String,
    pub prime: u64,
    pub theorem: String,
    /// The subgroup of order `p` for the fixed-point statements.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    NotApplicable,
    /// A computation stopped, usually at a resource cap.
    Error,
}

impl Outcome {
    pub fn name(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::NotApplicable => "not-applicable",
            Outcome::Error => "error",
        }
    }

    /// Counts against the suite's exit status.
    pub fn is_failure(self) -> bool {
        matches!(self, Outcome::Fail | Outcome::Error)
    }
}

/// How much of an equivalence was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strength {
    /// Every certificate validated and the end complexes have isomorphic
    /// homology.
    Certificates,
    HomologyIsomorphic,
    EulerEqual,
    None,
}

impl Strength {
    pub fn name(self) -> &'static str {
        match self {
            Strength::Certificates => "certificates",
            Strength::HomologyIsomorphic => "homology-isomorphic",
            Strength::EulerEqual => "euler-equal",
            Strength::None => "none",
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub target: Target,
    pub hypotheses: Vec<Check>,
    pub steps: Vec<Step>,
    pub verdict: Outcome,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub strength: Option<Strength>,
    pub timing_ms: Option<u64>,
    pub config: Limits,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
}

impl VerificationReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let t = self.target.t.as_deref().map(|t| format!(" T={t}")).unwrap_or_default();
        let _ = writeln!(
            out,
            "{} {} p={}{t}: {}{}",
            self.target.theorem,
            self.target.group,
            self.target.prime,
            self.verdict.name(),
            if self.exploratory { " (exploratory)" } else { "" }
        );
        for h in &self.hypotheses {
            let _ = write!(
                out,
                "  hypothesis {}: {}",
                h.name,
                if h.holds { "holds" } else { "fails" }
            );
            if let Some(w) = &h.witness {
                let _ = write!(out, " [{w}]");
            }
            out.push('\n');
        }
        for s in &self.steps {
            let _ = writeln!(
                out,
                "  [{}] {}: {}",
                if s.passed { "ok" } else { "FAIL" },
                s.name,
                s.detail
            );
        }
        if let Some(s) = self.strength {
            let _ = writeln!(out, "  strength: {}", s.name());
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "  time: {ms} ms");
        }
        out
    }
}

/// One line per homology group.
pub fn profile_summary(h: &HomologyProfile) -> String {
    h.to_text().trim_end().replace('\n', ", ")
}

/// Collects hypotheses and steps while a verifier runs.
#[derive(Debug, Default)]
pub struct Recorder {
    pub hypotheses: Vec<Check>,
    pub steps: Vec<Step>,
    pub strength: Option<Strength>,
    /// The computation in progress, named in the report if it fails.
    pub stage: String,
}

impl Recorder {
    pub fn stage(&mut self, name: impl Into<String>) {
        self.stage = name.into();
    }

    pub fn hypothesis(&mut self, name: impl Into<String>, holds: bool, witness: Option<String>) -> bool {
        self.hypotheses.push(Check {
            name: name.into(),
            holds,
            witness,
        });
        holds
    }

    /// All hypotheses recorded so far hold.
    pub fn gate(&self) -> bool {
        self.hypotheses.iter().all(|h| h.holds)
    }

    pub fn step(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> bool {
        self.steps.push(Step {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
        passed
    }

    pub fn certificate(
        &mut self,
        name: impl Into<String>,
        domain: &GPoset,
        cert: &ContractionCertificate,
        limits: &Limits,
    ) -> Result<bool> {
        let name = name.into();
        self.stage(format!("certificate {name}"));
        let verdict = check_certificate(domain, cert, limits)?;
        let detail = match &verdict {
            Verdict::Valid => format!("{cert} valid on {} elements", domain.len()),
            Verdict::Invalid(d) => format!("{cert} invalid: {d}"),
        };
        Ok(self.step(name, verdict.is_valid(), detail))
    }

    pub fn retraction(
        &mut self,
        name: impl Into<String>,
        domain: &GPoset,
        target: &GPoset,
        cert: &RetractionCertificate,
        limits: &Limits,
    ) -> Result<bool> {
        let name = name.into();
        self.stage(format!("retraction {name}"));
        let verdict = check_retraction(domain, target, cert, limits)?;
        let detail = match &verdict {
            Verdict::Valid => format!("{cert} valid, {} into {} elements", domain.len(), target.len()),
            Verdict::Invalid(d) => format!("{cert} invalid: {d}"),
        };
        Ok(self.step(name, verdict.is_valid(), detail))
    }

    pub fn same_homology(
        &mut self,
        name: impl Into<String>,
        a: (&str, &HomologyProfile),
        b: (&str, &HomologyProfile),
    ) -> bool {
        let same = strip(a.1) == strip(b.1);
        let detail = format!("{}: {}; {}: {}", a.0, profile_summary(a.1), b.0, profile_summary(b.1));
        self.step(name, same, detail)
    }

    pub fn same_sets(
        &mut self,
        name: impl Into<String>,
        a: (&str, &HashSet<Group>),
        b: (&str, &HashSet<Group>),
    ) -> bool {
        let mut only_a: Vec<&Group> = a.1.difference(b.1).collect();
        let mut only_b: Vec<&Group> = b.1.difference(a.1).collect();
        only_a.sort();
        only_b.sort();
        let mut detail = format!("|{}| = {}, |{}| = {}", a.0, a.1.len(), b.0, b.1.len());
        if let Some(x) = only_a.first() {
            let _ = write!(detail, "; {x} in {} only", a.0);
        }
        if let Some(x) = only_b.first() {
            let _ = write!(detail, "; {x} in {} only", b.0);
        }
        self.step(name, only_a.is_empty() && only_b.is_empty(), detail)
    }

    pub fn subset(&mut self, name: impl Into<String>, a: (&str, &HashSet<Group>), b: (&str, &HashSet<Group>)) -> bool {
        let mut extra: Vec<&Group> = a.1.difference(b.1).collect();
        extra.sort();
        let mut detail = format!("|{}| = {}, |{}| = {}", a.0, a.1.len(), b.0, b.1.len());
        if let Some(x) = extra.first() {
            let _ = write!(detail, "; {x} in {} but not {}", a.0, b.0);
        }
        self.step(name, extra.is_empty(), detail)
    }

    pub fn finish(self, target: Target, error: Option<String>, limits: &Limits) -> VerificationReport {
        let mut steps = self.steps;
        let verdict = if let Some(e) = error {
            steps.push(Step {
                name: self.stage,
                passed: false,
                detail: e,
            });
            Outcome::Error
        } else if !self.hypotheses.iter().all(|h| h.holds) || steps.is_empty() {
            Outcome::NotApplicable
        } else if steps.iter().all(|s| s.passed) {
            Outcome::Pass
        } else {
            Outcome::Fail
        };
        VerificationReport {
            target,
            hypotheses: self.hypotheses,
            steps,
            verdict,
            strength: self.strength,
            timing_ms: None,
            config: limits.clone(),
            exploratory: false,
        }
    }
}

/// Profiles are compared on their groups, ignoring trailing zero degrees.
fn strip(h: &HomologyProfile) -> (isize, Vec<pcomplex::homology::HomologyGroup>) {
    let mut g = h.groups.clone();
    while g.last().is_some_and(|x| x.is_zero()) {
        g.pop();
    }
    (h.low, g)
}
