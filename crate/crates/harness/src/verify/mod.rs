//! Named verifiers. Each evaluates its hypotheses first; an unmet
//! hypothesis yields a not-applicable report and no steps are run.

mod fixed;
mod local;

use std::cell::{OnceCell, RefCell};
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use pcomplex::collections::{Collection, CollectionKind, PSubgroups};
use pcomplex::homology::{homology, HomologyProfile};
use pcomplex::permcore::Group;
use pcomplex::posetlab::{build_poset, order_complex, GPoset};
use pcomplex::{Limits, Result};

use crate::error::HarnessError;
use crate::library;
use crate::report::{Recorder, Target, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    P2_4,
    P2_5,
    P3_1,
    L3_3,
    P3_4,
    P3_5,
    P3_8,
    P3_9,
    P3_10,
    P4_3,
    P4_4,
    L4_5,
    P4_6,
    P4_7,
    P4_8,
    P4_10,
    P4_11,
    T4_12,
}

impl Theorem {
    pub const ALL: [Theorem; 18] = [
        Theorem::P2_4,
        Theorem::P2_5,
        Theorem::P3_1,
        Theorem::L3_3,
        Theorem::P3_4,
        Theorem::P3_5,
        Theorem::P3_8,
        Theorem::P3_9,
        Theorem::P3_10,
        Theorem::P4_3,
        Theorem::P4_4,
        Theorem::L4_5,
        Theorem::P4_6,
        Theorem::P4_7,
        Theorem::P4_8,
        Theorem::P4_10,
        Theorem::P4_11,
        Theorem::T4_12,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::P2_4 => "P2.4",
            Theorem::P2_5 => "P2.5",
            Theorem::P3_1 => "P3.1",
            Theorem::L3_3 => "L3.3",
            Theorem::P3_4 => "P3.4",
            Theorem::P3_5 => "P3.5",
            Theorem::P3_8 => "P3.8",
            Theorem::P3_9 => "P3.9",
            Theorem::P3_10 => "P3.10",
            Theorem::P4_3 => "P4.3",
            Theorem::P4_4 => "P4.4",
            Theorem::L4_5 => "L4.5",
            Theorem::P4_6 => "P4.6",
            Theorem::P4_7 => "P4.7",
            Theorem::P4_8 => "P4.8",
            Theorem::P4_10 => "P4.10",
            Theorem::P4_11 => "P4.11",
            Theorem::T4_12 => "T4.12",
        }
    }

    /// Statements about the fixed points of a noncentral subgroup `T`.
    pub fn takes_t(self) -> bool {
        self >= Theorem::P4_3
    }

    pub fn names() -> String {
        Theorem::ALL.map(Theorem::id).join(", ")
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, HarnessError> {
        let s = s.trim();
        Theorem::ALL
            .into_iter()
            .find(|t| t.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| HarnessError::Lookup(format!("unknown theorem `{s}`; valid ids: {}", Theorem::names())))
    }
}

/// A group and prime with lazily computed subgroup data shared by the
/// verifiers.
pub struct Instance {
    pub name: String,
    pub group: Group,
    pub prime: u64,
    pub limits: Limits,
    data: OnceCell<PSubgroups>,
    posets: RefCell<HashMap<CollectionKind, GPoset>>,
}

impl Instance {
    pub fn new(name: impl Into<String>, group: Group, prime: u64, limits: Limits) -> Self {
        Instance {
            name: name.into(),
            group,
            prime,
            limits,
            data: OnceCell::new(),
            posets: RefCell::new(HashMap::new()),
        }
    }

    /// A library group by name.
    pub fn load(name: &str, prime: u64, limits: Limits) -> Result<Self, HarnessError> {
        let (entry, g) = library::load(name)?;
        if g.size() > limits.max_order {
            return Err(pcomplex::Error::Resource {
                cap: "max_order",
                limit: limits.max_order,
                needed: g.size().to_string(),
            }
            .into());
        }
        Ok(Instance::new(entry.name, g, prime, limits))
    }

    pub fn data(&self) -> Result<&PSubgroups> {
        if self.data.get().is_none() {
            let d = PSubgroups::compute(&self.group, self.prime, &self.limits)?;
            let _ = self.data.set(d);
        }
        Ok(self.data.get().expect("just set"))
    }

    pub fn collection(&self, kind: CollectionKind) -> Result<Collection> {
        Collection::from_psubgroups(self.data()?, kind)
    }

    pub fn members(&self, kind: CollectionKind) -> Result<HashSet<Group>> {
        Ok(self.collection(kind)?.member_set())
    }

    /// The whole collection as a `G`-poset.
    pub fn poset(&self, kind: CollectionKind) -> Result<GPoset> {
        if let Some(x) = self.posets.borrow().get(&kind) {
            return Ok(x.clone());
        }
        let x = build_poset(&self.collection(kind)?, &self.group, &self.limits)?;
        self.posets.borrow_mut().insert(kind, x.clone());
        Ok(x)
    }

    pub fn homology(&self, x: &GPoset) -> Result<HomologyProfile> {
        homology(&order_complex(x, &self.limits)?, &self.limits)
    }

    /// Noncentral subgroups of order `p`, one per class.
    pub fn noncentral_t(&self) -> Result<Vec<Group>> {
        let data = self.data()?;
        Ok(data
            .classes()
            .iter()
            .filter(|c| c.order() == self.prime && !c.flags.tilde)
            .map(|c| c.representative.group().clone())
            .collect())
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    pub timings: bool,
}

fn run_one(
    theorem: Theorem,
    inst: &Instance,
    t: Option<&Group>,
    opts: RunOptions,
    body: impl FnOnce(&mut Recorder) -> Result<()>,
) -> VerificationReport {
    let start = Instant::now();
    let mut rec = Recorder::default();
    let error = body(&mut rec).err().map(|e| e.to_string());
    let target = Target {
        group: inst.name.clone(),
        prime: inst.prime,
        theorem: theorem.id().to_string(),
        t: t.map(|t| t.to_string()),
    };
    let mut report = rec.finish(target, error, &inst.limits);
    if opts.timings {
        report.timing_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

/// Runs one verifier. Statements about a subgroup `T` run once per
/// noncentral class of subgroups of order `p` unless `t` is given.
pub fn verify(theorem: Theorem, inst: &Instance, t: Option<&str>, opts: RunOptions) -> Vec<VerificationReport> {
    if !theorem.takes_t() {
        return vec![run_one(theorem, inst, None, opts, |rec| local::run(theorem, inst, rec))];
    }
    let ts: Vec<Group> = match t {
        Some(text) => match Group::parse(inst.group.degree(), text) {
            Ok(g) => vec![g],
            Err(e) => {
                return vec![run_one(theorem, inst, None, opts, |rec| {
                    rec.stage("parse T");
                    Err(e)
                })]
            }
        },
        None => match inst.noncentral_t() {
            Ok(ts) => ts,
            Err(e) => {
                return vec![run_one(theorem, inst, None, opts, |rec| {
                    rec.stage("enumerate p-subgroups");
                    Err(e)
                })]
            }
        },
    };
    if ts.is_empty() {
        return vec![run_one(theorem, inst, None, opts, |rec| {
            rec.hypothesis("a noncentral subgroup of order p exists", false, None);
            Ok(())
        })];
    }
    ts.iter()
        .map(|tg| run_one(theorem, inst, Some(tg), opts, |rec| fixed::run(theorem, inst, tg, rec)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Outcome;

    fn inst(name: &str, p: u64) -> Instance {
        Instance::load(name, p, Limits::default()).unwrap()
    }

    fn verdicts(th: Theorem, name: &str, p: u64, t: Option<&str>) -> Vec<Outcome> {
        verify(th, &inst(name, p), t, RunOptions::default())
            .iter()
            .map(|r| r.verdict)
            .collect()
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in Theorem::ALL {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert!("P9.9".parse::<Theorem>().is_err());
    }

    #[test]
    fn sym4_local_statements() {
        for th in [
            Theorem::P2_4,
            Theorem::P2_5,
            Theorem::P3_1,
            Theorem::L3_3,
            Theorem::P3_4,
            Theorem::P3_5,
        ] {
            assert_eq!(verdicts(th, "sym4", 2, None), [Outcome::Pass], "{th}");
        }
    }

    #[test]
    fn sym5_gates() {
        assert_eq!(verdicts(Theorem::P3_4, "sym5", 2, None), [Outcome::NotApplicable]);
        assert_eq!(verdicts(Theorem::P2_4, "sym5", 2, None), [Outcome::NotApplicable]);
        assert_eq!(verdicts(Theorem::P3_5, "sym5", 2, None), [Outcome::Pass]);
        assert_eq!(verdicts(Theorem::P3_8, "sym5", 2, None), [Outcome::Pass]);
        assert_eq!(verdicts(Theorem::P3_9, "sym5", 2, None), [Outcome::Pass]);
        assert_eq!(verdicts(Theorem::P3_10, "sym5", 2, None), [Outcome::Pass]);
    }

    #[test]
    fn sym5_fixed_points() {
        let t = Some("(1,2)");
        for th in [
            Theorem::P4_3,
            Theorem::P4_4,
            Theorem::L4_5,
            Theorem::P4_7,
            Theorem::P4_8,
            Theorem::P4_10,
            Theorem::P4_11,
            Theorem::T4_12,
        ] {
            assert_eq!(verdicts(th, "sym5", 2, t), [Outcome::Pass], "{th}");
        }
        assert_eq!(verdicts(Theorem::P4_6, "sym5", 2, t), [Outcome::NotApplicable]);
        // A 2-central T is not in scope of the fixed-point statements.
        assert_eq!(
            verdicts(Theorem::T4_12, "sym5", 2, Some("(1,2)(3,4)")),
            [Outcome::NotApplicable]
        );
    }

    #[test]
    fn sym4_has_no_noncentral_involution_outside_tilde() {
        // Sym(4) at 2: transpositions are noncentral; C_G(T) has characteristic 2.
        let r = verify(Theorem::T4_12, &inst("sym4", 2), None, RunOptions::default());
        assert!(r.iter().all(|r| r.verdict == Outcome::NotApplicable));
        let r = verify(Theorem::P4_6, &inst("sym4", 2), None, RunOptions::default());
        assert!(r.iter().all(|r| r.verdict == Outcome::Pass), "{}", r[0].to_text());
    }
}
