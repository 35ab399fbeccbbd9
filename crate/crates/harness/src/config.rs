//! Suite configuration: global `key = value` lines followed by `[run]`
//! blocks, each naming a group, a prime and one or more theorems.
//!
//! ```text
//! # caps
//! max_order = 100000
//! seed = 7
//!
//! [run]
//! group = sym5
//! prime = 2
//! theorem = T4.12
//! t = (1,2)
//! ```

use std::path::PathBuf;

use pcomplex::Limits;

use crate::error::HarnessError;
use crate::library;
use crate::verify::Theorem;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunEntry {
    pub group: String,
    pub prime: u64,
    pub theorems: Vec<Theorem>,
    pub t: Option<String>,
    /// Failures are reported but do not affect the exit status.
    pub exploratory: bool,
    /// Line of the `[run]` header.
    pub line: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SuiteConfig {
    pub limits: Limits,
    pub timings: bool,
    /// Reports go to `<out>.txt` and `<out>.json`.
    pub out: Option<PathBuf>,
    pub runs: Vec<RunEntry>,
}

/// Groups whose runs are exploratory unless stated otherwise.
const STRETCH: [&str; 1] = ["m12"];

fn err(line: usize, message: impl Into<String>) -> HarnessError {
    HarnessError::Config {
        line,
        message: message.into(),
    }
}

fn number<T: std::str::FromStr>(line: usize, key: &str, v: &str) -> Result<T, HarnessError> {
    v.parse()
        .map_err(|_| err(line, format!("`{key}` expects a number, got `{v}`")))
}

fn boolean(line: usize, key: &str, v: &str) -> Result<bool, HarnessError> {
    match v {
        "true" | "yes" | "1" => Ok(true),
        "false" | "no" | "0" => Ok(false),
        _ => Err(err(line, format!("`{key}` expects true or false, got `{v}`"))),
    }
}

fn set_limit(limits: &mut Limits, line: usize, key: &str, v: &str) -> Result<bool, HarnessError> {
    match key {
        "max_order" => limits.max_order = number(line, key, v)?,
        "max_sylow_order" => limits.max_sylow_order = number(line, key, v)?,
        "max_sylow_subgroups" => limits.max_sylow_subgroups = number(line, key, v)?,
        "max_subgroup_classes" => limits.max_subgroup_classes = number(line, key, v)?,
        "max_orbit" => limits.max_orbit = number(line, key, v)?,
        "max_poset_elements" => limits.max_poset_elements = number(line, key, v)?,
        "max_simplices" => limits.max_simplices = number(line, key, v)?,
        "max_cosets" => limits.max_cosets = number(line, key, v)?,
        "seed" => limits.seed = number(line, key, v)?,
        _ => return Ok(false),
    }
    Ok(true)
}

#[derive(Default)]
struct Partial {
    line: usize,
    group: Option<String>,
    prime: Option<u64>,
    theorems: Option<Vec<Theorem>>,
    t: Option<String>,
    exploratory: Option<bool>,
}

impl Partial {
    fn finish(self) -> Result<RunEntry, HarnessError> {
        let line = self.line;
        let group = self.group.ok_or_else(|| err(line, "[run] block without `group`"))?;
        let prime = self.prime.ok_or_else(|| err(line, "[run] block without `prime`"))?;
        let theorems = self
            .theorems
            .ok_or_else(|| err(line, "[run] block without `theorem`"))?;
        let exploratory = self.exploratory.unwrap_or(STRETCH.contains(&group.as_str()));
        Ok(RunEntry {
            group,
            prime,
            theorems,
            t: self.t,
            exploratory,
            line,
        })
    }
}

fn theorems(line: usize, v: &str) -> Result<Vec<Theorem>, HarnessError> {
    if v.eq_ignore_ascii_case("all") {
        return Ok(Theorem::ALL.to_vec());
    }
    v.split(',')
        .map(|s| {
            s.parse::<Theorem>().map_err(|_| {
                err(
                    line,
                    format!(
                        "unknown theorem `{}`; valid ids: {}, or all",
                        s.trim(),
                        Theorem::names()
                    ),
                )
            })
        })
        .collect()
}

pub fn parse(text: &str) -> Result<SuiteConfig, HarnessError> {
    let mut cfg = SuiteConfig::default();
    let mut current: Option<Partial> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if content.starts_with('[') {
            if content != "[run]" {
                return Err(err(line, format!("unknown section `{content}`; only [run] is allowed")));
            }
            if let Some(run) = current.take() {
                cfg.runs.push(run.finish()?);
            }
            current = Some(Partial {
                line,
                ..Partial::default()
            });
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| err(line, format!("expected `key = value`, got `{content}`")))?;
        match current.as_mut() {
            Some(run) => match key {
                "group" => {
                    let entry = library::lookup(value).map_err(|e| match e {
                        HarnessError::Lookup(m) => err(line, m),
                        other => other,
                    })?;
                    run.group = Some(entry.name);
                }
                "prime" => run.prime = Some(number(line, key, value)?),
                "theorem" | "theorems" => run.theorems = Some(theorems(line, value)?),
                "t" => run.t = Some(value.to_string()),
                "exploratory" => run.exploratory = Some(boolean(line, key, value)?),
                _ => {
                    return Err(err(
                        line,
                        format!("unknown run key `{key}`; expected group, prime, theorem, t or exploratory"),
                    ))
                }
            },
            None => match key {
                "timings" => cfg.timings = boolean(line, key, value)?,
                "out" => cfg.out = Some(PathBuf::from(value)),
                _ => {
                    if !set_limit(&mut cfg.limits, line, key, value)? {
                        return Err(err(line, format!("unknown setting `{key}`")));
                    }
                }
            },
        }
    }
    if let Some(run) = current {
        cfg.runs.push(run.finish()?);
    }
    Ok(cfg)
}
