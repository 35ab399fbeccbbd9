//! The non-suite subcommands, each producing text and JSON renderings.

use std::fmt::Write as _;
use std::sync::Arc;

use pcomplex::collections::{ClassFlags, Collection, CollectionKind, PSubgroups};
use pcomplex::homology::{assess, homology};
use pcomplex::lefschetz::{cross_validate, p_singular_vanishing, vertex_screen};
use pcomplex::permcore::search::normalizer_in;
use pcomplex::permcore::{ConjugacyClassTable, Group};
use pcomplex::posetlab::{build_poset, order_complex};
use pcomplex::Limits;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::HarnessError;
use crate::library;
use crate::report::profile_summary;

pub struct Output {
    pub text: String,
    pub json: Value,
}

fn load(group: &str, prime: u64, limits: &Limits) -> Result<(String, Group, PSubgroups), HarnessError> {
    let (entry, g) = library::load(group)?;
    limits.check_order(&g.order())?;
    let data = PSubgroups::compute(&g, prime, limits)?;
    Ok((entry.name, g, data))
}

#[derive(Serialize)]
struct ClassRow {
    representative: String,
    order: u64,
    members: usize,
    flags: ClassFlags,
}

pub fn collections(group: &str, prime: u64, kind: CollectionKind, limits: &Limits) -> Result<Output, HarnessError> {
    let (name, g, data) = load(group, prime, limits)?;
    let c = Collection::from_psubgroups(&data, kind)?;
    let x = build_poset(&c, &g, limits)?;
    let k = order_complex(&x, limits)?;
    let h = homology(&k, limits)?;
    let rows: Vec<ClassRow> = c
        .classes()
        .iter()
        .map(|cl| ClassRow {
            representative: cl.representative.to_string(),
            order: cl.representative.size(),
            members: cl.members.len(),
            flags: cl.flags,
        })
        .collect();
    let cls = data.classification();
    let mut text = format!(
        "{kind} of {name} at p={prime}: {} classes, {} subgroups, {} relations\n",
        c.len(),
        c.element_count(),
        x.relation_count()
    );
    for r in &rows {
        let f = &r.flags;
        let tags: Vec<&str> = [
            (f.elementary_abelian, "elementary-abelian"),
            (f.radical, "radical"),
            (f.centric, "centric"),
            (f.distinguished, "distinguished"),
            (f.tilde, "meets-central"),
        ]
        .iter()
        .filter(|(on, _)| *on)
        .map(|(_, t)| *t)
        .collect();
        let _ = writeln!(
            text,
            "  {} order {} x{} {}",
            r.representative,
            r.order,
            r.members,
            tags.join(" ")
        );
    }
    let _ = writeln!(text, "f-vector: {:?}", k.f_vector());
    let _ = writeln!(text, "reduced homology: {}", profile_summary(&h));
    let _ = writeln!(
        text,
        "local characteristic {prime}: {}, parabolic characteristic {prime}: {}",
        cls.local, cls.parabolic
    );
    let json = json!({
        "group": name,
        "prime": prime,
        "kind": kind.name(),
        "classes": rows,
        "subgroups": c.element_count(),
        "f_vector": k.f_vector(),
        "homology": h,
        "local_characteristic": cls.local,
        "parabolic_characteristic": cls.parabolic,
        "local_witnesses": cls.local_witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
        "parabolic_witnesses": cls.parabolic_witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    });
    Ok(Output { text, json })
}

pub fn fixed(
    group: &str,
    prime: u64,
    kind: CollectionKind,
    subgroup: &str,
    limits: &Limits,
) -> Result<Output, HarnessError> {
    let (name, g, data) = load(group, prime, limits)?;
    let h = Group::parse(g.degree(), subgroup)?;
    if !h.is_subgroup_of(&g) {
        return Err(HarnessError::Usage(format!("{h} is not a subgroup of {name}")));
    }
    let n = normalizer_in(&g, &h, limits)?;
    let x = build_poset(&Collection::from_psubgroups(&data, kind)?, &g, limits)?;
    let fx = x.fixed_subposet(&h, &n, limits)?;
    let k = order_complex(&fx, limits)?;
    let report = assess(&k, false, limits)?;
    let text = format!(
        "{kind}^H of {name} at p={prime}, H = {h}: {} of {} elements\nf-vector: {:?}\nreduced homology: {}\nverdict: {}\n",
        fx.len(),
        x.len(),
        k.f_vector(),
        profile_summary(&report.profile),
        report.verdict.name()
    );
    let json = json!({
        "group": name,
        "prime": prime,
        "kind": kind.name(),
        "subgroup": h.to_string(),
        "elements": fx.len(),
        "f_vector": k.f_vector(),
        "homology": report.profile,
        "verdict": report.verdict,
    });
    Ok(Output { text, json })
}

pub fn lefschetz(group: &str, prime: u64, kind: CollectionKind, limits: &Limits) -> Result<Output, HarnessError> {
    let (name, g, data) = load(group, prime, limits)?;
    let x = build_poset(&Collection::from_psubgroups(&data, kind)?, &g, limits)?;
    let table = Arc::new(ConjugacyClassTable::compute(&g, limits)?);
    let cv = cross_validate(&table, &x, limits)?;
    let singular = p_singular_vanishing(&cv.fixed_point, prime);
    let screen = vertex_screen(&data, &x, limits)?;
    let mut text = format!("reduced Lefschetz class function of {kind} for {name} at p={prime}\n");
    text.push_str(&cv.fixed_point.to_table());
    let _ = writeln!(
        text,
        "routes agree: {}{}",
        cv.agree(),
        cv.mismatch.as_deref().map(|m| format!(" ({m})")).unwrap_or_default()
    );
    if singular.consistent_with_projective() {
        let _ = writeln!(text, "vanishes on {prime}-singular classes");
    } else {
        let bad: Vec<String> = singular.nonzero.iter().map(|(l, v)| format!("{l}: {v}")).collect();
        let _ = writeln!(text, "nonzero on {prime}-singular classes: {}", bad.join(", "));
    }
    let _ = writeln!(text, "vertex screen:");
    for e in &screen.entries {
        let _ = writeln!(
            text,
            "  {} order {}: {} fixed, {}{}",
            e.representative,
            e.order,
            e.fixed_elements,
            e.verdict.name(),
            if e.excluded { "" } else { " (candidate)" }
        );
    }
    let json = json!({
        "group": name,
        "prime": prime,
        "kind": kind.name(),
        "fixed_point": cv.fixed_point.to_json(),
        "induced": cv.induced.to_json(),
        "routes_agree": cv.agree(),
        "mismatch": cv.mismatch,
        "singular": singular,
        "vertex_screen": screen,
    });
    Ok(Output { text, json })
}
