use pcomplex::collections::{has_characteristic_p, radical_closure, CollectionKind, PClass, PSubgroups};
use pcomplex::homology::{assess, Contractibility};
use pcomplex::permcore::search::{center_of, centralizer_of_group_in, normalizer_in};
use pcomplex::permcore::{Group, Subgroup};
use pcomplex::posetlab::{
    check_certificate, order_complex, product, ContractionCertificate, Direction, GPoset, Verdict,
};
use pcomplex::Result;

use super::{Instance, Theorem};
use crate::report::{profile_summary, Recorder};

pub(super) fn run(theorem: Theorem, inst: &Instance, rec: &mut Recorder) -> Result<()> {
    rec.stage("enumerate p-subgroups");
    let data = inst.data()?;
    match theorem {
        Theorem::P2_4 => p2_4(inst, data, rec),
        Theorem::P2_5 => p2_5(inst, data, rec),
        Theorem::P3_1 => p3_1(inst, data, rec),
        Theorem::L3_3 => l3_3(inst, data, rec),
        Theorem::P3_4 => p3_4(inst, data, rec),
        Theorem::P3_5 => p3_5(inst, data, rec),
        Theorem::P3_8 => p3_8(inst, data, rec),
        Theorem::P3_9 => p3_9(inst, data, rec),
        Theorem::P3_10 => p3_10(inst, data, rec),
        _ => unreachable!("fixed-point statements are dispatched elsewhere"),
    }
}

fn list(groups: &[Subgroup]) -> Option<String> {
    (!groups.is_empty()).then(|| groups.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", "))
}

fn nontrivial(data: &PSubgroups, rec: &mut Recorder) -> bool {
    rec.hypothesis(
        format!("{}-subgroups exist", data.prime()),
        !data.classes().is_empty(),
        None,
    )
}

fn parabolic(data: &PSubgroups, rec: &mut Recorder) -> bool {
    let c = data.classification();
    rec.hypothesis(
        format!("parabolic characteristic {}", data.prime()),
        c.parabolic,
        list(&c.parabolic_witnesses),
    )
}

fn p2_4(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    let (g, p, lim) = (&inst.group, inst.prime, &inst.limits);
    rec.stage("characteristic of G");
    let holds = has_characteristic_p(g, p, lim)?;
    if !rec.hypothesis(format!("G has characteristic {p}"), holds, None) || !nontrivial(data, rec) {
        return Ok(());
    }
    let c = data.classification();
    rec.step(
        format!("local characteristic {p}"),
        c.local,
        list(&c.local_witnesses).map_or("every normalizer has characteristic p".into(), |w| {
            format!("witnesses {w}")
        }),
    );
    for class in data.classes() {
        let q = &class.representative;
        rec.stage(format!("P·C_G(P) for {q}"));
        let pc = product(q, &class.centralizer, lim)?.expect("C_G(P) normalizes P");
        let a = has_characteristic_p(&pc, p, lim)?;
        let b = class.normalizer_characteristic_p;
        rec.step(
            format!("P={q}: P·C_G(P) and N_G(P) have characteristic {p}"),
            a && b,
            format!(
                "|P·C_G(P)| = {} ({a}), |N_G(P)| = {} ({b})",
                pc.size(),
                class.normalizer.size()
            ),
        );
    }
    Ok(())
}

fn p2_5(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    let (p, lim) = (inst.prime, &inst.limits);
    if !nontrivial(data, rec) {
        return Ok(());
    }
    rec.stage("characteristic of centralizers");
    let cent: Vec<bool> = data
        .classes()
        .iter()
        .map(|c| has_characteristic_p(&c.centralizer, p, lim))
        .collect::<Result<_>>()?;
    let bad: Vec<String> = data
        .classes()
        .iter()
        .zip(&cent)
        .filter(|(c, &x)| x != c.normalizer_characteristic_p)
        .map(|(c, _)| c.representative.to_string())
        .collect();
    rec.step(
        format!("C_G(P) has characteristic {p} iff N_G(P) does"),
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} classes agree", cent.len())
        } else {
            format!("disagree at {}", bad.join(", "))
        },
    );
    // Conjugation preserves the property, so class representatives `Q` and
    // all members of overgroup classes suffice.
    rec.stage("overgroups of characteristic-p centralizers");
    let mut pairs = 0;
    let mut bad = Vec::new();
    for (qi, q) in data.classes().iter().enumerate() {
        if !cent[qi] {
            continue;
        }
        for (pi, over) in data.classes().iter().enumerate() {
            if over.order() <= q.order() || !over.members.iter().any(|m| q.representative.is_subgroup_of(m)) {
                continue;
            }
            pairs += 1;
            if !cent[pi] {
                bad.push(format!("{} < {}", q.representative, over.representative));
            }
        }
    }
    rec.step(
        format!("overgroups P ≥ Q of Q with C_G(Q) of characteristic {p} inherit it"),
        bad.is_empty(),
        if bad.is_empty() {
            format!("{pairs} class pairs checked")
        } else {
            format!("fails at {}", bad.join(", "))
        },
    );
    Ok(())
}

fn p3_1(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    if !nontrivial(data, rec) {
        return Ok(());
    }
    rec.stage("collections");
    let ce = inst.members(CollectionKind::Ce)?;
    let hat_s = inst.members(CollectionKind::HatS)?;
    rec.subset("Ce ⊆ hatS", ("Ce", &ce), ("hatS", &hat_s));
    let bcen = inst.members(CollectionKind::Bcen)?;
    let hat_b = inst.members(CollectionKind::HatB)?;
    rec.subset("Bcen ⊆ hatB", ("Bcen", &bcen), ("hatB", &hat_b));
    let bad: Vec<String> = data
        .classes()
        .iter()
        .filter(|c| c.parabolic && !c.flags.distinguished)
        .map(|c| c.representative.to_string())
        .collect();
    rec.step(
        "subgroups with parabolic normalizer are distinguished",
        bad.is_empty(),
        if bad.is_empty() {
            format!(
                "{} parabolic classes",
                data.classes().iter().filter(|c| c.parabolic).count()
            )
        } else {
            format!("fails at {}", bad.join(", "))
        },
    );
    Ok(())
}

fn l3_3(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    let lim = &inst.limits;
    let eligible: Vec<&PClass> = data
        .classes()
        .iter()
        .filter(|c| c.normalizer_characteristic_p)
        .collect();
    if !rec.hypothesis(
        format!("some N_G(P) has characteristic {}", inst.prime),
        !eligible.is_empty(),
        None,
    ) {
        return Ok(());
    }
    for class in eligible {
        let o = &class.normalizer_core;
        rec.stage(format!("C_G(O_p(N_G(P))) for {}", class.representative));
        let c = centralizer_of_group_in(&inst.group, o, lim)?;
        let z = center_of(o, lim)?;
        let flags = data.flags_of(o).expect("O_p(N_G(P)) is a nontrivial p-subgroup");
        rec.step(
            format!("P={}: O = O_p(N_G(P)) = {o}", class.representative),
            c == z && flags.centric && flags.distinguished,
            format!(
                "C_G(O) = Z(O): {}, centric: {}, distinguished: {}",
                c == z,
                flags.centric,
                flags.distinguished
            ),
        );
    }
    Ok(())
}

fn p3_4(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    let c = data.classification();
    if !rec.hypothesis(
        format!("local characteristic {}", inst.prime),
        c.local,
        list(&c.local_witnesses),
    ) || !nontrivial(data, rec)
    {
        return Ok(());
    }
    rec.stage("collections");
    let bcen = inst.members(CollectionKind::Bcen)?;
    let b = inst.members(CollectionKind::B)?;
    rec.same_sets("Bcen = B", ("Bcen", &bcen), ("B", &b));
    Ok(())
}

fn p3_5(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    if !parabolic(data, rec) || !nontrivial(data, rec) {
        return Ok(());
    }
    let bad: Vec<String> = data
        .classes()
        .iter()
        .filter(|c| c.flags.tilde && !c.normalizer_characteristic_p)
        .map(|c| c.representative.to_string())
        .collect();
    rec.step(
        format!("(a) N_G(P) has characteristic {} for P ∈ tildeS", inst.prime),
        bad.is_empty(),
        if bad.is_empty() {
            format!("{} classes", data.classes().iter().filter(|c| c.flags.tilde).count())
        } else {
            format!("fails at {}", bad.join(", "))
        },
    );
    rec.stage("collections");
    let bcen = inst.members(CollectionKind::Bcen)?;
    let hat_b = inst.members(CollectionKind::HatB)?;
    let tilde_b = inst.members(CollectionKind::TildeB)?;
    rec.same_sets("(b) Bcen = hatB", ("Bcen", &bcen), ("hatB", &hat_b));
    rec.same_sets("(b) hatB = tildeB", ("hatB", &hat_b), ("tildeB", &tilde_b));
    Ok(())
}

/// Elements of `x` below `p` (or equal), acted on by `acting`.
fn at_most(x: &GPoset, p: &Group, acting: &Group, inst: &Instance) -> Result<GPoset> {
    x.restrict(|q| q.is_subgroup_of(p), acting, &inst.limits)
}

fn above(x: &GPoset, p: &Group, strict: bool, acting: &Group, inst: &Instance) -> Result<GPoset> {
    x.restrict(
        |q| p.is_subgroup_of(q) && (!strict || q.size() > p.size()),
        acting,
        &inst.limits,
    )
}

fn p3_8(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    if !parabolic(data, rec) || !nontrivial(data, rec) {
        return Ok(());
    }
    let lim = &inst.limits;
    rec.stage("posets");
    let hat_s = inst.poset(CollectionKind::HatS)?;
    let hat_a = inst.poset(CollectionKind::HatA)?;
    let hat_b = inst.poset(CollectionKind::HatB)?;
    for class in data.classes().iter().filter(|c| c.flags.distinguished) {
        let q = class.representative.group();
        rec.stage(format!("hatA below {q}"));
        let below = at_most(&hat_a, q, &class.normalizer, inst)?;
        let cert = ContractionCertificate::product_zigzag(&class.hat, &class.normalizer);
        rec.certificate(format!("hatA_{{≤P}} contractible, P={q}"), &below, &cert, lim)?;
    }
    for class in data
        .classes()
        .iter()
        .filter(|c| c.flags.distinguished && !c.flags.radical)
    {
        let q = class.representative.group();
        rec.stage(format!("hatS above {q}"));
        let up = above(&hat_s, q, true, &class.normalizer, inst)?;
        let cert = ContractionCertificate::normalizer_zigzag(q, &class.normalizer_core, &class.normalizer);
        rec.certificate(format!("hatS_{{>P}} contractible, P={q}"), &up, &cert, lim)?;
    }
    rec.stage("homology");
    let hs = inst.homology(&hat_s)?;
    let ha = inst.homology(&hat_a)?;
    let hb = inst.homology(&hat_b)?;
    rec.same_homology("H̃(hatS) ≅ H̃(hatA)", ("hatS", &hs), ("hatA", &ha));
    rec.same_homology("H̃(hatS) ≅ H̃(hatB)", ("hatS", &hs), ("hatB", &hb));
    Ok(())
}

fn p3_9(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    if !parabolic(data, rec) || !nontrivial(data, rec) {
        return Ok(());
    }
    let lim = &inst.limits;
    rec.stage("posets");
    let hat_s = inst.poset(CollectionKind::HatS)?;
    let tilde_s = inst.poset(CollectionKind::TildeS)?;
    for class in data.classes().iter().filter(|c| c.flags.tilde) {
        let q = class.representative.group();
        rec.stage(format!("radical closure of {q}"));
        let r = radical_closure(&inst.group, inst.prime, &class.representative, lim)?;
        let up = above(&hat_s, q, false, &class.normalizer, inst)?;
        let cert = ContractionCertificate::normalizer_zigzag(q, &r, &class.normalizer);
        rec.certificate(format!("hatS_{{≥P}} contractible, P={q}"), &up, &cert, lim)?;
    }
    rec.stage("homology");
    let hs = inst.homology(&hat_s)?;
    let ht = inst.homology(&tilde_s)?;
    rec.same_homology("H̃(hatS) ≅ H̃(tildeS)", ("hatS", &hs), ("tildeS", &ht));
    Ok(())
}

/// Contraction certificates tried, in order, on a `Z`-fixed subposet.
fn fixed_set_candidates(fixed: &GPoset, z: &Group, n: &Group) -> Vec<ContractionCertificate> {
    let mut out = vec![ContractionCertificate::product_zigzag(z, n)];
    // Elements fixed by all of N_G(Z) serve as equivariant constants.
    let mut invariant: Vec<&Group> = fixed
        .elements()
        .iter()
        .filter(|x| n.generators().iter().all(|g| x.is_normalized_by(g)))
        .collect();
    invariant.sort_by_key(|x| x.size());
    for x in invariant {
        out.push(ContractionCertificate::product_zigzag(x, n));
        out.push(ContractionCertificate::normalizer_zigzag(z, x, n));
        out.push(ContractionCertificate::cone(x, Direction::Le, n));
        out.push(ContractionCertificate::cone(x, Direction::Ge, n));
    }
    out
}

fn p3_10(inst: &Instance, data: &PSubgroups, rec: &mut Recorder) -> Result<()> {
    let reps = data.pcentral().representatives().to_vec();
    if !parabolic(data, rec)
        || !rec.hypothesis(format!("{}-central elements exist", inst.prime), !reps.is_empty(), None)
    {
        return Ok(());
    }
    let lim = &inst.limits;
    rec.stage("posets");
    let tilde_s = inst.poset(CollectionKind::TildeS)?;
    for z in &reps {
        let zg = Group::generated(inst.group.degree(), std::slice::from_ref(z));
        rec.stage(format!("N_G(Z) for Z = {zg}"));
        let n = normalizer_in(&inst.group, &zg, lim)?;
        let fixed = tilde_s.fixed_subposet(&zg, &n, lim)?;
        let cert = ContractionCertificate::product_zigzag(&zg, &n);
        rec.certificate(format!("tildeS^Z contractible, Z={zg}"), &fixed, &cert, lim)?;
        for kind in [CollectionKind::HatS, CollectionKind::HatA, CollectionKind::HatB] {
            rec.stage(format!("{kind}^Z for Z = {zg}"));
            let fixed = inst.poset(kind)?.fixed_subposet(&zg, &n, lim)?;
            let mut found = None;
            let mut first_defect = None;
            for cert in fixed_set_candidates(&fixed, &zg, &n) {
                match check_certificate(&fixed, &cert, lim)? {
                    Verdict::Valid => {
                        found = Some(cert);
                        break;
                    }
                    Verdict::Invalid(d) => {
                        first_defect.get_or_insert(format!("{cert}: {d}"));
                    }
                }
            }
            let report = assess(&order_complex(&fixed, lim)?, found.is_some(), lim)?;
            let how = match (&found, report.collapsed_to_point) {
                (Some(c), _) => format!("certificate {c}"),
                (None, true) => format!("collapse to a point ({})", first_defect.unwrap_or_default()),
                (None, false) => format!("no certificate ({})", first_defect.unwrap_or_default()),
            };
            rec.step(
                format!("{kind}^Z contractible, Z={zg}"),
                report.verdict == Contractibility::CertifiedContractible,
                format!("{} elements, {how}; {}", fixed.len(), profile_summary(&report.profile)),
            );
            rec.step(
                format!("{kind}^Z acyclic, Z={zg}"),
                report.profile.is_acyclic(),
                profile_summary(&report.profile),
            );
        }
    }
    Ok(())
}
