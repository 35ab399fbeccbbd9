//! Statements about `T`-fixed points for a noncentral subgroup `T` of order
//! `p`, with `C = C_G(T)`, `O_C = O_p(C)` and `C̄ = C/O_C`.

use std::collections::HashSet;

use pcomplex::collections::{radical_closure, CollectionKind, PSubgroups};
use pcomplex::homology::HomologyProfile;
use pcomplex::permcore::search::{center_of, normalizer_in};
use pcomplex::permcore::sylow::p_core;
use pcomplex::permcore::{Group, Subgroup};
use pcomplex::posetlab::{
    build_frak_s, build_poset, product, ContractionCertificate, Direction, FrakS, GPoset, MapRule, QuotientContext,
    RetractionCertificate,
};
use pcomplex::Result;

use super::{Instance, Theorem};
use crate::report::{profile_summary, Recorder, Strength};

struct Setting<'a> {
    inst: &'a Instance,
    data: &'a PSubgroups,
    t: Group,
    ctx: QuotientContext,
    /// `N_G(T)`
    n: Group,
}

impl Setting<'_> {
    fn c(&self) -> &Group {
        self.ctx.centralizer()
    }

    fn oc(&self) -> &Group {
        self.ctx.core()
    }

    /// Members of `kind` satisfying `keep`, acted on by `N_G(T)`.
    fn sub(&self, kind: CollectionKind, keep: impl Fn(&Group) -> bool) -> Result<GPoset> {
        self.inst.poset(kind)?.restrict(keep, &self.n, &self.inst.limits)
    }

    /// `kind^{≤C}_{>H}`.
    fn between(&self, kind: CollectionKind, h: &Group) -> Result<GPoset> {
        let c = self.c().clone();
        self.sub(kind, |q| {
            q.size() > h.size() && h.is_subgroup_of(q) && q.is_subgroup_of(&c)
        })
    }

    fn fixed(&self, kind: CollectionKind) -> Result<GPoset> {
        self.inst
            .poset(kind)?
            .fixed_subposet(&self.t, &self.n, &self.inst.limits)
    }

    fn homology(&self, x: &GPoset) -> Result<HomologyProfile> {
        self.inst.homology(x)
    }

    fn meets_central(&self, h: &Group) -> Result<bool> {
        self.data.pcentral().meets(h, &self.inst.limits)
    }

    fn parabolic(&self, rec: &mut Recorder) -> bool {
        let c = self.data.classification();
        let w = (!c.parabolic_witnesses.is_empty()).then(|| {
            c.parabolic_witnesses
                .iter()
                .map(|g| g.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        });
        rec.hypothesis(
            format!("G has parabolic characteristic {}", self.inst.prime),
            c.parabolic,
            w,
        )
    }

    fn c_characteristic(&self) -> Result<bool> {
        pcomplex::collections::has_characteristic_p(self.c(), self.inst.prime, &self.inst.limits)
    }
}

/// One representative of each orbit of the acting group.
fn orbit_reps(x: &GPoset) -> Result<Vec<Group>> {
    Ok(x.orbits()?.into_iter().map(|o| x.elements()[o[0]].clone()).collect())
}

fn above_in(x: &GPoset, p: &Group, strict: bool, acting: &Group, inst: &Instance) -> Result<GPoset> {
    x.restrict(
        |q| p.is_subgroup_of(q) && (!strict || q.size() > p.size()),
        acting,
        &inst.limits,
    )
}

fn members(x: &GPoset) -> HashSet<Group> {
    x.elements().iter().cloned().collect()
}

pub(super) fn run(theorem: Theorem, inst: &Instance, t: &Group, rec: &mut Recorder) -> Result<()> {
    rec.stage("enumerate p-subgroups");
    let data = inst.data()?;
    let p = inst.prime;
    let order_p = t.size() == p && t.is_subgroup_of(&inst.group);
    if !rec.hypothesis(format!("T is a subgroup of order {p}"), order_p, None) {
        return Ok(());
    }
    let central = t.generators().iter().any(|x| data.pcentral().contains(x));
    if !rec.hypothesis(
        "T is noncentral",
        !central,
        central.then(|| format!("{t} is generated by a {p}-central element")),
    ) {
        return Ok(());
    }
    rec.stage("C_G(T), O_p(C_G(T)) and the quotient");
    let ctx = QuotientContext::new(&inst.group, p, t, &inst.limits)?;
    rec.stage("N_G(T)");
    let n = normalizer_in(&inst.group, t, &inst.limits)?;
    let s = Setting {
        inst,
        data,
        t: t.clone(),
        ctx,
        n,
    };
    match theorem {
        Theorem::P4_3 => {
            rec.stage("collections");
            let tb = inst.members(CollectionKind::TildeB)?;
            let hs = inst.members(CollectionKind::HatS)?;
            let extra = tb.difference(&hs).min().map(|g| g.to_string());
            if !rec.hypothesis("tildeS ∩ B ⊆ hatS", extra.is_none(), extra) {
                return Ok(());
            }
            over_t(&s, rec, "")
        }
        Theorem::P4_4 => {
            if !s.parabolic(rec) {
                return Ok(());
            }
            chain_4_4(&s, rec, "")
        }
        Theorem::L4_5 => {
            if !s.parabolic(rec) {
                return Ok(());
            }
            lemma_4_5(&s, rec)
        }
        Theorem::P4_6 => p4_6(&s, rec),
        Theorem::P4_7 => {
            if !s.parabolic(rec) {
                return Ok(());
            }
            rec.stage("characteristic of C");
            let cp = s.c_characteristic()?;
            if !rec.hypothesis(format!("C does not have characteristic {p}"), !cp, None) {
                return Ok(());
            }
            retract_onto_core(&s, rec, "")
        }
        Theorem::P4_8 => {
            if !s.parabolic(rec) {
                return Ok(());
            }
            let t = s.t.clone();
            let oc = s.oc().clone();
            distinguished_vs_tilde(&s, rec, "H=T: ", &t)?;
            if oc != t {
                distinguished_vs_tilde(&s, rec, "H=O_C: ", &oc)?;
            }
            Ok(())
        }
        Theorem::P4_10 => {
            if !s.parabolic(rec) {
                return Ok(());
            }
            rec.stage("frakS");
            let frak = build_frak_s(data, &s.t, &inst.limits)?;
            frak_inclusion(&s, &frak, rec, "")
        }
        Theorem::P4_11 => {
            rec.stage("frakS");
            let frak = build_frak_s(data, &s.t, &inst.limits)?;
            if !remark_4_2(&s, &frak, rec) {
                return Ok(());
            }
            quotient_map(&s, &frak, rec, "").map(|_| ())
        }
        Theorem::T4_12 => t4_12(&s, rec),
        _ => unreachable!("local statements are dispatched elsewhere"),
    }
}

fn remark_4_2(s: &Setting, frak: &FrakS, rec: &mut Recorder) -> bool {
    let h = frak.hypotheses;
    let p = s.inst.prime;
    let c = s.data.classification();
    let w = (!c.parabolic_witnesses.is_empty()).then(|| {
        c.parabolic_witnesses
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    });
    rec.hypothesis(format!("G has parabolic characteristic {p}"), h.g_parabolic, w);
    rec.hypothesis(
        format!("C does not have characteristic {p}"),
        !h.c_characteristic_p,
        Some(format!("|C| = {}, O_C = {}", s.c().size(), s.oc())),
    );
    rec.hypothesis(
        format!("C̄ has parabolic characteristic {p}"),
        h.cbar_parabolic,
        Some(format!("|C̄| = {}", s.ctx.quotient().size())),
    );
    h.hold()
}

/// `tildeS_{>T} ≃ hatS_{>T}`: for `P` in the difference, `tildeS_{>P}`
/// contracts through `O_p(N_G(P))`.
fn over_t(s: &Setting, rec: &mut Recorder, tag: &str) -> Result<()> {
    let lim = &s.inst.limits;
    let t = s.t.clone();
    rec.stage(format!("{tag}tildeS and hatS above T"));
    let x = s.sub(CollectionKind::TildeS, |q| q.size() > t.size() && t.is_subgroup_of(q))?;
    let y = s.sub(CollectionKind::HatS, |q| q.size() > t.size() && t.is_subgroup_of(q))?;
    let tilde_s = s.inst.poset(CollectionKind::TildeS)?;
    for p in orbit_reps(&x)?.into_iter().filter(|p| !y.contains(p)) {
        rec.stage(format!("{tag}O_p(N_G(P)) for P = {p}"));
        let np = normalizer_in(&s.inst.group, &p, lim)?;
        let o = p_core(&np, s.inst.prime, lim)?.into_group();
        let up = above_in(&tilde_s, &p, true, &np, s.inst)?;
        let cert = ContractionCertificate::normalizer_zigzag(&p, &o, &np);
        rec.certificate(format!("{tag}tildeS_{{>P}} contractible, P={p}"), &up, &cert, lim)?;
    }
    rec.stage(format!("{tag}homology above T"));
    let hx = s.homology(&x)?;
    let hy = s.homology(&y)?;
    rec.same_homology(
        format!("{tag}H̃(tildeS_{{>T}}) ≅ H̃(hatS_{{>T}})"),
        ("tildeS_>T", &hx),
        ("hatS_>T", &hy),
    );
    Ok(())
}

/// `hatS^T ≃ tildeS^T ≃ tildeS_{≥T} = tildeS_{>T} ≃ hatS_{>T} ≃ hatS^{≤N_G(T)}_{>T} = hatS^{≤C}_{>T}`.
fn chain_4_4(s: &Setting, rec: &mut Recorder, tag: &str) -> Result<()> {
    let lim = &s.inst.limits;
    let t = s.t.clone();
    rec.stage(format!("{tag}fixed points of T"));
    let hat_fixed = s.fixed(CollectionKind::HatS)?;
    let tilde_fixed = s.fixed(CollectionKind::TildeS)?;
    let h_hat_fixed = s.homology(&hat_fixed)?;
    let h_tilde_fixed = s.homology(&tilde_fixed)?;
    rec.same_homology(
        format!("{tag}H̃(hatS^T) ≅ H̃(tildeS^T)"),
        ("hatS^T", &h_hat_fixed),
        ("tildeS^T", &h_tilde_fixed),
    );

    let tilde_ge = s.sub(CollectionKind::TildeS, |q| t.is_subgroup_of(q))?;
    let cert = RetractionCertificate {
        map: MapRule::ProductWith(t.clone()),
        direction: Direction::Ge,
        equivariance: s.n.clone(),
    };
    rec.retraction(
        format!("{tag}tildeS^T retracts onto tildeS_{{≥T}}"),
        &tilde_fixed,
        &tilde_ge,
        &cert,
        lim,
    )?;

    let in_tilde = s.inst.members(CollectionKind::TildeS)?.contains(&t);
    rec.step(
        format!("{tag}T ∉ tildeS, so tildeS_{{≥T}} = tildeS_{{>T}}"),
        !in_tilde,
        format!("{} elements", tilde_ge.len()),
    );

    over_t(s, rec, tag)?;

    rec.stage(format!("{tag}normalizers of T"));
    let hat_gt = s.sub(CollectionKind::HatS, |q| q.size() > t.size() && t.is_subgroup_of(q))?;
    let n = s.n.clone();
    let hat_gt_n = s.sub(CollectionKind::HatS, |q| {
        q.size() > t.size() && t.is_subgroup_of(q) && q.is_subgroup_of(&n)
    })?;
    let cert = RetractionCertificate {
        map: MapRule::NormalizerOf(t.clone()),
        direction: Direction::Le,
        equivariance: s.n.clone(),
    };
    rec.retraction(
        format!("{tag}hatS_{{>T}} retracts onto hatS^{{≤N_G(T)}}_{{>T}} by Q ↦ N_Q(T)"),
        &hat_gt,
        &hat_gt_n,
        &cert,
        lim,
    )?;
    let hat_gt_c = s.between(CollectionKind::HatS, &t)?;
    rec.same_sets(
        format!("{tag}hatS^{{≤N_G(T)}}_{{>T}} = hatS^{{≤C}}_{{>T}}"),
        ("≤N_G(T)", &members(&hat_gt_n)),
        ("≤C", &members(&hat_gt_c)),
    );
    rec.stage(format!("{tag}homology of hatS^≤C_>T"));
    let h_end = s.homology(&hat_gt_c)?;
    rec.same_homology(
        format!("{tag}H̃(hatS^T) ≅ H̃(hatS^{{≤C}}_{{>T}})"),
        ("hatS^T", &h_hat_fixed),
        ("hatS^≤C_>T", &h_end),
    );
    Ok(())
}

fn lemma_4_5(s: &Setting, rec: &mut Recorder) -> Result<()> {
    rec.stage("O_C and the characteristic of C");
    let oc_tilde = s.meets_central(s.oc())?;
    let cp = s.c_characteristic()?;
    rec.step(
        format!("O_C ∈ tildeS iff C has characteristic {}", s.inst.prime),
        oc_tilde == cp,
        format!(
            "O_C = {} (order {}): meets the central elements {oc_tilde}; C characteristic p {cp}",
            s.oc(),
            s.oc().size()
        ),
    );
    Ok(())
}

fn p4_6(s: &Setting, rec: &mut Recorder) -> Result<()> {
    let lim = &s.inst.limits;
    if !s.parabolic(rec) {
        return Ok(());
    }
    rec.stage("O_C");
    let oc = s.oc().clone();
    let central = s.meets_central(&oc)?;
    if !rec.hypothesis(
        "O_C ∈ tildeS",
        central,
        (!central).then(|| format!("O_C = {oc} is purely noncentral")),
    ) {
        return Ok(());
    }
    let before = rec.steps.len();
    chain_4_4(s, rec, "4.4: ")?;
    let t = s.t.clone();
    distinguished_vs_tilde(s, rec, "4.8: ", &t)?;
    rec.stage("retraction onto the cone");
    let y = s.between(CollectionKind::TildeS, &t)?;
    let c = s.c().clone();
    let target = s.sub(CollectionKind::TildeS, |q| oc.is_subgroup_of(q) && q.is_subgroup_of(&c))?;
    let cert = RetractionCertificate {
        map: MapRule::ProductWith(oc.clone()),
        direction: Direction::Ge,
        equivariance: s.n.clone(),
    };
    rec.retraction(
        "tildeS^{≤C}_{>T} retracts onto tildeS^{≤C}_{≥O_C}",
        &y,
        &target,
        &cert,
        lim,
    )?;
    let cone = ContractionCertificate::cone(&oc, Direction::Ge, &s.n);
    rec.certificate("tildeS^{≤C}_{≥O_C} is a cone on O_C", &target, &cone, lim)?;
    let all_valid = rec.steps[before..].iter().all(|st| st.passed);
    rec.stage("homology of hatS^T and hatB^T");
    let hs = s.homology(&s.fixed(CollectionKind::HatS)?)?;
    let hb = s.homology(&s.fixed(CollectionKind::HatB)?)?;
    rec.step(
        "hatS^T certified contractible",
        all_valid && hs.is_acyclic(),
        format!(
            "{}; {}",
            if all_valid {
                "every certificate in the chain is valid"
            } else {
                "a certificate failed"
            },
            profile_summary(&hs)
        ),
    );
    rec.step("hatB^T acyclic", hb.is_acyclic(), profile_summary(&hb));
    Ok(())
}

/// `tildeS^{≤C}_{>T} → tildeS^{≤C}_{>O_C}` by `P ↦ P·O_C`.
fn retract_onto_core(s: &Setting, rec: &mut Recorder, tag: &str) -> Result<()> {
    let lim = &s.inst.limits;
    let oc = s.oc().clone();
    rec.stage(format!("{tag}O_C"));
    let central = s.meets_central(&oc)?;
    rec.step(
        format!("{tag}O_C purely noncentral"),
        !central,
        format!("O_C = {oc} of order {}", oc.size()),
    );
    let y = s.between(CollectionKind::TildeS, &s.t)?;
    let x = s.between(CollectionKind::TildeS, &oc)?;
    let cert = RetractionCertificate {
        map: MapRule::ProductWith(oc.clone()),
        direction: Direction::Ge,
        equivariance: s.n.clone(),
    };
    rec.retraction(
        format!("{tag}tildeS^{{≤C}}_{{>T}} retracts onto tildeS^{{≤C}}_{{>O_C}}"),
        &y,
        &x,
        &cert,
        lim,
    )?;
    rec.stage(format!("{tag}homology"));
    let hy = s.homology(&y)?;
    let hx = s.homology(&x)?;
    rec.same_homology(
        format!("{tag}H̃(tildeS^{{≤C}}_{{>O_C}}) ≅ H̃(tildeS^{{≤C}}_{{>T}})"),
        ("tildeS^≤C_>O_C", &hx),
        ("tildeS^≤C_>T", &hy),
    );
    Ok(())
}

/// `hatS^{≤C}_{>H} ⊆ tildeS^{≤C}_{>H}` through `Q ≥ N_Q(P) ≤ N_Q(P)Z(R_P) ≥ P·Z(R_P)`.
fn distinguished_vs_tilde(s: &Setting, rec: &mut Recorder, tag: &str, h: &Group) -> Result<()> {
    let lim = &s.inst.limits;
    rec.stage(format!("{tag}N_G(H)"));
    let nh = normalizer_in(&s.inst.group, h, lim)?;
    let ok = s.t.is_subgroup_of(h) && h.is_subgroup_of(s.c()) && s.n.is_subgroup_of(&nh);
    rec.step(format!("{tag}T ≤ H ≤ C and N_G(T) ≤ N_G(H)"), ok, format!("H = {h}"));
    let x = s.between(CollectionKind::HatS, h)?;
    let y = s.between(CollectionKind::TildeS, h)?;
    for p in orbit_reps(&y)? {
        rec.stage(format!("{tag}radical closure of {p}"));
        let sub = Subgroup::new(&s.inst.group, p.clone())?;
        let r = radical_closure(&s.inst.group, s.inst.prime, &sub, lim)?;
        let z = center_of(&r, lim)?;
        let pz = product(&p, &z, lim)?.expect("N_G(P) normalizes Z(R_P)");
        let acting = normalizer_in(&s.n, &p, lim)?;
        let up = above_in(&x, &p, false, &acting, s.inst)?;
        let cert = ContractionCertificate {
            maps: vec![
                MapRule::Identity,
                MapRule::NormalizerOf(p.clone()),
                MapRule::NormalizerThenProduct { p: p.clone(), x: z },
                MapRule::Constant(pz),
            ],
            directions: vec![Direction::Ge, Direction::Le, Direction::Ge],
            equivariance: acting,
        };
        rec.certificate(format!("{tag}hatS^{{≤C}}_{{≥P}} contractible, P={p}"), &up, &cert, lim)?;
    }
    rec.stage(format!("{tag}homology"));
    let hx = s.homology(&x)?;
    let hy = s.homology(&y)?;
    rec.same_homology(
        format!("{tag}H̃(hatS^{{≤C}}_{{>H}}) ≅ H̃(tildeS^{{≤C}}_{{>H}})"),
        ("hatS^≤C_>H", &hx),
        ("tildeS^≤C_>H", &hy),
    );
    Ok(())
}

fn frak_poset(s: &Setting, frak: &FrakS) -> Result<GPoset> {
    build_poset(&frak.collection, &s.n, &s.inst.limits)
}

/// `frakS ⊆ hatS^{≤C}_{>O_C}` through `P ≥ N_P(Q) ≤ N_P(Q)O_Q ≥ O_Q`.
fn frak_inclusion(s: &Setting, frak: &FrakS, rec: &mut Recorder, tag: &str) -> Result<()> {
    let lim = &s.inst.limits;
    rec.stage(format!("{tag}frakS poset"));
    let fp = frak_poset(s, frak)?;
    let d = s.between(CollectionKind::HatS, s.oc())?;
    rec.subset(
        format!("{tag}frakS ⊆ hatS^{{≤C}}_{{>O_C}}"),
        ("frakS", &members(&fp)),
        ("hatS^≤C_>O_C", &members(&d)),
    );
    if !frak.sylow_dependent.is_empty() {
        rec.step(
            format!("{tag}frakS membership independent of the Sylow pair"),
            true,
            format!(
                "{} candidates depend on the pair (S_T, S) and are kept; {} pairs",
                frak.sylow_dependent.len(),
                frak.sylow_pairs
            ),
        );
    }
    for q in orbit_reps(&d)? {
        rec.stage(format!("{tag}O_p(N_C(Q)) for Q = {q}"));
        let oq = p_core(&normalizer_in(s.c(), &q, lim)?, s.inst.prime, lim)?.into_group();
        let acting = normalizer_in(&s.n, &q, lim)?;
        let up = above_in(&fp, &q, false, &acting, s.inst)?;
        let cert = ContractionCertificate::normalizer_zigzag(&q, &oq, &acting);
        rec.certificate(format!("{tag}frakS_{{≥Q}} contractible, Q={q}"), &up, &cert, lim)?;
    }
    rec.stage(format!("{tag}homology"));
    let hf = s.homology(&fp)?;
    let hd = s.homology(&d)?;
    rec.same_homology(
        format!("{tag}H̃(frakS) ≅ H̃(hatS^{{≤C}}_{{>O_C}})"),
        ("frakS", &hf),
        ("hatS^≤C_>O_C", &hd),
    );
    Ok(())
}

/// `q_*: frakS → hatS(C̄)`. Returns the homology of `hatS(C̄)`.
fn quotient_map(s: &Setting, frak: &FrakS, rec: &mut Recorder, tag: &str) -> Result<HomologyProfile> {
    let lim = &s.inst.limits;
    let ctx = &s.ctx;
    rec.stage(format!("{tag}p-subgroups of C̄"));
    let cbar = ctx.quotient().clone();
    let cdata = PSubgroups::compute(&cbar, s.inst.prime, lim)?;
    let hat_cbar = build_poset(
        &pcomplex::collections::Collection::from_psubgroups(&cdata, CollectionKind::HatS)?,
        &cbar,
        lim,
    )?;
    rec.step(
        format!("{tag}q: C → C̄ is a homomorphism with kernel O_C"),
        ctx.is_homomorphism() && ctx.is_faithful(),
        format!("[C : O_C] = {}", ctx.index()),
    );
    rec.stage(format!("{tag}frakS poset"));
    let fp = frak_poset(s, frak)?;
    let images: Vec<Group> = fp.elements().iter().map(|p| ctx.image_of(p)).collect::<Result<_>>()?;
    let outside = fp
        .elements()
        .iter()
        .zip(&images)
        .find(|(_, img)| !hat_cbar.contains(img))
        .map(|(p, _)| p.to_string());
    let distinct: HashSet<&Group> = images.iter().collect();
    rec.step(
        format!("{tag}q_*(frakS) ⊆ hatS(C̄), injective"),
        outside.is_none() && distinct.len() == images.len(),
        match outside {
            Some(p) => format!("q({p}) is not distinguished in C̄"),
            None => format!("{} elements into {}", fp.len(), hat_cbar.len()),
        },
    );
    for qbar in orbit_reps(&hat_cbar)? {
        rec.stage(format!("{tag}preimage of {qbar}"));
        let q = ctx.preimage(&qbar, lim)?;
        let oq = p_core(&normalizer_in(s.c(), &q, lim)?, s.inst.prime, lim)?.into_group();
        rec.step(
            format!("{tag}O_Q = q⁻¹(O_Q̄), Q={q}"),
            ctx.correspondence_holds(&q, lim)?,
            format!("O_Q = {oq}"),
        );
        let acting = normalizer_in(&s.n, &q, lim)?;
        let up = above_in(&fp, &q, false, &acting, s.inst)?;
        let cert = ContractionCertificate::normalizer_zigzag(&q, &oq, &acting);
        rec.certificate(
            format!("{tag}q_*⁻¹(hatS(C̄)_{{≥Q̄}}) = frakS_{{≥Q}} contractible, Q={q}"),
            &up,
            &cert,
            lim,
        )?;
    }
    rec.stage(format!("{tag}homology"));
    let hf = s.homology(&fp)?;
    let hc = s.homology(&hat_cbar)?;
    rec.same_homology(format!("{tag}H̃(frakS) ≅ H̃(hatS(C̄))"), ("frakS", &hf), ("hatS(C̄)", &hc));
    Ok(hc)
}

fn t4_12(s: &Setting, rec: &mut Recorder) -> Result<()> {
    rec.stage("frakS");
    let frak = build_frak_s(s.data, &s.t, &s.inst.limits)?;
    if !remark_4_2(s, &frak, rec) {
        return Ok(());
    }
    let t = s.t.clone();
    let oc = s.oc().clone();
    chain_4_4(s, rec, "4.4: ")?;
    distinguished_vs_tilde(s, rec, "4.8[H=T]: ", &t)?;
    retract_onto_core(s, rec, "4.7: ")?;
    distinguished_vs_tilde(s, rec, "4.8[H=O_C]: ", &oc)?;
    frak_inclusion(s, &frak, rec, "4.10: ")?;
    let hc = quotient_map(s, &frak, rec, "4.11: ")?;

    rec.stage("end complexes");
    let hs = s.homology(&s.fixed(CollectionKind::HatS)?)?;
    let delta = s.homology(&s.fixed(CollectionKind::HatB)?)?;
    let chain_ok = rec.steps.iter().all(|st| st.passed);
    let ends = rec.same_homology("H̃(hatS^T) ≅ H̃(hatS(C̄))", ("hatS^T", &hs), ("hatS(C̄)", &hc));
    rec.same_homology("H̃(hatB^T) ≅ H̃(hatS(C̄))", ("hatB^T", &delta), ("hatS(C̄)", &hc));
    rec.strength = Some(if chain_ok && ends {
        Strength::Certificates
    } else if ends {
        Strength::HomologyIsomorphic
    } else if hs.euler() == hc.euler() {
        Strength::EulerEqual
    } else {
        Strength::None
    });
    Ok(())
}
