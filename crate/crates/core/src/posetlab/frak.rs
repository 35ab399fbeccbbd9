//! The collection `𝔖` of distinguished `p`-subgroups `O_C < P ≤ C` whose
//! center meets `Z(S)` for a Sylow chain `P ≤ S_T ≤ S`, with
//! `S_T ∈ Syl_p(C)` and `S ∈ Syl_p(G)`.

use std::collections::HashSet;
use std::sync::Arc;

use super::quotient::QuotientContext;
use crate::collections::predicates::characteristic_given_core;
use crate::collections::{Collection, CollectionClass, CollectionKind, PSubgroups};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::search::{center_of, normalizer_in, orbit_stabilizer};
use crate::permcore::sylow::sylow_p;
use crate::permcore::{Group, Perm, Subgroup};

/// The three standing hypotheses for the fixed-point theorem.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct Hypotheses {
    pub g_parabolic: bool,
    pub c_characteristic_p: bool,
    pub cbar_parabolic: bool,
}

impl Hypotheses {
    pub fn hold(&self) -> bool {
        self.g_parabolic && !self.c_characteristic_p && self.cbar_parabolic
    }

    pub fn evaluate(data: &PSubgroups, ctx: &QuotientContext, limits: &Limits) -> Result<Self> {
        let cbar = PSubgroups::compute(ctx.quotient(), data.prime(), limits)?;
        Ok(Hypotheses {
            g_parabolic: data.classification().parabolic,
            c_characteristic_p: characteristic_given_core(ctx.centralizer(), ctx.core(), limits)?,
            cbar_parabolic: cbar.classification().parabolic,
        })
    }
}

#[derive(Debug, Clone)]
pub struct FrakS {
    pub collection: Collection,
    pub context: QuotientContext,
    /// `N_G(T)`, the acting group of the classes.
    pub normalizer: Group,
    /// `Ŝ_p(G)^{≤C}_{>O_C}`, ascending.
    pub candidates: Vec<Group>,
    /// Candidates whose membership differs between Sylow pairs.
    pub sylow_dependent: Vec<Group>,
    /// Number of pairs `(S_T, S)` with `S_T ≤ S`.
    pub sylow_pairs: usize,
    pub core_has_p_central: bool,
    pub hypotheses: Hypotheses,
}

fn sylow_orbit(g: &Group, seed: Group, limits: &Limits) -> Result<Vec<Group>> {
    Ok(orbit_stabilizer(g, seed, |h, x| h.conjugate(x), limits.max_orbit)?.points)
}

pub fn build_frak_s(data: &PSubgroups, t: &Group, limits: &Limits) -> Result<FrakS> {
    let g = data.group();
    let p = data.prime();
    let ctx = QuotientContext::new(g, p, t, limits)?;
    if t.generators().iter().any(|x| data.pcentral().contains(x)) {
        return Err(Error::Usage(format!(
            "{t} is generated by a {p}-central element; its fixed points are contractible"
        )));
    }
    let c = ctx.centralizer();
    let core = ctx.core();
    let n = normalizer_in(g, t, limits)?;

    let mut candidates: Vec<Group> = data
        .classes()
        .iter()
        .filter(|cl| cl.flags.distinguished && cl.representative.size() > core.size())
        .flat_map(|cl| cl.members.iter())
        .filter(|m| m.is_subgroup_of(c) && core.is_subgroup_of(m))
        .cloned()
        .collect();
    candidates.sort_by(|a, b| (a.size(), a).cmp(&(b.size(), b)));

    let syl_c = sylow_orbit(c, sylow_p(c, p, limits)?.into_group(), limits)?;
    let syl_g = sylow_orbit(g, data.pcentral().sylow().group().clone(), limits)?;
    let centers: Vec<Vec<Perm>> = syl_g
        .iter()
        .map(|s| {
            let z = center_of(s, limits)?;
            Ok(z.enumerate(limits.max_order)?
                .into_iter()
                .filter(|x| !x.is_identity())
                .collect())
        })
        .collect::<Result<_>>()?;
    let pairs: Vec<(usize, usize)> = syl_c
        .iter()
        .enumerate()
        .flat_map(|(i, st)| {
            syl_g
                .iter()
                .enumerate()
                .filter(move |(_, s)| st.is_subgroup_of(s))
                .map(move |(j, _)| (i, j))
        })
        .collect();

    let mut members = Vec::new();
    let mut sylow_dependent = Vec::new();
    for cand in &candidates {
        let (mut yes, mut no) = (false, false);
        for &(i, j) in &pairs {
            if !cand.is_subgroup_of(&syl_c[i]) {
                continue;
            }
            if centers[j].iter().any(|z| cand.contains(z)) {
                yes = true;
            } else {
                no = true;
            }
        }
        if yes && no {
            sylow_dependent.push(cand.clone());
        }
        if yes {
            members.push(cand.clone());
        }
    }

    let core_has_p_central = data.pcentral().meets(core, limits)?;
    let hypotheses = Hypotheses::evaluate(data, &ctx, limits)?;
    let collection = classes_under(&n, g, p, members, data, limits)?;
    Ok(FrakS {
        collection,
        context: ctx,
        normalizer: n,
        candidates,
        sylow_dependent,
        sylow_pairs: pairs.len(),
        core_has_p_central,
        hypotheses,
    })
}

/// Splits `members` into orbits of `acting`.
fn classes_under(
    acting: &Group,
    g: &Group,
    p: u64,
    members: Vec<Group>,
    data: &PSubgroups,
    limits: &Limits,
) -> Result<Collection> {
    let mut seen: HashSet<Group> = HashSet::new();
    let mut classes = Vec::new();
    for m in members {
        if seen.contains(&m) {
            continue;
        }
        let mut orbit = sylow_orbit(acting, m.clone(), limits)?;
        orbit.sort();
        seen.extend(orbit.iter().cloned());
        let flags = data.flags_of(&m).expect("candidates are p-subgroups of the group");
        classes.push(CollectionClass {
            representative: Subgroup::unchecked(g, orbit[0].clone()),
            members: Arc::from(orbit),
            flags,
        });
    }
    Ok(Collection::from_classes(CollectionKind::FrakS, g, p, classes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::search::centralizer_of_group_in;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    #[test]
    fn sym5_transposition() {
        let lim = Limits::default();
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let data = PSubgroups::compute(&s5, 2, &lim).unwrap();
        let f = build_frak_s(&data, &grp(5, "(1,2)"), &lim).unwrap();
        assert_eq!(f.context.core().size(), 2);
        assert!(f.sylow_dependent.is_empty());
        let sizes: Vec<u64> = f.collection.elements().map(Group::size).collect();
        // C = ⟨(1,2)⟩ × Sym{3,4,5} has order 12, so only the three Klein groups
        // ⟨(1,2),(a,b)⟩ qualify.
        assert_eq!(sizes, [4, 4, 4]);
        assert!(!f.core_has_p_central);
        assert!(f.hypotheses.g_parabolic && !f.hypotheses.c_characteristic_p && f.hypotheses.cbar_parabolic);
    }

    #[test]
    fn contains_centric_overgroups_of_the_core() {
        let lim = Limits::default();
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let data = PSubgroups::compute(&s5, 2, &lim).unwrap();
        let t = grp(5, "(1,2)");
        let f = build_frak_s(&data, &t, &lim).unwrap();
        let members = f.collection.member_set();
        let c = centralizer_of_group_in(&s5, &t, &lim).unwrap();
        for cl in data.classes().iter().filter(|cl| cl.flags.centric) {
            for m in cl.members.iter() {
                if m.is_subgroup_of(&c) && f.context.core().is_subgroup_of(m) && m.size() > f.context.core().size() {
                    assert!(members.contains(m), "{m} missing");
                }
            }
        }
    }

    #[test]
    fn central_type_is_rejected() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let data = PSubgroups::compute(&s4, 2, &lim).unwrap();
        assert!(matches!(
            build_frak_s(&data, &grp(4, "(1,3)(2,4)"), &lim),
            Err(Error::Usage(_))
        ));
    }
}
