use serde::Serialize;

use super::ClassFunction;
use crate::collections::PSubgroups;
use crate::error::Result;
use crate::homology::{assess, Contractibility, HomologyProfile};
use crate::limits::Limits;
use crate::permcore::Subgroup;
use crate::posetlab::{order_complex, GPoset};

/// Classes of `p`-singular elements where a class function is nonzero.
#[derive(Debug, Clone, Serialize)]
pub struct SingularReport {
    pub prime: u64,
    /// `(label, value)` for each offending class.
    pub nonzero: Vec<(String, i64)>,
}

impl SingularReport {
    /// A projective virtual character vanishes off `p`-regular classes; an
    /// empty list is consistent with that, a nonempty one rules it out.
    pub fn consistent_with_projective(&self) -> bool {
        self.nonzero.is_empty()
    }
}

pub fn p_singular_vanishing(cf: &ClassFunction, p: u64) -> SingularReport {
    let nonzero = cf
        .table()
        .classes()
        .iter()
        .zip(cf.values())
        .filter(|(c, &v)| c.element_order % p == 0 && v != 0)
        .map(|(c, &v)| (c.label(), v))
        .collect();
    SingularReport { prime: p, nonzero }
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexEntry {
    #[serde(serialize_with = "crate::permcore::group::serialize_display")]
    pub representative: Subgroup,
    pub order: u64,
    pub fixed_elements: usize,
    pub verdict: Contractibility,
    pub profile: HomologyProfile,
    /// The fixed nerve is acyclic, so no summand has this vertex.
    pub excluded: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct VertexScreenReport {
    pub entries: Vec<VertexEntry>,
}

impl VertexScreenReport {
    pub fn candidates(&self) -> impl Iterator<Item = &VertexEntry> {
        self.entries.iter().filter(|e| !e.excluded)
    }
}

/// Fixed-set homology for one representative of every class of nontrivial
/// `p`-subgroups.
pub fn vertex_screen(data: &PSubgroups, x: &GPoset, limits: &Limits) -> Result<VertexScreenReport> {
    let mut entries = Vec::new();
    for class in data.classes() {
        let q = &class.representative;
        let fixed = x.fixed_subposet(q, &class.normalizer, limits)?;
        let report = assess(&order_complex(&fixed, limits)?, false, limits)?;
        let excluded = report.verdict != Contractibility::NonAcyclic;
        entries.push(VertexEntry {
            representative: q.clone(),
            order: q.size(),
            fixed_elements: fixed.len(),
            verdict: report.verdict,
            profile: report.profile,
            excluded,
        });
    }
    Ok(VertexScreenReport { entries })
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::collections::{Collection, CollectionKind};
    use crate::lefschetz::lefschetz_fixed_point;
    use crate::permcore::{ConjugacyClassTable, Group};
    use crate::posetlab::build_poset;

    #[test]
    fn sym5_hat_b() {
        let lim = Limits::default();
        let g = Group::parse(5, "(1,2);(1,2,3,4,5)").unwrap();
        let data = PSubgroups::compute(&g, 2, &lim).unwrap();
        let x = build_poset(
            &Collection::from_psubgroups(&data, CollectionKind::HatB).unwrap(),
            &g,
            &lim,
        )
        .unwrap();
        let t = Arc::new(ConjugacyClassTable::compute(&g, &lim).unwrap());
        let cf = lefschetz_fixed_point(&t, &x, &lim).unwrap();
        let r = p_singular_vanishing(&cf, 2);
        assert_eq!(r.nonzero, [("2".to_string(), 2), ("3·2".to_string(), -1)]);

        let screen = vertex_screen(&data, &x, &lim).unwrap();
        let survivors: Vec<&VertexEntry> = screen.candidates().collect();
        assert_eq!(survivors.len(), 1);
        assert_eq!(survivors[0].order, 2);
        assert_eq!(survivors[0].representative.generators()[0].cycle_type(), [2, 1, 1, 1]);
        assert_eq!(survivors[0].profile.betti(0), 2);
        let klein = screen
            .entries
            .iter()
            .find(|e| {
                e.order == 4
                    && e.representative
                        .generators()
                        .iter()
                        .all(|s| s.cycle_type() == [2, 1, 1, 1])
            })
            .unwrap();
        assert!(klein.excluded);
        assert_eq!(klein.fixed_elements, 2);
    }

    #[test]
    fn sym4_excludes_everything() {
        let lim = Limits::default();
        let g = Group::parse(4, "(1,2);(1,2,3,4)").unwrap();
        let data = PSubgroups::compute(&g, 2, &lim).unwrap();
        let x = build_poset(
            &Collection::from_psubgroups(&data, CollectionKind::HatB).unwrap(),
            &g,
            &lim,
        )
        .unwrap();
        assert_eq!(vertex_screen(&data, &x, &lim).unwrap().candidates().count(), 0);
        let t = Arc::new(ConjugacyClassTable::compute(&g, &lim).unwrap());
        assert!(p_singular_vanishing(&lefschetz_fixed_point(&t, &x, &lim).unwrap(), 2).consistent_with_projective());
    }
}
