use num_bigint::BigUint;

use super::pcentral::PCentralData;
use super::psubgroups::PSubgroups;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::search::{center_of, centralizer_of_group_in, normalizer_in};
use crate::permcore::sylow::{ensure_prime, is_p_group, p_core, p_part};
use crate::permcore::{Group, Perm, Subgroup};

/// Rejects anything but a nontrivial `p`-subgroup of `g`.
pub(crate) fn check_p_subgroup(g: &Group, p: u64, h: &Group) -> Result<()> {
    ensure_prime(p)?;
    if !h.is_subgroup_of(g) {
        return Err(Error::Domain(format!("{h} is not a subgroup of the group")));
    }
    if h.is_trivial() {
        return Err(Error::Domain("the trivial subgroup is not allowed here".into()));
    }
    if !is_p_group(h, p) {
        return Err(Error::Domain(format!("{h} is not a {p}-group")));
    }
    Ok(())
}

pub fn is_elementary_abelian(h: &Group, p: u64) -> bool {
    h.is_abelian() && h.generators().iter().all(|x| x.order() == p)
}

impl PCentralData {
    /// `P̂`: the subgroup generated by the `p`-central elements of `Ω₁Z(P)`.
    pub fn hat(&self, pgroup: &Group, limits: &Limits) -> Result<Group> {
        let z = center_of(pgroup, limits)?;
        let elems: Vec<Perm> = z
            .enumerate(limits.max_order)?
            .into_iter()
            .filter(|x| self.contains(x))
            .collect();
        Ok(Group::generated(pgroup.degree(), &elems))
    }

    pub fn is_distinguished(&self, pgroup: &Group, limits: &Limits) -> Result<bool> {
        let z = center_of(pgroup, limits)?;
        Ok(z.enumerate(limits.max_order)?.iter().any(|x| self.contains(x)))
    }

    /// Whether `h` contains a `p`-central element.
    pub fn meets(&self, h: &Group, limits: &Limits) -> Result<bool> {
        Ok(h.enumerate(limits.max_order)?.iter().any(|x| self.contains(x)))
    }
}

pub fn hat_subgroup(g: &Group, p: u64, pgroup: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    check_p_subgroup(g, p, pgroup)?;
    let data = PCentralData::compute(g, p, limits)?;
    Ok(Subgroup::unchecked(g, data.hat(pgroup, limits)?))
}

/// Last term of `P₀ = Q`, `P_{i+1} = O_p(N_G(P_i))`.
pub fn radical_closure(g: &Group, p: u64, q: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    check_p_subgroup(g, p, q)?;
    let nq = normalizer_in(g, q, limits)?;
    let mut current = q.group().clone();
    loop {
        let n = normalizer_in(g, &current, limits)?;
        let next = p_core(&n, p, limits)?.into_group();
        if next == current {
            break;
        }
        current = next;
    }
    assert!(
        nq.generators().iter().all(|x| current.is_normalized_by(x)),
        "normalizer of the start does not normalize its radical closure"
    );
    Ok(Subgroup::unchecked(g, current))
}

pub fn is_p_radical(g: &Group, p: u64, pgroup: &Subgroup, limits: &Limits) -> Result<bool> {
    check_p_subgroup(g, p, pgroup)?;
    let n = normalizer_in(g, pgroup, limits)?;
    Ok(p_core(&n, p, limits)?.size() == pgroup.size())
}

pub fn is_p_centric(g: &Group, p: u64, pgroup: &Subgroup, limits: &Limits) -> Result<bool> {
    check_p_subgroup(g, p, pgroup)?;
    centric(g, p, pgroup, limits)
}

pub(crate) fn centric(g: &Group, p: u64, pgroup: &Group, limits: &Limits) -> Result<bool> {
    let c = centralizer_of_group_in(g, pgroup, limits)?;
    let z = center_of(pgroup, limits)?;
    Ok(p_part(&c.order(), p) == z.order())
}

/// `C_H(O_p(H)) ≤ O_p(H)`.
pub fn has_characteristic_p(h: &Group, p: u64, limits: &Limits) -> Result<bool> {
    ensure_prime(p)?;
    let o = p_core(h, p, limits)?.into_group();
    characteristic_given_core(h, &o, limits)
}

pub(crate) fn characteristic_given_core(h: &Group, core: &Group, limits: &Limits) -> Result<bool> {
    let c = centralizer_of_group_in(h, core, limits)?;
    Ok(c.is_subgroup_of(core))
}

/// Whether `h` contains a Sylow `p`-subgroup of a group of order `order`.
pub fn is_parabolic_order(h: &Group, order: &BigUint, p: u64) -> bool {
    p_part(&h.order(), p) == p_part(order, p)
}

#[derive(Debug, Clone)]
pub struct Classification {
    /// Every `p`-local subgroup has characteristic `p`.
    pub local: bool,
    /// Every parabolic `p`-local subgroup has characteristic `p`.
    pub parabolic: bool,
    /// Class representatives `P` whose normalizer fails.
    pub local_witnesses: Vec<Subgroup>,
    /// The subset of `local_witnesses` with parabolic normalizer.
    pub parabolic_witnesses: Vec<Subgroup>,
}

pub fn characteristic_classification(g: &Group, p: u64, limits: &Limits) -> Result<Classification> {
    Ok(PSubgroups::compute(g, p, limits)?.classification())
}
