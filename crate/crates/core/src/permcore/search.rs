//! Centralizers, normalizers and intersections as point stabilizers.
//!
//! Each search enumerates one orbit of the acting group (conjugates of an
//! element, conjugates of a subgroup, right cosets of a subgroup) and builds
//! the stabilizer from Schreier generators until its order reaches
//! `|G| / |orbit|`. The orbit length is bounded by `Limits::max_orbit`; a
//! search that would exceed it fails with a resource error.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::Zero;

use super::chain::StabChain;
use super::group::{Group, Subgroup};
use super::perm::Perm;
use crate::error::{Error, Result};
use crate::limits::Limits;

pub struct Orbit<T> {
    pub points: Vec<T>,
    /// `transversal[i]` carries the seed to `points[i]`.
    pub transversal: Vec<Perm>,
    pub stabilizer: Group,
}

impl<T> Orbit<T> {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Orbit of `seed` under `group` together with its stabilizer.
pub fn orbit_stabilizer<T, F>(group: &Group, seed: T, act: F, max_orbit: usize) -> Result<Orbit<T>>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &Perm) -> T,
{
    let degree = group.degree();
    let gens = group.generators();
    let mut index: HashMap<T, usize> = HashMap::new();
    let mut points = vec![seed.clone()];
    let mut transversal = vec![Perm::identity(degree)];
    let mut edges: Vec<u32> = Vec::new();
    index.insert(seed, 0);
    let mut i = 0;
    while i < points.len() {
        for s in gens {
            let img = act(&points[i], s);
            let j = match index.get(&img) {
                Some(&j) => j,
                None => {
                    let j = points.len();
                    if j >= max_orbit {
                        return Err(Error::resource("max_orbit", max_orbit as u64, format!("> {j}")));
                    }
                    index.insert(img.clone(), j);
                    points.push(img);
                    transversal.push(transversal[i].mul(s));
                    j
                }
            };
            edges.push(j as u32);
        }
        i += 1;
    }
    let order = group.order();
    let len = BigUint::from(points.len());
    debug_assert!((&order % &len).is_zero());
    let target = order / len;
    let mut stab = StabChain::trivial(degree);
    'outer: for (i, u) in transversal.iter().enumerate() {
        for (k, s) in gens.iter().enumerate() {
            if stab.order() == &target {
                break 'outer;
            }
            let j = edges[i * gens.len() + k] as usize;
            let sg = u.mul(s).mul(&transversal[j].inverse());
            if !sg.is_identity() {
                stab.extend(&sg);
            }
        }
    }
    debug_assert_eq!(stab.order(), &target);
    Ok(Orbit {
        points,
        transversal,
        stabilizer: Group::from_chain(stab),
    })
}

/// Elements of `group` commuting with `x`; `x` need not lie in `group`.
pub fn centralizer_in(group: &Group, x: &Perm, limits: &Limits) -> Result<Group> {
    if let Some(e) = group.elements() {
        let elems = e.iter().filter(|g| g.commutes_with(x)).cloned().collect();
        return Ok(Group::from_closed_elements(group.degree(), elems));
    }
    Ok(orbit_stabilizer(group, x.clone(), |y, g| y.conj(g), limits.max_orbit)?.stabilizer)
}

/// Elements of `group` centralizing every element of `h`.
pub fn centralizer_of_group_in(group: &Group, h: &Group, limits: &Limits) -> Result<Group> {
    let mut c = group.clone();
    for x in h.generators() {
        if !c.generators().iter().all(|g| g.commutes_with(x)) {
            c = centralizer_in(&c, x, limits)?;
        }
    }
    Ok(c)
}

/// Elements of `group` normalizing `h`; `h` need not lie in `group`.
pub fn normalizer_in(group: &Group, h: &Group, limits: &Limits) -> Result<Group> {
    if group.generators().iter().all(|g| h.is_normalized_by(g)) {
        return Ok(group.clone());
    }
    if let Some(e) = group.elements() {
        let elems = e.iter().filter(|g| h.is_normalized_by(g)).cloned().collect();
        return Ok(Group::from_closed_elements(group.degree(), elems));
    }
    Ok(orbit_stabilizer(group, h.clone(), |k, g| k.conjugate(g), limits.max_orbit)?.stabilizer)
}

/// `C_G(x)` for an element `x` of `G`.
pub fn centralizer(g: &Group, x: &Perm, limits: &Limits) -> Result<Subgroup> {
    if !g.contains(x) {
        return Err(Error::Domain(format!("{x} is not an element of the group")));
    }
    Ok(Subgroup::unchecked(g, centralizer_in(g, x, limits)?))
}

/// `C_G(H)` for a subgroup `H` of `G`.
pub fn centralizer_of_subgroup(g: &Group, h: &Group, limits: &Limits) -> Result<Subgroup> {
    ensure_subgroup(g, h)?;
    Ok(Subgroup::unchecked(g, centralizer_of_group_in(g, h, limits)?))
}

/// `N_G(H)` for a subgroup `H` of `G`.
pub fn normalizer(g: &Group, h: &Group, limits: &Limits) -> Result<Subgroup> {
    ensure_subgroup(g, h)?;
    Ok(Subgroup::unchecked(g, normalizer_in(g, h, limits)?))
}

fn ensure_subgroup(g: &Group, h: &Group) -> Result<()> {
    if h.degree() != g.degree() || !h.generators().iter().all(|x| g.contains(x)) {
        return Err(Error::Domain("not a subgroup of the group".into()));
    }
    Ok(())
}

/// `H ∩ K` for two subgroups of one ambient group.
pub fn intersection(h: &Subgroup, k: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    if !h.same_ambient(k) {
        return Err(Error::Domain("subgroups of different ambient groups".into()));
    }
    Ok(Subgroup::unchecked(h.ambient(), intersect_groups(h, k, limits)?))
}

pub fn intersect_groups(h: &Group, k: &Group, limits: &Limits) -> Result<Group> {
    let (small, other) = if h.size() <= k.size() { (h, k) } else { (k, h) };
    if small.is_subgroup_of(other) {
        return Ok(small.clone());
    }
    if let Some(e) = small.elements() {
        let elems = e.iter().filter(|x| other.contains(x)).cloned().collect();
        return Ok(Group::from_closed_elements(h.degree(), elems));
    }
    // `small` acting on the right cosets of `other`; the stabilizer of the
    // trivial coset is the intersection.
    let chain = other.chain();
    let seed = Perm::identity(h.degree());
    let orbit = orbit_stabilizer(small, seed, |x, g| chain.coset_min(&x.mul(g)), limits.max_orbit)?;
    Ok(orbit.stabilizer)
}

/// `Z(H)`, as a subgroup of the ambient group of `H`.
pub fn center(h: &Subgroup, limits: &Limits) -> Result<Subgroup> {
    Ok(Subgroup::unchecked(h.ambient(), center_of(h, limits)?))
}

pub fn center_of(h: &Group, limits: &Limits) -> Result<Group> {
    if h.is_abelian() {
        return Ok(h.clone());
    }
    centralizer_of_group_in(h, h, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    fn perm(n: usize, s: &str) -> Perm {
        Perm::parse(s, n).unwrap()
    }

    fn brute(g: &Group, keep: impl Fn(&Perm) -> bool) -> u64 {
        g.enumerate(10_000).unwrap().iter().filter(|x| keep(x)).count() as u64
    }

    #[test]
    fn centralizer_examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let x = perm(4, "(1,2)(3,4)");
        assert_eq!(centralizer(&s4, &x, &lim).unwrap().size(), 8);
        assert_eq!(brute(&s4, |g| g.commutes_with(&x)), 8);
        assert_eq!(centralizer(&s4, &Perm::identity(4), &lim).unwrap().group(), &s4);
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        assert_eq!(centralizer(&s5, &perm(5, "(1,2)"), &lim).unwrap().size(), 12);
        let a4 = grp(4, "(1,2,3);(2,3,4)");
        assert!(matches!(
            centralizer(&a4, &perm(4, "(1,2)"), &lim),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn normalizer_examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let c4 = grp(4, "(1,2,3,4)");
        assert_eq!(normalizer(&s4, &c4, &lim).unwrap().size(), 8);
        assert_eq!(normalizer(&s4, &s4, &lim).unwrap().group(), &s4);
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        assert_eq!(normalizer(&s5, &grp(5, "(1,2)"), &lim).unwrap().size(), 12);
        let bad = grp(4, "(1,2)");
        let a4 = grp(4, "(1,2,3);(2,3,4)");
        assert!(matches!(normalizer(&a4, &bad, &lim), Err(Error::Domain(_))));
    }

    #[test]
    fn intersection_examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let sub = |s: &str| Subgroup::new(&s4, grp(4, s)).unwrap();
        let d1 = sub("(1,2,3,4);(1,3)");
        let d2 = sub("(1,3,2,4);(1,2)");
        let v = intersection(&d1, &d2, &lim).unwrap();
        assert_eq!(v.size(), 4);
        assert_eq!(v.group(), &grp(4, "(1,2)(3,4);(1,3)(2,4)"));
        assert_eq!(intersection(&d1, &d1, &lim).unwrap(), d1);
        assert!(intersection(&sub("(1,2)"), &sub("(3,4)"), &lim).unwrap().is_trivial());
        let other = Subgroup::whole(&grp(4, "(1,2,3);(2,3,4)"));
        assert!(matches!(intersection(&d1, &other, &lim), Err(Error::Domain(_))));
    }

    #[test]
    fn large_intersection_uses_cosets() {
        let lim = Limits::default();
        let s7 = grp(7, "(1,2);(1,2,3,4,5,6,7)");
        let a = Subgroup::new(&s7, grp(7, "(1,2);(1,2,3,4,5,6)")).unwrap();
        let b = Subgroup::new(&s7, grp(7, "(2,3);(2,3,4,5,6,7)")).unwrap();
        let i = intersection(&a, &b, &lim).unwrap();
        assert_eq!(i.size(), 120);
        assert_eq!(i, intersection(&b, &a, &lim).unwrap());
    }

    #[test]
    fn center_examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let d8 = Subgroup::new(&s4, grp(4, "(1,2,3,4);(1,3)")).unwrap();
        assert_eq!(center(&d8, &lim).unwrap().size(), 2);
        assert!(center(&Subgroup::whole(&s4), &lim).unwrap().is_trivial());
        let v = Subgroup::new(&s4, grp(4, "(1,2);(3,4)")).unwrap();
        assert_eq!(center(&v, &lim).unwrap(), v);
        let s6 = grp(6, "(1,2);(1,2,3,4,5,6)");
        assert!(center_of(&s6, &lim).unwrap().is_trivial());
    }

    #[test]
    fn orbit_budget_is_enforced() {
        let lim = Limits {
            max_orbit: 5,
            ..Limits::default()
        };
        let s6 = grp(6, "(1,2);(1,2,3,4,5,6)");
        let r = centralizer(&s6, &perm(6, "(1,2)"), &lim);
        assert!(matches!(r, Err(Error::Resource { cap: "max_orbit", .. })));
    }
}
