use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::search::{center_of, orbit_stabilizer};
use crate::permcore::sylow::{ensure_prime, sylow_p};
use crate::permcore::{Group, Perm, Subgroup};

/// The `p`-central elements of a group: elements of order `p` lying in the
/// center of some Sylow `p`-subgroup.
///
/// Every such element is conjugate into the center of one fixed Sylow
/// subgroup `S`, so the family is the union of the classes of the order-`p`
/// elements of `Z(S)`.
#[derive(Debug, Clone)]
pub struct PCentralData {
    group: Group,
    prime: u64,
    sylow: Subgroup,
    /// Least element of each class, ascending.
    representatives: Vec<Perm>,
    class_sizes: Vec<u64>,
    members: HashSet<Perm>,
}

impl PCentralData {
    pub fn compute(group: &Group, p: u64, limits: &Limits) -> Result<Self> {
        ensure_prime(p)?;
        PCentralData::with_sylow(group, p, sylow_p(group, p, limits)?, limits)
    }

    /// As [`PCentralData::compute`], for a known Sylow subgroup.
    pub fn with_sylow(group: &Group, p: u64, sylow: Subgroup, limits: &Limits) -> Result<Self> {
        let z = center_of(&sylow, limits)?;
        let mut candidates: Vec<Perm> = match z.elements() {
            Some(e) => e.iter().filter(|x| x.order() == p).cloned().collect(),
            None => {
                return Err(Error::resource("max_sylow_order", limits.max_sylow_order, z.size()));
            }
        };
        candidates.sort();
        let mut members: HashSet<Perm> = HashSet::new();
        let mut classes: Vec<(Perm, u64)> = Vec::new();
        for x in candidates {
            if members.contains(&x) {
                continue;
            }
            let orbit = orbit_stabilizer(group, x, |y, g| y.conj(g), limits.max_orbit)?;
            let rep = orbit.points.iter().min().expect("orbit is nonempty").clone();
            classes.push((rep, orbit.len() as u64));
            members.extend(orbit.points);
        }
        classes.sort();
        let (representatives, class_sizes) = classes.into_iter().unzip();
        Ok(PCentralData {
            group: group.clone(),
            prime: p,
            sylow,
            representatives,
            class_sizes,
            members,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// The Sylow subgroup used to seed the classes.
    pub fn sylow(&self) -> &Subgroup {
        &self.sylow
    }

    pub fn representatives(&self) -> &[Perm] {
        &self.representatives
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// Membership without validation; `false` for elements of other orders.
    pub fn contains(&self, x: &Perm) -> bool {
        self.members.contains(x)
    }

    /// Whether `x` is `p`-central. `x` must lie in the group and have order
    /// `p`.
    pub fn is_p_central(&self, x: &Perm) -> Result<bool> {
        if !self.group.contains(x) {
            return Err(Error::Domain(format!("{x} is not an element of the group")));
        }
        if x.order() != self.prime {
            return Err(Error::Domain(format!("{x} does not have order {}", self.prime)));
        }
        Ok(self.contains(x))
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Elements of `h` that are `p`-central, for a group small enough to
    /// list.
    pub fn central_elements_of(&self, h: &Group, limits: &Limits) -> Result<Vec<Perm>> {
        let e = h.enumerate(limits.max_order)?;
        Ok(e.into_iter().filter(|x| self.contains(x)).collect())
    }
}

/// Whether `x` is `p`-central in `g`, by the centralizer index.
pub fn is_p_central(g: &Group, p: u64, x: &Perm, limits: &Limits) -> Result<bool> {
    ensure_prime(p)?;
    if !g.contains(x) {
        return Err(Error::Domain(format!("{x} is not an element of the group")));
    }
    if x.order() != p {
        return Err(Error::Domain(format!("{x} does not have order {p}")));
    }
    let class = orbit_stabilizer(g, x.clone(), |y, h| y.conj(h), limits.max_orbit)?;
    Ok(!(class.len() as u64).is_multiple_of(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    #[test]
    fn examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let x = Perm::parse("(1,2)(3,4)", 4).unwrap();
        assert!(is_p_central(&s4, 2, &x, &lim).unwrap());
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let t = Perm::parse("(1,2)", 5).unwrap();
        assert!(!is_p_central(&s5, 2, &t, &lim).unwrap());
        let d8 = grp(4, "(1,2,3,4);(1,3)");
        let z = Perm::parse("(1,3)(2,4)", 4).unwrap();
        assert!(is_p_central(&d8, 2, &z, &lim).unwrap());
        let bad = Perm::parse("(1,2,3)", 4).unwrap();
        assert!(matches!(is_p_central(&s4, 2, &bad, &lim), Err(Error::Domain(_))));
    }

    #[test]
    fn data_matches_centralizer_index() {
        let lim = Limits::default();
        for (n, gens, p) in [
            (5, "(1,2);(1,2,3,4,5)", 2),
            (5, "(1,2);(1,2,3,4,5)", 3),
            (6, "(1,2);(1,2,3,4,5,6)", 2),
            (6, "(1,2,3);(2,3,4,5,6)", 3),
        ] {
            let g = grp(n, gens);
            let data = PCentralData::compute(&g, p, &lim).unwrap();
            for x in g.enumerate(1000).unwrap() {
                if x.order() == p {
                    assert_eq!(data.contains(&x), is_p_central(&g, p, &x, &lim).unwrap());
                }
            }
            let total: u64 = data.class_sizes().iter().sum();
            assert_eq!(total as usize, data.members.len());
        }
    }

    #[test]
    fn coprime_prime_gives_nothing() {
        let s3 = grp(3, "(1,2);(1,2,3)");
        let data = PCentralData::compute(&s3, 5, &Limits::default()).unwrap();
        assert!(data.is_empty());
    }
}
