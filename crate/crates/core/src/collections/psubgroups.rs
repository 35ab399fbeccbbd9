//! Conjugacy classes of nontrivial `p`-subgroups.
//!
//! Subgroups of one fixed Sylow subgroup `S` are enumerated by cyclic
//! extension: every nontrivial subgroup `K` of a `p`-group has a normal
//! subgroup `H` of index `p`, and `K = ⟨H, x⟩` for any `x ∈ K \ H`. Subgroups
//! are bitsets over the sorted elements of `S`. The subgroups are then fused
//! under `G` by walking conjugation orbits.

use std::collections::HashMap;
use std::sync::Arc;

use super::pcentral::PCentralData;
use super::predicates::{characteristic_given_core, is_elementary_abelian, Classification};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::search::{center_of, centralizer_of_group_in, orbit_stabilizer};
use crate::permcore::sylow::{ensure_prime, p_core, p_part, sylow_p};
use crate::permcore::{Group, Perm, Subgroup, SMALL_GROUP_CAP};

const WORDS: usize = (SMALL_GROUP_CAP as usize).div_ceil(64);

type Bits = [u64; WORDS];

fn has(bits: &Bits, i: u16) -> bool {
    bits[i as usize / 64] >> (i % 64) & 1 == 1
}

fn set(bits: &mut Bits, i: u16) {
    bits[i as usize / 64] |= 1 << (i % 64);
}

/// Multiplication table of a small group.
struct Table {
    elems: Vec<Perm>,
    index: HashMap<Perm, u16>,
    mul: Vec<u16>,
    inv: Vec<u16>,
}

impl Table {
    fn new(elems: &[Perm]) -> Table {
        let n = elems.len();
        let index: HashMap<Perm, u16> = elems.iter().enumerate().map(|(i, x)| (x.clone(), i as u16)).collect();
        let mut mul = vec![0u16; n * n];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                mul[i * n + j] = index[&a.mul(b)];
            }
        }
        let inv = elems.iter().map(|a| index[&a.inverse()]).collect();
        Table {
            elems: elems.to_vec(),
            index,
            mul,
            inv,
        }
    }

    fn len(&self) -> usize {
        self.elems.len()
    }

    fn mul(&self, a: u16, b: u16) -> u16 {
        self.mul[a as usize * self.len() + b as usize]
    }

    fn conj(&self, a: u16, g: u16) -> u16 {
        self.mul(self.mul(self.inv[g as usize], a), g)
    }

    fn pow(&self, a: u16, e: u64) -> u16 {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    /// Element list of the subgroup generated by `gens`.
    fn close(&self, gens: &[u16]) -> (Bits, Vec<u16>) {
        let mut bits = [0u64; WORDS];
        set(&mut bits, 0);
        let mut list = vec![0u16];
        let mut i = 0;
        while i < list.len() {
            for &g in gens {
                let y = self.mul(list[i], g);
                if !has(&bits, y) {
                    set(&mut bits, y);
                    list.push(y);
                }
            }
            i += 1;
        }
        (bits, list)
    }
}

struct Local {
    bits: Bits,
    gens: Vec<u16>,
    elems: Vec<u16>,
}

/// Every subgroup of the `p`-group `s`, trivial group first, ordered by
/// order and then by bitset.
fn subgroups_of_p_group(s: &Group, p: u64, limits: &Limits) -> Result<(Table, Vec<Local>)> {
    let elems = s
        .elements()
        .filter(|_| s.size() <= limits.max_sylow_order)
        .ok_or_else(|| Error::resource("max_sylow_order", limits.max_sylow_order, s.size()))?;
    let table = Table::new(elems);
    let n = table.len() as u16;
    let mut all = vec![Local {
        bits: table.close(&[]).0,
        gens: Vec::new(),
        elems: vec![0],
    }];
    let mut seen: HashMap<Bits, usize> = HashMap::from([(all[0].bits, 0)]);
    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for &h in &layer {
            let mut covered = all[h].bits;
            for x in 1..n {
                if has(&covered, x) || !has(&all[h].bits, table.pow(x, p)) {
                    continue;
                }
                let hb = &all[h];
                if !hb.gens.iter().all(|&y| has(&hb.bits, table.conj(y, x))) {
                    continue;
                }
                let mut gens = hb.gens.clone();
                gens.push(x);
                let (bits, list) = table.close(&gens);
                for (w, b) in covered.iter_mut().zip(bits.iter()) {
                    *w |= b;
                }
                if seen.contains_key(&bits) {
                    continue;
                }
                if all.len() >= limits.max_sylow_subgroups {
                    return Err(Error::resource(
                        "max_sylow_subgroups",
                        limits.max_sylow_subgroups as u64,
                        format!("> {}", all.len()),
                    ));
                }
                seen.insert(bits, all.len());
                next.push(all.len());
                all.push(Local {
                    bits,
                    gens,
                    elems: list,
                });
            }
        }
        next.sort_by_key(|&i| all[i].bits);
        layer = next;
    }
    Ok((table, all))
}

/// One `G`-class of nontrivial `p`-subgroups with its cached attributes.
#[derive(Debug, Clone)]
pub struct PClass {
    /// Member with the least canonical key.
    pub representative: Subgroup,
    /// The whole class, ascending by key.
    pub members: Arc<[Group]>,
    pub normalizer: Group,
    /// `O_p(N_G(P))`.
    pub normalizer_core: Group,
    pub centralizer: Group,
    /// `P̂`.
    pub hat: Group,
    pub flags: ClassFlags,
    /// `N_G(P)` contains a Sylow `p`-subgroup of `G`.
    pub parabolic: bool,
    /// `N_G(P)` has characteristic `p`.
    pub normalizer_characteristic_p: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
pub struct ClassFlags {
    pub elementary_abelian: bool,
    pub radical: bool,
    pub centric: bool,
    /// `P̂ ≠ 1`.
    pub distinguished: bool,
    /// `P` contains a `p`-central element.
    pub tilde: bool,
}

impl PClass {
    pub fn order(&self) -> u64 {
        self.representative.size()
    }
}

/// All classes of nontrivial `p`-subgroups of a group, with `p`-central
/// data.
#[derive(Debug, Clone)]
pub struct PSubgroups {
    group: Group,
    prime: u64,
    pcentral: PCentralData,
    classes: Vec<PClass>,
    class_of: HashMap<Group, usize>,
}

impl PSubgroups {
    pub fn compute(g: &Group, p: u64, limits: &Limits) -> Result<PSubgroups> {
        ensure_prime(p)?;
        let s = sylow_p(g, p, limits)?;
        let pcentral = PCentralData::with_sylow(g, p, s.clone(), limits)?;
        let (table, locals) = subgroups_of_p_group(&s, p, limits)?;
        let degree = g.degree();
        let to_group = |l: &Local| {
            let gens = l.gens.iter().map(|&i| table.elems[i as usize].clone()).collect();
            let mut elems: Vec<Perm> = l.elems.iter().map(|&i| table.elems[i as usize].clone()).collect();
            elems.sort_unstable();
            Group::from_parts(degree, gens, elems)
        };
        let local_of: HashMap<Bits, usize> = locals.iter().enumerate().map(|(i, l)| (l.bits, i)).collect();
        let mut assigned = vec![false; locals.len()];
        let mut raw: Vec<(Group, Arc<[Group]>, Group)> = Vec::new();
        for (i, local) in locals.iter().enumerate().skip(1) {
            if assigned[i] {
                continue;
            }
            if raw.len() >= limits.max_subgroup_classes {
                return Err(Error::resource(
                    "max_subgroup_classes",
                    limits.max_subgroup_classes as u64,
                    format!("> {}", raw.len()),
                ));
            }
            let seed = to_group(local);
            let orbit = orbit_stabilizer(g, seed, |k, x| k.conjugate(x), limits.max_orbit)?;
            for point in &orbit.points {
                let e = point.elements().expect("p-subgroups are small");
                let mut bits = [0u64; WORDS];
                let inside = e.iter().all(|x| match table.index.get(x) {
                    Some(&j) => {
                        set(&mut bits, j);
                        true
                    }
                    None => false,
                });
                if inside {
                    if let Some(&j) = local_of.get(&bits) {
                        assigned[j] = true;
                    }
                }
            }
            let (best, _) = orbit
                .points
                .iter()
                .enumerate()
                .min_by(|a, b| a.1.cmp(b.1))
                .expect("orbit is nonempty");
            let rep = orbit.points[best].clone();
            let normalizer = orbit.stabilizer.conjugate(&orbit.transversal[best]);
            let mut members = orbit.points;
            members.sort();
            raw.push((rep, members.into(), normalizer));
        }
        raw.sort_by(|a, b| (a.0.size(), &a.0).cmp(&(b.0.size(), &b.0)));
        let order = g.order();
        let mut classes = Vec::with_capacity(raw.len());
        let mut class_of = HashMap::new();
        for (rep, members, normalizer) in raw {
            let core = p_core(&normalizer, p, limits)?.into_group();
            let centralizer = centralizer_of_group_in(&normalizer, &rep, limits)?;
            let hat = pcentral.hat(&rep, limits)?;
            let flags = ClassFlags {
                elementary_abelian: is_elementary_abelian(&rep, p),
                radical: core.size() == rep.size(),
                centric: p_part(&centralizer.order(), p) == center_of(&rep, limits)?.order(),
                distinguished: !hat.is_trivial(),
                tilde: pcentral.meets(&rep, limits)?,
            };
            let parabolic = p_part(&normalizer.order(), p) == p_part(&order, p);
            let normalizer_characteristic_p = characteristic_given_core(&normalizer, &core, limits)?;
            for m in members.iter() {
                class_of.insert(m.clone(), classes.len());
            }
            classes.push(PClass {
                representative: Subgroup::unchecked(g, rep),
                members,
                normalizer,
                normalizer_core: core,
                centralizer,
                hat,
                flags,
                parabolic,
                normalizer_characteristic_p,
            });
        }
        Ok(PSubgroups {
            group: g.clone(),
            prime: p,
            pcentral,
            classes,
            class_of,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn pcentral(&self) -> &PCentralData {
        &self.pcentral
    }

    pub fn classes(&self) -> &[PClass] {
        &self.classes
    }

    pub fn representatives(&self) -> Vec<Subgroup> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }

    /// Index of the class containing `h`, if `h` is a nontrivial
    /// `p`-subgroup of the group.
    pub fn class_of(&self, h: &Group) -> Option<usize> {
        self.class_of.get(h).copied()
    }

    pub fn flags_of(&self, h: &Group) -> Option<ClassFlags> {
        self.class_of(h).map(|i| self.classes[i].flags)
    }

    /// Number of nontrivial `p`-subgroups.
    pub fn subgroup_count(&self) -> usize {
        self.class_of.len()
    }

    pub fn classification(&self) -> Classification {
        let local_witnesses: Vec<Subgroup> = self
            .classes
            .iter()
            .filter(|c| !c.normalizer_characteristic_p)
            .map(|c| c.representative.clone())
            .collect();
        let parabolic_witnesses: Vec<Subgroup> = self
            .classes
            .iter()
            .filter(|c| c.parabolic && !c.normalizer_characteristic_p)
            .map(|c| c.representative.clone())
            .collect();
        Classification {
            local: local_witnesses.is_empty(),
            parabolic: parabolic_witnesses.is_empty(),
            local_witnesses,
            parabolic_witnesses,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    #[test]
    fn sylow_subgroup_counts() {
        let lim = Limits::default();
        let d8 = grp(4, "(1,2,3,4);(1,3)");
        let (_, all) = subgroups_of_p_group(&d8, 2, &lim).unwrap();
        assert_eq!(all.len(), 10);
        let c9 = grp(9, "(1,2,3,4,5,6,7,8,9)");
        let (_, all) = subgroups_of_p_group(&c9, 3, &lim).unwrap();
        assert_eq!(all.len(), 3);
        let e8 = grp(6, "(1,2);(3,4);(5,6)");
        let (_, all) = subgroups_of_p_group(&e8, 2, &lim).unwrap();
        assert_eq!(all.len(), 16);
    }

    #[test]
    fn class_examples() {
        let lim = Limits::default();
        let s4 = PSubgroups::compute(&grp(4, "(1,2);(1,2,3,4)"), 2, &lim).unwrap();
        let orders: Vec<u64> = s4.classes().iter().map(|c| c.order()).collect();
        assert_eq!(orders, [2, 2, 4, 4, 4, 8]);
        assert_eq!(s4.subgroup_count(), 6 + 3 + 3 + 1 + 3 + 3);
        let s3 = PSubgroups::compute(&grp(3, "(1,2);(1,2,3)"), 3, &lim).unwrap();
        assert_eq!(s3.classes().len(), 1);
        let c5 = PSubgroups::compute(&grp(5, "(1,2,3,4,5)"), 5, &lim).unwrap();
        assert_eq!(c5.classes().len(), 1);
        for c in s4.classes() {
            assert!(c.members.contains(c.representative.group()));
            assert_eq!(c.members.len() as u64 * c.normalizer.size(), 24);
            assert_eq!(&c.members[0], c.representative.group());
        }
    }

    #[test]
    fn sylow_cap_is_enforced() {
        let lim = Limits {
            max_sylow_order: 4,
            ..Limits::default()
        };
        let r = PSubgroups::compute(&grp(4, "(1,2);(1,2,3,4)"), 2, &lim);
        assert!(matches!(
            r,
            Err(Error::Resource {
                cap: "max_sylow_order",
                ..
            })
        ));
    }
}
