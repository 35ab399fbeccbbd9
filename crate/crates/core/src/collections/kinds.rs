use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::psubgroups::{ClassFlags, PSubgroups};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::{Group, Subgroup};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CollectionKind {
    S,
    A,
    B,
    Ce,
    Bcen,
    HatS,
    HatA,
    HatB,
    TildeS,
    TildeB,
    FrakS,
}

impl CollectionKind {
    pub const ALL: [CollectionKind; 11] = [
        CollectionKind::S,
        CollectionKind::A,
        CollectionKind::B,
        CollectionKind::Ce,
        CollectionKind::Bcen,
        CollectionKind::HatS,
        CollectionKind::HatA,
        CollectionKind::HatB,
        CollectionKind::TildeS,
        CollectionKind::TildeB,
        CollectionKind::FrakS,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CollectionKind::S => "S",
            CollectionKind::A => "A",
            CollectionKind::B => "B",
            CollectionKind::Ce => "Ce",
            CollectionKind::Bcen => "Bcen",
            CollectionKind::HatS => "hatS",
            CollectionKind::HatA => "hatA",
            CollectionKind::HatB => "hatB",
            CollectionKind::TildeS => "tildeS",
            CollectionKind::TildeB => "tildeB",
            CollectionKind::FrakS => "frakS",
        }
    }

    /// The predicate selecting this kind among all nontrivial `p`-subgroups.
    /// `None` for `frakS`, which depends on a subgroup of order `p`.
    pub fn admits(self, f: &ClassFlags) -> Option<bool> {
        Some(match self {
            CollectionKind::S => true,
            CollectionKind::A => f.elementary_abelian,
            CollectionKind::B => f.radical,
            CollectionKind::Ce => f.centric,
            CollectionKind::Bcen => f.radical && f.centric,
            CollectionKind::HatS => f.distinguished,
            CollectionKind::HatA => f.elementary_abelian && f.distinguished,
            CollectionKind::HatB => f.radical && f.distinguished,
            CollectionKind::TildeS => f.tilde,
            CollectionKind::TildeB => f.radical && f.tilde,
            CollectionKind::FrakS => return None,
        })
    }

    /// Closed under passage to `p`-overgroups.
    pub fn overgroup_closed(self) -> bool {
        matches!(self, CollectionKind::S | CollectionKind::Ce | CollectionKind::TildeS)
    }
}

impl fmt::Display for CollectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CollectionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CollectionKind::ALL.into_iter().find(|k| k.name() == s).ok_or_else(|| {
            let names: Vec<&str> = CollectionKind::ALL.iter().map(|k| k.name()).collect();
            Error::Usage(format!(
                "unknown collection kind `{s}`; expected one of {}",
                names.join(", ")
            ))
        })
    }
}

/// One orbit of a collection under its acting group.
#[derive(Debug, Clone)]
pub struct CollectionClass {
    pub representative: Subgroup,
    /// The orbit, ascending by key.
    pub members: Arc<[Group]>,
    pub flags: ClassFlags,
}

/// A conjugation-closed set of nontrivial `p`-subgroups.
#[derive(Debug, Clone)]
pub struct Collection {
    kind: CollectionKind,
    group: Group,
    prime: u64,
    classes: Vec<CollectionClass>,
}

impl Collection {
    /// A collection from explicit classes; used for collections that are not
    /// unions of classes of the whole group.
    pub fn from_classes(kind: CollectionKind, group: &Group, prime: u64, mut classes: Vec<CollectionClass>) -> Self {
        classes.sort_by(|a, b| {
            (a.representative.size(), &a.representative).cmp(&(b.representative.size(), &b.representative))
        });
        Collection {
            kind,
            group: group.clone(),
            prime,
            classes,
        }
    }

    pub fn from_psubgroups(data: &PSubgroups, kind: CollectionKind) -> Result<Self> {
        if kind == CollectionKind::FrakS {
            return Err(frak_s_usage());
        }
        let classes = data
            .classes()
            .iter()
            .filter(|c| kind.admits(&c.flags) == Some(true))
            .map(|c| CollectionClass {
                representative: c.representative.clone(),
                members: c.members.clone(),
                flags: c.flags,
            })
            .collect();
        Ok(Collection {
            kind,
            group: data.group().clone(),
            prime: data.prime(),
            classes,
        })
    }

    pub fn kind(&self) -> CollectionKind {
        self.kind
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn classes(&self) -> &[CollectionClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn representatives(&self) -> Vec<Subgroup> {
        self.classes.iter().map(|c| c.representative.clone()).collect()
    }

    /// Every member, class by class.
    pub fn elements(&self) -> impl Iterator<Item = &Group> {
        self.classes.iter().flat_map(|c| c.members.iter())
    }

    pub fn element_count(&self) -> usize {
        self.classes.iter().map(|c| c.members.len()).sum()
    }

    pub fn member_set(&self) -> HashSet<Group> {
        self.elements().cloned().collect()
    }

    /// Whether every class of `self` is a class of `other`.
    pub fn is_subcollection_of(&self, other: &Collection) -> bool {
        let theirs = other.member_set();
        self.elements().all(|m| theirs.contains(m))
    }

    pub fn same_members(&self, other: &Collection) -> bool {
        self.element_count() == other.element_count() && self.is_subcollection_of(other)
    }
}

fn frak_s_usage() -> Error {
    Error::Usage("frakS depends on a subgroup of order p; build it with posetlab::build_frak_s".into())
}

/// Enumerates the classes of nontrivial `p`-subgroups of `g`.
pub fn enumerate_p_subgroups(g: &Group, p: u64, limits: &Limits) -> Result<Vec<Subgroup>> {
    Ok(PSubgroups::compute(g, p, limits)?.representatives())
}

pub fn build_collection(g: &Group, p: u64, kind: CollectionKind, limits: &Limits) -> Result<Collection> {
    if kind == CollectionKind::FrakS {
        return Err(frak_s_usage());
    }
    Collection::from_psubgroups(&PSubgroups::compute(g, p, limits)?, kind)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    #[test]
    fn kind_names_round_trip() {
        for k in CollectionKind::ALL {
            assert_eq!(k.name().parse::<CollectionKind>().unwrap(), k);
        }
        assert!(matches!("hatC".parse::<CollectionKind>(), Err(Error::Usage(_))));
    }

    #[test]
    fn sym4_examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let data = PSubgroups::compute(&s4, 2, &lim).unwrap();
        let b = Collection::from_psubgroups(&data, CollectionKind::B).unwrap();
        let reps: Vec<u64> = b.classes().iter().map(|c| c.representative.size()).collect();
        assert_eq!(reps, [4, 8]);
        assert_eq!(b.classes()[0].representative.group(), &grp(4, "(1,2)(3,4);(1,3)(2,4)"));
        let hb = Collection::from_psubgroups(&data, CollectionKind::HatB).unwrap();
        assert!(hb.same_members(&b));
        assert!(matches!(
            build_collection(&s4, 2, CollectionKind::FrakS, &lim),
            Err(Error::Usage(_))
        ));
    }

    #[test]
    fn sym5_radical_transposition_is_not_distinguished() {
        let lim = Limits::default();
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let data = PSubgroups::compute(&s5, 2, &lim).unwrap();
        let t = grp(5, "(1,2)");
        let b = Collection::from_psubgroups(&data, CollectionKind::B).unwrap();
        let hb = Collection::from_psubgroups(&data, CollectionKind::HatB).unwrap();
        assert!(b.member_set().contains(&t));
        assert!(!hb.member_set().contains(&t));
        assert_eq!(hb.element_count(), 20);
    }
}
