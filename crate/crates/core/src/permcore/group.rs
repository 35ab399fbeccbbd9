use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Deref;
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use rand::Rng;

use super::chain::StabChain;
use super::perm::{parse_generators, Perm};
use crate::error::{Error, Result};

/// Groups of at most this order keep their sorted element list, and their
/// canonical key is that list.
pub const SMALL_GROUP_CAP: u64 = 512;

/// Deterministic identity of a subgroup of `Sym(n)`.
///
/// Small groups are keyed by the sorted one-line images of all elements;
/// larger ones by the images of their canonical generators. A leading tag
/// keeps the two forms apart.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(Arc<[u32]>);

impl CanonicalKey {
    pub fn as_words(&self) -> &[u32] {
        &self.0
    }

    /// Little-endian byte encoding.
    pub fn to_bytes(&self) -> Vec<u8> {
        self.0.iter().flat_map(|w| w.to_le_bytes()).collect()
    }

    pub fn to_hex(&self) -> String {
        self.to_bytes().iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Key({} words)", self.0.len())
    }
}

struct GroupInner {
    degree: usize,
    gens: Vec<Perm>,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Option<Arc<[Perm]>>>,
    key: OnceLock<CanonicalKey>,
}

/// A finite permutation group. Cheap to clone; immutable once built, with
/// write-once caches for the stabilizer chain, elements and key.
#[derive(Clone)]
pub struct Group(Arc<GroupInner>);

impl Group {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::InvalidInput(format!(
                "generator {g} has degree {} but the group has degree {degree}",
                g.degree()
            )));
        }
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        Ok(Group::raw(degree, gens))
    }

    /// Parses `;`-separated cycle notation.
    pub fn parse(degree: usize, generators: &str) -> Result<Group> {
        if degree == 0 {
            return Err(Error::InvalidInput("degree must be positive".into()));
        }
        Group::new(degree, parse_generators(generators, degree)?)
    }

    fn raw(degree: usize, gens: Vec<Perm>) -> Group {
        Group(Arc::new(GroupInner {
            degree,
            gens,
            chain: OnceLock::new(),
            elements: OnceLock::new(),
            key: OnceLock::new(),
        }))
    }

    pub(crate) fn from_chain(chain: StabChain) -> Group {
        let g = Group::raw(chain.degree(), chain.strong_generators().to_vec());
        let _ = g.0.chain.set(chain);
        g
    }

    pub fn trivial(degree: usize) -> Group {
        Group::raw(degree, Vec::new())
    }

    /// Builds a group from a complete, closed element set.
    pub(crate) fn from_closed_elements(degree: usize, mut elems: Vec<Perm>) -> Group {
        elems.sort_unstable();
        elems.dedup();
        let gens = reduce_generators(degree, &elems);
        let g = Group::raw(degree, gens);
        if elems.len() as u64 <= SMALL_GROUP_CAP {
            let _ = g.0.elements.set(Some(elems.into()));
        }
        g
    }

    /// A group with known generators and its sorted element list.
    pub(crate) fn from_parts(degree: usize, gens: Vec<Perm>, elems: Vec<Perm>) -> Group {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
        let g = Group::raw(degree, gens);
        if elems.len() as u64 <= SMALL_GROUP_CAP {
            let _ = g.0.elements.set(Some(elems.into()));
        }
        g
    }

    /// The subgroup generated by `gens`, by closure when it stays small.
    pub fn generated(degree: usize, gens: &[Perm]) -> Group {
        match close_small(degree, gens, SMALL_GROUP_CAP as usize) {
            Some(elems) => Group::from_closed_elements(degree, elems),
            None => Group::raw(degree, gens.iter().filter(|g| !g.is_identity()).cloned().collect()),
        }
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.0.gens
    }

    pub fn chain(&self) -> &StabChain {
        self.0
            .chain
            .get_or_init(|| StabChain::from_generators(self.0.degree, &self.0.gens))
    }

    pub fn order(&self) -> BigUint {
        match self.cached_elements() {
            Some(e) => BigUint::from(e.len()),
            None => self.chain().order().clone(),
        }
    }

    /// The order as `u64`, saturating.
    pub fn size(&self) -> u64 {
        match self.cached_elements() {
            Some(e) => e.len() as u64,
            None => u64::try_from(self.chain().order()).unwrap_or(u64::MAX),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.0.gens.is_empty()
    }

    fn cached_elements(&self) -> Option<&Arc<[Perm]>> {
        self.0.elements.get().and_then(Option::as_ref)
    }

    /// Sorted elements, available for groups of order at most
    /// [`SMALL_GROUP_CAP`].
    pub fn elements(&self) -> Option<&Arc<[Perm]>> {
        self.0
            .elements
            .get_or_init(|| {
                if self.chain().order() > &BigUint::from(SMALL_GROUP_CAP) {
                    return None;
                }
                let mut e = self.chain().elements();
                e.sort_unstable();
                Some(e.into())
            })
            .as_ref()
    }

    /// Sorted elements of a group of order at most `limit`.
    pub fn enumerate(&self, limit: u64) -> Result<Vec<Perm>> {
        if let Some(e) = self.elements() {
            return Ok(e.to_vec());
        }
        let n = self.size();
        if n > limit {
            return Err(Error::resource("max_order", limit, n));
        }
        let mut e = self.chain().elements();
        e.sort_unstable();
        Ok(e)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree() {
            return false;
        }
        match self.cached_elements() {
            Some(e) => e.binary_search(g).is_ok(),
            None if self.is_trivial() => g.is_identity(),
            None => self.chain().contains(g),
        }
    }

    pub fn is_subgroup_of(&self, other: &Group) -> bool {
        self.degree() == other.degree()
            && self.size() <= other.size()
            && other.size().is_multiple_of(self.size().max(1))
            && self.generators().iter().all(|g| other.contains(g))
    }

    /// `self^g = g^-1 self g`.
    pub fn conjugate(&self, g: &Perm) -> Group {
        let gens = self.generators().iter().map(|x| x.conj(g)).collect();
        let out = Group::raw(self.degree(), gens);
        if let Some(e) = self.cached_elements() {
            let mut c: Vec<Perm> = e.iter().map(|x| x.conj(g)).collect();
            c.sort_unstable();
            let _ = out.0.elements.set(Some(c.into()));
        }
        out
    }

    pub fn is_normalized_by(&self, g: &Perm) -> bool {
        self.generators().iter().all(|x| self.contains(&x.conj(g)))
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators();
        gens.iter()
            .enumerate()
            .all(|(i, a)| gens[i + 1..].iter().all(|b| a.commutes_with(b)))
    }

    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        self.chain().random_element(rng)
    }

    pub fn key(&self) -> &CanonicalKey {
        self.0.key.get_or_init(|| {
            let mut words = Vec::new();
            match self.elements() {
                Some(e) => {
                    words.push(0);
                    words.push(e.len() as u32);
                    for x in e.iter() {
                        words.extend_from_slice(x.images());
                    }
                }
                None => {
                    words.push(1);
                    for x in self.chain().canonical_generators() {
                        words.extend_from_slice(x.images());
                    }
                }
            }
            CanonicalKey(words.into())
        })
    }

    pub fn ptr_eq(&self, other: &Group) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

/// Serializes through `Display`; for report fields holding groups.
pub fn serialize_display<T: fmt::Display, S: serde::Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

impl PartialEq for Group {
    fn eq(&self, other: &Self) -> bool {
        self.ptr_eq(other) || (self.degree() == other.degree() && self.key() == other.key())
    }
}

impl Eq for Group {}

impl Hash for Group {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for Group {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Group {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(other.key())
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.generators().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Group(order {}, {self})", self.order())
    }
}

/// Closure of `gens` by breadth-first multiplication, or `None` once it
/// exceeds `cap` elements.
pub(crate) fn close_small(degree: usize, gens: &[Perm], cap: usize) -> Option<Vec<Perm>> {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        i += 1;
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push(y);
            }
        }
    }
    Some(queue)
}

/// A short generating set of a closed, sorted element list.
fn reduce_generators(degree: usize, elems: &[Perm]) -> Vec<Perm> {
    let mut gens: Vec<Perm> = Vec::new();
    let mut span: HashSet<Perm> = HashSet::from([Perm::identity(degree)]);
    // Larger element orders first gives shorter lists; ties broken by the
    // element order itself so the result is deterministic.
    let mut order: Vec<&Perm> = elems.iter().collect();
    order.sort_by_key(|x| std::cmp::Reverse(x.order()));
    for x in order {
        if span.len() == elems.len() {
            break;
        }
        if span.contains(x) {
            continue;
        }
        gens.push(x.clone());
        span = close_small(degree, &gens, elems.len())
            .expect("element list is closed")
            .into_iter()
            .collect();
    }
    gens
}

/// A subgroup of a fixed ambient group.
#[derive(Clone)]
pub struct Subgroup {
    ambient: Group,
    group: Group,
}

impl Subgroup {
    /// Checks that every generator lies in the ambient group.
    pub fn new(ambient: &Group, group: Group) -> Result<Subgroup> {
        if group.degree() != ambient.degree() {
            return Err(Error::Domain("degree differs from the ambient group".into()));
        }
        if let Some(g) = group.generators().iter().find(|g| !ambient.contains(g)) {
            return Err(Error::Domain(format!("{g} is not in the ambient group")));
        }
        Ok(Subgroup {
            ambient: ambient.clone(),
            group,
        })
    }

    pub fn from_generators(ambient: &Group, gens: Vec<Perm>) -> Result<Subgroup> {
        if let Some(g) = gens.iter().find(|g| g.degree() != ambient.degree()) {
            return Err(Error::Domain(format!("{g} has the wrong degree")));
        }
        Subgroup::new(ambient, Group::generated(ambient.degree(), &gens))
    }

    pub(crate) fn unchecked(ambient: &Group, group: Group) -> Subgroup {
        Subgroup {
            ambient: ambient.clone(),
            group,
        }
    }

    /// The whole ambient group as a subgroup of itself.
    pub fn whole(ambient: &Group) -> Subgroup {
        Subgroup::unchecked(ambient, ambient.clone())
    }

    pub fn trivial(ambient: &Group) -> Subgroup {
        Subgroup::unchecked(ambient, Group::trivial(ambient.degree()))
    }

    pub fn ambient(&self) -> &Group {
        &self.ambient
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn into_group(self) -> Group {
        self.group
    }

    pub fn same_ambient(&self, other: &Subgroup) -> bool {
        self.ambient == other.ambient
    }

    pub fn conjugate(&self, g: &Perm) -> Subgroup {
        Subgroup::unchecked(&self.ambient, self.group.conjugate(g))
    }

    /// Reinterprets the subgroup inside another ambient group containing it.
    pub fn rebase(&self, ambient: &Group) -> Result<Subgroup> {
        Subgroup::new(ambient, self.group.clone())
    }
}

impl Deref for Subgroup {
    type Target = Group;
    fn deref(&self) -> &Group {
        &self.group
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group == other.group
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.group.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.group.cmp(&other.group)
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.group.fmt(f)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.group.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_group_examples() {
        assert_eq!(Group::parse(4, "(1,2);(1,2,3,4)").unwrap().size(), 24);
        assert_eq!(Group::parse(1, "").unwrap().size(), 1);
        assert_eq!(Group::parse(5, "(1,2);(1,2,3,4,5)").unwrap().size(), 120);
        assert!(matches!(Group::parse(0, ""), Err(Error::InvalidInput(_))));
        assert!(matches!(Group::parse(3, "(1,2"), Err(Error::Parse(_))));
    }

    #[test]
    fn trivial_group_is_legal() {
        let t = Group::trivial(3);
        assert_eq!(t.size(), 1);
        assert!(t.contains(&Perm::identity(3)));
        assert_eq!(t.elements().unwrap().len(), 1);
        assert!(t.is_subgroup_of(&Group::parse(3, "(1,2,3)").unwrap()));
    }

    #[test]
    fn key_equality_is_mutual_membership() {
        let a = Group::parse(4, "(1,2,3,4);(1,3)").unwrap();
        let b = Group::parse(4, "(1,3);(2,4);(1,2)(3,4)").unwrap();
        assert_eq!(a, b);
        let c = Group::parse(4, "(1,2,3,4);(1,2)").unwrap();
        assert_ne!(a, c);
        // Large groups use canonical generators.
        let s6a = Group::parse(6, "(1,2);(1,2,3,4,5,6)").unwrap();
        let s6b = Group::parse(6, "(5,6);(1,2,3,4,5);(1,6)").unwrap();
        assert_eq!(s6a, s6b);
        assert_eq!(s6a.key().as_words()[0], 1);
    }

    #[test]
    fn subgroup_membership_checked() {
        let s4 = Group::parse(4, "(1,2);(1,2,3,4)").unwrap();
        let a4 = Group::parse(4, "(1,2,3);(2,3,4)").unwrap();
        assert!(Subgroup::from_generators(&a4, vec![Perm::parse("(1,2)", 4).unwrap()]).is_err());
        let v = Subgroup::from_generators(&s4, vec![Perm::parse("(1,2)(3,4)", 4).unwrap()]).unwrap();
        assert_eq!(v.size(), 2);
    }
}
