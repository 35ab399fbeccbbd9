use std::collections::HashMap;
use std::fmt::Write as _;

use crate::collections::Collection;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::{Group, Perm};

/// A finite poset of subgroups under inclusion, with a group acting by
/// conjugation.
///
/// Elements are sorted by order and then by canonical key, so a strict
/// inclusion `i < j` always has `i` before `j`.
#[derive(Debug, Clone)]
pub struct GPoset {
    acting: Group,
    elements: Vec<Group>,
    index: HashMap<Group, u32>,
    up: Vec<Vec<u32>>,
    down: Vec<Vec<u32>>,
}

impl GPoset {
    /// Builds the poset on `elements`, which must be closed under
    /// conjugation by `acting`.
    pub fn new(elements: impl IntoIterator<Item = Group>, acting: &Group, limits: &Limits) -> Result<GPoset> {
        let mut elements: Vec<Group> = elements.into_iter().collect();
        elements.sort_by(|a, b| (a.size(), a).cmp(&(b.size(), b)));
        elements.dedup();
        if elements.len() > limits.max_poset_elements {
            return Err(Error::resource(
                "max_poset_elements",
                limits.max_poset_elements as u64,
                elements.len(),
            ));
        }
        let index: HashMap<Group, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e.clone(), i as u32))
            .collect();
        for x in acting.generators() {
            if let Some(e) = elements.iter().find(|e| !index.contains_key(&e.conjugate(x))) {
                return Err(Error::Domain(format!(
                    "element set is not invariant: {e} is moved outside by {x}"
                )));
            }
        }
        let (up, down) = inclusions(&elements);
        Ok(GPoset {
            acting: acting.clone(),
            elements,
            index,
            up,
            down,
        })
    }

    pub fn empty(acting: &Group) -> GPoset {
        GPoset {
            acting: acting.clone(),
            elements: Vec::new(),
            index: HashMap::new(),
            up: Vec::new(),
            down: Vec::new(),
        }
    }

    pub fn acting(&self) -> &Group {
        &self.acting
    }

    pub fn elements(&self) -> &[Group] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, h: &Group) -> Option<usize> {
        self.index.get(h).map(|&i| i as usize)
    }

    pub fn contains(&self, h: &Group) -> bool {
        self.index.contains_key(h)
    }

    /// Indices strictly above `i`, ascending.
    pub fn above(&self, i: usize) -> &[u32] {
        &self.up[i]
    }

    /// Indices strictly below `i`, ascending.
    pub fn below(&self, i: usize) -> &[u32] {
        &self.down[i]
    }

    pub fn le(&self, i: usize, j: usize) -> bool {
        i == j || self.up[i].binary_search(&(j as u32)).is_ok()
    }

    /// Strict comparabilities `(i, j)` with `i < j`, ascending.
    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.up
            .iter()
            .enumerate()
            .flat_map(|(i, js)| js.iter().map(move |&j| (i, j as usize)))
    }

    pub fn relation_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    /// The permutation of element indices induced by conjugation by `x`.
    pub fn action_of(&self, x: &Perm) -> Result<Vec<u32>> {
        self.elements
            .iter()
            .map(|e| {
                self.index
                    .get(&e.conjugate(x))
                    .copied()
                    .ok_or_else(|| Error::Domain(format!("conjugation by {x} does not preserve the element set")))
            })
            .collect()
    }

    /// Orbits of the acting group, each ascending, ordered by least member.
    pub fn orbits(&self) -> Result<Vec<Vec<usize>>> {
        let actions: Vec<Vec<u32>> = self
            .acting
            .generators()
            .iter()
            .map(|x| self.action_of(x))
            .collect::<Result<_>>()?;
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orbit = vec![start];
            let mut k = 0;
            while k < orbit.len() {
                for a in &actions {
                    let j = a[orbit[k]] as usize;
                    if !seen[j] {
                        seen[j] = true;
                        orbit.push(j);
                    }
                }
                k += 1;
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        Ok(out)
    }

    /// The subposet on the listed elements, acted on by `acting`.
    pub fn restrict(&self, keep: impl Fn(&Group) -> bool, acting: &Group, limits: &Limits) -> Result<GPoset> {
        GPoset::new(self.elements.iter().filter(|e| keep(e)).cloned(), acting, limits)
    }

    /// `X^P`: elements normalized by `P`. The caller supplies an acting group
    /// preserving the result, typically a subgroup of `N(P)`.
    pub fn fixed_subposet(&self, p: &Group, acting: &Group, limits: &Limits) -> Result<GPoset> {
        self.restrict(|q| p.generators().iter().all(|x| q.is_normalized_by(x)), acting, limits)
    }

    /// The literal filter by a conjunction of bounds.
    pub fn truncate(&self, bounds: &[Bound], acting: &Group, limits: &Limits) -> Result<Truncation> {
        let contradictory = contradictory(bounds);
        if contradictory {
            return Ok(Truncation {
                poset: GPoset::empty(acting),
                contradictory,
            });
        }
        let poset = self.restrict(|q| bounds.iter().all(|b| b.admits(q)), acting, limits)?;
        Ok(Truncation { poset, contradictory })
    }

    /// Line-oriented dump: a header, one `e` line per element (index,
    /// canonical key in hex, generators), then one `r` line per strict
    /// comparability.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "poset {} {}", self.len(), self.relation_count());
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(out, "e {i} {} {}", e.key().to_hex(), e);
        }
        for (i, j) in self.relations() {
            let _ = writeln!(out, "r {i} {j}");
        }
        out
    }
}

/// Strict inclusions. Candidates for overgroups of `e` are the members
/// containing its first generator.
fn inclusions(elements: &[Group]) -> (Vec<Vec<u32>>, Vec<Vec<u32>>) {
    let n = elements.len();
    let mut containing: HashMap<&Perm, Vec<u32>> = HashMap::new();
    for (j, e) in elements.iter().enumerate() {
        // Large members are matched by membership tests below.
        if let Some(list) = e.elements() {
            for x in list.iter().skip(1) {
                containing.entry(x).or_default().push(j as u32);
            }
        }
    }
    let large: Vec<u32> = (0..n as u32)
        .filter(|&j| elements[j as usize].elements().is_none())
        .collect();
    let mut up = vec![Vec::new(); n];
    let mut down = vec![Vec::new(); n];
    for (i, e) in elements.iter().enumerate() {
        let size = e.size();
        let mut cand: Vec<u32> = match e.generators().first() {
            Some(g) => containing.get(g).cloned().unwrap_or_default(),
            None => (0..n as u32).collect(),
        };
        cand.extend(large.iter().copied());
        cand.sort_unstable();
        cand.dedup();
        for j in cand {
            let f = &elements[j as usize];
            if j as usize != i && f.size() > size && f.size().is_multiple_of(size.max(1)) && e.is_subgroup_of(f) {
                up[i].push(j);
                down[j as usize].push(i as u32);
            }
        }
    }
    for d in &mut down {
        d.sort_unstable();
    }
    (up, down)
}

/// One conjunct of a truncation.
#[derive(Debug, Clone)]
pub enum Bound {
    /// `> P`
    Above(Group),
    /// `≥ P`
    AtLeast(Group),
    /// `< P`
    Below(Group),
    /// `≤ H`
    AtMost(Group),
}

impl Bound {
    fn admits(&self, q: &Group) -> bool {
        match self {
            Bound::Above(p) => p.size() < q.size() && p.is_subgroup_of(q),
            Bound::AtLeast(p) => p.is_subgroup_of(q),
            Bound::Below(p) => q.size() < p.size() && q.is_subgroup_of(p),
            Bound::AtMost(h) => q.is_subgroup_of(h),
        }
    }
}

/// A lower bound not below an upper bound, or equal bounds with one strict.
fn contradictory(bounds: &[Bound]) -> bool {
    for lo in bounds {
        let (l, lstrict) = match lo {
            Bound::Above(p) => (p, true),
            Bound::AtLeast(p) => (p, false),
            _ => continue,
        };
        for hi in bounds {
            let (h, hstrict) = match hi {
                Bound::Below(p) => (p, true),
                Bound::AtMost(p) => (p, false),
                _ => continue,
            };
            if !l.is_subgroup_of(h) || ((lstrict || hstrict) && l == h) {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone)]
pub struct Truncation {
    pub poset: GPoset,
    /// The bounds admit no subgroup at all.
    pub contradictory: bool,
}

/// The poset of all members of `collection`, acted on by `acting`.
pub fn build_poset(collection: &Collection, acting: &Group, limits: &Limits) -> Result<GPoset> {
    let count = collection.element_count();
    if count > limits.max_poset_elements {
        return Err(Error::resource(
            "max_poset_elements",
            limits.max_poset_elements as u64,
            count,
        ));
    }
    GPoset::new(collection.elements().cloned(), acting, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collections::{CollectionKind, PSubgroups};

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    fn hat_b(g: &Group) -> GPoset {
        let lim = Limits::default();
        let data = PSubgroups::compute(g, 2, &lim).unwrap();
        let c = Collection::from_psubgroups(&data, CollectionKind::HatB).unwrap();
        build_poset(&c, g, &lim).unwrap()
    }

    #[test]
    fn build_examples() {
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let x = hat_b(&s4);
        assert_eq!((x.len(), x.relation_count()), (4, 3));
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let x = hat_b(&s5);
        assert_eq!((x.len(), x.relation_count()), (20, 15));
        let single = GPoset::new([s4.clone()], &s4, &Limits::default()).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn fixed_examples() {
        let lim = Limits::default();
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let x = hat_b(&s5);
        let t = grp(5, "(1,2)");
        let f = x.fixed_subposet(&t, &t, &lim).unwrap();
        assert_eq!((f.len(), f.relation_count()), (6, 3));
        let all = x.fixed_subposet(&Group::trivial(5), &s5, &lim).unwrap();
        assert_eq!(all.len(), x.len());
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let y = hat_b(&s4);
        let z = grp(4, "(1,3)(2,4)");
        let f = y.fixed_subposet(&z, &z, &lim).unwrap();
        assert!(f.contains(&grp(4, "(1,2)(3,4);(1,3)(2,4)")));
        assert!(f.contains(&grp(4, "(1,2,3,4);(1,3)")));
    }

    #[test]
    fn truncate_examples() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let data = PSubgroups::compute(&s4, 2, &lim).unwrap();
        let s = build_poset(
            &Collection::from_psubgroups(&data, CollectionKind::S).unwrap(),
            &s4,
            &lim,
        )
        .unwrap();
        let v = grp(4, "(1,2)(3,4);(1,3)(2,4)");
        let t = s.truncate(&[Bound::Above(v.clone())], &s4, &lim).unwrap();
        assert!(!t.contradictory);
        assert_eq!((t.poset.len(), t.poset.relation_count()), (3, 0));
        let all = s.truncate(&[Bound::AtMost(s4.clone())], &s4, &lim).unwrap();
        assert_eq!(all.poset.len(), s.len());
        let bad = s
            .truncate(&[Bound::Above(v.clone()), Bound::AtMost(v)], &s4, &lim)
            .unwrap();
        assert!(bad.contradictory && bad.poset.is_empty());
    }

    #[test]
    fn invariance_is_checked() {
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let r = GPoset::new([grp(4, "(1,2)")], &s4, &Limits::default());
        assert!(matches!(r, Err(Error::Domain(_))));
    }

    #[test]
    fn dump_lists_elements_then_relations() {
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let text = hat_b(&s4).to_text();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "poset 4 3");
        assert_eq!(lines.iter().filter(|l| l.starts_with("e ")).count(), 4);
        assert_eq!(lines.iter().filter(|l| l.starts_with("r ")).count(), 3);
    }
}
