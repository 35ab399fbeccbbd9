use std::collections::HashMap;
use std::fmt;

use super::group::Group;
use super::perm::Perm;
use crate::error::Result;
use crate::limits::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Lexicographically least element of the class.
    pub representative: Perm,
    pub size: u64,
    pub centralizer_order: u64,
    pub element_order: u64,
}

impl ConjugacyClass {
    /// Cycle type without fixed points, e.g. `2^2` or `3·2`; `1` for the
    /// identity.
    pub fn label(&self) -> String {
        cycle_label(&self.representative)
    }
}

pub fn cycle_label(x: &Perm) -> String {
    let t: Vec<usize> = x.cycle_type().into_iter().filter(|&l| l > 1).collect();
    if t.is_empty() {
        return "1".into();
    }
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < t.len() {
        let mut j = i;
        while j < t.len() && t[j] == t[i] {
            j += 1;
        }
        parts.push(if j - i == 1 {
            t[i].to_string()
        } else {
            format!("{}^{}", t[i], j - i)
        });
        i = j;
    }
    parts.join("·")
}

/// Conjugacy classes ordered by element order, then representative.
pub struct ConjugacyClassTable {
    group: Group,
    classes: Vec<ConjugacyClass>,
    class_of: HashMap<Perm, u32>,
}

impl ConjugacyClassTable {
    pub fn compute(group: &Group, limits: &Limits) -> Result<Self> {
        let order = limits.check_order(&group.order())?;
        let elems = group.enumerate(order)?;
        let mut class_of: HashMap<Perm, u32> = HashMap::with_capacity(elems.len());
        let mut raw: Vec<(Perm, Vec<Perm>)> = Vec::new();
        for x in &elems {
            if class_of.contains_key(x) {
                continue;
            }
            let id = raw.len() as u32;
            let mut members = vec![x.clone()];
            class_of.insert(x.clone(), id);
            let mut i = 0;
            while i < members.len() {
                for g in group.generators() {
                    let y = members[i].conj(g);
                    if !class_of.contains_key(&y) {
                        class_of.insert(y.clone(), id);
                        members.push(y);
                    }
                }
                i += 1;
            }
            raw.push((x.clone(), members));
        }
        let mut idx: Vec<usize> = (0..raw.len()).collect();
        idx.sort_by(|&a, &b| (raw[a].0.order(), &raw[a].0).cmp(&(raw[b].0.order(), &raw[b].0)));
        let mut remap = vec![0u32; raw.len()];
        let mut classes = Vec::with_capacity(raw.len());
        for (new, &old) in idx.iter().enumerate() {
            remap[old] = new as u32;
            let (rep, members) = &raw[old];
            let size = members.len() as u64;
            classes.push(ConjugacyClass {
                representative: rep.clone(),
                size,
                centralizer_order: order / size,
                element_order: rep.order(),
            });
        }
        for v in class_of.values_mut() {
            *v = remap[*v as usize];
        }
        Ok(ConjugacyClassTable {
            group: group.clone(),
            classes,
            class_of,
        })
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn class_of(&self, x: &Perm) -> Option<usize> {
        self.class_of.get(x).map(|&i| i as usize)
    }

    /// Index of the first class with the given label.
    pub fn find_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label() == label)
    }
}

impl fmt::Debug for ConjugacyClassTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.classes.iter().map(|c| (c.label(), c.size)))
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn sym4_classes() {
        let s4 = Group::parse(4, "(1,2);(1,2,3,4)").unwrap();
        let t = ConjugacyClassTable::compute(&s4, &Limits::default()).unwrap();
        let mut sizes: Vec<u64> = t.classes().iter().map(|c| c.size).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
        for c in t.classes() {
            assert_eq!(c.size * c.centralizer_order, 24);
        }
        assert_eq!(t.classes()[0].label(), "1");
    }

    #[test]
    fn trivial_and_sym5() {
        let t = ConjugacyClassTable::compute(&Group::trivial(2), &Limits::default()).unwrap();
        assert_eq!(t.len(), 1);
        let s5 = Group::parse(5, "(1,2);(1,2,3,4,5)").unwrap();
        let t = ConjugacyClassTable::compute(&s5, &Limits::default()).unwrap();
        assert_eq!(t.len(), 7);
        let labels: Vec<String> = t.classes().iter().map(|c| c.label()).collect();
        assert_eq!(labels, ["1", "2", "2^2", "3", "4", "5", "3·2"]);
        assert_eq!(t.class_of(&Perm::parse("(2,5)", 5).unwrap()), Some(1));
    }

    #[test]
    fn cap_is_named() {
        let s6 = Group::parse(6, "(1,2);(1,2,3,4,5,6)").unwrap();
        let lim = Limits {
            max_order: 100,
            ..Limits::default()
        };
        match ConjugacyClassTable::compute(&s6, &lim) {
            Err(Error::Resource { cap, .. }) => assert_eq!(cap, "max_order"),
            other => panic!("expected resource error, got {:?}", other.map(|t| t.len())),
        }
    }
}
