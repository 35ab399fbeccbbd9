//! Two independent computations of the reduced Lefschetz class function:
//! reduced Euler characteristics of fixed subposets, and an alternating sum
//! of permutation characters over orbits of chains.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use super::ClassFunction;
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::search::normalizer_in;
use crate::permcore::{ConjugacyClassTable, Group, Perm};
use crate::posetlab::GPoset;

/// `χ̃` of the nerve, from `w(x) = 1 - Σ_{y<x} w(y)` without listing chains.
pub fn poset_reduced_euler(x: &GPoset) -> i64 {
    let mut w = vec![0i64; x.len()];
    for i in 0..x.len() {
        w[i] = 1 - x.below(i).iter().map(|&j| w[j as usize]).sum::<i64>();
    }
    w.iter().sum::<i64>() - 1
}

/// `g ↦ χ̃(|X^⟨g⟩|)`.
pub fn lefschetz_fixed_point(table: &Arc<ConjugacyClassTable>, x: &GPoset, limits: &Limits) -> Result<ClassFunction> {
    let g = table.group();
    let values = table
        .classes()
        .iter()
        .map(|c| {
            let cyc = Group::generated(g.degree(), std::slice::from_ref(&c.representative));
            Ok(poset_reduced_euler(&x.fixed_subposet(&cyc, &cyc, limits)?))
        })
        .collect::<Result<_>>()?;
    ClassFunction::new(table, values)
}

/// Orbits of `h` on the indices in `within`, which `h` must preserve.
/// Each orbit is listed from its least index.
fn orbits_on(x: &GPoset, h: &Group, within: &[u32]) -> Result<Vec<usize>> {
    let actions: Vec<Vec<u32>> = h.generators().iter().map(|g| x.action_of(g)).collect::<Result<_>>()?;
    let mut seen: HashSet<u32> = HashSet::new();
    let mut reps = Vec::new();
    for &s in within {
        if !seen.insert(s) {
            continue;
        }
        reps.push(s as usize);
        let mut queue = VecDeque::from([s]);
        while let Some(a) = queue.pop_front() {
            for act in &actions {
                let b = act[a as usize];
                if seen.insert(b) {
                    queue.push_back(b);
                }
            }
        }
    }
    Ok(reps)
}

/// Fixed-coset counts of each class representative on `K\G`.
fn permutation_character(table: &ConjugacyClassTable, k: &Group, limits: &Limits) -> Result<Vec<i64>> {
    let g = table.group();
    let chain = k.chain();
    let mut cosets = vec![chain.coset_min(&Perm::identity(g.degree()))];
    let mut seen: HashSet<Perm> = HashSet::from([cosets[0].clone()]);
    let mut i = 0;
    while i < cosets.len() {
        for x in g.generators() {
            let y = chain.coset_min(&cosets[i].mul(x));
            if seen.insert(y.clone()) {
                if cosets.len() >= limits.max_cosets {
                    return Err(Error::resource(
                        "max_cosets",
                        limits.max_cosets as u64,
                        format!("> {}", cosets.len()),
                    ));
                }
                cosets.push(y);
            }
        }
        i += 1;
    }
    Ok(table
        .classes()
        .iter()
        .map(|c| {
            cosets
                .iter()
                .filter(|r| chain.coset_min(&r.mul(&c.representative)) == **r)
                .count() as i64
        })
        .collect())
}

/// `Σ_σ (-1)^{dim σ} Ind_{G_σ}^G 1 - 1`, over `G`-orbits of chains `σ`.
pub fn lefschetz_induced(table: &Arc<ConjugacyClassTable>, x: &GPoset, limits: &Limits) -> Result<ClassFunction> {
    let g = table.group();
    let mut values = vec![-1i64; table.len()];
    let mut cache: HashMap<Group, Vec<i64>> = HashMap::new();
    let all: Vec<u32> = (0..x.len() as u32).collect();
    // (top of chain, stabilizer, dimension)
    let mut stack: Vec<(usize, Group, usize)> = Vec::new();
    for r in orbits_on(x, g, &all)? {
        stack.push((r, normalizer_in(g, &x.elements()[r], limits)?, 0));
    }
    let mut orbits = 0usize;
    while let Some((top, stab, dim)) = stack.pop() {
        orbits += 1;
        if orbits > limits.max_simplices {
            return Err(Error::resource(
                "max_simplices",
                limits.max_simplices as u64,
                format!("> {}", orbits - 1),
            ));
        }
        if !cache.contains_key(&stab) {
            let pc = permutation_character(table, &stab, limits)?;
            cache.insert(stab.clone(), pc);
        }
        let sign = if dim % 2 == 0 { 1 } else { -1 };
        for (v, c) in values.iter_mut().zip(&cache[&stab]) {
            *v += sign * c;
        }
        for s in orbits_on(x, &stab, x.above(top))? {
            let next = normalizer_in(&stab, &x.elements()[s], limits)?;
            stack.push((s, next, dim + 1));
        }
    }
    ClassFunction::new(table, values)
}

#[derive(Debug, Clone)]
pub struct CrossValidation {
    pub fixed_point: ClassFunction,
    pub induced: ClassFunction,
    /// The first class where the routes differ.
    pub mismatch: Option<String>,
}

impl CrossValidation {
    pub fn agree(&self) -> bool {
        self.mismatch.is_none()
    }
}

pub fn cross_validate(table: &Arc<ConjugacyClassTable>, x: &GPoset, limits: &Limits) -> Result<CrossValidation> {
    let fixed_point = lefschetz_fixed_point(table, x, limits)?;
    let induced = lefschetz_induced(table, x, limits)?;
    let mismatch = (0..table.len())
        .find(|&i| fixed_point.value(i) != induced.value(i))
        .map(|i| {
            format!(
                "class {}: fixed-point {} vs induced {}",
                table.classes()[i].label(),
                fixed_point.value(i),
                induced.value(i)
            )
        });
    Ok(CrossValidation {
        fixed_point,
        induced,
        mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collections::{build_collection, CollectionKind};
    use crate::posetlab::{build_poset, order_complex};

    fn setup(n: usize, gens: &str, kind: CollectionKind) -> (Arc<ConjugacyClassTable>, GPoset) {
        let lim = Limits::default();
        let g = Group::parse(n, gens).unwrap();
        let c = build_collection(&g, 2, kind, &lim).unwrap();
        let x = build_poset(&c, &g, &lim).unwrap();
        (Arc::new(ConjugacyClassTable::compute(&g, &lim).unwrap()), x)
    }

    #[test]
    fn sym5_hat_b() {
        let lim = Limits::default();
        let (t, x) = setup(5, "(1,2);(1,2,3,4,5)", CollectionKind::HatB);
        let cv = cross_validate(&t, &x, &lim).unwrap();
        assert!(cv.agree(), "{:?}", cv.mismatch);
        for (label, v) in [
            ("1", 4),
            ("2", 2),
            ("2^2", 0),
            ("3", 1),
            ("3·2", -1),
            ("4", 0),
            ("5", -1),
        ] {
            assert_eq!(cv.fixed_point.value_at(label), Some(v), "class {label}");
        }
        assert_eq!(
            poset_reduced_euler(&x),
            order_complex(&x, &lim).unwrap().reduced_euler()
        );
    }

    #[test]
    fn sym4_hat_b_vanishes() {
        let lim = Limits::default();
        let (t, x) = setup(4, "(1,2);(1,2,3,4)", CollectionKind::HatB);
        let cv = cross_validate(&t, &x, &lim).unwrap();
        assert!(cv.agree());
        assert!(cv.induced.is_zero());
    }

    #[test]
    fn empty_poset_is_minus_one() {
        let lim = Limits::default();
        let g = Group::trivial(1);
        let t = Arc::new(ConjugacyClassTable::compute(&g, &lim).unwrap());
        let x = GPoset::empty(&g);
        let cv = cross_validate(&t, &x, &lim).unwrap();
        assert_eq!(cv.fixed_point.values(), [-1]);
        assert_eq!(cv.induced.values(), [-1]);
    }
}
