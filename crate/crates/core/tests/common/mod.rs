//! Brute-force oracles over explicit element lists. Nothing here touches
//! stabilizer chains; groups are closed under multiplication by breadth-first
//! search.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet, VecDeque};

use pcomplex::permcore::{Group, Perm};

pub type Elements = BTreeSet<Vec<u32>>;

pub fn key(x: &Perm) -> Vec<u32> {
    x.images().to_vec()
}

pub fn perm(k: &[u32]) -> Perm {
    Perm::from_images(k.to_vec()).unwrap()
}

/// Closure of `gens` under multiplication.
pub fn closure(degree: usize, gens: &[Perm]) -> Elements {
    let id = Perm::identity(degree);
    let mut seen: HashSet<Vec<u32>> = HashSet::from([key(&id)]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(key(&y)) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub fn elements_of(g: &Group) -> Elements {
    closure(g.degree(), g.generators())
}

pub fn perms(e: &Elements) -> Vec<Perm> {
    e.iter().map(|k| perm(k)).collect()
}

pub fn conj_set(h: &Elements, g: &Perm) -> Elements {
    h.iter().map(|k| key(&perm(k).conj(g))).collect()
}

pub fn centralizer(g: &Elements, x: &Perm) -> Elements {
    g.iter().filter(|k| perm(k).commutes_with(x)).cloned().collect()
}

pub fn centralizer_of_set(g: &Elements, h: &Elements) -> Elements {
    let hs = perms(h);
    g.iter()
        .filter(|k| {
            let y = perm(k);
            hs.iter().all(|x| x.commutes_with(&y))
        })
        .cloned()
        .collect()
}

pub fn normalizer(g: &Elements, h: &Elements) -> Elements {
    g.iter().filter(|k| conj_set(h, &perm(k)) == *h).cloned().collect()
}

pub fn center(g: &Elements) -> Elements {
    centralizer_of_set(g, g)
}

pub fn p_part(mut n: usize, p: usize) -> usize {
    let mut q = 1;
    while n.is_multiple_of(p) {
        n /= p;
        q *= p;
    }
    q
}

pub fn is_p_power(n: usize, p: usize) -> bool {
    p_part(n, p) == n
}

/// Every `p`-subgroup (including the trivial one), grown one cyclic
/// subgroup at a time.
pub fn p_subgroups(g: &Elements, p: usize) -> Vec<Elements> {
    let degree = g.iter().next().map_or(0, Vec::len);
    let cyclic: Vec<Perm> = {
        let mut seen: HashSet<Elements> = HashSet::new();
        let mut out = Vec::new();
        for k in g {
            let x = perm(k);
            let o = x.order() as usize;
            if o > 1 && is_p_power(o, p) {
                let c = closure(degree, std::slice::from_ref(&x));
                if seen.insert(c) {
                    out.push(x);
                }
            }
        }
        out
    };
    let trivial: Elements = BTreeSet::from([key(&Perm::identity(degree))]);
    let mut all: HashSet<Elements> = HashSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        let hg = perms(&h);
        for x in &cyclic {
            if h.contains(&key(x)) {
                continue;
            }
            let mut gens = hg.clone();
            gens.push(x.clone());
            let j = closure(degree, &gens);
            if is_p_power(j.len(), p) && all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    all.into_iter().collect()
}

pub fn sylows(subgroups: &[Elements], order: usize, p: usize) -> Vec<&Elements> {
    let q = p_part(order, p);
    subgroups.iter().filter(|h| h.len() == q).collect()
}

/// `O_p`: the intersection of all Sylow subgroups of `n`, the latter found
/// among `subgroups`.
pub fn p_core(n: &Elements, subgroups: &[Elements], p: usize) -> Elements {
    let q = p_part(n.len(), p);
    let mut out: Option<Elements> = None;
    for s in subgroups.iter().filter(|s| s.len() == q && s.is_subset(n)) {
        out = Some(match out {
            None => s.clone(),
            Some(o) => o.intersection(s).cloned().collect(),
        });
    }
    out.expect("a Sylow subgroup exists")
}

/// Order-`p` elements central in some Sylow subgroup.
pub fn p_central(g: &Elements, subgroups: &[Elements], p: usize) -> HashSet<Vec<u32>> {
    let mut out = HashSet::new();
    for s in sylows(subgroups, g.len(), p) {
        for k in center(s) {
            if perm(&k).order() as usize == p {
                out.insert(k);
            }
        }
    }
    out
}

pub fn set_of(g: &Group) -> Elements {
    elements_of(g)
}
