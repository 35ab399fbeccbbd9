//! Stabilizer chains over the ordered base `0, 1, .., n-1`.
//!
//! Level `b` describes the orbit of `b` under the pointwise stabilizer of
//! `0..b`. Levels with a trivial orbit are not stored. A strong generator
//! belongs to level `b` exactly when it fixes every point below `b`, so the
//! stored level points are the first moved points of the strong generators.
//! Because every point below `b` is fixed at level `b`, greedy minimization
//! level by level yields lexicographically least coset representatives.

use num_bigint::BigUint;
use rand::{Rng, RngExt};

use super::perm::Perm;

#[derive(Debug, Clone)]
struct Level {
    point: usize,
    /// Strong generators (indices) fixing every point below `point`.
    gens: Vec<usize>,
    orbit: Vec<usize>,
    /// `transversal[y]` maps `point` to `y`.
    transversal: Vec<Option<Perm>>,
    inverse: Vec<Option<Perm>>,
}

#[derive(Debug, Clone)]
pub struct StabChain {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
    order: BigUint,
}

impl StabChain {
    pub fn trivial(degree: usize) -> Self {
        StabChain {
            degree,
            strong: Vec::new(),
            levels: Vec::new(),
            order: BigUint::from(1u32),
        }
    }

    pub fn from_generators<'a>(degree: usize, gens: impl IntoIterator<Item = &'a Perm>) -> Self {
        let mut chain = StabChain::trivial(degree);
        for g in gens {
            chain.extend(g);
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    /// Base points with nontrivial basic orbits, ascending.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Sifts `g` starting at level index `from`; returns the residue and the
    /// index of the level where sifting stopped (`levels.len()` on success).
    fn sift_from(&self, g: &Perm, from: usize) -> (Perm, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let y = h.apply(level.point);
            match &level.inverse[y] {
                Some(inv) => h = h.mul(inv),
                None => return (h, i),
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    pub fn contains(&self, g: &Perm) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        self.sift_from(g, 0).0.is_identity()
    }

    /// Adds `g` to the group; returns whether the group grew.
    pub fn extend(&mut self, g: &Perm) -> bool {
        assert_eq!(g.degree(), self.degree, "degree mismatch");
        let (residue, _) = self.sift_from(g, 0);
        if residue.is_identity() {
            return false;
        }
        self.add_strong(residue);
        self.complete();
        true
    }

    fn add_strong(&mut self, h: Perm) {
        self.strong.push(h);
        self.rebuild_levels();
    }

    fn rebuild_levels(&mut self) {
        let firsts: Vec<usize> = self
            .strong
            .iter()
            .map(|s| s.first_moved().expect("strong generators are nontrivial"))
            .collect();
        let mut points = firsts.clone();
        points.sort_unstable();
        points.dedup();
        let n = self.degree;
        let mut levels = Vec::with_capacity(points.len());
        for &b in &points {
            let gens: Vec<usize> = (0..self.strong.len()).filter(|&i| firsts[i] >= b).collect();
            let mut transversal: Vec<Option<Perm>> = vec![None; n];
            let mut inverse: Vec<Option<Perm>> = vec![None; n];
            transversal[b] = Some(Perm::identity(n));
            inverse[b] = Some(Perm::identity(n));
            let mut orbit = vec![b];
            let mut i = 0;
            while i < orbit.len() {
                let y = orbit[i];
                for &gi in &gens {
                    let s = &self.strong[gi];
                    let z = s.apply(y);
                    if transversal[z].is_none() {
                        let u = transversal[y].as_ref().unwrap().mul(s);
                        inverse[z] = Some(u.inverse());
                        transversal[z] = Some(u);
                        orbit.push(z);
                    }
                }
                i += 1;
            }
            levels.push(Level {
                point: b,
                gens,
                orbit,
                transversal,
                inverse,
            });
        }
        self.order = levels
            .iter()
            .fold(BigUint::from(1u32), |acc, l| acc * BigUint::from(l.orbit.len()));
        self.levels = levels;
    }

    /// Runs Schreier–Sims until every Schreier generator sifts.
    fn complete(&mut self) {
        'restart: loop {
            for li in (0..self.levels.len()).rev() {
                let level = &self.levels[li];
                for &y in &level.orbit {
                    let uy = level.transversal[y].as_ref().unwrap();
                    for &gi in &level.gens {
                        let s = &self.strong[gi];
                        let z = s.apply(y);
                        let sg = uy.mul(s).mul(level.inverse[z].as_ref().unwrap());
                        if sg.is_identity() {
                            continue;
                        }
                        let (residue, _) = self.sift_from(&sg, li + 1);
                        if !residue.is_identity() {
                            self.add_strong(residue);
                            continue 'restart;
                        }
                    }
                }
            }
            break;
        }
    }

    /// All elements, unsorted. Callers cap the order.
    pub fn elements(&self) -> Vec<Perm> {
        let mut elems = vec![Perm::identity(self.degree)];
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(elems.len() * level.orbit.len());
            for a in &elems {
                for &y in &level.orbit {
                    next.push(a.mul(level.transversal[y].as_ref().unwrap()));
                }
            }
            elems = next;
        }
        elems
    }

    /// A uniformly distributed element.
    pub fn random_element<R: Rng>(&self, rng: &mut R) -> Perm {
        let mut g = Perm::identity(self.degree);
        for level in self.levels.iter().rev() {
            let y = level.orbit[rng.random_range(0..level.orbit.len())];
            g = g.mul(level.transversal[y].as_ref().unwrap());
        }
        g
    }

    /// Lexicographically least element of the right coset `K x`, where `K` is
    /// the subgroup described by levels `from..`.
    fn coset_min_from(&self, x: &Perm, from: usize) -> Perm {
        let mut g = x.clone();
        for level in &self.levels[from..] {
            let best = *level
                .orbit
                .iter()
                .min_by_key(|&&y| g.apply(y))
                .expect("orbit contains its base point");
            g = level.transversal[best].as_ref().unwrap().mul(&g);
        }
        g
    }

    /// Canonical representative of the right coset `G x`.
    pub fn coset_min(&self, x: &Perm) -> Perm {
        self.coset_min_from(x, 0)
    }

    /// A generating set determined by the group alone: for each level and
    /// each orbit point, the least element mapping the level point there.
    pub fn canonical_generators(&self) -> Vec<Perm> {
        let mut out = Vec::new();
        for (i, level) in self.levels.iter().enumerate() {
            let mut orbit = level.orbit.clone();
            orbit.sort_unstable();
            for y in orbit {
                if y == level.point {
                    continue;
                }
                out.push(self.coset_min_from(level.transversal[y].as_ref().unwrap(), i + 1));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permcore::perm::parse_generators;

    fn chain(text: &str, n: usize) -> StabChain {
        let gens = parse_generators(text, n).unwrap();
        StabChain::from_generators(n, &gens)
    }

    #[test]
    fn orders() {
        assert_eq!(chain("(1,2);(1,2,3,4)", 4).order(), &BigUint::from(24u32));
        assert_eq!(chain("(1,2);(1,2,3,4,5)", 5).order(), &BigUint::from(120u32));
        assert_eq!(StabChain::trivial(1).order(), &BigUint::from(1u32));
        let m11 = chain("(1,2,3,4,5,6,7,8,9,10,11);(3,7,11,8)(4,10,5,6)", 11);
        assert_eq!(m11.order(), &BigUint::from(7920u32));
    }

    #[test]
    fn elements_match_order_and_membership() {
        let c = chain("(1,2);(1,2,3,4)", 4);
        let mut e = c.elements();
        e.sort();
        e.dedup();
        assert_eq!(e.len(), 24);
        let d8 = chain("(1,2,3,4);(1,3)", 4);
        assert!(d8.contains(&Perm::parse("(1,3)(2,4)", 4).unwrap()));
        assert!(!d8.contains(&Perm::parse("(1,2)", 4).unwrap()));
        assert_eq!(d8.elements().len(), 8);
    }

    #[test]
    fn coset_min_is_least_in_coset() {
        let k = chain("(1,2,3,4);(1,3)", 5);
        let x = Perm::parse("(1,5,2)", 5).unwrap();
        let coset: Vec<Perm> = k.elements().iter().map(|h| h.mul(&x)).collect();
        let least = coset.iter().min().unwrap().clone();
        assert_eq!(k.coset_min(&x), least);
        for y in &coset {
            assert_eq!(k.coset_min(y), least);
        }
    }

    #[test]
    fn canonical_generators_ignore_input_generators() {
        let a = chain("(1,2);(1,2,3,4)", 4);
        let b = chain("(3,4);(1,3,2);(1,4)(2,3)", 4);
        assert_eq!(a.canonical_generators(), b.canonical_generators());
    }
}
