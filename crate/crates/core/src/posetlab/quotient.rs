//! `C̄ = C/O_p(C)` for `C = C_G(T)`, realized on the cosets of `O_p(C)`.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::permcore::search::{centralizer_of_group_in, normalizer_in};
use crate::permcore::sylow::{ensure_prime, p_core};
use crate::permcore::{Group, Perm};

#[derive(Debug, Clone)]
pub struct QuotientContext {
    prime: u64,
    t: Group,
    c: Group,
    core: Group,
    /// Canonical coset representatives; index 0 is `O_C` itself.
    cosets: Vec<Perm>,
    index: HashMap<Perm, u32>,
    quotient: Group,
}

impl QuotientContext {
    pub fn new(g: &Group, p: u64, t: &Group, limits: &Limits) -> Result<Self> {
        ensure_prime(p)?;
        if !t.is_subgroup_of(g) || t.size() != p {
            return Err(Error::Domain(format!("{t} is not a subgroup of order {p}")));
        }
        let c = centralizer_of_group_in(g, t, limits)?;
        let core = p_core(&c, p, limits)?.into_group();
        Self::from_parts(p, t, c, core, limits)
    }

    fn from_parts(prime: u64, t: &Group, c: Group, core: Group, limits: &Limits) -> Result<Self> {
        let chain = core.chain();
        let id = Perm::identity(c.degree());
        let mut cosets = vec![chain.coset_min(&id)];
        let mut index: HashMap<Perm, u32> = HashMap::from([(cosets[0].clone(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        let gens = c.generators().to_vec();
        while let Some(i) = queue.pop_front() {
            for x in &gens {
                let y = chain.coset_min(&cosets[i].mul(x));
                if !index.contains_key(&y) {
                    if cosets.len() >= limits.max_cosets {
                        return Err(Error::resource(
                            "max_cosets",
                            limits.max_cosets as u64,
                            format!("> {}", cosets.len()),
                        ));
                    }
                    index.insert(y.clone(), cosets.len() as u32);
                    queue.push_back(cosets.len());
                    cosets.push(y);
                }
            }
        }
        let mut ctx = QuotientContext {
            prime,
            t: t.clone(),
            c,
            core,
            cosets,
            index,
            quotient: Group::trivial(1),
        };
        let images: Vec<Perm> = gens.iter().map(|x| ctx.act(x)).collect();
        ctx.quotient = Group::generated(ctx.cosets.len(), &images);
        Ok(ctx)
    }

    fn act(&self, x: &Perm) -> Perm {
        let chain = self.core.chain();
        let images = self
            .cosets
            .iter()
            .map(|r| self.index[&chain.coset_min(&r.mul(x))])
            .collect();
        Perm::from_images(images).expect("right multiplication permutes cosets")
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn t(&self) -> &Group {
        &self.t
    }

    /// `C = C_G(T)`.
    pub fn centralizer(&self) -> &Group {
        &self.c
    }

    /// `O_C = O_p(C)`.
    pub fn core(&self) -> &Group {
        &self.core
    }

    /// `C̄`, acting on `[C : O_C]` points.
    pub fn quotient(&self) -> &Group {
        &self.quotient
    }

    pub fn index(&self) -> usize {
        self.cosets.len()
    }

    /// `q(x)`.
    pub fn image(&self, x: &Perm) -> Result<Perm> {
        if !self.c.contains(x) {
            return Err(Error::Domain(format!("{x} is not in the centralizer")));
        }
        Ok(self.act(x))
    }

    /// `q(H)` for `H ≤ C`.
    pub fn image_of(&self, h: &Group) -> Result<Group> {
        if !h.is_subgroup_of(&self.c) {
            return Err(Error::Domain(format!("{h} is not contained in the centralizer")));
        }
        let images: Vec<Perm> = h.generators().iter().map(|x| self.act(x)).collect();
        Ok(Group::generated(self.cosets.len(), &images))
    }

    /// Some `x ∈ C` with `q(x) = y`.
    pub fn lift(&self, y: &Perm, limits: &Limits) -> Result<Perm> {
        if y.degree() != self.cosets.len() || !self.quotient.contains(y) {
            return Err(Error::Domain(format!("{y} is not in the quotient")));
        }
        let r = &self.cosets[y.apply(0)];
        for o in self.core.enumerate(limits.max_order)? {
            let x = r.mul(&o);
            if self.act(&x) == *y {
                return Ok(x);
            }
        }
        unreachable!("every coset element maps 0 to the same point and O_C is the kernel")
    }

    /// `q⁻¹(H̄)`.
    pub fn preimage(&self, hbar: &Group, limits: &Limits) -> Result<Group> {
        let mut gens = self.core.generators().to_vec();
        for y in hbar.generators() {
            gens.push(self.lift(y, limits)?);
        }
        Ok(Group::generated(self.c.degree(), &gens))
    }

    /// `q(ab) = q(a)q(b)` on generators of `C`.
    pub fn is_homomorphism(&self) -> bool {
        let gens = self.c.generators();
        gens.iter().all(|a| {
            gens.iter()
                .all(|b| self.act(&a.mul(b)) == self.act(a).mul(&self.act(b)))
        })
    }

    /// `|C̄| = [C : O_C]`, so the kernel is exactly `O_C`.
    pub fn is_faithful(&self) -> bool {
        self.quotient.order() * self.core.order() == self.c.order()
    }

    /// `q⁻¹(O_p(N_C̄(Q̄))) = O_p(N_C(Q))` for `O_C ≤ Q ≤ C`.
    pub fn correspondence_holds(&self, q: &Group, limits: &Limits) -> Result<bool> {
        if !self.core.is_subgroup_of(q) || !q.is_subgroup_of(&self.c) {
            return Err(Error::Domain(format!("{q} does not lie between O_C and C")));
        }
        let qbar = self.image_of(q)?;
        let upstairs = p_core(&normalizer_in(&self.c, q, limits)?, self.prime, limits)?.into_group();
        let downstairs = p_core(&normalizer_in(&self.quotient, &qbar, limits)?, self.prime, limits)?.into_group();
        Ok(self.preimage(&downstairs, limits)? == upstairs)
    }
}

pub fn quotient_context(g: &Group, p: u64, t: &Group, limits: &Limits) -> Result<QuotientContext> {
    QuotientContext::new(g, p, t, limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    #[test]
    fn sym5_transposition() {
        let lim = Limits::default();
        let s5 = grp(5, "(1,2);(1,2,3,4,5)");
        let ctx = quotient_context(&s5, 2, &grp(5, "(1,2)"), &lim).unwrap();
        assert_eq!(ctx.centralizer().size(), 12);
        assert_eq!(ctx.core(), &grp(5, "(1,2)"));
        assert_eq!(ctx.index(), 6);
        assert_eq!(ctx.quotient().size(), 6);
        assert!(!ctx.quotient().is_abelian());
        assert!(ctx.is_homomorphism() && ctx.is_faithful());
        let q = grp(5, "(1,2);(3,4)");
        assert_eq!(ctx.preimage(&ctx.image_of(&q).unwrap(), &lim).unwrap(), q);
        assert!(ctx.correspondence_holds(&q, &lim).unwrap());
    }

    #[test]
    fn p_group_centralizer_gives_trivial_quotient() {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let ctx = quotient_context(&s4, 2, &grp(4, "(1,2)"), &lim).unwrap();
        assert_eq!(ctx.core().size(), 4);
        assert!(ctx.quotient().is_trivial());
    }

    #[test]
    fn orders_multiply() {
        let lim = Limits::default();
        let a5 = grp(5, "(1,2,3);(1,2,3,4,5)");
        let ctx = quotient_context(&a5, 3, &grp(5, "(1,2,3)"), &lim).unwrap();
        assert_eq!(ctx.core().size(), 3);
        let s6 = grp(6, "(1,2);(1,2,3,4,5,6)");
        let ctx = quotient_context(&s6, 3, &grp(6, "(1,2,3)(4,5,6)"), &lim).unwrap();
        assert_eq!(ctx.quotient().size() * ctx.core().size(), ctx.centralizer().size());
        let s3 = grp(3, "(1,2);(1,2,3)");
        let t = grp(3, "(1,2)");
        let ctx = quotient_context(&s3, 2, &t, &lim).unwrap();
        assert!(ctx.quotient().is_trivial());
        assert!(matches!(quotient_context(&s3, 3, &t, &lim), Err(Error::Domain(_))));
    }
}
