use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::group::{Group, Subgroup};
use super::perm::Perm;
use super::search::{center_of, intersect_groups, normalizer_in};
use crate::error::{Error, Result};
use crate::limits::Limits;

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

pub(crate) fn ensure_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::InvalidInput(format!("{p} is not prime")))
    }
}

/// Largest power of `p` dividing `n`.
pub fn p_part(n: &BigUint, p: u64) -> BigUint {
    let mut n = n.clone();
    let mut out = BigUint::one();
    let p = BigUint::from(p);
    while !n.is_zero() && (&n % &p).is_zero() {
        n /= &p;
        out *= &p;
    }
    out
}

pub fn is_p_group(g: &Group, p: u64) -> bool {
    let order = g.order();
    p_part(&order, p) == order
}

/// Smallest `k` with `g^k` in `h`.
fn order_modulo(g: &Perm, h: &Group) -> u64 {
    let n = g.order();
    let mut divisors: Vec<u64> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    divisors.sort_unstable();
    divisors.into_iter().find(|&d| h.contains(&g.pow(d))).unwrap_or(n)
}

const SYLOW_ATTEMPTS: usize = 200_000;

/// A Sylow `p`-subgroup of `g`, grown one factor of `p` at a time inside
/// successive normalizers. Random elements come from a generator seeded by
/// `limits.seed`.
pub fn sylow_p(g: &Group, p: u64, limits: &Limits) -> Result<Subgroup> {
    ensure_prime(p)?;
    let target = p_part(&g.order(), p);
    let degree = g.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(limits.seed ^ p.wrapping_mul(0x9e37_79b9_7f4a_7c15));
    let mut current = Group::trivial(degree);
    while current.order() < target {
        let normalizer = normalizer_in(g, &current, limits)?;
        let mut grown = None;
        for _ in 0..SYLOW_ATTEMPTS {
            let x = normalizer.random_element(&mut rng);
            let m = order_modulo(&x, &current);
            if m.is_multiple_of(p) {
                grown = Some(x.pow(m / p));
                break;
            }
        }
        let x = grown.ok_or_else(|| Error::resource("sylow_attempts", SYLOW_ATTEMPTS as u64, "no p-element found"))?;
        let mut gens = current.generators().to_vec();
        gens.push(x);
        current = Group::generated(degree, &gens);
    }
    Ok(Subgroup::unchecked(g, current))
}

/// `O_p(G)`: the intersection of the conjugates of a Sylow subgroup,
/// narrowed by generator conjugates until stable.
pub fn p_core(g: &Group, p: u64, limits: &Limits) -> Result<Subgroup> {
    let s = sylow_p(g, p, limits)?;
    let mut core = s.into_group();
    'outer: loop {
        let mut changed = false;
        for x in g.generators() {
            if core.is_trivial() {
                break 'outer;
            }
            if core.is_normalized_by(x) {
                continue;
            }
            let next = intersect_groups(&core, &core.conjugate(x), limits)?;
            if next.size() < core.size() {
                core = next;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok(Subgroup::unchecked(g, core))
}

/// `Ω₁Z(P)`: the subgroup generated by the central elements of order `p`.
pub fn omega1_center(pgroup: &Subgroup, p: u64, limits: &Limits) -> Result<Subgroup> {
    ensure_prime(p)?;
    if !is_p_group(pgroup, p) {
        return Err(Error::Domain(format!("{pgroup} is not a {p}-group")));
    }
    let z = center_of(pgroup, limits)?;
    let order = limits.check_order(&z.order())?;
    let elems: Vec<Perm> = z.enumerate(order)?.into_iter().filter(|x| x.order() == p).collect();
    Ok(Subgroup::unchecked(
        pgroup.ambient(),
        Group::generated(z.degree(), &elems),
    ))
}

/// `log_p` of a power of `p`.
pub fn p_log(n: u64, p: u64) -> Option<u32> {
    let mut n = n;
    let mut k = 0;
    while n > 1 {
        if !n.is_multiple_of(p) {
            return None;
        }
        n /= p;
        k += 1;
    }
    Some(k)
}

pub fn biguint_to_u64(n: &BigUint) -> Option<u64> {
    n.to_u64()
}
