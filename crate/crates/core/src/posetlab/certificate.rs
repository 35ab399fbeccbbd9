//! Zig-zags of poset self-maps, checked element by element.
//!
//! A contraction certificate is a list of monotone self-maps
//! `f₀ = id, f₁, .., f_k = const` of one poset with each adjacent pair
//! pointwise comparable. Comparable monotone maps induce homotopic maps of
//! nerves, so a valid certificate proves the nerve contractible. When every
//! map also commutes with a group `N`, the contraction is `N`-equivariant.

use std::fmt;

use super::poset::GPoset;
use crate::error::Result;
use crate::limits::Limits;
use crate::permcore::search::{intersect_groups, normalizer_in};
use crate::permcore::Group;

/// How a self-map is computed from an element `Q`.
#[derive(Debug, Clone)]
pub enum MapRule {
    Identity,
    /// `Q ↦ N_Q(P)`
    NormalizerOf(Group),
    /// `Q ↦ Q·X`
    ProductWith(Group),
    /// `Q ↦ N_Q(P)·X`
    NormalizerThenProduct {
        p: Group,
        x: Group,
    },
    /// `Q ↦ X`
    Constant(Group),
}

impl fmt::Display for MapRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapRule::Identity => write!(f, "Q"),
            MapRule::NormalizerOf(p) => write!(f, "N_Q({p})"),
            MapRule::ProductWith(x) => write!(f, "Q·{x}"),
            MapRule::NormalizerThenProduct { p, x } => write!(f, "N_Q({p})·{x}"),
            MapRule::Constant(x) => write!(f, "{x}"),
        }
    }
}

/// `A·B` when it is a subgroup, else `None`.
pub fn product(a: &Group, b: &Group, limits: &Limits) -> Result<Option<Group>> {
    if b.is_subgroup_of(a) {
        return Ok(Some(a.clone()));
    }
    if a.is_subgroup_of(b) {
        return Ok(Some(b.clone()));
    }
    let mut gens = a.generators().to_vec();
    gens.extend_from_slice(b.generators());
    let joined = Group::generated(a.degree(), &gens);
    let meet = intersect_groups(a, b, limits)?;
    let ok = u128::from(joined.size()) * u128::from(meet.size()) == u128::from(a.size()) * u128::from(b.size());
    Ok(ok.then_some(joined))
}

impl MapRule {
    /// The image of `q`, or `None` when a product is not a subgroup.
    pub fn apply(&self, q: &Group, limits: &Limits) -> Result<Option<Group>> {
        Ok(match self {
            MapRule::Identity => Some(q.clone()),
            MapRule::NormalizerOf(p) => Some(normalizer_in(q, p, limits)?),
            MapRule::ProductWith(x) => product(q, x, limits)?,
            MapRule::NormalizerThenProduct { p, x } => product(&normalizer_in(q, p, limits)?, x, limits)?,
            MapRule::Constant(x) => Some(x.clone()),
        })
    }
}

/// `f_i ≤ f_{i+1}` or `f_i ≥ f_{i+1}` pointwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Le,
    Ge,
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Le => "≤",
            Direction::Ge => "≥",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ContractionCertificate {
    pub maps: Vec<MapRule>,
    /// `directions[i]` relates `maps[i]` and `maps[i + 1]`.
    pub directions: Vec<Direction>,
    pub equivariance: Group,
}

impl ContractionCertificate {
    /// `Q ≥ N_Q(P) ≤ N_Q(P)·X ≥ X`.
    pub fn normalizer_zigzag(p: &Group, x: &Group, equivariance: &Group) -> Self {
        ContractionCertificate {
            maps: vec![
                MapRule::Identity,
                MapRule::NormalizerOf(p.clone()),
                MapRule::NormalizerThenProduct {
                    p: p.clone(),
                    x: x.clone(),
                },
                MapRule::Constant(x.clone()),
            ],
            directions: vec![Direction::Ge, Direction::Le, Direction::Ge],
            equivariance: equivariance.clone(),
        }
    }

    /// `Q ≤ Q·X ≥ X`.
    pub fn product_zigzag(x: &Group, equivariance: &Group) -> Self {
        ContractionCertificate {
            maps: vec![
                MapRule::Identity,
                MapRule::ProductWith(x.clone()),
                MapRule::Constant(x.clone()),
            ],
            directions: vec![Direction::Le, Direction::Ge],
            equivariance: equivariance.clone(),
        }
    }

    /// `Q ≤ X` or `Q ≥ X` for a maximum or minimum `X`.
    pub fn cone(x: &Group, direction: Direction, equivariance: &Group) -> Self {
        ContractionCertificate {
            maps: vec![MapRule::Identity, MapRule::Constant(x.clone())],
            directions: vec![direction],
            equivariance: equivariance.clone(),
        }
    }
}

impl fmt::Display for ContractionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, m) in self.maps.iter().enumerate() {
            if i > 0 {
                write!(f, " {} ", self.directions[i - 1])?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

/// Which check failed, where.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Defect {
    /// Index of the offending map.
    pub step: usize,
    pub check: &'static str,
    pub element: Option<String>,
    pub detail: String,
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {} failed", self.step, self.check)?;
        if let Some(e) = &self.element {
            write!(f, " at {e}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Valid,
    Invalid(Defect),
}

impl Verdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, Verdict::Valid)
    }
}

fn defect(step: usize, check: &'static str, element: Option<&Group>, detail: impl Into<String>) -> Verdict {
    Verdict::Invalid(Defect {
        step,
        check,
        element: element.map(|e| e.to_string()),
        detail: detail.into(),
    })
}

/// Evaluates a rule on every element: totality, well-definedness and
/// monotonicity.
fn tabulate(domain: &GPoset, rule: &MapRule, step: usize, limits: &Limits) -> Result<Result<Vec<usize>, Verdict>> {
    let mut out = Vec::with_capacity(domain.len());
    for q in domain.elements() {
        let Some(image) = rule.apply(q, limits)? else {
            return Ok(Err(defect(
                step,
                "well-definedness",
                Some(q),
                format!("{rule} is not a subgroup"),
            )));
        };
        match domain.index_of(&image) {
            Some(j) => out.push(j),
            None => {
                return Ok(Err(defect(
                    step,
                    "totality",
                    Some(q),
                    format!("image {image} is outside the poset"),
                )))
            }
        }
    }
    for (a, b) in domain.relations() {
        if !domain.le(out[a], out[b]) {
            return Ok(Err(defect(
                step,
                "monotonicity",
                Some(&domain.elements()[a]),
                format!("not below the image of {}", domain.elements()[b]),
            )));
        }
    }
    Ok(Ok(out))
}

fn equivariant(domain: &GPoset, table: &[usize], group: &Group, step: usize) -> Result<Option<Verdict>> {
    for x in group.generators() {
        let Ok(sigma) = domain.action_of(x) else {
            return Ok(Some(defect(
                step,
                "equivariance",
                None,
                format!("{x} does not act on the poset"),
            )));
        };
        for (i, &fi) in table.iter().enumerate() {
            if table[sigma[i] as usize] != sigma[fi] as usize {
                return Ok(Some(defect(
                    step,
                    "equivariance",
                    Some(&domain.elements()[i]),
                    format!("does not commute with {x}"),
                )));
            }
        }
    }
    Ok(None)
}

fn comparable(domain: &GPoset, a: &[usize], b: &[usize], dir: Direction, step: usize) -> Option<Verdict> {
    for (i, (&x, &y)) in a.iter().zip(b).enumerate() {
        let ok = match dir {
            Direction::Le => domain.le(x, y),
            Direction::Ge => domain.le(y, x),
        };
        if !ok {
            return Some(defect(
                step,
                "comparability",
                Some(&domain.elements()[i]),
                format!("images are not related by {dir}"),
            ));
        }
    }
    None
}

/// Checks a contraction certificate on `domain`.
pub fn check_certificate(domain: &GPoset, cert: &ContractionCertificate, limits: &Limits) -> Result<Verdict> {
    if domain.is_empty() {
        return Ok(defect(
            0,
            "nonempty domain",
            None,
            "the empty poset is not contractible",
        ));
    }
    if !matches!(cert.maps.first(), Some(MapRule::Identity)) {
        return Ok(defect(0, "identity start", None, "the first map must be the identity"));
    }
    if cert.directions.len() + 1 != cert.maps.len() {
        return Ok(defect(
            0,
            "shape",
            None,
            "one direction is needed between adjacent maps",
        ));
    }
    let mut tables = Vec::with_capacity(cert.maps.len());
    for (step, rule) in cert.maps.iter().enumerate() {
        match tabulate(domain, rule, step, limits)? {
            Ok(t) => tables.push(t),
            Err(v) => return Ok(v),
        }
        if let Some(v) = equivariant(domain, &tables[step], &cert.equivariance, step)? {
            return Ok(v);
        }
    }
    for (step, dir) in cert.directions.iter().enumerate() {
        if let Some(v) = comparable(domain, &tables[step], &tables[step + 1], *dir, step + 1) {
            return Ok(v);
        }
    }
    let last = tables.last().expect("at least the identity");
    if last.iter().any(|&j| j != last[0]) {
        return Ok(defect(
            cert.maps.len() - 1,
            "constancy",
            None,
            "the last map is not constant",
        ));
    }
    Ok(Verdict::Valid)
}

/// An equivariant monotone self-map `F` with `F ≥ id` or `F ≤ id` whose
/// image lies in a target subposet. Then the inclusions
/// `F(X) ⊆ target ⊆ X` are equivariant homotopy equivalences.
#[derive(Debug, Clone)]
pub struct RetractionCertificate {
    pub map: MapRule,
    /// `Ge` for `F ≥ id`.
    pub direction: Direction,
    pub equivariance: Group,
}

impl fmt::Display for RetractionCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q ↦ {} with F {} id", self.map, self.direction)
    }
}

pub fn check_retraction(
    domain: &GPoset,
    target: &GPoset,
    cert: &RetractionCertificate,
    limits: &Limits,
) -> Result<Verdict> {
    if let Some(t) = target.elements().iter().find(|t| !domain.contains(t)) {
        return Ok(defect(
            0,
            "target inclusion",
            Some(t),
            "target element outside the domain",
        ));
    }
    let table = match tabulate(domain, &cert.map, 0, limits)? {
        Ok(t) => t,
        Err(v) => return Ok(v),
    };
    if let Some(v) = equivariant(domain, &table, &cert.equivariance, 0)? {
        return Ok(v);
    }
    let id: Vec<usize> = (0..domain.len()).collect();
    let flipped = match cert.direction {
        Direction::Ge => Direction::Le,
        Direction::Le => Direction::Ge,
    };
    if let Some(v) = comparable(domain, &id, &table, flipped, 0) {
        return Ok(v);
    }
    for (i, &j) in table.iter().enumerate() {
        if !target.contains(&domain.elements()[j]) {
            return Ok(defect(
                0,
                "image in target",
                Some(&domain.elements()[i]),
                format!("image {} is not in the target", domain.elements()[j]),
            ));
        }
    }
    Ok(Verdict::Valid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::collections::{Collection, CollectionKind, PSubgroups};
    use crate::posetlab::build_poset;

    fn grp(n: usize, s: &str) -> Group {
        Group::parse(n, s).unwrap()
    }

    fn tilde_s_fixed(z: &Group) -> (Group, GPoset) {
        let lim = Limits::default();
        let s4 = grp(4, "(1,2);(1,2,3,4)");
        let data = PSubgroups::compute(&s4, 2, &lim).unwrap();
        let c = Collection::from_psubgroups(&data, CollectionKind::TildeS).unwrap();
        let x = build_poset(&c, &s4, &lim).unwrap();
        let n = normalizer_in(&s4, z, &lim).unwrap();
        (n.clone(), x.fixed_subposet(z, &n, &lim).unwrap())
    }

    #[test]
    fn product_zigzag_on_fixed_points() {
        let lim = Limits::default();
        let z = grp(4, "(1,3)(2,4)");
        let (n, f) = tilde_s_fixed(&z);
        let cert = ContractionCertificate::product_zigzag(&z, &n);
        assert_eq!(check_certificate(&f, &cert, &lim).unwrap(), Verdict::Valid);
    }

    #[test]
    fn constant_on_a_point() {
        let lim = Limits::default();
        let s3 = grp(3, "(1,2);(1,2,3)");
        let x = GPoset::new([s3.clone()], &s3, &lim).unwrap();
        let cert = ContractionCertificate::cone(&s3, Direction::Le, &s3);
        assert!(check_certificate(&x, &cert, &lim).unwrap().is_valid());
    }

    #[test]
    fn non_normalizing_product_is_caught() {
        let lim = Limits::default();
        let z = grp(4, "(1,3)(2,4)");
        let (n, f) = tilde_s_fixed(&z);
        let bad = grp(4, "(1,2)");
        let cert = ContractionCertificate::product_zigzag(&bad, &n);
        match check_certificate(&f, &cert, &lim).unwrap() {
            Verdict::Invalid(d) => assert!(d.check == "well-definedness" || d.check == "totality"),
            Verdict::Valid => panic!("accepted a non-normalizing product"),
        }
    }

    #[test]
    fn empty_domain_is_invalid() {
        let s3 = grp(3, "(1,2);(1,2,3)");
        let x = GPoset::empty(&s3);
        let cert = ContractionCertificate::cone(&s3, Direction::Le, &s3);
        assert!(!check_certificate(&x, &cert, &Limits::default()).unwrap().is_valid());
    }

    #[test]
    fn products_are_checked() {
        let lim = Limits::default();
        let a = grp(4, "(1,2)");
        let b = grp(4, "(2,3)");
        assert!(product(&a, &b, &lim).unwrap().is_none());
        let c = grp(4, "(3,4)");
        assert_eq!(product(&a, &c, &lim).unwrap().unwrap().size(), 4);
    }
}
