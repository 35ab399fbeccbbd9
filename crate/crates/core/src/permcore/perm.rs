use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{0, .., n-1}` acting on the right: `x^(gh) = (x^g)^h`.
///
/// Points are 0-based internally and 1-based in cycle notation. The derived
/// ordering compares image lists lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Box<[u32]>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            img: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its 0-based image list.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::Parse(format!("image list {images:?} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Perm {
            img: images.into_boxed_slice(),
        })
    }

    /// Parses disjoint-cycle notation such as `(1,2)(3,4)`; `()` is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let mut img: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        if rest.is_empty() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("malformed cycle text `{text}`")))?;
            let (inner, tail) = body;
            rest = tail;
            if inner.is_empty() {
                continue;
            }
            let mut pts = Vec::new();
            for tok in inner.split(',') {
                let v: usize = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point `{tok}` in `{text}`")))?;
                if v == 0 || v > degree {
                    return Err(Error::Parse(format!("point {v} outside 1..={degree} in `{text}`")));
                }
                if used[v - 1] {
                    return Err(Error::Parse(format!("point {v} repeated in `{text}`")));
                }
                used[v - 1] = true;
                pts.push(v - 1);
            }
            for (i, &a) in pts.iter().enumerate() {
                img[a] = pts[(i + 1) % pts.len()] as u32;
            }
        }
        Ok(Perm {
            img: img.into_boxed_slice(),
        })
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.img
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.img[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self * other`: apply `self` first, then `other`.
    pub fn mul(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            img: self.img.iter().map(|&x| other.img[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm {
            img: inv.into_boxed_slice(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// `g^-1 * self * g`.
    pub fn conj(&self, g: &Perm) -> Perm {
        let mut img = vec![0u32; self.img.len()];
        for (i, &x) in self.img.iter().enumerate() {
            img[g.img[i] as usize] = g.img[x as usize];
        }
        Perm {
            img: img.into_boxed_slice(),
        }
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.img
            .iter()
            .enumerate()
            .all(|(i, &x)| other.img[x as usize] == self.img[other.img[i] as usize])
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            out.push(cyc);
        }
        out
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.img.iter().enumerate().position(|(i, &x)| i as u32 != x)
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for cyc in self.cycles() {
            if cyc.len() < 2 {
                continue;
            }
            any = true;
            write!(f, "(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", x + 1)?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a `;`-separated generator list such as `(1,2);(1,2,3,4)`.
pub fn parse_generators(text: &str, degree: usize) -> Result<Vec<Perm>> {
    text.split(';')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| Perm::parse(s, degree))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_and_display() {
        let p = Perm::parse("(1,2)(3,4)", 5).unwrap();
        assert_eq!(p.to_string(), "(1,2)(3,4)");
        assert_eq!(Perm::parse("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(p.order(), 2);
        assert_eq!(p.cycle_type(), vec![2, 2, 1]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(Perm::parse("(1,2", 3), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(1,4)", 3), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(1,2)(2,3)", 3), Err(Error::Parse(_))));
        assert!(matches!(Perm::parse("(a,b)", 3), Err(Error::Parse(_))));
        assert!(Perm::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn right_action() {
        let a = Perm::parse("(1,2)", 3).unwrap();
        let b = Perm::parse("(2,3)", 3).unwrap();
        // 1 -> 2 -> 3
        assert_eq!(a.mul(&b).apply(0), 2);
        assert_eq!(a.conj(&b), b.inverse().mul(&a).mul(&b));
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n as u32).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn group_axioms(a in arb_perm(7), b in arb_perm(7), c in arb_perm(7)) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert!(a.mul(&a.inverse()).is_identity());
            prop_assert_eq!(a.pow(a.order()), Perm::identity(7));
            prop_assert_eq!(Perm::parse(&a.to_string(), 7).unwrap(), a.clone());
            prop_assert_eq!(a.commutes_with(&b), a.mul(&b) == b.mul(&a));
        }
    }
}
