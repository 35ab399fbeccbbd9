use std::fmt::Write as _;

use super::poset::GPoset;
use crate::error::{Error, Result};
use crate::limits::Limits;

/// An abstract simplicial complex on vertices `0..n`. Simplices are stored by
/// dimension as ascending vertex lists, each dimension sorted
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertex_count: usize,
    simplices: Vec<Vec<Box<[u32]>>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        SimplicialComplex {
            vertex_count: 0,
            simplices: Vec::new(),
        }
    }

    /// The complex of chains of a strict order given by ascending up-lists.
    /// `up(i)` must list every element strictly above `i`, and only indices
    /// greater than `i`.
    pub fn from_chains<'a>(n: usize, up: impl Fn(usize) -> &'a [u32], limits: &Limits) -> Result<Self> {
        let mut simplices: Vec<Vec<Box<[u32]>>> = Vec::new();
        let mut total = 0usize;
        let mut chain: Vec<u32> = Vec::new();
        // Each frame holds the candidates still to try after the chain's top.
        let mut stack: Vec<(usize, &[u32])> = Vec::new();
        for v in 0..n {
            chain.push(v as u32);
            stack.push((0, up(v)));
            loop {
                let d = chain.len() - 1;
                if simplices.len() <= d {
                    simplices.push(Vec::new());
                }
                if stack.last().map(|f| f.0) == Some(0) {
                    total += 1;
                    if total > limits.max_simplices {
                        return Err(Error::resource(
                            "max_simplices",
                            limits.max_simplices as u64,
                            format!("> {}", total - 1),
                        ));
                    }
                    simplices[d].push(chain.clone().into());
                }
                let top = stack.last_mut().expect("stack follows chain");
                if top.0 < top.1.len() {
                    let next = top.1[top.0];
                    top.0 += 1;
                    let cands = up(next as usize);
                    chain.push(next);
                    stack.push((0, cands));
                    continue;
                }
                stack.pop();
                chain.pop();
                if chain.is_empty() {
                    break;
                }
            }
        }
        Ok(SimplicialComplex {
            vertex_count: n,
            simplices,
        })
    }

    /// The face closure of `facets`.
    pub fn from_facets(vertex_count: usize, facets: &[Vec<u32>], limits: &Limits) -> Result<Self> {
        let mut by_dim: Vec<std::collections::BTreeSet<Box<[u32]>>> = Vec::new();
        let mut total = 0usize;
        for f in facets {
            let mut f = f.clone();
            f.sort_unstable();
            f.dedup();
            if let Some(&v) = f.iter().find(|&&v| v as usize >= vertex_count) {
                return Err(Error::InvalidInput(format!("vertex {v} out of range")));
            }
            let k = f.len();
            for mask in 1u64..(1u64 << k) {
                let face: Box<[u32]> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| f[i]).collect();
                let d = face.len() - 1;
                while by_dim.len() <= d {
                    by_dim.push(Default::default());
                }
                if by_dim[d].insert(face) {
                    total += 1;
                    if total > limits.max_simplices {
                        return Err(Error::resource(
                            "max_simplices",
                            limits.max_simplices as u64,
                            format!("> {}", total - 1),
                        ));
                    }
                }
            }
        }
        for v in 0..vertex_count as u32 {
            if by_dim.is_empty() {
                by_dim.push(Default::default());
            }
            by_dim[0].insert(vec![v].into());
        }
        Ok(SimplicialComplex {
            vertex_count,
            simplices: by_dim.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    /// Levels must be face-closed and each sorted.
    pub(crate) fn from_levels(vertex_count: usize, simplices: Vec<Vec<Box<[u32]>>>) -> Self {
        SimplicialComplex {
            vertex_count,
            simplices,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.simplices.len() as isize - 1
    }

    pub fn simplices(&self, d: usize) -> &[Box<[u32]>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn simplex_count(&self) -> usize {
        self.simplices.iter().map(Vec::len).sum()
    }

    pub fn index_of(&self, simplex: &[u32]) -> Option<usize> {
        let d = simplex.len().checked_sub(1)?;
        self.simplices.get(d)?.binary_search_by(|s| (**s).cmp(simplex)).ok()
    }

    /// `Σ (-1)^d f_d - 1`.
    pub fn reduced_euler(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
            .sum::<i64>()
            - 1
    }

    /// Line-oriented dump: `complex <n> <dim>`, then one `s` line per
    /// simplex.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "complex {} {}", self.vertex_count, self.dim());
        for level in &self.simplices {
            for s in level {
                let parts: Vec<String> = s.iter().map(u32::to_string).collect();
                let _ = writeln!(out, "s {}", parts.join(" "));
            }
        }
        out
    }

    /// Reads a poset dump (`e`/`r` lines) and returns the complex of its
    /// chains, or a complex dump (`s` lines) and returns it.
    pub fn parse(text: &str, limits: &Limits) -> Result<Self> {
        let mut vertices = 0usize;
        let mut relations: Vec<(u32, u32)> = Vec::new();
        let mut facets: Vec<Vec<u32>> = Vec::new();
        let mut is_complex = false;
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            let mut words = line.split_whitespace();
            let bad = || Error::Parse(format!("line {}: `{line}`", lineno + 1));
            let num = |w: Option<&str>| -> Result<u32> { w.ok_or_else(bad)?.parse().map_err(|_| bad()) };
            match words.next() {
                None => {}
                Some(w) if w.starts_with('#') => {}
                Some("poset") => {}
                Some("complex") => {
                    is_complex = true;
                    vertices = num(words.next())? as usize;
                }
                Some("e") => vertices = vertices.max(num(words.next())? as usize + 1),
                Some("r") => {
                    let i = num(words.next())?;
                    let j = num(words.next())?;
                    if i >= j {
                        return Err(Error::Parse(format!("line {}: relation must go upward", lineno + 1)));
                    }
                    relations.push((i, j));
                }
                Some("s") => {
                    let s: Vec<u32> = words.map(|w| w.parse().map_err(|_| bad())).collect::<Result<_>>()?;
                    facets.push(s);
                }
                Some(_) => return Err(bad()),
            }
        }
        if is_complex {
            return SimplicialComplex::from_facets(vertices, &facets, limits);
        }
        let mut up = vec![Vec::new(); vertices];
        for (i, j) in relations {
            if j as usize >= vertices {
                return Err(Error::Parse(format!("relation names unknown element {j}")));
            }
            up[i as usize].push(j);
        }
        for u in &mut up {
            u.sort_unstable();
            u.dedup();
        }
        SimplicialComplex::from_chains(vertices, |i| &up[i], limits)
    }
}

/// The nerve of `poset`: its strictly increasing chains.
pub fn order_complex(poset: &GPoset, limits: &Limits) -> Result<SimplicialComplex> {
    SimplicialComplex::from_chains(poset.len(), |i| poset.above(i), limits)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_of_a_chain() {
        let up = [vec![1, 2], vec![2], vec![]];
        let k = SimplicialComplex::from_chains(3, |i| &up[i], &Limits::default()).unwrap();
        assert_eq!(k.f_vector(), [3, 3, 1]);
        assert_eq!(k.reduced_euler(), 0);
        assert_eq!(k.simplices(1)[0].as_ref(), [0, 1]);
        assert_eq!(k.index_of(&[1, 2]), Some(2));
    }

    #[test]
    fn empty_and_point() {
        let e = SimplicialComplex::from_chains(0, |_| &[], &Limits::default()).unwrap();
        assert_eq!(e.dim(), -1);
        assert_eq!(e.reduced_euler(), -1);
        let p = SimplicialComplex::from_facets(1, &[], &Limits::default()).unwrap();
        assert_eq!(p.reduced_euler(), 0);
    }

    #[test]
    fn facets_are_closed() {
        let k = SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]], &Limits::default()).unwrap();
        assert_eq!(k.f_vector(), [4, 4, 1]);
    }

    #[test]
    fn simplex_cap() {
        let lim = Limits {
            max_simplices: 4,
            ..Limits::default()
        };
        let up = [vec![1, 2], vec![2], vec![]];
        let r = SimplicialComplex::from_chains(3, |i| &up[i], &lim);
        assert!(matches!(
            r,
            Err(Error::Resource {
                cap: "max_simplices",
                ..
            })
        ));
    }

    #[test]
    fn text_round_trip() {
        let k = SimplicialComplex::from_facets(4, &[vec![0, 1, 2], vec![2, 3]], &Limits::default()).unwrap();
        assert_eq!(SimplicialComplex::parse(&k.to_text(), &Limits::default()).unwrap(), k);
        let poset = "poset 3 2\ne 0 x\ne 1 y\ne 2 z\nr 0 1\nr 0 2\n";
        let nerve = SimplicialComplex::parse(poset, &Limits::default()).unwrap();
        assert_eq!(nerve.f_vector(), [3, 2]);
    }
}
