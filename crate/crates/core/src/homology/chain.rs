use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use super::snf::{smith_form, SparseMatrix};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::posetlab::SimplicialComplex;

/// Simplicial chains with boundary `∂_d : C_d → C_{d-1}`. In the reduced
/// complex `C_{-1} = ℤ` and `∂_0` is the augmentation.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    reduced: bool,
    /// `ranks[k]` is the rank of `C_{k + low}`.
    ranks: Vec<usize>,
    /// `boundaries[k]` maps `C_{k + low}` to `C_{k + low - 1}`.
    boundaries: Vec<SparseMatrix>,
}

impl ChainComplex {
    pub fn new(k: &SimplicialComplex, reduced: bool, limits: &Limits) -> Result<Self> {
        if k.simplex_count() > limits.max_simplices {
            return Err(Error::resource(
                "max_simplices",
                limits.max_simplices as u64,
                k.simplex_count(),
            ));
        }
        let top = k.dim();
        let mut ranks = Vec::new();
        let mut boundaries = Vec::new();
        if reduced {
            ranks.push(1);
            boundaries.push(SparseMatrix::new(0, vec![vec![]]));
        }
        for d in 0..=top {
            let d = d as usize;
            let simplices = k.simplices(d);
            ranks.push(simplices.len());
            let cols: Vec<Vec<(u32, i64)>> = if d == 0 {
                if reduced {
                    vec![vec![(0, 1)]; simplices.len()]
                } else {
                    vec![vec![]; simplices.len()]
                }
            } else {
                simplices
                    .iter()
                    .map(|s| {
                        let mut col: Vec<(u32, i64)> = (0..s.len())
                            .map(|i| {
                                let face: Vec<u32> =
                                    s.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, &v)| v).collect();
                                let row = k.index_of(&face).expect("complex is face-closed");
                                (row as u32, if i % 2 == 0 { 1 } else { -1 })
                            })
                            .collect();
                        col.sort_unstable();
                        col
                    })
                    .collect()
            };
            let rows = if d == 0 {
                usize::from(reduced)
            } else {
                k.simplices(d - 1).len()
            };
            boundaries.push(SparseMatrix::new(rows, cols));
        }
        let c = ChainComplex {
            reduced,
            ranks,
            boundaries,
        };
        if !c.squares_to_zero() {
            return Err(Error::InvalidInput("boundary maps do not compose to zero".into()));
        }
        Ok(c)
    }

    pub fn is_reduced(&self) -> bool {
        self.reduced
    }

    /// Lowest degree: `-1` when reduced.
    pub fn low(&self) -> isize {
        if self.reduced {
            -1
        } else {
            0
        }
    }

    /// Rank of `C_d`.
    pub fn rank(&self, d: isize) -> usize {
        usize::try_from(d - self.low())
            .ok()
            .and_then(|k| self.ranks.get(k))
            .copied()
            .unwrap_or(0)
    }

    /// `∂_d`, if `C_d` is present.
    pub fn boundary(&self, d: isize) -> Option<&SparseMatrix> {
        usize::try_from(d - self.low())
            .ok()
            .and_then(|k| self.boundaries.get(k))
    }

    pub fn top(&self) -> isize {
        self.low() + self.ranks.len() as isize - 1
    }

    pub fn squares_to_zero(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].mul(&w[1]).is_some_and(|p| p.nnz() == 0))
    }
}

/// `H_d`: free rank and torsion coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct HomologyGroup {
    pub rank: usize,
    #[serde(serialize_with = "serialize_torsion")]
    pub torsion: Vec<BigUint>,
}

fn serialize_torsion<S: serde::Serializer>(t: &[BigUint], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(t.iter().map(|x| x.to_string()))
}

impl HomologyGroup {
    pub fn is_zero(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rank)?;
        if !self.torsion.is_empty() {
            let t: Vec<String> = self.torsion.iter().map(|x| x.to_string()).collect();
            write!(f, " [{}]", t.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub reduced: bool,
    /// Degree of `groups[0]`.
    pub low: isize,
    pub groups: Vec<HomologyGroup>,
}

impl HomologyProfile {
    pub fn group(&self, d: isize) -> HomologyGroup {
        usize::try_from(d - self.low)
            .ok()
            .and_then(|k| self.groups.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn betti(&self, d: isize) -> usize {
        self.group(d).rank
    }

    /// `Σ (-1)^d b_d`.
    pub fn euler(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| {
                let d = k as isize + self.low;
                if d.rem_euclid(2) == 0 {
                    g.rank as i64
                } else {
                    -(g.rank as i64)
                }
            })
            .sum()
    }

    /// All groups vanish.
    pub fn is_acyclic(&self) -> bool {
        self.groups.iter().all(HomologyGroup::is_zero)
    }

    /// Homology with `F_p` coefficients vanishes.
    pub fn is_acyclic_mod(&self, p: u64) -> bool {
        let p = BigUint::from(p);
        self.groups
            .iter()
            .all(|g| g.rank == 0 && g.torsion.iter().all(|t| !(t % &p).is_zero()))
    }

    /// `dim: rank [torsion...]` lines, top degree last.
    pub fn to_text(&self) -> String {
        self.groups
            .iter()
            .enumerate()
            .map(|(k, g)| format!("{}: {g}\n", k as isize + self.low))
            .collect()
    }
}

pub fn homology_of(c: &ChainComplex) -> HomologyProfile {
    let forms: Vec<_> = (c.low()..=c.top())
        .map(|d| smith_form(c.boundary(d).expect("degree in range")))
        .collect();
    let mut groups = Vec::new();
    for (k, d) in (c.low()..=c.top()).enumerate() {
        let out = forms[k].rank;
        let incoming = forms.get(k + 1);
        let rank = c.rank(d) - out - incoming.map_or(0, |f| f.rank);
        groups.push(HomologyGroup {
            rank,
            torsion: incoming.map_or_else(Vec::new, |f| f.torsion.clone()),
        });
    }
    HomologyProfile {
        reduced: c.is_reduced(),
        low: c.low(),
        groups,
    }
}

/// Reduced integral homology.
pub fn homology(k: &SimplicialComplex, limits: &Limits) -> Result<HomologyProfile> {
    let c = ChainComplex::new(k, true, limits)?;
    let h = homology_of(&c);
    assert_eq!(
        h.euler(),
        k.reduced_euler(),
        "Euler characteristic disagrees with the Betti numbers"
    );
    Ok(h)
}

pub fn reduced_euler(k: &SimplicialComplex) -> i64 {
    k.reduced_euler()
}
