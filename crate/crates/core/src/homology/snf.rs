//! Rank and invariant factors of sparse integer matrices.
//!
//! Unit pivots are eliminated sparsely in `i128` with checked arithmetic.
//! Whatever is left (no unit entries, or an overflow) is finished by a dense
//! Smith normal form over `BigInt`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A sparse integer matrix stored by columns; each column holds
/// `(row, value)` pairs with distinct rows and nonzero values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseMatrix {
    pub rows: usize,
    pub cols: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(rows: usize, cols: Vec<Vec<(u32, i64)>>) -> Self {
        SparseMatrix { rows, cols }
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; self.cols.len()]; self.rows];
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                m[i as usize][j] = v;
            }
        }
        m
    }

    /// `self · other`, or `None` on overflow.
    pub fn mul(&self, other: &SparseMatrix) -> Option<SparseMatrix> {
        assert_eq!(self.cols.len(), other.rows, "inner dimensions differ");
        let mut out = Vec::with_capacity(other.cols.len());
        let mut acc: Vec<i64> = vec![0; self.rows];
        for col in &other.cols {
            let mut touched = Vec::new();
            for &(k, b) in col {
                for &(i, a) in &self.cols[k as usize] {
                    let slot = &mut acc[i as usize];
                    if *slot == 0 {
                        touched.push(i);
                    }
                    *slot = slot.checked_add(a.checked_mul(b)?)?;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            let mut c = Vec::new();
            for i in touched {
                let v = std::mem::take(&mut acc[i as usize]);
                if v != 0 {
                    c.push((i, v));
                }
            }
            out.push(c);
        }
        Some(SparseMatrix::new(self.rows, out))
    }
}

/// Rank and the invariant factors greater than one, ascending, each dividing
/// the next.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SmithForm {
    pub rank: usize,
    pub torsion: Vec<BigUint>,
}

pub fn smith_form(m: &SparseMatrix) -> SmithForm {
    // Work row-wise: rows[i] is sorted by column.
    let mut rows: Vec<Vec<(u32, i128)>> = vec![Vec::new(); m.rows];
    for (j, col) in m.cols.iter().enumerate() {
        for &(i, v) in col {
            rows[i as usize].push((j as u32, i128::from(v)));
        }
    }
    let mut col_rows: Vec<Vec<u32>> = vec![Vec::new(); m.cols.len()];
    for (i, row) in rows.iter().enumerate() {
        for &(j, _) in row {
            col_rows[j as usize].push(i as u32);
        }
    }
    let mut rank = 0usize;
    let mut alive = vec![true; m.rows];
    let mut overflow = false;
    let mut progress = true;
    while progress && !overflow {
        progress = false;
        for r in 0..m.rows {
            if !alive[r] || rows[r].is_empty() {
                continue;
            }
            let Some(&(c, u)) = rows[r]
                .iter()
                .filter(|(_, v)| v.abs() == 1)
                .min_by_key(|(j, _)| (col_rows[*j as usize].len(), *j))
            else {
                continue;
            };
            let pivot_row = std::mem::take(&mut rows[r]);
            alive[r] = false;
            let others = std::mem::take(&mut col_rows[c as usize]);
            for &o in &others {
                let o = o as usize;
                if o == r || !alive[o] {
                    continue;
                }
                let Ok(pos) = rows[o].binary_search_by_key(&c, |e| e.0) else {
                    continue;
                };
                let factor = rows[o][pos].1 * u;
                match axpy(&rows[o], &pivot_row, factor) {
                    Some((merged, fresh)) => {
                        rows[o] = merged;
                        for j in fresh {
                            col_rows[j as usize].push(o as u32);
                        }
                    }
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
            if overflow {
                // Put the pivot back untouched; the dense pass redoes it.
                rows[r] = pivot_row;
                alive[r] = true;
                col_rows[c as usize] = others;
                break;
            }
            rank += 1;
            progress = true;
        }
    }
    let rest: Vec<Vec<(u32, i128)>> = rows
        .into_iter()
        .zip(&alive)
        .filter(|(row, &a)| a && !row.is_empty())
        .map(|(row, _)| row)
        .collect();
    if rest.is_empty() {
        return SmithForm {
            rank,
            torsion: Vec::new(),
        };
    }
    let mut used: Vec<u32> = rest.iter().flat_map(|r| r.iter().map(|e| e.0)).collect();
    used.sort_unstable();
    used.dedup();
    let mut dense = vec![vec![BigInt::zero(); used.len()]; rest.len()];
    for (i, row) in rest.iter().enumerate() {
        for &(j, v) in row {
            let k = used.binary_search(&j).expect("column collected above");
            dense[i][k] = BigInt::from(v);
        }
    }
    let diag = dense_smith(dense);
    rank += diag.len();
    let torsion = diag
        .into_iter()
        .map(|d| d.magnitude().clone())
        .filter(|d| !d.is_one())
        .collect();
    SmithForm { rank, torsion }
}

/// `a - factor·b` for sorted sparse rows, with the columns new to `a`.
fn axpy(a: &[(u32, i128)], b: &[(u32, i128)], factor: i128) -> Option<(Vec<(u32, i128)>, Vec<u32>)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut fresh = Vec::new();
    let (mut i, mut k) = (0, 0);
    while i < a.len() || k < b.len() {
        let ca = a.get(i).map_or(u32::MAX, |e| e.0);
        let cb = b.get(k).map_or(u32::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i]);
            i += 1;
        } else {
            let sub = factor.checked_mul(b[k].1)?;
            if ca == cb {
                let v = a[i].1.checked_sub(sub)?;
                if v != 0 {
                    out.push((ca, v));
                }
                i += 1;
            } else {
                out.push((cb, sub.checked_neg()?));
                fresh.push(cb);
            }
            k += 1;
        }
    }
    Some((out, fresh))
}

/// Nonzero diagonal of the Smith normal form, each dividing the next.
pub fn dense_smith(mut m: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut diag = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // Least nonzero magnitude in the trailing block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero() && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&m[t][t]);
                for j in t..cols {
                    let d = &q * &m[t][j];
                    m[i][j] -= d;
                }
                if !m[i][t].is_zero() {
                    clean = false;
                    if m[i][t].abs() < m[t][t].abs() {
                        m.swap(t, i);
                    }
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&m[t][t]);
                for row in m.iter_mut().skip(t) {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                if !m[t][j].is_zero() {
                    clean = false;
                    if m[t][j].abs() < m[t][t].abs() {
                        for row in m.iter_mut() {
                            row.swap(t, j);
                        }
                    }
                }
            }
            if !clean {
                continue;
            }
            // Divisibility of the rest by the pivot.
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !m[i][j].is_multiple_of(&m[t][t])));
            match bad {
                Some(i) => {
                    for j in t..cols {
                        let v = m[i][j].clone();
                        m[t][j] += v;
                    }
                }
                None => break,
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    fn from_dense(m: &[&[i64]]) -> SparseMatrix {
        let rows = m.len();
        let cols = m.first().map_or(0, |r| r.len());
        let cols = (0..cols)
            .map(|j| {
                (0..rows)
                    .filter(|&i| m[i][j] != 0)
                    .map(|i| (i as u32, m[i][j]))
                    .collect()
            })
            .collect();
        SparseMatrix::new(rows, cols)
    }

    #[test]
    fn small_forms() {
        let f = smith_form(&from_dense(&[&[2, 4, 4], &[-6, 6, 12], &[10, -4, -16]]));
        assert_eq!(f.rank, 3);
        assert_eq!(
            f.torsion,
            [BigUint::from(2u32), BigUint::from(6u32), BigUint::from(12u32)]
        );
        let f = smith_form(&from_dense(&[&[1, 1], &[1, 1]]));
        assert_eq!((f.rank, f.torsion.len()), (1, 0));
        let f = smith_form(&from_dense(&[&[2, 0], &[0, 3]]));
        assert_eq!(f.torsion, [BigUint::from(6u32)]);
        assert_eq!(smith_form(&SparseMatrix::new(3, vec![vec![]; 2])).rank, 0);
    }

    #[test]
    fn product() {
        let a = from_dense(&[&[1, 2], &[0, 1]]);
        let b = from_dense(&[&[1, -2], &[0, 1]]);
        assert_eq!(a.mul(&b).unwrap().to_dense(), [[1, 0], [0, 1]]);
    }
}
