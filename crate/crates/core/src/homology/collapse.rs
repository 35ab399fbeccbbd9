use std::collections::VecDeque;

use crate::error::Result;
use crate::limits::Limits;
use crate::posetlab::SimplicialComplex;

#[derive(Debug, Clone)]
pub struct Collapse {
    /// What is left after no free face remains.
    pub remaining: SimplicialComplex,
    pub collapsed_to_point: bool,
    /// Elementary collapses performed.
    pub steps: usize,
}

/// Greedy elementary collapses: a simplex with exactly one coface, which is
/// maximal, is removed together with that coface. Candidates are processed
/// in a fixed order, so the result is deterministic.
pub fn collapse(k: &SimplicialComplex, limits: &Limits) -> Result<Collapse> {
    let dims = (k.dim() + 1) as usize;
    // Global ids: offset[d] + index within dimension d.
    let mut offset = vec![0usize; dims + 1];
    for d in 0..dims {
        offset[d + 1] = offset[d] + k.simplices(d).len();
    }
    let total = offset[dims];
    if total > limits.max_simplices {
        return Err(crate::Error::resource(
            "max_simplices",
            limits.max_simplices as u64,
            total,
        ));
    }
    let dim_of = |id: usize| offset.partition_point(|&o| o <= id) - 1;
    let mut faces: Vec<Vec<u32>> = vec![Vec::new(); total];
    let mut cofaces: Vec<Vec<u32>> = vec![Vec::new(); total];
    for d in 1..dims {
        for (i, s) in k.simplices(d).iter().enumerate() {
            let id = offset[d] + i;
            for skip in 0..s.len() {
                let face: Vec<u32> = s
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip)
                    .map(|(_, &v)| v)
                    .collect();
                let f = offset[d - 1] + k.index_of(&face).expect("face-closed");
                faces[id].push(f as u32);
                cofaces[f].push(id as u32);
            }
        }
    }
    let mut alive = vec![true; total];
    let mut live_cofaces: Vec<u32> = cofaces.iter().map(|c| c.len() as u32).collect();
    let mut queue: VecDeque<usize> = (0..total).rev().collect();
    let mut steps = 0;
    while let Some(s) = queue.pop_front() {
        if !alive[s] || live_cofaces[s] != 1 {
            continue;
        }
        let t = cofaces[s]
            .iter()
            .map(|&c| c as usize)
            .find(|&c| alive[c])
            .expect("one live coface");
        if live_cofaces[t] != 0 {
            continue;
        }
        alive[s] = false;
        alive[t] = false;
        steps += 1;
        for &f in faces[t].iter().chain(&faces[s]) {
            let f = f as usize;
            live_cofaces[f] -= 1;
            if alive[f] {
                queue.push_back(f);
            }
        }
    }
    let mut levels: Vec<Vec<Box<[u32]>>> = Vec::new();
    for (id, _) in alive.iter().enumerate().filter(|(_, &a)| a) {
        let d = dim_of(id);
        while levels.len() <= d {
            levels.push(Vec::new());
        }
        levels[d].push(k.simplices(d)[id - offset[d]].clone());
    }
    let remaining = SimplicialComplex::from_levels(k.vertex_count(), levels);
    let collapsed_to_point = remaining.simplex_count() == 1;
    Ok(Collapse {
        remaining,
        collapsed_to_point,
        steps,
    })
}
