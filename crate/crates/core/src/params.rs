//! Independence number, clique number and components.

use serde::Serialize;

use crate::graph::{Bits, Graph};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Parameters {
    pub independence_number: usize,
    pub clique_number: usize,
    pub is_connected: bool,
    /// Components as vertex masks, ordered by smallest vertex.
    pub components: Vec<u64>,
}

pub fn parameters(g: &Graph) -> Parameters {
    let components = g.components();
    Parameters {
        independence_number: independence_number(g),
        clique_number: clique_number(g),
        is_connected: components.len() <= 1,
        components,
    }
}

/// Size of a largest independent set (branch and bound on bitsets).
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    grow(g, 0, g.vertex_mask(), &mut best);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    independence_number(&g.complement())
}

/// A largest independent set as a mask.
pub fn max_independent_set(g: &Graph) -> u64 {
    let mut best = (0usize, 0u64);
    grow_set(g, 0, g.vertex_mask(), &mut best);
    best.1
}

fn grow(g: &Graph, size: usize, cand: u64, best: &mut usize) {
    if cand == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    // branch on a vertex of maximum degree inside the candidates
    let v = Bits(cand)
        .max_by_key(|&v| (g.neighbors(v) & cand).count_ones())
        .expect("cand non-empty");
    if g.neighbors(v) & cand == 0 {
        // cand is independent
        *best = (*best).max(size + cand.count_ones() as usize);
        return;
    }
    grow(g, size + 1, cand & !g.neighbors(v) & !(1 << v), best);
    grow(g, size, cand & !(1 << v), best);
}

fn grow_set(g: &Graph, set: u64, cand: u64, best: &mut (usize, u64)) {
    let size = set.count_ones() as usize;
    let Some(v) = Bits(cand).max_by_key(|&v| (g.neighbors(v) & cand).count_ones()) else {
        if size > best.0 {
            *best = (size, set);
        }
        return;
    };
    if size + cand.count_ones() as usize <= best.0 {
        return;
    }
    grow_set(g, set | 1 << v, cand & !g.neighbors(v) & !(1 << v), best);
    grow_set(g, set, cand & !(1 << v), best);
}
