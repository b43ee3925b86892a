//! Canonical labelling by partition refinement and individualisation.
//!
//! The search tree is the usual one: refine the ordered vertex partition to an
//! equitable one, pick the first smallest non-singleton cell, individualise each
//! of its vertices in turn and recurse. Every discrete leaf yields a labelling;
//! the canonical form is the relabelled graph with the lexicographically least
//! adjacency rows. Two leaves with equal certificates define an automorphism,
//! which is used twice: children that are images of an explored child under
//! automorphisms fixing the current prefix are skipped, and a leaf equivalent to
//! an earlier one lets the search jump back to their common ancestor.

use std::cmp::Ordering;

use crate::graph::{Bits, Graph};
use crate::graph6;

/// Total-order key; equal keys iff isomorphic graphs. This is the graph6
/// encoding of the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalKey(pub Vec<u8>);

impl CanonicalKey {
    pub fn as_graph6(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

/// Result of a canonical labelling run.
#[derive(Clone, Debug)]
pub struct Labelling {
    /// `label[v]` is the canonical position of vertex `v`.
    pub label: Vec<usize>,
    /// Automorphisms discovered during the search, as vertex maps.
    pub automorphisms: Vec<Vec<usize>>,
}

impl Labelling {
    pub fn form(&self, g: &Graph) -> Graph {
        g.permuted(&self.label)
    }
}

pub fn canonical_labelling(g: &Graph) -> Labelling {
    canonical_labelling_coloured(g, None)
}

/// Canonical labelling respecting a vertex colouring: only colour-preserving
/// relabellings are considered, colour classes ordered by colour value.
pub fn canonical_labelling_coloured(g: &Graph, colours: Option<&[u32]>) -> Labelling {
    let n = g.order();
    let mut cells = match colours {
        None if n == 0 => Vec::new(),
        None => vec![g.vertex_mask()],
        Some(c) => {
            assert_eq!(c.len(), n);
            let mut vals: Vec<u32> = c.to_vec();
            vals.sort_unstable();
            vals.dedup();
            vals.iter()
                .map(|&x| (0..n).filter(|&v| c[v] == x).fold(0u64, |m, v| m | 1 << v))
                .collect()
        }
    };
    refine(g, &mut cells);
    let mut search = Search { g, best: None, first: None, autos: Vec::new() };
    let mut prefix = Vec::new();
    search.descend(&cells, &mut prefix);
    let best = search.best.expect("search visits at least one leaf");
    Labelling { label: best.label, automorphisms: search.autos }
}

pub fn canonical_form(g: &Graph) -> Graph {
    canonical_labelling(g).form(g)
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    CanonicalKey(graph6::encode(&canonical_form(g)).into_bytes())
}

/// Key of `g` with vertex `root` distinguished.
pub fn rooted_key(g: &Graph, root: usize) -> CanonicalKey {
    let mut colours = vec![0u32; g.order()];
    colours[root] = 1;
    let lab = canonical_labelling_coloured(g, Some(&colours));
    let mut bytes = graph6::encode(&lab.form(g)).into_bytes();
    bytes.push(b'#');
    bytes.extend(lab.label[root].to_string().bytes());
    CanonicalKey(bytes)
}

pub fn automorphism_generators(g: &Graph) -> Vec<Vec<usize>> {
    canonical_labelling(g).automorphisms
}

/// Vertex orbits of the group generated by `gens` (a union-find closure).
pub fn orbits(n: usize, gens: &[Vec<usize>]) -> Vec<usize> {
    let mut uf = UnionFind::new(n);
    for p in gens {
        for (v, &w) in p.iter().enumerate() {
            uf.union(v, w);
        }
    }
    (0..n).map(|v| uf.find(v)).collect()
}

/// Brings `cells` to the coarsest equitable refinement. Cells split in place,
/// sub-cells ordered by their neighbour count into the splitter.
fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut scratch: Vec<u64> = Vec::with_capacity(g.order());
    loop {
        let mut changed = false;
        let mut s = 0;
        while s < cells.len() {
            let splitter = cells[s];
            scratch.clear();
            for &cell in cells.iter() {
                if cell & (cell - 1) == 0 {
                    scratch.push(cell);
                    continue;
                }
                // bucket by |N(v) ∩ splitter|
                let mut buckets = [0u64; 64];
                let mut lo = 64usize;
                let mut hi = 0usize;
                for v in Bits(cell) {
                    let k = (g.neighbors(v) & splitter).count_ones() as usize;
                    buckets[k] |= 1 << v;
                    lo = lo.min(k);
                    hi = hi.max(k);
                }
                if lo == hi {
                    scratch.push(cell);
                } else {
                    changed = true;
                    scratch.extend(buckets[lo..=hi].iter().copied().filter(|&b| b != 0));
                }
            }
            std::mem::swap(cells, &mut scratch);
            s += 1;
        }
        if !changed {
            break;
        }
    }
}

struct Leaf {
    cert: Vec<u64>,
    label: Vec<usize>,
    path: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<Leaf>,
    first: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(depth)` to abandon everything below `depth`.
    fn descend(&mut self, cells: &[u64], prefix: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .map(|(i, _)| i);
        let Some(ti) = target else {
            return self.leaf(cells, prefix);
        };
        let depth = prefix.len();
        let mut explored: Vec<usize> = Vec::new();
        for v in Bits(cells[ti]) {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, prefix) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..ti]);
            child.push(1 << v);
            child.push(cells[ti] & !(1 << v));
            child.extend_from_slice(&cells[ti + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.descend(&child, prefix);
            prefix.pop();
            explored.push(v);
            if let Some(d) = jump {
                if d < depth {
                    return Some(d);
                }
            }
        }
        None
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], prefix: &[usize]) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .autos
            .iter()
            .filter(|p| prefix.iter().all(|&x| p[x] == x))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut uf = UnionFind::new(self.g.order());
        for p in fixing {
            for (a, &b) in p.iter().enumerate() {
                uf.union(a, b);
            }
        }
        let rv = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == rv)
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let mut label = vec![0usize; n];
        let mut inverse = vec![0usize; n];
        for (pos, &c) in cells.iter().enumerate() {
            let v = c.trailing_zeros() as usize;
            label[v] = pos;
            inverse[pos] = v;
        }
        let cert: Vec<u64> = inverse
            .iter()
            .map(|&v| Bits(self.g.neighbors(v)).fold(0u64, |m, u| m | 1 << label[u]))
            .collect();
        let leaf = Leaf { cert, label, path: prefix.to_vec() };

        let Some(first) = &self.first else {
            self.best = Some(Leaf { cert: leaf.cert.clone(), label: leaf.label.clone(), path: leaf.path.clone() });
            self.first = Some(leaf);
            return None;
        };
        if first.cert == leaf.cert {
            let auto = automorphism(&first.label, &inverse);
            let d = common_prefix(&first.path, &leaf.path);
            self.autos.push(auto);
            return Some(d);
        }
        let best = self.best.as_ref().expect("best set with first");
        match leaf.cert.cmp(&best.cert) {
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Equal => {
                let auto = automorphism(&best.label, &inverse);
                let d = common_prefix(&best.path, &leaf.path);
                self.autos.push(auto);
                Some(d)
            }
            Ordering::Greater => None,
        }
    }
}

/// Maps the vertex at each position of one leaf to the vertex at the same
/// position of the other.
fn automorphism(label_a: &[usize], inverse_b: &[usize]) -> Vec<usize> {
    label_a.iter().map(|&pos| inverse_b[pos]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent[hi] = lo;
        }
    }
}
