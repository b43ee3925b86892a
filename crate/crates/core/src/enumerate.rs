//! Isomorph-free generation of all graphs of a given order.
//!
//! Canonical augmentation by vertex extension: every canonical graph of order
//! `n - 1` is extended by one new vertex in all `2^(n-1)` ways, and a child is
//! kept when the new vertex lies in the orbit of the child's canonical "last"
//! vertex. That vertex is, among the vertices with the largest cheap
//! invariant, the one with the largest canonical label. Isomorphic children
//! of one parent are merged by canonical form; children of different parents
//! are never isomorphic.
//!
//! Emitted graphs are in canonical form. Emission order is deterministic:
//! parents in their own emission order, then neighbourhood masks ascending.

use std::collections::HashSet;
use std::ops::ControlFlow;
use std::sync::{Arc, Mutex, OnceLock};

use rayon::prelude::*;

use crate::canon::{canonical_labelling, orbits, rooted_key};
use crate::embed::find_induced;
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

/// Largest order accepted by [`generate`].
pub const MAX_GEN_ORDER: usize = 10;

/// Largest order whose full list is kept in memory by [`all_graphs`].
pub const CACHE_MAX_ORDER: usize = 9;

const CHUNK: usize = 512;

/// Predicates that remove graphs from a generation run.
#[derive(Clone, Debug, Default)]
pub struct GenFilter {
    pub connected_only: bool,
    pub min_edges: Option<usize>,
    pub max_edges: Option<usize>,
    /// Every pattern must occur as an induced subgraph.
    pub must_contain_induced: Vec<Graph>,
}

impl GenFilter {
    pub fn connected() -> Self {
        GenFilter { connected_only: true, ..Default::default() }
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        let m = g.edge_count();
        self.min_edges.is_none_or(|lo| m >= lo)
            && self.max_edges.is_none_or(|hi| m <= hi)
            && (!self.connected_only || g.is_connected())
            && self.must_contain_induced.iter().all(|p| find_induced(g, p).is_some())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_GEN_ORDER {
        return Err(Error::OrderOutOfRange(n, MAX_GEN_ORDER));
    }
    Ok(())
}

/// Streams one representative per isomorphism class of order-`n` graphs
/// passing `filter`. The consumer may stop the run early.
pub fn generate<F>(n: usize, filter: &GenFilter, mut consumer: F) -> Result<()>
where
    F: FnMut(&Graph) -> ControlFlow<()>,
{
    check_order(n)?;
    let feed = |batch: Vec<Graph>, consumer: &mut F| -> ControlFlow<()> {
        for g in &batch {
            assert!(filter.accepts(g));
            consumer(g)?;
        }
        ControlFlow::Continue(())
    };
    if n <= CACHE_MAX_ORDER {
        let all = all_graphs(n)?;
        for chunk in all.chunks(CHUNK * 16) {
            let batch: Vec<Graph> = chunk.par_iter().filter(|g| filter.accepts(g)).cloned().collect();
            if feed(batch, &mut consumer).is_break() {
                break;
            }
        }
        return Ok(());
    }
    let parents = all_graphs(n - 1)?;
    for chunk in parents.chunks(CHUNK) {
        let batch: Vec<Graph> = chunk
            .par_iter()
            .flat_map_iter(|p| children(p).into_iter().filter(|g| filter.accepts(g)))
            .collect();
        if feed(batch, &mut consumer).is_break() {
            break;
        }
    }
    Ok(())
}

pub fn count(n: usize, filter: &GenFilter) -> Result<usize> {
    let mut total = 0;
    generate(n, filter, |_| {
        total += 1;
        ControlFlow::Continue(())
    })?;
    Ok(total)
}

/// Collects a generation run into a vector.
pub fn collect(n: usize, filter: &GenFilter) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    generate(n, filter, |g| {
        out.push(g.clone());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// All graphs of order `n` (unfiltered), computed once per process.
pub fn all_graphs(n: usize) -> Result<Arc<Vec<Graph>>> {
    check_order(n)?;
    if n > CACHE_MAX_ORDER {
        return Err(Error::OrderOutOfRange(n, CACHE_MAX_ORDER));
    }
    type Level = Option<Arc<Vec<Graph>>>;
    static CACHE: OnceLock<Mutex<Vec<Level>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(vec![None; CACHE_MAX_ORDER + 1]));
    if let Some(level) = cache.lock().expect("cache lock")[n].clone() {
        return Ok(level);
    }
    let level = if n == 1 {
        vec![Graph::new(1)]
    } else {
        let parents = all_graphs(n - 1)?;
        parents.par_iter().flat_map_iter(children).collect()
    };
    let level = Arc::new(level);
    let mut guard = cache.lock().expect("cache lock");
    Ok(guard[n].get_or_insert(level).clone())
}

/// Accepted one-vertex extensions of a canonical parent, in canonical form.
pub fn children(parent: &Graph) -> Vec<Graph> {
    let n = parent.order();
    let v = n;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for nbrs in 0..1u64 << n {
        let mut child = parent.clone();
        child.push_vertex(nbrs);
        let inv: Vec<(usize, usize, usize)> = (0..=n).map(|x| invariant(&child, x)).collect();
        let top = *inv.iter().max().expect("non-empty");
        if inv[v] != top {
            continue;
        }
        let lab = canonical_labelling(&child);
        let w = (0..=n)
            .filter(|&x| inv[x] == top)
            .max_by_key(|&x| lab.label[x])
            .expect("v is a candidate");
        let accept = w == v || {
            let orb = orbits(n + 1, &lab.automorphisms);
            orb[v] == orb[w] || rooted_key(&child, v) == rooted_key(&child, w)
        };
        if accept {
            let form = lab.form(&child);
            if seen.insert(form.clone()) {
                out.push(form);
            }
        }
    }
    out
}

/// Degree, sum of neighbour degrees, edges among the neighbours.
fn invariant(g: &Graph, x: usize) -> (usize, usize, usize) {
    let nb = g.neighbors(x);
    let sum = Bits(nb).map(|u| g.degree(u)).sum();
    (g.degree(x), sum, g.edges_within(nb))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_key;

    #[test]
    fn small_counts() {
        let none = GenFilter::default();
        assert_eq!(count(1, &none).unwrap(), 1);
        assert_eq!(count(2, &none).unwrap(), 2);
        assert_eq!(count(3, &none).unwrap(), 4);
        assert_eq!(count(4, &none).unwrap(), 11);
        assert_eq!(count(4, &GenFilter::connected()).unwrap(), 6);
    }

    #[test]
    fn order_range() {
        assert!(matches!(count(0, &GenFilter::default()), Err(Error::OrderOutOfRange(0, _))));
        assert!(count(MAX_GEN_ORDER + 1, &GenFilter::default()).is_err());
    }

    #[test]
    fn early_stop() {
        let mut seen = 0;
        generate(5, &GenFilter::default(), |_| {
            seen += 1;
            if seen == 3 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })
        .unwrap();
        assert_eq!(seen, 3);
    }

    #[test]
    fn emitted_graphs_are_canonical() {
        for g in all_graphs(5).unwrap().iter() {
            assert_eq!(canonical_key(g).as_graph6(), crate::graph6::encode(g));
        }
    }
}
