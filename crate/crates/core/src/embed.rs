//! Induced (and plain) subgraph embeddings by backtracking over bitset
//! candidate sets.
//!
//! Pattern vertices are placed component by component. Every placed vertex
//! narrows the candidates of later vertices to its host neighbourhood or, for
//! induced embeddings, its host non-neighbourhood. Isomorphic components are
//! placed with increasing minimum image, which keeps `sG` patterns from
//! enumerating the `s!` reorderings of the same vertex set.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::canon::canonical_key;
use crate::coloring::{Color, EdgeColoring, EdgeIndex};
use crate::graph::{low_bits, Bits, Graph};

/// Injective map from pattern vertices to host vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image_mask(&self) -> u64 {
        self.map.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Injective, and pattern edges and non-edges go to host edges and non-edges.
    pub fn is_induced(&self, host: &Graph, pattern: &Graph) -> bool {
        self.is_valid(pattern, host.adjacency(), Some(host.adjacency()))
    }

    fn is_valid(&self, pattern: &Graph, edge_adj: &[u64], full_adj: Option<&[u64]>) -> bool {
        let n = pattern.order();
        if self.map.len() != n || self.image_mask().count_ones() as usize != n {
            return false;
        }
        for u in 0..n {
            for v in u + 1..n {
                let (a, b) = (self.map[u], self.map[v]);
                if pattern.has_edge(u, v) {
                    if edge_adj[a] >> b & 1 == 0 {
                        return false;
                    }
                } else if let Some(full) = full_adj {
                    if full[a] >> b & 1 == 1 {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Induced,
    Subgraph,
}

struct Matcher<'a> {
    /// Host adjacency that pattern edges must use.
    edge_adj: &'a [u64],
    /// Host adjacency that pattern non-edges must avoid (induced mode only).
    full_adj: Option<&'a [u64]>,
    /// Pattern vertex placed at each position.
    order: Vec<usize>,
    /// Per position: earlier positions adjacent / non-adjacent in the pattern.
    back_adj: Vec<u64>,
    back_non: Vec<u64>,
    /// Per position: host vertices passing the degree filters.
    eligible: Vec<u64>,
    /// Per position: positions of the previous isomorphic component.
    after: Vec<Option<(usize, usize)>>,
}

impl<'a> Matcher<'a> {
    fn new(
        host_order: usize,
        pattern: &Graph,
        edge_adj: &'a [u64],
        full_adj: Option<&'a [u64]>,
        break_symmetry: bool,
    ) -> Self {
        let mode = if full_adj.is_some() { Mode::Induced } else { Mode::Subgraph };
        let (order, comp_ranges, same_as_prev) = placement_order(pattern);
        let n = order.len();
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let mut back_adj = vec![0u64; n];
        let mut back_non = vec![0u64; n];
        for i in 0..n {
            for j in 0..i {
                if pattern.has_edge(order[i], order[j]) {
                    back_adj[i] |= 1 << j;
                } else {
                    back_non[i] |= 1 << j;
                }
            }
        }
        let host_mask = low_bits(host_order);
        let eligible = order
            .iter()
            .map(|&p| {
                let deg = pattern.degree(p) as u32;
                let non = (n - 1 - pattern.degree(p)) as u32;
                Bits(host_mask).fold(0u64, |m, h| {
                    let ok_deg = edge_adj[h].count_ones() >= deg;
                    let ok_non = match (mode, full_adj) {
                        (Mode::Induced, Some(full)) => (host_order as u32 - 1 - full[h].count_ones()) >= non,
                        _ => true,
                    };
                    if ok_deg && ok_non {
                        m | 1 << h
                    } else {
                        m
                    }
                })
            })
            .collect();
        let mut after = vec![None; n];
        if break_symmetry {
            for (k, &(start, end)) in comp_ranges.iter().enumerate() {
                if k > 0 && same_as_prev[k] {
                    let prev = comp_ranges[k - 1];
                    for slot in after.iter_mut().take(end).skip(start) {
                        *slot = Some(prev);
                    }
                }
            }
        }
        Matcher { edge_adj, full_adj, order, back_adj, back_non, eligible, after }
    }

    fn run<F>(&self, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let n = self.order.len();
        let mut images = vec![0usize; n];
        let mut map = vec![0usize; n];
        self.place(0, 0, &mut images, &mut map, visit)
    }

    fn place<F>(
        &self,
        i: usize,
        used: u64,
        images: &mut [usize],
        map: &mut [usize],
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if i == self.order.len() {
            for (k, &p) in self.order.iter().enumerate() {
                map[p] = images[k];
            }
            return visit(map);
        }
        let mut cand = self.eligible[i] & !used;
        for j in Bits(self.back_adj[i]) {
            cand &= self.edge_adj[images[j]];
        }
        if let Some(full) = self.full_adj {
            for j in Bits(self.back_non[i]) {
                cand &= !full[images[j]];
            }
        }
        if let Some((a, b)) = self.after[i] {
            let floor = images[a..b].iter().min().copied().expect("non-empty component");
            cand &= !low_bits(floor + 1);
        }
        for h in Bits(cand) {
            images[i] = h;
            self.place(i + 1, used | 1 << h, images, map, visit)?;
        }
        ControlFlow::Continue(())
    }
}

/// Placement order: components grouped so isomorphic ones are adjacent, each
/// component visited from a maximum-degree vertex, preferring vertices with
/// the most already-placed neighbours. Returns the order, the position range
/// of each component, and whether each component is isomorphic to the one before.
fn placement_order(pattern: &Graph) -> (Vec<usize>, Vec<(usize, usize)>, Vec<bool>) {
    let mut comps: Vec<(u64, crate::canon::CanonicalKey)> = pattern
        .components()
        .into_iter()
        .map(|m| (m, canonical_key(&pattern.induced(m))))
        .collect();
    comps.sort_by(|a, b| {
        b.0.count_ones()
            .cmp(&a.0.count_ones())
            .then_with(|| a.1.cmp(&b.1))
            .then_with(|| a.0.trailing_zeros().cmp(&b.0.trailing_zeros()))
    });
    let mut order = Vec::with_capacity(pattern.order());
    let mut ranges = Vec::with_capacity(comps.len());
    let mut same = Vec::with_capacity(comps.len());
    for (k, (mask, key)) in comps.iter().enumerate() {
        same.push(k > 0 && comps[k - 1].1 == *key);
        let start = order.len();
        let mut placed = 0u64;
        let mut left = *mask;
        while left != 0 {
            let v = Bits(left)
                .max_by_key(|&v| {
                    (
                        (pattern.neighbors(v) & placed).count_ones(),
                        pattern.degree(v),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("left non-empty");
            order.push(v);
            placed |= 1 << v;
            left &= !(1 << v);
        }
        ranges.push((start, order.len()));
    }
    (order, ranges, same)
}

fn first_match(
    host_order: usize,
    pattern: &Graph,
    edge_adj: &[u64],
    full_adj: Option<&[u64]>,
) -> Option<Embedding> {
    if pattern.order() > host_order {
        return None;
    }
    let m = Matcher::new(host_order, pattern, edge_adj, full_adj, true);
    let mut found = None;
    let _ = m.run(&mut |map: &[usize]| {
        found = Some(Embedding { map: map.to_vec() });
        ControlFlow::Break(())
    });
    if let Some(e) = &found {
        assert!(e.is_valid(pattern, edge_adj, full_adj), "matcher returned an invalid embedding");
    }
    found
}

/// Some induced embedding of `pattern` into `host`, if one exists.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    first_match(host.order(), pattern, host.adjacency(), Some(host.adjacency()))
}

/// Some (not necessarily induced) subgraph embedding.
pub fn find_subgraph(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    first_match(host.order(), pattern, host.adjacency(), None)
}

/// An induced copy of `pattern` in `host` whose host edges all have colour `color`.
pub fn find_mono_induced(
    host: &Graph,
    coloring: &EdgeColoring,
    color: Color,
    pattern: &Graph,
) -> Option<Embedding> {
    let colored = coloring.color_adjacency(host, color);
    first_match(host.order(), pattern, &colored, Some(host.adjacency()))
}

/// A copy of `pattern` as a subgraph of the colour-`color` edges (not necessarily induced).
pub fn find_mono_subgraph(
    host: &Graph,
    coloring: &EdgeColoring,
    color: Color,
    pattern: &Graph,
) -> Option<Embedding> {
    let colored = coloring.color_adjacency(host, color);
    first_match(host.order(), pattern, &colored, None)
}

/// Visits every induced embedding (every injective map, no deduplication).
pub fn enumerate_induced<F>(host: &Graph, pattern: &Graph, mut visit: F)
where
    F: FnMut(&Embedding) -> ControlFlow<()>,
{
    if pattern.order() > host.order() {
        return;
    }
    let m = Matcher::new(host.order(), pattern, host.adjacency(), Some(host.adjacency()), false);
    let _ = m.run(&mut |map: &[usize]| visit(&Embedding { map: map.to_vec() }));
}

/// Distinct vertex sets of induced copies of `pattern`, sorted.
pub fn induced_copies(host: &Graph, pattern: &Graph) -> Vec<u64> {
    if pattern.order() > host.order() {
        return Vec::new();
    }
    let m = Matcher::new(host.order(), pattern, host.adjacency(), Some(host.adjacency()), true);
    let mut seen = HashSet::new();
    let _ = m.run(&mut |map: &[usize]| {
        seen.insert(map.iter().fold(0u64, |s, &v| s | 1 << v));
        ControlFlow::Continue(())
    });
    let mut out: Vec<u64> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

/// Distinct host edge sets (as sorted edge indices) of subgraph copies of `pattern`, sorted.
pub fn subgraph_copies(host: &Graph, pattern: &Graph) -> Vec<Vec<u32>> {
    if pattern.order() > host.order() {
        return Vec::new();
    }
    let index = EdgeIndex::new(host);
    let pattern_edges: Vec<(usize, usize)> = pattern.edges().collect();
    let m = Matcher::new(host.order(), pattern, host.adjacency(), None, true);
    let mut seen = HashSet::new();
    let _ = m.run(&mut |map: &[usize]| {
        let mut es: Vec<u32> = pattern_edges
            .iter()
            .map(|&(u, v)| index.get(map[u], map[v]).expect("pattern edge maps to host edge") as u32)
            .collect();
        es.sort_unstable();
        seen.insert(es);
        ControlFlow::Continue(())
    });
    let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{complete, cycle, graph, path};

    fn count_maps(host: &Graph, pattern: &Graph) -> usize {
        let mut n = 0;
        enumerate_induced(host, pattern, |e| {
            assert!(e.is_induced(host, pattern));
            n += 1;
            ControlFlow::Continue(())
        });
        n
    }

    #[test]
    fn k3_has_no_induced_p3() {
        assert!(find_induced(&complete(3), &path(3)).is_none());
        assert!(find_subgraph(&complete(3), &path(3)).is_some());
    }

    #[test]
    fn p5_in_c7() {
        let e = find_induced(&cycle(7), &path(5)).unwrap();
        assert!(e.is_induced(&cycle(7), &path(5)));
    }

    #[test]
    fn two_triangles_induced_vs_weak() {
        let two_k3 = graph("2K3").unwrap();
        assert!(find_induced(&complete(8), &two_k3).is_none());
        assert!(find_subgraph(&complete(8), &two_k3).is_some());
        assert!(find_induced(&graph("2K6").unwrap(), &two_k3).is_some());
    }

    #[test]
    fn counts() {
        assert_eq!(count_maps(&cycle(5), &path(3)), 10);
        assert_eq!(induced_copies(&cycle(5), &path(3)).len(), 5);
        assert_eq!(count_maps(&complete(4), &complete(2)), 12);
        assert_eq!(induced_copies(&complete(4), &complete(2)).len(), 6);
        let h = graph("3P3").unwrap();
        assert_eq!(count_maps(&h, &path(3)), 6);
        assert_eq!(induced_copies(&h, &path(3)).len(), 3);
    }

    #[test]
    fn disjoint_triangle_and_matching_has_no_induced_2p3() {
        let g = graph("K3+2K2").unwrap();
        assert_eq!(g.order(), 7);
        assert!(find_induced(&g, &graph("2P3").unwrap()).is_none());
    }

    #[test]
    fn mono_copies() {
        let k3 = complete(3);
        let red = EdgeColoring::uniform(&k3, Color::Red);
        assert!(find_mono_induced(&k3, &red, Color::Red, &k3).is_some());
        assert!(find_mono_induced(&k3, &red, Color::Blue, &k3).is_none());

        let c7 = cycle(7);
        let c = EdgeColoring::with_set(&c7, Color::Blue, [(0, 1), (3, 4)]);
        let e = find_mono_induced(&c7, &c, Color::Blue, &graph("2K2").unwrap()).unwrap();
        assert_eq!(e.image_mask(), 0b11011);
    }

    #[test]
    fn symmetric_components_not_overcounted() {
        // 4 copies of K2 in 4K2: exactly one vertex set
        let h = graph("4K2").unwrap();
        assert_eq!(induced_copies(&h, &h).len(), 1);
        assert_eq!(subgraph_copies(&complete(6), &graph("2K3").unwrap()).len(), 10);
        assert_eq!(subgraph_copies(&complete(4), &path(3)).len(), 12);
    }

    #[test]
    fn empty_pattern_always_embeds() {
        assert_eq!(find_induced(&path(3), &Graph::new(0)).unwrap().map.len(), 0);
        assert!(find_induced(&path(2), &Graph::new(3)).is_none());
        assert!(find_induced(&path(3), &Graph::new(2)).is_some());
    }
}
