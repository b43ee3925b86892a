//! Dense simple graphs on at most [`MAX_ORDER`] vertices.
//!
//! Vertices are the integers `0..order`. Each vertex carries its
//! neighbourhood as a `u64` bitset, so adjacency tests, neighbourhood
//! intersections and induced-subgraph extraction are single word operations.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order representable (the one-byte graph6 size form).
pub const MAX_ORDER: usize = 62;

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates the set bits of a mask in increasing order.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_ORDER`].
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds the supported maximum {MAX_ORDER}");
        Graph { adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!("edge ({u},{v}) outside 0..{n}")));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from neighbourhood bitsets, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        for (v, &row) in adj.iter().enumerate() {
            if row & !low_bits(n) != 0 {
                return Err(Error::InvalidGraph(format!("vertex {v} has neighbours outside 0..{n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!("self-loop at {v}")));
            }
            for u in Bits(row) {
                if adj[u] >> v & 1 == 0 {
                    return Err(Error::InvalidGraph(format!("asymmetric adjacency at ({v},{u})")));
                }
            }
        }
        Ok(Graph { adj })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.order())
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    /// Neighbourhood of `v` as a bitset.
    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, &row)| Bits(row & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    /// Number of edges with both endpoints in `mask`.
    pub fn edges_within(&self, mask: u64) -> usize {
        Bits(mask)
            .map(|v| (self.adj[v] & mask).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_mask();
        Graph {
            adj: self
                .adj
                .iter()
                .enumerate()
                .map(|(v, &row)| !row & full & !(1 << v))
                .collect(),
        }
    }

    /// The subgraph induced by the vertices of `mask`, relabelled in increasing order.
    pub fn induced(&self, mask: u64) -> Graph {
        let verts: Vec<usize> = Bits(mask & self.vertex_mask()).collect();
        self.induced_by(&verts)
    }

    /// The subgraph induced by `verts`; vertex `i` of the result is `verts[i]`.
    pub fn induced_by(&self, verts: &[usize]) -> Graph {
        let mut g = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut adj = vec![0u64; self.order()];
        for (v, &row) in self.adj.iter().enumerate() {
            adj[perm[v]] = Bits(row).fold(0, |acc, u| acc | 1 << perm[u]);
        }
        Graph { adj }
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.order();
        assert!(
            shift + other.order() <= MAX_ORDER,
            "union of order {} exceeds the supported maximum",
            shift + other.order()
        );
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << shift));
        Graph { adj }
    }

    /// `copies` vertex-disjoint copies of `self`.
    pub fn copies(&self, copies: usize) -> Graph {
        (0..copies).fold(Graph::new(0), |acc, _| acc.disjoint_union(self))
    }

    /// Adds a new vertex adjacent to the vertices of `nbrs`; returns its index.
    pub fn push_vertex(&mut self, nbrs: u64) -> usize {
        let v = self.order();
        assert!(v < MAX_ORDER);
        debug_assert_eq!(nbrs & !low_bits(v), 0);
        for u in Bits(nbrs) {
            self.adj[u] |= 1 << v;
        }
        self.adj.push(nbrs);
        v
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u64> {
        let mut left = self.vertex_mask();
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn isolated_vertices(&self) -> usize {
        self.adj.iter().filter(|&&r| r == 0).count()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; ", self.order())?;
        let mut first = true;
        for (u, v) in self.edges() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{u}-{v}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_order_is_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 3), (0, 1), (1, 2)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.edge_count(), 4);
    }

    #[test]
    fn rejects_bad_adjacency() {
        assert!(Graph::from_adjacency(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_adjacency(vec![0b01]).is_err());
        assert!(Graph::from_edges(2, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn components_of_union() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let g = p3.copies(2);
        assert_eq!(g.components(), vec![0b000111, 0b111000]);
        assert!(!g.is_connected());
        assert!(Graph::new(0).is_connected());
    }

    #[test]
    fn complement_and_induced() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 3);
        assert!(c.has_edge(0, 2) && c.has_edge(0, 3) && c.has_edge(1, 3));
        let h = g.induced(0b1011);
        assert_eq!(h.order(), 3);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(g.edges_within(0b0111), 2);
    }
}
